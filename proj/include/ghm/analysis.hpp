#pragma once

// One-call aggregation of everything the library computes about a group:
// validation, torsion, minimal denominator, extension class, isotypical
// decomposition, Hodge types, and an optional sample complex structure.

#include <optional>
#include <string>
#include <vector>

#include "ghm/cohomology.hpp"
#include "ghm/cryst.hpp"
#include "ghm/hodge.hpp"

namespace ghm {

struct AnalysisReport {
    CrystGroup group;
    std::vector<CocycleDefect> defects;        // empty for consistent input
    TorsionReport torsion;
    std::vector<bool> eigenvalue_one;          // per element, canonical order
    DenominatorReport denominator;
    ExtensionReport extension;
    IsotypicalDecomposition iso;
    std::optional<HodgeTypeList> hodge;        // present exactly when even
    std::optional<ComplexStructureSample> sample;
    std::vector<Int> sample_nu;                // type realized by the sample
    std::string sample_error;                  // non-empty when sampling failed
};

inline AnalysisReport analyze(const CrystGroup& g, bool with_sample = false) {
    AnalysisReport r{g,       g.validate(), g.torsion_status(), {},
                     g.minimal_denominator(), extension_report(g),
                     isotypical_decomposition(g.point_group()),
                     std::nullopt, std::nullopt, {}, {}};
    r.eigenvalue_one.reserve(g.point_group().size());
    for (std::size_t e = 0; e < g.point_group().size(); ++e)
        r.eigenvalue_one.push_back(g.eigenvalue_one(e));

    if (r.denominator.d != r.extension.order)
        throw std::logic_error("minimal denominator disagrees with the extension class order");

    if (r.iso.even) {
        r.hodge = enumerate_hodge_types(r.iso);
        if (with_sample) {
            r.sample_nu = r.hodge->types.front().nu;
            try {
                r.sample = sample_complex_structure(r.iso, r.sample_nu);
            } catch (const NoDecomposition& e) {
                r.sample_error = e.what();
            }
        }
    } else if (with_sample) {
        r.sample_error = "group is not even, no invariant complex structure exists";
    }
    return r;
}

}  // namespace ghm
