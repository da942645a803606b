#pragma once

// Built-in reference groups with their expected analysis results.  Each entry
// records the affine generators together with every invariant the analysis
// pipeline computes, so the whole stack can be cross-checked in one sweep.

#include <string>
#include <vector>

#include "ghm/cohomology.hpp"
#include "ghm/cryst.hpp"
#include "ghm/hodge.hpp"

namespace ghm {

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::size_t rank = 0;
    std::vector<AffineGenerator> generators;

    bool torsion_free = true;
    Int min_denominator;
    Int extension_order;
    bool splits = false;                 // over the standard lattice
    std::vector<Int> h2_invariants;      // invariant factors of H^2(G, lattice)
    bool even = true;
    Int type_count;                      // 0 when the group is not even
    std::vector<Int> component_dimensions;  // per Hodge type, enumeration order
};

namespace detail {

inline IntMatrix rotation_block(std::size_t n, const IntMatrix& block) {
    IntMatrix out = IntMatrix::identity(n);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            out.at(n - 2 + i, n - 2 + j) = block.at(i, j);
    return out;
}

inline RatVector shift(std::size_t n, const Rat& first) {
    RatVector v(n, Rat(0));
    v[0] = first;
    return v;
}

inline CatalogEntry torus_entry(std::size_t n) {
    CatalogEntry e;
    e.name = "torus-rank-" + std::to_string(n);
    e.summary = "free abelian group of rank " + std::to_string(n) + ", trivial point group";
    e.rank = n;
    e.generators = {{IntMatrix::identity(n), RatVector(n, Rat(0))}};
    e.torsion_free = true;
    e.min_denominator = 1;
    e.extension_order = 1;
    e.splits = true;
    e.even = true;
    e.type_count = 1;
    Int half(n / 2);
    e.component_dimensions = {half * half};
    return e;
}

inline CatalogEntry turn_shift_entry(const std::string& name, long long order,
                                     const IntMatrix& block) {
    CatalogEntry e;
    e.name = name;
    e.summary = "order " + std::to_string(order) +
                " rotation on the last two coordinates, shift 1/" + std::to_string(order) +
                " along the first";
    e.rank = 4;
    e.generators = {{rotation_block(4, block), shift(4, Rat(1, order))}};
    e.torsion_free = true;
    e.min_denominator = order;
    e.extension_order = order;
    e.splits = false;
    e.h2_invariants = {Int(order), Int(order)};
    e.even = true;
    e.type_count = 2;
    e.component_dimensions = {Int(1), Int(1)};
    return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> out;
        out.push_back(detail::torus_entry(2));
        out.push_back(detail::torus_entry(4));
        out.push_back(detail::torus_entry(6));

        CatalogEntry half;
        half.name = "half-shift-involution";
        half.summary = "involution fixing a plane, shift 1/2 along a fixed direction";
        half.rank = 4;
        half.generators = {{IntMatrix::of({{1, 0, 0, 0},
                                           {0, 1, 0, 0},
                                           {0, 0, -1, 0},
                                           {0, 0, 0, -1}}),
                            detail::shift(4, Rat(1, 2))}};
        half.torsion_free = true;
        half.min_denominator = 2;
        half.extension_order = 2;
        half.splits = false;
        half.h2_invariants = {Int(2), Int(2)};
        half.even = true;
        half.type_count = 1;
        half.component_dimensions = {Int(2)};
        out.push_back(half);

        CatalogEntry refl;
        refl.name = "point-reflection";
        refl.summary = "central inversion with no shift, the standard torsion example";
        refl.rank = 2;
        refl.generators = {{IntMatrix::of({{-1, 0}, {0, -1}}), RatVector(2, Rat(0))}};
        refl.torsion_free = false;
        refl.min_denominator = 1;
        refl.extension_order = 1;
        refl.splits = true;
        refl.h2_invariants = {};
        refl.even = true;
        refl.type_count = 1;
        refl.component_dimensions = {Int(1)};
        out.push_back(refl);

        out.push_back(detail::turn_shift_entry("third-turn-shift", 3,
                                               IntMatrix::of({{0, -1}, {1, -1}})));
        out.push_back(detail::turn_shift_entry("quarter-turn-shift", 4,
                                               IntMatrix::of({{0, -1}, {1, 0}})));
        out.push_back(detail::turn_shift_entry("sixth-turn-shift", 6,
                                               IntMatrix::of({{1, -1}, {1, 0}})));
        return out;
    }();
    return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw std::out_of_range("no catalog entry named " + name);
}

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// Recomputes every recorded invariant from the generators and reports
// differences.  An empty mismatch list means the entry is consistent.
inline VerifyResult verify_entry(const CatalogEntry& e) {
    VerifyResult out;
    auto complain = [&out](const std::string& what) {
        out.ok = false;
        out.mismatches.push_back(what);
    };

    CrystGroup g = CrystGroup::from_affine_generators(e.rank, e.generators);
    if (g.rank() != e.rank) complain("rank");

    if (g.torsion_status().torsion_free != e.torsion_free) complain("torsion_free");

    auto den = g.minimal_denominator();
    if (den.d != e.min_denominator) complain("min_denominator");

    auto ext = extension_report(g);
    if (ext.order != e.extension_order) complain("extension_order");
    if (ext.h2_invariants != e.h2_invariants) complain("h2_invariants");

    auto split = splitting_over(g, Overlattice::standard(e.rank));
    if (split.splits != e.splits) complain("splits");

    auto iso = isotypical_decomposition(g.point_group());
    if (iso.even != e.even) complain("even");
    if (iso.even) {
        auto list = enumerate_hodge_types(iso);
        if (list.count != e.type_count) complain("type_count");
        std::vector<Int> dims;
        for (const auto& t : list.types) dims.push_back(t.dimension);
        if (dims != e.component_dimensions) complain("component_dimensions");
    } else if (e.type_count != 0 || !e.component_dimensions.empty()) {
        complain("type_count");
    }
    return out;
}

}  // namespace ghm
