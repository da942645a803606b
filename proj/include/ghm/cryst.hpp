#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ghm/fga.hpp"
#include "ghm/group.hpp"
#include "ghm/matrix.hpp"
#include "ghm/snf.hpp"

namespace ghm {

// The affine closure is not a lattice extension of Z^n in standard form.
// When lattice_too_small is set, pure fractional translations were found and
// reduce_translations can rescale the group into standard form.
struct NotCrystallographic : public std::runtime_error {
    bool lattice_too_small;
    NotCrystallographic(const std::string& what, bool too_small)
        : std::runtime_error(what), lattice_too_small(too_small) {}
};

struct NotInvariant : public std::runtime_error {
    explicit NotInvariant(const std::string& what) : std::runtime_error(what) {}
};

struct AffineGenerator {
    IntMatrix linear;
    RatVector translation;
};

// u_g + L(g) u_h - u_{gh} failed to be integral at the pair (g, h).
struct CocycleDefect {
    std::size_t g, h;
    RatVector defect;
};

struct TorsionElement {
    std::size_t element;      // point group index
    RatVector fixed_point;    // exact fixed point of the representative below
    IntVector lattice_shift;  // the representative is (L_g, u_g + shift)
};

struct TorsionReport {
    bool torsion_free = true;
    std::vector<TorsionElement> elements;
};

struct DenominatorReport;

// Crystallographic group in standard form: translation lattice Z^n, finite
// point group acting by the stored integer matrices, and one translation
// representative u_g in [0,1)^n per point group element.
class CrystGroup {
public:
    static CrystGroup from_affine_generators(std::size_t n,
                                             const std::vector<AffineGenerator>& gens,
                                             std::size_t limit = 10000) {
        require_rank(n);
        std::vector<IntMatrix> linear;
        linear.reserve(gens.size());
        for (const auto& g : gens) {
            if (g.translation.size() != n)
                throw std::invalid_argument("translation part has wrong length");
            linear.push_back(g.linear);
        }
        FiniteMatrixGroup pg = FiniteMatrixGroup::from_generators(n, linear, limit);
        std::vector<std::optional<RatVector>> u(pg.size());
        u[0] = RatVector(n, Rat(0));
        std::vector<std::size_t> gen_idx(gens.size());
        for (std::size_t k = 0; k < gens.size(); ++k) gen_idx[k] = pg.index_of(gens[k].linear);

        std::vector<std::size_t> queue = {0};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::size_t i = queue[head];
            for (std::size_t k = 0; k < gens.size(); ++k) {
                std::size_t j = pg.mult(i, gen_idx[k]);
                RatVector cand =
                    mod1(add(*u[i], pg.element(i).mul(gens[k].translation)));
                if (!u[j]) {
                    u[j] = std::move(cand);
                    queue.push_back(j);
                } else if (*u[j] != cand) {
                    throw NotCrystallographic(
                        "affine closure contains a fractional pure translation; "
                        "the translation lattice is larger than Z^n",
                        true);
                }
            }
        }
        std::vector<RatVector> sys;
        sys.reserve(pg.size());
        for (auto& v : u) sys.push_back(std::move(*v));
        return CrystGroup(std::move(pg), std::move(sys));
    }

    static CrystGroup from_vector_system(FiniteMatrixGroup pg, std::vector<RatVector> u) {
        require_rank(pg.degree());
        if (u.size() != pg.size())
            throw std::invalid_argument("vector system must have one entry per element");
        for (auto& v : u) {
            if (v.size() != pg.degree())
                throw std::invalid_argument("vector system entry has wrong length");
            v = mod1(v);
        }
        return CrystGroup(std::move(pg), std::move(u));
    }

    std::size_t rank() const { return pg_.degree(); }
    const FiniteMatrixGroup& point_group() const { return pg_; }
    const std::vector<RatVector>& vector_system() const { return u_; }
    const RatVector& translation_part(std::size_t i) const { return u_.at(i); }

    // u_g + L(g) u_h - u_{gh}; integral everywhere iff u_ is a vector system.
    RatVector cocycle_value(std::size_t g, std::size_t h) const {
        RatVector v = add(u_[g], pg_.element(g).mul(u_[h]));
        return sub(v, u_[pg_.mult(g, h)]);
    }

    std::vector<CocycleDefect> validate() const {
        std::vector<CocycleDefect> bad;
        for (std::size_t g = 0; g < pg_.size(); ++g)
            for (std::size_t h = 0; h < pg_.size(); ++h) {
                RatVector d = cocycle_value(g, h);
                if (!is_integral(d)) bad.push_back({g, h, std::move(d)});
            }
        return bad;
    }

    // Exact translation part of the product of canonical representatives
    // taken along the word, composed left to right. Not reduced mod 1.
    RatVector vector_of_word(const std::vector<std::size_t>& word) const {
        IntMatrix m = IntMatrix::identity(rank());
        RatVector t(rank(), Rat(0));
        for (std::size_t i : word) {
            t = add(t, m.mul(u_.at(i)));
            m = m * pg_.element(i);
        }
        return t;
    }

    std::size_t element_of_word(const std::vector<std::size_t>& word) const {
        std::size_t acc = 0;
        for (std::size_t i : word) acc = pg_.mult(acc, i);
        return acc;
    }

    // Change of origin by w: u'_g = u_g + (L(g) - I) w, reduced mod 1.
    CrystGroup translate_conjugate(const RatVector& w) const {
        if (w.size() != rank()) throw std::invalid_argument("shift has wrong length");
        std::vector<RatVector> nu;
        nu.reserve(u_.size());
        for (std::size_t g = 0; g < pg_.size(); ++g) {
            RatVector shift = pg_.element(g).mul(w);
            nu.push_back(mod1(sub(add(u_[g], shift), w)));
        }
        return CrystGroup(pg_, std::move(nu));
    }

    // True when L(g) has eigenvalue one, so the fixed point test for g needs
    // the lattice congruence. Otherwise a fixed point always exists.
    bool eigenvalue_one(std::size_t g) const {
        IntMatrix a = pg_.element(g) - IntMatrix::identity(rank());
        return a.det() == 0;
    }

    TorsionReport torsion_status() const {
        TorsionReport report;
        for (std::size_t g = 1; g < pg_.size(); ++g) {
            IntMatrix a = pg_.element(g) - IntMatrix::identity(rank());
            auto sol = solve_congruence(a, u_[g], Int(1));
            if (!sol) continue;
            report.torsion_free = false;
            report.elements.push_back(make_witness(g, *sol));
        }
        return report;
    }

    DenominatorReport minimal_denominator() const;

private:
    CrystGroup(FiniteMatrixGroup pg, std::vector<RatVector> u)
        : pg_(std::move(pg)), u_(std::move(u)) {}

    static void require_rank(std::size_t n) {
        if (n == 0) throw std::invalid_argument("rank must be positive");
    }

    // Certify the fixed point twice over: the representative fixes x, its
    // power to the element order is the identity, and the barycenter of the
    // orbit of the origin is fixed as well.
    TorsionElement make_witness(std::size_t g, const RatVector& x) const {
        std::size_t n = rank();
        const IntMatrix& l = pg_.element(g);
        RatVector drift = sub(add(l.mul(x), u_[g]), x);
        if (!is_integral(drift))
            throw std::logic_error("congruence witness is not a fixed point");
        RatVector trans(n);
        for (std::size_t i = 0; i < n; ++i) trans[i] = u_[g][i] - drift[i];

        IntMatrix pm = IntMatrix::identity(n);
        RatVector pt(n, Rat(0));
        RatVector orbit_sum(n, Rat(0));
        long long order = to_int64(pg_.element_order(g));
        for (long long k = 0; k < order; ++k) {
            orbit_sum = add(orbit_sum, pt);
            pt = add(pm.mul(trans), pt);
            pm = pm * l;
        }
        if (!pm.is_identity() || !is_zero(pt))
            throw std::logic_error("finite order certificate failed");
        RatVector bary = scale(Rat(1, order), orbit_sum);
        if (sub(add(l.mul(bary), trans), bary) != RatVector(n, Rat(0)))
            throw std::logic_error("orbit barycenter is not fixed");

        IntVector shift(n);
        for (std::size_t i = 0; i < n; ++i) shift[i] = -numerator(drift[i]);
        return {g, x, std::move(shift)};
    }

    FiniteMatrixGroup pg_;
    std::vector<RatVector> u_;
};

struct DenominatorReport {
    Int d;            // least d admitting a (1/d)-integral change of origin
    RatVector shift;  // origin shift realizing it
    CrystGroup realized;
};

inline DenominatorReport CrystGroup::minimal_denominator() const {
    std::size_t n = rank(), m = pg_.size();
    IntMatrix a(n * m, n);
    RatVector b(n * m);
    for (std::size_t g = 0; g < m; ++g) {
        IntMatrix block = pg_.element(g) - IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a.at(g * n + i, j) = block.at(i, j);
            b[g * n + i] = u_[g][i];
        }
    }
    long long order = static_cast<long long>(m);
    for (long long d = 1; d <= order; ++d) {
        if (order % d != 0) continue;
        auto sol = solve_congruence(a, b, Int(d));
        if (!sol) continue;
        CrystGroup realized = translate_conjugate(*sol);
        for (const auto& v : realized.vector_system())
            for (const auto& entry : v)
                if (!in_scaled_lattice(entry, Int(d)))
                    throw std::logic_error("realized vector system misses the target lattice");
        return {Int(d), *sol, std::move(realized)};
    }
    throw std::logic_error("no realization found up to the group order");
}

// Finite index overlattice of Z^n, stored through a canonical column basis.
class Overlattice {
public:
    static Overlattice standard(std::size_t n) {
        Overlattice l;
        l.basis_ = RatMatrix::identity(n);
        l.inv_ = IntMatrix::identity(n);
        return l;
    }

    // vectors generate the overlattice together with Z^n; must be invariant
    // under the point group action.
    static Overlattice from_vectors(const FiniteMatrixGroup& g, std::vector<RatVector> vectors) {
        std::size_t n = g.degree();
        for (const auto& v : vectors)
            if (v.size() != n) throw std::invalid_argument("lattice vector has wrong length");
        for (std::size_t i = 0; i < n; ++i) {
            RatVector e(n, Rat(0));
            e[i] = 1;
            vectors.push_back(std::move(e));
        }
        auto rows = lattice_basis(vectors, n);
        if (rows.size() != n) throw NotInvariant("overlattice basis is degenerate");
        Overlattice l;
        l.basis_ = RatMatrix::from_columns(rows);
        RatMatrix inv = l.basis_.inverse();
        if (!inv.is_integral())
            throw std::logic_error("lattice join lost the standard sublattice");
        l.inv_ = inv.to_int();
        for (const auto& gen : g.generators()) {
            IntMatrix conj_num = l.inv_ * gen;
            RatMatrix conj = RatMatrix(conj_num) * l.basis_;
            if (!conj.is_integral())
                throw NotInvariant("overlattice is not stable under the point group");
        }
        return l;
    }

    const RatMatrix& basis() const { return basis_; }

    Int index() const {
        Int d = inv_.det();
        return d < 0 ? -d : d;
    }

    bool contains(const RatVector& v) const { return is_integral(to_coords(v)); }
    RatVector to_coords(const RatVector& v) const { return RatMatrix(inv_).mul(v); }
    RatVector from_coords(const RatVector& v) const { return basis_.mul(v); }

    // Action matrix rewritten in lattice coordinates; integral by invariance.
    IntMatrix conjugated_action(const IntMatrix& m) const {
        RatMatrix conj = RatMatrix(inv_ * m) * basis_;
        if (!conj.is_integral()) throw NotInvariant("matrix does not preserve the overlattice");
        return conj.to_int();
    }

private:
    Overlattice() : basis_(RatMatrix::identity(1)), inv_(IntMatrix::identity(1)) {}

    RatMatrix basis_;  // columns span the overlattice
    IntMatrix inv_;    // integral because the overlattice contains Z^n
};

struct ReducedGroup {
    CrystGroup group;        // rewritten over the full translation lattice
    RatMatrix new_basis;     // columns span that lattice in the old coordinates
    FgaGroup translation_quotient;  // new lattice / old lattice
};

// Rescales an affine generating set whose closure has translation lattice
// strictly larger than Z^n into standard form over the full lattice.
inline ReducedGroup reduce_translations(std::size_t n, const std::vector<AffineGenerator>& gens,
                                        std::size_t limit = 10000) {
    if (n == 0) throw std::invalid_argument("rank must be positive");
    std::vector<IntMatrix> linear;
    for (const auto& g : gens) linear.push_back(g.linear);
    FiniteMatrixGroup pg = FiniteMatrixGroup::from_generators(n, linear, limit);

    std::map<std::pair<std::size_t, RatVector>, bool> seen;
    std::vector<std::pair<std::size_t, RatVector>> queue;
    auto push = [&](std::size_t i, RatVector t) {
        auto key = std::make_pair(i, std::move(t));
        if (seen.emplace(key, true).second) queue.push_back(key);
    };
    push(0, RatVector(n, Rat(0)));
    std::vector<std::size_t> gen_idx(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) gen_idx[k] = pg.index_of(gens[k].linear);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        if (queue.size() > limit)
            throw NotFiniteError("affine closure exceeded the element limit");
        auto [i, t] = queue[head];
        for (std::size_t k = 0; k < gens.size(); ++k)
            push(pg.mult(i, gen_idx[k]),
                 mod1(add(t, pg.element(i).mul(gens[k].translation))));
    }

    std::vector<RatVector> lattice_gens;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n, Rat(0));
        e[i] = 1;
        lattice_gens.push_back(std::move(e));
    }
    for (const auto& kv : seen)
        if (kv.first.first == 0) lattice_gens.push_back(kv.first.second);
    auto rows = lattice_basis(lattice_gens, n);
    RatMatrix basis = RatMatrix::from_columns(rows);
    RatMatrix binv = basis.inverse();
    if (!binv.is_integral()) throw std::logic_error("translation lattice lost Z^n");

    std::vector<AffineGenerator> rescaled;
    for (const auto& g : gens) {
        RatMatrix conj = RatMatrix(binv.to_int() * g.linear) * basis;
        if (!conj.is_integral())
            throw std::logic_error("translation lattice is not action stable");
        rescaled.push_back({conj.to_int(), binv.mul(g.translation)});
    }
    CrystGroup reduced = CrystGroup::from_affine_generators(n, rescaled, limit);
    FgaGroup quotient = fga_from_column_span(binv.to_int());
    return {std::move(reduced), std::move(basis), std::move(quotient)};
}

}  // namespace ghm
