#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghm/cryst.hpp"
#include "ghm/fga.hpp"
#include "ghm/group.hpp"
#include "ghm/matrix.hpp"
#include "ghm/snf.hpp"

namespace ghm {

struct ActionMismatch : public std::runtime_error {
    explicit ActionMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient module for group cohomology: Z^ambient modulo the row span of
// relations, with one integral action matrix per group element.
class GModule {
public:
    static GModule lattice(const FiniteMatrixGroup& g) {
        GModule m(g, g.degree(), {});
        for (std::size_t i = 0; i < g.size(); ++i) m.action_.push_back(g.element(i));
        m.verify();
        return m;
    }

    // (1/d)L / L in the basis e_i/d: same action matrices, relations d*e_i.
    static GModule scaled_lattice(const FiniteMatrixGroup& g, const Int& d) {
        if (d <= 0) throw std::invalid_argument("scale must be positive");
        std::vector<IntVector> rels;
        for (std::size_t i = 0; i < g.degree(); ++i) {
            IntVector r(g.degree(), Int(0));
            r[i] = d;
            rels.push_back(std::move(r));
        }
        GModule m(g, g.degree(), std::move(rels));
        for (std::size_t i = 0; i < g.size(); ++i) m.action_.push_back(g.element(i));
        m.verify();
        return m;
    }

    static GModule trivial(const FiniteMatrixGroup& g, std::size_t rank) {
        GModule m(g, rank, {});
        m.action_.assign(g.size(), IntMatrix::identity(rank));
        m.verify();
        return m;
    }

    // Action given on the generators only; extended along generator words.
    static GModule from_generator_action(const FiniteMatrixGroup& g, std::size_t ambient,
                                         std::vector<IntVector> relations,
                                         const std::vector<IntMatrix>& gen_action) {
        if (gen_action.size() != g.generators().size())
            throw std::invalid_argument("need one action matrix per generator");
        GModule m(g, ambient, std::move(relations));
        for (std::size_t i = 0; i < g.size(); ++i) {
            IntMatrix a = IntMatrix::identity(ambient);
            for (std::size_t letter : g.word(i)) a = a * gen_action.at(letter);
            m.action_.push_back(std::move(a));
        }
        m.verify();
        return m;
    }

    static GModule from_element_action(const FiniteMatrixGroup& g, std::size_t ambient,
                                       std::vector<IntVector> relations,
                                       std::vector<IntMatrix> elt_action) {
        if (elt_action.size() != g.size())
            throw std::invalid_argument("need one action matrix per element");
        GModule m(g, ambient, std::move(relations));
        m.action_ = std::move(elt_action);
        m.verify();
        return m;
    }

    const FiniteMatrixGroup& group() const { return group_; }
    std::size_t ambient() const { return ambient_; }
    const std::vector<IntVector>& relations() const { return relations_; }
    const IntMatrix& action(std::size_t element) const { return action_.at(element); }

    // Z^ambient / relations as an abstract group, for reporting.
    FgaGroup presented() const {
        IntMatrix r(relations_.size(), ambient_);
        for (std::size_t i = 0; i < relations_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) r.at(i, j) = relations_[i][j];
        return fga_from_relations(ambient_, r);
    }

private:
    GModule(const FiniteMatrixGroup& g, std::size_t ambient, std::vector<IntVector> relations)
        : group_(g), ambient_(ambient), relations_(std::move(relations)) {
        for (const auto& r : relations_)
            if (r.size() != ambient_) throw std::invalid_argument("relation has wrong length");
    }

    bool in_relation_span(const IntVector& v) const {
        if (relations_.empty()) {
            for (const auto& x : v)
                if (x != 0) return false;
            return true;
        }
        IntMatrix cols(ambient_, relations_.size());
        for (std::size_t j = 0; j < relations_.size(); ++j)
            for (std::size_t i = 0; i < ambient_; ++i) cols.at(i, j) = relations_[j][i];
        return integer_solve(cols, v).has_value();
    }

    void verify() const {
        for (const auto& a : action_)
            if (a.rows() != ambient_ || a.cols() != ambient_)
                throw ActionMismatch("action matrix has wrong shape");
        if (!action_[0].is_identity())
            throw ActionMismatch("identity element must act as the identity");
        for (std::size_t i = 0; i < group_.size(); ++i) {
            for (std::size_t k = 0; k < group_.size(); ++k) {
                IntMatrix diff = action_[i] * action_[k] - action_[group_.mult(i, k)];
                for (std::size_t col = 0; col < ambient_; ++col) {
                    IntVector v(ambient_);
                    for (std::size_t row = 0; row < ambient_; ++row) v[row] = diff.at(row, col);
                    if (!in_relation_span(v))
                        throw ActionMismatch("action is not multiplicative on the quotient");
                }
            }
            for (const auto& r : relations_) {
                IntVector img(ambient_, Int(0));
                for (std::size_t row = 0; row < ambient_; ++row)
                    for (std::size_t col = 0; col < ambient_; ++col)
                        img[row] += action_[i].at(row, col) * r[col];
                if (!in_relation_span(img))
                    throw ActionMismatch("action does not preserve the relations");
            }
        }
    }

    FiniteMatrixGroup group_;
    std::size_t ambient_;
    std::vector<IntVector> relations_;
    std::vector<IntMatrix> action_;
};

// Normalized bar cochains: a k-cochain assigns an ambient vector to every
// k-tuple of nontrivial elements, flattened tuple-major. Slots with an
// identity argument are dropped, which the differentials account for.
namespace bar {

inline std::size_t cochain_dim(const GModule& m, int degree) {
    std::size_t nt = m.group().size() - 1, d = 1;
    for (int i = 0; i < degree; ++i) d *= nt;
    return d * m.ambient();
}

// d^0 v (g) = (A_g - I) v
// d^1 f (g,h) = A_g f(h) - f(gh) + f(g)
// d^2 F (g,h,k) = A_g F(h,k) - F(gh,k) + F(g,hk) - F(g,h)
inline IntMatrix differential(const GModule& mod, int degree) {
    if (degree < 0 || degree > 2) throw std::invalid_argument("bar differential degree");
    std::size_t n = mod.ambient(), nt = mod.group().size() - 1;
    const auto& g = mod.group();
    IntMatrix d(cochain_dim(mod, degree + 1), cochain_dim(mod, degree));

    auto add_identity = [&](std::size_t row_block, std::size_t col_block, long long sign) {
        for (std::size_t i = 0; i < n; ++i) d.at(row_block * n + i, col_block * n + i) += sign;
    };
    auto add_action = [&](std::size_t row_block, std::size_t col_block, std::size_t elt) {
        const IntMatrix& a = mod.action(elt);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d.at(row_block * n + i, col_block * n + j) += a.at(i, j);
    };

    if (degree == 0) {
        for (std::size_t gg = 1; gg <= nt; ++gg) {
            add_action(gg - 1, 0, gg);
            add_identity(gg - 1, 0, -1);
        }
    } else if (degree == 1) {
        for (std::size_t gg = 1; gg <= nt; ++gg)
            for (std::size_t hh = 1; hh <= nt; ++hh) {
                std::size_t row = (gg - 1) * nt + (hh - 1);
                add_action(row, hh - 1, gg);
                std::size_t prod = g.mult(gg, hh);
                if (prod != 0) add_identity(row, prod - 1, -1);
                add_identity(row, gg - 1, 1);
            }
    } else {
        for (std::size_t gg = 1; gg <= nt; ++gg)
            for (std::size_t hh = 1; hh <= nt; ++hh)
                for (std::size_t kk = 1; kk <= nt; ++kk) {
                    std::size_t row = ((gg - 1) * nt + (hh - 1)) * nt + (kk - 1);
                    add_action(row, (hh - 1) * nt + (kk - 1), gg);
                    std::size_t gh = g.mult(gg, hh);
                    if (gh != 0) add_identity(row, (gh - 1) * nt + (kk - 1), -1);
                    std::size_t hk = g.mult(hh, kk);
                    if (hk != 0) add_identity(row, (gg - 1) * nt + (hk - 1), 1);
                    add_identity(row, (gg - 1) * nt + (hh - 1), -1);
                }
    }
    return d;
}

// Relation copies sitting in every slot of the degree-k cochain lattice.
inline std::vector<IntVector> slot_relations(const GModule& m, int degree) {
    std::size_t dim = cochain_dim(m, degree), n = m.ambient();
    std::vector<IntVector> out;
    for (std::size_t slot = 0; slot * n < dim; ++slot)
        for (const auto& r : m.relations()) {
            IntVector v(dim, Int(0));
            for (std::size_t i = 0; i < n; ++i) v[slot * n + i] = r[i];
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace bar

// H^degree(G, M) for degree 1 or 2, with maps between flattened cocycles and
// class coordinates.
class CohomologyGroup {
public:
    CohomologyGroup(const GModule& m, int degree) : degree_(degree) {
        if (degree != 1 && degree != 2) throw std::invalid_argument("degree must be 1 or 2");
        IntMatrix out = bar::differential(m, degree);
        IntMatrix in = bar::differential(m, degree - 1);
        std::size_t dim = bar::cochain_dim(m, degree);

        // cocycles: d x lands in the relation span slotwise
        auto target_rels = bar::slot_relations(m, degree + 1);
        std::vector<IntVector> z_gens;
        if (target_rels.empty()) {
            IntMatrix k = integer_kernel(out);
            for (std::size_t j = 0; j < k.cols(); ++j) {
                IntVector v(dim);
                for (std::size_t i = 0; i < dim; ++i) v[i] = k.at(i, j);
                z_gens.push_back(std::move(v));
            }
        } else {
            IntMatrix aug(out.rows(), out.cols() + target_rels.size());
            for (std::size_t i = 0; i < out.rows(); ++i)
                for (std::size_t j = 0; j < out.cols(); ++j) aug.at(i, j) = out.at(i, j);
            for (std::size_t t = 0; t < target_rels.size(); ++t)
                for (std::size_t i = 0; i < out.rows(); ++i)
                    aug.at(i, out.cols() + t) = target_rels[t][i];
            IntMatrix k = integer_kernel(aug);
            for (std::size_t j = 0; j < k.cols(); ++j) {
                IntVector v(dim);
                for (std::size_t i = 0; i < dim; ++i) v[i] = k.at(i, j);
                z_gens.push_back(std::move(v));
            }
        }

        std::vector<IntVector> b_gens = bar::slot_relations(m, degree);
        for (std::size_t j = 0; j < in.cols(); ++j) {
            IntVector v(dim);
            for (std::size_t i = 0; i < dim; ++i) v[i] = in.at(i, j);
            b_gens.push_back(std::move(v));
        }
        sub_ = make_subquotient(dim, z_gens, b_gens);
    }

    int degree() const { return degree_; }
    const FgaGroup& group() const { return sub_.group(); }
    const std::vector<Int>& invariant_factors() const { return sub_.group().invariant_factors(); }

    IntVector class_of_cocycle(const IntVector& cocycle) const { return sub_.coords_of(cocycle); }
    IntVector cocycle_for_class(const IntVector& coords) const {
        return sub_.representative(coords);
    }
    bool is_cocycle(const IntVector& v) const { return sub_.in_numerator(v); }

private:
    int degree_;
    Subquotient sub_;
};

// Normalized extension cocycle of a crystallographic group, flattened into
// the degree-2 bar cochain lattice of its point group.
inline IntVector extension_cocycle(const CrystGroup& g) {
    std::size_t n = g.rank(), nt = g.point_group().size() - 1;
    IntVector eps(nt * nt * n, Int(0));
    for (std::size_t gg = 1; gg <= nt; ++gg)
        for (std::size_t hh = 1; hh <= nt; ++hh) {
            RatVector v = g.cocycle_value(gg, hh);
            if (!is_integral(v))
                throw std::invalid_argument("vector system violates the cocycle identity");
            std::size_t slot = ((gg - 1) * nt + (hh - 1)) * n;
            for (std::size_t i = 0; i < n; ++i) eps[slot + i] = numerator(v[i]);
        }
    return eps;
}

// Order of the extension class in H^2(G, Z^n): the least divisor dd of |G|
// with dd * eps a coboundary of an integral 1-cochain.
inline Int extension_order(const CrystGroup& g) {
    GModule mod = GModule::lattice(g.point_group());
    IntMatrix d1 = bar::differential(mod, 1);
    IntVector eps = extension_cocycle(g);
    long long order = static_cast<long long>(g.point_group().size());
    for (long long dd = 1; dd <= order; ++dd) {
        if (order % dd != 0) continue;
        IntVector scaled(eps.size());
        for (std::size_t i = 0; i < eps.size(); ++i) scaled[i] = Int(dd) * eps[i];
        if (integer_solve(d1, scaled)) return Int(dd);
    }
    throw std::logic_error("extension class not annihilated by the group order");
}

struct ExtensionReport {
    IntVector cocycle;
    Int order;
    std::vector<Int> h2_invariants;
    IntVector class_coords;
};

inline ExtensionReport extension_report(const CrystGroup& g) {
    GModule mod = GModule::lattice(g.point_group());
    CohomologyGroup h2(mod, 2);
    ExtensionReport rep;
    rep.cocycle = extension_cocycle(g);
    rep.order = extension_order(g);
    rep.h2_invariants = h2.invariant_factors();
    rep.class_coords = h2.class_of_cocycle(rep.cocycle);
    return rep;
}

struct SplitCheck {
    bool splits = false;
    // origin shift w with (L_g - I) w + u_g inside the overlattice for all g
    std::optional<RatVector> origin_shift;
};

// Fixed point of the induced affine action on V / overlattice, if any. Every
// solvable instance has a solution with |G| w inside S + overlattice, where S
// sums the vector system, so the finite grid below is exhaustive.
inline std::optional<RatVector> affine_fixed_point(const CrystGroup& g, const Overlattice& l) {
    std::size_t n = g.rank(), sz = g.point_group().size();
    RatVector s(n, Rat(0));
    for (const auto& u : g.vector_system()) s = add(s, u);

    auto is_fixed = [&](const RatVector& w) {
        for (std::size_t i = 0; i < sz; ++i) {
            RatVector img = add(g.point_group().element(i).mul(w), g.translation_part(i));
            if (!l.contains(sub(img, w))) return false;
        }
        return true;
    };

    std::vector<std::size_t> k(n, 0);
    while (true) {
        RatVector shift(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            shift = add(shift, scale(Rat(static_cast<long long>(k[i])),
                                     l.basis().column(i)));
        RatVector w = scale(Rat(1, static_cast<long long>(sz)), add(s, shift));
        if (is_fixed(w)) return w;
        std::size_t pos = 0;
        while (pos < n && ++k[pos] == sz) k[pos++] = 0;
        if (pos == n) return std::nullopt;
    }
}

struct SplittingEquivalence {
    bool congruence_solvable = false;  // stacked origin shift congruence
    bool class_vanishes = false;       // rewritten cocycle is a coboundary
    bool fixed_point_exists = false;   // exhaustive affine fixed point search
    std::optional<RatVector> origin_shift;
    bool agree() const {
        return congruence_solvable == class_vanishes && class_vanishes == fixed_point_exists;
    }
};

// Splitting of the extension over an overlattice, decided three independent
// ways: a stacked congruence for an origin shift, a coboundary test for the
// rewritten extension cocycle, and the exhaustive fixed point search.
inline SplittingEquivalence splitting_equivalence(const CrystGroup& g, const Overlattice& l) {
    std::size_t n = g.rank(), sz = g.point_group().size();

    std::vector<IntMatrix> conj(sz);
    for (std::size_t i = 0; i < sz; ++i) conj[i] = l.conjugated_action(g.point_group().element(i));

    IntMatrix a(n * sz, n);
    RatVector b(n * sz);
    for (std::size_t i = 0; i < sz; ++i) {
        IntMatrix block = conj[i] - IntMatrix::identity(n);
        RatVector u = l.to_coords(g.translation_part(i));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a.at(i * n + r, c) = block.at(r, c);
            b[i * n + r] = u[r];
        }
    }
    auto shift_coords = solve_congruence(a, b, Int(1));

    GModule mod = GModule::from_element_action(g.point_group(), n, {}, conj);
    IntMatrix d1 = bar::differential(mod, 1);
    std::size_t nt = sz - 1;
    IntVector eps(nt * nt * n, Int(0));
    for (std::size_t gg = 1; gg <= nt; ++gg)
        for (std::size_t hh = 1; hh <= nt; ++hh) {
            RatVector v = l.to_coords(g.cocycle_value(gg, hh));
            if (!is_integral(v))
                throw std::invalid_argument("cocycle does not take values in the overlattice");
            std::size_t slot = ((gg - 1) * nt + (hh - 1)) * n;
            for (std::size_t i = 0; i < n; ++i) eps[slot + i] = numerator(v[i]);
        }
    bool coboundary = integer_solve(d1, eps).has_value();

    auto fixed = affine_fixed_point(g, l);

    SplittingEquivalence eq;
    eq.congruence_solvable = shift_coords.has_value();
    eq.class_vanishes = coboundary;
    eq.fixed_point_exists = fixed.has_value();
    if (shift_coords) eq.origin_shift = l.from_coords(*shift_coords);
    return eq;
}

// The three criteria agree on every crystallographic group; a disagreement
// would mean a bug and is fatal.
inline SplitCheck splitting_over(const CrystGroup& g, const Overlattice& l) {
    auto eq = splitting_equivalence(g, l);
    if (!eq.agree()) throw std::logic_error("splitting criteria disagree");
    return {eq.class_vanishes, eq.origin_shift};
}

}  // namespace ghm
