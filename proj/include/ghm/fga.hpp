#pragma once

// Finitely generated abelian groups presented as Z^g / rowspan(relations),
// stored in invariant-factor form. Kept factors follow the divisibility chain
// d_1 | d_2 | ..., with 0 encoding a free summand; factors equal to 1 are
// dropped but the coordinate maps remember the full Smith data.

#include "ghm/snf.hpp"

#include <functional>

namespace ghm {

class FgaGroup {
public:
    FgaGroup() = default;

    std::size_t ambient_rank() const { return ambient_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return factors_.empty(); }
    bool is_finite() const {
        for (const auto& d : factors_) if (d == 0) return false;
        return true;
    }

    /// Group order; nullopt when infinite.
    std::optional<Int> order() const {
        Int n = 1;
        for (const auto& d : factors_) {
            if (d == 0) return std::nullopt;
            n *= d;
        }
        return n;
    }

    /// Image of an ambient vector in canonical coordinates, one entry per kept
    /// invariant factor (torsion entries reduced into [0, d_i)).
    IntVector to_coords(const IntVector& x) const {
        if (x.size() != ambient_) throw std::invalid_argument("FgaGroup: ambient size mismatch");
        IntVector y(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j)
            for (std::size_t i = 0; i < ambient_; ++i)
                if (V_.at(i, j) != 0) y[j] += x[i] * V_.at(i, j);
        IntVector out;
        out.reserve(kept_.size());
        for (std::size_t k = 0; k < kept_.size(); ++k) {
            std::size_t j = kept_[k];
            Int v = y[j];
            if (factors_[k] != 0) v -= floor_div(v, factors_[k]) * factors_[k];
            out.push_back(v);
        }
        return out;
    }

    /// Ambient representative mapping onto the given canonical coordinates.
    IntVector from_coords(const IntVector& c) const {
        if (c.size() != kept_.size()) throw std::invalid_argument("FgaGroup: coord size mismatch");
        IntVector y(ambient_);
        for (std::size_t k = 0; k < kept_.size(); ++k) y[kept_[k]] = c[k];
        IntVector x(ambient_);
        for (std::size_t i = 0; i < ambient_; ++i)
            for (std::size_t j = 0; j < ambient_; ++j)
                if (Vinv_.at(j, i) != 0) x[i] += y[j] * Vinv_.at(j, i);
        return x;
    }

    bool coords_are_zero(const IntVector& c) const {
        for (const auto& v : c) if (v != 0) return false;
        return true;
    }

    /// Order of the element with the given canonical coordinates; nullopt for
    /// infinite order (nonzero free coordinate).
    std::optional<Int> coords_order(const IntVector& c) const {
        if (c.size() != kept_.size()) throw std::invalid_argument("FgaGroup: coord size mismatch");
        Int m = 1;
        for (std::size_t k = 0; k < kept_.size(); ++k) {
            if (factors_[k] == 0) {
                if (c[k] != 0) return std::nullopt;
                continue;
            }
            Int g = gcd(c[k], factors_[k]);
            m = lcm(m, factors_[k] / g);
        }
        return m;
    }

    /// All elements of a finite group, in lexicographic coordinate order.
    std::vector<IntVector> enumerate() const {
        if (!is_finite()) throw std::domain_error("FgaGroup: enumerate on infinite group");
        std::vector<IntVector> out;
        IntVector cur(factors_.size());
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (k == factors_.size()) {
                out.push_back(cur);
                return;
            }
            for (Int v = 0; v < factors_[k]; ++v) {
                cur[k] = v;
                rec(k + 1);
            }
        };
        rec(0);
        return out;
    }

    friend FgaGroup fga_from_relations(std::size_t gens, const IntMatrix& rels);

private:
    std::size_t ambient_ = 0;
    std::vector<Int> factors_;        // kept invariant factors (1s dropped)
    std::vector<std::size_t> kept_;   // Smith column index per kept factor
    IntMatrix V_, Vinv_;
};

/// Z^gens / rowspan(rels) in invariant-factor form. rels may have zero rows.
inline FgaGroup fga_from_relations(std::size_t gens, const IntMatrix& rels) {
    if (rels.rows() > 0 && rels.cols() != gens)
        throw std::invalid_argument("fga_from_relations: relation width mismatch");
    FgaGroup g;
    g.ambient_ = gens;
    IntMatrix r = rels.rows() ? rels : IntMatrix(0, gens);
    SmithForm f = smith_normal_form(r, /*track_u=*/false);
    g.V_ = f.V;
    g.Vinv_ = RatMatrix(f.V).inverse().to_int();
    std::size_t diag = std::min(r.rows(), gens);
    for (std::size_t j = 0; j < gens; ++j) {
        Int d = j < diag ? f.D.at(j, j) : Int(0);
        if (d == 1) continue;
        g.factors_.push_back(d);
        g.kept_.push_back(j);
    }
    return g;
}

/// Quotient Z^n / colspan(C) (columns generate the sublattice).
inline FgaGroup fga_from_column_span(const IntMatrix& C) {
    return fga_from_relations(C.rows(), C.transpose());
}

inline std::optional<Int> fga_element_order(const FgaGroup& g, const IntVector& ambient) {
    return g.coords_order(g.to_coords(ambient));
}

inline bool fga_contains_zero_image(const FgaGroup& g, const IntVector& ambient) {
    return g.coords_are_zero(g.to_coords(ambient));
}

/// Quotient Z/B of two sublattices B <= Z of an ambient Z^m, with coordinate
/// maps between ambient vectors and classes of the quotient.
class Subquotient {
public:
    Subquotient() = default;

    const FgaGroup& group() const { return group_; }
    std::size_t lattice_rank() const { return basis_.cols(); }

    /// Class coordinates of an ambient vector; it must lie in the numerator.
    IntVector coords_of(const IntVector& x) const {
        return group_.to_coords(lattice_coords(x));
    }

    bool in_numerator(const IntVector& x) const {
        auto c = rational_solve(basis_, rat_vector(x));
        return c && is_integral(*c);
    }

    /// An ambient representative of the class with the given coordinates.
    IntVector representative(const IntVector& coords) const {
        IntVector c = group_.from_coords(coords);
        IntVector x(basis_.rows(), Int(0));
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < basis_.cols(); ++j) x[i] += basis_.at(i, j) * c[j];
        return x;
    }

    friend Subquotient make_subquotient(std::size_t, const std::vector<IntVector>&,
                                        const std::vector<IntVector>&);

private:
    IntVector lattice_coords(const IntVector& x) const {
        if (x.size() != basis_.rows()) throw std::invalid_argument("Subquotient: size mismatch");
        auto c = rational_solve(basis_, rat_vector(x));
        if (!c || !is_integral(*c))
            throw std::invalid_argument("Subquotient: vector is outside the numerator lattice");
        return to_int_vector(*c);
    }

    IntMatrix basis_;  // columns form a lattice basis of the numerator
    FgaGroup group_;
};

inline Subquotient make_subquotient(std::size_t ambient, const std::vector<IntVector>& num_gens,
                                    const std::vector<IntVector>& den_gens) {
    std::vector<RatVector> rows;
    rows.reserve(num_gens.size());
    for (const auto& v : num_gens) {
        if (v.size() != ambient) throw std::invalid_argument("numerator generator size mismatch");
        rows.push_back(rat_vector(v));
    }
    auto basis_rows = lattice_basis(rows, ambient);
    Subquotient s;
    s.basis_ = IntMatrix(ambient, basis_rows.size());
    for (std::size_t j = 0; j < basis_rows.size(); ++j) {
        if (!is_integral(basis_rows[j]))
            throw std::invalid_argument("numerator lattice is not integral");
        for (std::size_t i = 0; i < ambient; ++i)
            s.basis_.at(i, j) = numerator(basis_rows[j][i]);
    }
    IntMatrix rels(den_gens.size(), basis_rows.size());
    for (std::size_t r = 0; r < den_gens.size(); ++r) {
        IntVector c = s.lattice_coords(den_gens[r]);
        for (std::size_t j = 0; j < c.size(); ++j) rels.at(r, j) = c[j];
    }
    s.group_ = fga_from_relations(basis_rows.size(), rels);
    return s;
}

}  // namespace ghm
