#pragma once

// Isotypical decomposition of the lattice representation, parity of the
// multiplicities, enumeration of Hodge types, and exact construction of a
// sample complex structure for a chosen type.
//
// Throughout, n_chi denotes the multiplicity of the irreducible character chi
// in the complexified lattice representation.  The group is "even" when every
// real-valued chi has even n_chi; only then does an invariant complex
// structure exist.  A Hodge type assigns to each conjugate pair {chi, chibar}
// a split nu + (n_chi - nu) of the isotypical multiplicity between H^{1,0}
// and H^{0,1}; real characters are forced to split evenly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghm/character.hpp"
#include "ghm/cyclo_matrix.hpp"
#include "ghm/group.hpp"

namespace ghm {

struct NotEven : std::runtime_error {
    explicit NotEven(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the sample constructor cannot produce (or verify) an invariant
// complex structure of the requested type.  For multiplicity-free and
// abelian inputs the construction always succeeds; for higher-degree
// characters it relies on splitting the commutant by averaged operators and
// may give up on adversarial inputs.
struct NoDecomposition : std::runtime_error {
    explicit NoDecomposition(const std::string& what) : std::runtime_error(what) {}
};

struct IsotypicalComponent {
    std::size_t chi = 0;        // row index into the character table
    Int multiplicity;           // n_chi
    Int degree;                 // chi(1)
    bool real_char = false;
    std::size_t partner = 0;    // row of the conjugate character
};

struct IsotypicalDecomposition {
    CharacterTable table;
    std::vector<IsotypicalComponent> components;  // one per table row, same order
    std::size_t rank = 0;                         // degree of the matrix group
    bool even = true;
    std::vector<std::size_t> odd_real_chars;      // real rows with odd multiplicity
};

// Class function g -> trace L(g), the character of the lattice representation.
inline std::vector<Cyclotomic> lattice_character(const CharacterTable& table) {
    const auto& g = table.group();
    const auto& classes = g.classes();
    std::vector<Cyclotomic> values;
    values.reserve(classes.size());
    for (const auto& cls : classes) {
        const IntMatrix& m = g.element(cls.rep);
        Rat tr(0);
        for (std::size_t i = 0; i < m.rows(); ++i) tr += Rat(m.at(i, i));
        values.push_back(Cyclotomic::from_rat(table.exponent_order(), tr));
    }
    return values;
}

inline IsotypicalDecomposition isotypical_decomposition(const FiniteMatrixGroup& g) {
    IsotypicalDecomposition out{CharacterTable::build(g), {}, g.degree(), true, {}};
    const auto trace = lattice_character(out.table);
    Int total(0);
    for (std::size_t chi = 0; chi < out.table.num_chars(); ++chi) {
        IsotypicalComponent c;
        c.chi = chi;
        c.multiplicity = multiplicity(out.table, trace, chi);
        c.degree = out.table.degree(chi);
        c.real_char = out.table.is_real_char(chi);
        c.partner = out.table.conjugate_partner(chi);
        total += c.multiplicity * c.degree;
        if (c.real_char && c.multiplicity % 2 != 0) {
            out.even = false;
            out.odd_real_chars.push_back(chi);
        }
        out.components.push_back(c);
    }
    if (total != Int(g.degree()))
        throw std::logic_error("isotypical multiplicities do not add up to the rank");
    for (const auto& c : out.components)
        if (!c.real_char && c.multiplicity != out.components[c.partner].multiplicity)
            throw std::logic_error("conjugate characters with different multiplicities");
    return out;
}

struct HodgeType {
    std::vector<Int> nu;  // one entry per character table row, nu[chi] + nu[partner] = n_chi
    Int dimension;        // dimension of the deformation family with this type
};

struct HodgeTypeList {
    Int count;
    std::vector<HodgeType> types;
};

namespace detail {

inline void check_even(const IsotypicalDecomposition& iso, const char* who) {
    if (iso.even) return;
    std::string msg(who);
    msg += ": real characters with odd multiplicity:";
    for (auto chi : iso.odd_real_chars) msg += " " + std::to_string(chi);
    throw NotEven(msg);
}

inline void check_type(const IsotypicalDecomposition& iso, const std::vector<Int>& nu) {
    if (nu.size() != iso.components.size())
        throw std::invalid_argument("Hodge type has the wrong number of entries");
    for (const auto& c : iso.components) {
        const Int& v = nu[c.chi];
        if (v < 0 || v > c.multiplicity)
            throw std::invalid_argument("Hodge type entry out of range");
        if (c.real_char) {
            if (v * 2 != c.multiplicity)
                throw std::invalid_argument("real character must split evenly");
        } else if (v + nu[c.partner] != c.multiplicity) {
            throw std::invalid_argument("conjugate entries must add up to the multiplicity");
        }
    }
}

}  // namespace detail

// dim = sum over real chi of (n/2)^2 plus sum over conjugate pairs of 2 nu (n - nu).
inline Int component_dimension(const IsotypicalDecomposition& iso, const std::vector<Int>& nu) {
    detail::check_type(iso, nu);
    Int dim(0);
    for (const auto& c : iso.components) {
        if (c.real_char) {
            Int half = c.multiplicity / 2;
            dim += half * half;
        } else if (c.chi < c.partner) {
            dim += 2 * nu[c.chi] * (c.multiplicity - nu[c.chi]);
        }
    }
    return dim;
}

inline Int hodge_type_count(const IsotypicalDecomposition& iso) {
    detail::check_even(iso, "hodge_type_count");
    Int count(1);
    for (const auto& c : iso.components)
        if (!c.real_char && c.chi < c.partner) count *= c.multiplicity + 1;
    return count;
}

// All types in lexicographic order of the free entries (conjugate pairs taken
// in increasing row order of their smaller member).
inline HodgeTypeList enumerate_hodge_types(const IsotypicalDecomposition& iso) {
    detail::check_even(iso, "enumerate_hodge_types");
    std::vector<std::size_t> free_rows;
    for (const auto& c : iso.components)
        if (!c.real_char && c.chi < c.partner) free_rows.push_back(c.chi);

    HodgeTypeList out;
    out.count = hodge_type_count(iso);
    std::vector<Int> choice(free_rows.size(), Int(0));
    for (;;) {
        std::vector<Int> nu(iso.components.size(), Int(0));
        for (const auto& c : iso.components)
            if (c.real_char) nu[c.chi] = c.multiplicity / 2;
        for (std::size_t k = 0; k < free_rows.size(); ++k) {
            const auto& c = iso.components[free_rows[k]];
            nu[c.chi] = choice[k];
            nu[c.partner] = c.multiplicity - choice[k];
        }
        out.types.push_back({nu, component_dimension(iso, nu)});

        std::size_t k = free_rows.size();
        while (k > 0) {
            --k;
            if (choice[k] < iso.components[free_rows[k]].multiplicity) {
                ++choice[k];
                std::fill(choice.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                          choice.end(), Int(0));
                break;
            }
            if (k == 0) {
                if (Int(out.types.size()) != out.count)
                    throw std::logic_error("type enumeration does not match the count");
                return out;
            }
        }
        if (free_rows.empty()) {
            if (out.count != 1) throw std::logic_error("type count without free entries");
            return out;
        }
    }
}

// Projector of C^n onto the chi-isotypical component, over Q(zeta_order).
inline CycMatrix isotypical_projector(const CharacterTable& table, std::size_t chi,
                                      long long order) {
    const auto& g = table.group();
    const std::size_t n = g.degree();
    const auto& classes = g.classes();
    std::vector<std::size_t> class_of(g.size());
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto e : classes[c].members) class_of[e] = c;

    CycMatrix sum(order, n, n);
    for (std::size_t e = 0; e < g.size(); ++e) {
        Cyclotomic coef = table.value(chi, class_of[e]).promote(order).conj();
        sum = sum + CycMatrix::from_int(order, g.element(e)).scaled(coef);
    }
    Rat factor = Rat(table.degree(chi)) / Rat(Int(g.size()));
    return sum.scaled(Cyclotomic::from_rat(order, factor));
}

struct ComplexStructureSample {
    long long field_order = 4;  // J and h10 live over Q(zeta_field_order)
    CycMatrix j;                // rational n x n matrix with J^2 = -1 commuting with the group
    CycMatrix h10;              // basis of H^{1,0}, the +i eigenspace of J, n x n/2
    int orientation = 0;        // sign of det of the induced real basis, 0 if numerically unclear
};

namespace detail {

// Averages the elementary matrix E_{ab} over the group.  The result commutes
// with every L(g) and is integral up to the 1/|G| factor.
inline CycMatrix reynolds_average(const FiniteMatrixGroup& g, std::size_t a, std::size_t b,
                                  long long order) {
    const std::size_t n = g.degree();
    IntMatrix acc(n, n);
    for (std::size_t e = 0; e < g.size(); ++e) {
        const IntMatrix& l = g.element(e);
        const IntMatrix& linv = g.element(g.inverse(e));
        // l * E_{ab} * linv has entry (i,j) = l(i,a) * linv(b,j)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                acc.at(i, j) += l.at(i, a) * linv.at(b, j);
    }
    return CycMatrix::from_int(order, acc)
        .scaled(Cyclotomic::from_rat(order, Rat(Int(1), Int(g.size()))));
}

// X with basis * X = m * basis; the columns of m * basis must lie in the span.
inline CycMatrix restrict_to_span(const CycMatrix& m, const CycMatrix& basis) {
    CycMatrix image = m * basis;
    CycMatrix x(basis.order(), basis.cols(), basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        auto sol = basis.solve(image.column(j));
        if (!sol) throw NoDecomposition("averaged operator does not preserve an isotypical span");
        for (std::size_t i = 0; i < basis.cols(); ++i) x.at(i, j) = (*sol)[i];
    }
    return x;
}

// Annihilator polynomial of v under x, by the first linear dependence among
// the Krylov vectors v, xv, x^2 v, ...  Coefficients are monic in the lead.
inline std::vector<Cyclotomic> krylov_annihilator(const CycMatrix& x, const CycVector& v) {
    const long long order = x.order();
    std::vector<CycVector> krylov{v};
    for (;;) {
        std::vector<CycVector> cols = krylov;
        CycMatrix span = CycMatrix::from_columns(order, x.rows(), cols);
        CycVector next = x.mul(krylov.back());
        auto dep = span.solve(next);
        if (dep) {
            std::vector<Cyclotomic> p(krylov.size() + 1, Cyclotomic::zero(order));
            for (std::size_t i = 0; i < krylov.size(); ++i) p[i] = Cyclotomic::zero(order) - (*dep)[i];
            p.back() = Cyclotomic::one(order);
            return p;
        }
        krylov.push_back(next);
        if (krylov.size() > x.rows() + 1)
            throw std::logic_error("Krylov sequence failed to close");
    }
}

inline Cyclotomic poly_eval(const std::vector<Cyclotomic>& p, const Cyclotomic& x) {
    Cyclotomic acc = Cyclotomic::zero(x.order());
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
    return acc;
}

// Rational roots of a rational polynomial, by the rational root theorem after
// clearing denominators.  Bails out (empty) when the divisor scan would be
// too large; callers treat that as "no usable eigenvalue found".
inline std::vector<Rat> rational_poly_roots(const std::vector<Rat>& p) {
    std::size_t lead = p.size();
    while (lead > 0 && p[lead - 1] == Rat(0)) --lead;
    if (lead == 0) return {};
    std::vector<Rat> roots;
    std::size_t low = 0;
    while (low < lead && p[low] == Rat(0)) ++low;
    if (low > 0) roots.push_back(Rat(0));
    if (low == lead - 1) return roots;  // monomial times unit

    Int scale(1);
    for (std::size_t i = low; i < lead; ++i) scale = lcm(scale, den(p[i]));
    std::vector<Int> q;
    for (std::size_t i = low; i < lead; ++i) q.push_back(num(p[i] * Rat(scale)));
    Int a0 = abs(q.front()), an = abs(q.back());
    if (a0 > Int(1000000) || an > Int(1000000)) return roots;

    auto divisors = [](const Int& m) {
        std::vector<Int> out;
        for (Int d(1); d * d <= m; ++d)
            if (m % d == 0) {
                out.push_back(d);
                if (d * d != m) out.push_back(m / d);
            }
        return out;
    };
    for (const Int& num : divisors(a0))
        for (const Int& den : divisors(an))
            for (int sign : {1, -1}) {
                Rat cand = Rat(sign * num, den);
                Rat val(0);
                for (std::size_t i = q.size(); i > 0; --i) val = val * cand + Rat(q[i - 1]);
                if (val == Rat(0)) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// Eigenvalue candidates of x that lie in Q(zeta_order) and have the shape
// q * zeta^k with rational q.  That covers every averaged operator we feed in.
inline std::vector<Cyclotomic> field_eigenvalues(const CycMatrix& x) {
    const long long order = x.order();
    std::vector<Cyclotomic> found;
    auto consider = [&](const Cyclotomic& lambda) {
        CycMatrix shifted = x + CycMatrix::identity(order, x.rows()).scaled(
            Cyclotomic::zero(order) - lambda);
        if (shifted.rank() < x.rows()) {
            for (const auto& f : found)
                if (f == lambda) return;
            found.push_back(lambda);
        }
    };
    for (std::size_t seed = 0; seed < x.rows(); ++seed) {
        CycVector v(x.rows(), Cyclotomic::zero(order));
        v[seed] = Cyclotomic::one(order);
        auto ann = krylov_annihilator(x, v);
        for (long long k = 0; k < order; ++k) {
            // substitute lambda = q * zeta^k and demand all power-basis
            // coordinates of the value vanish as polynomials in q
            std::size_t deg = cyclotomic_polynomial(order).size() - 1;
            std::vector<std::vector<Rat>> coord_polys(deg, std::vector<Rat>(ann.size(), Rat(0)));
            for (std::size_t i = 0; i < ann.size(); ++i) {
                Cyclotomic term = ann[i] * Cyclotomic::zeta(order, k * static_cast<long long>(i));
                auto coords = term.coefficients();
                for (std::size_t t = 0; t < deg; ++t)
                    coord_polys[t][i] = t < coords.size() ? coords[t] : Rat(0);
            }
            std::size_t pivot = deg;
            for (std::size_t t = 0; t < deg; ++t) {
                bool nonzero = false;
                for (const auto& c : coord_polys[t]) nonzero = nonzero || c != Rat(0);
                if (nonzero) { pivot = t; break; }
            }
            if (pivot == deg) continue;
            for (const Rat& q : rational_poly_roots(coord_polys[pivot])) {
                Cyclotomic cand = Cyclotomic::from_rat(order, q) * Cyclotomic::zeta(order, k);
                if (poly_eval(ann, cand).is_zero()) consider(cand);
            }
        }
    }
    return found;
}

// Splits span(basis) into x-invariant pieces by the Fitting decomposition at
// each field eigenvalue of the restriction of x.
inline std::vector<CycMatrix> fitting_split(const CycMatrix& basis, const CycMatrix& m) {
    CycMatrix x = restrict_to_span(m, basis);
    for (const auto& lambda : field_eigenvalues(x)) {
        CycMatrix shifted = x + CycMatrix::identity(x.order(), x.rows()).scaled(
            Cyclotomic::zero(x.order()) - lambda);
        CycMatrix power = CycMatrix::identity(x.order(), x.rows());
        for (std::size_t i = 0; i < x.rows(); ++i) power = power * shifted;
        CycMatrix ker = power.kernel();
        if (ker.cols() == 0 || ker.cols() == x.rows()) continue;
        CycMatrix im = power.column_echelon();
        if (ker.cols() + im.cols() != x.rows())
            throw std::logic_error("Fitting decomposition is not direct");
        return {basis * ker, basis * im};
    }
    return {basis};
}

}  // namespace detail

// Constructs an invariant complex structure realizing the given Hodge type
// and verifies it exactly.  h10 columns span the +i eigenspace of j; the
// recovered type (rank of each isotypical projector on h10) is checked
// against nu, as are j^2 = -1, invariance, and compatibility with conjugation.
inline ComplexStructureSample sample_complex_structure(const IsotypicalDecomposition& iso,
                                                       const std::vector<Int>& nu) {
    detail::check_even(iso, "sample_complex_structure");
    detail::check_type(iso, nu);
    const auto& table = iso.table;
    const auto& g = table.group();
    const std::size_t n = iso.rank;
    if (n % 2 != 0) throw NotEven("sample_complex_structure: odd rank");

    long long e = table.exponent_order();
    long long order = e % 4 == 0 ? e : (e % 2 == 0 ? 2 * e : 4 * e);
    const Cyclotomic imag = Cyclotomic::zeta(order, order / 4);
    const Cyclotomic one = Cyclotomic::one(order);

    std::vector<CycMatrix> projectors;
    projectors.reserve(iso.components.size());
    for (std::size_t chi = 0; chi < iso.components.size(); ++chi)
        projectors.push_back(isotypical_projector(table, chi, order));

    std::vector<CycVector> h10_cols;

    auto split_into_copies = [&](const CycMatrix& span, std::size_t copies) {
        std::vector<CycMatrix> blocks{span};
        const std::size_t copy_dim = span.cols() / copies;
        for (std::size_t a = 0; a < n && blocks.size() < copies; ++a)
            for (std::size_t b = 0; b < n && blocks.size() < copies; ++b) {
                CycMatrix avg = detail::reynolds_average(g, a, b, order);
                std::vector<CycMatrix> next;
                for (const auto& blk : blocks) {
                    if (blk.cols() == copy_dim) {
                        next.push_back(blk);
                        continue;
                    }
                    for (auto& piece : detail::fitting_split(blk, avg)) next.push_back(piece);
                }
                blocks = std::move(next);
            }
        for (const auto& blk : blocks)
            if (blk.cols() % copy_dim != 0)
                throw std::logic_error("commutant split produced a fractional copy");
        if (blocks.size() != copies)
            throw NoDecomposition("could not split an isotypical component into copies");
        return blocks;
    };

    for (const auto& c : iso.components) {
        if (c.multiplicity == 0) continue;
        if (!c.real_char && c.partner < c.chi) continue;  // handled with the partner
        const std::size_t mult = static_cast<std::size_t>(to_int64(c.multiplicity));
        const std::size_t deg = static_cast<std::size_t>(to_int64(c.degree));
        CycMatrix basis = projectors[c.chi].column_echelon();
        if (basis.cols() != mult * deg)
            throw std::logic_error("isotypical projector rank does not match the multiplicity");

        if (c.real_char) {
            if (deg == 1) {
                // echelon basis of a conjugation-fixed projector is itself
                // conjugation-fixed; pair consecutive basis vectors
                if (basis.conj() != basis)
                    throw std::logic_error("real character with non-real echelon basis");
                for (std::size_t j = 0; j + 1 < mult; j += 2) {
                    CycVector col(n, Cyclotomic::zero(order));
                    for (std::size_t i = 0; i < n; ++i)
                        col[i] = basis.at(i, j) + imag * basis.at(i, j + 1);
                    h10_cols.push_back(col);
                }
            } else {
                auto copies = split_into_copies(basis, mult);
                // match copies under conjugation
                std::vector<std::size_t> sigma(copies.size(), copies.size());
                for (std::size_t a = 0; a < copies.size(); ++a) {
                    CycMatrix ca = copies[a].conj();
                    for (std::size_t b = 0; b < copies.size(); ++b) {
                        if (CycMatrix::hcat(copies[b], ca).rank() == deg) { sigma[a] = b; break; }
                    }
                    if (sigma[a] == copies.size())
                        throw NoDecomposition("conjugation does not permute the copies");
                }
                std::vector<bool> used(copies.size(), false);
                std::vector<std::size_t> stable;
                for (std::size_t a = 0; a < copies.size(); ++a) {
                    if (used[a]) continue;
                    if (sigma[a] == a) { stable.push_back(a); continue; }
                    used[a] = used[sigma[a]] = true;
                    for (std::size_t j = 0; j < deg; ++j) h10_cols.push_back(copies[a].column(j));
                }
                if (stable.size() % 2 != 0)
                    throw NoDecomposition("odd number of conjugation-stable copies");
                for (std::size_t s = 0; s + 1 < stable.size(); s += 2) {
                    const CycMatrix& w1 = copies[stable[s]];
                    const CycMatrix& w2 = copies[stable[s + 1]];
                    // find an equivariant isomorphism w1 -> w2 among the
                    // averaged operators, then take the graph twisted by i
                    bool done = false;
                    for (std::size_t a = 0; a < n && !done; ++a)
                        for (std::size_t b = 0; b < n && !done; ++b) {
                            CycMatrix avg = detail::reynolds_average(g, a, b, order);
                            CycMatrix image = avg * w1;
                            if (CycMatrix::hcat(w2, image).rank() != deg) continue;
                            CycMatrix phi(order, deg, deg);
                            bool ok = true;
                            for (std::size_t j = 0; j < deg && ok; ++j) {
                                auto sol = w2.solve(image.column(j));
                                if (!sol) { ok = false; break; }
                                for (std::size_t r = 0; r < deg; ++r) phi.at(r, j) = (*sol)[r];
                            }
                            if (!ok || phi.rank() != deg) continue;
                            CycMatrix graph = w1 + (w2 * phi).scaled(imag);
                            for (std::size_t j = 0; j < deg; ++j)
                                h10_cols.push_back(graph.column(j));
                            done = true;
                        }
                    if (!done)
                        throw NoDecomposition("no usable intertwiner between stable copies");
                }
            }
        } else {
            const std::size_t take = static_cast<std::size_t>(to_int64(nu[c.chi])) * deg;
            if (deg == 1) {
                for (std::size_t j = 0; j < take; ++j) h10_cols.push_back(basis.column(j));
                CycMatrix cbar = basis.conj();
                for (std::size_t j = take; j < basis.cols(); ++j)
                    h10_cols.push_back(cbar.column(j));
            } else {
                auto copies = split_into_copies(basis, mult);
                std::size_t taken = 0;
                for (std::size_t a = 0; a < copies.size(); ++a) {
                    const CycMatrix src = taken < take ? copies[a] : copies[a].conj();
                    for (std::size_t j = 0; j < deg; ++j) h10_cols.push_back(src.column(j));
                    taken += deg;
                }
            }
        }
    }

    if (h10_cols.size() != n / 2)
        throw std::logic_error("H^{1,0} basis has the wrong size");
    CycMatrix w = CycMatrix::from_columns(order, n, h10_cols);
    CycMatrix a = CycMatrix::hcat(w, w.conj());
    CycMatrix d(order, n, n);
    for (std::size_t i = 0; i < n / 2; ++i) d.at(i, i) = imag;
    for (std::size_t i = n / 2; i < n; ++i) d.at(i, i) = Cyclotomic::zero(order) - imag;
    CycMatrix ainv;
    try {
        ainv = a.inverse();
    } catch (const std::domain_error&) {
        throw NoDecomposition("H^{1,0} basis does not complement its conjugate");
    }
    ComplexStructureSample out;
    out.field_order = order;
    out.j = a * d * ainv;
    out.h10 = w;

    if (!out.j.conj_fixed())
        throw NoDecomposition("constructed J has irrational entries");
    CycMatrix minus_one = CycMatrix::identity(order, n).scaled(Cyclotomic::zero(order) - one);
    if (out.j * out.j != minus_one)
        throw NoDecomposition("constructed J does not square to -1");
    for (const auto& gen : g.generators()) {
        CycMatrix l = CycMatrix::from_int(order, gen);
        if (out.j * l != l * out.j)
            throw NoDecomposition("constructed J does not commute with the group");
    }
    for (std::size_t j = 0; j < w.cols(); ++j) {
        CycVector jw = out.j.mul(w.column(j));
        for (std::size_t i = 0; i < n; ++i)
            if (jw[i] != imag * w.at(i, j))
                throw NoDecomposition("H^{1,0} is not the +i eigenspace");
    }
    for (const auto& c : iso.components) {
        std::size_t expect = c.real_char
            ? static_cast<std::size_t>(to_int64(c.multiplicity / 2 * c.degree))
            : static_cast<std::size_t>(to_int64(nu[c.chi] * c.degree));
        if ((projectors[c.chi] * w).rank() != expect)
            throw NoDecomposition("recovered Hodge type differs from the request");
    }

    // orientation of the real basis Re c_1, Im c_1, Re c_2, Im c_2, ...
    std::vector<std::vector<double>> real_mat(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n / 2; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            auto z = w.at(i, j).eval();
            real_mat[i][2 * j] = z.real();
            real_mat[i][2 * j + 1] = z.imag();
        }
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(real_mat[r][col]) > std::abs(real_mat[piv][col])) piv = r;
        if (std::abs(real_mat[piv][col]) < 1e-9) { det = 0.0; break; }
        if (piv != col) { std::swap(real_mat[piv], real_mat[col]); det = -det; }
        det *= real_mat[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            double f = real_mat[r][col] / real_mat[col][col];
            for (std::size_t cc = col; cc < n; ++cc) real_mat[r][cc] -= f * real_mat[col][cc];
        }
    }
    out.orientation = det > 1e-9 ? 1 : (det < -1e-9 ? -1 : 0);
    return out;
}

}  // namespace ghm
