#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghm/cyclotomic.hpp"
#include "ghm/group.hpp"

namespace ghm {

// Raised when the modular character computation cannot be certified exact.
struct LiftFailed : public std::runtime_error {
    explicit LiftFailed(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an inner product that must be a non-negative integer is not.
struct NotIntegral : public std::runtime_error {
    explicit NotIntegral(const std::string& what) : std::runtime_error(what) {}
};

// Dense linear algebra over F_p with p small enough that products fit int64.
namespace modp {

using Row = std::vector<long long>;
using Mat = std::vector<Row>;

inline long long normp(long long a, long long p) {
    a %= p;
    return a < 0 ? a + p : a;
}

inline long long pow_mod(long long a, long long k, long long p) {
    long long r = 1 % p;
    a = normp(a, p);
    while (k > 0) {
        if (k & 1) r = r * a % p;
        a = a * a % p;
        k >>= 1;
    }
    return r;
}

inline long long inv_mod(long long a, long long p) { return pow_mod(a, p - 2, p); }

inline Mat mat_mul(const Mat& a, const Mat& b, long long p) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat c(n, Row(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % p;
        }
    return c;
}

// Row echelon with leading-column pivoting. Deterministic: the pivot is the
// first nonzero entry scanning rows top to bottom.
inline std::size_t rref(Mat& a, long long p, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    if (pivot_cols) pivot_cols->clear();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && a[sel][c] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        long long inv = inv_mod(normp(a[r][c], p), p);
        for (auto& x : a[r]) x = normp(x, p) * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            long long f = normp(a[i][c], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = normp(a[i][j] - f * a[r][j], p);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

// Kernel of the square matrix a, as column vectors. Basis vectors come from
// the free columns in ascending order, so the result is deterministic.
inline std::vector<Row> kernel(Mat a, long long p) {
    std::size_t n = a.size();
    std::vector<std::size_t> piv;
    rref(a, p, &piv);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<Row> basis;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_piv[c]) continue;
        Row v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = normp(-a[r][c], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves basis * x = rhs where basis has full column rank; both are given by
// columns. Used to restrict an invariant operator to a subspace.
inline Mat solve_in_basis(const std::vector<Row>& basis, const std::vector<Row>& rhs,
                          long long p) {
    std::size_t n = basis[0].size(), k = basis.size(), m = rhs.size();
    Mat aug(n, Row(k + m, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) aug[i][j] = basis[j][i];
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < n; ++i) aug[i][k + j] = rhs[j][i];
    std::vector<std::size_t> piv;
    rref(aug, p, &piv);
    Mat x(k, Row(m, 0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= k) throw LiftFailed("subspace is not invariant");
        for (std::size_t j = 0; j < m; ++j) x[piv[r]][j] = aug[r][k + j];
    }
    return x;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime p = 1 (mod e) with p > bound. Such p never divides the group
// order: a prime divisor of |G| divides the exponent e < p.
inline long long find_prime(long long e, long long bound) {
    long long p = e + 1;
    while (p <= bound || !is_prime(p)) p += e;
    return p;
}

inline long long primitive_root(long long p) {
    std::vector<long long> qs;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            qs.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) qs.push_back(m);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw LiftFailed("no primitive root found");
}

}  // namespace modp

// Exact irreducible character table. Values live in Q(zeta_e) where e is the
// group exponent. Rows are canonically ordered: trivial character first, the
// rest by degree then lexicographically by value.
class CharacterTable {
public:
    static CharacterTable build(const FiniteMatrixGroup& g, bool force_modular = false) {
        CharacterTable t(g);
        if (g.is_abelian() && !force_modular)
            t.rows_ = build_abelian(g, t.exponent_);
        else
            t.rows_ = build_modular(g, t.exponent_);
        t.sort_rows();
        t.verify_orthogonality();
        t.pair_conjugates();
        return t;
    }

    const FiniteMatrixGroup& group() const { return group_; }
    long long exponent_order() const { return exponent_; }
    std::size_t num_chars() const { return rows_.size(); }
    std::size_t num_classes() const { return rows_.empty() ? 0 : rows_[0].size(); }

    const Cyclotomic& value(std::size_t chi, std::size_t cls) const {
        return rows_.at(chi).at(cls);
    }
    const std::vector<Cyclotomic>& row(std::size_t chi) const { return rows_.at(chi); }

    Int degree(std::size_t chi) const {
        Rat d = rows_.at(chi)[0].to_rational();
        return numerator(d);
    }

    // Index of the entrywise complex conjugate character.
    std::size_t conjugate_partner(std::size_t chi) const { return partner_.at(chi); }
    bool is_real_char(std::size_t chi) const { return partner_.at(chi) == chi; }

private:
    explicit CharacterTable(const FiniteMatrixGroup& g)
        : group_(g), exponent_(to_int64(g.exponent())) {}

    FiniteMatrixGroup group_;
    long long exponent_;
    std::vector<std::vector<Cyclotomic>> rows_;
    std::vector<std::size_t> partner_;

    // Every character of an abelian group is determined by one exponent per
    // generator; a candidate assignment is a character iff it respects every
    // edge x -> x*gen of the Cayley graph.
    static std::vector<std::vector<Cyclotomic>> build_abelian(const FiniteMatrixGroup& g,
                                                              long long e) {
        std::size_t sz = g.size(), ngen = g.generators().size();
        std::vector<std::size_t> gen_idx(ngen);
        std::vector<long long> gen_ord(ngen);
        for (std::size_t k = 0; k < ngen; ++k) {
            gen_idx[k] = g.index_of(g.generators()[k]);
            gen_ord[k] = to_int64(g.element_order(gen_idx[k]));
        }
        std::vector<std::vector<Cyclotomic>> rows;
        std::vector<long long> t(ngen, 0);
        std::vector<long long> a(sz);
        auto try_candidate = [&]() {
            std::vector<long long> gen_exp(ngen);
            for (std::size_t k = 0; k < ngen; ++k) gen_exp[k] = e / gen_ord[k] * t[k] % e;
            for (std::size_t x = 0; x < sz; ++x) {
                long long acc = 0;
                for (std::size_t letter : g.word(x)) acc = (acc + gen_exp[letter]) % e;
                a[x] = acc;
            }
            for (std::size_t x = 0; x < sz; ++x)
                for (std::size_t k = 0; k < ngen; ++k)
                    if (a[g.mult(x, gen_idx[k])] != (a[x] + gen_exp[k]) % e) return;
            std::vector<Cyclotomic> row;
            row.reserve(g.classes().size());
            for (const auto& cls : g.classes()) row.push_back(Cyclotomic::zeta(e, a[cls.rep]));
            rows.push_back(std::move(row));
        };
        std::size_t total = 1;
        for (auto o : gen_ord) total *= static_cast<std::size_t>(o);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t k = 0; k < ngen; ++k) {
                t[k] = static_cast<long long>(c % static_cast<std::size_t>(gen_ord[k]));
                c /= static_cast<std::size_t>(gen_ord[k]);
            }
            try_candidate();
        }
        if (rows.size() != sz)
            throw LiftFailed("abelian dual enumeration found " + std::to_string(rows.size()) +
                             " characters, expected " + std::to_string(sz));
        return rows;
    }

    // Modular route: split the class algebra over F_p into common eigenvectors
    // of the class-sum matrices, then lift eigenvalues to cyclotomic integers
    // through the power map. p > 2*sqrt(|G|) makes degrees and multiplicities
    // recoverable from their residues.
    static std::vector<std::vector<Cyclotomic>> build_modular(const FiniteMatrixGroup& g,
                                                              long long e) {
        const auto& classes = g.classes();
        std::size_t r = classes.size();
        long long order = static_cast<long long>(g.size());
        long long bound = 1;
        while (bound * bound <= 4 * order) ++bound;
        long long p = modp::find_prime(e, bound);
        long long z = modp::pow_mod(modp::primitive_root(p), (p - 1) / e, p);

        std::vector<long long> class_size(r), inv_class(r);
        for (std::size_t i = 0; i < r; ++i) {
            class_size[i] = static_cast<long long>(classes[i].members.size());
            inv_class[i] = static_cast<long long>(g.class_of(g.inverse(classes[i].rep)));
        }

        // class_mat[i][j][l] = #{(x,y) in C_i x C_j : xy = z_l}, z_l fixed.
        std::vector<modp::Mat> class_mat(r, modp::Mat(r, modp::Row(r, 0)));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                std::vector<long long> count(r, 0);
                for (std::size_t x : classes[i].members)
                    for (std::size_t y : classes[j].members)
                        ++count[g.class_of(g.mult(x, y))];
                for (std::size_t l = 0; l < r; ++l) {
                    if (count[l] % class_size[l] != 0)
                        throw LiftFailed("class multiplication constants not integral");
                    class_mat[i][j][l] = count[l] / class_size[l] % p;
                }
            }
        }

        // Split F_p^r into one-dimensional joint eigenspaces.
        std::vector<std::vector<modp::Row>> spaces;
        {
            std::vector<modp::Row> full;
            for (std::size_t i = 0; i < r; ++i) {
                modp::Row v(r, 0);
                v[i] = 1;
                full.push_back(std::move(v));
            }
            spaces.push_back(std::move(full));
        }
        for (std::size_t i = 1; i < r; ++i) {
            std::vector<std::vector<modp::Row>> next;
            for (auto& sp : spaces) {
                if (sp.size() == 1) {
                    next.push_back(std::move(sp));
                    continue;
                }
                std::vector<modp::Row> image;
                for (const auto& v : sp) {
                    modp::Row w(r, 0);
                    for (std::size_t row = 0; row < r; ++row)
                        for (std::size_t col = 0; col < r; ++col)
                            w[row] = (w[row] + class_mat[i][row][col] * v[col]) % p;
                    image.push_back(std::move(w));
                }
                modp::Mat x = modp::solve_in_basis(sp, image, p);
                std::size_t k = sp.size(), found = 0;
                for (long long lam = 0; lam < p && found < k; ++lam) {
                    modp::Mat shifted = x;
                    for (std::size_t d = 0; d < k; ++d)
                        shifted[d][d] = modp::normp(shifted[d][d] - lam, p);
                    auto ker = modp::kernel(shifted, p);
                    if (ker.empty()) continue;
                    found += ker.size();
                    std::vector<modp::Row> sub;
                    for (const auto& kv : ker) {
                        modp::Row v(r, 0);
                        for (std::size_t d = 0; d < k; ++d) {
                            if (kv[d] == 0) continue;
                            for (std::size_t row = 0; row < r; ++row)
                                v[row] = (v[row] + kv[d] * sp[d][row]) % p;
                        }
                        sub.push_back(std::move(v));
                    }
                    next.push_back(std::move(sub));
                }
                if (found != k) throw LiftFailed("class-sum operator not diagonalizable");
            }
            spaces = std::move(next);
            bool done = true;
            for (const auto& sp : spaces) done = done && sp.size() == 1;
            if (done) break;
        }
        if (spaces.size() != r) throw LiftFailed("joint eigenspace count mismatch");

        long long inv_e = modp::inv_mod(e % p, p);
        std::vector<std::vector<Cyclotomic>> rows;
        for (const auto& sp : spaces) {
            const auto& raw = sp[0];
            if (raw[0] % p == 0) throw LiftFailed("eigenvector vanishes at the identity class");
            long long scale = modp::inv_mod(modp::normp(raw[0], p), p);
            std::vector<long long> omega(r);
            for (std::size_t i = 0; i < r; ++i) omega[i] = modp::normp(raw[i], p) * scale % p;

            long long s = 0;
            for (std::size_t i = 0; i < r; ++i) {
                long long term = omega[i] * omega[inv_class[i]] % p;
                s = (s + term * modp::inv_mod(class_size[i] % p, p)) % p;
            }
            if (s == 0) throw LiftFailed("degree residue is singular");
            long long t = order % p * modp::inv_mod(s, p) % p;
            long long deg = 0;
            for (long long d = 1; d * d <= order; ++d)
                if (d * d % p == t) {
                    deg = d;
                    break;
                }
            if (deg == 0) throw LiftFailed("no admissible degree matches the residue");

            std::vector<long long> chi_p(r);
            for (std::size_t i = 0; i < r; ++i)
                chi_p[i] = omega[i] * deg % p * modp::inv_mod(class_size[i] % p, p) % p;

            std::vector<Cyclotomic> row;
            for (std::size_t i = 0; i < r; ++i) {
                std::vector<long long> chi_pow(e);
                for (long long tt = 0; tt < e; ++tt)
                    chi_pow[tt] = chi_p[g.class_of(g.power(classes[i].rep, Int(tt)))];
                Cyclotomic val = Cyclotomic::zero(e);
                long long mult_sum = 0;
                for (long long k = 0; k < e; ++k) {
                    long long m = 0;
                    for (long long tt = 0; tt < e; ++tt)
                        m = (m + chi_pow[tt] * modp::pow_mod(z, (e - k) * tt % e, p)) % p;
                    m = m * inv_e % p;
                    mult_sum += m;
                    if (m != 0) val = val + Cyclotomic::zeta(e, k) * Rat(Int(m));
                }
                if (mult_sum != deg)
                    throw LiftFailed("multiplicities do not sum to the degree");
                row.push_back(val);
            }
            rows.push_back(std::move(row));
        }
        return rows;
    }

    void sort_rows() {
        std::sort(rows_.begin(), rows_.end(),
                  [](const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
                      Rat da = a[0].to_rational(), db = b[0].to_rational();
                      if (da != db) return da < db;
                      for (std::size_t i = 0; i < a.size(); ++i) {
                          if (a[i] == b[i]) continue;
                          return lex_less(a[i], b[i]);
                      }
                      return false;
                  });
        auto one = Cyclotomic::one(exponent_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            bool trivial = true;
            for (const auto& v : rows_[i]) trivial = trivial && v == one;
            if (trivial) {
                std::rotate(rows_.begin(), rows_.begin() + i, rows_.begin() + i + 1);
                return;
            }
        }
        throw LiftFailed("trivial character missing from the table");
    }

    void verify_orthogonality() {
        const auto& classes = group_.classes();
        std::size_t r = rows_.size();
        if (r != classes.size()) throw LiftFailed("character count differs from class count");
        Rat order(Int(group_.size()));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j) {
                Cyclotomic acc = Cyclotomic::zero(exponent_);
                for (std::size_t c = 0; c < r; ++c)
                    acc = acc + rows_[i][c] * rows_[j][c].conj() *
                                    Rat(Int(classes[c].members.size()));
                Cyclotomic want = i == j ? Cyclotomic::from_rat(exponent_, order)
                                         : Cyclotomic::zero(exponent_);
                if (acc != want) throw LiftFailed("row orthogonality fails exactly");
            }
        for (std::size_t c = 0; c < r; ++c)
            for (std::size_t d = c; d < r; ++d) {
                Cyclotomic acc = Cyclotomic::zero(exponent_);
                for (std::size_t i = 0; i < r; ++i)
                    acc = acc + rows_[i][c] * rows_[i][d].conj();
                Cyclotomic want =
                    c == d ? Cyclotomic::from_rat(
                                 exponent_, order / Rat(Int(classes[c].members.size())))
                           : Cyclotomic::zero(exponent_);
                if (acc != want) throw LiftFailed("column orthogonality fails exactly");
            }
    }

    void pair_conjugates() {
        std::size_t r = rows_.size();
        partner_.assign(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                bool match = true;
                for (std::size_t c = 0; c < rows_[i].size() && match; ++c)
                    match = rows_[i][c].conj() == rows_[j][c];
                if (match) {
                    partner_[i] = j;
                    break;
                }
            }
            if (partner_[i] == r) throw LiftFailed("conjugate character missing from the table");
        }
    }
};

// Inner product <f, chi> scaled by |G|; must land on a non-negative integer
// for the class functions this library feeds in (permutation-like traces).
inline Int multiplicity(const CharacterTable& table, const std::vector<Cyclotomic>& classfun,
                        std::size_t chi) {
    const auto& classes = table.group().classes();
    if (classfun.size() != classes.size())
        throw std::invalid_argument("class function has wrong length");
    long long e = table.exponent_order();
    Cyclotomic acc = Cyclotomic::zero(e);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        Cyclotomic f = classfun[c].order() == e ? classfun[c] : classfun[c].promote(e);
        acc = acc + f * table.value(chi, c).conj() * Rat(Int(classes[c].members.size()));
    }
    if (!acc.is_rational()) throw NotIntegral("multiplicity is not rational");
    Rat m = acc.to_rational() / Rat(Int(table.group().size()));
    if (denominator(m) != 1 || m < 0)
        throw NotIntegral("multiplicity " + format_rational(m) + " is not a non-negative integer");
    return numerator(m);
}

}  // namespace ghm
