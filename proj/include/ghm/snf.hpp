#pragma once

// Smith and Hermite normal forms plus the solvers built on them: integer and
// rational linear solves, integer kernels, and the fractional congruence
// solver A*x + b in (1/d)Z^m that drives affine realization questions.

#include "ghm/matrix.hpp"

namespace ghm {

struct SmithForm {
    IntMatrix U;  // rows x rows, |det| = 1
    IntMatrix D;  // diagonal, d_i | d_{i+1}, entries >= 0
    IntMatrix V;  // cols x cols, |det| = 1
};

namespace detail {

// Position of the minimal-magnitude nonzero entry in A[t.., t..], if any.
inline bool locate_pivot(const IntMatrix& A, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < A.rows(); ++i)
        for (std::size_t j = t; j < A.cols(); ++j) {
            const Int& v = A.at(i, j);
            if (v == 0) continue;
            Int a = abs(v);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

inline void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

inline void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

// row[a] -= q * row[b]
inline void add_row(IntMatrix& M, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < M.cols(); ++j) M.at(a, j) -= q * M.at(b, j);
}

// col[a] -= q * col[b]
inline void add_col(IntMatrix& M, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < M.rows(); ++i) M.at(i, a) -= q * M.at(i, b);
}

}  // namespace detail

/// U*A*V = D with U, V unimodular and nonnegative diagonal D, d_i | d_{i+1}.
/// track_u can be false when only D and V are needed (kernel extraction);
/// skipping U matters on the tall differential matrices.
inline SmithForm smith_normal_form(const IntMatrix& A, bool track_u = true) {
    using namespace detail;
    std::size_t m = A.rows(), n = A.cols();
    SmithForm f{IntMatrix::identity(track_u ? m : 0), A, IntMatrix::identity(n)};
    IntMatrix& D = f.D;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        std::size_t pi, pj;
        if (!locate_pivot(D, t, pi, pj)) break;
        swap_rows(D, t, pi);
        if (track_u) swap_rows(f.U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(f.V, t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = floor_div(D.at(i, t), D.at(t, t));
                add_row(D, i, t, q);
                if (track_u) add_row(f.U, i, t, q);
                if (D.at(i, t) != 0) {  // remainder becomes the smaller pivot
                    swap_rows(D, t, i);
                    if (track_u) swap_rows(f.U, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = floor_div(D.at(t, j), D.at(t, t));
                add_col(D, j, t, q);
                add_col(f.V, j, t, q);
                if (D.at(t, j) != 0) {
                    swap_cols(D, t, j);
                    swap_cols(f.V, t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // divisibility fix-up: pivot must divide the remaining block
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        add_row(D, t, i, Int(-1));
                        if (track_u) add_row(f.U, t, i, Int(-1));
                        fixed = true;
                    }
            if (!fixed) break;
        }

        if (D.at(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) D.at(t, j) = -D.at(t, j);
            if (track_u)
                for (std::size_t j = 0; j < m; ++j) f.U.at(t, j) = -f.U.at(t, j);
        }
    }
    return f;
}

inline std::size_t snf_rank(const IntMatrix& D) {
    std::size_t r = 0;
    while (r < std::min(D.rows(), D.cols()) && D.at(r, r) != 0) ++r;
    return r;
}

/// Basis of { x : A*x = 0 } as columns; the basis spans the kernel lattice
/// saturated in Z^n (columns of V past the rank).
inline IntMatrix integer_kernel(const IntMatrix& A) {
    SmithForm f = smith_normal_form(A, /*track_u=*/false);
    std::size_t r = snf_rank(f.D), n = A.cols();
    IntMatrix K(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) K.at(i, j - r) = f.V.at(i, j);
    return K;
}

/// Solves A*x = b over Z.
inline std::optional<IntVector> integer_solve(const IntMatrix& A, const IntVector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("integer_solve: size mismatch");
    SmithForm f = smith_normal_form(A);
    std::size_t r = snf_rank(f.D), n = A.cols();
    IntVector ub = f.U.mul(b);
    IntVector z(n);
    for (std::size_t i = 0; i < r; ++i) {
        if (ub[i] % f.D.at(i, i) != 0) return std::nullopt;
        z[i] = ub[i] / f.D.at(i, i);
    }
    for (std::size_t i = r; i < b.size(); ++i)
        if (ub[i] != 0) return std::nullopt;
    return f.V.mul(z);
}

/// Solves A*x = b over Q.
inline std::optional<RatVector> rational_solve(const IntMatrix& A, const RatVector& b) {
    if (b.size() != A.rows()) throw std::invalid_argument("rational_solve: size mismatch");
    SmithForm f = smith_normal_form(A);
    std::size_t r = snf_rank(f.D), n = A.cols();
    RatVector ub = RatMatrix(f.U).mul(b);
    RatVector z(n);
    for (std::size_t i = 0; i < r; ++i) z[i] = ub[i] / Rat(f.D.at(i, i));
    for (std::size_t i = r; i < b.size(); ++i)
        if (ub[i] != 0) return std::nullopt;
    return RatMatrix(f.V).mul(z);
}

/// Least x (rational) with A*x + b in (1/d)Z^m, if one exists. Solvability is
/// read off the Smith form: beyond the rank the residue d*(U*b)_i must be
/// integral; below it any residue can be absorbed.
inline std::optional<RatVector> solve_congruence(const IntMatrix& A, const RatVector& b,
                                                 const Int& d) {
    if (b.size() != A.rows()) throw std::invalid_argument("solve_congruence: size mismatch");
    if (d <= 0) throw std::invalid_argument("solve_congruence: d must be positive");
    SmithForm f = smith_normal_form(A);
    std::size_t r = snf_rank(f.D), n = A.cols();
    RatVector ub = RatMatrix(f.U).mul(b);
    for (std::size_t i = r; i < b.size(); ++i)
        if (!in_scaled_lattice(ub[i], d)) return std::nullopt;
    RatVector z(n);
    for (std::size_t i = 0; i < r; ++i) z[i] = -ub[i] / Rat(f.D.at(i, i));
    return RatMatrix(f.V).mul(z);
}

/// Row Hermite form of the lattice spanned by the rows: echelon, positive
/// pivots, entries above a pivot reduced into [0, pivot). Zero rows dropped.
inline IntMatrix row_hermite(const IntMatrix& A) {
    using namespace detail;
    IntMatrix H = A;
    std::size_t m = H.rows(), n = H.cols(), r = 0;
    for (std::size_t col = 0; col < n && r < m; ++col) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (H.at(i, col) != 0 && (best == m || abs(H.at(i, col)) < abs(H.at(best, col))))
                    best = i;
            if (best == m) break;
            swap_rows(H, r, best);
            bool reduced = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H.at(i, col) == 0) continue;
                add_row(H, i, r, floor_div(H.at(i, col), H.at(r, col)));
                if (H.at(i, col) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (H.at(r, col) == 0) continue;
        if (H.at(r, col) < 0)
            for (std::size_t j = 0; j < n; ++j) H.at(r, j) = -H.at(r, j);
        for (std::size_t i = 0; i < r; ++i)
            add_row(H, i, r, floor_div(H.at(i, col), H.at(r, col)));
        ++r;
    }
    IntMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = H.at(i, j);
    return out;
}

/// Canonical basis (HNF rows) of the rational lattice generated by the given
/// vectors. Scales by the common denominator, reduces, scales back.
inline std::vector<RatVector> lattice_basis(const std::vector<RatVector>& gens, std::size_t dim) {
    Int q = 1;
    for (const auto& v : gens) {
        if (v.size() != dim) throw std::invalid_argument("lattice_basis: dimension mismatch");
        q = lcm(q, common_denominator(v));
    }
    IntMatrix rows(gens.size(), dim);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        RatVector scaled = scale(Rat(q), gens[i]);
        IntVector iv = to_int_vector(scaled);
        for (std::size_t j = 0; j < dim; ++j) rows.at(i, j) = iv[j];
    }
    IntMatrix H = row_hermite(rows);
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < H.rows(); ++i) {
        RatVector v(dim);
        for (std::size_t j = 0; j < dim; ++j) v[j] = Rat(H.at(i, j), q);
        out.push_back(v);
    }
    return out;
}

}  // namespace ghm
