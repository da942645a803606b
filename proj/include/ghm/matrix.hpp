#pragma once

// Dense exact matrices. IntMatrix is the workhorse (group elements, cocycle
// differentials); RatMatrix handles basis changes between commensurable
// lattices. Vectors are columns throughout.

#include "ghm/numeric.hpp"

#include <compare>
#include <ostream>

namespace ghm {

using RatVector = std::vector<Rat>;
using IntVector = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("IntMatrix: data size");
    }

    /// Row-major brace construction, e.g. IntMatrix::of({{1,0},{0,1}}).
    static IntMatrix of(const std::vector<std::vector<long long>>& rows) {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        IntMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    // Total order so matrices can key std::map (canonical element ordering).
    friend bool operator<(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
        if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            if (a.data_[k] != b.data_[k]) return a.data_[k] < b.data_[k];
        return false;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: size mismatch in product");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        check_same_shape(o);
        IntMatrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += o.data_[k];
        return out;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        check_same_shape(o);
        IntMatrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= o.data_[k];
        return out;
    }

    IntMatrix operator-() const {
        IntMatrix out = *this;
        for (auto& v : out.data_) v = -v;
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    IntVector mul(const IntVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector size");
        IntVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

    RatVector mul(const RatVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector size");
        RatVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += Rat(at(i, j)) * v[j];
        return out;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != Int(i == j ? 1 : 0)) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_) if (v != 0) return false;
        return true;
    }

    Int trace() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix: trace of non-square");
        Int t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    /// Fraction-free (Bareiss) determinant.
    Int det() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix: det of non-square");
        std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Int sign = 1, prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a.at(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && a.at(p, k) == 0) ++p;
                if (p == n) return 0;
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            prev = a.at(k, k);
        }
        return sign * a.at(n - 1, n - 1);
    }

private:
    void check_same_shape(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

inline std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? " [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m.at(i, j);
        os << "]";
    }
    return os << "]";
}

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    explicit RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Rat(m.at(i, j));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Columns are the given basis vectors.
    RatVector column(std::size_t j) const {
        RatVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    static RatMatrix from_columns(const std::vector<RatVector>& cols) {
        std::size_t c = cols.size(), r = c ? cols[0].size() : 0;
        RatMatrix m(r, c);
        for (std::size_t j = 0; j < c; ++j) {
            if (cols[j].size() != r) throw std::invalid_argument("RatMatrix: ragged columns");
            for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: size mismatch in product");
        RatMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    RatVector mul(const RatVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("RatMatrix: vector size");
        RatVector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        return out;
    }

    /// Gauss-Jordan inverse; throws std::domain_error when singular.
    RatMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse of non-square");
        std::size_t n = rows_;
        RatMatrix a = *this, inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t p = col;
            while (p < n && a.at(p, col) == 0) ++p;
            if (p == n) throw std::domain_error("RatMatrix: singular");
            if (p != col)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(a.at(col, j), a.at(p, j));
                    std::swap(inv.at(col, j), inv.at(p, j));
                }
            Rat pivot = a.at(col, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(col, j) /= pivot;
                inv.at(col, j) /= pivot;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == col || a.at(i, col) == 0) continue;
                Rat f = a.at(i, col);
                for (std::size_t j = 0; j < n; ++j) {
                    a.at(i, j) -= f * a.at(col, j);
                    inv.at(i, j) -= f * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    Rat det() const {
        if (rows_ != cols_) throw std::invalid_argument("RatMatrix: det of non-square");
        std::size_t n = rows_;
        RatMatrix a = *this;
        Rat d = 1;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t p = col;
            while (p < n && a.at(p, col) == 0) ++p;
            if (p == n) return 0;
            if (p != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a.at(col, j), a.at(p, j));
                d = -d;
            }
            d *= a.at(col, col);
            Rat pivot = a.at(col, col);
            for (std::size_t i = col + 1; i < n; ++i) {
                if (a.at(i, col) == 0) continue;
                Rat f = a.at(i, col) / pivot;
                for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            }
        }
        return d;
    }

    bool is_integral() const {
        for (const auto& v : data_) if (!is_integer(v)) return false;
        return true;
    }

    IntMatrix to_int() const {
        if (!is_integral()) throw std::domain_error("RatMatrix: not integral");
        IntMatrix out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = num(at(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// -- column vector helpers ---------------------------------------------------

inline RatVector rat_vector(const IntVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RatVector sub(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
    RatVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline RatVector scale(const Rat& c, const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

inline RatVector mod1(const RatVector& v) {
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod1(v[i]);
    return out;
}

inline bool is_integral(const RatVector& v) {
    for (const auto& x : v) if (!is_integer(x)) return false;
    return true;
}

inline bool in_scaled_lattice(const RatVector& v, const Int& d) {
    for (const auto& x : v) if (!in_scaled_lattice(x, d)) return false;
    return true;
}

inline IntVector to_int_vector(const RatVector& v) {
    if (!is_integral(v)) throw std::domain_error("to_int_vector: not integral");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = num(v[i]);
    return out;
}

inline bool is_zero(const RatVector& v) {
    for (const auto& x : v) if (x != 0) return false;
    return true;
}

/// Common denominator (lcm) of all entries; 1 for the empty vector.
inline Int common_denominator(const RatVector& v) {
    Int d = 1;
    for (const auto& x : v) d = lcm(d, den(x));
    return d;
}

}  // namespace ghm
