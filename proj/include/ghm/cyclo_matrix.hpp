#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "ghm/cyclotomic.hpp"
#include "ghm/matrix.hpp"

namespace ghm {

using CycVector = std::vector<Cyclotomic>;

// Dense matrix over Q(zeta_m). All entries share the same field order.
class CycMatrix {
public:
    CycMatrix() : CycMatrix(4, 0, 0) {}
    CycMatrix(long long order, std::size_t rows, std::size_t cols)
        : order_(order), rows_(rows), cols_(cols),
          data_(rows * cols, Cyclotomic::zero(order)) {}

    static CycMatrix identity(long long order, std::size_t n) {
        CycMatrix m(order, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::one(order);
        return m;
    }

    static CycMatrix from_int(long long order, const IntMatrix& a) {
        CycMatrix m(order, a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                m.at(i, j) = Cyclotomic::from_rat(order, Rat(a.at(i, j)));
        return m;
    }

    long long order() const { return order_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cyclotomic& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Cyclotomic& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    CycVector column(std::size_t j) const {
        CycVector v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
        return v;
    }

    bool operator==(const CycMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const CycMatrix& o) const { return !(*this == o); }

    CycMatrix operator*(const CycMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("CycMatrix: shape mismatch");
        CycMatrix r(order_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + at(i, k) * o.at(k, j);
            }
        return r;
    }

    CycMatrix operator+(const CycMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("CycMatrix: shape mismatch");
        CycMatrix r(order_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
        return r;
    }

    CycMatrix operator-(const CycMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("CycMatrix: shape mismatch");
        CycMatrix r(order_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
        return r;
    }

    CycMatrix scaled(const Cyclotomic& c) const {
        CycMatrix r(order_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * c;
        return r;
    }

    CycMatrix conj() const {
        CycMatrix r(order_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].conj();
        return r;
    }

    bool conj_fixed() const {
        for (const auto& v : data_)
            if (!v.is_real()) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!v.is_zero()) return false;
        return true;
    }

    CycVector mul(const CycVector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("CycMatrix: vector length mismatch");
        CycVector r(rows_, Cyclotomic::zero(order_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (at(i, j).is_zero() || v[j].is_zero()) continue;
                r[i] = r[i] + at(i, j) * v[j];
            }
        return r;
    }

    // Columns pasted side by side.
    static CycMatrix hcat(const CycMatrix& a, const CycMatrix& b) {
        if (a.rows_ != b.rows_) throw std::invalid_argument("CycMatrix: row mismatch");
        CycMatrix r(a.order_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static CycMatrix from_columns(long long order, std::size_t rows,
                                  const std::vector<CycVector>& cols) {
        CycMatrix r(order, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw std::invalid_argument("CycMatrix: ragged columns");
            for (std::size_t i = 0; i < rows; ++i) r.at(i, j) = cols[j][i];
        }
        return r;
    }

    // Reduced column echelon basis of the column span. Deterministic: pivots
    // are found scanning rows top to bottom, columns left to right.
    CycMatrix column_echelon() const {
        CycMatrix work = *this;
        std::size_t lead = 0;
        std::vector<std::size_t> pivot_cols;
        for (std::size_t r = 0; r < rows_ && lead < cols_; ++r) {
            std::size_t sel = lead;
            while (sel < cols_ && work.at(r, sel).is_zero()) ++sel;
            if (sel == cols_) continue;
            for (std::size_t i = 0; i < rows_; ++i) std::swap(work.at(i, sel), work.at(i, lead));
            Cyclotomic inv = work.at(r, lead).inverse();
            for (std::size_t i = 0; i < rows_; ++i) work.at(i, lead) = work.at(i, lead) * inv;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == lead || work.at(r, j).is_zero()) continue;
                Cyclotomic f = work.at(r, j);
                for (std::size_t i = 0; i < rows_; ++i)
                    work.at(i, j) = work.at(i, j) - work.at(i, lead) * f;
            }
            pivot_cols.push_back(lead);
            ++lead;
        }
        CycMatrix out(order_, rows_, pivot_cols.size());
        for (std::size_t j = 0; j < pivot_cols.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) out.at(i, j) = work.at(i, pivot_cols[j]);
        return out;
    }

    std::size_t rank() const { return column_echelon().cols(); }

    // Basis of the right kernel, as columns.
    CycMatrix kernel() const {
        CycMatrix work = *this;
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && work.at(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            for (std::size_t j = 0; j < cols_; ++j) std::swap(work.at(sel, j), work.at(r, j));
            Cyclotomic inv = work.at(r, c).inverse();
            for (std::size_t j = 0; j < cols_; ++j) work.at(r, j) = work.at(r, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || work.at(i, c).is_zero()) continue;
                Cyclotomic f = work.at(i, c);
                for (std::size_t j = 0; j < cols_; ++j)
                    work.at(i, j) = work.at(i, j) - work.at(r, j) * f;
            }
            piv.push_back(c);
            ++r;
        }
        std::vector<bool> is_piv(cols_, false);
        for (auto c : piv) is_piv[c] = true;
        CycMatrix out(order_, cols_, 0);
        std::vector<CycVector> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_piv[c]) continue;
            CycVector v(cols_, Cyclotomic::zero(order_));
            v[c] = Cyclotomic::one(order_);
            for (std::size_t t = 0; t < piv.size(); ++t)
                v[piv[t]] = Cyclotomic::zero(order_) - work.at(t, c);
            basis.push_back(std::move(v));
        }
        return from_columns(order_, cols_, basis);
    }

    CycMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("CycMatrix: not square");
        CycMatrix work = *this;
        CycMatrix inv = identity(order_, rows_);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t sel = c;
            while (sel < rows_ && work.at(sel, c).is_zero()) ++sel;
            if (sel == rows_) throw std::domain_error("CycMatrix: singular");
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(work.at(sel, j), work.at(c, j));
                std::swap(inv.at(sel, j), inv.at(c, j));
            }
            Cyclotomic f = work.at(c, c).inverse();
            for (std::size_t j = 0; j < cols_; ++j) {
                work.at(c, j) = work.at(c, j) * f;
                inv.at(c, j) = inv.at(c, j) * f;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == c || work.at(i, c).is_zero()) continue;
                Cyclotomic g = work.at(i, c);
                for (std::size_t j = 0; j < cols_; ++j) {
                    work.at(i, j) = work.at(i, j) - work.at(c, j) * g;
                    inv.at(i, j) = inv.at(i, j) - inv.at(c, j) * g;
                }
            }
        }
        return inv;
    }

    // Coordinates x with (*this) x = b, for a matrix whose columns are
    // independent; nullopt when b is outside the column span.
    std::optional<CycVector> solve(const CycVector& b) const {
        CycMatrix aug = hcat(*this, from_columns(order_, rows_, {b}));
        CycMatrix work = aug;
        std::vector<std::size_t> piv;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && work.at(sel, c).is_zero()) ++sel;
            if (sel == rows_) continue;
            for (std::size_t j = 0; j < work.cols(); ++j)
                std::swap(work.at(sel, j), work.at(r, j));
            Cyclotomic f = work.at(r, c).inverse();
            for (std::size_t j = 0; j < work.cols(); ++j) work.at(r, j) = work.at(r, j) * f;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || work.at(i, c).is_zero()) continue;
                Cyclotomic g = work.at(i, c);
                for (std::size_t j = 0; j < work.cols(); ++j)
                    work.at(i, j) = work.at(i, j) - work.at(r, j) * g;
            }
            piv.push_back(c);
            ++r;
        }
        for (std::size_t i = r; i < rows_; ++i)
            if (!work.at(i, cols_).is_zero()) return std::nullopt;
        CycVector x(cols_, Cyclotomic::zero(order_));
        for (std::size_t t = 0; t < piv.size(); ++t) x[piv[t]] = work.at(t, cols_);
        return x;
    }

private:
    long long order_;
    std::size_t rows_, cols_;
    std::vector<Cyclotomic> data_;
};

}  // namespace ghm
