#pragma once

// Shared test utilities: seeded randomness and small constructors.

#include "ghm/matrix.hpp"

#include <random>

namespace ghmtest {

using namespace ghm;

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                               int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

inline RatVector random_rat_vector(std::mt19937& rng, std::size_t n, int num_hi = 6,
                                   int den_hi = 4) {
    std::uniform_int_distribution<int> dn(-num_hi, num_hi), dd(1, den_hi);
    RatVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rat(dn(rng), dd(rng));
    return v;
}

inline RatVector rv(const std::vector<std::string>& entries) {
    RatVector v;
    for (const auto& s : entries) v.push_back(parse_rational(s));
    return v;
}

}  // namespace ghmtest
