#pragma once

// Finite subgroups of GL(n,Z) generated from explicit matrices. Elements are
// closed under products with a hard cap, then canonically ordered: identity
// first, the rest sorted by the entrywise total order. All tables (product,
// inverse, conjugacy classes, generator words) refer to canonical indices.

#include "ghm/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ghm {

struct NotFiniteError : std::runtime_error {
    explicit NotFiniteError(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnimodularError : std::runtime_error {
    explicit NotUnimodularError(const std::string& what) : std::runtime_error(what) {}
};

struct ConjugacyClass {
    std::size_t rep;                   // least member index
    std::vector<std::size_t> members;  // ascending
};

class FiniteMatrixGroup {
public:
    static constexpr std::size_t kDefaultLimit = 10000;

    /// Closes the generators under multiplication. Throws NotUnimodularError
    /// for |det| != 1 generators and NotFiniteError past the element cap.
    static FiniteMatrixGroup from_generators(std::size_t n, std::vector<IntMatrix> gens,
                                             std::size_t limit = kDefaultLimit) {
        FiniteMatrixGroup g;
        g.n_ = n;
        g.gens_ = std::move(gens);
        for (const auto& m : g.gens_) {
            if (m.rows() != n || m.cols() != n)
                throw std::invalid_argument("FiniteMatrixGroup: generator shape mismatch");
            if (abs(m.det()) != 1)
                throw NotUnimodularError("generator is not invertible over Z");
        }

        std::map<IntMatrix, std::size_t> seen;
        std::vector<IntMatrix> pool;
        std::vector<std::vector<std::size_t>> pool_words;
        auto push = [&](const IntMatrix& m, std::vector<std::size_t> w) {
            if (seen.count(m)) return false;
            if (pool.size() >= limit)
                throw NotFiniteError("group closure exceeded element limit");
            seen.emplace(m, pool.size());
            pool.push_back(m);
            pool_words.push_back(std::move(w));
            return true;
        };
        push(IntMatrix::identity(n), {});
        for (std::size_t head = 0; head < pool.size(); ++head)
            for (std::size_t k = 0; k < g.gens_.size(); ++k) {
                IntMatrix prod = pool[head] * g.gens_[k];
                auto w = pool_words[head];
                w.push_back(k);
                push(prod, std::move(w));
            }

        // canonical order: identity, then entrywise-lex on the rest
        std::vector<std::size_t> perm(pool.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::sort(perm.begin() + 1, perm.end(),
                  [&](std::size_t a, std::size_t b) { return pool[a] < pool[b]; });
        g.elements_.resize(pool.size());
        g.words_.resize(pool.size());
        std::map<IntMatrix, std::size_t> index;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            g.elements_[i] = pool[perm[i]];
            g.words_[i] = pool_words[perm[i]];
            index.emplace(g.elements_[i], i);
        }
        g.index_ = std::move(index);

        std::size_t sz = g.elements_.size();
        g.mult_.assign(sz, std::vector<std::size_t>(sz));
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j)
                g.mult_[i][j] = g.index_.at(g.elements_[i] * g.elements_[j]);
        g.inv_.assign(sz, 0);
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j)
                if (g.mult_[i][j] == 0) {
                    g.inv_[i] = j;
                    break;
                }
        g.build_classes();
        return g;
    }

    std::size_t degree() const { return n_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<IntMatrix>& elements() const { return elements_; }
    const IntMatrix& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<IntMatrix>& generators() const { return gens_; }

    std::size_t mult(std::size_t i, std::size_t j) const { return mult_[i][j]; }
    std::size_t inverse(std::size_t i) const { return inv_[i]; }

    std::size_t index_of(const IntMatrix& m) const {
        auto it = index_.find(m);
        if (it == index_.end()) throw std::invalid_argument("element not in group");
        return it->second;
    }

    bool contains(const IntMatrix& m) const { return index_.count(m) != 0; }

    /// Word in generator indices whose left-to-right product is element i.
    const std::vector<std::size_t>& word(std::size_t i) const { return words_[i]; }

    std::size_t power(std::size_t i, Int k) const {
        std::size_t base = i, acc = 0;
        Int m = element_order(i);
        k %= m;
        if (k < 0) k += m;
        while (k > 0) {
            if ((k & 1) != 0) acc = mult_[acc][base];
            base = mult_[base][base];
            k >>= 1;
        }
        return acc;
    }

    Int element_order(std::size_t i) const {
        Int ord = 1;
        std::size_t cur = i;
        while (cur != 0) {
            cur = mult_[cur][i];
            ++ord;
        }
        return ord;
    }

    Int exponent() const {
        Int e = 1;
        for (std::size_t i = 0; i < size(); ++i) e = lcm(e, element_order(i));
        return e;
    }

    bool is_abelian() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (mult_[i][j] != mult_[j][i]) return false;
        return true;
    }

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    std::size_t class_of(std::size_t element) const { return class_of_[element]; }

private:
    void build_classes() {
        std::size_t sz = size();
        class_of_.assign(sz, sz);
        for (std::size_t i = 0; i < sz; ++i) {
            if (class_of_[i] != sz) continue;
            ConjugacyClass c;
            c.rep = i;
            std::set<std::size_t> orbit;
            for (std::size_t k = 0; k < sz; ++k)
                orbit.insert(mult_[mult_[k][i]][inv_[k]]);
            c.members.assign(orbit.begin(), orbit.end());
            std::size_t ci = classes_.size();
            for (auto m : c.members) class_of_[m] = ci;
            classes_.push_back(std::move(c));
        }
    }

    std::size_t n_ = 0;
    std::vector<IntMatrix> gens_;
    std::vector<IntMatrix> elements_;
    std::vector<std::vector<std::size_t>> words_;
    std::map<IntMatrix, std::size_t> index_;
    std::vector<std::vector<std::size_t>> mult_;
    std::vector<std::size_t> inv_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::size_t> class_of_;
};

}  // namespace ghm
