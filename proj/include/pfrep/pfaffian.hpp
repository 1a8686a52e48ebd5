#ifndef PFREP_PFAFFIAN_HPP
#define PFREP_PFAFFIAN_HPP

// Skew-symmetric and square matrices over a CommutativeRing, the Pfaffian by
// expansion along the first row, a division-free determinant, and congruence
// X * A * X^t. All indices in the public API are 1-based.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "pfrep/error.hpp"
#include "pfrep/ring.hpp"

namespace pfrep {

template <CommutativeRing R>
struct UpperEntry {
    std::size_t i;
    std::size_t j;
    typename R::value_type value;
};

/// Even-order skew-symmetric matrix. Only the strict upper triangle is stored;
/// entry(j, i) is -entry(i, j) and the diagonal is zero in every ring.
template <CommutativeRing R>
class SkewMatrix {
public:
    using value_type = typename R::value_type;

    SkewMatrix(R ring, std::size_t size) : ring_(std::move(ring)), n_(size) {
        if (size % 2 != 0) throw ShapeError("skew matrix size must be even, got " + std::to_string(size));
        upper_.assign(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, ring_.zero());
    }

    const R& ring() const { return ring_; }
    std::size_t size() const { return n_; }

    value_type entry(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        if (i == j) return ring_.zero();
        if (i < j) return upper_[slot(i, j)];
        return ring_.neg(upper_[slot(j, i)]);
    }

    /// Strict-upper entry (i < j), by reference.
    const value_type& upper(std::size_t i, std::size_t j) const {
        check_upper(i, j);
        return upper_[slot(i, j)];
    }

    void set(std::size_t i, std::size_t j, value_type v) {
        check_upper(i, j);
        upper_[slot(i, j)] = ring_.canonical(v);
    }

    /// Nonzero strict-upper entries in row-major order.
    std::vector<UpperEntry<R>> nonzero_entries() const {
        std::vector<UpperEntry<R>> out;
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = i + 1; j <= n_; ++j)
                if (!ring_.is_zero(upper_[slot(i, j)])) out.push_back({i, j, upper_[slot(i, j)]});
        return out;
    }

    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t k = 0; k < a.upper_.size(); ++k)
            if (!a.ring_.eq(a.upper_[k], b.upper_[k])) return false;
        return true;
    }

private:
    R ring_;
    std::size_t n_;
    std::vector<value_type> upper_;

    std::size_t slot(std::size_t i, std::size_t j) const {
        const std::size_t r = i - 1, c = j - 1;
        return r * n_ - r * (r + 1) / 2 + (c - r - 1);
    }

    void check_index(std::size_t i) const {
        if (i < 1 || i > n_) throw IndexError("index " + std::to_string(i) + " out of range");
    }

    void check_upper(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        if (i >= j) throw IndexError("(" + std::to_string(i) + "," + std::to_string(j) + ") is not strictly upper");
    }
};

/// Builds a skew matrix from strict-upper (i, j, value) triples. Zero values
/// are dropped; duplicates and non-upper positions are rejected.
template <CommutativeRing R>
SkewMatrix<R> skew_from_upper(const R& ring, std::size_t size, const std::vector<UpperEntry<R>>& entries) {
    SkewMatrix<R> m(ring, size);
    std::vector<char> seen(size * size, 0);
    for (const auto& e : entries) {
        m.set(e.i, e.j, e.value);
        auto& s = seen[(e.i - 1) * size + (e.j - 1)];
        if (s) throw IndexError("duplicate entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
        s = 1;
    }
    return m;
}

/// Deletes rows and columns i and j, re-packing the survivors in order.
template <CommutativeRing R>
SkewMatrix<R> delete_rows_cols(const SkewMatrix<R>& a, std::size_t i, std::size_t j) {
    const std::size_t n = a.size();
    if (i == j || i < 1 || j < 1 || i > n || j > n) throw IndexError("invalid deletion pair");
    std::vector<std::size_t> keep;
    for (std::size_t k = 1; k <= n; ++k)
        if (k != i && k != j) keep.push_back(k);
    SkewMatrix<R> out(a.ring(), n - 2);
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = r + 1; c < keep.size(); ++c) out.set(r + 1, c + 1, a.upper(keep[r], keep[c]));
    return out;
}

/// Pf(A) by expansion along the first surviving row,
///   Pf(A) = sum_{j=2}^{2d} (-1)^j a_{1j} Pf(A^{[1,j]}),
/// with Pf of the empty matrix equal to one. Sub-Pfaffians are memoized on the
/// set of surviving indices, so at most 2^n subproblems are expanded.
template <CommutativeRing R>
typename R::value_type pfaffian(const SkewMatrix<R>& a) {
    using V = typename R::value_type;
    const std::size_t n = a.size();
    if (n > 62) throw ShapeError("matrix too large for subset memoization");
    const R& ring = a.ring();
    std::unordered_map<std::uint64_t, V> memo;

    auto rec = [&](auto&& self, std::uint64_t mask) -> V {
        if (mask == 0) return ring.one();
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        const int first = std::countr_zero(mask);
        const std::uint64_t rest = mask & (mask - 1);
        V sum = ring.zero();
        int position = 1;
        for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1) {
            ++position;
            const int j = std::countr_zero(scan);
            const V& aij = a.upper(first + 1, j + 1);
            if (ring.is_zero(aij)) continue;
            V term = ring.mul(aij, self(self, rest & ~(std::uint64_t{1} << j)));
            sum = (position % 2 == 0) ? ring.add(sum, term) : ring.sub(sum, term);
        }
        memo.emplace(mask, sum);
        return sum;
    };
    const std::uint64_t all = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
    return rec(rec, all);
}

template <CommutativeRing R>
class SquareMatrix {
public:
    using value_type = typename R::value_type;

    SquareMatrix(R ring, std::size_t size) : ring_(std::move(ring)), n_(size) {
        data_.assign(n_ * n_, ring_.zero());
    }

    static SquareMatrix identity(const R& ring, std::size_t size) {
        SquareMatrix m(ring, size);
        for (std::size_t i = 1; i <= size; ++i) m.set(i, i, ring.one());
        return m;
    }

    static SquareMatrix from(const SkewMatrix<R>& a) {
        SquareMatrix m(a.ring(), a.size());
        for (std::size_t i = 1; i <= a.size(); ++i)
            for (std::size_t j = 1; j <= a.size(); ++j) m.set(i, j, a.entry(i, j));
        return m;
    }

    const R& ring() const { return ring_; }
    std::size_t size() const { return n_; }

    const value_type& at(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, value_type v) { data_[index(i, j)] = ring_.canonical(v); }

private:
    R ring_;
    std::size_t n_;
    std::vector<value_type> data_;

    std::size_t index(std::size_t i, std::size_t j) const {
        if (i < 1 || j < 1 || i > n_ || j > n_) throw IndexError("index out of range");
        return (i - 1) * n_ + (j - 1);
    }
};

/// Division-free determinant: Laplace expansion along successive rows,
/// memoized over the set of used columns (2^n * n ring operations).
template <CommutativeRing R>
typename R::value_type determinant(const SquareMatrix<R>& m) {
    using V = typename R::value_type;
    const std::size_t n = m.size();
    if (n > 24) throw ShapeError("matrix too large for subset determinant");
    const R& ring = m.ring();
    // dp[mask] = det of rows 1..|mask| restricted to the columns in mask
    std::vector<V> dp;
    dp.reserve(std::size_t{1} << n);
    dp.push_back(ring.one());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const int count = std::popcount(mask);
        const std::size_t row = static_cast<std::size_t>(count);
        V sum = ring.zero();
        int t = 0;
        for (std::uint64_t scan = mask; scan != 0; scan &= scan - 1, ++t) {
            const int c = std::countr_zero(scan);
            const V& entry = m.at(row, static_cast<std::size_t>(c) + 1);
            if (ring.is_zero(entry)) continue;
            const V& minor = dp[mask & ~(std::uint64_t{1} << c)];
            if (ring.is_zero(minor)) continue;
            V term = ring.mul(entry, minor);
            sum = ((count - 1 + t) % 2 == 0) ? ring.add(sum, term) : ring.sub(sum, term);
        }
        dp.push_back(std::move(sum));
    }
    return dp.back();
}

template <CommutativeRing R>
typename R::value_type determinant(const SkewMatrix<R>& a) {
    return determinant(SquareMatrix<R>::from(a));
}

/// X * A * X^t, returned as a skew matrix. Throws std::logic_error if the
/// product's diagonal is nonzero, which would indicate an arithmetic bug.
template <CommutativeRing R>
SkewMatrix<R> congruence(const SquareMatrix<R>& x, const SkewMatrix<R>& a) {
    const std::size_t n = a.size();
    if (x.size() != n) throw ShapeError("congruence size mismatch");
    const R& ring = a.ring();
    SquareMatrix<R> xa(ring, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            auto s = ring.zero();
            for (std::size_t k = 1; k <= n; ++k)
                if (k != j) s = ring.add(s, ring.mul(x.at(i, k), a.entry(k, j)));
            xa.set(i, j, s);
        }
    SkewMatrix<R> out(ring, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) {
            auto s = ring.zero();
            for (std::size_t k = 1; k <= n; ++k) s = ring.add(s, ring.mul(xa.at(i, k), x.at(j, k)));
            if (i == j) {
                if (!ring.is_zero(s)) throw std::logic_error("congruence produced a nonzero diagonal");
            } else {
                out.set(i, j, s);
            }
        }
    return out;
}

}  // namespace pfrep

#endif
