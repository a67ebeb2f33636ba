#pragma once

#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rbell/errors.hpp"
#include "rbell/exact.hpp"
#include "rbell/polynomial.hpp"

namespace rbell {

/// Row-major dense matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DomainError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

namespace detail {

inline void require_square(std::size_t rows, std::size_t cols) {
    if (rows != cols) throw DomainError("determinant of a non-square matrix");
    if (rows == 0) throw DomainError("determinant of an empty matrix");
}

template <typename T>
T ring_one() {
    if constexpr (std::is_same_v<T, IntPolynomial>) return IntPolynomial::constant(1);
    else return T(1);
}

}  // namespace detail

/// Bareiss fraction-free elimination. Every intermediate is an exact integer
/// minor of the input, so each division below is exact.
inline ExactInt fraction_free_det(Matrix<ExactInt> m) {
    detail::require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    ExactInt previous = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            m.swap_rows(k, pivot);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ExactInt t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
                m(i, j) = std::move(t);
            }
            m(i, k) = 0;
        }
        previous = m(k, k);
    }
    ExactInt det = m(n - 1, n - 1);
    return negate ? ExactInt(-det) : det;
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// still available: O(n·2^n) ring operations. Works over any commutative ring.
template <typename T>
T cofactor_det(const Matrix<T>& m) {
    detail::require_square(m.rows(), m.cols());
    const std::size_t n = m.rows();
    if (n > 20) throw DomainError("cofactor expansion limited to 20x20");
    std::unordered_map<unsigned long, T> memo;
    // minor(mask) = determinant of rows [n - popcount(mask), n) restricted to columns in mask.
    auto minor = [&](auto&& self, unsigned long mask, std::size_t row) -> T {
        if (row == n) return detail::ring_one<T>();
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        T acc{};
        bool positive = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (1ul << j))) continue;
            const T& entry = m(row, j);
            if (!(entry == T{})) {
                T term = entry * self(self, mask & ~(1ul << j), row + 1);
                if (positive) acc += term;
                else acc -= term;
            }
            positive = !positive;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return minor(minor, (1ul << n) - 1, 0);
}

inline IntPolynomial fraction_free_det(const Matrix<IntPolynomial>& m) { return cofactor_det(m); }

}  // namespace rbell
