#ifndef PSEUDOCTX_RATIONAL_HPP
#define PSEUDOCTX_RATIONAL_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pseudoctx
{

/// Normalized arbitrary-precision fraction (denominator > 0, lowest terms).
using rational = boost::multiprecision::cpp_rational;
using big_int = boost::multiprecision::cpp_int;

/// Dense exact matrix with in-place reduced row echelon form.
class rational_matrix
{
public:
    rational_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// Reduces to RREF considering only the first `pivot_cols` columns as pivot candidates.
    /// Returns the pivot column of each nonzero row, in row order.
    std::vector<std::size_t> reduce(std::size_t pivot_cols)
    {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < pivot_cols && r < rows_; ++c) {
            std::size_t p = r;
            while (p < rows_ && (*this)(p, c) == 0)
                ++p;
            if (p == rows_)
                continue;
            swap_rows(p, r);
            const rational inv = 1 / (*this)(r, c);
            for (std::size_t j = c; j < cols_; ++j)
                (*this)(r, j) *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || (*this)(i, c) == 0)
                    continue;
                const rational f = (*this)(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    (*this)(i, j) -= f * (*this)(r, j);
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

private:
    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<rational> a_;
};

/// Solves the augmented system [M | rhs] (last column is the right-hand side).
/// Returns one solution with all free variables set to zero, or nullopt if inconsistent.
inline std::optional<std::vector<rational>> solve_augmented(rational_matrix m)
{
    const std::size_t unknowns = m.cols() - 1;
    const auto pivots = m.reduce(unknowns);
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        if (m(r, unknowns) != 0)
            return std::nullopt;
    std::vector<rational> x(unknowns);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = m(r, unknowns);
    return x;
}

} // namespace pseudoctx

#endif // PSEUDOCTX_RATIONAL_HPP
