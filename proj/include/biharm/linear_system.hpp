#pragma once

#include "biharm/rational.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace biharm {

/// One equation, stored sparsely as (column, coefficient) pairs sorted by
/// column with no zero coefficients.
struct SparseRow {
    std::vector<std::pair<std::size_t, Rational>> entries;
    Rational rhs;
};

/// Exact linear system over the rationals. Rows are appended while the
/// system is assembled; solving never mutates it.
class RationalLinearSystem {
public:
    explicit RationalLinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    std::size_t unknowns() const noexcept { return unknowns_; }
    std::size_t rows() const noexcept { return rows_.size(); }
    const std::vector<SparseRow>& row_data() const noexcept { return rows_; }

    /// Dense row; its length must equal unknowns().
    void add_row(std::span<const Rational> coeffs, const Rational& rhs);
    /// Sparse row; duplicate columns are summed, zeros dropped.
    void add_row(std::vector<std::pair<std::size_t, Rational>> entries, const Rational& rhs);

    /// True when x satisfies every row exactly.
    bool satisfied_by(std::span<const Rational> x) const;

private:
    std::size_t unknowns_;
    std::vector<SparseRow> rows_;
};

struct LinearSolution {
    enum class Kind { unique, parametric, infeasible };

    Kind kind = Kind::infeasible;
    /// Particular solution with every free variable set to zero.
    std::vector<Rational> particular;
    /// Columns left without a pivot, ascending.
    std::vector<std::size_t> free_columns;
    /// One homogeneous solution per free column (that column set to 1).
    std::vector<std::vector<Rational>> homogeneous_basis;
};

/// Gaussian elimination in exact arithmetic. Columns are pivoted in
/// ascending order, so the free variables of an underdetermined system are
/// always the highest-numbered dependent columns; within a column the pivot
/// row is the one with the fewest entries, then the smallest coefficient
/// bit-size. Throws Error(invalid_argument) on an empty system.
LinearSolution solve_linear(const RationalLinearSystem& system);

} // namespace biharm
