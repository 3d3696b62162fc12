#include "biharm/linear_system.hpp"

#include "biharm/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace biharm {

namespace {

using Entries = std::vector<std::pair<std::size_t, Rational>>;

Entries normalized(Entries entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Entries out;
    out.reserve(entries.size());
    for (auto& [col, value] : entries) {
        if (!out.empty() && out.back().first == col) {
            out.back().second += value;
        } else {
            out.emplace_back(col, std::move(value));
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

const Rational* find_entry(const Entries& row, std::size_t col) {
    const auto it = std::lower_bound(row.begin(), row.end(), col,
                                     [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// row - factor * pivot, both sorted.
Entries axpy(const Entries& row, const Rational& factor, const Entries& pivot) {
    Entries out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            Rational v = a->second - factor * b->second;
            if (v != 0) {
                out.emplace_back(a->first, std::move(v));
            }
            ++a;
            ++b;
        }
    }
    return out;
}

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

struct Pivot {
    std::size_t column;
    std::size_t row;
};

std::vector<Rational> back_substitute(const std::vector<SparseRow>& rows,
                                      const std::vector<Pivot>& pivots, std::size_t unknowns,
                                      bool homogeneous, std::size_t unit_column) {
    std::vector<Rational> x(unknowns, Rational(0));
    if (homogeneous) {
        x[unit_column] = 1;
    }
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const SparseRow& row = rows[it->row];
        Rational acc = homogeneous ? Rational(0) : row.rhs;
        Rational diag;
        for (const auto& [col, value] : row.entries) {
            if (col == it->column) {
                diag = value;
            } else {
                acc -= value * x[col];
            }
        }
        x[it->column] = acc / diag;
    }
    return x;
}

} // namespace

void RationalLinearSystem::add_row(std::span<const Rational> coeffs, const Rational& rhs) {
    if (coeffs.size() != unknowns_) {
        throw Error(ErrorCode::invalid_argument, "row length does not match unknown count");
    }
    Entries entries;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) {
            entries.emplace_back(i, coeffs[i]);
        }
    }
    rows_.push_back({std::move(entries), rhs});
}

void RationalLinearSystem::add_row(Entries entries, const Rational& rhs) {
    for (const auto& e : entries) {
        if (e.first >= unknowns_) {
            throw Error(ErrorCode::invalid_argument, "column index out of range");
        }
    }
    rows_.push_back({normalized(std::move(entries)), rhs});
}

bool RationalLinearSystem::satisfied_by(std::span<const Rational> x) const {
    if (x.size() != unknowns_) {
        return false;
    }
    return std::all_of(rows_.begin(), rows_.end(), [&](const SparseRow& row) {
        Rational lhs = 0;
        for (const auto& [col, value] : row.entries) {
            lhs += value * x[col];
        }
        return lhs == row.rhs;
    });
}

LinearSolution solve_linear(const RationalLinearSystem& system) {
    if (system.rows() == 0) {
        throw Error(ErrorCode::invalid_argument, "empty linear system");
    }
    const std::size_t n = system.unknowns();
    std::vector<SparseRow> rows = system.row_data();

    std::vector<std::set<std::size_t>> rows_by_column(n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& e : rows[r].entries) {
            rows_by_column[e.first].insert(r);
        }
    }

    std::vector<Pivot> pivots;
    std::vector<std::size_t> free_columns;
    for (std::size_t col = 0; col < n; ++col) {
        const auto& candidates = rows_by_column[col];
        if (candidates.empty()) {
            free_columns.push_back(col);
            continue;
        }
        const std::size_t p = *std::min_element(
            candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
                return std::make_tuple(rows[a].entries.size(), bit_size(*find_entry(rows[a].entries, col)), a) <
                       std::make_tuple(rows[b].entries.size(), bit_size(*find_entry(rows[b].entries, col)), b);
            });
        for (const auto& e : rows[p].entries) {
            rows_by_column[e.first].erase(p);
        }
        const Rational pivot_value = *find_entry(rows[p].entries, col);
        const std::vector<std::size_t> targets(rows_by_column[col].begin(), rows_by_column[col].end());
        for (std::size_t r : targets) {
            const Rational factor = *find_entry(rows[r].entries, col) / pivot_value;
            for (const auto& e : rows[r].entries) {
                rows_by_column[e.first].erase(r);
            }
            rows[r].entries = axpy(rows[r].entries, factor, rows[p].entries);
            rows[r].rhs -= factor * rows[p].rhs;
            for (const auto& e : rows[r].entries) {
                rows_by_column[e.first].insert(r);
            }
        }
        pivots.push_back({col, p});
    }

    LinearSolution out;
    std::vector<bool> is_pivot_row(rows.size(), false);
    for (const auto& pv : pivots) {
        is_pivot_row[pv.row] = true;
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        // Every non-pivot row is fully eliminated by now.
        if (!is_pivot_row[r] && rows[r].rhs != 0) {
            out.kind = LinearSolution::Kind::infeasible;
            return out;
        }
    }

    out.particular = back_substitute(rows, pivots, n, false, 0);
    out.free_columns = free_columns;
    for (std::size_t f : free_columns) {
        out.homogeneous_basis.push_back(back_substitute(rows, pivots, n, true, f));
    }
    out.kind = free_columns.empty() ? LinearSolution::Kind::unique : LinearSolution::Kind::parametric;
    return out;
}

} // namespace biharm
