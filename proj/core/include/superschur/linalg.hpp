#pragma once

#include "superschur/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace superschur {

/// Sparse rational row vector, sorted by column index.
using SparseRow = std::vector<std::pair<long long, Rational>>;

/// Incremental row-echelon form over Q. Rows are reduced as they arrive;
/// rank() is the number of independent rows seen so far.
class SparseEchelon {
public:
    /// Reduces the row against the current echelon. Returns true iff the row
    /// was independent (and was absorbed as a new pivot row).
    bool add_row(SparseRow row);

    size_t rank() const { return pivot_rows_.size(); }

    /// Reduce a row without inserting it; returns the residual.
    SparseRow reduce(SparseRow row) const;

private:
    std::map<long long, SparseRow> pivot_rows_; // keyed by pivot column, leading coeff 1
};

SparseRow sparse_axpy(const SparseRow& x, const Rational& a, const SparseRow& y); // x + a*y

} // namespace superschur
