#include "superschur/linalg.hpp"

namespace superschur {

SparseRow sparse_axpy(const SparseRow& x, const Rational& a, const SparseRow& y) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            Rational v = a * y[j].second;
            if (v != 0) out.emplace_back(y[j].first, std::move(v));
            ++j;
        } else {
            Rational v = x[i].second + a * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseRow SparseEchelon::reduce(SparseRow row) const {
    while (!row.empty()) {
        auto it = pivot_rows_.find(row.front().first);
        if (it == pivot_rows_.end()) break;
        row = sparse_axpy(row, -row.front().second, it->second);
    }
    return row;
}

bool SparseEchelon::add_row(SparseRow row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    Rational lead = row.front().second;
    for (auto& [col, value] : row) value /= lead;
    pivot_rows_.emplace(row.front().first, std::move(row));
    return true;
}

} // namespace superschur
