#include "superschur/super_operator.hpp"

#include "superschur/config.hpp"
#include "superschur/linalg.hpp"

#include <stdexcept>

namespace superschur {

SuperOperator::SuperOperator(SuperSpace space, int degree)
    : space_(space), degree_(degree), indexer_(space.dim(), degree) {
    require_eval_dim(space.dim(), degree);
    rows_.resize(static_cast<size_t>(indexer_.side()));
}

SuperOperator SuperOperator::identity_op(SuperSpace space, int degree) {
    SuperOperator a(space, degree);
    for (long long i = 0; i < a.side(); ++i) a.rows_[static_cast<size_t>(i)].emplace(i, 1);
    return a;
}

Rational SuperOperator::entry(long long row, long long col) const {
    const auto& r = rows_[static_cast<size_t>(row)];
    auto it = r.find(col);
    return it == r.end() ? Rational(0) : it->second;
}

void SuperOperator::add_entry(long long row, long long col, const Rational& value) {
    if (value == 0) return;
    auto& r = rows_[static_cast<size_t>(row)];
    auto [it, inserted] = r.emplace(col, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) r.erase(it);
    }
}

const std::map<long long, Rational>& SuperOperator::row(long long r) const {
    return rows_[static_cast<size_t>(r)];
}

bool SuperOperator::is_zero() const {
    for (const auto& r : rows_)
        if (!r.empty()) return false;
    return true;
}

size_t SuperOperator::nonzero_count() const {
    size_t count = 0;
    for (const auto& r : rows_) count += r.size();
    return count;
}

SuperOperator SuperOperator::operator+(const SuperOperator& other) const {
    if (space_ != other.space_ || degree_ != other.degree_)
        throw std::invalid_argument("operator shape mismatch");
    SuperOperator out = *this;
    for (long long i = 0; i < side(); ++i)
        for (const auto& [c, v] : other.rows_[static_cast<size_t>(i)]) out.add_entry(i, c, v);
    return out;
}

SuperOperator SuperOperator::operator-(const SuperOperator& other) const {
    if (space_ != other.space_ || degree_ != other.degree_)
        throw std::invalid_argument("operator shape mismatch");
    SuperOperator out = *this;
    for (long long i = 0; i < side(); ++i)
        for (const auto& [c, v] : other.rows_[static_cast<size_t>(i)]) out.add_entry(i, c, -v);
    return out;
}

SuperOperator SuperOperator::operator*(const Rational& scalar) const {
    SuperOperator out(space_, degree_);
    if (scalar == 0) return out;
    for (long long i = 0; i < side(); ++i)
        for (const auto& [c, v] : rows_[static_cast<size_t>(i)])
            out.rows_[static_cast<size_t>(i)].emplace(c, v * scalar);
    return out;
}

SuperOperator SuperOperator::compose(const SuperOperator& other) const {
    if (space_ != other.space_ || degree_ != other.degree_)
        throw std::invalid_argument("operator shape mismatch");
    SuperOperator out(space_, degree_);
    for (long long i = 0; i < side(); ++i)
        for (const auto& [k, a] : rows_[static_cast<size_t>(i)])
            for (const auto& [j, b] : other.rows_[static_cast<size_t>(k)])
                out.add_entry(i, j, a * b);
    return out;
}

bool SuperOperator::operator==(const SuperOperator& other) const {
    return space_ == other.space_ && degree_ == other.degree_ && rows_ == other.rows_;
}

Rational SuperOperator::supertrace() const {
    Rational tr(0);
    for (long long i = 0; i < side(); ++i) {
        auto it = rows_[static_cast<size_t>(i)].find(i);
        if (it == rows_[static_cast<size_t>(i)].end()) continue;
        if (indexer_.parity(i, space_) == 0)
            tr += it->second;
        else
            tr -= it->second;
    }
    return tr;
}

SuperOperator SuperOperator::partial_supertrace(int position) const {
    if (position < 1 || position > degree_)
        throw std::invalid_argument("partial_supertrace: position out of range");
    int p = position - 1;
    SuperOperator out(space_, degree_ - 1);
    const MultiIndexer& sub = out.indexer();
    // Move factor p to the last slot on both sides; for equal traced letters
    // the two Koszul transport signs cancel against each other, leaving the
    // supertrace weight (-1)^|a| and a transport sign for the letters the
    // row and column indices differ in.
    for (long long r = 0; r < side(); ++r) {
        if (rows_[static_cast<size_t>(r)].empty()) continue;
        std::vector<int> rd = indexer_.digits(r);
        int a = rd[static_cast<size_t>(p)];
        int pa = space_.parity(a);
        // transport sign of moving slot p past slots p+1..d-1 in the row
        int row_sign = 1;
        if (pa == 1)
            for (int k = p + 1; k < degree_; ++k)
                if (space_.parity(rd[static_cast<size_t>(k)]) == 1) row_sign = -row_sign;
        std::vector<int> rkept;
        rkept.reserve(static_cast<size_t>(degree_) - 1);
        for (int k = 0; k < degree_; ++k)
            if (k != p) rkept.push_back(rd[static_cast<size_t>(k)]);
        long long rout = sub.index(rkept);
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)]) {
            std::vector<int> cd = indexer_.digits(c);
            if (cd[static_cast<size_t>(p)] != a) continue; // traced letters must match
            int col_sign = 1;
            if (pa == 1)
                for (int k = p + 1; k < degree_; ++k)
                    if (space_.parity(cd[static_cast<size_t>(k)]) == 1) col_sign = -col_sign;
            std::vector<int> ckept;
            ckept.reserve(static_cast<size_t>(degree_) - 1);
            for (int k = 0; k < degree_; ++k)
                if (k != p) ckept.push_back(cd[static_cast<size_t>(k)]);
            Rational value = v * row_sign * col_sign;
            if (pa == 1) value = -value;
            out.add_entry(rout, sub.index(ckept), value);
        }
    }
    return out;
}

bool SuperOperator::is_even() const {
    for (long long r = 0; r < side(); ++r) {
        int pr = indexer_.parity(r, space_);
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)])
            if (indexer_.parity(c, space_) != pr) return false;
    }
    return true;
}

DimPair SuperOperator::rank_pair() const {
    if (!is_even()) throw std::invalid_argument("rank_pair: operator is not even");
    // Image dimension per parity = rank of the block of columns with that
    // parity; work with the transposed blocks so rows feed the echelon.
    std::map<long long, SparseRow> cols[2];
    for (long long r = 0; r < side(); ++r)
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)])
            cols[indexer_.parity(c, space_)][c].emplace_back(r, v);
    DimPair out;
    for (int parity = 0; parity < 2; ++parity) {
        SparseEchelon echelon;
        for (auto& [c, col] : cols[parity]) echelon.add_row(std::move(col));
        (parity == 0 ? out.even : out.odd) = static_cast<long long>(echelon.rank());
    }
    return out;
}

SuperOperator SuperOperator::tensor_identity() const {
    SuperOperator out(space_, degree_ + 1);
    int base = space_.dim();
    for (long long r = 0; r < side(); ++r)
        for (const auto& [c, v] : rows_[static_cast<size_t>(r)])
            for (int a = 0; a < base; ++a)
                out.add_entry(r * base + a, c * base + a, v);
    return out;
}

int koszul_sign(const Perm& sigma, const std::vector<int>& parities) {
    int sign = 1;
    int d = sigma.degree();
    for (int k = 0; k < d; ++k) {
        if (parities[static_cast<size_t>(k)] == 0) continue;
        for (int l = k + 1; l < d; ++l)
            if (parities[static_cast<size_t>(l)] == 1 && sigma(k) > sigma(l)) sign = -sign;
    }
    return sign;
}

namespace {

int koszul_sign_on_odds(const Perm& sigma, const std::vector<int>& odd_positions) {
    int sign = 1;
    for (size_t a = 0; a < odd_positions.size(); ++a)
        for (size_t b = a + 1; b < odd_positions.size(); ++b)
            if (sigma(odd_positions[a]) > sigma(odd_positions[b])) sign = -sign;
    return sign;
}

} // namespace

SuperOperator perm_operator(const Perm& sigma, SuperSpace space) {
    return evaluate(GroupAlgebraElement::of(sigma), space);
}

SuperOperator evaluate(const GroupAlgebraElement& x, SuperSpace space) {
    int d = x.degree();
    SuperOperator out(space, d);
    const MultiIndexer& ix = out.indexer();
    std::vector<int> permuted(static_cast<size_t>(d));
    std::vector<int> odd_positions;
    odd_positions.reserve(static_cast<size_t>(d));
    for (long long col = 0; col < ix.side(); ++col) {
        std::vector<int> digits = ix.digits(col);
        odd_positions.clear();
        for (int k = 0; k < d; ++k)
            if (space.parity(digits[static_cast<size_t>(k)]) == 1) odd_positions.push_back(k);
        for (const auto& [sigma, coeff] : x.terms()) {
            for (int k = 0; k < d; ++k)
                permuted[static_cast<size_t>(sigma(k))] = digits[static_cast<size_t>(k)];
            int sign = koszul_sign_on_odds(sigma, odd_positions);
            out.add_entry(ix.index(permuted), col, sign > 0 ? coeff : -coeff);
        }
    }
    return out;
}

} // namespace superschur
