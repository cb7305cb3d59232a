#include "superschur/group_algebra.hpp"

#include "superschur/characters.hpp"
#include "superschur/config.hpp"

#include <stdexcept>

namespace superschur {

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

GroupAlgebraElement GroupAlgebraElement::identity(int degree) {
    return of(Perm::identity(degree));
}

GroupAlgebraElement GroupAlgebraElement::of(const Perm& sigma, const Rational& coeff) {
    GroupAlgebraElement x(sigma.degree());
    x.add_term(sigma, coeff);
    return x;
}

Rational GroupAlgebraElement::coeff(const Perm& sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Perm& sigma, const Rational& coeff) {
    if (sigma.degree() != degree_) throw std::invalid_argument("degree mismatch");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(sigma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& other) const {
    if (degree_ != other.degree_) throw std::invalid_argument("degree mismatch");
    GroupAlgebraElement out = *this;
    for (const auto& [sigma, c] : other.terms_) out.add_term(sigma, c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& other) const {
    if (degree_ != other.degree_) throw std::invalid_argument("degree mismatch");
    GroupAlgebraElement out = *this;
    for (const auto& [sigma, c] : other.terms_) out.add_term(sigma, -c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& scalar) const {
    GroupAlgebraElement out(degree_);
    if (scalar == 0) return out;
    for (const auto& [sigma, c] : terms_) out.terms_.emplace(sigma, c * scalar);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& other) const {
    if (degree_ != other.degree_) throw std::invalid_argument("degree mismatch");
    GroupAlgebraElement out(degree_);
    for (const auto& [sigma, a] : terms_)
        for (const auto& [tau, b] : other.terms_)
            out.add_term(sigma.compose(tau), a * b);
    return out;
}

GroupAlgebraElement multiply(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
    return x * y;
}

GroupAlgebraElement GroupAlgebraElement::embed() const {
    GroupAlgebraElement out(degree_ + 1);
    for (const auto& [sigma, c] : terms_) out.terms_.emplace(sigma.extended(), c);
    return out;
}

GroupAlgebraElement GroupAlgebraElement::contract(const Rational& t) const {
    if (degree_ == 0) throw std::invalid_argument("contract: degree 0 input");
    int top = degree_ - 1;
    GroupAlgebraElement out(top);
    for (const auto& [sigma, c] : terms_) {
        if (sigma(top) == top) {
            std::vector<std::uint8_t> images(static_cast<size_t>(top));
            for (int i = 0; i < top; ++i) images[static_cast<size_t>(i)] = static_cast<std::uint8_t>(sigma(i));
            out.add_term(Perm(std::move(images)), c * t);
        } else {
            // Splice: the strand entering the top point continues to where
            // the top point was sent.
            std::vector<std::uint8_t> images(static_cast<size_t>(top));
            for (int i = 0; i < top; ++i) {
                int v = sigma(i);
                images[static_cast<size_t>(i)] =
                    static_cast<std::uint8_t>(v == top ? sigma(top) : v);
            }
            out.add_term(Perm(std::move(images)), c);
        }
    }
    return out;
}

TracePolynomial GroupAlgebraElement::trace_poly() const {
    TracePolynomial p;
    for (const auto& [sigma, c] : terms_)
        p = p + TracePolynomial::monomial(sigma.cycle_count(), c);
    return p;
}

namespace {

// Canonical tableau of shape lambda: rows filled left to right, top to
// bottom with 0..d-1. Returns the cells of each row and each column.
struct CanonicalTableau {
    std::vector<std::vector<int>> rows;
    std::vector<std::vector<int>> cols;
};

CanonicalTableau canonical_tableau(const Partition& lambda) {
    CanonicalTableau t;
    t.rows.resize(static_cast<size_t>(lambda.rows()));
    t.cols.resize(static_cast<size_t>(lambda.part(0)));
    int entry = 0;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) {
            t.rows[static_cast<size_t>(i)].push_back(entry);
            t.cols[static_cast<size_t>(j)].push_back(entry);
            ++entry;
        }
    return t;
}

// All permutations of degree d that stabilize each listed block setwise,
// with the sign of the block-wise permutation attached.
std::vector<std::pair<Perm, int>> block_stabilizer(int degree,
                                                   const std::vector<std::vector<int>>& blocks) {
    std::vector<std::pair<Perm, int>> out;
    std::vector<std::uint8_t> images(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);

    // Depth-first over blocks, assigning each block a permutation of itself.
    auto recurse = [&](auto&& self, size_t block_index, int sign) -> void {
        if (block_index == blocks.size()) {
            out.emplace_back(Perm(images), sign);
            return;
        }
        const auto& block = blocks[block_index];
        std::vector<int> idx(block.size());
        for (size_t i = 0; i < block.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end());
        do {
            int inversions = 0;
            for (size_t a = 0; a < idx.size(); ++a)
                for (size_t b = a + 1; b < idx.size(); ++b)
                    if (idx[a] > idx[b]) ++inversions;
            for (size_t i = 0; i < block.size(); ++i)
                images[static_cast<size_t>(block[i])] =
                    static_cast<std::uint8_t>(block[static_cast<size_t>(idx[i])]);
            self(self, block_index + 1, sign * (inversions % 2 == 0 ? 1 : -1));
        } while (std::next_permutation(idx.begin(), idx.end()));
        for (int v : block) images[static_cast<size_t>(v)] = static_cast<std::uint8_t>(v);
    };
    recurse(recurse, 0, 1);
    return out;
}

} // namespace

GroupAlgebraElement young_symmetrizer(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("young_symmetrizer: empty partition");
    int d = lambda.size();
    require_degree(d);
    CanonicalTableau t = canonical_tableau(lambda);
    auto row_perms = block_stabilizer(d, t.rows);
    auto col_perms = block_stabilizer(d, t.cols);
    GroupAlgebraElement c(d);
    for (const auto& [r, rsign] : row_perms)
        for (const auto& [q, qsign] : col_perms)
            c.add_term(r.compose(q), Rational(qsign));
    return c;
}

Rational quasi_idempotent_scalar(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("quasi_idempotent_scalar: empty partition");
    Rational r(factorial(lambda.size()), count_standard_tableaux(lambda));
    r.canonicalize();
    return r;
}

GroupAlgebraElement young_idempotent(const Partition& lambda) {
    Rational scale(count_standard_tableaux(lambda), factorial(lambda.size()));
    scale.canonicalize();
    return young_symmetrizer(lambda) * scale;
}

std::set<Partition> isotypic_support(const GroupAlgebraElement& x) {
    std::set<Partition> support;
    int d = x.degree();
    if (x.is_zero()) return support;
    if (d == 0) return {Partition()};
    const auto& lambdas = partitions_of(d);
    const auto& table = character_table(d);
    const auto sigmas = all_perms(d);

    std::vector<std::pair<Perm, Rational>> terms(x.terms().begin(), x.terms().end());
    for (size_t li = 0; li < lambdas.size(); ++li) {
        bool nonzero = false;
        for (const auto& sigma : sigmas) {
            Rational pairing(0);
            for (const auto& [tau, c] : terms) {
                int cls = partition_index(tau.compose(sigma).cycle_type());
                pairing += c * static_cast<long>(table[li][static_cast<size_t>(cls)]);
            }
            if (pairing != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) support.insert(lambdas[li]);
    }
    return support;
}

} // namespace superschur
