#include "superschur/partition.hpp"

#include "superschur/config.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& wire) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in(wire);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        size_t pos = 0;
        int value = std::stoi(token, &pos);
        if (pos != token.size()) throw std::invalid_argument("bad partition token: " + token);
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) cols[static_cast<size_t>(j)]++;
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 0; i < mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::is_rectangle() const {
    if (parts_.empty()) return false;
    return parts_.front() == parts_.back();
}

std::vector<Partition> Partition::with_box_added() const {
    std::vector<Partition> out;
    for (int i = 0; i <= rows(); ++i) {
        if (i > 0 && part(i) == part(i - 1)) continue; // not a corner
        std::vector<int> next = parts_;
        if (i == rows())
            next.push_back(1);
        else
            next[static_cast<size_t>(i)]++;
        out.emplace_back(std::move(next));
    }
    return out;
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& prefix,
                         std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
        prefix.push_back(next);
        generate_partitions(remaining - next, next, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative degree");
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) {
        std::vector<Partition> out;
        std::vector<int> prefix;
        generate_partitions(d, d, prefix, out);
        if (d == 0) out = {Partition()};
        it = cache.emplace(d, std::move(out)).first;
    }
    return it->second;
}

Partition rectangle(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("rectangle: negative arguments");
    return Partition(std::vector<int>(static_cast<size_t>(n) + 1, m + 1));
}

Partition realized_rectangle(int m, int n) { return rectangle(n, m); }

namespace {

Integer hook_product(const Partition& lambda) {
    Partition t = lambda.transpose();
    Integer prod = 1;
    for (int i = 0; i < lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j)
            prod *= (lambda.part(i) - j) + (t.part(j) - i) - 1;
    return prod;
}

} // namespace

Integer count_standard_tableaux(const Partition& lambda) {
    if (lambda.empty()) return 1;
    Integer num = factorial(lambda.size());
    Integer den = hook_product(lambda);
    Integer q = num / den;
    return q;
}

Rational tau_weyl(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("tau_weyl: m must be positive");
    if (lambda.rows() > m) throw std::invalid_argument("tau_weyl: more rows than m");
    Rational prod = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Rational term(lambda.part(i) - lambda.part(j) + j - i, j - i);
            term.canonicalize();
            prod *= term;
        }
    return prod;
}

Integer weyl_dim(const Partition& lambda, int m) {
    if (m < 1) throw std::invalid_argument("weyl_dim: m must be positive");
    if (lambda.rows() > m) return 0;
    Rational value = tau_weyl(lambda, m);
    // The Weyl product over a genuine partition is a tableau count.
    if (value.get_den() != 1) throw std::logic_error("weyl_dim: non-integer product");
    return value.get_num();
}

namespace {

// Backtracking enumeration of LR skew tableaux of shape lambda/mu with
// content nu: rows weakly increase, columns strictly increase, and the
// reading word (right-to-left within rows, top-to-bottom) is a lattice word.
struct LrCounter {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::pair<int, int>> cells; // skew cells in reading order
    std::vector<std::vector<int>> filling;  // 0 = unfilled / cell of mu
    std::vector<int> used;                  // prefix count per value, 1-based
    long long count = 0;

    LrCounter(const Partition& l, const Partition& m, const Partition& n)
        : lambda(l), mu(m), nu(n) {
        filling.resize(static_cast<size_t>(l.rows()));
        for (int i = 0; i < l.rows(); ++i) {
            filling[static_cast<size_t>(i)].assign(static_cast<size_t>(l.part(i)), 0);
            for (int j = l.part(i) - 1; j >= m.part(i); --j) cells.emplace_back(i, j);
        }
        used.assign(static_cast<size_t>(n.rows()) + 1, 0);
    }

    int entry(int row, int col) const {
        return filling[static_cast<size_t>(row)][static_cast<size_t>(col)];
    }

    void place(size_t k) {
        if (k == cells.size()) {
            ++count;
            return;
        }
        auto [row, col] = cells[k];
        for (int v = 1; v <= nu.rows(); ++v) {
            if (used[static_cast<size_t>(v)] == nu.part(v - 1)) continue;
            // Lattice: at every prefix of the reading word, #v <= #(v-1).
            if (v > 1 && used[static_cast<size_t>(v)] + 1 > used[static_cast<size_t>(v) - 1])
                continue;
            // The cell to the right is already placed; rows weakly increase.
            if (col + 1 < lambda.part(row) && v > entry(row, col + 1)) continue;
            // The cell above is already placed; columns strictly increase.
            // Cells of mu above impose no constraint.
            if (row > 0 && col < lambda.part(row - 1) && col >= mu.part(row - 1) &&
                v <= entry(row - 1, col))
                continue;
            filling[static_cast<size_t>(row)][static_cast<size_t>(col)] = v;
            used[static_cast<size_t>(v)]++;
            place(k + 1);
            used[static_cast<size_t>(v)]--;
            filling[static_cast<size_t>(row)][static_cast<size_t>(col)] = 0;
        }
    }
};

} // namespace

long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu)) return 0;
    if (nu.empty()) return 1; // lambda == mu at this point
    LrCounter counter(lambda, mu, nu);
    counter.place(0);
    return counter.count;
}

} // namespace superschur
