#include "superschur/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace superschur {

namespace {

// Beta-numbers b_i = lambda_i + (l - 1 - i), strictly decreasing. Removing a
// border strip of size k corresponds to replacing some b by b - k >= 0 with
// b - k not already a beta-number; the strip height is the number of
// beta-numbers strictly between b - k and b.
std::vector<int> beta_numbers(const Partition& lambda) {
    int l = lambda.rows();
    std::vector<int> beta(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lambda.part(i) + (l - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = beta[static_cast<size_t>(i)] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

long long mn_recurse(const Partition& lambda, const std::vector<int>& cycles, size_t next) {
    if (next == cycles.size()) return lambda.empty() ? 1 : 0;
    int k = cycles[next];
    std::vector<int> beta = beta_numbers(lambda);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - k;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> next_beta = beta;
        next_beta[i] = target;
        long long sub = mn_recurse(from_beta(std::move(next_beta)), cycles, next + 1);
        total += (height % 2 == 0) ? sub : -sub;
    }
    return total;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& cycle_type) {
    if (lambda.size() != cycle_type.size())
        throw std::invalid_argument("mn_character: partition and cycle type sizes differ");
    return mn_recurse(lambda, cycle_type.parts(), 0);
}

const std::vector<std::vector<long long>>& character_table(int d) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::vector<long long>>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) {
        const auto& parts = partitions_of(d);
        std::vector<std::vector<long long>> table(parts.size(), std::vector<long long>(parts.size()));
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = 0; j < parts.size(); ++j)
                table[i][j] = mn_character(parts[i], parts[j]);
        it = cache.emplace(d, std::move(table)).first;
    }
    return it->second;
}

int partition_index(const Partition& p) {
    const auto& all = partitions_of(p.size());
    auto it = std::find(all.begin(), all.end(), p);
    if (it == all.end()) throw std::logic_error("partition_index: not found");
    return static_cast<int>(it - all.begin());
}

Integer centralizer_order(const Partition& cycle_type) {
    Integer order = 1;
    int run_value = -1, run_length = 0;
    for (int part : cycle_type.parts()) {
        order *= part;
        if (part == run_value) {
            ++run_length;
        } else {
            run_value = part;
            run_length = 1;
        }
        order *= run_length;
    }
    return order;
}

} // namespace superschur
