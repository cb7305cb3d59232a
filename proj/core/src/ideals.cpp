#include "superschur/ideals.hpp"

#include "superschur/config.hpp"
#include "superschur/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace superschur {

RectangleOrientation detect_rectangle_orientation() {
    bool as_stated_ok = true, transposed_ok = true;
    const std::vector<std::pair<int, int>> spaces = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    for (int d = 1; d <= 4; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            GroupAlgebraElement c = young_symmetrizer(lambda);
            for (auto [m, n] : spaces) {
                bool member = member_by_eval(c, m, n);
                if (member != lambda.contains(rectangle(m, n))) as_stated_ok = false;
                if (member != lambda.contains(rectangle(m, n).transpose())) transposed_ok = false;
            }
        }
    }
    if (transposed_ok == as_stated_ok)
        throw std::logic_error("rectangle orientation oracle is inconclusive");
    return transposed_ok ? RectangleOrientation::transposed : RectangleOrientation::as_stated;
}

IdealSequence jmn_sequence(int m, int n, int max_degree) {
    if (m < 0 || n < 0) throw std::invalid_argument("jmn_sequence: negative dimensions");
    require_degree(max_degree);
    IdealSequence seq(m - n, max_degree);
    Partition rect = realized_rectangle(m, n);
    for (int d = 1; d <= max_degree; ++d)
        for (const Partition& lambda : partitions_of(d))
            if (lambda.contains(rect)) seq.killed[static_cast<size_t>(d)].insert(lambda);
    return seq;
}

bool member_by_eval(const GroupAlgebraElement& x, int m, int n) {
    return evaluate(x, SuperSpace{m, n}).is_zero();
}

namespace {

SparseRow vectorize(const GroupAlgebraElement& x, const std::vector<Perm>& order) {
    SparseRow row;
    for (size_t i = 0; i < order.size(); ++i) {
        Rational c = x.coeff(order[i]);
        if (c != 0) row.emplace_back(static_cast<long long>(i), c);
    }
    return row;
}

// A spanning set of the two-sided block of c_lambda in k[S_d], grown
// greedily from two-sided multiples sigma * c_lambda * tau until the block
// dimension f^lambda squared is reached.
const std::vector<GroupAlgebraElement>& block_spanning_set(const Partition& lambda) {
    static std::mutex mutex;
    static std::map<Partition, std::vector<GroupAlgebraElement>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;

    int d = lambda.size();
    GroupAlgebraElement c = young_symmetrizer(lambda);
    Integer f = count_standard_tableaux(lambda);
    size_t target = static_cast<size_t>(mpz_get_ui(Integer(f * f).get_mpz_t()));
    const auto sigmas = all_perms(d);

    std::vector<GroupAlgebraElement> basis;
    SparseEchelon echelon;
    for (const Perm& sigma : sigmas) {
        GroupAlgebraElement left = GroupAlgebraElement::of(sigma) * c;
        for (const Perm& tau : sigmas) {
            GroupAlgebraElement z = left * GroupAlgebraElement::of(tau);
            if (echelon.add_row(vectorize(z, sigmas))) basis.push_back(std::move(z));
            if (basis.size() == target) break;
        }
        if (basis.size() == target) break;
    }
    return cache.emplace(lambda, std::move(basis)).first->second;
}

// Union of the isotypic supports of the contractions of a spanning set of
// the lambda-block, at loop parameter t. This is the least set the ideal
// must kill one degree down once lambda is killed.
std::set<Partition> contraction_support(const Partition& lambda, const Rational& t) {
    static std::mutex mutex;
    static std::map<std::pair<Partition, Rational>, std::set<Partition>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find({lambda, t});
        if (it != cache.end()) return it->second;
    }
    std::set<Partition> support;
    for (const GroupAlgebraElement& z : block_spanning_set(lambda)) {
        auto piece = isotypic_support(z.contract(t));
        support.insert(piece.begin(), piece.end());
    }
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::make_pair(lambda, t), std::move(support)).first->second;
}

} // namespace

ClosureReport check_closure(const IdealSequence& seq) {
    ClosureReport report{true, true};

    // Induction closure: lambda killed implies every lambda + box killed.
    if (seq.unit_killed && seq.max_degree >= 1 && !seq.is_killed(1, Partition({1})))
        report.induction_ok = false;
    for (int d = 1; d < seq.max_degree && report.induction_ok; ++d)
        for (const Partition& lambda : seq.killed[static_cast<size_t>(d)]) {
            for (const Partition& up : lambda.with_box_added())
                if (!seq.is_killed(d + 1, up)) {
                    report.induction_ok = false;
                    break;
                }
            if (!report.induction_ok) break;
        }

    // Contraction closure, degree d down to d-1 (degree 1 contracts into the
    // unit block).
    Rational t(seq.rank);
    for (int d = 1; d <= seq.max_degree && report.contraction_ok; ++d) {
        for (const Partition& lambda : seq.killed[static_cast<size_t>(d)]) {
            std::set<Partition> required = contraction_support(lambda, t);
            if (d == 1) {
                if (!required.empty() && !seq.unit_killed) report.contraction_ok = false;
            } else {
                for (const Partition& mu : required)
                    if (!seq.is_killed(d - 1, mu)) {
                        report.contraction_ok = false;
                        break;
                    }
            }
            if (!report.contraction_ok) break;
        }
    }
    return report;
}

namespace {

GroupAlgebraElement shift_strands(const GroupAlgebraElement& y, int offset) {
    GroupAlgebraElement out(y.degree() + offset);
    for (const auto& [sigma, c] : y.terms()) {
        std::vector<std::uint8_t> images(static_cast<size_t>(y.degree() + offset));
        for (int i = 0; i < offset; ++i) images[static_cast<size_t>(i)] = static_cast<std::uint8_t>(i);
        for (int i = 0; i < y.degree(); ++i)
            images[static_cast<size_t>(offset + i)] = static_cast<std::uint8_t>(offset + sigma(i));
        out.add_term(Perm(std::move(images)), c);
    }
    return out;
}

GroupAlgebraElement embed_to(const GroupAlgebraElement& x, int degree) {
    GroupAlgebraElement out = x;
    while (out.degree() < degree) out = out.embed();
    return out;
}

std::vector<GroupAlgebraElement> block_representatives(const Partition& lambda,
                                                       std::mt19937_64& rng) {
    int d = lambda.size();
    GroupAlgebraElement c = young_symmetrizer(lambda);
    std::vector<GroupAlgebraElement> reps = {c};
    const auto sigmas = all_perms(d);
    for (int k = 0; k < 3; ++k) {
        const Perm& sigma = sigmas[rng() % sigmas.size()];
        const Perm& tau = sigmas[rng() % sigmas.size()];
        reps.push_back(GroupAlgebraElement::of(sigma) * c * GroupAlgebraElement::of(tau));
    }
    return reps;
}

} // namespace

bool is_prime(const IdealSequence& seq) {
    std::mt19937_64 rng(config().rng_seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    for (int d1 = 1; d1 < seq.max_degree; ++d1) {
        for (int d2 = 1; d1 + d2 <= seq.max_degree; ++d2) {
            int d = d1 + d2;
            for (const Partition& lambda1 : partitions_of(d1)) {
                if (seq.is_killed(d1, lambda1)) continue;
                for (const Partition& lambda2 : partitions_of(d2)) {
                    if (seq.is_killed(d2, lambda2)) continue;
                    for (const GroupAlgebraElement& x : block_representatives(lambda1, rng)) {
                        for (const GroupAlgebraElement& y : block_representatives(lambda2, rng)) {
                            GroupAlgebraElement product =
                                embed_to(x, d) * shift_strands(y, d1);
                            std::set<Partition> support = isotypic_support(product);
                            bool outside = false;
                            for (const Partition& mu : support)
                                if (!seq.is_killed(d, mu)) {
                                    outside = true;
                                    break;
                                }
                            if (!outside) return false; // witness: survivors multiply into the ideal
                        }
                    }
                }
            }
        }
    }
    return true;
}

namespace {

std::string classify_label(const IdealSequence& seq) {
    if (seq.unit_killed) return "full";
    bool any = false;
    for (int d = 1; d <= seq.max_degree; ++d)
        if (!seq.killed[static_cast<size_t>(d)].empty()) any = true;
    if (!any) return "zero";
    // Recover the rectangle from the smallest killed degree; it must be a
    // minimal element there.
    for (int d = 1; d <= seq.max_degree; ++d) {
        const auto& killed = seq.killed[static_cast<size_t>(d)];
        if (killed.empty()) continue;
        for (const Partition& rect : killed) {
            if (!rect.is_rectangle()) continue;
            int m = rect.rows() - 1;
            int n = rect.part(0) - 1;
            if (m - n != seq.rank) continue;
            if (seq == jmn_sequence(m, n, seq.max_degree)) return "J_{" + std::to_string(m) +
                                                                  "|" + std::to_string(n) + "}";
        }
        break;
    }
    return "other";
}

} // namespace

std::vector<ClassifiedSequence> enumerate_prime_sequences(int rank, int max_degree) {
    if (max_degree > 5)
        throw SizeBoundExceeded("enumerate_prime_sequences: max_degree above the default bound 5");
    require_degree(max_degree);

    // Precompute per-degree partitions and the contraction requirements.
    std::vector<std::vector<Partition>> parts(static_cast<size_t>(max_degree) + 1);
    for (int d = 1; d <= max_degree; ++d) parts[static_cast<size_t>(d)] = partitions_of(d);
    Rational t(rank);

    std::vector<ClassifiedSequence> found;
    IdealSequence work(rank, max_degree);

    auto record = [&](bool unit_killed) {
        IdealSequence candidate = work;
        candidate.unit_killed = unit_killed;
        ClosureReport closure = check_closure(candidate);
        if (!closure.induction_ok || !closure.contraction_ok) return;
        if (!is_prime(candidate)) return;
        found.push_back({candidate, classify_label(candidate)});
    };

    // Depth-first over degrees; at each degree choose any superset of the
    // box-closure of the previous degree, pruning with contraction closure.
    auto dfs = [&](auto&& self, int d) -> void {
        if (d > max_degree) {
            record(false);
            return;
        }
        const auto& here = parts[static_cast<size_t>(d)];
        // Forced kills from induction closure.
        std::set<Partition> forced;
        if (d > 1)
            for (const Partition& lambda : work.killed[static_cast<size_t>(d - 1)])
                for (const Partition& up : lambda.with_box_added()) forced.insert(up);
        std::vector<Partition> optional;
        for (const Partition& lambda : here)
            if (forced.count(lambda) == 0) optional.push_back(lambda);

        size_t choices = static_cast<size_t>(1) << optional.size();
        for (size_t mask = 0; mask < choices; ++mask) {
            std::set<Partition>& killed = work.killed[static_cast<size_t>(d)];
            killed = forced;
            for (size_t b = 0; b < optional.size(); ++b)
                if (mask & (static_cast<size_t>(1) << b)) killed.insert(optional[b]);
            // Contraction prune: killed blocks here must contract into the
            // previous degree's killed set.
            bool ok = true;
            for (const Partition& lambda : killed) {
                std::set<Partition> required = contraction_support(lambda, t);
                if (d == 1) {
                    if (!required.empty()) ok = false; // unit stays alive on proper branches
                } else {
                    for (const Partition& mu : required)
                        if (!work.is_killed(d - 1, mu)) {
                            ok = false;
                            break;
                        }
                }
                if (!ok) break;
            }
            if (ok) self(self, d + 1);
        }
        work.killed[static_cast<size_t>(d)].clear();
    };
    dfs(dfs, 1);

    // The full ideal: everything killed including the unit.
    for (int d = 1; d <= max_degree; ++d) {
        work.killed[static_cast<size_t>(d)].clear();
        for (const Partition& lambda : parts[static_cast<size_t>(d)])
            work.killed[static_cast<size_t>(d)].insert(lambda);
    }
    record(true);
    for (int d = 1; d <= max_degree; ++d) work.killed[static_cast<size_t>(d)].clear();

    std::sort(found.begin(), found.end(), [](const ClassifiedSequence& a, const ClassifiedSequence& b) {
        auto weight = [](const IdealSequence& s) {
            size_t total = s.unit_killed ? 1000000 : 0;
            for (const auto& k : s.killed) total += k.size();
            return total;
        };
        size_t wa = weight(a.seq), wb = weight(b.seq);
        if (wa != wb) return wa < wb;
        return a.seq.killed < b.seq.killed;
    });
    return found;
}

} // namespace superschur
