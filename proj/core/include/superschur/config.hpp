#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superschur {

/// Thrown when a computation would exceed a configured size guard.
/// Callers that want to proceed anyway raise the relevant bound first.
class SizeBoundExceeded : public std::runtime_error {
public:
    explicit SizeBoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Process-wide size guards and the default RNG seed.
///
/// All library operations are pure; the config only bounds how large an
/// exact computation is allowed to grow before it is refused.
struct Config {
    int max_degree = 6;                // largest symmetric-group degree accepted by default
    long long max_eval_dim = 4096;     // refuse evaluation when (m+n)^d exceeds this
    long long max_commutant_dim = 6561; // refuse commutant solves when (m+n)^(2d) exceeds this
    std::uint64_t rng_seed = 0;
};

Config& config();

/// (m+n)^d without overflow; saturates at a large sentinel.
long long bounded_pow(long long base, int exp, long long cap);

void require_eval_dim(int space_dim, int degree);
void require_commutant_dim(int space_dim, int degree);
void require_degree(int degree);

} // namespace superschur
