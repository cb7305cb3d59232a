#include "superschur/config.hpp"

namespace superschur {

Config& config() {
    static Config instance;
    return instance;
}

long long bounded_pow(long long base, int exp, long long cap) {
    long long value = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && value > cap / base) return cap + 1;
        value *= base;
    }
    return value;
}

void require_eval_dim(int space_dim, int degree) {
    long long cap = config().max_eval_dim;
    if (bounded_pow(space_dim, degree, cap) > cap)
        throw SizeBoundExceeded("evaluation dimension " + std::to_string(space_dim) + "^" +
                                std::to_string(degree) + " exceeds bound " + std::to_string(cap));
}

void require_commutant_dim(int space_dim, int degree) {
    long long cap = config().max_commutant_dim;
    if (bounded_pow(space_dim, 2 * degree, cap) > cap)
        throw SizeBoundExceeded("commutant dimension " + std::to_string(space_dim) + "^(2*" +
                                std::to_string(degree) + ") exceeds bound " + std::to_string(cap));
}

void require_degree(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    if (degree > config().max_degree + 1)
        throw SizeBoundExceeded("degree " + std::to_string(degree) + " exceeds configured bound " +
                                std::to_string(config().max_degree + 1));
}

} // namespace superschur
