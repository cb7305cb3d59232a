#include "superschur/super_space.hpp"

#include <stdexcept>

namespace superschur {

MultiIndexer::MultiIndexer(int base, int degree) : base_(base), degree_(degree) {
    if (base < 0 || degree < 0) throw std::invalid_argument("bad multi-index shape");
    weight_.assign(static_cast<size_t>(degree), 1);
    side_ = 1;
    for (int k = degree - 1; k >= 0; --k) {
        weight_[static_cast<size_t>(k)] = side_;
        side_ *= base;
    }
}

int MultiIndexer::digit(long long index, int position) const {
    return static_cast<int>((index / weight_[static_cast<size_t>(position)]) % base_);
}

std::vector<int> MultiIndexer::digits(long long index) const {
    std::vector<int> out(static_cast<size_t>(degree_));
    for (int k = 0; k < degree_; ++k) out[static_cast<size_t>(k)] = digit(index, k);
    return out;
}

long long MultiIndexer::index(const std::vector<int>& digits) const {
    long long idx = 0;
    for (int k = 0; k < degree_; ++k) idx += digits[static_cast<size_t>(k)] * weight_[static_cast<size_t>(k)];
    return idx;
}

int MultiIndexer::parity(long long index, const SuperSpace& space) const {
    int p = 0;
    for (int k = 0; k < degree_; ++k) p ^= space.parity(digit(index, k));
    return p;
}

} // namespace superschur
