#include "superschur/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace superschur {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::uint8_t v : images_) {
        if (v >= images_.size() || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

Perm Perm::identity(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<std::uint8_t> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), static_cast<std::uint8_t>(0));
    return Perm(std::move(images));
}

Perm Perm::from_one_line(const std::vector<int>& images_1based) {
    std::vector<std::uint8_t> images;
    images.reserve(images_1based.size());
    for (int v : images_1based) {
        if (v < 1 || v > static_cast<int>(images_1based.size()))
            throw std::invalid_argument("one-line image out of range");
        images.push_back(static_cast<std::uint8_t>(v - 1));
    }
    return Perm(std::move(images));
}

std::vector<int> Perm::one_line() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (std::uint8_t v : images_) out.push_back(v + 1);
    return out;
}

Perm Perm::compose(const Perm& other) const {
    if (degree() != other.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<std::uint8_t> images(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        images[i] = images_[other.images_[i]];
    return Perm(std::move(images));
}

Perm Perm::inverse() const {
    std::vector<std::uint8_t> images(images_.size());
    for (size_t i = 0; i < images_.size(); ++i)
        images[images_[i]] = static_cast<std::uint8_t>(i);
    return Perm(std::move(images));
}

int Perm::cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int count = 0;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (size_t j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return count;
}

Partition Perm::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

int Perm::sign() const {
    return (degree() - cycle_count()) % 2 == 0 ? 1 : -1;
}

Perm Perm::extended() const {
    std::vector<std::uint8_t> images = images_;
    images.push_back(static_cast<std::uint8_t>(images_.size()));
    return Perm(std::move(images));
}

std::vector<Perm> all_perms(int degree) {
    std::vector<std::uint8_t> images(static_cast<size_t>(degree));
    std::iota(images.begin(), images.end(), static_cast<std::uint8_t>(0));
    std::vector<Perm> out;
    do {
        out.push_back(Perm(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

} // namespace superschur
