#pragma once

#include "superschur/partition.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace superschur {

/// Permutation of {0, ..., d-1} in one-line notation. Degree 0 (the empty
/// permutation) is valid and is the identity of S_0.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> images);

    static Perm identity(int degree);
    /// One-line notation with 1-based images, as used on the wire.
    static Perm from_one_line(const std::vector<int>& images_1based);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    std::vector<int> one_line() const; // 1-based

    /// this after other: (a.compose(b))(i) = a(b(i)).
    Perm compose(const Perm& other) const;
    Perm inverse() const;

    int cycle_count() const;
    Partition cycle_type() const;
    int sign() const;

    /// Same permutation viewed in S_{d+1}, fixing the new top point.
    Perm extended() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<std::uint8_t> images_;
};

/// All d! permutations of degree d in lexicographic one-line order.
std::vector<Perm> all_perms(int degree);

} // namespace superschur
