#pragma once

#include <compare>
#include <string>
#include <vector>

namespace superschur {

/// Super vector space k^{m|n}: basis vectors 0..m-1 are even, m..m+n-1 odd.
struct SuperSpace {
    int even = 0;
    int odd = 0;

    int dim() const { return even + odd; }
    int superdim() const { return even - odd; }
    int parity(int basis_index) const { return basis_index >= even ? 1 : 0; }
    std::string to_string() const { return std::to_string(even) + "|" + std::to_string(odd); }

    auto operator<=>(const SuperSpace&) const = default;
};

/// Dimension pair of a super space or of the image of an even operator.
struct DimPair {
    long long even = 0;
    long long odd = 0;

    long long superdim() const { return even - odd; }
    auto operator<=>(const DimPair&) const = default;
};

/// Enumeration of multi-indices in {0..base-1}^degree, encoded as integers
/// with the leftmost factor most significant. Serialization is bit-exact in
/// this order.
class MultiIndexer {
public:
    MultiIndexer(int base, int degree);

    long long side() const { return side_; }
    int base() const { return base_; }
    int degree() const { return degree_; }

    int digit(long long index, int position) const; // position 0 = leftmost
    std::vector<int> digits(long long index) const;
    long long index(const std::vector<int>& digits) const;

    int parity(long long index, const SuperSpace& space) const;

private:
    int base_;
    int degree_;
    long long side_;
    std::vector<long long> weight_; // weight_[k] = base^(degree-1-k)
};

} // namespace superschur
