#pragma once

#include "superschur/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace superschur {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is valid and is the unique partition of 0. Canonicalized on construction
/// (trailing zeros stripped); all values are immutable.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Wire format: comma-separated decreasing integers ("2,2,1"); "" is empty.
    static Partition parse(const std::string& wire);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Number of boxes |lambda|.
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    /// Row length, 0-based, reading missing rows as 0.
    int part(int i) const { return i < rows() ? parts_[static_cast<size_t>(i)] : 0; }

    Partition transpose() const;
    /// True iff mu fits inside this diagram (mu_i <= lambda_i for all i).
    bool contains(const Partition& mu) const;
    bool is_rectangle() const;

    /// Partitions obtained by adding one box (in all valid positions).
    std::vector<Partition> with_box_added() const;

    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of d, reverse-lexicographic from (d) down to (1^d).
/// The order is the canonical enumeration used everywhere in the library.
const std::vector<Partition>& partitions_of(int d);

/// The partition with n+1 parts each equal to m+1, i.e. the diagram with
/// m+1 columns and n+1 rows exactly as the source convention states it.
/// The orientation actually realized by super evaluation is the transpose;
/// see realized_rectangle below.
Partition rectangle(int m, int n);

/// The rectangle whose containment characterizes vanishing of the Schur
/// functor on k^{m|n} under this library's symmetrizer convention
/// (rows first, then columns): m+1 rows each of length n+1. Pinned once by
/// the evaluation oracle (see ideals::detect_rectangle_orientation) and
/// asserted by the test suite.
Partition realized_rectangle(int m, int n);

/// Number of standard Young tableaux of shape lambda (hook length formula).
Integer count_standard_tableaux(const Partition& lambda);

/// Dimension of the Schur functor of lambda applied to an m-dimensional
/// purely even space; 0 when lambda has more than m rows.
Integer weyl_dim(const Partition& lambda, int m);

/// The raw Weyl product over pairs 1 <= i < j <= m with lambda padded by
/// zeros. Requires rows(lambda) <= m.
Rational tau_weyl(const Partition& lambda, int m);

/// Littlewood-Richardson coefficient [lambda : mu, nu], computed by direct
/// enumeration of LR skew tableaux of shape lambda/mu with content nu.
/// Returns 0 when |mu| + |nu| != |lambda| or mu is not contained in lambda.
long long lr_coeff(const Partition& lambda, const Partition& mu, const Partition& nu);

} // namespace superschur
