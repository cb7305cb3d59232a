#pragma once

#include "superschur/group_algebra.hpp"
#include "superschur/super_space.hpp"

#include <map>

namespace superschur {

/// Exact-rational endomorphism of V^{tensor d} for a super space V, stored
/// sparsely row by row. Multi-indices are encoded with the leftmost factor
/// most significant.
class SuperOperator {
public:
    SuperOperator(SuperSpace space, int degree);

    static SuperOperator zero(SuperSpace space, int degree) { return {space, degree}; }
    static SuperOperator identity_op(SuperSpace space, int degree);

    const SuperSpace& space() const { return space_; }
    int degree() const { return degree_; }
    long long side() const { return indexer_.side(); }
    const MultiIndexer& indexer() const { return indexer_; }

    Rational entry(long long row, long long col) const;
    void add_entry(long long row, long long col, const Rational& value);
    const std::map<long long, Rational>& row(long long r) const;

    bool is_zero() const;
    size_t nonzero_count() const;

    SuperOperator operator+(const SuperOperator& other) const;
    SuperOperator operator-(const SuperOperator& other) const;
    SuperOperator operator*(const Rational& scalar) const;
    /// Operator composition: (a.compose(b)) x = a(b(x)).
    SuperOperator compose(const SuperOperator& other) const;
    bool operator==(const SuperOperator& other) const;

    /// Sum over diagonal entries weighted by (-1)^(multi-index parity).
    Rational supertrace() const;

    /// Trace out one tensor factor (1-based position) with the supertrace
    /// sign convention compatible with duality; the result acts on d-1
    /// factors. For d == 1 the result is the 0-factor scalar operator.
    SuperOperator partial_supertrace(int position) const;

    /// True iff every entry connects multi-indices of equal total parity.
    bool is_even() const;

    /// (even, odd) dimensions of the image, by exact row reduction of the
    /// two parity blocks. Requires an even operator.
    DimPair rank_pair() const;

    /// Kronecker factor expansion: this (x) identity on one extra factor.
    SuperOperator tensor_identity() const;

private:
    SuperSpace space_;
    int degree_;
    MultiIndexer indexer_;
    std::vector<std::map<long long, Rational>> rows_;
};

/// The symmetry [sigma] of V^{tensor d}: positions permuted by sigma with
/// the Koszul sign (-1 for every transported pair of odd vectors).
SuperOperator perm_operator(const Perm& sigma, SuperSpace space);

/// Koszul sign of sigma acting on the basis tensor with the given digit
/// parities: product of -1 over inverted pairs that are both odd.
int koszul_sign(const Perm& sigma, const std::vector<int>& parities);

/// Evaluation k[S_d] -> End(V^{tensor d}), the tensor functor on morphisms.
SuperOperator evaluate(const GroupAlgebraElement& x, SuperSpace space);

} // namespace superschur
