#pragma once

#include "superschur/super_operator.hpp"

#include <vector>

namespace superschur {

/// Trace polynomial of the normalized symmetrizer of the m0 x m0 square
/// partition, expanded from the closed product form.
TracePolynomial p_square_closed_form(int m0);

/// tau(m) for the m0 x m0 square as the product over l of
/// l^(rho(l-m0) - rho(l)) with rho(l) = min{l, m-l, m0} on 0 < l < m.
/// Valid for m >= 2*m0.
Rational tau_rho_product(int m0, int m);

/// Super dimension pair of the Schur functor of lambda applied to k^{m|n},
/// from the exact rank of the evaluated symmetrizer image.
DimPair schur_dim(const Partition& lambda, SuperSpace space);

/// Combinatorial vanishing test: contains the pinned rectangle. Agrees with
/// schur_dim == (0,0) wherever both are computable.
bool schur_vanishes(const Partition& lambda, SuperSpace space);

/// Sum of f^lambda squared over the partitions of d that survive on k^{m|n};
/// the predicted commutant dimension.
Integer hook_dimension_sum(SuperSpace space, int d);

/// Closed-form diagonal entry of the contracted symmetrizer operator for the
/// first-row box (1,l), in the source convention's coordinates (lambda_1
/// counts columns). Requires 1 <= l <= lambda_1 and lambda_(n+1) <= m so the
/// basis assignment exists.
Rational contraction_entry(const Partition& lambda, int l, int m, int n);

/// The same entry computed directly from the evaluated operator and the
/// literal basis assignment (boxes get e, e^-_i or e^+_j).
Rational contraction_entry_direct(const Partition& lambda, int l, int m, int n);

struct RectangleCriterion {
    bool f_nonzero = false;
    bool all_contractions_zero = false;
};

/// Evaluates the symmetrizer of lambda on the space and reports whether the
/// operator is nonzero and whether every partial supertrace vanishes.
RectangleCriterion rectangle_criterion(const Partition& lambda, SuperSpace space);

/// Dimension-pair identity for the Schur functor of a direct sum: compares
/// schur_dim(lambda, V (+) W) against the LR-weighted convolution of the
/// summand dimension pairs.
bool direct_sum_check(const Partition& lambda, SuperSpace v, SuperSpace w);

struct RectangleScanRow {
    Partition lambda;
    int m = 0;
    int n = 0;
    bool f_nonzero = false;
    bool contractions_zero = false;
    bool is_pinned_rectangle = false;
};

/// Exhaustive rectangle-criterion scan over all partitions of 1..max_degree and
/// the given spaces (size-guarded combinations are skipped).
std::vector<RectangleScanRow> rectangle_scan(int max_degree,
                                             const std::vector<SuperSpace>& spaces);

} // namespace superschur
