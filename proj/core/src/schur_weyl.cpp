#include "superschur/schur_weyl.hpp"

#include "superschur/config.hpp"

#include <stdexcept>

namespace superschur {

TracePolynomial p_square_closed_form(int m0) {
    if (m0 < 1) throw std::invalid_argument("p_square_closed_form: m0 must be positive");
    // prod over -m0 < i < m0 of (m0-i)^(|i|-m0) (t-i)^(m0-|i|)
    Rational constant(1);
    TracePolynomial poly = TracePolynomial::monomial(0, Rational(1));
    for (int i = -m0 + 1; i <= m0 - 1; ++i) {
        int abs_i = i < 0 ? -i : i;
        for (int k = 0; k < m0 - abs_i; ++k) constant /= (m0 - i);
        TracePolynomial factor(std::vector<Rational>{Rational(-i), Rational(1)});
        for (int k = 0; k < m0 - abs_i; ++k) poly = poly * factor;
    }
    return poly * constant;
}

Rational tau_rho_product(int m0, int m) {
    if (m0 < 1) throw std::invalid_argument("tau_rho_product: m0 must be positive");
    if (m < 2 * m0) throw std::invalid_argument("tau_rho_product: requires m >= 2*m0");
    auto rho = [&](int l) -> int {
        if (l <= 0 || l >= m) return 0;
        return std::min({l, m - l, m0});
    };
    // rho(l - m0) vanishes for l >= m + m0, so the support is finite.
    Rational value(1);
    for (int l = 1; l <= m + m0; ++l) {
        int e = rho(l - m0) - rho(l);
        for (int k = 0; k < e; ++k) value *= l;
        for (int k = 0; k < -e; ++k) value /= l;
    }
    return value;
}

DimPair schur_dim(const Partition& lambda, SuperSpace space) {
    if (lambda.empty()) return {1, 0}; // S^0 is the unit object
    return evaluate(young_symmetrizer(lambda), space).rank_pair();
}

bool schur_vanishes(const Partition& lambda, SuperSpace space) {
    if (lambda.empty()) return false;
    return lambda.contains(realized_rectangle(space.even, space.odd));
}

Integer hook_dimension_sum(SuperSpace space, int d) {
    Integer sum = 0;
    for (const Partition& lambda : partitions_of(d)) {
        if (schur_vanishes(lambda, space)) continue;
        Integer f = count_standard_tableaux(lambda);
        sum += f * f;
    }
    return sum;
}

namespace {

// Strand index (0-based) of box (i,j) of lambda, 1-based box coordinates,
// under the column-major numbering that realizes the source convention's
// symmetrizer as young_symmetrizer(transpose(lambda)).
int column_major_strand(const Partition& transpose_lambda, int i, int j) {
    int strand = 0;
    for (int col = 1; col < j; ++col) strand += transpose_lambda.part(col - 1);
    return strand + (i - 1);
}

struct EntrySetup {
    Partition lambda_t;
    int rows = 0;        // p, number of rows of lambda
    int n0 = 0;          // min(n, rows)
    SuperOperator op;    // evaluated symmetrizer in the transposed convention
    std::vector<int> base_digits; // digits per strand, chosen box filled later
    int chosen_strand = 0;

    EntrySetup(const Partition& lambda, int l, int m, int n)
        : lambda_t(lambda.transpose()), op(SuperSpace{m, n}, lambda.size()) {
        if (l < 1 || l > lambda.part(0))
            throw std::invalid_argument("contraction entry: l out of range");
        rows = lambda.rows();
        n0 = std::min(n, rows);
        op = evaluate(young_symmetrizer(lambda_t), SuperSpace{m, n});
        base_digits.assign(static_cast<size_t>(lambda.size()), 0);
        for (int i = 1; i <= rows; ++i) {
            for (int j = 1; j <= lambda.part(i - 1); ++j) {
                int strand = column_major_strand(lambda_t, i, j);
                if (i == 1 && j == l) {
                    chosen_strand = strand;
                    continue;
                }
                // e^-_i is basis index m+i-1, e^+_j is basis index j-1
                base_digits[static_cast<size_t>(strand)] = i <= n0 ? m + i - 1 : j - 1;
            }
        }
    }

    Rational diagonal(int digit) {
        std::vector<int> digits = base_digits;
        digits[static_cast<size_t>(chosen_strand)] = digit;
        long long index = op.indexer().index(digits);
        return op.entry(index, index);
    }
};

} // namespace

Rational contraction_entry_direct(const Partition& lambda, int l, int m, int n) {
    if (lambda.empty()) throw std::invalid_argument("contraction entry: empty partition");
    if (lambda.part(n) > m) return 0; // the evaluated symmetrizer vanishes outright
    EntrySetup setup(lambda, l, m, n);
    Rational entry(0);
    for (int r = 0; r < m; ++r) entry += setup.diagonal(r);
    for (int s = 0; s < n; ++s) entry -= setup.diagonal(m + s);
    return entry;
}

Rational contraction_entry(const Partition& lambda, int l, int m, int n) {
    if (lambda.empty()) throw std::invalid_argument("contraction entry: empty partition");
    if (l < 1 || l > lambda.part(0))
        throw std::invalid_argument("contraction entry: l out of range");
    if (n < 0 || m < 0) throw std::invalid_argument("contraction entry: negative dimensions");
    if (lambda.part(n) > m) return 0; // the evaluated symmetrizer vanishes outright
    Partition lt = lambda.transpose();
    int n0 = std::min(n, lambda.rows());
    Rational factor(m - n - lambda.part(0) + lt.part(l - 1));
    // Stabilizer count of the basis assignment: the rows of constant odd
    // labels contribute their full factorials, the even tails of the
    // columns below them contribute (column length - n0)!. The vanishing
    // characterization only needs that this is nonzero.
    Rational c(1);
    for (int i = 0; i < n0; ++i) c *= Rational(factorial(lambda.part(i)));
    for (int j = 0; j < lt.rows(); ++j)
        c *= Rational(factorial(std::max(lt.part(j) - n0, 0)));
    Rational denom = n0 >= 1 ? Rational(lambda.part(0)) : Rational(lt.part(l - 1));
    return c / denom * factor;
}

RectangleCriterion rectangle_criterion(const Partition& lambda, SuperSpace space) {
    if (lambda.empty()) throw std::invalid_argument("rectangle_criterion: empty partition");
    SuperOperator f = evaluate(young_symmetrizer(lambda), space);
    RectangleCriterion result;
    result.f_nonzero = !f.is_zero();
    result.all_contractions_zero = true;
    for (int pos = 1; pos <= lambda.size(); ++pos) {
        if (!f.partial_supertrace(pos).is_zero()) {
            result.all_contractions_zero = false;
            break;
        }
    }
    return result;
}

bool direct_sum_check(const Partition& lambda, SuperSpace v, SuperSpace w) {
    SuperSpace sum{v.even + w.even, v.odd + w.odd};
    DimPair left = schur_dim(lambda, sum);

    long long even_total = 0, odd_total = 0;
    int d = lambda.size();
    for (int k = 0; k <= d; ++k) {
        for (const Partition& mu : partitions_of(k)) {
            for (const Partition& nu : partitions_of(d - k)) {
                long long mult = lr_coeff(lambda, mu, nu);
                if (mult == 0) continue;
                DimPair a = schur_dim(mu, v);
                DimPair b = schur_dim(nu, w);
                even_total += mult * (a.even * b.even + a.odd * b.odd);
                odd_total += mult * (a.even * b.odd + a.odd * b.even);
            }
        }
    }
    return left.even == even_total && left.odd == odd_total;
}

std::vector<RectangleScanRow> rectangle_scan(int max_degree,
                                             const std::vector<SuperSpace>& spaces) {
    std::vector<RectangleScanRow> rows;
    for (int d = 1; d <= max_degree; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            for (SuperSpace space : spaces) {
                if (bounded_pow(space.dim(), d, config().max_eval_dim) > config().max_eval_dim)
                    continue;
                RectangleCriterion crit = rectangle_criterion(lambda, space);
                bool pinned = lambda.is_rectangle() &&
                              lambda.rows() - lambda.part(0) == space.superdim();
                rows.push_back({lambda, space.even, space.odd, crit.f_nonzero,
                                crit.all_contractions_zero, pinned});
            }
        }
    }
    return rows;
}

} // namespace superschur
