#include "superschur/fractions.hpp"

#include <stdexcept>

namespace superschur {

namespace {

using Mat = std::vector<std::vector<Rational>>;

Mat make_mat(int rows, int cols) { return Mat(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols))); }

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat out = make_mat(static_cast<int>(n), static_cast<int>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Mat mat_kron(const Mat& a, const Mat& b) {
    size_t ar = a.size(), ac = ar ? a[0].size() : 0;
    size_t br = b.size(), bc = br ? b[0].size() : 0;
    Mat out = make_mat(static_cast<int>(ar * br), static_cast<int>(ac * bc));
    for (size_t i = 0; i < ar; ++i)
        for (size_t j = 0; j < ac; ++j) {
            if (a[i][j] == 0) continue;
            for (size_t k = 0; k < br; ++k)
                for (size_t l = 0; l < bc; ++l)
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
        }
    return out;
}

std::vector<int> parity_layout(SuperSpace s) {
    std::vector<int> p(static_cast<size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) p[static_cast<size_t>(i)] = s.parity(i);
    return p;
}

// sigma_{A,B,C}: A (x) (B (x) C) -> B (x) (A (x) C) on flattened indices,
// sign (-1)^(|a||b|); C only comes along for the ride.
Mat symmetry_mat(const std::vector<int>& pa, const std::vector<int>& pb, int dim_c) {
    int da = static_cast<int>(pa.size()), db = static_cast<int>(pb.size());
    Mat out = make_mat(da * db * dim_c, da * db * dim_c);
    for (int a = 0; a < da; ++a)
        for (int b = 0; b < db; ++b)
            for (int c = 0; c < dim_c; ++c) {
                int col = (a * db + b) * dim_c + c;
                int row = (b * da + a) * dim_c + c;
                int sign = (pa[static_cast<size_t>(a)] && pb[static_cast<size_t>(b)]) ? -1 : 1;
                out[static_cast<size_t>(row)][static_cast<size_t>(col)] = sign;
            }
    return out;
}

} // namespace

MatMorphism MatMorphism::zero(SuperSpace source, SuperSpace target) {
    return {source, target, make_mat(target.dim(), source.dim())};
}

MatMorphism MatMorphism::identity(SuperSpace space) {
    MatMorphism f = zero(space, space);
    for (int i = 0; i < space.dim(); ++i) f.mat[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return f;
}

MatMorphism MatMorphism::scalar(const Rational& value) {
    MatMorphism f = zero(SuperSpace{1, 0}, SuperSpace{1, 0});
    f.mat[0][0] = value;
    return f;
}

bool MatMorphism::is_zero() const {
    for (const auto& row : mat)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

bool MatMorphism::is_even() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            if (mat[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0 &&
                target.parity(i) != source.parity(j))
                return false;
    return true;
}

MatMorphism MatMorphism::compose(const MatMorphism& other) const {
    if (other.target.dim() != source.dim()) throw std::invalid_argument("compose: shape mismatch");
    return {other.source, target, mat_mul(mat, other.mat)};
}

MatMorphism MatMorphism::operator+(const MatMorphism& other) const {
    if (rows() != other.rows() || cols() != other.cols())
        throw std::invalid_argument("morphism sum: shape mismatch");
    MatMorphism out = *this;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j)
            out.mat[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                other.mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

MatMorphism MatMorphism::operator*(const Rational& scalar) const {
    MatMorphism out = *this;
    for (auto& row : out.mat)
        for (auto& v : row) v *= scalar;
    return out;
}

SuperSpace tensor_space(SuperSpace a, SuperSpace b) {
    return {a.even * b.even + a.odd * b.odd, a.even * b.odd + a.odd * b.even};
}

MatMorphism tensor(const MatMorphism& f, const MatMorphism& g) {
    // Both factors are even morphisms, so no Koszul signs arise; the labels
    // record dimension counts (tensor layouts are tracked by the callers
    // that need signs).
    return {tensor_space(f.source, g.source), tensor_space(f.target, g.target),
            mat_kron(f.mat, g.mat)};
}

MatMorphism koszul_symmetry(SuperSpace a, SuperSpace b, SuperSpace c) {
    return {tensor_space(a, tensor_space(b, c)), tensor_space(b, tensor_space(a, c)),
            symmetry_mat(parity_layout(a), parity_layout(b), c.dim())};
}

bool is_regular(const MatMorphism& f) { return !f.is_zero(); }

bool in_cf(const MatMorphism& h, const MatMorphism& f, SuperSpace c, SuperSpace c_prime) {
    SuperSpace a = f.source, a_prime = f.target;
    if (h.cols() != a.dim() * c.dim() || h.rows() != a_prime.dim() * c_prime.dim())
        throw std::invalid_argument("in_cf: shape mismatch");
    Mat fh = mat_kron(f.mat, h.mat);
    Mat front = symmetry_mat(parity_layout(a), parity_layout(a), c.dim());
    Mat back = symmetry_mat(parity_layout(a_prime), parity_layout(a_prime), c_prime.dim());
    return mat_mul(fh, front) == mat_mul(back, fh);
}

bool pairs_equivalent(const MatMorphism& h, const MatMorphism& f, const MatMorphism& l,
                      const MatMorphism& g, SuperSpace c, SuperSpace c_prime) {
    SuperSpace a = f.source, a_prime = f.target;
    SuperSpace b = g.source, b_prime = g.target;
    if (h.cols() != a.dim() * c.dim() || h.rows() != a_prime.dim() * c_prime.dim() ||
        l.cols() != b.dim() * c.dim() || l.rows() != b_prime.dim() * c_prime.dim())
        throw std::invalid_argument("pairs_equivalent: shape mismatch");
    // (f (x) l) o sigma_BAC = sigma_B'A'C' o (g (x) h)
    Mat lhs = mat_mul(mat_kron(f.mat, l.mat),
                      symmetry_mat(parity_layout(b), parity_layout(a), c.dim()));
    Mat rhs = mat_mul(symmetry_mat(parity_layout(b_prime), parity_layout(a_prime), c_prime.dim()),
                      mat_kron(g.mat, h.mat));
    return lhs == rhs;
}

FracSolveResult frac_solve(const MatMorphism& h, const MatMorphism& f, SuperSpace c,
                           SuperSpace c_prime) {
    if (f.target.dim() != 1) return {FracStatus::shape_mismatch, std::nullopt};
    if (h.cols() != f.source.dim() * c.dim() || h.rows() != c_prime.dim())
        return {FracStatus::shape_mismatch, std::nullopt};
    if (!is_regular(f)) return {FracStatus::not_regular, std::nullopt};
    if (!in_cf(h, f, c, c_prime)) return {FracStatus::not_in_cf, std::nullopt};

    int pivot = -1;
    for (int j = 0; j < f.cols(); ++j)
        if (f.mat[0][static_cast<size_t>(j)] != 0) {
            pivot = j;
            break;
        }
    MatMorphism l = MatMorphism::zero(c, c_prime);
    const Rational& scale = f.mat[0][static_cast<size_t>(pivot)];
    for (int cp = 0; cp < c_prime.dim(); ++cp)
        for (int cc = 0; cc < c.dim(); ++cc)
            l.mat[static_cast<size_t>(cp)][static_cast<size_t>(cc)] =
                h.mat[static_cast<size_t>(cp)][static_cast<size_t>(pivot * c.dim() + cc)] / scale;
    if (tensor(f, l).mat != h.mat)
        throw std::logic_error("frac_solve: h is in C_f but not of the form f (x) l");
    return {FracStatus::ok, std::move(l)};
}

Fraction Fraction::make(MatMorphism h, MatMorphism f) {
    if (h.source != f.source || h.target != f.target)
        throw std::invalid_argument("fraction: h and f must be parallel morphisms");
    if (!is_regular(f)) throw std::invalid_argument("fraction: f must be regular (nonzero)");
    // Evenness is inherited from the inputs; tensor-built morphisms carry
    // flattened labels, so it is not re-derived from them here.
    if (mat_kron(f.mat, h.mat) != mat_kron(h.mat, f.mat))
        throw std::invalid_argument("fraction: f (x) h must equal h (x) f");
    return {std::move(h), std::move(f)};
}

Fraction Fraction::of(const Rational& numerator, const Rational& denominator) {
    return make(MatMorphism::scalar(numerator), MatMorphism::scalar(denominator));
}

Fraction frac_add(const Fraction& x, const Fraction& y) {
    MatMorphism numerator = tensor(x.h, y.f) + tensor(x.f, y.h);
    return Fraction::make(std::move(numerator), tensor(x.f, y.f));
}

Fraction frac_mul(const Fraction& x, const Fraction& y) {
    return Fraction::make(tensor(x.h, y.h), tensor(x.f, y.f));
}

bool frac_equivalent(const Fraction& x, const Fraction& y) {
    return mat_kron(x.h.mat, y.f.mat) == mat_kron(x.f.mat, y.h.mat);
}

Rational kappa_scalar(const Fraction& x) {
    for (int i = 0; i < x.f.rows(); ++i)
        for (int j = 0; j < x.f.cols(); ++j)
            if (x.f.mat[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                Rational scalar = x.h.mat[static_cast<size_t>(i)][static_cast<size_t>(j)] /
                                  x.f.mat[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (x.f * scalar == x.h) return scalar;
                throw std::invalid_argument("kappa_scalar: h is not a scalar multiple of f");
            }
    throw std::invalid_argument("kappa_scalar: zero denominator morphism");
}

} // namespace superschur
