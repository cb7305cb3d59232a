#include "superschur/trace_polynomial.hpp"

#include <stdexcept>

namespace superschur {

TracePolynomial::TracePolynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

void TracePolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TracePolynomial TracePolynomial::monomial(int power, const Rational& coeff) {
    if (power < 0) throw std::invalid_argument("negative power");
    std::vector<Rational> c(static_cast<size_t>(power) + 1, Rational(0));
    c.back() = coeff;
    return TracePolynomial(std::move(c));
}

int TracePolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

const Rational& TracePolynomial::coeff(int power) const {
    static const Rational zero(0);
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(power)];
}

Rational TracePolynomial::evaluate(const Rational& t) const {
    Rational value(0);
    for (size_t i = coeffs_.size(); i-- > 0;) value = value * t + coeffs_[i];
    return value;
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& other) const {
    std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
    return TracePolynomial(std::move(c));
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& other) const {
    if (coeffs_.empty() || other.coeffs_.empty()) return {};
    std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * other.coeffs_[j];
    return TracePolynomial(std::move(c));
}

TracePolynomial TracePolynomial::operator*(const Rational& scalar) const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x *= scalar;
    return TracePolynomial(std::move(c));
}

namespace {

std::string coeff_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace

std::string TracePolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<size_t>(k)];
        if (c == 0) continue;
        Rational abs = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = abs == 1;
        if (k == 0) {
            out += coeff_string(abs);
        } else {
            if (!unit) out += coeff_string(abs) + "*";
            out += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

} // namespace superschur
