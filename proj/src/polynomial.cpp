#include <gradim/polynomial.hpp>

#include <algorithm>
#include <sstream>

namespace gradim {

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

Polynomial Polynomial::monomial(long power, Rational c) {
    if (power < 0) throw std::domain_error("Polynomial::monomial: negative power");
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(power) + 1, Rational(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Rational& Polynomial::coeff(size_t i) const {
    static const Rational zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial();
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s == 0) return Polynomial();
    std::vector<Rational> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * s;
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::integral_from_zero() const {
    if (coeffs_.empty()) return Polynomial();
    std::vector<Rational> r(coeffs_.size() + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
    return Polynomial(std::move(r));
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string Polynomial::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << to_plain_string(coeffs_[i]);
        if (i == 1) os << "*x";
        else if (i > 1) os << "*x^" << i;
        first = false;
    }
    return os.str();
}

} // namespace gradim
