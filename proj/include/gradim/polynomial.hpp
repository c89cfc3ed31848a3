#pragma once

#include <gradim/rational.hpp>

#include <string>
#include <vector>

namespace gradim {

/// Polynomial degree extended with -infinity for the zero polynomial.
class Degree {
public:
    constexpr Degree() : finite_(false), value_(0) {}
    constexpr explicit Degree(int v) : finite_(true), value_(v) {}

    static constexpr Degree neg_inf() { return Degree(); }

    bool is_neg_inf() const { return !finite_; }
    int value() const {
        if (!finite_) throw std::logic_error("Degree: value() of -inf");
        return value_;
    }

    // Shift by a constant; -inf absorbs.
    Degree operator+(int d) const { return finite_ ? Degree(value_ + d) : neg_inf(); }
    // Sum of degrees as in deg(p*q); -inf absorbs.
    Degree operator+(Degree o) const {
        return (finite_ && o.finite_) ? Degree(value_ + o.value_) : neg_inf();
    }
    // Degree drop under d/dx, with the convention 0 - 1 = -inf.
    Degree after_derivative() const {
        return (finite_ && value_ > 0) ? Degree(value_ - 1) : neg_inf();
    }

    friend bool operator==(Degree a, Degree b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend bool operator!=(Degree a, Degree b) { return !(a == b); }
    friend bool operator<(Degree a, Degree b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator<=(Degree a, Degree b) { return a < b || a == b; }

    static Degree max(Degree a, Degree b) { return a < b ? b : a; }

    std::string str() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    bool finite_;
    int value_;
};

/// Dense univariate polynomial over Rational, canonical form: no trailing
/// zero coefficients; the zero polynomial stores no coefficients at all.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Rational c);
    static Polynomial monomial(long power, Rational c);

    bool is_zero() const { return coeffs_.empty(); }
    Degree degree() const {
        return coeffs_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(coeffs_.size()) - 1);
    }
    /// Coefficient of x^i (zero outside the stored range).
    const Rational& coeff(size_t i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;

    Polynomial derivative() const;
    /// Antiderivative vanishing at x = 0.
    Polynomial integral_from_zero() const;

    Rational operator()(const Rational& x) const;
    Rational at_zero() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

} // namespace gradim
