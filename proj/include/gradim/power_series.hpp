#pragma once

#include <gradim/rational.hpp>

#include <vector>

namespace gradim {

/// Formal power series over Rational truncated at a fixed order (coefficients
/// of x^0 .. x^order are exact; everything above is discarded).
class PowerSeries {
public:
    explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1, Rational(0)) {
        if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational& operator[](int i) { return c_[static_cast<size_t>(i)]; }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    /// Truncated Cauchy product at the smaller of the two orders.
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries operator*(const Rational& s) const;

    /// Termwise derivative; the result is exact through order - 1.
    PowerSeries derivative() const;

    /// exp of a series with zero constant term, truncated at this order.
    PowerSeries exp() const;

    bool is_zero() const;
    /// True iff coefficients 0..through vanish.
    bool vanishes_through(int through) const;

private:
    std::vector<Rational> c_;
};

} // namespace gradim
