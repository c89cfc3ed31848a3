#include <gradim/power_series.hpp>

#include <algorithm>

namespace gradim {

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r[i] = (*this)[i] + o[i];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) r[i] = (*this)[i] - o[i];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    PowerSeries r(std::min(order(), o.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if ((*this)[i] == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (o[j] == 0) continue;
            r[i + j] += (*this)[i] * o[j];
        }
    }
    return r;
}

PowerSeries PowerSeries::operator*(const Rational& s) const {
    PowerSeries r(order());
    for (int i = 0; i <= order(); ++i) r[i] = (*this)[i] * s;
    return r;
}

PowerSeries PowerSeries::derivative() const {
    if (order() == 0) return PowerSeries(0);
    PowerSeries r(order() - 1);
    for (int i = 1; i <= order(); ++i) r[i - 1] = (*this)[i] * static_cast<long>(i);
    return r;
}

PowerSeries PowerSeries::exp() const {
    if ((*this)[0] != 0)
        throw std::domain_error("PowerSeries::exp: nonzero constant term");
    PowerSeries result(order());
    result[0] = Rational(1);
    PowerSeries power(order());
    power[0] = Rational(1); // running u^m
    BigInt mfact = 1;
    for (int m = 1; m <= order(); ++m) {
        power = power * *this;
        mfact *= m;
        const Rational inv = make_rational(BigInt(1), mfact);
        for (int i = m; i <= order(); ++i) result[i] += power[i] * inv;
    }
    return result;
}

bool PowerSeries::is_zero() const { return vanishes_through(order()); }

bool PowerSeries::vanishes_through(int through) const {
    for (int i = 0; i <= std::min(through, order()); ++i)
        if ((*this)[i] != 0) return false;
    return true;
}

} // namespace gradim
