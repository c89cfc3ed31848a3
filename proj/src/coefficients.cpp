#include <gradim/coefficients.hpp>

#include <cmath>
#include <sstream>

namespace gradim {

Rational gamma_formula(int s, int t) {
    if (s < 0) throw std::domain_error("gamma_formula: s must be >= 0");
    if (t < 1) throw std::domain_error("gamma_formula: t must be >= 1");
    BigInt num = int_pow(BigInt(t), 2 * (s + t - 1));
    if (s % 2 != 0) num = -num;
    return make_rational(num, int_pow(BigInt(2), s) * factorial(s) * factorial(t));
}

Rational delta_formula(int s, int t) {
    if (s < 1 || t < 1) throw std::domain_error("delta_formula: s and t must be >= 1");
    BigInt num = BigInt(5 * s + 9 * t - 8) * int_pow(BigInt(t), 2 * s + 2 * t - 4);
    if (s % 2 != 0) num = -num;
    return make_rational(num, BigInt(3) * int_pow(BigInt(2), s - 1) * factorial(s - 1) *
                                  factorial(t - 1));
}

bool abel_identity_check(int t) {
    if (t < 1) throw std::domain_error("abel_identity_check: t must be >= 1");
    BigInt lhs1 = 0, lhs2 = 0;
    for (int c = 1; c <= t - 1; ++c) {
        const int d = t - c;
        const BigInt binom = factorial(t) / (factorial(c) * factorial(d));
        lhs1 += binom * int_pow(BigInt(c), c - 1) * int_pow(BigInt(d), d - 1);
        lhs2 += binom * int_pow(BigInt(c), c) * int_pow(BigInt(d), d - 1);
    }
    const BigInt rhs1 = t >= 2 ? BigInt(2) * (t - 1) * int_pow(BigInt(t), t - 2) : BigInt(0);
    const BigInt rhs2 = BigInt(t - 1) * int_pow(BigInt(t), t - 1);
    return lhs1 == rhs1 && lhs2 == rhs2;
}

bool binomial_derivative_check(int s, int c, int d) {
    if (s < 0 || c < 1 || d < 1)
        throw std::domain_error("binomial_derivative_check: need s >= 0, c, d >= 1");
    BigInt lhs1 = 0, lhs2 = 0;
    for (int a = 0; a <= s; ++a) {
        const BigInt term = factorial(s) / (factorial(a) * factorial(s - a)) *
                            int_pow(BigInt(c), a) * int_pow(BigInt(d), s - a);
        lhs1 += a * term;
        lhs2 += a * a * term;
    }
    const BigInt cd = BigInt(c) + d;
    const BigInt rhs1 = s >= 1 ? BigInt(s) * c * int_pow(cd, s - 1) : BigInt(0);
    BigInt rhs2 = rhs1;
    if (s >= 2) rhs2 += BigInt(s) * (s - 1) * c * c * int_pow(cd, s - 2);
    return lhs1 == rhs1 && lhs2 == rhs2;
}

double alpha_asymptotic_log_estimate(int i, int j) {
    if (i < 0 || j < 0) throw std::domain_error("alpha_asymptotic: negative index");
    return (2 * j + 1 + i) * std::log(static_cast<double>(j + 1)) -
           std::lgamma(static_cast<double>(j) + 1.0);
}

double alpha_asymptotic_estimate(int i, int j) {
    return std::exp(alpha_asymptotic_log_estimate(i, j));
}

void BivariatePoly::set(int a, int b, Rational c) {
    if (c == 0)
        coeffs_.erase({a, b});
    else
        coeffs_[{a, b}] = std::move(c);
}

Rational BivariatePoly::eval(long s, long t) const {
    Rational acc(0);
    for (const auto& [ab, coeff] : coeffs_)
        acc += coeff * Rational(int_pow(BigInt(s), ab.first) * int_pow(BigInt(t), ab.second));
    return acc;
}

std::string BivariatePoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [ab, coeff] : coeffs_) {
        if (!first) os << " + ";
        os << "(" << to_plain_string(coeff) << ")";
        if (ab.first == 1) os << "*s";
        else if (ab.first > 1) os << "*s^" << ab.first;
        if (ab.second == 1) os << "*t";
        else if (ab.second > 1) os << "*t^" << ab.second;
        first = false;
    }
    return os.str();
}

Rational qk_prefactor(int k, int s, int t) {
    if (s < k || t < k || t < 1) throw std::domain_error("qk_prefactor: need s,t >= k, t >= 1");
    const long e = 2L * s + 2L * t - 2L * k - 2L;
    Rational tpow = rational_pow(Rational(t), e);
    if (s % 2 != 0) tpow = -tpow;
    return tpow / Rational(int_pow(BigInt(2), s - k) * factorial(s - k) * factorial(t - k));
}

namespace {

// Exact dense linear solve A x = y by fraction-free (Bareiss) elimination on
// the denominator-cleared integer matrix, with row pivoting.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> y) {
    const size_t m = a.size();
    // clear denominators per row
    std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(m + 1));
    for (size_t r = 0; r < m; ++r) {
        BigInt l = 1;
        for (const auto& v : a[r]) l = boost::multiprecision::lcm(l, denominator(v));
        l = boost::multiprecision::lcm(l, denominator(y[r]));
        for (size_t c = 0; c < m; ++c)
            M[r][c] = numerator(a[r][c]) * (l / denominator(a[r][c]));
        M[r][m] = numerator(y[r]) * (l / denominator(y[r]));
    }
    BigInt prev = 1;
    for (size_t k = 0; k < m; ++k) {
        size_t piv = k;
        while (piv < m && M[piv][k] == 0) ++piv;
        if (piv == m) throw singular_system_error("interpolation system is singular");
        if (piv != k) std::swap(M[piv], M[k]);
        for (size_t r = k + 1; r < m; ++r) {
            for (size_t c = k + 1; c <= m; ++c)
                M[r][c] = (M[k][k] * M[r][c] - M[r][k] * M[k][c]) / prev;
            M[r][k] = 0;
        }
        prev = M[k][k];
    }
    std::vector<Rational> x(m);
    for (size_t r = m; r-- > 0;) {
        Rational acc(M[r][m]);
        for (size_t c = r + 1; c < m; ++c) acc -= Rational(M[r][c]) * x[c];
        x[r] = acc / Rational(M[r][r]);
    }
    return x;
}

} // namespace

QkFit fit_qk(int k, const FjTable& table) {
    if (k < 0) throw std::domain_error("fit_qk: negative k");
    QkFit fit;
    fit.k = k;

    // monomials s^a t^b of total degree <= k, fixed canonical order
    std::vector<std::pair<int, int>> monomials;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b) monomials.emplace_back(a, b);
    const size_t m = monomials.size();

    // raster grid with normalized values
    struct Point { int s, t; Rational value; };
    std::vector<Point> points;
    const int hi = 2 * k + 2;
    for (int s = k; s <= hi; ++s) {
        for (int t = std::max(k, 1); t <= hi; ++t) {
            const int j = s + t - 1;
            if (j > table.j_max())
                throw std::invalid_argument("fit_qk: table too shallow for the scan grid");
            const Rational coeff = table.at(j).coeff(t, 2L * s - k);
            points.push_back({s, t, coeff / qk_prefactor(k, s, t)});
            fit.grid_used.emplace_back(s, t);
        }
    }
    const size_t n_hold = (points.size() + 3) / 4; // ceil(25%)
    const size_t n_train = points.size() - n_hold;
    for (size_t i = n_train; i < points.size(); ++i)
        fit.held_out.emplace_back(points[i].s, points[i].t);

    // pick the first m linearly independent training rows (exact rank test)
    std::vector<std::vector<Rational>> basis;    // reduced rows for the rank test
    std::vector<std::vector<Rational>> rows;     // selected original rows
    std::vector<Rational> rhs;
    auto monomial_row = [&](int s, int t) {
        std::vector<Rational> row(m);
        for (size_t c = 0; c < m; ++c)
            row[c] = Rational(int_pow(BigInt(s), monomials[c].first) *
                              int_pow(BigInt(t), monomials[c].second));
        return row;
    };
    for (size_t i = 0; i < n_train && rows.size() < m; ++i) {
        std::vector<Rational> row = monomial_row(points[i].s, points[i].t);
        std::vector<Rational> red = row;
        for (const auto& b : basis) {
            // b is normalized so its leading entry is 1
            size_t lead = 0;
            while (lead < m && b[lead] == 0) ++lead;
            if (lead < m && red[lead] != 0) {
                const Rational f = red[lead];
                for (size_t c = lead; c < m; ++c) red[c] -= f * b[c];
            }
        }
        size_t lead = 0;
        while (lead < m && red[lead] == 0) ++lead;
        if (lead == m) continue; // dependent row
        const Rational inv = Rational(1) / red[lead];
        for (size_t c = lead; c < m; ++c) red[c] *= inv;
        basis.push_back(std::move(red));
        rows.push_back(std::move(row));
        rhs.push_back(points[i].value);
    }
    if (rows.size() < m)
        throw singular_system_error("fit_qk: training grid does not determine the polynomial");

    const std::vector<Rational> sol = solve_exact(std::move(rows), std::move(rhs));
    for (size_t c = 0; c < m; ++c)
        fit.candidate.set(monomials[c].first, monomials[c].second, sol[c]);

    fit.consistent = true;
    for (size_t i = n_train; i < points.size(); ++i) {
        if (fit.candidate.eval(points[i].s, points[i].t) != points[i].value) {
            fit.consistent = false;
            std::ostringstream os;
            os << "(s=" << points[i].s << ", t=" << points[i].t
               << "): candidate=" << to_plain_string(fit.candidate.eval(points[i].s, points[i].t))
               << " exact=" << to_plain_string(points[i].value);
            fit.first_mismatch = os.str();
            break;
        }
    }
    return fit;
}

} // namespace gradim
