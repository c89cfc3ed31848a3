#include <gradim/asymptotics.hpp>

#include <gradim/lambert.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace gradim {

namespace {
constexpr double kE = 2.718281828459045235360287;
constexpr double kPi = 3.141592653589793238462643;
} // namespace

double g_closed_form(double z) {
    if (!(z > -2.0 && z < kE - 2.0))
        throw std::domain_error("g_closed_form: z must lie in (-2, e-2)");
    const double zeta = -std::exp(-2.0) * (z + 2.0);
    const double w = lambert_w(WBranch::minus_one, zeta);
    return 1.0 - (z + 2.0) * (1.0 + 1.0 / w);
}

bool ode_residual_series(int N, const SigmaSequence& sigmas) {
    if (N < 1) throw std::invalid_argument("ode_residual_series: N must be >= 1");
    if (sigmas.n_max() < N)
        throw std::invalid_argument("ode_residual_series: sigma sequence too short");
    const int order = N + 2;
    PowerSeries g(order);
    for (int n = 0; n + 2 <= order; ++n)
        g[n + 2] = make_rational(sigmas.at(n), factorial(n + 2));
    PowerSeries one(order);
    one[0] = Rational(1);
    PowerSeries x(order);
    x[1] = Rational(1);
    const PowerSeries residual = g.derivative() * (one - g) - x - g * Rational(2);
    return residual.vanishes_through(N);
}

PuiseuxCoefficients puiseux_mu(int k_max) {
    if (k_max < 1) throw std::invalid_argument("puiseux_mu: k_max must be >= 1");
    PuiseuxCoefficients p;
    p.mu = {Rational(-1), Rational(1)};
    p.helper = {Rational(2), Rational(-1)};
    for (int k = 2; k <= k_max; ++k) {
        Rational ak(0);
        for (int j = 2; j <= k - 1; ++j)
            ak += p.mu[static_cast<size_t>(j)] * p.mu[static_cast<size_t>(k + 1 - j)];
        p.helper.push_back(ak);
        const Rational muk = Rational(k - 1, k + 1) * (p.mu[static_cast<size_t>(k - 2)] / 2 +
                                                       p.helper[static_cast<size_t>(k - 2)] / 4) -
                             ak / 2 - p.mu[static_cast<size_t>(k - 1)] / Rational(k + 1);
        p.mu.push_back(muk);
    }
    return p;
}

double sigma_asymptotic_log_estimate(int n) {
    if (n < 1) throw std::domain_error("sigma_asymptotic_log_estimate: n must be >= 1");
    // sqrt(e (e-2) / (2 pi)): the (e-2)^{1/2} factor comes from writing the
    // singular part -sqrt(2e) sqrt(e-2-z) as a multiple of (1 - z/(e-2))^{1/2}
    // before transferring to coefficients.
    const double log_const = 0.5 * (1.0 + std::log(kE - 2.0) - std::log(2.0 * kPi));
    return log_const - (n + 2) * std::log(kE - 2.0) - 1.5 * std::log(static_cast<double>(n)) +
           std::lgamma(static_cast<double>(n) + 3.0);
}

double sigma_asymptotic_estimate(int n) { return std::exp(sigma_asymptotic_log_estimate(n)); }

std::string sigma_asymptotic_estimate_str(int n) {
    const double log10_value = sigma_asymptotic_log_estimate(n) / std::log(10.0);
    const double exponent = std::floor(log10_value);
    const double mantissa = std::pow(10.0, log10_value - exponent);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6fe+%.0f", mantissa, exponent);
    return buf;
}

double sigma_ratio(const BigInt& sigma_n, int n) {
    return std::exp(log_of(sigma_n) - sigma_asymptotic_log_estimate(n));
}

double growth_rate_diagnostic(const SigmaSequence& sigmas) {
    const int n = sigmas.n_max();
    if (n < 9) throw std::invalid_argument("growth_rate_diagnostic: need at least 10 terms");
    return std::exp(log_of(sigmas.at(n - 1)) - log_of(sigmas.at(n)) +
                    std::log(static_cast<double>(n) + 2.0));
}

std::vector<AsymptoticReport> asymptotic_table(const SigmaSequence& sigmas) {
    std::vector<AsymptoticReport> rows;
    for (int n = 1; n <= sigmas.n_max(); ++n) {
        AsymptoticReport r;
        r.n = n;
        r.sigma_exact = sigmas.at(n);
        r.log_estimate = sigma_asymptotic_log_estimate(n);
        r.ratio = sigma_ratio(r.sigma_exact, n);
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace gradim
