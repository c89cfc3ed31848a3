#pragma once

#include <gradim/power_series.hpp>
#include <gradim/rational.hpp>
#include <gradim/triangle.hpp>

#include <string>
#include <vector>

namespace gradim {

/// g(z) = 1 - (z+2)(1 + 1/W_{-1}(-e^{-2}(z+2))), the closed form of the
/// exponential generating function sum_n s_n z^{n+2}/(n+2)!. Real-analytic
/// for -2 < z < e-2, where the argument of W_{-1} stays inside (-1/e, 0).
double g_closed_form(double z);

/// Exact formal check that g(x) = sum s_n x^{n+2}/(n+2)! satisfies
///   g'(x) (1 - g(x)) - x - 2 g(x) = 0
/// through order x^N. Needs sigmas through index N.
bool ode_residual_series(int N, const SigmaSequence& sigmas);

/// Coefficients of the two-branch square-root expansion of the inverse of
/// w e^w around the branch point -1/e:  W = sum_k mu_k p^k, p = -sqrt(2(ez+1)).
struct PuiseuxCoefficients {
    std::vector<Rational> mu;     // mu_0 = -1, mu_1 = 1, mu_2 = -1/3, ...
    std::vector<Rational> helper; // auxiliary convolution sequence a_k
};

/// mu and helper sequences through k_max via the coupled recurrences
///   a_k  = sum_{j=2}^{k-1} mu_j mu_{k+1-j}
///   mu_k = (k-1)/(k+1) (mu_{k-2}/2 + a_{k-2}/4) - a_k/2 - mu_{k-1}/(k+1)
/// from mu_0 = -1, mu_1 = 1, a_0 = 2, a_1 = -1.
PuiseuxCoefficients puiseux_mu(int k_max);

/// log of the dominant-singularity estimate for s_n:
///   sqrt(e (e-2) / (2 pi)) * (e-2)^{-n-2} * n^{-3/2} * (n+2)!
/// accumulated in the log domain so n in the hundreds stays finite.
double sigma_asymptotic_log_estimate(int n);
/// exp of the above; overflows double for n around 170 and up.
double sigma_asymptotic_estimate(int n);
/// Scientific-notation rendering of the estimate from its log (any n).
std::string sigma_asymptotic_estimate_str(int n);

/// s_n / estimate(n), evaluated in the log domain from the exact value.
double sigma_ratio(const BigInt& sigma_n, int n);

/// Empirical radius-of-convergence estimator of sum s_n x^{n+2}/(n+2)!:
/// the last value of (s_{n-1} (n+2)) / s_n, which tends to e-2. Needs at
/// least 10 terms.
double growth_rate_diagnostic(const SigmaSequence& sigmas);

struct AsymptoticReport {
    int n = 0;
    BigInt sigma_exact;
    double log_estimate = 0.0;
    double ratio = 0.0;
};

std::vector<AsymptoticReport> asymptotic_table(const SigmaSequence& sigmas);

} // namespace gradim
