#pragma once

#include <gradim/fj_series.hpp>
#include <gradim/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gradim {

/// gamma_{s,t} = [x^{2s} e^{tx}] f_{s+t-1} in closed form:
///   (-1)^s / (2^s s!) * t^{2(s+t-1)} / t!
/// Requires s >= 0, t >= 1.
Rational gamma_formula(int s, int t);

/// delta_{s,t} = [x^{2s-1} e^{tx}] f_{s+t-1} in closed form:
///   (-1)^s (5s + 9t - 8) t^{2s+2t-4} / (3 * 2^{s-1} (s-1)! (t-1)!)
/// Requires s, t >= 1.
Rational delta_formula(int s, int t);

/// Direct exact summation of the two rooted-tree convolution identities
///   sum_{c+d=t, c,d>=1} C(t;c,d) c^{c-1} d^{d-1} = 2 (t-1) t^{t-2}
///   sum_{c+d=t, c,d>=1} C(t;c,d) c^{c}   d^{d-1} =   (t-1) t^{t-1}
/// for t >= 1 (empty sums at t = 1).
bool abel_identity_check(int t);

/// Direct exact summation of the two moment identities obtained from the
/// binomial theorem by applying c * d/dc once and twice:
///   sum_{a+b=s} a   C(s;a,b) c^a d^b = s c (c+d)^{s-1}
///   sum_{a+b=s} a^2 C(s;a,b) c^a d^b = s c (c+d)^{s-1} + s(s-1) c^2 (c+d)^{s-2}
bool binomial_derivative_check(int s, int c, int d);

/// Growth estimate (j+1)^{2j+1}/j! * (j+1)^i for a_{i,j} at large i.
double alpha_asymptotic_estimate(int i, int j);
double alpha_asymptotic_log_estimate(int i, int j);

/// Bivariate polynomial in (s, t) over Rational; canonical form drops zero
/// coefficients. Keys are (s-power, t-power).
class BivariatePoly {
public:
    BivariatePoly() = default;
    void set(int a, int b, Rational c);
    Rational eval(long s, long t) const;
    const std::map<std::pair<int, int>, Rational>& coeffs() const { return coeffs_; }
    bool operator==(const BivariatePoly& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

private:
    std::map<std::pair<int, int>, Rational> coeffs_;
};

struct singular_system_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Result of the conjecture scan at level k.
struct QkFit {
    int k = 0;
    BivariatePoly candidate;                       // total degree <= k
    std::vector<std::pair<int, int>> grid_used;    // raster (s, t) sample points
    std::vector<std::pair<int, int>> held_out;     // verification points
    bool consistent = false;                       // exact match on every held-out point
    /// First held-out point where the candidate failed, with both values
    /// (empty strings when consistent).
    std::string first_mismatch;
};

/// Scans the family [x^{2s-k} e^{tx}] f_{s+t-1} over the raster grid
/// k <= s <= 2k+2, max(k,1) <= t <= 2k+2: normalizes each coefficient by
///   (-1)^s t^{2s+2t-2k-2} / (2^{s-k} (s-k)! (t-k)!),
/// interpolates a total-degree-<=k bivariate polynomial through the first
/// independent training points (the last 25% of the raster is held out), and
/// verifies the held-out points exactly. Throws singular_system_error when
/// the training grid cannot determine the polynomial.
QkFit fit_qk(int k, const FjTable& table);

/// The normalization prefactor of the scan; exposed for tests.
Rational qk_prefactor(int k, int s, int t);

} // namespace gradim
