#include <gradim/lambert.hpp>

#include <cmath>
#include <stdexcept>

namespace gradim {

namespace {

constexpr double kE = 2.718281828459045235360287;
constexpr double kInvE = 1.0 / kE;

// W(-1/e + p^2/(2e)) = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + O(p^5);
// p > 0 selects the principal side, p < 0 the minus-one side.
double branch_point_series(double p) {
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 - p * (43.0 / 540.0))));
}

double halley(double z, double w) {
    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double wp1 = w + 1.0;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const double dw = f / denom;
        w -= dw;
        if (std::abs(dw) <= 1e-16 * (1.0 + std::abs(w))) return w;
    }
    if (std::abs(w * std::exp(w) - z) <= 1e-13 * (1.0 + std::abs(z))) return w;
    throw std::runtime_error("lambert_w: Halley iteration did not converge");
}

} // namespace

double lambert_w(WBranch branch, double z) {
    if (!std::isfinite(z)) throw std::domain_error("lambert_w: non-finite argument");
    double q = 2.0 * (kE * z + 1.0); // p^2 of the branch-point expansion
    // Absorb rounding of the -1/e endpoint itself.
    if (q < 0.0 && q > -1e-12) q = 0.0;
    if (branch == WBranch::principal) {
        if (q < 0.0) throw std::domain_error("lambert_w: principal branch needs z >= -1/e");
        if (z == 0.0) return 0.0;
        const double p = std::sqrt(q);
        if (p < 1e-4) return branch_point_series(p); // series already at ~p^5 accuracy
        double w;
        if (z < -0.3235) {
            w = branch_point_series(p);
        } else if (z < kE) {
            w = std::log1p(z); // agrees with W to second order near 0
        } else {
            const double l1 = std::log(z); // >= 1 here, so log(l1) is safe
            const double l2 = std::log(l1);
            w = l1 - l2 + l2 / l1;
        }
        return halley(z, w);
    }
    // minus-one branch
    if (z >= 0.0) throw std::domain_error("lambert_w: minus_one branch needs z < 0");
    if (q < 0.0) throw std::domain_error("lambert_w: minus_one branch needs z >= -1/e");
    const double p = std::sqrt(q);
    if (p < 1e-4) return branch_point_series(-p);
    double w;
    if (z < -0.3235) {
        w = branch_point_series(-p);
    } else {
        const double l1 = std::log(-z);
        const double l2 = std::log(-l1);
        w = l1 - l2 + l2 / l1;
    }
    return halley(z, w);
}

} // namespace gradim
