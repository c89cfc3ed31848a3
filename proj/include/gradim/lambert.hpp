#pragma once

namespace gradim {

/// The two real branches of the Lambert W function (w e^w = z).
enum class WBranch {
    principal, // W_0: z >= -1/e, values >= -1
    minus_one  // W_{-1}: -1/e <= z < 0, values <= -1
};

/// Solves w e^w = z on the requested branch by Halley iteration from a
/// branch-specific seed (square-root expansion near the branch point -1/e,
/// log expansions elsewhere). Relative residual is at machine level,
/// comfortably below 1e-14 * max(1, |z|).
///
/// Throws std::domain_error outside the branch domain and std::runtime_error
/// if the iteration fails to settle (pathological input near -1/e).
double lambert_w(WBranch branch, double z);

} // namespace gradim
