#pragma once

#include <gradim/exp_polynomial.hpp>
#include <gradim/triangle.hpp>

#include <vector>

namespace gradim {

/// Closed exp-polynomial forms of the diagonal generating series
///   f_j(x) = sum_{i>=0} a_{i,j} x^{i+2} / (i+2)!,
/// built incrementally from f_0 = e^x - x - 1 by solving, for each j,
///   y' = y + D^{j+2}[ I^{j+1}(f_j) + 1/2 sum_{q<=j} I^q(f_q) I^{j-q}(f_{j-q}) ]
/// with y(0) = 0. Each new entry is cross-checked against the triangle
/// recursion before it is accepted.
class FjTable {
public:
    /// Builds f_0 .. f_{j_max}. Throws std::logic_error if any computed entry
    /// fails its Maclaurin cross-check against the triangle (or any of the
    /// cheap structural invariants); that signals a bug, not bad input.
    static FjTable compute(int j_max);

    int j_max() const { return static_cast<int>(entries_.size()) - 1; }
    const ExpPolynomial& at(int j) const { return entries_.at(static_cast<size_t>(j)); }
    const std::vector<ExpPolynomial>& entries() const { return entries_; }

private:
    std::vector<ExpPolynomial> entries_;
    std::vector<ExpPolynomial> integrals_; // integrals_[q] = I^q(f_q)
};

/// Exact check of the convolution identity
///   I^{j+1}(f_{j+1}) = I^{j+2}(f_{j+1}) + I^{j+1}(f_j)
///                      + 1/2 sum_{q=0}^{j} I^q(f_q) I^{j-q}(f_{j-q});
/// all iterated integrals are recomputed from the table entries.
bool verify_integral_identity(int j, const FjTable& table);

/// True iff degree_sequence(f_j) equals (-inf, 2j, 2(j-1), ..., 2, 0) exactly
/// (j >= 1).
bool verify_degree_bound(int j, const FjTable& table);

/// The expected exact degree sequence of f_j for j >= 1.
DegreeSequence expected_fj_degrees(int j);

} // namespace gradim
