#pragma once

#include <gradim/polynomial.hpp>

#include <map>
#include <string>
#include <vector>

namespace gradim {

/// Per-frequency polynomial degrees of an exp-polynomial, index = frequency.
/// Frequencies that carry no polynomial are -inf.
using DegreeSequence = std::vector<Degree>;

std::string degree_sequence_str(const DegreeSequence& d);

/// Finite sum  sum_k p_k(x) * e^{kx}  with rational polynomials p_k and
/// nonnegative integer frequencies k. The family is closed under addition,
/// multiplication, d/dx and integration from 0, which is everything the
/// graded-dimension generating series need.
///
/// Canonical form: no frequency maps to the zero polynomial, so structural
/// equality coincides with equality of functions.
class ExpPolynomial {
public:
    ExpPolynomial() = default;

    /// Single term p(x) * e^{freq x}. Negative frequencies are rejected.
    static ExpPolynomial term(int freq, Polynomial p);
    static ExpPolynomial zero() { return ExpPolynomial(); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Polynomial>& terms() const { return terms_; }
    /// Largest frequency present, or -1 for the zero element.
    int max_frequency() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
    /// The polynomial attached to e^{freq x} (zero polynomial if absent).
    const Polynomial& poly_at(int freq) const;

    ExpPolynomial operator+(const ExpPolynomial& o) const;
    ExpPolynomial operator-() const;
    ExpPolynomial operator-(const ExpPolynomial& o) const;
    ExpPolynomial operator*(const ExpPolynomial& o) const;
    ExpPolynomial operator*(const Rational& s) const;

    /// Termwise d/dx: (p e^{kx})' = (p' + k p) e^{kx}.
    ExpPolynomial derivative() const;

    /// The integral operator: x |-> integral_0^x. For k >= 1 the primitive of
    /// p(x) e^{kx} is q(x) e^{kx} with q' + k q = p, and the evaluation at 0
    /// deposits -q(0) into the frequency-0 constant term.
    ExpPolynomial integral() const;

    /// j-fold application of integral(); j = 0 is the identity.
    ExpPolynomial iterated_integral(int j) const;

    Rational value_at_zero() const;

    /// Exact Maclaurin coefficient of x^n:
    ///   sum_k sum_d p_{k,d} * k^{n-d} / (n-d)!.
    Rational taylor_coeff(long n) const;

    /// Coefficient of x^power e^{freq x}; zero when absent.
    Rational coeff(int freq, long power) const;

    DegreeSequence degree_sequence() const;

    bool operator==(const ExpPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const ExpPolynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    void add_term(int freq, const Polynomial& p);
    std::map<int, Polynomial> terms_;
};

/// The unique y with y' = y + rhs and y(0) = 0. Nonresonant frequencies
/// (k != 1) get a same-degree particular polynomial; the resonant frequency
/// k = 1 integrates (degree rises by one); the homogeneous C e^x is fixed by
/// the boundary value.
ExpPolynomial solve_linear_ode(const ExpPolynomial& rhs);

} // namespace gradim
