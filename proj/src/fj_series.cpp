#include <gradim/fj_series.hpp>

#include <sstream>

namespace gradim {

namespace {

ExpPolynomial f_zero() {
    // e^x - x - 1
    return ExpPolynomial::term(1, Polynomial{Rational(1)}) +
           ExpPolynomial::term(0, Polynomial{Rational(-1), Rational(-1)});
}

void check_entry(int j, const ExpPolynomial& f, const AlphaTriangle& alpha) {
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "FjTable: entry " << j << " violates invariant: " << what;
        throw std::logic_error(os.str());
    };
    if (f.taylor_coeff(0) != 0 || f.taylor_coeff(1) != 0)
        fail("series must start at x^2");
    if (f.taylor_coeff(2) != Rational(1, 2)) fail("x^2 coefficient must be 1/2");
    if (j >= 1) {
        if (f.degree_sequence() != expected_fj_degrees(j)) fail("degree sequence");
        // leading e^{(j+1)x} coefficient is the constant (j+1)^{2j} / (j+1)!
        if (f.max_frequency() != j + 1) fail("maximal frequency");
        const Rational lead = make_rational(int_pow(BigInt(j + 1), 2 * j), factorial(j + 1));
        if (f.poly_at(j + 1) != Polynomial::constant(lead)) fail("leading coefficient");
    }
    // Maclaurin column must reproduce the triangle entries.
    for (int i = 0; i + j <= alpha.n_max(); ++i) {
        if (f.taylor_coeff(i + 2) * Rational(factorial(i + 2)) != Rational(alpha.at(i, j)))
            fail("Maclaurin cross-check against the triangle recursion");
    }
}

} // namespace

DegreeSequence expected_fj_degrees(int j) {
    DegreeSequence d;
    d.push_back(Degree::neg_inf());
    for (int k = 1; k <= j + 1; ++k) d.push_back(Degree(2 * (j - k + 1)));
    return d;
}

FjTable FjTable::compute(int j_max) {
    if (j_max < 0) throw std::invalid_argument("FjTable: negative j_max");
    FjTable t;
    const AlphaTriangle alpha = AlphaTriangle::compute(j_max + 8);
    t.entries_.push_back(f_zero());
    t.integrals_.push_back(t.entries_.front()); // I^0(f_0)
    check_entry(0, t.entries_.front(), alpha);
    const Rational half(1, 2);
    for (int j = 0; j < j_max; ++j) {
        ExpPolynomial conv;
        for (int q = 0; q <= j; ++q)
            conv = conv + t.integrals_[static_cast<size_t>(q)] *
                              t.integrals_[static_cast<size_t>(j - q)];
        ExpPolynomial inner = t.integrals_[static_cast<size_t>(j)].integral() + conv * half;
        for (int d = 0; d < j + 2; ++d) inner = inner.derivative();
        ExpPolynomial f_next = solve_linear_ode(inner);
        check_entry(j + 1, f_next, alpha);
        t.integrals_.push_back(f_next.iterated_integral(j + 1));
        t.entries_.push_back(std::move(f_next));
    }
    return t;
}

bool verify_integral_identity(int j, const FjTable& table) {
    if (j < 0 || j + 1 > table.j_max())
        throw std::invalid_argument("verify_integral_identity: table too shallow");
    const ExpPolynomial lhs = table.at(j + 1).iterated_integral(j + 1);
    ExpPolynomial rhs =
        table.at(j + 1).iterated_integral(j + 2) + table.at(j).iterated_integral(j + 1);
    ExpPolynomial conv;
    for (int q = 0; q <= j; ++q)
        conv = conv + table.at(q).iterated_integral(q) *
                          table.at(j - q).iterated_integral(j - q);
    rhs = rhs + conv * Rational(1, 2);
    return lhs == rhs;
}

bool verify_degree_bound(int j, const FjTable& table) {
    if (j < 1 || j > table.j_max())
        throw std::invalid_argument("verify_degree_bound: j outside table");
    return table.at(j).degree_sequence() == expected_fj_degrees(j);
}

} // namespace gradim
