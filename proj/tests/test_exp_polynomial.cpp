#include <gradim/exp_polynomial.hpp>
#include <gradim/power_series.hpp>

#include <doctest.h>

#include <random>

using namespace gradim;

namespace {

ExpPolynomial f0() {
    // e^x - x - 1
    return ExpPolynomial::term(1, Polynomial{Rational(1)}) +
           ExpPolynomial::term(0, Polynomial{Rational(-1), Rational(-1)});
}

ExpPolynomial f1() {
    // 2 e^{2x} - (x^2/2 + 2x + 2) e^x
    return ExpPolynomial::term(2, Polynomial{Rational(2)}) +
           ExpPolynomial::term(1, Polynomial{Rational(-2), Rational(-2), Rational(-1, 2)});
}

// Uniform small rationals and exp-polynomials for the property tests.
struct Gen {
    std::mt19937 rng{987654321u};
    Rational rational() {
        std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
        return Rational(num(rng), den(rng));
    }
    Polynomial poly(int max_deg) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
        for (auto& x : c) x = rational();
        return Polynomial(std::move(c));
    }
    ExpPolynomial ep(int max_freq = 3, int max_deg = 3) {
        std::uniform_int_distribution<int> nterms(0, 3), freq(0, max_freq);
        ExpPolynomial f;
        const int n = nterms(rng);
        for (int i = 0; i < n; ++i) f = f + ExpPolynomial::term(freq(rng), poly(max_deg));
        return f;
    }
};

// Independent Maclaurin oracle: expand each p_k(x) e^{kx} with a truncated
// exponential series instead of the closed k-power formula.
PowerSeries series_oracle(const ExpPolynomial& f, int order) {
    PowerSeries total(order);
    for (const auto& [k, p] : f.terms()) {
        PowerSeries expk(order);
        BigInt mfact = 1;
        for (int m = 0; m <= order; ++m) {
            if (m > 0) mfact *= m;
            expk[m] = make_rational(int_pow(BigInt(k), m), mfact);
        }
        PowerSeries ps(order);
        for (size_t d = 0; d < p.coeffs().size() && d <= static_cast<size_t>(order); ++d)
            ps[static_cast<int>(d)] = p.coeff(d);
        total = total + ps * expk;
    }
    return total;
}

} // namespace

TEST_CASE("rational scalars stay canonical") {
    const Rational r = make_rational(BigInt(6), BigInt(-8));
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 4);
    CHECK(denominator(Rational(4, 2)) == 1);
    CHECK(make_rational(BigInt(0), BigInt(-5)) == Rational(0));
    CHECK_THROWS_AS(make_rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(5), 0) == Rational(1));
    CHECK(factorial(6) == 720);
    CHECK(int_pow(BigInt(3), 10) == 59049);
}

TEST_CASE("degree type") {
    CHECK(Degree::neg_inf() < Degree(0));
    CHECK(Degree(0) < Degree(3));
    CHECK(Degree::neg_inf() + 5 == Degree::neg_inf());
    CHECK(Degree(2) + Degree(3) == Degree(5));
    CHECK(Degree(0).after_derivative() == Degree::neg_inf());
    CHECK(Degree(4).after_derivative() == Degree(3));
    CHECK(Degree::neg_inf().str() == "-inf");
}

TEST_CASE("polynomial canonical form and ops") {
    CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
    CHECK(Polynomial{Rational(1), Rational(0)}.degree() == Degree(0));
    const Polynomial p{Rational(1), Rational(2)};
    CHECK((p - p).is_zero());
    CHECK((p * p) == Polynomial{Rational(1), Rational(4), Rational(4)});
    CHECK(p.integral_from_zero().derivative() == p);
    CHECK(p(Rational(3)) == Rational(7));
}

TEST_CASE("addition: identity, cancellation, doubling") {
    CHECK(f0() + ExpPolynomial::zero() == f0());
    const auto ex = ExpPolynomial::term(1, Polynomial{Rational(1)});
    CHECK((ex + (-ex)).is_zero());
    // f_0 + f_0 = 2 e^x - 2x - 2
    const auto twice = ExpPolynomial::term(1, Polynomial{Rational(2)}) +
                       ExpPolynomial::term(0, Polynomial{Rational(-2), Rational(-2)});
    CHECK(f0() + f0() == twice);
}

TEST_CASE("multiplication: frequencies add") {
    const auto ex = ExpPolynomial::term(1, Polynomial{Rational(1)});
    CHECK(ex * ex == ExpPolynomial::term(2, Polynomial{Rational(1)}));
    const auto xe1 = ExpPolynomial::term(1, Polynomial{Rational(0), Rational(1)});
    const auto xe2 = ExpPolynomial::term(2, Polynomial{Rational(0), Rational(1)});
    CHECK(xe1 * xe2 ==
          ExpPolynomial::term(3, Polynomial{Rational(0), Rational(0), Rational(1)}));
    // f_0^2 = e^{2x} - (2x+2) e^x + (x^2 + 2x + 1)
    const auto expected = ExpPolynomial::term(2, Polynomial{Rational(1)}) +
                          ExpPolynomial::term(1, Polynomial{Rational(-2), Rational(-2)}) +
                          ExpPolynomial::term(0, Polynomial{Rational(1), Rational(2), Rational(1)});
    CHECK(f0() * f0() == expected);
}

TEST_CASE("differentiation") {
    // d/dx (e^x - x - 1) = e^x - 1
    CHECK(f0().derivative() == ExpPolynomial::term(1, Polynomial{Rational(1)}) +
                                   ExpPolynomial::term(0, Polynomial{Rational(-1)}));
    // d/dx (x^2 e^{2x}) = (2x^2 + 2x) e^{2x}
    const auto x2e2 = ExpPolynomial::term(2, Polynomial{Rational(0), Rational(0), Rational(1)});
    CHECK(x2e2.derivative() ==
          ExpPolynomial::term(2, Polynomial{Rational(0), Rational(2), Rational(2)}));
    // d/dx f_1 = 4 e^{2x} - (x^2/2 + 3x + 4) e^x
    const auto expected =
        ExpPolynomial::term(2, Polynomial{Rational(4)}) +
        ExpPolynomial::term(1, Polynomial{Rational(-4), Rational(-3), Rational(-1, 2)});
    CHECK(f1().derivative() == expected);
}

TEST_CASE("integration from zero") {
    CHECK(ExpPolynomial::zero().integral().is_zero());
    const auto ex = ExpPolynomial::term(1, Polynomial{Rational(1)});
    // I(e^x) = e^x - 1
    CHECK(ex.integral() == ex + ExpPolynomial::term(0, Polynomial{Rational(-1)}));
    // I(f_0) = e^x - x^2/2 - x - 1
    const auto expected =
        ExpPolynomial::term(1, Polynomial{Rational(1)}) +
        ExpPolynomial::term(0, Polynomial{Rational(-1), Rational(-1), Rational(-1, 2)});
    CHECK(f0().integral() == expected);
    // I^0 is the identity; I^2(e^x) = e^x - x - 1
    CHECK(f0().iterated_integral(0) == f0());
    CHECK(ex.iterated_integral(2) == f0());
    // I(f_1) carries coefficient 1 on e^{2x}
    CHECK(f1().integral().coeff(2, 0) == Rational(1));
}

TEST_CASE("degree sequences") {
    CHECK(degree_sequence_str(f0().degree_sequence()) == "(1, 0)");
    const DegreeSequence d1 = f1().degree_sequence();
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == Degree::neg_inf());
    CHECK(d1[1] == Degree(2));
    CHECK(d1[2] == Degree(0));
    CHECK(ExpPolynomial::zero().degree_sequence().empty());
}

TEST_CASE("coefficient extraction and taylor") {
    CHECK(f1().coeff(2, 0) == Rational(2));
    CHECK(f0().coeff(0, 5) == Rational(0));
    CHECK(f0().taylor_coeff(2) == Rational(1, 2));
    CHECK(f0().taylor_coeff(0) == Rational(0));
    CHECK(f1().taylor_coeff(3) == Rational(5, 6)); // alpha_{1,1}/3! = 5/6
}

TEST_CASE("negative frequency rejected") {
    CHECK_THROWS_AS(ExpPolynomial::term(-1, Polynomial{Rational(1)}), std::invalid_argument);
}

TEST_CASE("linear ODE solver") {
    CHECK(solve_linear_ode(ExpPolynomial::zero()).is_zero());
    const auto e2x = ExpPolynomial::term(2, Polynomial{Rational(1)});
    const auto ex = ExpPolynomial::term(1, Polynomial{Rational(1)});
    // y' = y + e^{2x}  ->  y = e^{2x} - e^x
    CHECK(solve_linear_ode(e2x) == e2x - ex);
    // resonant: y' = y + e^x  ->  y = x e^x
    CHECK(solve_linear_ode(ex) == ExpPolynomial::term(1, Polynomial{Rational(0), Rational(1)}));
}

TEST_CASE("property: ring axioms on random exp-polynomials") {
    Gen gen;
    for (int i = 0; i < 60; ++i) {
        const auto a = gen.ep(), b = gen.ep(), c = gen.ep();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("property: fundamental theorem of calculus") {
    Gen gen;
    for (int i = 0; i < 60; ++i) {
        const auto f = gen.ep();
        CHECK(f.integral().derivative() == f);
        const auto back = f.derivative().integral();
        CHECK(back == f - ExpPolynomial::term(0, Polynomial::constant(f.value_at_zero())));
        CHECK(f.integral().value_at_zero() == Rational(0));
    }
}

TEST_CASE("property: degree sequence rules") {
    Gen gen;
    auto deg_at = [](const DegreeSequence& d, size_t i) {
        return i < d.size() ? d[i] : Degree::neg_inf();
    };
    for (int i = 0; i < 60; ++i) {
        const auto f = gen.ep(), g = gen.ep();
        const auto df = f.degree_sequence(), dg = g.degree_sequence();
        // (a) componentwise max bounds the sum
        const auto dsum = (f + g).degree_sequence();
        for (size_t k = 0; k < dsum.size(); ++k)
            CHECK(dsum[k] <= Degree::max(deg_at(df, k), deg_at(dg, k)));
        // (b) max over splits bounds the product
        const auto dprod = (f * g).degree_sequence();
        for (size_t k = 0; k < dprod.size(); ++k) {
            Degree bound = Degree::neg_inf();
            for (size_t p = 0; p <= k; ++p)
                bound = Degree::max(bound, deg_at(df, p) + deg_at(dg, k - p));
            CHECK(dprod[k] <= bound);
        }
        // (c) derivative: (a_0 - 1, a_1, ...) with 0 - 1 = -inf, exact
        if (!f.is_zero()) {
            const auto dd = f.derivative().degree_sequence();
            DegreeSequence want = df;
            want[0] = want[0].after_derivative();
            while (!want.empty() && want.back().is_neg_inf()) want.pop_back();
            DegreeSequence got = dd;
            while (!got.empty() && got.back().is_neg_inf()) got.pop_back();
            CHECK(got == want);
        }
        // (d) integral of a nonzero f: (max(a_0 + 1, 0), a_1, ..., a_k)
        if (!f.is_zero()) {
            const auto di = f.integral().degree_sequence();
            DegreeSequence want = df;
            want[0] = Degree::max(want[0] + 1, Degree(0));
            // the frequency-0 constant may cancel; everything else is exact
            for (size_t k = 1; k < want.size(); ++k) CHECK(deg_at(di, k) == want[k]);
            CHECK(deg_at(di, 0) <= want[0]);
        }
    }
}

TEST_CASE("property: ODE solution satisfies its equation with y(0) = 0") {
    Gen gen;
    for (int i = 0; i < 60; ++i) {
        const auto r = gen.ep();
        const auto y = solve_linear_ode(r);
        CHECK(y.derivative() - y - r == ExpPolynomial::zero());
        CHECK(y.value_at_zero() == Rational(0));
        // (f) degree rule: (a_0, max(a_1 + 1, 0), a_2, ..., a_k). At index 1
        // the rule describes the representation before the homogeneous
        // constant C e^x is folded in; canonical form may cancel it, so a
        // missing frequency-1 source term only gives an upper bound there.
        if (!r.is_zero()) {
            const auto dr = r.degree_sequence();
            const auto dy = y.degree_sequence();
            auto deg_at = [](const DegreeSequence& d, size_t i) {
                return i < d.size() ? d[i] : Degree::neg_inf();
            };
            for (size_t k = 0; k < std::max(dr.size(), dy.size()); ++k) {
                const Degree have = deg_at(dy, k);
                const Degree a_k = deg_at(dr, k);
                if (k != 1) {
                    CHECK(have == a_k);
                } else if (!a_k.is_neg_inf()) {
                    CHECK(have == a_k + 1);
                } else {
                    CHECK(have <= Degree(0));
                }
            }
        }
    }
}

TEST_CASE("property: taylor coefficients agree with the truncated-series oracle") {
    Gen gen;
    const int order = 12;
    for (int i = 0; i < 40; ++i) {
        const auto f = gen.ep();
        const PowerSeries expansion = series_oracle(f, order);
        for (int n = 0; n <= order; ++n) CHECK(f.taylor_coeff(n) == expansion[n]);
    }
}
