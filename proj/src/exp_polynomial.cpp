#include <gradim/exp_polynomial.hpp>

#include <sstream>

namespace gradim {

std::string degree_sequence_str(const DegreeSequence& d) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        os << d[i].str();
    }
    os << ")";
    return os.str();
}

ExpPolynomial ExpPolynomial::term(int freq, Polynomial p) {
    if (freq < 0) throw std::invalid_argument("ExpPolynomial: negative frequency");
    ExpPolynomial f;
    if (!p.is_zero()) f.terms_.emplace(freq, std::move(p));
    return f;
}

const Polynomial& ExpPolynomial::poly_at(int freq) const {
    static const Polynomial zero;
    auto it = terms_.find(freq);
    return it == terms_.end() ? zero : it->second;
}

void ExpPolynomial::add_term(int freq, const Polynomial& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(freq);
    if (it == terms_.end()) {
        terms_.emplace(freq, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExpPolynomial ExpPolynomial::operator+(const ExpPolynomial& o) const {
    ExpPolynomial r = *this;
    for (const auto& [k, p] : o.terms_) r.add_term(k, p);
    return r;
}

ExpPolynomial ExpPolynomial::operator-() const {
    ExpPolynomial r;
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
    return r;
}

ExpPolynomial ExpPolynomial::operator-(const ExpPolynomial& o) const { return *this + (-o); }

ExpPolynomial ExpPolynomial::operator*(const ExpPolynomial& o) const {
    ExpPolynomial r;
    for (const auto& [k1, p1] : terms_)
        for (const auto& [k2, p2] : o.terms_)
            r.add_term(k1 + k2, p1 * p2);
    return r;
}

ExpPolynomial ExpPolynomial::operator*(const Rational& s) const {
    ExpPolynomial r;
    if (s == 0) return r;
    for (const auto& [k, p] : terms_) r.terms_.emplace(k, p * s);
    return r;
}

ExpPolynomial ExpPolynomial::derivative() const {
    ExpPolynomial r;
    for (const auto& [k, p] : terms_)
        r.add_term(k, p.derivative() + p * Rational(k));
    return r;
}

namespace {

// q with q' + k q = p, k >= 1, solved top-down by undetermined coefficients.
Polynomial primitive_factor(const Polynomial& p, int k) {
    const auto& pc = p.coeffs();
    std::vector<Rational> q(pc.size(), Rational(0));
    for (size_t m = pc.size(); m-- > 0;) {
        Rational higher = (m + 1 < q.size()) ? q[m + 1] * static_cast<long>(m + 1) : Rational(0);
        q[m] = (pc[m] - higher) / Rational(k);
    }
    return Polynomial(std::move(q));
}

} // namespace

ExpPolynomial ExpPolynomial::integral() const {
    ExpPolynomial r;
    Rational const_at_zero(0);
    for (const auto& [k, p] : terms_) {
        if (k == 0) {
            r.add_term(0, p.integral_from_zero());
        } else {
            Polynomial q = primitive_factor(p, k);
            const_at_zero -= q.at_zero();
            r.add_term(k, q);
        }
    }
    if (const_at_zero != 0) r.add_term(0, Polynomial::constant(const_at_zero));
    return r;
}

ExpPolynomial ExpPolynomial::iterated_integral(int j) const {
    if (j < 0) throw std::invalid_argument("iterated_integral: negative count");
    ExpPolynomial r = *this;
    for (int i = 0; i < j; ++i) r = r.integral();
    return r;
}

Rational ExpPolynomial::value_at_zero() const {
    Rational v(0);
    for (const auto& [k, p] : terms_) v += p.at_zero();
    return v;
}

Rational ExpPolynomial::taylor_coeff(long n) const {
    if (n < 0) throw std::invalid_argument("taylor_coeff: negative order");
    Rational acc(0);
    for (const auto& [k, p] : terms_) {
        const auto& pc = p.coeffs();
        for (size_t d = 0; d < pc.size() && static_cast<long>(d) <= n; ++d) {
            if (pc[d] == 0) continue;
            const long rem = n - static_cast<long>(d);
            if (k == 0 && rem > 0) continue; // 0^rem = 0; only d = n survives
            acc += pc[d] * make_rational(int_pow(BigInt(k), rem), factorial(rem));
        }
    }
    return acc;
}

Rational ExpPolynomial::coeff(int freq, long power) const {
    if (power < 0) return Rational(0);
    return poly_at(freq).coeff(static_cast<size_t>(power));
}

DegreeSequence ExpPolynomial::degree_sequence() const {
    DegreeSequence d;
    if (terms_.empty()) return d;
    d.assign(static_cast<size_t>(max_frequency()) + 1, Degree::neg_inf());
    for (const auto& [k, p] : terms_) d[static_cast<size_t>(k)] = p.degree();
    return d;
}

std::string ExpPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        os << "(" << it->second.str() << ")";
        if (it->first == 1) os << "*e^x";
        else if (it->first > 1) os << "*e^{" << it->first << "x}";
        first = false;
    }
    return os.str();
}

ExpPolynomial solve_linear_ode(const ExpPolynomial& rhs) {
    ExpPolynomial y;
    Rational value_at_zero(0);
    for (const auto& [k, p] : rhs.terms()) {
        Polynomial q;
        if (k == 1) {
            q = p.integral_from_zero(); // resonant: q' = p
        } else {
            // q' + (k - 1) q = p
            const auto& pc = p.coeffs();
            std::vector<Rational> qc(pc.size(), Rational(0));
            for (size_t m = pc.size(); m-- > 0;) {
                Rational higher =
                    (m + 1 < qc.size()) ? qc[m + 1] * static_cast<long>(m + 1) : Rational(0);
                qc[m] = (pc[m] - higher) / Rational(k - 1);
            }
            q = Polynomial(std::move(qc));
        }
        value_at_zero += q.at_zero();
        y = y + ExpPolynomial::term(k, std::move(q));
    }
    if (value_at_zero != 0)
        y = y + ExpPolynomial::term(1, Polynomial::constant(-value_at_zero));
    return y;
}

} // namespace gradim
