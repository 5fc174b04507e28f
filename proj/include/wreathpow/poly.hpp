#pragma once

#include "wreathpow/cyclotomic.hpp"

#include <string>
#include <vector>

namespace wreathpow {

/// Dense univariate polynomial over Q(zeta_k), coefficient index = degree.
/// The trailing coefficient is nonzero unless the polynomial is zero.
class Poly {
public:
    /// zero polynomial of conductor k
    explicit Poly(int k) : k_(k) {}
    Poly(int k, std::vector<CycloNumber> coeffs);

    static Poly one(int k) { return constant(CycloNumber::from_rational(k, Rational(1))); }
    static Poly constant(const CycloNumber& c);
    static Poly monomial(const CycloNumber& c, int degree);
    /// 1 - t*x^power
    static Poly one_minus_term(const CycloNumber& t, int power);

    int conductor() const { return k_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    /// coefficient of x^i (zero beyond the degree)
    CycloNumber coeff(int i) const;
    const std::vector<CycloNumber>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.k_ == b.k_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string to_string() const;

private:
    void trim();
    int k_;
    std::vector<CycloNumber> c_;
};

/// Phi_d(x) as a conductor-1 polynomial; monic with integer coefficients,
/// degree phi(d). Throws on d < 1.
Poly cyclotomic_polynomial(long d);

/// Exact quotient num/den in Q(zeta_k)[x]. A nonzero remainder throws
/// std::domain_error; it is never silently truncated.
Poly poly_div_exact(const Poly& num, const Poly& den);

/// quotient and remainder
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

/// Coefficients 0..T of a power series: length exactly T+1.
struct TruncatedSeries {
    int order = 0;
    std::vector<CycloNumber> coeffs;
};

/// Coefficients 0..order of num/den, by the linear recurrence that the
/// identity den * series = num imposes. Requires den(0) != 0.
TruncatedSeries series_expand(const Poly& num, const Poly& den, int order);

} // namespace wreathpow
