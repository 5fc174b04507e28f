#pragma once

#include "wreathpow/rational.hpp"

#include <string>
#include <vector>

namespace wreathpow {

namespace detail {
// Dense rational polynomials used internally for the Phi_k tables and for
// reduction/inversion in Q[x]/Phi_k(x). Coefficient index = degree.
using RatPoly = std::vector<Rational>;

void rp_trim(RatPoly& p);
int rp_degree(const RatPoly& p); // -1 for the zero polynomial
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
// division with remainder; throws if b == 0
void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

/// Coefficients of the d-th cyclotomic polynomial (cached, thread-safe).
const RatPoly& cyclotomic_coeffs(long d);
} // namespace detail

/// An element of the cyclotomic field Q(zeta_k) = Q[x]/Phi_k(x), held in the
/// power basis {zeta^0, ..., zeta^{phi(k)-1}}. The representation is always
/// fully reduced mod Phi_k, so equality is coordinate-wise. k = 1 degenerates
/// to the plain rationals.
class CycloNumber {
public:
    /// zero of conductor k
    explicit CycloNumber(int k);
    /// reduce an arbitrary coordinate polynomial mod Phi_k
    CycloNumber(int k, std::vector<Rational> raw_coords);

    static CycloNumber from_rational(int k, const Rational& q);
    /// zeta_k^a for any integer a (taken mod k)
    static CycloNumber zeta_power(int k, long a);

    int conductor() const { return k_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const; // all coordinates above zeta^0 vanish
    Rational rational_value() const; // requires is_rational()

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& o);
    CycloNumber& operator-=(const CycloNumber& o);
    CycloNumber& operator*=(const CycloNumber& o);
    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }

    CycloNumber& scale(const Rational& q);

    friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
        return a.k_ == b.k_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    /// number of nonzero coordinates and total coefficient bit size;
    /// the elimination kernel prefers "light" pivots
    std::pair<int, std::size_t> weight() const;

    /// zeta is printed as `z`, e.g. "1 - 2/3*z^2"
    std::string to_string() const;

private:
    int k_;
    std::vector<Rational> c_; // length phi(k)
};

/// Multiplicative inverse in Q(zeta_k), via the extended Euclidean algorithm
/// against Phi_k. Throws std::domain_error on zero input.
CycloNumber cyclo_inverse(const CycloNumber& a);

} // namespace wreathpow
