#include "wreathpow/cyclotomic.hpp"

#include "wreathpow/nt.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace wreathpow {
namespace detail {

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    rp_trim(out);
    return out;
}

void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.empty()) throw std::domain_error("rp_divmod: division by zero polynomial");
    r = a;
    rp_trim(r);
    q.clear();
    const int db = rp_degree(b);
    if (rp_degree(r) >= db) q.assign(rp_degree(r) - db + 1, Rational(0));
    const Rational& lead = b.back();
    while (rp_degree(r) >= db) {
        int shift = rp_degree(r) - db;
        Rational factor = r.back() / lead;
        q[shift] = factor;
        for (int i = 0; i <= db; ++i) {
            if (b[i].is_zero()) continue;
            r[shift + i] -= factor * b[i];
        }
        rp_trim(r);
    }
    rp_trim(q);
}

namespace {

// x^e - 1
RatPoly power_minus_one(long e) {
    RatPoly p(e + 1, Rational(0));
    p[0] = Rational(-1);
    p[e] = Rational(1);
    return p;
}

RatPoly compute_cyclotomic(long d) {
    // Phi_d(x) = prod_{e | d} (x^e - 1)^{mu(d/e)}, evaluated as an exact
    // quotient of the mu = +1 product by the mu = -1 product.
    RatPoly num{Rational(1)};
    RatPoly den{Rational(1)};
    for (long e : divisors(d)) {
        int mu = mobius(d / e);
        if (mu == 1) num = rp_mul(num, power_minus_one(e));
        else if (mu == -1) den = rp_mul(den, power_minus_one(e));
    }
    RatPoly q, r;
    rp_divmod(num, den, q, r);
    if (!r.empty())
        throw std::logic_error("cyclotomic_coeffs: non-exact quotient");
    return q;
}

} // namespace

const RatPoly& cyclotomic_coeffs(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic polynomial: d must be >= 1");
    static std::map<long, RatPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, compute_cyclotomic(d)).first;
    return it->second;
}

namespace {

// remainder of p mod Phi_k, resized to exactly phi(k) coordinates
std::vector<Rational> reduce_mod_phi(int k, RatPoly p) {
    const RatPoly& phi = cyclotomic_coeffs(k);
    const int deg = rp_degree(phi);
    if (rp_degree(p) >= deg) {
        RatPoly q, r;
        rp_divmod(p, phi, q, r);
        p = std::move(r);
    }
    p.resize(deg, Rational(0));
    return p;
}

} // namespace
} // namespace detail

CycloNumber::CycloNumber(int k) : k_(k) {
    if (k < 1) throw std::invalid_argument("CycloNumber: conductor must be >= 1");
    c_.assign(euler_phi(k), Rational(0));
}

CycloNumber::CycloNumber(int k, std::vector<Rational> raw_coords) : k_(k) {
    if (k < 1) throw std::invalid_argument("CycloNumber: conductor must be >= 1");
    detail::rp_trim(raw_coords);
    c_ = detail::reduce_mod_phi(k, std::move(raw_coords));
}

CycloNumber CycloNumber::from_rational(int k, const Rational& q) {
    CycloNumber x(k);
    x.c_[0] = q;
    return x;
}

CycloNumber CycloNumber::zeta_power(int k, long a) {
    a %= k;
    if (a < 0) a += k;
    std::vector<Rational> mono(a + 1, Rational(0));
    mono[a] = Rational(1);
    return CycloNumber(k, std::move(mono));
}

bool CycloNumber::is_zero() const {
    for (const auto& q : c_)
        if (!q.is_zero()) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational CycloNumber::rational_value() const {
    if (!is_rational())
        throw std::domain_error("CycloNumber: not a rational value");
    return c_[0];
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out(*this);
    for (auto& q : out.c_) q = -q;
    return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
    if (k_ != o.k_) throw std::invalid_argument("CycloNumber: conductor mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
    if (k_ != o.k_) throw std::invalid_argument("CycloNumber: conductor mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
    if (k_ != o.k_) throw std::invalid_argument("CycloNumber: conductor mismatch");
    detail::RatPoly prod = detail::rp_mul(c_, o.c_);
    c_ = detail::reduce_mod_phi(k_, std::move(prod));
    return *this;
}

CycloNumber& CycloNumber::scale(const Rational& q) {
    for (auto& x : c_) x *= q;
    return *this;
}

std::pair<int, std::size_t> CycloNumber::weight() const {
    int nonzero = 0;
    std::size_t bits = 0;
    for (const auto& q : c_) {
        if (!q.is_zero()) {
            ++nonzero;
            bits += q.bit_size();
        }
    }
    return {nonzero, bits};
}

std::string CycloNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& q = c_[i];
        if (q.is_zero()) continue;
        Rational a = q;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (i == 0) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycloNumber cyclo_inverse(const CycloNumber& a) {
    if (a.is_zero())
        throw std::domain_error("cyclo_inverse: division by zero");
    const int k = a.conductor();
    // extended Euclid on (A, Phi_k) over Q[x]: track u with u*A = g mod Phi_k
    detail::RatPoly r0 = a.coords();
    detail::rp_trim(r0);
    detail::RatPoly r1 = detail::cyclotomic_coeffs(k);
    detail::RatPoly u0{Rational(1)};
    detail::RatPoly u1; // zero
    while (!r1.empty()) {
        detail::RatPoly q, r;
        detail::rp_divmod(r0, r1, q, r);
        detail::RatPoly qu = detail::rp_mul(q, u1);
        detail::RatPoly u2 = u0;
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        detail::rp_trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // Phi_k irreducible and a != 0, so the gcd is a nonzero constant
    if (detail::rp_degree(r0) != 0)
        throw std::logic_error("cyclo_inverse: gcd with Phi_k not constant");
    Rational g = r0[0];
    for (auto& q : u0) q /= g;
    return CycloNumber(k, std::move(u0));
}

} // namespace wreathpow
