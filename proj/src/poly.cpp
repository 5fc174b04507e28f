#include "wreathpow/poly.hpp"

#include <sstream>

namespace wreathpow {

Poly::Poly(int k, std::vector<CycloNumber> coeffs) : k_(k), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (c.conductor() != k_)
            throw std::invalid_argument("Poly: coefficient conductor mismatch");
    trim();
}

Poly Poly::constant(const CycloNumber& c) {
    Poly p(c.conductor());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const CycloNumber& c, int degree) {
    Poly p(c.conductor());
    if (!c.is_zero()) {
        p.c_.assign(degree + 1, CycloNumber(c.conductor()));
        p.c_[degree] = c;
    }
    return p;
}

Poly Poly::one_minus_term(const CycloNumber& t, int power) {
    const int k = t.conductor();
    Poly p(k);
    p.c_.assign(power + 1, CycloNumber(k));
    p.c_[0] = CycloNumber::from_rational(k, Rational(1));
    p.c_[power] -= t;
    p.trim();
    return p;
}

CycloNumber Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return CycloNumber(k_);
    return c_[i];
}

Poly Poly::operator-() const {
    Poly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (k_ != o.k_) throw std::invalid_argument("Poly: conductor mismatch");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycloNumber(k_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (k_ != o.k_) throw std::invalid_argument("Poly: conductor mismatch");
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), CycloNumber(k_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("Poly: conductor mismatch");
    Poly out(a.k_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, CycloNumber(a.k_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    out.trim();
    return out;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        std::string cs = c_[i].to_string();
        bool negated = false;
        if (c_[i].is_rational() && c_[i].rational_value().sign() < 0) {
            cs = (-c_[i]).to_string();
            negated = true;
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (i == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
        } else {
            if (cs != "1") {
                os << (needs_parens ? "(" + cs + ")" : cs) << "*";
            }
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly cyclotomic_polynomial(long d) {
    const auto& coeffs = detail::cyclotomic_coeffs(d); // throws on d < 1
    std::vector<CycloNumber> out;
    out.reserve(coeffs.size());
    for (const auto& q : coeffs) out.push_back(CycloNumber::from_rational(1, q));
    return Poly(1, std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const int k = num.conductor();
    if (k != den.conductor()) throw std::invalid_argument("poly_divmod: conductor mismatch");
    std::vector<CycloNumber> r = num.coeffs();
    auto trim = [&] { while (!r.empty() && r.back().is_zero()) r.pop_back(); };
    trim();
    const int db = den.degree();
    std::vector<CycloNumber> q;
    if (static_cast<int>(r.size()) - 1 >= db)
        q.assign(r.size() - db, CycloNumber(k));
    const CycloNumber lead_inv = cyclo_inverse(den.coeff(db));
    while (static_cast<int>(r.size()) - 1 >= db) {
        int shift = static_cast<int>(r.size()) - 1 - db;
        CycloNumber factor = r.back() * lead_inv;
        q[shift] = factor;
        for (int i = 0; i <= db; ++i) {
            CycloNumber d = den.coeff(i);
            if (d.is_zero()) continue;
            r[shift + i] -= factor * d;
        }
        trim();
    }
    return {Poly(k, std::move(q)), Poly(k, std::move(r))};
}

Poly poly_div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = poly_divmod(num, den);
    if (!r.is_zero())
        throw std::domain_error("poly_div_exact: denominator does not divide numerator");
    return q;
}

TruncatedSeries series_expand(const Poly& num, const Poly& den, int order) {
    if (order < 0) throw std::invalid_argument("series_expand: negative order");
    const int k = num.conductor();
    if (k != den.conductor()) throw std::invalid_argument("series_expand: conductor mismatch");
    CycloNumber d0 = den.coeff(0);
    if (d0.is_zero())
        throw std::domain_error("series_expand: denominator has no constant term");
    CycloNumber d0_inv = cyclo_inverse(d0);

    TruncatedSeries s;
    s.order = order;
    s.coeffs.assign(order + 1, CycloNumber(k));
    const int dd = den.degree();
    for (int m = 0; m <= order; ++m) {
        CycloNumber acc = num.coeff(m);
        for (int j = 1; j <= dd && j <= m; ++j) {
            CycloNumber dj = den.coeff(j);
            if (dj.is_zero()) continue;
            acc -= dj * s.coeffs[m - j];
        }
        s.coeffs[m] = acc * d0_inv;
    }
    return s;
}

} // namespace wreathpow
