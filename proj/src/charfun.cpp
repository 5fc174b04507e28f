#include "wreathpow/charfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wreathpow {

Poly RationalFunction::denominator_poly() const {
    Poly d = Poly::one(conductor());
    for (const auto& f : den_factors)
        d = d * Poly::one_minus_term(f.t, f.power);
    return d;
}

int RationalFunction::denominator_degree() const {
    int deg = 0;
    for (const auto& f : den_factors) deg += f.power;
    return deg;
}

namespace {

std::string factor_to_string(const DenFactor& f) {
    std::ostringstream os;
    std::string ts = f.t.to_string();
    std::string xs = f.power == 1 ? "x" : "x^" + std::to_string(f.power);
    if (ts == "1") os << "(1 - " << xs << ")";
    else if (ts == "-1") os << "(1 + " << xs << ")";
    else if (ts.find(' ') == std::string::npos && ts.find('/') == std::string::npos)
        os << "(1 - " << ts << "*" << xs << ")";
    else os << "(1 - (" << ts << ")*" << xs << ")";
    return os.str();
}

} // namespace

std::string RationalFunction::to_string() const {
    std::ostringstream os;
    std::string num = numerator.to_string();
    if (num.find(' ') != std::string::npos) os << "(" << num << ")";
    else os << num;
    if (!den_factors.empty()) {
        os << "/(";
        for (const auto& f : den_factors) os << factor_to_string(f);
        os << ")";
    }
    return os.str();
}

RationalFunction sym_gf(const ClassLabel& c) {
    RationalFunction f{Poly::one(c.k), {}};
    f.den_factors.reserve(c.pairs.size());
    for (const auto& [part, exp] : c.pairs)
        f.den_factors.push_back({CycloNumber::zeta_power(c.k, exp), part});
    return f;
}

namespace {

ExtPolynomial ext_gf_impl(const ClassLabel& c, bool negate, ExtConvention conv) {
    Poly p = Poly::one(c.k);
    for (const auto& [part, exp] : c.pairs) {
        // t * (-1)^{part-1}, with an extra flip for the alternating-sign
        // convention
        CycloNumber t = CycloNumber::zeta_power(c.k, exp);
        bool minus = ((part - 1) % 2 == 1) ^ negate;
        // factor 1 + s*x^part where s = +-t
        Poly factor = Poly::one_minus_term(minus ? t : -t, part);
        p = p * factor;
    }
    return ExtPolynomial{std::move(p), conv};
}

} // namespace

ExtPolynomial ext_gf_true(const ClassLabel& c) {
    return ext_gf_impl(c, false, ExtConvention::True);
}

ExtPolynomial ext_gf_paper(const ClassLabel& c) {
    return ext_gf_impl(c, true, ExtConvention::Paper);
}

namespace {

void for_each_composition(int n, int r, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(r);
        fn(cur);
        cur.pop_back();
        return;
    }
    for (int c = 0; c <= r; ++c) {
        cur.push_back(c);
        for_each_composition(n, r - c, cur, fn);
        cur.pop_back();
    }
}

} // namespace

CycloNumber brute_force_sym_trace(const GenPerm& g, int r) {
    const int n = g.n();
    if (n > 6 || r > 8)
        throw std::invalid_argument("brute_force_sym_trace: oracle caps are n <= 6, r <= 8");
    if (r < 0) throw std::invalid_argument("brute_force_sym_trace: negative power");
    CycloNumber trace(g.k);
    if (n == 0) {
        // Sym^0 of the zero space is the trivial line
        if (r == 0) trace += CycloNumber::from_rational(g.k, Rational(1));
        return trace;
    }
    std::vector<int> cur;
    for_each_composition(n, r, cur, [&](const std::vector<int>& c) {
        long exp_sum = 0;
        for (int j = 0; j < n; ++j) {
            if (c[g.image[j]] != c[j]) return; // monomial not fixed
            exp_sum += static_cast<long>(g.exponent[j]) * c[j];
        }
        trace += CycloNumber::zeta_power(g.k, exp_sum);
    });
    return trace;
}

CycloNumber brute_force_ext_trace(const GenPerm& g, int r) {
    const int n = g.n();
    if (n > 8) throw std::invalid_argument("brute_force_ext_trace: oracle cap is n <= 8");
    if (r < 0 || r > n)
        throw std::invalid_argument("brute_force_ext_trace: need 0 <= r <= n");
    CycloNumber trace(g.k);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        unsigned img = 0;
        long exp_sum = 0;
        for (int j = 0; j < n; ++j) {
            if (mask & (1u << j)) {
                img |= 1u << g.image[j];
                exp_sum += g.exponent[j];
            }
        }
        if (img != mask) continue;
        // sign of the permutation induced on the chosen subset
        std::vector<int> members;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) members.push_back(j);
        std::vector<int> pos(n, -1);
        for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
        std::vector<bool> seen(members.size(), false);
        int sign = 1;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            std::size_t j = i;
            do {
                seen[j] = true;
                j = static_cast<std::size_t>(pos[g.image[members[j]]]);
                ++len;
            } while (j != i);
            if (len % 2 == 0) sign = -sign;
        }
        CycloNumber term = CycloNumber::zeta_power(g.k, exp_sum);
        if (sign < 0) term = -term;
        trace += term;
    }
    return trace;
}

TruncatedSeries char_values(const ClassLabel& c, PowerKind kind, int order) {
    if (order < 0) throw std::invalid_argument("char_values: negative order");
    if (kind == PowerKind::Sym) {
        RationalFunction f = sym_gf(c);
        return series_expand(f.numerator, f.denominator_poly(), order);
    }
    Poly p = ext_gf_true(c).poly;
    TruncatedSeries s;
    s.order = order;
    s.coeffs.reserve(order + 1);
    for (int i = 0; i <= order; ++i) s.coeffs.push_back(p.coeff(i));
    return s;
}

} // namespace wreathpow
