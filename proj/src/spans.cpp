#include "wreathpow/spans.hpp"

#include "wreathpow/bounds_math.hpp"
#include "wreathpow/nt.hpp"

#include <chrono>
#include <sstream>

namespace wreathpow {

void SpanQuery::validate() const {
    if (n < 1) throw std::invalid_argument("query: n must be >= 1");
    if (k < 1) throw std::invalid_argument("query: k must be >= 1");
    if (p) {
        if (!is_prime(*p)) throw std::invalid_argument("query: p must be prime");
        if (kind == PowerKind::Ext)
            throw std::invalid_argument("query: exterior spans with p set are not defined");
    }
}

std::string SpanQuery::to_string() const {
    std::ostringstream os;
    os << (kind == PowerKind::Sym ? "sym" : "ext") << " n=" << n << " k=" << k;
    if (p) os << " p=" << *p;
    return os.str();
}

int default_truncation(const SpanQuery& q) {
    if (q.kind == PowerKind::Ext) return q.n;
    return q.k * q.n * (q.n + 1) / 2 - q.n;
}

namespace {

long floor_log(long base, long ratio_num, long ratio_den) {
    // largest e >= 0 with base^e <= ratio_num/ratio_den (assumes ratio >= 1)
    long e = 0;
    long v = ratio_den;
    while (v * base <= ratio_num) {
        v *= base;
        ++e;
    }
    return e;
}

Rational half(long a) { return Rational(a, 2); }

std::vector<Bound> sym_bounds(int n, int k) {
    std::vector<Bound> out;
    // spanning-set bound: deg D(x) + 1 - n = k*n(n+1)/2 - n + 1
    Rational ub = half(static_cast<long>(k) * n * (n + 1)) - Rational(n) + Rational(1);
    out.push_back({"ub_D", ub, true, true, false});
    out.push_back({"lb_W_family", Rational(static_cast<long>(k) * w_count(n - 1)), false, true, false});
    if (n >= 2) {
        // k((n-1)ln(n-1) - 2(n-2)), logarithm rounded down
        Rational v = Rational(k) *
                     (Rational(n - 1) * ln_bracket(n - 1, Round::Down) - Rational(2 * (n - 2)));
        out.push_back({"lb_D_log", v, false, true, false});
    }
    return out;
}

std::vector<Bound> brauer_bounds(int p, int n, int k) {
    std::vector<Bound> out;
    const Rational quad = Rational(p, 2 * p + 2) * Rational(static_cast<long>(n) * n);
    if (k == 1) {
        out.push_back({"ub_B_degree", Rational(delta_p(p, n) + 1 - n), true, true, false});
        Rational ub = quad + Rational(n) * log_base_bracket(n, p, Round::Up) + Rational(1);
        out.push_back({"ub_B", ub, true, true, false});
        out.push_back({"lb_A_family", Rational(a_count(p, n)), false, true, false});
        // two informational closed-form variants of the harmonic estimate;
        // the checked lower bound is the exact family size above
        Rational gamma = euler_gamma_bracket(Round::Down);
        Rational lnn = ln_bracket(n, Round::Down);
        Rational pm1_over_p(p - 1, p);
        Rational gamma_coeff = Rational(n) * (Rational(1) - Rational(1, p));
        Rational v1 = pm1_over_p * Rational(n) * lnn + gamma_coeff * gamma -
                      Rational(n) * (Rational(1) + pm1_over_p);
        out.push_back({"lb_B_log", v1, false, false, false});
        Rational v2 = Rational(1) + pm1_over_p * Rational(n) * lnn + gamma_coeff * gamma -
                      Rational(n);
        out.push_back({"lb_B_log_alt", v2, false, false, false});
    } else {
        long rp = r_p(k, p);
        out.push_back({"ub_Bw_degree", Rational(rp * delta_p(p, n) + 1 - n), true, true, false});
        Rational inner = quad + Rational(n) * (log_base_bracket(n, p, Round::Up) + Rational(1));
        out.push_back({"ub_Bw", Rational(rp) * inner - Rational(n) + Rational(1), true, true, false});
        out.push_back({"lb_A_family", Rational(a_count(p, n)), false, true, false});
    }
    return out;
}

void finalize(DimensionReport& rep) {
    if (rep.dimension > rep.num_classes || rep.dimension > rep.truncation + 1)
        throw std::logic_error("report: dimension exceeds its trivial caps");
    for (auto& b : rep.bounds) {
        Rational d(rep.dimension);
        b.satisfied = b.upper ? (d <= b.value) : (d >= b.value);
        if (b.checked && !b.satisfied) {
            std::ostringstream os;
            os << "bound " << b.name << " = " << b.value.to_string()
               << " violated by dimension " << rep.dimension << " for query "
               << rep.query.to_string();
            throw bound_violation(os.str());
        }
    }
}

std::vector<std::vector<CycloNumber>> coefficient_rows(
    const std::vector<TruncatedSeries>& columns, int order, int conductor) {
    std::vector<std::vector<CycloNumber>> rows(
        order + 1, std::vector<CycloNumber>(columns.size(), CycloNumber(conductor)));
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (int i = 0; i <= order; ++i)
            rows[i][j] = columns[j].coeffs[i];
    return rows;
}

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

DimensionReport compute_sym_like(const SpanQuery& q, std::optional<int> truncation) {
    q.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const int order = truncation.value_or(default_truncation(q));
    if (order < 0) throw std::invalid_argument("compute: negative truncation");

    std::vector<TruncatedSeries> columns;
    for (const auto& c : classes(q.n, q.k)) {
        if (q.p && !is_p_regular(c, *q.p)) continue;
        columns.push_back(char_values(c, PowerKind::Sym, order));
    }

    DimensionReport rep;
    rep.query = q;
    rep.num_classes = static_cast<int>(columns.size());
    rep.truncation = order;
    rep.dimension = exact_rank(coefficient_rows(columns, order, q.k));
    rep.bounds = bound_formulas(q);
    rep.elapsed_ms = ms_since(t0);
    finalize(rep);
    return rep;
}

} // namespace

std::vector<Bound> bound_formulas(const SpanQuery& q) {
    q.validate();
    if (q.kind == PowerKind::Ext)
        return {{"ub_E", Rational(q.n + 1), true, true, false}};
    if (q.p) return brauer_bounds(*q.p, q.n, q.k);
    return sym_bounds(q.n, q.k);
}

DimensionReport compute_sym_dim(int n, int k, std::optional<int> truncation) {
    return compute_sym_like({PowerKind::Sym, n, k, std::nullopt}, truncation);
}

DimensionReport compute_brauer_dim(int p, int n, std::optional<int> truncation) {
    return compute_sym_like({PowerKind::Sym, n, 1, p}, truncation);
}

DimensionReport compute_brauer_wreath_dim(int p, int n, int k, std::optional<int> truncation) {
    return compute_sym_like({PowerKind::Sym, n, k, p}, truncation);
}

DimensionReport compute_ext_dim(int n, int k, std::optional<int> truncation) {
    SpanQuery q{PowerKind::Ext, n, k, std::nullopt};
    q.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const int order = truncation.value_or(default_truncation(q));
    if (order < 0) throw std::invalid_argument("compute: negative truncation");

    const auto cls = classes(n, k);
    std::vector<TruncatedSeries> cols_true, cols_paper;
    cols_true.reserve(cls.size());
    cols_paper.reserve(cls.size());
    for (const auto& c : cls) {
        cols_true.push_back(char_values(c, PowerKind::Ext, order));
        Poly p_alt = ext_gf_paper(c).poly;
        TruncatedSeries s;
        s.order = order;
        for (int i = 0; i <= order; ++i) s.coeffs.push_back(p_alt.coeff(i));
        cols_paper.push_back(std::move(s));
    }

    DimensionReport rep;
    rep.query = q;
    rep.num_classes = static_cast<int>(cls.size());
    rep.truncation = order;
    rep.dimension = exact_rank(coefficient_rows(cols_true, order, k));
    rep.ext_paper_dimension = exact_rank(coefficient_rows(cols_paper, order, k));
    rep.bounds = bound_formulas(q);
    rep.elapsed_ms = ms_since(t0);
    finalize(rep);
    return rep;
}

DimensionReport compute(const SpanQuery& q, std::optional<int> truncation) {
    q.validate();
    if (q.kind == PowerKind::Ext) return compute_ext_dim(q.n, q.k, truncation);
    return compute_sym_like(q, truncation);
}

CommonDenominator common_denominator(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("common_denominator: need n, k >= 1");
    CommonDenominator cd{Poly::one(k), {}, 0};
    for (int i = 0; i < k; ++i) {
        for (int j = 1; j <= n; ++j) {
            DenFactor f{CycloNumber::zeta_power(k, i), j};
            cd.poly = cd.poly * Poly::one_minus_term(f.t, f.power);
            cd.factors.emplace_back(den_factor_to_string(f), 1);
            cd.degree += j;
        }
    }
    if (cd.poly.degree() != cd.degree)
        throw std::logic_error("common_denominator: degree mismatch");
    return cd;
}

CommonDenominator g_p_product(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("g_p_product: p must be prime");
    if (n < 1) throw std::invalid_argument("g_p_product: n must be >= 1");
    CommonDenominator cd{Poly::one(1), {}, 0};
    std::map<int, int> mult; // r -> multiplicity, for the factored form
    for (int j = 1; j <= n; ++j) {
        int r = static_cast<int>(r_p(j, p));
        cd.poly = cd.poly * Poly::one_minus_term(CycloNumber::from_rational(1, Rational(1)), r);
        cd.degree += r;
        ++mult[r];
    }
    for (const auto& [r, m] : mult)
        cd.factors.emplace_back(r == 1 ? "1 - x" : "1 - x^" + std::to_string(r), m);
    if (cd.poly.degree() != cd.degree)
        throw std::logic_error("g_p_product: degree mismatch");
    return cd;
}

CommonDenominator g_p_cyclotomic(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("g_p_cyclotomic: p must be prime");
    if (n < 1) throw std::invalid_argument("g_p_cyclotomic: n must be >= 1");
    CommonDenominator cd{Poly::one(1), {}, 0};
    for (int j = 1; j <= n; ++j) {
        if (j % p == 0) continue;
        const int mult = n / j;
        Poly phi = cyclotomic_polynomial(j);
        for (int t = 0; t < mult; ++t) cd.poly = cd.poly * phi;
        cd.factors.emplace_back("Phi_" + std::to_string(j), mult);
        cd.degree += static_cast<int>(euler_phi(j)) * mult;
    }
    if (cd.poly.degree() != cd.degree)
        throw std::logic_error("g_p_cyclotomic: degree mismatch");
    return cd;
}

long delta_p(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("delta_p: p must be prime");
    if (n < 1) throw std::invalid_argument("delta_p: n must be >= 1");
    long total = 0;
    for (long j = 1; j <= n; ++j) {
        if (j % p == 0) continue;
        total += j * (1 + floor_log(p, n, j));
    }
    return total;
}

Rational ub_delta_p(int p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("ub_delta_p: p must be prime");
    if (n < 1) throw std::invalid_argument("ub_delta_p: n must be >= 1");
    return Rational(p, 2 * p + 2) * Rational(static_cast<long>(n) * n) +
           Rational(n) * (log_base_bracket(n, p, Round::Up) + Rational(1));
}

FamilyRank verify_family_independent(const std::vector<RationalFunction>& family, int order) {
    if (family.empty())
        throw std::invalid_argument("verify_family_independent: empty family");
    std::vector<TruncatedSeries> columns;
    columns.reserve(family.size());
    for (const auto& f : family)
        columns.push_back(series_expand(f.numerator, f.denominator_poly(), order));
    FamilyRank out;
    out.expected = static_cast<int>(family.size());
    out.rank = exact_rank(coefficient_rows(columns, order, family[0].conductor()));
    out.equal = out.rank == out.expected;
    return out;
}

std::vector<RationalFunction> y_function_family(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("y_function_family: need n, k >= 1");
    std::vector<RationalFunction> fam;
    const CycloNumber one = CycloNumber::from_rational(k, Rational(1));
    for (const auto& lambda : w_partitions(n - 1).members) {
        for (int r = 0; r < k; ++r) {
            RationalFunction f{Poly::one(k), {}};
            f.den_factors.push_back({CycloNumber::zeta_power(k, r), 1});
            for (int part : lambda) f.den_factors.push_back({one, part});
            fam.push_back(std::move(f));
        }
    }
    return fam;
}

std::vector<RationalFunction> a_function_family(int p, int n) {
    std::vector<RationalFunction> fam;
    const CycloNumber one = CycloNumber::from_rational(1, Rational(1));
    for (const auto& lambda : a_partitions(p, n).members) {
        RationalFunction f{Poly::one(1), {}};
        for (int part : lambda) f.den_factors.push_back({one, part});
        fam.push_back(std::move(f));
    }
    return fam;
}

} // namespace wreathpow
