#pragma once

#include "wreathpow/classes.hpp"
#include "wreathpow/poly.hpp"

#include <string>
#include <vector>

namespace wreathpow {

/// One factor (1 - t*x^power) of a denominator; t is a nonzero element of
/// Q(zeta_k) and power >= 1.
struct DenFactor {
    CycloNumber t;
    int power;
};

/// "(1 - x^3)", "(1 + x^2)", "(1 - z^2*x)" ...
std::string den_factor_to_string(const DenFactor& f);

/// A rational generating function with factored denominator. The constant
/// term of the denominator is 1 by construction.
struct RationalFunction {
    Poly numerator;
    std::vector<DenFactor> den_factors;

    int conductor() const { return numerator.conductor(); }
    Poly denominator_poly() const;
    int denominator_degree() const;
    std::string to_string() const;
};

enum class ExtConvention { True, Paper };

/// Exterior-power generating polynomial: degree <= n, constant term 1.
struct ExtPolynomial {
    Poly poly;
    ExtConvention convention;
};

/// Generating function of the symmetric-power character values on a class:
/// 1 / prod_i (1 - zeta^{a_i} x^{lambda_i}). Coefficient m of its expansion
/// is the trace on the m-th symmetric power.
RationalFunction sym_gf(const ClassLabel& c);

/// prod_i (1 + t_i (-1)^{lambda_i - 1} x^{lambda_i}); coefficient r is the
/// trace on the r-th exterior power (validated against the wedge-basis
/// oracle below).
ExtPolynomial ext_gf_true(const ClassLabel& c);

/// prod_i (1 - t_i (-1)^{lambda_i - 1} x^{lambda_i}): the alternating-sign
/// product convention, which differs from ext_gf_true by t -> -t. Both are
/// kept and both span dimensions are reported.
ExtPolynomial ext_gf_paper(const ClassLabel& c);

/// Trace of g on Sym^r V computed by transporting the monomial basis
/// {e_1^{c_1}...e_n^{c_n} : sum c_i = r}: a monomial maps to a scalar times
/// a monomial, and only fixed monomials contribute. Oracle scale only:
/// n <= 6, r <= 8.
CycloNumber brute_force_sym_trace(const GenPerm& g, int r);

/// Trace of g on the wedge basis of Lambda^r V, including the sign of the
/// permutation induced on each fixed subset. Oracle scale only: n <= 8,
/// r <= n.
CycloNumber brute_force_ext_trace(const GenPerm& g, int r);

enum class PowerKind { Sym, Ext };

/// Coefficients 0..order of the symmetric generating function (series
/// expansion) or of ext_gf_true (zero-padded above degree n).
TruncatedSeries char_values(const ClassLabel& c, PowerKind kind, int order);

} // namespace wreathpow
