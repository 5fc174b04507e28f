#pragma once

#include "wreathpow/charfun.hpp"
#include "wreathpow/matrix_rank.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreathpow {

/// Thrown when a computed dimension violates a checked bound. Every checked
/// bound is a finite exact statement, so a violation would falsify one of
/// them; reports refuse to come into existence in that state.
class bound_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One span-dimension query. p absent = ordinary characters; p present =
/// restriction to p-regular classes. Exterior queries with p set are
/// rejected (not defined here).
struct SpanQuery {
    PowerKind kind = PowerKind::Sym;
    int n = 1;
    int k = 1;
    std::optional<int> p;

    void validate() const;
    std::string to_string() const;
};

struct Bound {
    std::string name;
    Rational value;
    bool upper = true;     // direction: dimension <= value vs >= value
    bool checked = true;   // checked bounds gate report construction
    bool satisfied = false;
};

struct DimensionReport {
    SpanQuery query;
    int dimension = 0;
    int num_classes = 0;
    int truncation = 0;
    std::vector<Bound> bounds;
    std::optional<int> ext_paper_dimension;
    long elapsed_ms = 0;
};

/// A polynomial divisible by every denominator in a family of rational
/// generating functions, together with its factored form.
struct CommonDenominator {
    Poly poly;
    std::vector<std::pair<std::string, int>> factors; // (description, multiplicity)
    int degree = 0;
};

/// prod_{0 <= i < k, 1 <= j <= n} (1 - zeta^i x^j); degree k*n*(n+1)/2.
/// Divisible by the denominator of every symmetric-power generating
/// function on C_k wr S_n.
CommonDenominator common_denominator(int n, int k);

/// prod_{j <= n} (1 - x^{r_p(j)}), expanded exactly over Q.
CommonDenominator g_p_product(int p, int n);

/// prod_{1 <= j <= n, (j,p)=1} Phi_j(x)^{floor(n/j)}, expanded exactly; equals
/// g_p_product up to a global sign.
CommonDenominator g_p_cyclotomic(int p, int n);

/// Exact degree of g_p: sum_{1 <= j <= n, (j,p)=1} j*(1 + floor(log_p(n/j))).
long delta_p(int p, int n);

/// Closed-form degree bound (p/(2p+2))n^2 + n(log_p n + 1), rounded upward
/// at the logarithm so the comparison delta_p <= ub_delta_p is sound.
Rational ub_delta_p(int p, int n);

/// Every bound formula applicable to the query, exactly evaluated.
/// Logarithms and Euler's gamma are bracketed with directed rounding (upper
/// bounds rounded up, lower bounds down). Entries with checked=false are
/// informational closed forms that do not gate report construction.
std::vector<Bound> bound_formulas(const SpanQuery& q);

/// default truncation order: deg(common denominator) - n for symmetric-side
/// queries (rank-faithful; see README), n for exterior queries
int default_truncation(const SpanQuery& q);

/// Dimension of the span of the symmetric-power character generating
/// functions over all classes of C_k wr S_n.
DimensionReport compute_sym_dim(int n, int k, std::optional<int> truncation = {});

/// Dimension of the span of the exterior-power generating polynomials, under
/// both sign conventions (the report's dimension field uses the
/// trace-validated one).
DimensionReport compute_ext_dim(int n, int k, std::optional<int> truncation = {});

/// Symmetric span restricted to p-regular classes of S_n (k = 1).
DimensionReport compute_brauer_dim(int p, int n, std::optional<int> truncation = {});

/// Symmetric span restricted to p-regular classes of C_k wr S_n.
DimensionReport compute_brauer_wreath_dim(int p, int n, int k,
                                          std::optional<int> truncation = {});

/// dispatch on the query
DimensionReport compute(const SpanQuery& q, std::optional<int> truncation = {});

struct FamilyRank {
    int rank = 0;
    int expected = 0;
    bool equal = false;
};

/// Exact rank of the coefficient matrix of a family of rational functions,
/// expanded to the given order. The order must be at least
/// deg(common denominator of the family) - n for the rank to be faithful.
FamilyRank verify_family_independent(const std::vector<RationalFunction>& family, int order);

/// {1/(1-zeta^r x) * f_lambda(x) : 0 <= r < k, lambda in W_{n-1}} — a family
/// of k*|W_{n-1}| symmetric generating functions of C_k wr S_n whose
/// independence yields the lower bound on the symmetric span.
std::vector<RationalFunction> y_function_family(int n, int k);

/// {f_lambda : lambda in A_{p,n}} — pairwise distinct cyclotomic pole
/// structures force independence; its size is the Brauer lower bound.
std::vector<RationalFunction> a_function_family(int p, int n);

} // namespace wreathpow
