#pragma once

#include "wreathpow/cyclotomic.hpp"

#include <vector>

namespace wreathpow {

/// Exact rank of a matrix over Q(zeta_k), by Gaussian elimination with exact
/// field inverses. All entries must share one conductor; mixed conductors are
/// rejected. Pivots are chosen "simplest first" (fewest nonzero coordinates,
/// then smallest coefficient bit size) to limit fraction growth; the choice
/// affects speed only, never the result.
int exact_rank(std::vector<std::vector<CycloNumber>> rows);

} // namespace wreathpow
