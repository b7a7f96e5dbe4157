#pragma once

#include <cstdint>

#include "tolrec/geometry.hpp"
#include "tolrec/reduction.hpp"

namespace tolrec {

// Deterministic per seed (mt19937_64). Endpoints are distinct rationals.
ParallelogramRep random_parallelogram_rep(int n, std::uint64_t seed);
// General trapezoids, distinct endpoints.
TrapezoidRep random_trapezoid_rep(int n, std::uint64_t seed);
// Bounded; integer endpoints with frequent ties and some t = |I|.
ToleranceRep random_bounded_tolerance_rep(int n, std::uint64_t seed);
// k distinct clauses over 1..n, every variable used. Needs 3 <= n <= 3k.
MonotoneCnf random_monotone_cnf(int n, int k, std::uint64_t seed);

}  // namespace tolrec
