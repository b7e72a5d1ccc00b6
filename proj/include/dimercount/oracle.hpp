#ifndef DIMERCOUNT_ORACLE_HPP
#define DIMERCOUNT_ORACLE_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include <dimercount/counts.hpp>
#include <dimercount/graphs.hpp>

namespace dimercount {

// Step ceiling plus wall-clock override. On exhaustion the oracle fails
// loudly (BudgetExhaustedError); it never approximates.
struct OracleBudget {
    std::uint64_t max_steps = 500'000'000;
    double max_seconds = 300.0;
};

struct CountResult {
    BigInt value;
    std::uint64_t steps = 0;
    double seconds = 0.0;
};

struct BoundaryCountResult {
    BoundaryCountVector counts;
    // Count per corner-status class; index bit i set <=> corner i is covered
    // by a dimer. classes[0] = x, classes[7] = w.
    std::array<BigInt, 8> classes{};
    std::uint64_t steps = 0;
    double seconds = 0.0;
};

// Exact number of matchings (independent edge subsets, empty one included)
// of an arbitrary simple loop-free graph. Decision recursion on a pivot
// vertex with connected-component factorization and a cache keyed by the
// alive-vertex set of the residual induced subgraph.
CountResult count_matchings(int vertex_count, const std::vector<std::pair<int, int>>& edges,
                            const OracleBudget& budget = {});
CountResult count_matchings(const GraphInstance& g, const OracleBudget& budget = {});

// Counts per corner-status class for a graph with three marked corners,
// collapsed to (x, y, z, w) after checking that the three one-dimer classes
// agree and the three two-dimer classes agree (rotational symmetry).
BoundaryCountResult count_by_boundary(const GraphInstance& g, const OracleBudget& budget = {},
                                      bool parallel = false);

}  // namespace dimercount

#endif
