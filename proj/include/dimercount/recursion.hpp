#ifndef DIMERCOUNT_RECURSION_HPP
#define DIMERCOUNT_RECURSION_HPP

#include <array>
#include <vector>

#include <dimercount/counts.hpp>

namespace dimercount {

inline constexpr int kDefaultExactCap = 12;

// One term c * x^e0 * y^e1 * z^e2 * w^e3 of a stage recursion. Every
// recursion here is a homogeneous cubic (e0+e1+e2+e3 == 3).
struct Monomial {
    long coeff;
    std::array<int, 4> exp;
};

// The four expanded update polynomials (x', y', z', w') of a family.
using ExpandedRecursion = std::array<std::vector<Monomial>, 4>;

// Expanded coefficient form. Kept independent of the structural evaluation so
// the two routes cross-check each other at every step.
const ExpandedRecursion& expanded_recursion(GraphFamily family);

BigInt eval_monomials(const std::vector<Monomial>& monos, const BoundaryCountVector& v);

// Structural forms: gluing case analysis over the subsets of connecting edges
// (and, for SierpX, the hub vertex), written in the S/R/T/P aggregates.
BoundaryCountVector step_hanoi_structural(const BoundaryCountVector& v);
BoundaryCountVector step_sierpx_structural(const BoundaryCountVector& v);

// One stage of the recursion, evaluated through both the structural and the
// expanded route; a mismatch raises ConsistencyError with both values.
BoundaryCountVector step_hanoi(const BoundaryCountVector& v);
BoundaryCountVector step_sierpx(const BoundaryCountVector& v);
BoundaryCountVector step(GraphFamily family, const BoundaryCountVector& v);

BigInt total_count(const BoundaryCountVector& v);

// Stage records 0..n_max from the initial vector (1, 0, 1, 0). Digit counts
// triple per stage, so the cap guards runaway requests.
std::vector<StageRecord> iterate(GraphFamily family, int n_max, int exact_cap = kDefaultExactCap);

std::string stage_records_to_csv(const std::vector<StageRecord>& records);

}  // namespace dimercount

#endif
