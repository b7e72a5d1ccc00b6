#ifndef DIMERCOUNT_COUNTS_HPP
#define DIMERCOUNT_COUNTS_HPP

#include <string>

#include <dimercount/family.hpp>
#include <dimercount/numeric.hpp>

namespace dimercount {

// Matching counts of one stage, classified by how many of the three corner
// vertices are covered by a dimer: x none, y one (specified), z two, w all.
struct BoundaryCountVector {
    BigInt x, y, z, w;
    std::string tag;  // stage or source, e.g. "hanoi n=2" or "oracle"

    BigInt total() const { return x + 3 * y + 3 * z + w; }
    bool all_nonnegative() const { return x >= 0 && y >= 0 && z >= 0 && w >= 0; }
    bool strictly_ordered() const { return x > y && y > z && z > w && w > 0; }

    bool operator==(const BoundaryCountVector& o) const {
        return x == o.x && y == o.y && z == o.z && w == o.w;
    }
};

// S: one corner free, two monomer.  R: one dimer, one free, one monomer.
// T: two free, one monomer.         P: two free, one dimer.
struct AggregateCounts {
    BigInt S, R, T, P;

    static AggregateCounts from(const BoundaryCountVector& v) {
        return {v.x + v.y, v.y + v.z, v.x + 2 * v.y + v.z, v.y + 2 * v.z + v.w};
    }
};

struct StageRecord {
    GraphFamily family;
    int n;
    BoundaryCountVector counts;
    AggregateCounts aggregates;
    BigInt m;
};

}  // namespace dimercount

#endif
