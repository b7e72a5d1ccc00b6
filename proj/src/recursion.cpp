#include <dimercount/recursion.hpp>

#include <dimercount/errors.hpp>

#include <sstream>

namespace dimercount {

namespace {

const ExpandedRecursion kHanoiExpanded = {{
    // x'
    {{8, {3, 0, 0, 0}}, {24, {2, 1, 0, 0}}, {6, {2, 0, 1, 0}}, {30, {1, 2, 0, 0}},
     {18, {1, 1, 1, 0}}, {3, {1, 0, 2, 0}}, {14, {0, 3, 0, 0}}, {15, {0, 2, 1, 0}},
     {6, {0, 1, 2, 0}}, {1, {0, 0, 3, 0}}},
    // y'
    {{8, {2, 1, 0, 0}}, {8, {2, 0, 1, 0}}, {2, {2, 0, 0, 1}}, {16, {1, 2, 0, 0}},
     {24, {1, 1, 1, 0}}, {6, {1, 1, 0, 1}}, {6, {1, 0, 2, 0}}, {2, {1, 0, 1, 1}},
     {10, {0, 3, 0, 0}}, {20, {0, 2, 1, 0}}, {5, {0, 2, 0, 1}}, {11, {0, 1, 2, 0}},
     {4, {0, 1, 1, 1}}, {2, {0, 0, 3, 0}}, {1, {0, 0, 2, 1}}},
    // z'
    {{8, {1, 2, 0, 0}}, {16, {1, 1, 1, 0}}, {4, {1, 1, 0, 1}}, {10, {1, 0, 2, 0}},
     {6, {1, 0, 1, 1}}, {1, {1, 0, 0, 2}}, {8, {0, 3, 0, 0}}, {22, {0, 2, 1, 0}},
     {6, {0, 2, 0, 1}}, {20, {0, 1, 2, 0}}, {12, {0, 1, 1, 1}}, {2, {0, 1, 0, 2}},
     {5, {0, 0, 3, 0}}, {4, {0, 0, 2, 1}}, {1, {0, 0, 1, 2}}},
    // w'
    {{8, {0, 3, 0, 0}}, {24, {0, 2, 1, 0}}, {6, {0, 2, 0, 1}}, {30, {0, 1, 2, 0}},
     {18, {0, 1, 1, 1}}, {3, {0, 1, 0, 2}}, {14, {0, 0, 3, 0}}, {15, {0, 0, 2, 1}},
     {6, {0, 0, 1, 2}}, {1, {0, 0, 0, 3}}},
}};

const ExpandedRecursion kSierpXExpanded = {{
    // x'
    {{32, {3, 0, 0, 0}}, {96, {2, 1, 0, 0}}, {24, {2, 0, 1, 0}}, {108, {1, 2, 0, 0}},
     {60, {1, 1, 1, 0}}, {9, {1, 0, 2, 0}}, {44, {0, 3, 0, 0}}, {39, {0, 2, 1, 0}},
     {12, {0, 1, 2, 0}}, {1, {0, 0, 3, 0}}},
    // y'
    {{32, {2, 1, 0, 0}}, {32, {2, 0, 1, 0}}, {8, {2, 0, 0, 1}}, {64, {1, 2, 0, 0}},
     {88, {1, 1, 1, 0}}, {20, {1, 1, 0, 1}}, {20, {1, 0, 2, 0}}, {6, {1, 0, 1, 1}},
     {36, {0, 3, 0, 0}}, {64, {0, 2, 1, 0}}, {13, {0, 2, 0, 1}}, {29, {0, 1, 2, 0}},
     {8, {0, 1, 1, 1}}, {4, {0, 0, 3, 0}}, {1, {0, 0, 2, 1}}},
    // z'
    {{32, {1, 2, 0, 0}}, {64, {1, 1, 1, 0}}, {16, {1, 1, 0, 1}}, {36, {1, 0, 2, 0}},
     {20, {1, 0, 1, 1}}, {3, {1, 0, 0, 2}}, {32, {0, 3, 0, 0}}, {80, {0, 2, 1, 0}},
     {20, {0, 2, 0, 1}}, {64, {0, 1, 2, 0}}, {32, {0, 1, 1, 1}}, {4, {0, 1, 0, 2}},
     {13, {0, 0, 3, 0}}, {8, {0, 0, 2, 1}}, {1, {0, 0, 1, 2}}},
    // w'
    {{32, {0, 3, 0, 0}}, {96, {0, 2, 1, 0}}, {24, {0, 2, 0, 1}}, {108, {0, 1, 2, 0}},
     {60, {0, 1, 1, 1}}, {9, {0, 1, 0, 2}}, {44, {0, 0, 3, 0}}, {39, {0, 0, 2, 1}},
     {12, {0, 0, 1, 2}}, {1, {0, 0, 0, 3}}},
}};

void require_valid_input(const BoundaryCountVector& v) {
    if (!v.all_nonnegative()) throw DomainError("boundary counts must be nonnegative");
    if (v.x == 0 && v.y == 0 && v.z == 0 && v.w == 0)
        throw DomainError("boundary counts must not all be zero");
}

BoundaryCountVector checked_step(const BoundaryCountVector& v,
                                 BoundaryCountVector (*structural)(const BoundaryCountVector&),
                                 const ExpandedRecursion& expanded, const char* what) {
    require_valid_input(v);
    BoundaryCountVector s = structural(v);
    const BigInt* lhs[4] = {&s.x, &s.y, &s.z, &s.w};
    const char* names = "xyzw";
    for (int i = 0; i < 4; ++i) {
        BigInt e = eval_monomials(expanded[static_cast<size_t>(i)], v);
        if (e != *lhs[i])
            throw ConsistencyError(std::string(what) + ": structural and expanded forms disagree on " +
                                   names[i] + "' (structural " + lhs[i]->str() + ", expanded " +
                                   e.str() + ")");
    }
    return s;
}

}  // namespace

const ExpandedRecursion& expanded_recursion(GraphFamily family) {
    return family == GraphFamily::Hanoi ? kHanoiExpanded : kSierpXExpanded;
}

BigInt eval_monomials(const std::vector<Monomial>& monos, const BoundaryCountVector& v) {
    const BigInt* vars[4] = {&v.x, &v.y, &v.z, &v.w};
    BigInt sum = 0;
    BigInt term;
    for (const Monomial& m : monos) {
        term = m.coeff;
        for (int i = 0; i < 4; ++i)
            for (int e = 0; e < m.exp[static_cast<size_t>(i)]; ++e) term *= *vars[i];
        sum += term;
    }
    return sum;
}

BoundaryCountVector step_hanoi_structural(const BoundaryCountVector& v) {
    const auto [S, R, T, P] = AggregateCounts::from(v);
    const BigInt &x = v.x, &y = v.y;
    BoundaryCountVector r;
    r.x = T * T * T + 3 * S * S * T + 3 * x * S * S + x * x * x;
    r.y = P * T * T + P * S * S + 2 * R * S * T + y * S * S + 2 * x * R * S + x * x * y;
    r.z = P * P * T + R * R * T + 2 * P * R * S + 2 * y * R * S + x * R * R + x * y * y;
    r.w = P * P * P + 3 * P * R * R + 3 * y * R * R + y * y * y;
    return r;
}

BoundaryCountVector step_sierpx_structural(const BoundaryCountVector& v) {
    const auto [S, R, T, P] = AggregateCounts::from(v);
    const BigInt &x = v.x, &y = v.y;
    BoundaryCountVector r;
    // First line of each sum: hub unmatched (the plain gluing cases);
    // remaining terms: hub matched to one of the six inner corners.
    r.x = T * T * T + 3 * S * S * T + 3 * x * S * S + x * x * x          //
          + 6 * S * T * T + 6 * x * S * T + 6 * S * S * S + 6 * x * x * S;
    r.y = P * T * T + P * S * S + 2 * R * S * T + y * S * S + 2 * x * R * S + x * x * y  //
          + 2 * R * T * T + 4 * S * T * P + 2 * x * R * T + 6 * S * S * R + 2 * y * S * T +
          2 * x * S * P + 4 * x * y * S + 2 * x * x * R;
    r.z = P * P * T + R * R * T + 2 * P * R * S + 2 * y * R * S + x * R * R + x * y * y  //
          + 2 * S * P * P + 4 * R * T * P + 2 * y * S * P + 6 * S * R * R + 2 * x * R * P +
          2 * y * R * T + 4 * x * y * R + 2 * y * y * S;
    r.w = P * P * P + 3 * P * R * R + 3 * y * R * R + y * y * y  //
          + 6 * R * P * P + 6 * y * R * P + 6 * R * R * R + 6 * y * y * R;
    return r;
}

BoundaryCountVector step_hanoi(const BoundaryCountVector& v) {
    return checked_step(v, step_hanoi_structural, kHanoiExpanded, "hanoi step");
}

BoundaryCountVector step_sierpx(const BoundaryCountVector& v) {
    return checked_step(v, step_sierpx_structural, kSierpXExpanded, "sierpx step");
}

BoundaryCountVector step(GraphFamily family, const BoundaryCountVector& v) {
    return family == GraphFamily::Hanoi ? step_hanoi(v) : step_sierpx(v);
}

BigInt total_count(const BoundaryCountVector& v) {
    if (!v.all_nonnegative()) throw DomainError("boundary counts must be nonnegative");
    return v.total();
}

std::vector<StageRecord> iterate(GraphFamily family, int n_max, int exact_cap) {
    if (n_max < 0) throw DomainError("stage must be nonnegative");
    if (n_max > exact_cap)
        throw ResourceLimitError("stage " + std::to_string(n_max) + " exceeds the exact cap (" +
                                 std::to_string(exact_cap) + ")");
    std::vector<StageRecord> out;
    out.reserve(static_cast<size_t>(n_max) + 1);
    BoundaryCountVector v{1, 0, 1, 0, ""};
    for (int n = 0;; ++n) {
        v.tag = std::string(family_name(family)) + " n=" + std::to_string(n);
        if (n >= 1 && !v.strictly_ordered())
            throw ConsistencyError("ordering x > y > z > w > 0 violated at stage " +
                                   std::to_string(n));
        out.push_back({family, n, v, AggregateCounts::from(v), v.total()});
        if (n == n_max) break;
        v = step(family, v);
    }
    return out;
}

std::string stage_records_to_csv(const std::vector<StageRecord>& records) {
    std::ostringstream out;
    out << "n,x,y,z,w,m\n";
    for (const auto& r : records)
        out << r.n << ',' << r.counts.x.str() << ',' << r.counts.y.str() << ','
            << r.counts.z.str() << ',' << r.counts.w.str() << ',' << r.m.str() << '\n';
    return out.str();
}

}  // namespace dimercount
