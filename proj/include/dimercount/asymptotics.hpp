#ifndef DIMERCOUNT_ASYMPTOTICS_HPP
#define DIMERCOUNT_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include <dimercount/counts.hpp>

namespace dimercount {

inline constexpr int kMaxEntropyDigits = 120;

// Successive-count ratios at one stage: alpha = y/x, beta = z/y, gamma = w/z,
// epsilon = gamma - alpha. Defined for stages n >= 1 only (y_0 = 0).
struct RatioState {
    GraphFamily family;
    int n;
    BigFloat alpha, beta, gamma, epsilon;
    unsigned precisionBits;
};

// The normalized update polynomials: with the substitution (x, y, z, w) ->
// (1, a, ab, abg) each cubic recursion factors as x' = x^3 A, y' = x^3 a B,
// z' = x^3 a^2 C, w' = x^3 a^3 D, so the ratios update as a' = a B/A,
// b' = a C/B, g' = a D/C. A..D are evaluated straight off the expanded
// monomial lists, which keeps one code path for both families.
struct RatioUpdateCoefficients {
    BigFloat A, B, C, D;
};
RatioUpdateCoefficients ratio_update_coefficients(GraphFamily family, const BigFloat& alpha,
                                                  const BigFloat& beta, const BigFloat& gamma);

RatioState ratios_from_counts(GraphFamily family, int n, const BoundaryCountVector& v,
                              unsigned precision_bits);
RatioState ratios_from_counts(const StageRecord& record, unsigned precision_bits);

// Advance one stage on the float path. Raises PrecisionError if the output
// ordering 1/2 < a < b < g < 1 (required from stage 2 on) is violated beyond
// rounding slack.
RatioState ratio_step(const RatioState& s);

struct FixedPointResult {
    GraphFamily family;
    BigFloat value;   // midpoint of the final [alpha, gamma] enclosure
    BigFloat radius;  // half-width of the enclosure
    int stage;        // stage at which the enclosure was reached
    unsigned precisionBits;
};

// Iterates ratio_step from the exact stage-1 ratios until gamma - alpha <
// 10^-target_digits. Precision escalates automatically so rounding noise
// stays below the enclosure width.
FixedPointResult ratio_fixed_point(GraphFamily family, int target_digits);

// Two-sided bounds on ln m(H_n) anchored at stage k:
//   lower: 3^(n-k) ln x_k + (3(3^(n-k)-1)/2) ln(a_k^2+2a_k+2) + 3 ln(1+a_n)
//   upper: same shape with b_k and g_n.
struct CountBounds {
    int k, n;
    BigFloat logLower, logUpper;
    BigFloat logM;  // exact count from the ledger, as a log
    bool verified;  // logLower < logM < logUpper
};
CountBounds bound_m_hanoi(int k, int n, const std::vector<StageRecord>& ledger,
                          unsigned precision_bits);

// Rigorous entropy-per-site bounds from stage k of the exact ledger.
// Hanoi:  ln x_k / 3^(k+1) + ln(r^2+2r+2) / (2*3^k),   r = a_k (lower) / b_k (upper)
// SierpX: (2 ln x_k + ln(r^2+8r+8) + 2 ln(r^2+2r+2)) / (7*3^k)
struct EntropyBounds {
    GraphFamily family;
    int k;
    BigFloat lower, upper;
    int agreedDigits;  // shared leading decimals minus 2 guard digits
    unsigned precisionBits;
};
EntropyBounds entropy_bounds(GraphFamily family, int k, const std::vector<StageRecord>& ledger,
                             unsigned precision_bits);

struct EntropyEstimate {
    GraphFamily family;
    BigFloat muPerVertex;
    BigFloat muPerEdge;
    int digits;               // certified digits (= the request)
    std::string digitsString; // "0.d..." truncated to `digits` digits
    int k;
    unsigned precisionBits;
    EntropyBounds bounds;
};

// Smallest k whose bounds agree to target_digits; the digit string is
// certified by agreement of the truncated expansions of both bounds, and is
// recomputed at doubled precision before being reported. precision_bits_hint
// overrides the starting precision (0 = default, escalated as needed).
EntropyEstimate entropy(GraphFamily family, int target_digits, unsigned precision_bits_hint = 0);

// Exact rational comparisons on ledger stages (cross-multiplied integers);
// immune to float resolution, which matters once epsilon underflows any
// practical precision (stage 10+).
bool exact_ordering_ok(const StageRecord& r);  // 1/2 < a < b < g < 1
bool exact_alpha_increasing(const StageRecord& cur, const StageRecord& next);
bool exact_gamma_decreasing(const StageRecord& cur, const StageRecord& next);
bool exact_contraction_ok(const StageRecord& cur, const StageRecord& next);  // e' < 2 e^2

// ln x_k rebuilt incrementally via L_{n+1} = 3 L_n + ln A_n; cross-checks the
// direct high-precision log of the exact integer.
BigFloat accumulated_log_x(const std::vector<StageRecord>& ledger, int k, unsigned precision_bits);

}  // namespace dimercount

#endif
