#include <dimercount/asymptotics.hpp>

#include <dimercount/errors.hpp>
#include <dimercount/graphs.hpp>
#include <dimercount/recursion.hpp>

#include <algorithm>

namespace dimercount {

namespace {

BigFloat pow_int(const BigFloat& base, int e) {
    BigFloat r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

BigFloat ldexp1(int e) {  // 2^e
    BigFloat r = 1;
    return boost::multiprecision::ldexp(r, e);
}

void require_ledger_stage(const std::vector<StageRecord>& ledger, int k) {
    if (k < 0 || static_cast<size_t>(k) >= ledger.size())
        throw DomainError("ledger does not cover stage " + std::to_string(k));
}

const StageRecord& stage(const std::vector<StageRecord>& ledger, int k) {
    require_ledger_stage(ledger, k);
    const StageRecord& r = ledger[static_cast<size_t>(k)];
    if (r.n != k) throw ConsistencyError("ledger stages out of order");
    return r;
}

// Bound arguments g(r) with ln g entering the entropy formulas.
BigFloat hanoi_bound_arg(const BigFloat& r) { return r * r + 2 * r + 2; }
BigFloat sierpx_bound_arg_hub(const BigFloat& r) { return r * r + 8 * r + 8; }

}  // namespace

RatioUpdateCoefficients ratio_update_coefficients(GraphFamily family, const BigFloat& alpha,
                                                  const BigFloat& beta, const BigFloat& gamma) {
    const ExpandedRecursion& rec = expanded_recursion(family);
    BigFloat out[4];
    for (int j = 0; j < 4; ++j) {
        BigFloat sum = 0;
        for (const Monomial& m : rec[static_cast<size_t>(j)]) {
            const int ea = m.exp[1] + m.exp[2] + m.exp[3] - j;
            const int eb = m.exp[2] + m.exp[3];
            const int eg = m.exp[3];
            if (ea < 0) throw ConsistencyError("monomial too low in y/z/w degree for its slot");
            sum += m.coeff * pow_int(alpha, ea) * pow_int(beta, eb) * pow_int(gamma, eg);
        }
        out[j] = sum;
    }
    return {out[0], out[1], out[2], out[3]};
}

RatioState ratios_from_counts(GraphFamily family, int n, const BoundaryCountVector& v,
                              unsigned precision_bits) {
    if (v.x <= 0 || v.y <= 0 || v.z <= 0)
        throw DomainError("ratios are defined for stages n >= 1 only (zero denominator)");
    ScopedPrecision guard(precision_bits);
    RatioState s;
    s.family = family;
    s.n = n;
    s.alpha = to_float(v.y) / to_float(v.x);
    s.beta = to_float(v.z) / to_float(v.y);
    s.gamma = to_float(v.w) / to_float(v.z);
    s.epsilon = s.gamma - s.alpha;
    s.precisionBits = precision_bits;
    return s;
}

RatioState ratios_from_counts(const StageRecord& record, unsigned precision_bits) {
    return ratios_from_counts(record.family, record.n, record.counts, precision_bits);
}

RatioState ratio_step(const RatioState& s) {
    ScopedPrecision guard(s.precisionBits);
    const auto [A, B, C, D] = ratio_update_coefficients(s.family, s.alpha, s.beta, s.gamma);
    if (!(A > 0 && B > 0 && C > 0 && D > 0))
        throw ConsistencyError("ratio update coefficients must be positive");
    RatioState out;
    out.family = s.family;
    out.n = s.n + 1;
    out.alpha = s.alpha * B / A;
    out.beta = s.alpha * C / B;
    out.gamma = s.alpha * D / C;
    out.epsilon = out.gamma - out.alpha;
    out.precisionBits = s.precisionBits;

    if (out.n >= 2) {
        const BigFloat slack = ldexp1(-static_cast<int>(s.precisionBits) + 16);
        const bool ok = out.alpha > BigFloat(0.5) - slack && out.beta > out.alpha - slack &&
                        out.gamma > out.beta - slack && out.gamma < BigFloat(1) + slack;
        if (!ok)
            throw PrecisionError("ratio ordering violated beyond rounding slack at stage " +
                                 std::to_string(out.n) + "; increase precision");
    }
    return out;
}

FixedPointResult ratio_fixed_point(GraphFamily family, int target_digits) {
    if (target_digits < 1) throw DomainError("target digits must be >= 1");
    const std::vector<StageRecord> ledger = iterate(family, 1);

    unsigned bits = std::max(default_precision_bits(),
                             static_cast<unsigned>((target_digits + 25) * 3.33) + 1);
    for (; bits <= kMaxPrecisionBits; bits *= 2) {
        ScopedPrecision guard(bits);
        const BigFloat target = pow_int(BigFloat(10), target_digits);
        const BigFloat noise = ldexp1(-static_cast<int>(bits) + 24);
        try {
            RatioState s = ratios_from_counts(stage(ledger, 1), bits);
            for (int iter = 0; iter < 64; ++iter) {
                if (s.epsilon * target < 1) {
                    FixedPointResult r;
                    r.family = family;
                    r.value = (s.alpha + s.gamma) / 2;
                    r.radius = s.epsilon / 2;
                    if (r.radius < 0) r.radius = 0;
                    r.stage = s.n;
                    r.precisionBits = bits;
                    return r;
                }
                if (s.epsilon < noise) break;  // enclosure hit rounding noise first
                s = ratio_step(s);
            }
        } catch (const PrecisionError&) {
            // fall through to escalation
        }
        if (bits == kMaxPrecisionBits) break;
    }
    throw ConvergenceError("enclosure of width 10^-" + std::to_string(target_digits) +
                           " not reached; contraction should make this unreachable");
}

CountBounds bound_m_hanoi(int k, int n, const std::vector<StageRecord>& ledger,
                          unsigned precision_bits) {
    if (k < 1 || k > n) throw DomainError("bound_m_hanoi requires 1 <= k <= n");
    const StageRecord& rk = stage(ledger, k);
    const StageRecord& rn = stage(ledger, n);
    if (rk.family != GraphFamily::Hanoi) throw DomainError("bound_m_hanoi needs a Hanoi ledger");

    ScopedPrecision guard(precision_bits);
    const RatioState sk = ratios_from_counts(rk, precision_bits);
    const RatioState sn = ratios_from_counts(rn, precision_bits);

    BigInt copies = 1;  // 3^(n-k)
    for (int i = 0; i < n - k; ++i) copies *= 3;
    const BigFloat copies_f = to_float(copies);
    const BigFloat middle_exp = to_float(3 * (copies - 1) / 2);
    const BigFloat log_xk = log(to_float(rk.counts.x));

    CountBounds b;
    b.k = k;
    b.n = n;
    b.logLower =
        copies_f * log_xk + middle_exp * log(hanoi_bound_arg(sk.alpha)) + 3 * log(1 + sn.alpha);
    b.logUpper =
        copies_f * log_xk + middle_exp * log(hanoi_bound_arg(sk.beta)) + 3 * log(1 + sn.gamma);
    b.logM = log(to_float(rn.m));
    b.verified = b.logLower < b.logM && b.logM < b.logUpper;
    return b;
}

EntropyBounds entropy_bounds(GraphFamily family, int k, const std::vector<StageRecord>& ledger,
                             unsigned precision_bits) {
    if (k < 1) throw DomainError("entropy bounds require k >= 1");
    const StageRecord& rk = stage(ledger, k);
    if (rk.family != family) throw DomainError("ledger family mismatch");

    ScopedPrecision guard(precision_bits);
    const RatioState s = ratios_from_counts(rk, precision_bits);
    const BigFloat log_xk = log(to_float(rk.counts.x));
    BigInt p3 = 1;  // 3^k
    for (int i = 0; i < k; ++i) p3 *= 3;

    EntropyBounds b;
    b.family = family;
    b.k = k;
    if (family == GraphFamily::Hanoi) {
        const BigFloat denom = 2 * to_float(p3);
        b.lower = log_xk / (3 * to_float(p3)) + log(hanoi_bound_arg(s.alpha)) / denom;
        b.upper = log_xk / (3 * to_float(p3)) + log(hanoi_bound_arg(s.beta)) / denom;
    } else {
        const BigFloat denom = 7 * to_float(p3);
        b.lower = (2 * log_xk + log(sierpx_bound_arg_hub(s.alpha)) +
                   2 * log(hanoi_bound_arg(s.alpha))) /
                  denom;
        b.upper = (2 * log_xk + log(sierpx_bound_arg_hub(s.beta)) +
                   2 * log(hanoi_bound_arg(s.beta))) /
                  denom;
    }
    b.precisionBits = precision_bits;

    const BigFloat gap = b.upper - b.lower;
    const BigFloat noise = ldexp1(-static_cast<int>(precision_bits) + 16);
    if (!(gap > noise))
        throw PrecisionError("entropy bounds at k=" + std::to_string(k) +
                             " are not separated from rounding noise at " +
                             std::to_string(precision_bits) + " bits; increase precision");
    if (!(b.lower > 0 && b.upper < 1))
        throw ConsistencyError("entropy bounds escaped (0, 1)");

    const int max_digits = static_cast<int>(bits_to_digits10(precision_bits)) - 5;
    b.agreedDigits = std::max(0, common_prefix_digits(b.lower, b.upper, max_digits) - 2);
    return b;
}

EntropyEstimate entropy(GraphFamily family, int target_digits, unsigned precision_bits_hint) {
    if (target_digits < 1) throw DomainError("target digits must be >= 1");
    if (target_digits > kMaxEntropyDigits)
        throw ResourceLimitError("target of " + std::to_string(target_digits) +
                                 " digits exceeds the guard (" +
                                 std::to_string(kMaxEntropyDigits) + ")");

    constexpr int kMaxStage = 8;  // bounds at k = 8 separate far beyond the digit guard
    const std::vector<StageRecord> ledger = iterate(family, kMaxStage);
    const auto limit = family_meta(family, 0).vertexOverEdgeLimit;

    unsigned bits = std::max(precision_bits_hint ? precision_bits_hint : default_precision_bits(),
                             static_cast<unsigned>((target_digits + 30) * 3.33) + 1);
    bits = std::min(bits, kMaxPrecisionBits / 2);
    for (; bits <= kMaxPrecisionBits / 2; bits *= 2) {
        bool precision_limited = false;
        for (int k = 1; k <= kMaxStage; ++k) {
            EntropyBounds probe, certified;
            try {
                probe = entropy_bounds(family, k, ledger, bits);
                if (probe.agreedDigits < target_digits) continue;  // need a later stage
                certified = entropy_bounds(family, k, ledger, bits * 2);
            } catch (const PrecisionError&) {
                precision_limited = true;
                break;
            }
            if (certified.agreedDigits < target_digits) {
                precision_limited = true;  // agreement was a rounding artifact
                break;
            }
            const std::string d1 = truncated_decimals(probe.lower, target_digits);
            const std::string d2 = truncated_decimals(certified.lower, target_digits);
            const std::string d3 = truncated_decimals(certified.upper, target_digits);
            if (d1 != d2 || d2 != d3) {
                precision_limited = true;
                break;
            }
            ScopedPrecision guard(bits * 2);
            EntropyEstimate e;
            e.family = family;
            e.muPerVertex = (certified.lower + certified.upper) / 2;
            e.muPerEdge = e.muPerVertex * limit.first / limit.second;
            e.digits = target_digits;
            e.digitsString = d2;
            e.k = k;
            e.precisionBits = bits * 2;
            e.bounds = certified;
            return e;
        }
        if (!precision_limited)
            throw ResourceLimitError("bounds never agreed to " + std::to_string(target_digits) +
                                     " digits by stage " + std::to_string(kMaxStage));
    }
    throw PrecisionError("entropy estimate did not stabilize within the precision ceiling");
}

bool exact_ordering_ok(const StageRecord& r) {
    const BigInt &x = r.counts.x, &y = r.counts.y, &z = r.counts.z, &w = r.counts.w;
    if (y <= 0 || z <= 0 || w <= 0) return false;
    return 2 * y > x      // 1/2 < a
           && y * y < x * z  // a < b
           && z * z < y * w  // b < g
           && w < z;         // g < 1
}

bool exact_alpha_increasing(const StageRecord& cur, const StageRecord& next) {
    return next.counts.y * cur.counts.x > cur.counts.y * next.counts.x;
}

bool exact_gamma_decreasing(const StageRecord& cur, const StageRecord& next) {
    return next.counts.w * cur.counts.z < cur.counts.w * next.counts.z;
}

bool exact_contraction_ok(const StageRecord& cur, const StageRecord& next) {
    // e = (w x - y z) / (z x); require e' < 2 e^2 with positive denominators.
    const BigInt num_cur = cur.counts.w * cur.counts.x - cur.counts.y * cur.counts.z;
    const BigInt den_cur = cur.counts.z * cur.counts.x;
    const BigInt num_next = next.counts.w * next.counts.x - next.counts.y * next.counts.z;
    const BigInt den_next = next.counts.z * next.counts.x;
    if (num_cur <= 0 || num_next <= 0) return false;
    return num_next * den_cur * den_cur < 2 * num_cur * num_cur * den_next;
}

BigFloat accumulated_log_x(const std::vector<StageRecord>& ledger, int k, unsigned precision_bits) {
    if (k < 1) throw DomainError("accumulated log starts at stage 1");
    require_ledger_stage(ledger, k);
    ScopedPrecision guard(precision_bits);
    BigFloat L = log(to_float(stage(ledger, 1).counts.x));
    for (int n = 1; n < k; ++n) {
        const RatioState s = ratios_from_counts(stage(ledger, n), precision_bits);
        const auto coeffs = ratio_update_coefficients(ledger.front().family, s.alpha, s.beta, s.gamma);
        L = 3 * L + log(coeffs.A);
    }
    return L;
}

}  // namespace dimercount
