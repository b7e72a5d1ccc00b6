#include <doctest.h>

#include <dimercount/asymptotics.hpp>
#include <dimercount/errors.hpp>
#include <dimercount/recursion.hpp>

using namespace dimercount;

namespace {

BigFloat pow10_neg(int d) {
    BigFloat r = 1;
    for (int i = 0; i < d; ++i) r /= 10;
    return r;
}

// 120-digit truncated expansions certified by the nested bounds at k = 8, 9
// (gap < 10^-300) with precision-doubling agreement.
const char* kMuHanoi120 =
    "0.576464301650528375285668556809443149506259644417391197883107"
    "556575401046050208469557155775622454780028245728129044573676";
const char* kMuSierpX120 =
    "0.671954982000828528471980415443172207458848589861566719729251"
    "570237633681446619006356896944197822668710243534123435079156";

const char* kLimitHanoi60 =
    "0.917681182521246406548800592937898125195541669839233087946103";
const char* kLimitSierpX60 =
    "0.865476652083104978836916683321407009114508356749079175754219";

}  // namespace

TEST_CASE("ratios from exact counts match the stage tables") {
    const auto hanoi = iterate(GraphFamily::Hanoi, 2);
    {
        const RatioState s = ratios_from_counts(hanoi[1], 256);
        ScopedPrecision guard(256);
        CHECK(fixed_decimals(s.alpha, 15) == "0.888888888888889");
        CHECK(fixed_decimals(s.beta, 4) == "0.9375");
        CHECK(fixed_decimals(s.gamma, 15) == "0.933333333333333");
        CHECK(s.epsilon > 0);
    }
    {
        const RatioState s = ratios_from_counts(hanoi[2], 256);
        ScopedPrecision guard(256);
        CHECK(fixed_decimals(s.alpha, 15) == "0.917654552781009");
        CHECK(fixed_decimals(s.beta, 15) == "0.917689988955022");
        CHECK(fixed_decimals(s.gamma, 15) == "0.917725182258311");
    }
    const auto sierpx = iterate(GraphFamily::SierpX, 1);
    {
        const RatioState s = ratios_from_counts(sierpx[1], 256);
        ScopedPrecision guard(256);
        CHECK(fixed_decimals(s.alpha, 16) == "0.8484848484848485");
        CHECK(fixed_decimals(s.beta, 3) == "0.875");
        CHECK(fixed_decimals(s.gamma, 16) == "0.8979591836734694");
    }
}

TEST_CASE("stage-0 ratios are undefined") {
    const auto ledger = iterate(GraphFamily::Hanoi, 0);
    CHECK_THROWS_WITH_AS(ratios_from_counts(ledger[0], 128),
                         "ratios are defined for stages n >= 1 only (zero denominator)",
                         DomainError);
}

TEST_CASE("hanoi update coefficients reduce to the constant terms at zero") {
    ScopedPrecision guard(128);
    const auto c = ratio_update_coefficients(GraphFamily::Hanoi, 0, 0, 0);
    CHECK(c.A == 8);
    CHECK(c.B == 8);
    CHECK(c.C == 8);
    CHECK(c.D == 8);
}

TEST_CASE("update coefficients are positive on valid states") {
    const auto ledger = iterate(GraphFamily::SierpX, 4);
    for (int n = 1; n <= 4; ++n) {
        const RatioState s = ratios_from_counts(ledger[static_cast<size_t>(n)], 256);
        ScopedPrecision guard(256);
        const auto c = ratio_update_coefficients(GraphFamily::SierpX, s.alpha, s.beta, s.gamma);
        CHECK(c.A > 0);
        CHECK(c.B > 0);
        CHECK(c.C > 0);
        CHECK(c.D > 0);
    }
}

TEST_CASE("ratio_step reproduces the next stage of both families") {
    SUBCASE("hanoi stage 1 -> 2") {
        const auto ledger = iterate(GraphFamily::Hanoi, 1);
        const RatioState next = ratio_step(ratios_from_counts(ledger[1], 512));
        ScopedPrecision guard(512);
        CHECK(next.n == 2);
        CHECK(fixed_decimals(next.alpha, 15) == "0.917654552781009");
        CHECK(fixed_decimals(next.beta, 15) == "0.917689988955022");
        CHECK(fixed_decimals(next.gamma, 15) == "0.917725182258311");
    }
    SUBCASE("hanoi stage 2 -> 3") {
        const auto ledger = iterate(GraphFamily::Hanoi, 2);
        const RatioState next = ratio_step(ratios_from_counts(ledger[2], 512));
        ScopedPrecision guard(512);
        CHECK(fixed_decimals(next.alpha, 16) == "0.9176811824818184");
        CHECK(fixed_decimals(next.beta, 16) == "0.9176811825342171");
        CHECK(fixed_decimals(next.gamma, 16) == "0.9176811825866158");
    }
    SUBCASE("sierpx stage 2 -> 3") {
        const auto ledger = iterate(GraphFamily::SierpX, 2);
        const RatioState next = ratio_step(ratios_from_counts(ledger[2], 512));
        ScopedPrecision guard(512);
        CHECK(fixed_decimals(next.alpha, 16) == "0.8654766520813835");
        CHECK(fixed_decimals(next.beta, 16) == "0.8654766520839932");
        CHECK(fixed_decimals(next.gamma, 16) == "0.8654766520866030");
    }
}

TEST_CASE("float path agrees with exact-integer ratios to working digits minus 5") {
    constexpr unsigned kBits = 512;
    const int working_digits = static_cast<int>(bits_to_digits10(kBits));
    for (auto family : {GraphFamily::Hanoi, GraphFamily::SierpX}) {
        const auto ledger = iterate(family, 12);
        ScopedPrecision guard(kBits);
        const BigFloat tol = pow10_neg(working_digits - 5);
        RatioState s = ratios_from_counts(ledger[1], kBits);
        for (int n = 2; n <= 12; ++n) {
            s = ratio_step(s);
            const RatioState exact = ratios_from_counts(ledger[static_cast<size_t>(n)], kBits);
            CAPTURE(family_name(family));
            CAPTURE(n);
            CHECK(abs(s.alpha - exact.alpha) < tol);
            CHECK(abs(s.beta - exact.beta) < tol);
            CHECK(abs(s.gamma - exact.gamma) < tol);
        }
    }
}

TEST_CASE("float-path epsilon contracts quadratically") {
    // 2048 bits keeps epsilon_8 (~1e-374) far above the rounding floor.
    for (auto family : {GraphFamily::Hanoi, GraphFamily::SierpX}) {
        const auto ledger = iterate(family, 1);
        ScopedPrecision guard(2048);
        RatioState s = ratios_from_counts(ledger[1], 2048);
        for (int n = 1; n <= 7; ++n) {
            const RatioState next = ratio_step(s);
            CHECK(next.epsilon > 0);
            CHECK(next.epsilon < 2 * s.epsilon * s.epsilon);
            CHECK(next.epsilon < s.epsilon);  // width shrinks monotonically
            s = next;
        }
    }
}

TEST_CASE("exact lemma-2 suite holds on the integer ledger up to stage 12") {
    for (auto family : {GraphFamily::Hanoi, GraphFamily::SierpX}) {
        const auto ledger = iterate(family, 12);
        for (int n = 2; n <= 12; ++n) {
            CAPTURE(family_name(family));
            CAPTURE(n);
            CHECK(exact_ordering_ok(ledger[static_cast<size_t>(n)]));
        }
        for (int n = 1; n < 12; ++n) {
            CAPTURE(family_name(family));
            CAPTURE(n);
            CHECK(exact_alpha_increasing(ledger[static_cast<size_t>(n)],
                                         ledger[static_cast<size_t>(n + 1)]));
            CHECK(exact_gamma_decreasing(ledger[static_cast<size_t>(n)],
                                         ledger[static_cast<size_t>(n + 1)]));
            CHECK(exact_contraction_ok(ledger[static_cast<size_t>(n)],
                                       ledger[static_cast<size_t>(n + 1)]));
        }
    }
}

TEST_CASE("ratio fixed point encloses the common limit") {
    SUBCASE("hanoi to 16 digits") {
        const FixedPointResult r = ratio_fixed_point(GraphFamily::Hanoi, 16);
        ScopedPrecision guard(r.precisionBits);
        CHECK(truncated_decimals(r.value, 16) == "0.9176811825212464");
        CHECK(abs(r.value - BigFloat(kLimitHanoi60)) <= r.radius + pow10_neg(55));
        CHECK(r.radius < pow10_neg(16));
    }
    SUBCASE("sierpx to 11 digits") {
        const FixedPointResult r = ratio_fixed_point(GraphFamily::SierpX, 11);
        ScopedPrecision guard(r.precisionBits);
        CHECK(truncated_decimals(r.value, 11) == "0.86547665208");
        CHECK(abs(r.value - BigFloat(kLimitSierpX60)) <= r.radius + pow10_neg(55));
    }
    SUBCASE("one digit is enclosed within the first two stages") {
        const FixedPointResult r = ratio_fixed_point(GraphFamily::Hanoi, 1);
        CHECK(r.stage <= 2);
        ScopedPrecision guard(r.precisionBits);
        CHECK(abs(r.value - BigFloat(kLimitHanoi60)) <= r.radius);
    }
    SUBCASE("deep targets auto-escalate precision") {
        const FixedPointResult r = ratio_fixed_point(GraphFamily::Hanoi, 100);
        ScopedPrecision guard(r.precisionBits);
        CHECK(r.radius < pow10_neg(100));
        const std::string sixty = truncated_decimals(r.value, 60);
        CHECK(sixty == kLimitHanoi60);
    }
    CHECK_THROWS_AS(ratio_fixed_point(GraphFamily::Hanoi, 0), DomainError);
}

TEST_CASE("argmax-free limit restatement") {
    // Once epsilon_n < 1e-16, alpha_n is within 1e-15 of the printed constant.
    const auto ledger = iterate(GraphFamily::Hanoi, 6);
    for (int n = 1; n <= 6; ++n) {
        const RatioState s = ratios_from_counts(ledger[static_cast<size_t>(n)], 256);
        ScopedPrecision guard(256);
        if (s.epsilon < pow10_neg(16))
            CHECK(abs(s.alpha - BigFloat("0.9176811825212464")) < pow10_neg(15));
    }
}

TEST_CASE("count bounds sandwich the exact totals") {
    const auto ledger = iterate(GraphFamily::Hanoi, 10);

    SUBCASE("k = n = 1 against the exact rational endpoints") {
        const CountBounds b = bound_m_hanoi(1, 1, ledger, 512);
        ScopedPrecision guard(512);
        // 18 * (1 + 8/9)^3 = 88434/729 and 18 * (1 + 14/15)^3 = 439002/3375
        CHECK(abs(b.logLower - log(BigFloat(88434) / 729)) < pow10_neg(100));
        CHECK(abs(b.logUpper - log(BigFloat(439002) / 3375)) < pow10_neg(100));
        CHECK(b.logM == log(BigFloat(125)));
        CHECK(b.verified);
    }
    SUBCASE("k = 1, n = 2 encloses 4007754") {
        const CountBounds b = bound_m_hanoi(1, 2, ledger, 512);
        CHECK(b.verified);
        ScopedPrecision guard(512);
        CHECK(b.logM == log(BigFloat(4007754)));
    }
    SUBCASE("middle factor vanishes at k = n") {
        const CountBounds b = bound_m_hanoi(4, 4, ledger, 512);
        const RatioState s = ratios_from_counts(ledger[4], 512);
        ScopedPrecision guard(512);
        const BigFloat direct = log(to_float(ledger[4].counts.x)) + 3 * log(1 + s.alpha);
        CHECK(abs(b.logLower - direct) < pow10_neg(140));
        CHECK(b.verified);
    }
    SUBCASE("full grid 1 <= k <= n <= 10 at high precision") {
        for (int n = 1; n <= 10; ++n)
            for (int k = 1; k <= n; ++k) {
                const CountBounds b = bound_m_hanoi(k, n, ledger, 8192);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(b.verified);
            }
    }
    SUBCASE("grid up to the exact cap") {
        // The tightest margin, k = n = 12, is ~1e-5968 (epsilon contracts
        // quadratically); 24576 bits (~7400 digits) resolve its sign.
        const auto full = iterate(GraphFamily::Hanoi, 12);
        for (int n = 11; n <= 12; ++n)
            for (int k = 1; k <= n; ++k) {
                const CountBounds b = bound_m_hanoi(k, n, full, 24576);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(b.verified);
            }
    }
    SUBCASE("k > n is rejected") {
        CHECK_THROWS_AS(bound_m_hanoi(3, 2, ledger, 256), DomainError);
        CHECK_THROWS_AS(bound_m_hanoi(0, 2, ledger, 256), DomainError);
    }
}

TEST_CASE("entropy bounds match their stated formulas at k = 1") {
    SUBCASE("hanoi") {
        const auto ledger = iterate(GraphFamily::Hanoi, 1);
        const EntropyBounds b = entropy_bounds(GraphFamily::Hanoi, 1, ledger, 512);
        ScopedPrecision guard(512);
        const BigFloat lower = log(BigFloat(18)) / 9 + log(BigFloat(370) / 81) / 6;
        const BigFloat upper = log(BigFloat(18)) / 9 + log(BigFloat(1217) / 256) / 6;
        CHECK(abs(b.lower - lower) < pow10_neg(140));
        CHECK(abs(b.upper - upper) < pow10_neg(140));
        CHECK(truncated_decimals(b.lower, 4) == "0.5743");
        CHECK(truncated_decimals(b.upper, 4) == "0.5809");  // 0.58098...
        CHECK(b.lower < BigFloat(kMuHanoi120));
        CHECK(BigFloat(kMuHanoi120) < b.upper);
    }
    SUBCASE("sierpx") {
        const auto ledger = iterate(GraphFamily::SierpX, 1);
        const EntropyBounds b = entropy_bounds(GraphFamily::SierpX, 1, ledger, 512);
        ScopedPrecision guard(512);
        const BigFloat a = BigFloat(56) / 66, bt = BigFloat(49) / 56;
        const BigFloat lower =
            (2 * log(BigFloat(66)) + log(a * a + 8 * a + 8) + 2 * log(a * a + 2 * a + 2)) / 21;
        const BigFloat upper =
            (2 * log(BigFloat(66)) + log(bt * bt + 8 * bt + 8) + 2 * log(bt * bt + 2 * bt + 2)) /
            21;
        CHECK(abs(b.lower - lower) < pow10_neg(140));
        CHECK(abs(b.upper - upper) < pow10_neg(140));
        CHECK(truncated_decimals(b.lower, 5) == "0.67102");  // 0.671028...
        CHECK(truncated_decimals(b.upper, 5) == "0.67391");  // 0.673915...
        CHECK(b.lower < BigFloat(kMuSierpX120));
        CHECK(BigFloat(kMuSierpX120) < b.upper);
    }
}

TEST_CASE("bound intervals nest as k grows") {
    for (auto family : {GraphFamily::Hanoi, GraphFamily::SierpX}) {
        const auto ledger = iterate(family, 8);
        EntropyBounds prev = entropy_bounds(family, 1, ledger, 2048);
        for (int k = 2; k <= 7; ++k) {
            const EntropyBounds cur = entropy_bounds(family, k, ledger, 2048);
            CAPTURE(family_name(family));
            CAPTURE(k);
            ScopedPrecision guard(2048);
            CHECK(cur.lower > prev.lower);
            CHECK(cur.upper < prev.upper);
            CHECK(cur.lower < cur.upper);
            prev = cur;
        }
    }
}

TEST_CASE("hundred-digit agreement at the stages where the gap collapses") {
    const auto hanoi = iterate(GraphFamily::Hanoi, 7);
    const EntropyBounds bh = entropy_bounds(GraphFamily::Hanoi, 7, hanoi, 1024);
    CHECK(bh.agreedDigits >= 100);
    {
        ScopedPrecision guard(1024);
        CHECK(bh.upper - bh.lower < pow10_neg(100));
    }
    const auto sierpx = iterate(GraphFamily::SierpX, 6);
    const EntropyBounds bx = entropy_bounds(GraphFamily::SierpX, 6, sierpx, 1024);
    CHECK(bx.agreedDigits >= 100);
    {
        ScopedPrecision guard(1024);
        CHECK(bx.upper - bx.lower < pow10_neg(100));
    }
}

TEST_CASE("doubling the precision moves bounds by less than a reported digit") {
    for (auto family : {GraphFamily::Hanoi, GraphFamily::SierpX}) {
        const auto ledger = iterate(family, 5);
        for (int k = 2; k <= 5; ++k) {
            const EntropyBounds lo = entropy_bounds(family, k, ledger, 512);
            const EntropyBounds hi = entropy_bounds(family, k, ledger, 1024);
            ScopedPrecision guard(1024);
            CAPTURE(family_name(family));
            CAPTURE(k);
            CHECK(truncated_decimals(lo.lower, lo.agreedDigits) ==
                  truncated_decimals(hi.lower, lo.agreedDigits));
            CHECK(truncated_decimals(lo.upper, lo.agreedDigits) ==
                  truncated_decimals(hi.upper, lo.agreedDigits));
        }
    }
}

TEST_CASE("insufficient precision is reported, not silently absorbed") {
    const auto ledger = iterate(GraphFamily::Hanoi, 7);
    // At k=7 the gap is ~1e-189, far below what 128 bits can separate.
    CHECK_THROWS_AS(entropy_bounds(GraphFamily::Hanoi, 7, ledger, 128), PrecisionError);
}

TEST_CASE("entropy estimates reproduce the certified constants") {
    SUBCASE("hanoi to 19 digits") {
        const EntropyEstimate e = entropy(GraphFamily::Hanoi, 19);
        CHECK(e.digitsString == "0.5764643016505283752");
        CHECK(e.digits == 19);
        CHECK(e.k <= 5);
        ScopedPrecision guard(e.precisionBits);
        CHECK(truncated_decimals(e.muPerEdge, 19) == "0.3843095344336855835");
        const BigFloat ratio = e.muPerEdge / e.muPerVertex;
        CHECK(abs(ratio - BigFloat(2) / 3) < pow10_neg(30));
    }
    SUBCASE("sierpx to 16 digits") {
        const EntropyEstimate e = entropy(GraphFamily::SierpX, 16);
        CHECK(e.digitsString == "0.6719549820008285");
        ScopedPrecision guard(e.precisionBits);
        CHECK(truncated_decimals(e.muPerEdge, 16) == "0.3135789916003866");
        const BigFloat ratio = e.muPerEdge / e.muPerVertex;
        CHECK(abs(ratio - BigFloat(7) / 15) < pow10_neg(30));
    }
    SUBCASE("one hundred digits at the documented stages") {
        const EntropyEstimate eh = entropy(GraphFamily::Hanoi, 100);
        CHECK(eh.digitsString == std::string(kMuHanoi120).substr(0, 102));
        CHECK(eh.k == 7);
        const EntropyEstimate ex = entropy(GraphFamily::SierpX, 100);
        CHECK(ex.digitsString == std::string(kMuSierpX120).substr(0, 102));
        CHECK(ex.k == 6);
    }
    SUBCASE("digit guard ceiling") {
        const EntropyEstimate eh = entropy(GraphFamily::Hanoi, kMaxEntropyDigits);
        CHECK(eh.digitsString == std::string(kMuHanoi120).substr(0, kMaxEntropyDigits + 2));
        const EntropyEstimate ex = entropy(GraphFamily::SierpX, kMaxEntropyDigits);
        CHECK(ex.digitsString == std::string(kMuSierpX120).substr(0, kMaxEntropyDigits + 2));
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(entropy(GraphFamily::Hanoi, kMaxEntropyDigits + 1), ResourceLimitError);
        CHECK_THROWS_AS(entropy(GraphFamily::Hanoi, 0), DomainError);
    }
}

TEST_CASE("incremental log accumulator tracks the direct logs") {
    for (auto family : {GraphFamily::Hanoi, GraphFamily::SierpX}) {
        const auto ledger = iterate(family, 8);
        for (int k = 1; k <= 8; ++k) {
            const BigFloat acc = accumulated_log_x(ledger, k, 512);
            ScopedPrecision guard(512);
            const BigFloat direct = log(to_float(ledger[static_cast<size_t>(k)].counts.x));
            CAPTURE(family_name(family));
            CAPTURE(k);
            // relative agreement; the accumulator compounds a few ulps per stage
            CHECK(abs(acc - direct) < abs(direct) * pow10_neg(140));
        }
    }
}
