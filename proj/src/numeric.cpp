#include <dimercount/numeric.hpp>

#include <dimercount/errors.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

namespace dimercount {

unsigned default_precision_bits() {
    static const unsigned bits = [] {
        if (const char* env = std::getenv("DIMERCOUNT_PRECISION_BITS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 64 && v <= static_cast<long>(kMaxPrecisionBits)) return static_cast<unsigned>(v);
        }
        return kDefaultPrecisionBits;
    }();
    return bits;
}

unsigned bits_to_digits10(unsigned bits) {
    return std::max(8u, static_cast<unsigned>(bits * 0.3010299956639812));
}

ScopedPrecision::ScopedPrecision(unsigned bits) : saved_digits10_(BigFloat::default_precision()) {
    if (bits < 8 || bits > kMaxPrecisionBits)
        throw DomainError("precision bits out of range: " + std::to_string(bits));
    BigFloat::default_precision(bits_to_digits10(bits));
}

ScopedPrecision::~ScopedPrecision() { BigFloat::default_precision(saved_digits10_); }

BigFloat to_float(const BigInt& v) { return BigFloat(v); }

namespace {

// Significant digits of |v| via mpfr, with explicit rounding mode.
// Returns the digit string and the decimal exponent (position of the point).
std::string raw_digits(const BigFloat& v, int count, mpfr_rnd_t rnd, mpfr_exp_t& exp10) {
    char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(count),
                           v.backend().data(), rnd);
    if (!s) throw Error("mpfr_get_str failed");
    std::string out(s);
    mpfr_free_str(s);
    if (!out.empty() && out[0] == '-') out.erase(0, 1);
    return out;
}

}  // namespace

std::string truncated_decimals(const BigFloat& v, int digits) {
    if (v < 0 || v >= 10) throw DomainError("truncated_decimals expects a value in [0, 10)");
    if (digits < 0) throw DomainError("digit count must be nonnegative");
    if (v == 0) return "0." + std::string(static_cast<size_t>(digits), '0');
    mpfr_exp_t exp10 = 0;
    // exponent <= 1 here, so `digits + 1` significant digits always cover
    // the integer digit plus `digits` fractional ones (mpfr_get_str wants
    // at least 2).
    std::string d = raw_digits(v, std::max(digits + 1, 2), MPFR_RNDZ, exp10);
    std::string out;
    if (exp10 <= 0) {
        out = "0.";
        out.append(static_cast<size_t>(-exp10), '0');
        out += d;
        out.resize(static_cast<size_t>(digits) + 2, '0');
    } else {
        out = d.substr(0, 1);
        out += ".";
        out += d.substr(1);
        out.resize(static_cast<size_t>(digits) + 2, '0');
    }
    if (digits == 0) out.pop_back();  // drop the '.' for integer-only output
    return out;
}

std::string fixed_decimals(const BigFloat& v, int places) {
    if (places < 0) throw DomainError("places must be nonnegative");
    return v.str(places, std::ios_base::fixed);
}

int common_prefix_digits(const BigFloat& lo, const BigFloat& hi, int max_digits) {
    if (!(lo <= hi)) throw DomainError("common_prefix_digits expects lo <= hi");
    const std::string a = truncated_decimals(lo, max_digits);
    const std::string b = truncated_decimals(hi, max_digits);
    if (a[0] != b[0]) return 0;
    int n = 0;
    for (size_t i = 2; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) break;
        ++n;
    }
    return n;
}

}  // namespace dimercount
