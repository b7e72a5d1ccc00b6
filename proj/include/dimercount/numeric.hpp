#ifndef DIMERCOUNT_NUMERIC_HPP
#define DIMERCOUNT_NUMERIC_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace dimercount {

using BigInt = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 512;
inline constexpr unsigned kMaxPrecisionBits = 1u << 20;

// Default precision override (DIMERCOUNT_PRECISION_BITS), falling back to 512.
unsigned default_precision_bits();

unsigned bits_to_digits10(unsigned bits);

// mpfr_float temporaries pick up the thread default precision, so every
// computation runs under a scope guard rather than per-variable settings.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned bits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_digits10_;
};

// Exact integer -> float at the current default precision.
BigFloat to_float(const BigInt& v);

// Decimal expansion of |v| truncated toward zero after `digits` fractional
// digits, as "d.ffff". Requires 0 <= v < 10.
std::string truncated_decimals(const BigFloat& v, int digits);

// Round-to-nearest fixed-point rendering with `places` fractional digits,
// trailing zeros kept ("0.8654807362437070").
std::string fixed_decimals(const BigFloat& v, int places);

// Number of leading fractional digits shared by the truncated expansions of
// lo and hi. Both must lie in [0, 10) with the same integer digit; otherwise 0.
int common_prefix_digits(const BigFloat& lo, const BigFloat& hi, int max_digits);

}  // namespace dimercount

#endif
