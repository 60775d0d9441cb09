#pragma once

// Exact integer decompositions used throughout the orbit machinery.
//
// Every orbit value is a Nat: an arbitrary-precision non-negative integer
// backed by GMP. The decompositions below are the two views of a value the
// rest of the library needs:
//
//   n      = 2^l * odd          (TwoAdicSplit, any n >= 1)
//   n      = 2^j * k + 1        (OddShiftSplit, odd n >= 3, k odd)

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qorbit {

using Nat = mpz_class;

/// Exponents and bit counts. Bounded by bit lengths, hence machine-sized.
using Exponent = std::uint64_t;

/// Raised when an operation is called outside its precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Nat pow2(Exponent e) {
  Nat r;
  mpz_setbit(r.get_mpz_t(), e);
  return r;
}

inline bool is_odd(const Nat& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
inline bool is_even(const Nat& n) { return !is_odd(n); }

/// Number of significant bits; bit_length(0) == 0.
inline Exponent bit_length(const Nat& n) {
  if (sgn(n) == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline std::string to_decimal(const Nat& n) { return n.get_str(10); }

/// Parses a non-negative decimal integer. Signs, whitespace and empty input
/// are rejected.
inline Nat parse_nat(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError("not a non-negative decimal integer: '" + std::string(text) + "'");
    }
  }
  return Nat(std::string(text), 10);
}

/// 2-adic valuation: the largest t with 2^t dividing n. Undefined for 0.
inline Exponent v2(const Nat& n) {
  if (sgn(n) <= 0) throw DomainError("v2: argument must be >= 1");
  return mpz_scan1(n.get_mpz_t(), 0);
}

struct TwoAdicSplit {
  Exponent l = 0;
  Nat odd{1};

  Nat value() const {
    Nat r;
    mpz_mul_2exp(r.get_mpz_t(), odd.get_mpz_t(), l);
    return r;
  }

  friend bool operator==(const TwoAdicSplit&, const TwoAdicSplit&) = default;
};

inline TwoAdicSplit two_adic_split(const Nat& n) {
  TwoAdicSplit s;
  s.l = v2(n);
  mpz_tdiv_q_2exp(s.odd.get_mpz_t(), n.get_mpz_t(), s.l);
  return s;
}

struct OddShiftSplit {
  Exponent j = 1;
  Nat k{1};

  Nat value() const {
    Nat r;
    mpz_mul_2exp(r.get_mpz_t(), k.get_mpz_t(), j);
    return r + 1;
  }

  friend bool operator==(const OddShiftSplit&, const OddShiftSplit&) = default;
};

/// Writes an odd n >= 3 as 2^j * k + 1 with k odd.
inline OddShiftSplit odd_shift_split(const Nat& n) {
  if (n < 3 || is_even(n)) throw DomainError("odd_shift_split: argument must be odd and >= 3");
  auto s = two_adic_split(n - 1);
  return OddShiftSplit{s.l, std::move(s.odd)};
}

/// t such that n == 2^t, if any. Linear in the limb count of n.
inline std::optional<Exponent> is_power_of_two(const Nat& n) {
  if (sgn(n) <= 0) return std::nullopt;
  if (mpz_popcount(n.get_mpz_t()) != 1) return std::nullopt;
  return mpz_scan1(n.get_mpz_t(), 0);
}

/// m >= 1 such that n == 2^m + 1, if any.
inline std::optional<Exponent> pow2_plus1_form(const Nat& n) {
  if (n < 3 || is_even(n)) return std::nullopt;
  return is_power_of_two(n - 1);
}

struct NatHash {
  std::size_t operator()(const Nat& n) const noexcept {
    const mpz_srcptr z = n.get_mpz_t();
    const std::size_t limbs = mpz_size(z);
    std::size_t h = limbs * 0x9e3779b97f4a7c15ULL;
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace qorbit
