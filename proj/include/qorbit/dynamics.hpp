#pragma once

// The divide-or-choose-2 rule Q and its additive relatives F and T, with
// bounded iteration and exact cycle detection.
//
//   Q(n) = n/2 (n even),  n(n-1)/2 (n odd)
//   F(n) = n/2 (n even),  (3n-1)/2 (n odd)
//   T(n) = n/2 (n even),  (3n+1)/2 (n odd)
//
// F and T are simulated on the non-negative integers as written.

#include <cstddef>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qorbit/arith.hpp"

namespace qorbit {

enum class MapRule { Q, F, T };

inline std::string_view rule_name(MapRule r) {
  switch (r) {
    case MapRule::Q: return "q";
    case MapRule::F: return "f";
    case MapRule::T: return "t";
  }
  return "?";
}

inline std::optional<MapRule> parse_rule(std::string_view s) {
  if (s == "q" || s == "Q") return MapRule::Q;
  if (s == "f" || s == "F") return MapRule::F;
  if (s == "t" || s == "T") return MapRule::T;
  return std::nullopt;
}

inline constexpr std::size_t kDefaultMaxSteps = 10'000;
inline constexpr Exponent kDefaultMaxBits = 1'048'576;

struct IterLimits {
  std::size_t max_steps = kDefaultMaxSteps;
  Exponent max_bits = kDefaultMaxBits;

  IterLimits() = default;
  IterLimits(std::size_t steps, Exponent bits) : max_steps(steps), max_bits(bits) {
    if (steps == 0 || bits == 0) throw DomainError("iteration limits must be positive");
  }
};

/// Writes step(rule, n) into out. out may alias n.
inline void step_into(MapRule rule, const Nat& n, Nat& out) {
  mpz_srcptr src = n.get_mpz_t();
  mpz_ptr dst = out.get_mpz_t();
  if (mpz_even_p(src)) {
    mpz_tdiv_q_2exp(dst, src, 1);
    return;
  }
  switch (rule) {
    case MapRule::Q: {
      // n odd, so (n-1)/2 is exact.
      Nat half;
      mpz_sub_ui(half.get_mpz_t(), src, 1);
      mpz_tdiv_q_2exp(half.get_mpz_t(), half.get_mpz_t(), 1);
      mpz_mul(dst, src, half.get_mpz_t());
      return;
    }
    case MapRule::F:
      mpz_mul_ui(dst, src, 3);
      mpz_sub_ui(dst, dst, 1);
      mpz_tdiv_q_2exp(dst, dst, 1);
      return;
    case MapRule::T:
      mpz_mul_ui(dst, src, 3);
      mpz_add_ui(dst, dst, 1);
      mpz_tdiv_q_2exp(dst, dst, 1);
      return;
  }
}

inline Nat step(MapRule rule, const Nat& n) {
  Nat out;
  step_into(rule, n, out);
  return out;
}

struct CycleFound {
  std::size_t entry_index = 0;
  std::size_t period = 0;
  friend bool operator==(const CycleFound&, const CycleFound&) = default;
};

enum class LimitReason { Steps, Bits };

inline std::string_view reason_name(LimitReason r) { return r == LimitReason::Steps ? "steps" : "bits"; }

struct LimitExceeded {
  LimitReason reason = LimitReason::Steps;
  friend bool operator==(const LimitExceeded&, const LimitExceeded&) = default;
};

using OrbitStatus = std::variant<CycleFound, LimitExceeded>;

struct Orbit {
  MapRule rule = MapRule::Q;
  Nat seed;
  /// values[0] == seed. On CycleFound the last entry repeats values[entry_index].
  std::vector<Nat> values;
  OrbitStatus status;

  bool cycled() const { return std::holds_alternative<CycleFound>(status); }
  const CycleFound* cycle() const { return std::get_if<CycleFound>(&status); }
  const LimitExceeded* limit() const { return std::get_if<LimitExceeded>(&status); }
};

/// Iterates rule from seed until a value repeats or a limit is hit.
///
/// A value whose bit length exceeds max_bits is never recorded. The first
/// repeat closes the cycle, so entry_index is minimal and period exact.
/// LimitExceeded carries no claim about the orbit's long-run behaviour.
inline Orbit iterate(MapRule rule, const Nat& seed, const IterLimits& limits = {}) {
  Orbit orbit{rule, seed, {}, LimitExceeded{LimitReason::Bits}};
  if (bit_length(seed) > limits.max_bits) {
    orbit.values.push_back(seed);
    return orbit;
  }

  std::unordered_map<Nat, std::size_t, NatHash> seen;
  orbit.values.push_back(seed);
  seen.emplace(seed, 0);

  Nat next;
  for (std::size_t steps = 1; steps <= limits.max_steps; ++steps) {
    step_into(rule, orbit.values.back(), next);
    if (auto it = seen.find(next); it != seen.end()) {
      const std::size_t entry = it->second;
      orbit.values.push_back(next);
      orbit.status = CycleFound{entry, steps - entry};
      return orbit;
    }
    if (bit_length(next) > limits.max_bits) {
      orbit.status = LimitExceeded{LimitReason::Bits};
      return orbit;
    }
    seen.emplace(next, steps);
    orbit.values.push_back(next);
  }
  orbit.status = LimitExceeded{LimitReason::Steps};
  return orbit;
}

/// Result of walking Q from one odd value to the next with plain steps.
struct NaiveOddAdvance {
  Nat odd_out;
  std::size_t steps = 0;
  std::size_t multiplications = 0;
};

/// Applies Q once to odd o >= 3, then keeps stepping until the value is odd.
/// Returns nullopt if any intermediate value exceeds max_bits.
inline std::optional<NaiveOddAdvance> advance_odd_naive(const Nat& o, Exponent max_bits = kDefaultMaxBits) {
  if (o < 3 || is_even(o)) throw DomainError("advance_odd_naive: argument must be odd and >= 3");
  NaiveOddAdvance r;
  r.odd_out = o;
  do {
    if (is_odd(r.odd_out)) ++r.multiplications;
    step_into(MapRule::Q, r.odd_out, r.odd_out);
    ++r.steps;
    if (bit_length(r.odd_out) > max_bits) return std::nullopt;
  } while (is_even(r.odd_out));
  return r;
}

}  // namespace qorbit
