#pragma once

// Closed-form orbit theory for Q.
//
// Every seed x0 >= 1 factors as 2^l * o with o odd. The orbit then halves
// down to o and from there only three things can happen:
//
//   o == 1        -> 1 -> 0, the fixed point 0
//   o == 2^m + 1  -> the m-cycle o, 2^(m-1) o, ..., 2 o
//   otherwise     -> o = 2^j k + 1 with k >= 3, and each odd value is followed
//                    j steps later by k times itself, with k >= 3 again. The
//                    odd sub-orbit grows at least threefold per odd step.
//
// The last case relies on k(2^j k + 1) never being of the form 2^m + 1 for
// odd k >= 3. lemma2_scan falsification-tests that on finite grids, and any
// multiplier k == 1 seen while certifying divergence raises TheoremViolation.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qorbit/arith.hpp"
#include "qorbit/dynamics.hpp"
#include "qorbit/parallel.hpp"

namespace qorbit {

/// A computation contradicted a proven statement about Q. Never expected.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bit-length cap was reached before the requested work finished.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t completed)
      : std::runtime_error(what), completed_(completed) {}
  std::size_t completed() const noexcept { return completed_; }

 private:
  std::size_t completed_;
};

// ---------------------------------------------------------------------------
// Classification

struct FallsToZero {
  std::size_t transient_steps = 0;
  friend bool operator==(const FallsToZero&, const FallsToZero&) = default;
};

struct EventuallyPeriodic {
  Exponent m = 1;
  /// Steps before the first value that lies on the cycle.
  Exponent transient_steps = 0;
  /// Steps until the orbit hits the anchor 2^m + 1 (the seed's l).
  Exponent steps_to_anchor = 0;
  Nat anchor{3};
  friend bool operator==(const EventuallyPeriodic&, const EventuallyPeriodic&) = default;
};

struct Divergent {
  Exponent j0 = 1;
  Nat k0{3};
  friend bool operator==(const Divergent&, const Divergent&) = default;
};

using OrbitClass = std::variant<FallsToZero, EventuallyPeriodic, Divergent>;

inline bool is_divergent(const OrbitClass& c) { return std::holds_alternative<Divergent>(c); }

inline OrbitClass classify(const Nat& seed) {
  if (sgn(seed) == 0) return FallsToZero{0};
  auto [l, odd] = two_adic_split(seed);
  if (odd == 1) return FallsToZero{static_cast<std::size_t>(l) + 1};
  if (auto m = pow2_plus1_form(odd)) {
    const Exponent transient = l >= *m ? l - (*m - 1) : 0;
    return EventuallyPeriodic{*m, transient, l, std::move(odd)};
  }
  auto [j, k] = odd_shift_split(odd);
  return Divergent{j, std::move(k)};
}

// ---------------------------------------------------------------------------
// Explicit cycles

/// The m-cycle 2^m+1 -> 2^(m-1)(2^m+1) -> ... -> 2(2^m+1), in orbit order.
inline std::vector<Nat> cycle_for(Exponent m) {
  if (m == 0) throw DomainError("cycle_for: period must be >= 1");
  const Nat anchor = pow2(m) + 1;
  std::vector<Nat> cycle;
  cycle.reserve(m);
  cycle.push_back(anchor);
  for (Exponent e = m - 1; e >= 1; --e) {
    Nat v;
    mpz_mul_2exp(v.get_mpz_t(), anchor.get_mpz_t(), e);
    cycle.push_back(std::move(v));
  }
  return cycle;
}

// ---------------------------------------------------------------------------
// Odd fast-forward

struct OddStep {
  Nat odd_in;
  Exponent j = 1;
  Nat k;
  Nat odd_out;
  friend bool operator==(const OddStep&, const OddStep&) = default;
};

/// From odd o = 2^j k + 1, Q reaches k*o after exactly j steps: one odd step
/// to 2^(j-1) k o, then j-1 halvings. One multiplication replaces j steps.
inline OddStep next_odd(const Nat& o) {
  auto [j, k] = odd_shift_split(o);
  Nat out = k * o;
  return OddStep{o, j, std::move(k), std::move(out)};
}

// ---------------------------------------------------------------------------
// Divergence certificates

struct DivergenceCertificate {
  Nat seed;
  Exponent lead_in_steps = 0;
  Nat odd0;
  std::vector<OddStep> steps;
  bool growth_ok = false;

  /// 3^n * odd0 for n recorded steps.
  Nat growth_bound() const {
    Nat p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, steps.size());
    return p * odd0;
  }
};

inline DivergenceCertificate certify_divergence(const Nat& seed, std::size_t n_odd_steps,
                                                Exponent bit_cap = kDefaultMaxBits) {
  if (n_odd_steps == 0) throw DomainError("certify_divergence: need at least one odd step");
  if (!is_divergent(classify(seed))) {
    throw DomainError("certify_divergence: seed " + to_decimal(seed) + " does not have a divergent orbit");
  }
  auto [l, odd] = two_adic_split(seed);
  DivergenceCertificate cert{seed, l, odd, {}, false};
  cert.steps.reserve(n_odd_steps);

  bool growth = true;
  Nat current = cert.odd0;
  for (std::size_t i = 0; i < n_odd_steps; ++i) {
    OddStep s = next_odd(current);
    if (s.k == 1) {
      throw TheoremViolation("odd value " + to_decimal(current) + " = 2^" + std::to_string(s.j) +
                             " + 1 reached from a divergent seed after " + std::to_string(i) + " odd steps");
    }
    if (bit_length(s.odd_out) > bit_cap) {
      throw ResourceError("bit cap of " + std::to_string(bit_cap) + " exceeded after " + std::to_string(i) +
                              " completed odd steps",
                          i);
    }
    growth = growth && s.k >= 3 && s.odd_out >= 3 * s.odd_in;
    current = s.odd_out;
    cert.steps.push_back(std::move(s));
  }
  cert.growth_ok = growth && current >= cert.growth_bound();
  return cert;
}

// ---------------------------------------------------------------------------
// Exhaustive search for k(2^j k + 1) = 2^m + 1, i.e. 2^j k^2 + k - 1 = 2^m

struct InclusiveRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const InclusiveRange&, const InclusiveRange&) = default;
};

struct Lemma2Solution {
  Exponent j = 0;
  Nat k;
  Exponent m = 0;
  friend bool operator==(const Lemma2Solution&, const Lemma2Solution&) = default;
};

struct Lemma2Report {
  InclusiveRange j_range;
  InclusiveRange k_range;
  std::uint64_t pairs_checked = 0;
  std::vector<Lemma2Solution> solutions;
  friend bool operator==(const Lemma2Report&, const Lemma2Report&) = default;
};

/// Checks every j in j_range against every odd k >= 3 in k_range. For fixed
/// (j, k) the exponent m is determined, so only the power-of-two test runs.
inline Lemma2Report lemma2_scan(InclusiveRange j_range, InclusiveRange k_range, unsigned workers = 1) {
  if (j_range.lo < 1 || j_range.lo > j_range.hi) throw DomainError("lemma2_scan: j range must be non-empty with j >= 1");
  std::uint64_t k_first = std::max<std::uint64_t>(k_range.lo, 3);
  if (k_first % 2 == 0) ++k_first;
  if (k_range.hi < k_first) throw DomainError("lemma2_scan: k range contains no odd k >= 3");
  const std::uint64_t k_count = (k_range.hi - k_first) / 2 + 1;

  auto chunk_results = map_chunks(k_count, workers, [&](IndexChunk c) {
    std::vector<Lemma2Solution> found;
    Nat k, k_sq, s;
    for (std::uint64_t i = c.begin; i < c.end; ++i) {
      const std::uint64_t kv = k_first + 2 * i;
      mpz_set_ui(k.get_mpz_t(), kv);
      mpz_mul(k_sq.get_mpz_t(), k.get_mpz_t(), k.get_mpz_t());
      for (std::uint64_t j = j_range.lo; j <= j_range.hi; ++j) {
        mpz_mul_2exp(s.get_mpz_t(), k_sq.get_mpz_t(), j);
        mpz_add_ui(s.get_mpz_t(), s.get_mpz_t(), kv - 1);
        if (auto m = is_power_of_two(s)) found.push_back({j, k, *m});
      }
    }
    return found;
  });

  Lemma2Report report{j_range, k_range, k_count * (j_range.hi - j_range.lo + 1), {}};
  for (auto& part : chunk_results) {
    report.solutions.insert(report.solutions.end(), part.begin(), part.end());
  }
  std::sort(report.solutions.begin(), report.solutions.end(),
            [](const Lemma2Solution& a, const Lemma2Solution& b) {
              return a.j != b.j ? a.j < b.j : a.k < b.k;
            });
  return report;
}

// ---------------------------------------------------------------------------
// Census of non-divergent seeds

struct Census {
  std::uint64_t count = 0;
  std::optional<std::vector<Nat>> seeds;
};

/// Counts seeds in [0, n] whose orbits stay bounded: 0, the powers 2^l, and
/// the values 2^l (2^m + 1). Distinct odd parts make the enumeration
/// duplicate-free.
inline Census periodic_seed_census(const Nat& n, bool with_seeds = false) {
  if (n < 1) throw DomainError("periodic_seed_census: bound must be >= 1");
  Census census;
  std::vector<Nat> seeds;
  auto emit = [&](const Nat& v) {
    ++census.count;
    if (with_seeds) seeds.push_back(v);
  };
  auto emit_chain = [&](Nat v) {
    for (; v <= n; v <<= 1) emit(v);
  };

  emit(Nat{0});
  emit_chain(Nat{1});
  for (Exponent m = 1;; ++m) {
    Nat base = pow2(m) + 1;
    if (base > n) break;
    emit_chain(std::move(base));
  }
  if (with_seeds) {
    std::sort(seeds.begin(), seeds.end());
    census.seeds = std::move(seeds);
  }
  return census;
}

}  // namespace qorbit
