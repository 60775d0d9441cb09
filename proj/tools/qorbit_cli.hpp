#pragma once

// Command-line front end for the qorbit library.
//
// Exit codes: 0 success, 1 usage, 2 resource or iteration limit,
// 3 theorem violation or engine mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qorbit/qorbit.hpp"

namespace qorbit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kLimit = 2, kViolation = 3 };

enum class OutputFormat { Text, JsonLines, Csv };

using Json = nlohmann::ordered_json;
using EnvLookup = std::function<std::optional<std::string>(const char*)>;

inline std::optional<std::string> process_env(const char* name) {
  if (const char* v = std::getenv(name)) return std::string(v);
  return std::nullopt;
}

inline constexpr std::size_t kAbbreviateDigits = 64;

/// Decimal form, or "⟨B bits⟩" when longer than 64 digits.
inline std::string text_nat(const Nat& n) {
  std::string s = to_decimal(n);
  if (s.size() <= kAbbreviateDigits) return s;
  return "⟨" + std::to_string(bit_length(n)) + " bits⟩";
}

// ---------------------------------------------------------------------------
// ScanRow

struct ScanRow {
  Nat seed;
  std::string class_tag;
  std::optional<Exponent> m;
  std::optional<std::uint64_t> transient;
  std::optional<Exponent> steps_to_anchor;
  std::optional<Exponent> j0;
  std::optional<Nat> k0;
};

inline ScanRow make_row(const Nat& seed) {
  ScanRow row{seed, {}, {}, {}, {}, {}, {}};
  std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, FallsToZero>) {
          row.class_tag = "zero";
          row.transient = c.transient_steps;
        } else if constexpr (std::is_same_v<C, EventuallyPeriodic>) {
          row.class_tag = "periodic";
          row.m = c.m;
          row.transient = c.transient_steps;
          row.steps_to_anchor = c.steps_to_anchor;
        } else {
          row.class_tag = "divergent";
          row.j0 = c.j0;
          row.k0 = c.k0;
        }
      },
      classify(seed));
  return row;
}

inline constexpr const char* kScanCsvHeader = "seed,class,m,transient,j0,k0";

inline void render_row(std::ostream& out, const ScanRow& r, OutputFormat fmt) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  switch (fmt) {
    case OutputFormat::Text:
      out << to_decimal(r.seed) << ": " << r.class_tag;
      if (r.m) out << " m=" << *r.m;
      if (r.transient) out << " transient=" << *r.transient;
      if (r.steps_to_anchor) out << " steps_to_anchor=" << *r.steps_to_anchor;
      if (r.j0) out << " j0=" << *r.j0;
      if (r.k0) out << " k0=" << text_nat(*r.k0);
      out << '\n';
      break;
    case OutputFormat::JsonLines: {
      Json j;
      j["seed"] = to_decimal(r.seed);
      j["class"] = r.class_tag;
      if (r.m) j["m"] = *r.m;
      if (r.transient) j["transient"] = *r.transient;
      if (r.steps_to_anchor) j["steps_to_anchor"] = *r.steps_to_anchor;
      if (r.j0) j["j0"] = *r.j0;
      if (r.k0) j["k0"] = to_decimal(*r.k0);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << to_decimal(r.seed) << ',' << r.class_tag << ',' << opt(r.m) << ',' << opt(r.transient) << ','
          << opt(r.j0) << ',' << (r.k0 ? to_decimal(*r.k0) : std::string()) << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// Orbit rendering

inline Json orbit_json(const Orbit& o) {
  Json j;
  j["seed"] = to_decimal(o.seed);
  j["rule"] = std::string(rule_name(o.rule));
  Json values = Json::array();
  for (const auto& v : o.values) values.push_back(to_decimal(v));
  j["values"] = std::move(values);
  Json status;
  if (const auto* c = o.cycle()) {
    status["kind"] = "cycle";
    status["entry_index"] = c->entry_index;
    status["period"] = c->period;
  } else {
    status["kind"] = "limit";
    status["reason"] = std::string(reason_name(o.limit()->reason));
  }
  j["status"] = std::move(status);
  return j;
}

inline void render_orbit(std::ostream& out, const Orbit& o, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text:
      out << "orbit of " << text_nat(o.seed) << " under " << rule_name(o.rule) << '\n';
      for (std::size_t i = 0; i < o.values.size(); ++i) out << i << "  " << text_nat(o.values[i]) << '\n';
      if (const auto* c = o.cycle()) {
        out << "cycle: entry_index=" << c->entry_index << " period=" << c->period << '\n';
      } else {
        out << "limit exceeded: " << reason_name(o.limit()->reason) << " after " << o.values.size() - 1
            << " steps\n";
      }
      break;
    case OutputFormat::JsonLines:
      out << orbit_json(o).dump() << '\n';
      break;
    case OutputFormat::Csv:
      out << "index,value\n";
      for (std::size_t i = 0; i < o.values.size(); ++i) out << i << ',' << to_decimal(o.values[i]) << '\n';
      if (const auto* c = o.cycle()) {
        out << "status,cycle entry_index=" << c->entry_index << " period=" << c->period << '\n';
      } else {
        out << "status,limit reason=" << reason_name(o.limit()->reason) << '\n';
      }
      break;
  }
}

// ---------------------------------------------------------------------------
// Argument helpers

struct Range {
  Nat lo;
  Nat hi;
};

inline Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    Nat v = parse_nat(text);
    return {v, v};
  }
  Range r{parse_nat(text.substr(0, dots)), parse_nat(text.substr(dots + 2))};
  if (r.lo > r.hi) throw DomainError("empty range '" + text + "'");
  return r;
}

inline std::uint64_t parse_u64(const std::string& text, const char* what) {
  const Nat v = parse_nat(text);
  if (!v.fits_ulong_p()) throw DomainError(std::string(what) + " out of range: " + text);
  return v.get_ui();
}

struct GlobalOptions {
  std::string rule = "q";
  std::string format = "text";
  std::optional<std::string> max_steps;
  std::optional<std::string> max_bits;
  unsigned workers = 1;
};

struct Resolved {
  MapRule rule = MapRule::Q;
  OutputFormat fmt = OutputFormat::Text;
  IterLimits limits;
};

inline Resolved resolve(const GlobalOptions& g, const EnvLookup& env) {
  Resolved r;
  auto rule = parse_rule(g.rule);
  if (!rule) throw DomainError("unknown rule '" + g.rule + "'");
  r.rule = *rule;

  if (g.format == "text") {
    r.fmt = OutputFormat::Text;
  } else if (g.format == "json" || g.format == "json-lines") {
    r.fmt = OutputFormat::JsonLines;
  } else if (g.format == "csv") {
    r.fmt = OutputFormat::Csv;
  } else {
    throw DomainError("unknown format '" + g.format + "'");
  }

  auto pick = [&](const std::optional<std::string>& flag, const char* var,
                  std::uint64_t fallback) -> std::uint64_t {
    if (flag) return parse_u64(*flag, var);
    if (auto e = env(var)) return parse_u64(*e, var);
    return fallback;
  };
  r.limits = IterLimits(pick(g.max_steps, "QORBIT_MAX_STEPS", kDefaultMaxSteps),
                        pick(g.max_bits, "QORBIT_MAX_BITS", kDefaultMaxBits));
  if (g.workers == 0) throw DomainError("--workers must be >= 1");
  return r;
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_orbit(std::ostream& out, const Resolved& r, const std::string& seed_text) {
  const Orbit o = iterate(r.rule, parse_nat(seed_text), r.limits);
  render_orbit(out, o, r.fmt);
  return o.cycled() ? kOk : kLimit;
}

inline int cmd_classify(std::ostream& out, const Resolved& r, const std::string& spec) {
  const Range range = parse_range(spec);
  if (r.fmt == OutputFormat::Csv) out << kScanCsvHeader << '\n';
  for (Nat s = range.lo; s <= range.hi; ++s) render_row(out, make_row(s), r.fmt);
  return kOk;
}

inline int cmd_cycle(std::ostream& out, const Resolved& r, const std::string& m_text) {
  const std::uint64_t m = parse_u64(m_text, "m");
  if (m == 0) throw DomainError("cycle: m must be >= 1");
  // The largest element 2^(m-1)(2^m+1) has 2m bits.
  if (2 * m > r.limits.max_bits) {
    throw ResourceError("cycle elements for m=" + m_text + " need " + std::to_string(2 * m) +
                            " bits, above max_bits=" + std::to_string(r.limits.max_bits),
                        0);
  }
  const auto cycle = cycle_for(m);
  switch (r.fmt) {
    case OutputFormat::Text:
      for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << text_nat(cycle[i]);
      out << '\n';
      break;
    case OutputFormat::JsonLines: {
      Json j;
      j["m"] = m;
      Json vals = Json::array();
      for (const auto& v : cycle) vals.push_back(to_decimal(v));
      j["cycle"] = std::move(vals);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "index,value\n";
      for (std::size_t i = 0; i < cycle.size(); ++i) out << i << ',' << to_decimal(cycle[i]) << '\n';
      break;
  }
  return kOk;
}

inline int cmd_certify(std::ostream& out, const Resolved& r, const std::string& seed_text, std::size_t odd_steps) {
  const auto cert = certify_divergence(parse_nat(seed_text), odd_steps, r.limits.max_bits);
  const Nat bound = cert.growth_bound();
  const Nat& last = cert.steps.back().odd_out;
  switch (r.fmt) {
    case OutputFormat::Text:
      out << "seed " << text_nat(cert.seed) << ": lead_in_steps=" << cert.lead_in_steps
          << " odd0=" << text_nat(cert.odd0) << '\n';
      for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        out << "step " << i + 1 << ": " << text_nat(s.odd_in) << " = 2^" << s.j << "*" << text_nat(s.k)
            << "+1 -> " << text_nat(s.odd_out) << '\n';
      }
      out << "bound: " << text_nat(last) << " >= 3^" << cert.steps.size() << "*" << text_nat(cert.odd0) << " = "
          << text_nat(bound) << ": " << (cert.growth_ok ? "ok" : "FAILED") << '\n';
      break;
    case OutputFormat::JsonLines: {
      Json j;
      j["seed"] = to_decimal(cert.seed);
      j["lead_in_steps"] = cert.lead_in_steps;
      j["odd0"] = to_decimal(cert.odd0);
      Json steps = Json::array();
      for (const auto& s : cert.steps) {
        Json e;
        e["odd_in"] = to_decimal(s.odd_in);
        e["j"] = s.j;
        e["k"] = to_decimal(s.k);
        e["odd_out"] = to_decimal(s.odd_out);
        steps.push_back(std::move(e));
      }
      j["steps"] = std::move(steps);
      j["bound"] = to_decimal(bound);
      j["growth_ok"] = cert.growth_ok;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "step,odd_in,j,k,odd_out\n";
      for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& s = cert.steps[i];
        out << i + 1 << ',' << to_decimal(s.odd_in) << ',' << s.j << ',' << to_decimal(s.k) << ','
            << to_decimal(s.odd_out) << '\n';
      }
      break;
  }
  return cert.growth_ok ? kOk : kViolation;
}

inline int cmd_search_lemma2(std::ostream& out, const Resolved& r, InclusiveRange j_range, InclusiveRange k_range,
                             unsigned workers) {
  const auto report = lemma2_scan(j_range, k_range, workers);
  switch (r.fmt) {
    case OutputFormat::Text:
      out << "j in [" << j_range.lo << ", " << j_range.hi << "], odd k in [" << k_range.lo << ", " << k_range.hi
          << "]\n";
      out << "pairs_checked: " << report.pairs_checked << '\n';
      out << "solutions: " << report.solutions.size() << '\n';
      for (const auto& s : report.solutions) out << "  j=" << s.j << " k=" << s.k.get_str() << " m=" << s.m << '\n';
      break;
    case OutputFormat::JsonLines: {
      Json j;
      j["j_range"] = {j_range.lo, j_range.hi};
      j["k_range"] = {k_range.lo, k_range.hi};
      j["pairs_checked"] = report.pairs_checked;
      Json sols = Json::array();
      for (const auto& s : report.solutions) sols.push_back({{"j", s.j}, {"k", s.k.get_str()}, {"m", s.m}});
      j["solutions"] = std::move(sols);
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "j_min,j_max,k_min,k_max,pairs_checked,solutions\n";
      out << j_range.lo << ',' << j_range.hi << ',' << k_range.lo << ',' << k_range.hi << ','
          << report.pairs_checked << ',' << report.solutions.size() << '\n';
      if (!report.solutions.empty()) {
        out << "\nj,k,m\n";
        for (const auto& s : report.solutions) out << s.j << ',' << s.k.get_str() << ',' << s.m << '\n';
      }
      break;
  }
  return report.solutions.empty() ? kOk : kViolation;
}

inline std::string format_fraction(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", f);
  return buf;
}

inline int cmd_scan(std::ostream& out, std::ostream& err, const Resolved& r, const std::string& max_text,
                    unsigned workers, bool rows) {
  const Nat max = parse_nat(max_text);
  if (max < 1) throw DomainError("scan: --max must be >= 1");
  if (max >= pow2(62)) throw DomainError("scan: --max too large for a per-seed scan");
  const std::uint64_t total = max.get_ui() + 1;
  const bool emit_rows = rows || r.fmt == OutputFormat::Csv;

  struct Part {
    std::uint64_t non_divergent = 0;
    std::string rendered;
  };
  auto parts = map_chunks(total, workers, [&](IndexChunk c) {
    Part p;
    std::ostringstream buf;
    Nat seed(static_cast<unsigned long>(c.begin));
    for (std::uint64_t i = c.begin; i < c.end; ++i, ++seed) {
      if (emit_rows) {
        const ScanRow row = make_row(seed);
        if (row.class_tag != "divergent") ++p.non_divergent;
        render_row(buf, row, r.fmt);
      } else if (!is_divergent(classify(seed))) {
        ++p.non_divergent;
      }
    }
    p.rendered = buf.str();
    return p;
  });

  std::uint64_t counted = 0;
  if (r.fmt == OutputFormat::Csv) out << kScanCsvHeader << '\n';
  for (const auto& p : parts) {
    counted += p.non_divergent;
    out << p.rendered;
  }
  const std::uint64_t census = periodic_seed_census(max).count;
  if (census != counted) {
    err << "census (" << census << ") disagrees with per-seed classification (" << counted << ")\n";
    return kViolation;
  }
  const double fraction = static_cast<double>(counted) / static_cast<double>(total);
  switch (r.fmt) {
    case OutputFormat::Text:
      out << "seeds: " << total << '\n'
          << "non_divergent: " << counted << '\n'
          << "divergent: " << total - counted << '\n'
          << "fraction_non_divergent: " << format_fraction(fraction) << '\n';
      break;
    case OutputFormat::JsonLines: {
      Json j;
      j["max"] = max_text;
      j["seeds"] = total;
      j["non_divergent"] = counted;
      j["divergent"] = total - counted;
      j["fraction_non_divergent"] = fraction;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      break;
  }
  return kOk;
}

/// Advances the odd part of n by odd_steps odd-to-odd moves with plain Q
/// steps and with next_odd, and checks both land on the same values.
inline int cmd_bench(std::ostream& out, std::ostream& err, const Resolved& r, const std::string& seed_text,
                     std::size_t odd_steps) {
  using Clock = std::chrono::steady_clock;
  const Nat seed = parse_nat(seed_text);
  if (sgn(seed) == 0) throw DomainError("bench: seed must be >= 1");
  auto [lead_in, odd0] = two_adic_split(seed);
  if (odd0 == 1) throw DomainError("bench: seed " + seed_text + " has no odd value >= 3 in its orbit");
  const Exponent cap = r.limits.max_bits;

  std::vector<Nat> naive_chain{odd0}, fast_chain{odd0};
  std::vector<std::size_t> naive_steps;
  std::size_t naive_total_steps = 0, naive_mults = 0, fast_mults = 0;

  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < odd_steps; ++i) {
    auto a = advance_odd_naive(naive_chain.back(), cap);
    if (!a) break;
    naive_total_steps += a->steps;
    naive_mults += a->multiplications;
    naive_steps.push_back(a->steps);
    naive_chain.push_back(std::move(a->odd_out));
  }
  const auto t1 = Clock::now();
  for (std::size_t i = 0; i < odd_steps; ++i) {
    OddStep s = next_odd(fast_chain.back());
    ++fast_mults;
    // The orbit's peak between the two odd values is 2^(j-1) * odd_out.
    if (bit_length(s.odd_out) + (s.j - 1) > cap) break;
    fast_chain.push_back(std::move(s.odd_out));
  }
  const auto t2 = Clock::now();

  const bool agree = naive_chain == fast_chain;
  const std::size_t completed = std::min(naive_chain.size(), fast_chain.size()) - 1;
  const double naive_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  const double fast_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();

  switch (r.fmt) {
    case OutputFormat::Text:
      out << "seed " << text_nat(seed) << ": lead_in_steps=" << lead_in << " odd0=" << text_nat(odd0) << '\n';
      for (std::size_t i = 1; i < fast_chain.size() && i < naive_chain.size(); ++i) {
        out << "odd " << i << ": " << text_nat(fast_chain[i]) << " bits=" << bit_length(fast_chain[i])
            << " naive_steps=" << naive_steps[i - 1] << '\n';
      }
      out << "completed_odd_steps: " << completed << '\n'
          << "naive_steps: " << naive_total_steps << '\n'
          << "naive_multiplications: " << naive_mults << '\n'
          << "fast_multiplications: " << fast_mults << '\n'
          << "engines_agree: " << (agree ? "yes" : "NO") << '\n'
          << "--- timing ---\n"
          << "naive_ms: " << naive_ms << '\n'
          << "fast_ms: " << fast_ms << '\n';
      break;
    case OutputFormat::JsonLines: {
      Json j;
      j["seed"] = to_decimal(seed);
      j["lead_in_steps"] = lead_in;
      Json chain = Json::array(), bits = Json::array();
      for (const auto& v : fast_chain) {
        chain.push_back(to_decimal(v));
        bits.push_back(bit_length(v));
      }
      j["odd_chain"] = std::move(chain);
      j["bits"] = std::move(bits);
      j["naive_steps"] = naive_total_steps;
      j["naive_multiplications"] = naive_mults;
      j["fast_multiplications"] = fast_mults;
      j["engines_agree"] = agree;
      out << j.dump() << '\n';
      out << Json{{"timing", {{"naive_ms", naive_ms}, {"fast_ms", fast_ms}}}}.dump() << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "index,odd_value,bits,naive_steps\n";
      for (std::size_t i = 0; i < fast_chain.size() && i < naive_chain.size(); ++i) {
        out << i << ',' << to_decimal(fast_chain[i]) << ',' << bit_length(fast_chain[i]) << ','
            << (i ? std::to_string(naive_steps[i - 1]) : std::string()) << '\n';
      }
      out << "\nengine,multiplications,ms\n"
          << "naive," << naive_mults << ',' << naive_ms << '\n'
          << "fast," << fast_mults << ',' << fast_ms << '\n';
      break;
  }
  if (!agree) {
    err << "engine mismatch between naive stepping and odd fast-forward\n";
    return kViolation;
  }
  if (completed < odd_steps) {
    err << "bit cap of " << cap << " reached after " << completed << " odd steps\n";
    return kLimit;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               const EnvLookup& env = process_env) {
  CLI::App app{"Orbits of the divide-or-choose-2 rule and related Collatz-type maps", "qorbit"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--rule", g.rule, "Map rule: q, f or t")->check(CLI::IsMember({"q", "f", "t", "Q", "F", "T"}));
  app.add_option("--format", g.format, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "json-lines", "csv"}));
  app.add_option("--max-steps", g.max_steps, "Iteration step limit (env QORBIT_MAX_STEPS)");
  app.add_option("--max-bits", g.max_bits, "Bit-length cap per value (env QORBIT_MAX_BITS)");
  app.add_option("--workers", g.workers, "Worker threads for scan and search-lemma2");

  std::string seed_text, range_text, m_text, max_text;
  std::size_t odd_steps = 1;
  std::uint64_t j_min = 1, j_max = 20, k_min = 3, k_max = 9999;
  bool rows = false;

  auto* orbit = app.add_subcommand("orbit", "Iterate a rule from a seed until it cycles or hits a limit");
  orbit->add_option("n", seed_text, "Seed")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a seed or an inclusive range a..b");
  classify_cmd->add_option("seeds", range_text, "Seed or range a..b")->required();

  auto* cycle = app.add_subcommand("cycle", "Print the m-cycle anchored at 2^m+1");
  cycle->add_option("m", m_text, "Period")->required();

  auto* certify = app.add_subcommand("certify", "Build a divergence certificate");
  certify->add_option("n", seed_text, "Seed")->required();
  certify->add_option("--odd-steps", odd_steps, "Number of odd-to-odd steps")->check(CLI::PositiveNumber);

  auto* search = app.add_subcommand("search-lemma2", "Search for 2^j k^2 + k - 1 = 2^m over a (j, k) grid");
  search->add_option("--j-min", j_min, "Smallest j");
  search->add_option("--j-max", j_max, "Largest j");
  search->add_option("--k-min", k_min, "Smallest k (odd k >= 3 are checked)");
  search->add_option("--k-max", k_max, "Largest k");

  auto* scan = app.add_subcommand("scan", "Count non-divergent seeds in [0, max]");
  scan->add_option("--max", max_text, "Upper bound of the scanned range")->required();
  scan->add_flag("--rows", rows, "Also emit one row per seed");

  auto* bench = app.add_subcommand("bench", "Compare naive stepping against odd fast-forward");
  bench->add_option("n", seed_text, "Seed")->required();
  bench->add_option("--odd-steps", odd_steps, "Number of odd-to-odd steps")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Resolved r = resolve(g, env);
    if (orbit->parsed()) return cmd_orbit(out, r, seed_text);
    if (classify_cmd->parsed()) return cmd_classify(out, r, range_text);
    if (cycle->parsed()) return cmd_cycle(out, r, m_text);
    if (certify->parsed()) return cmd_certify(out, r, seed_text, odd_steps);
    if (search->parsed()) return cmd_search_lemma2(out, r, {j_min, j_max}, {k_min, k_max}, g.workers);
    if (scan->parsed()) return cmd_scan(out, err, r, max_text, g.workers, rows);
    if (bench->parsed()) return cmd_bench(out, err, r, seed_text, odd_steps);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace qorbit::cli
