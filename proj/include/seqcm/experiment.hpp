#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parameters.hpp"
#include "session.hpp"

namespace seqcm {

enum class Conclusion { consistent_seqcm, consistent_non_seqcm, inconclusive };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::consistent_seqcm: return "CONSISTENT_SEQCM";
    case Conclusion::consistent_non_seqcm: return "CONSISTENT_NON_SEQCM";
    case Conclusion::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

inline Conclusion parse_conclusion(const std::string& s) {
  if (s == "CONSISTENT_SEQCM") return Conclusion::consistent_seqcm;
  if (s == "CONSISTENT_NON_SEQCM") return Conclusion::consistent_non_seqcm;
  if (s == "INCONCLUSIVE") return Conclusion::inconclusive;
  throw std::invalid_argument("unknown conclusion '" + s + "'");
}

struct ExperimentConfig {
  std::size_t trials = 5;
  std::vector<unsigned> powers{1, 2, 4};
  std::uint64_t seed = 0;
  unsigned degree = 1;
  std::size_t retries = 32;
  /// Extra degrees tried (t+1, t+2, ...) after the retry budget runs out.
  unsigned escalation = 2;
  bool goto_sequences = false;
  bool timings = false;

  static ExperimentConfig from(const SessionOptions& o) {
    ExperimentConfig c;
    c.trials = o.trials;
    c.powers = o.powers;
    c.seed = o.seed;
    c.degree = o.degree;
    c.retries = o.retries;
    return c;
  }
};

struct PowerMeasurement {
  unsigned power = 1;
  std::size_t N = 0;
  std::uint64_t quotient_length = 0;
  bool distinguished = false;
};

struct GotoFlags {
  unsigned degree = 1;
  std::vector<std::string> system;
  bool conditions_hold = false;
  bool d_sequence = false;
  bool distinguished = false;
  bool type_two = false;
  std::vector<std::size_t> r_values;
  std::vector<std::size_t> condition1_skipped_steps;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  unsigned degree = 1;
  std::vector<unsigned> degrees;
  std::vector<std::string> system;
  bool is_sop = false;
  bool is_distinguished = false;
  std::vector<PowerMeasurement> measurements;
  bool stabilized = false;
  std::optional<GotoFlags> goto_sequence;
  std::optional<double> seconds;
};

struct ExperimentTimings {
  double invariants = 0;
  double filtration = 0;
  double trials = 0;
};

struct ExperimentReport {
  std::string module;
  std::string ring;
  std::uint64_t seed = 0;
  std::vector<unsigned> powers;
  InvariantVector invariants;
  bool sequentially_cm = false;
  std::vector<int> filtration_dims;
  std::vector<bool> step_cm;
  bool cohen_macaulay = false;
  std::optional<bool> gorenstein;
  std::vector<TrialRecord> trials;
  Conclusion conclusion = Conclusion::inconclusive;
  std::optional<std::string> error;
  std::optional<ExperimentTimings> timings;
};

/// N agrees at the two largest powers.
inline bool is_stabilized(const TrialRecord& t) {
  const auto& m = t.measurements;
  return m.size() >= 2 && m[m.size() - 1].N == m[m.size() - 2].N;
}

/// Depends only on the recorded verdict, r(M) and the trial measurements.
/// CONSISTENT_SEQCM: sequentially CM, and every trial is stabilized with
/// N = r(M) at the top power. CONSISTENT_NON_SEQCM: not sequentially CM, and
/// some stabilized trial has N != r(M) at the top power.
inline Conclusion derive_conclusion(const ExperimentReport& r) {
  if (r.trials.empty()) return Conclusion::inconclusive;
  const std::size_t target = r.invariants.r_total;
  auto top_matches = [&](const TrialRecord& t) {
    return !t.measurements.empty() && t.measurements.back().N == target;
  };
  if (r.sequentially_cm) {
    for (const auto& t : r.trials)
      if (!is_stabilized(t) || !top_matches(t)) return Conclusion::inconclusive;
    return Conclusion::consistent_seqcm;
  }
  for (const auto& t : r.trials)
    if (is_stabilized(t) && !top_matches(t)) return Conclusion::consistent_non_seqcm;
  return Conclusion::inconclusive;
}

/// RetriesExhausted raised inside run_experiment, carrying the trials
/// completed so far.
class ExperimentAborted : public RetriesExhausted {
 public:
  ExperimentAborted(const RetriesExhausted& cause, ExperimentReport partial)
      : RetriesExhausted(cause), partial_(std::move(partial)) {}
  const ExperimentReport& partial() const { return partial_; }

 private:
  ExperimentReport partial_;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::vector<std::string> render(const std::vector<Polynomial>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

/// Calls build(t) for t = degree, degree+1, ..., degree+escalation and
/// returns the first success; rethrows the last failure.
template <class Build>
auto with_escalation(unsigned degree, unsigned escalation, Build build) {
  for (unsigned t = degree;; ++t) {
    try {
      return build(t);
    } catch (const RetriesExhausted&) {
      if (t >= degree + escalation) throw;
    }
  }
}

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Seed of trial `index`; each trial owns an independent Rng seeded with it.
inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t index) {
  return detail::splitmix64(seed ^ detail::splitmix64(index));
}

inline TrialRecord run_trial(const PresentedModule& M, const FiltrationResult& F,
                             const ExperimentConfig& config, std::size_t index) {
  const auto t0 = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.index = index;
  rec.seed = trial_seed(config.seed, index);
  Rng rng(rec.seed);

  unsigned used = config.degree;
  ParameterSystem sys = detail::with_escalation(config.degree, config.escalation, [&](unsigned t) {
    used = t;
    return distinguished_sop(M, F, t, rng, config.retries, rec.seed);
  });
  rec.degree = used;
  rec.degrees = sys.degrees;
  rec.system = detail::render(sys.elements);
  rec.is_sop = sys.certificates.is_sop;
  rec.is_distinguished = sys.certificates.is_distinguished;
  for (unsigned t : config.powers) {
    ParameterSystem q = power_system(M, F, sys, t);
    IndexReport idx = index_of_reducibility(M, q.elements, t);
    rec.measurements.push_back({t, idx.N, idx.quotient_length, q.certificates.is_distinguished});
  }
  rec.stabilized = is_stabilized(rec);

  if (config.goto_sequences) {
    unsigned gdeg = config.degree;
    ParameterSystem g = detail::with_escalation(config.degree, config.escalation, [&](unsigned t) {
      gdeg = t;
      return goto_sequence(M, F, t, rng, false, config.retries, rec.seed);
    });
    const GotoCertificate& cert = *g.certificates.goto_sequence;
    rec.goto_sequence = GotoFlags{gdeg,
                                  detail::render(g.elements),
                                  cert.conditions_hold(),
                                  g.certificates.is_d_sequence,
                                  g.certificates.is_distinguished,
                                  cert.is_type_two(),
                                  cert.r_values,
                                  cert.condition1_skipped_steps};
  }
  if (config.timings) rec.seconds = detail::seconds_since(t0);
  return rec;
}

/// Invariants, filtration and seqcm verdict of M, then `trials` independent
/// distinguished systems swept over the configured powers. Trials run in
/// index order; the conclusion is derived from the recorded data.
inline ExperimentReport run_experiment(const PresentedModule& M, const std::string& module_name,
                                       const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.powers.empty()) throw std::invalid_argument("powers must be nonempty");
  for (std::size_t i = 0; i < config.powers.size(); ++i)
    if (config.powers[i] < 1 || (i && config.powers[i] <= config.powers[i - 1]))
      throw std::invalid_argument("powers must be positive and strictly ascending");

  ExperimentReport report;
  report.module = module_name;
  report.ring = M.ring()->description();
  report.seed = config.seed;
  report.powers = config.powers;
  ExperimentTimings timings;

  auto t0 = std::chrono::steady_clock::now();
  report.invariants = r_total(M);
  report.cohen_macaulay = is_cohen_macaulay(M);
  if (minimalize(M).rows() == 1) report.gorenstein = is_gorenstein(M);
  timings.invariants = detail::seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  SequentialCmVerdict verdict = is_sequentially_cm(M);
  report.sequentially_cm = verdict.sequentially_cm;
  report.filtration_dims = verdict.filtration.dims();
  report.step_cm = verdict.step_cm;
  timings.filtration = detail::seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < config.trials; ++i) {
    try {
      report.trials.push_back(run_trial(M, verdict.filtration, config, i));
    } catch (const RetriesExhausted& e) {
      report.error = e.what();
      report.conclusion = derive_conclusion(report);
      if (config.timings) report.timings = timings;
      throw ExperimentAborted(e, std::move(report));
    }
  }
  timings.trials = detail::seconds_since(t0);
  report.conclusion = derive_conclusion(report);
  if (config.timings) report.timings = timings;
  return report;
}

inline ExperimentReport run_experiment(const SessionInput& session, const std::string& module_name,
                                       const ExperimentConfig& config) {
  NamedModule m = session.module(module_name);
  return run_experiment(m.module, m.name, config);
}

}  // namespace seqcm
