#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "seqcm/seqcm.hpp"

using namespace seqcm;

namespace {

enum Exit { ok = 0, failure = 1, parse_error = 2, retries_exhausted = 3, invariant_violation = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Common {
  std::string input;
  std::string module;
  bool strict = false;
};

struct Loaded {
  SessionInput session;
  NamedModule module;
};

Loaded load(const Common& c) {
  SessionInput s = parse_input(read_file(c.input), c.strict);
  for (const auto& w : s.warnings) std::cerr << "warning: " << w << "\n";
  NamedModule m = s.module(c.module);
  return {std::move(s), std::move(m)};
}

void print_system(const ParameterSystem& sys) {
  for (const auto& x : sys.elements) std::cout << x.to_string() << "\n";
}

std::string bools(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s += b ? '1' : '0';
  return s;
}

void print_certificates(const ParameterSystem& sys) {
  const auto& c = sys.certificates;
  std::cout << "# seed " << sys.seed << " sop " << c.is_sop << " distinguished "
            << c.is_distinguished << " d-sequence " << c.is_d_sequence << "\n";
  if (c.goto_sequence) {
    const auto& g = *c.goto_sequence;
    std::cout << "# goto conditions (1) " << bools(g.condition1) << " (2) " << bools(g.condition2)
              << " (3) " << bools(g.condition3) << " type II " << bools(g.type_two) << " r";
    for (auto r : g.r_values) std::cout << " " << r;
    if (!g.condition1_skipped_steps.empty()) {
      std::cout << " (1) skipped for steps";
      for (auto i : g.condition1_skipped_steps) std::cout << " " << i;
    }
    std::cout << "\n";
  }
}

std::vector<unsigned> parse_powers(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<unsigned>(std::stoul(item)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequentially Cohen-Macaulay checks over GF(p)[x_1..x_n]"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", common.input, "input file")->required();
    sub->add_option("-m,--module", common.module, "module or ideal name (default: first)");
    sub->add_flag("--strict", common.strict, "non-homogeneous generators are errors");
  };

  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of the relations");
  auto* dim = app.add_subcommand("dim", "Krull dimension");
  auto* dep = app.add_subcommand("depth", "depth via Auslander-Buchsbaum");
  auto* filt = app.add_subcommand("filtration", "dimension filtration");
  auto* inv = app.add_subcommand("invariants", "r_j(M) and r(M)");
  for (auto* s : {gb, dim, dep, filt, inv}) add_common(s);

  std::optional<unsigned> degree;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> retries;
  bool distinguished = false, type2 = false;
  auto* sop = app.add_subcommand("sop", "random system of parameters");
  auto* got = app.add_subcommand("goto", "certified Goto sequence");
  for (auto* s : {sop, got}) {
    add_common(s);
    s->add_option("--degree", degree, "element degree");
    s->add_option("--seed", seed, "RNG seed");
    s->add_option("--retries", retries, "attempts per construction");
  }
  sop->add_flag("--distinguished", distinguished, "draw a distinguished system");
  got->add_flag("--type2", type2, "require type II");

  std::string system_file;
  unsigned power = 1;
  auto* idx = app.add_subcommand("index", "index of reducibility N(q^t; M)");
  add_common(idx);
  idx->add_option("--system", system_file, "file with the parameter elements")->required();
  idx->add_option("--power", power, "power t applied to each element");

  bool check_seqcm = false, check_cm = false, check_gor = false;
  auto* chk = app.add_subcommand("check", "structural checks");
  add_common(chk);
  chk->add_flag("--seqcm", check_seqcm, "sequentially Cohen-Macaulay");
  chk->add_flag("--cm", check_cm, "Cohen-Macaulay");
  chk->add_flag("--gorenstein", check_gor, "Gorenstein (cyclic modules)");

  std::optional<std::size_t> trials;
  std::optional<std::string> powers;
  std::string report_path, format = "json";
  bool with_goto = false, timings = false;
  auto* exp = app.add_subcommand("experiment", "index-of-reducibility experiment");
  add_common(exp);
  exp->add_option("--trials", trials, "number of trials");
  exp->add_option("--powers", powers, "comma-separated ascending powers");
  exp->add_option("--seed", seed, "base seed");
  exp->add_option("--degree", degree, "element degree");
  exp->add_option("--retries", retries, "attempts per construction");
  exp->add_option("--report", report_path, "write the report here instead of stdout");
  exp->add_option("--format", format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  exp->add_flag("--goto", with_goto, "also certify a Goto sequence per trial");
  exp->add_flag("--timings", timings, "record wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return parse_error;
  }

  try {
    Loaded in = load(common);
    const PresentedModule& M = in.module.module;
    const SessionOptions& opt = in.session.options;
    const unsigned t = degree.value_or(opt.degree);
    const std::uint64_t s = seed.value_or(opt.seed);
    const std::size_t tries = retries.value_or(opt.retries);

    if (gb->parsed()) {
      for (const auto& g : buchberger(M.relation_module()).gb())
        std::cout << (M.rows() == 1 ? g.component(0).to_string() : g.to_string()) << "\n";
    } else if (dim->parsed()) {
      std::cout << krull_dim(M) << "\n";
    } else if (dep->parsed()) {
      std::cout << depth(M) << "\n";
    } else if (filt->parsed()) {
      FiltrationResult F = dimension_filtration(M);
      for (std::size_t i = 0; i < F.steps.size(); ++i) {
        std::cout << "D_" << i + 1 << " dim " << F.steps[i].dim << " gens";
        for (const auto& g : F.steps[i].handle.generators)
          std::cout << " " << (M.rows() == 1 ? g.component(0).to_string() : g.to_string());
        std::cout << "\n";
      }
    } else if (inv->parsed()) {
      InvariantVector v = r_total(M);
      std::cout << "d " << v.d << "\n";
      for (std::size_t j = 0; j < v.rj.size(); ++j) std::cout << "r_" << j << " " << v.rj[j] << "\n";
      std::cout << "r " << v.r_total << "\n";
    } else if (sop->parsed()) {
      Rng rng(s);
      FiltrationResult F = dimension_filtration(M);
      ParameterSystem sys = distinguished ? distinguished_sop(M, F, t, rng, tries, s)
                                          : random_sop(M, t, rng, tries, s);
      sys.certificates.is_distinguished = is_distinguished(M, F, sys.elements);
      sys.certificates.is_d_sequence = verify_d_sequence(M, sys.elements);
      print_system(sys);
      print_certificates(sys);
    } else if (got->parsed()) {
      Rng rng(s);
      ParameterSystem sys = goto_sequence(M, dimension_filtration(M), t, rng, type2, tries, s);
      print_system(sys);
      print_certificates(sys);
    } else if (idx->parsed()) {
      std::vector<Polynomial> xs = parse_system(in.session.ring, read_file(system_file));
      if (power < 1) throw std::invalid_argument("power must be positive");
      for (auto& x : xs) x = x.pow(power);
      IndexReport r = index_of_reducibility(M, xs, power);
      std::cout << "N " << r.N << "\nlength " << r.quotient_length << "\n";
    } else if (chk->parsed()) {
      if (!check_seqcm && !check_cm && !check_gor) check_seqcm = check_cm = check_gor = true;
      if (check_cm) std::cout << "cm " << (is_cohen_macaulay(M) ? "true" : "false") << "\n";
      if (check_seqcm) {
        auto v = is_sequentially_cm(M);
        std::cout << "seqcm " << (v.sequentially_cm ? "true" : "false") << "\n";
      }
      if (check_gor) {
        if (minimalize(M).rows() == 1)
          std::cout << "gorenstein " << (is_gorenstein(M) ? "true" : "false") << "\n";
        else
          std::cout << "gorenstein n/a (module is not cyclic)\n";
      }
    } else if (exp->parsed()) {
      ExperimentConfig config = ExperimentConfig::from(opt);
      if (trials) config.trials = *trials;
      if (powers) config.powers = parse_powers(*powers);
      config.seed = s;
      config.degree = t;
      config.retries = tries;
      config.goto_sequences = with_goto;
      config.timings = timings;
      auto emit = [&](const ExperimentReport& r) {
        std::string text = emit_report(r, parse_format(format));
        if (report_path.empty()) {
          std::cout << text;
        } else {
          std::ofstream out(report_path);
          if (!out) throw std::runtime_error("cannot write '" + report_path + "'");
          out << text;
        }
      };
      try {
        emit(run_experiment(M, in.module.name, config));
      } catch (const ExperimentAborted& e) {
        emit(e.partial());
        throw;
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse_error;
  } catch (const RetriesExhausted& e) {
    std::cerr << "retries exhausted: " << e.what() << "\n";
    return retries_exhausted;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return invariant_violation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return ok;
}
