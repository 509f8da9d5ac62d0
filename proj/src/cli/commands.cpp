#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "bspec/cheb_markov.hpp"
#include "bspec/cli.hpp"
#include "bspec/errors.hpp"
#include "bspec/inequalities.hpp"
#include "bspec/io.hpp"
#include "bspec/parallel.hpp"

namespace bspec::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError(what + ": not an integer: \"" + s + "\"", 0);
  return v;
}

double parse_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError(what + ": not a number: \"" + s + "\"", 0);
  return v;
}

/// maj:D | const:N:C | dict:N:I | parity:N | random:N:D[:SEED]
BooleanFunction generate(const std::string& spec, std::uint64_t seed) {
  const auto parts = split(spec, ':');
  const std::string kind = parts.empty() ? "" : parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw ParseError("generator \"" + spec + "\" is missing arguments", 0);
    return parts[i];
  };
  auto arity = [&](std::size_t count) {
    if (parts.size() != count) throw ParseError("generator \"" + spec + "\" has the wrong arity", 0);
  };
  if (kind == "maj") {
    arity(2);
    return majority(parse_int(arg(1), "maj"));
  }
  if (kind == "const") {
    arity(3);
    return BooleanFunction::constant(parse_int(arg(1), "const"), parse_real(arg(2), "const"));
  }
  if (kind == "dict") {
    arity(3);
    const int n = parse_int(arg(1), "dict");
    const int i = parse_int(arg(2), "dict");
    if (i < 1 || i > n) throw DomainError("dictator coordinate outside [1, n]");
    return BooleanFunction::tabulate(n, [i](Mask r) { return double(coordinate_sign(r, i)); });
  }
  if (kind == "parity") {
    arity(2);
    const int n = parse_int(arg(1), "parity");
    return BooleanFunction::tabulate(n, [](Mask r) { return double(character(r, ~Mask{0})); });
  }
  if (kind == "random") {
    if (parts.size() != 3 && parts.size() != 4)
      throw ParseError("generator \"" + spec + "\" has the wrong arity", 0);
    const std::uint64_t s = parts.size() == 4 ? std::stoull(arg(3)) : seed;
    return inverse_transform(
        random_spectrum(parse_int(arg(1), "random"), parse_int(arg(2), "random"), s));
  }
  throw ParseError("unknown generator \"" + spec + "\" (maj, const, dict, parity, random)", 0);
}

BooleanFunction read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"", 0);
  return io::read_truth_table(in);
}

FourierSpectrum read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"", 0);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  return io::spectrum_from_json(j);
}

/// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot write \"" + path + "\"", 0);
  body(file);
}

struct Source {
  std::string input;
  std::string spectrum;
  std::string generator;

  void add(CLI::App* cmd, bool with_spectrum) {
    auto* a = cmd->add_option("--input", input, "truth-table file");
    auto* g = cmd->add_option("--generator", generator,
                              "maj:D, const:N:C, dict:N:I, parity:N, random:N:D[:SEED]");
    a->excludes(g);
    if (with_spectrum) {
      auto* s = cmd->add_option("--spectrum", spectrum, "spectrum JSON file");
      s->excludes(a)->excludes(g);
    }
  }

  FourierSpectrum load(std::uint64_t seed) const {
    if (!spectrum.empty()) return read_spectrum_file(spectrum);
    if (!input.empty()) return walsh_transform(read_table_file(input));
    if (!generator.empty()) return walsh_transform(generate(generator, seed));
    throw ParseError("one of --input, --generator or --spectrum is required", 0);
  }
};

void apply_threads(int threads) {
  if (threads > 0) {
    set_max_threads(static_cast<unsigned>(threads));
    return;
  }
  if (const char* env = std::getenv("BSPEC_THREADS")) {
    const int v = parse_int(env, "BSPEC_THREADS");
    if (v > 0) set_max_threads(static_cast<unsigned>(v));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier analysis and coefficient inequalities on the Boolean cube", "bspec"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker cap (default: BSPEC_THREADS or all cores)");

  std::uint64_t seed = 1;
  double tol = kDefaultTolerance;
  std::string out_path;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Fourier-Walsh spectrum as JSON");
  Source spectrum_src;
  spectrum_src.add(spectrum_cmd, false);
  int degree_cap = -1;
  int level = -1;
  auto* deg_opt = spectrum_cmd->add_option("--degree", degree_cap, "keep levels <= K");
  spectrum_cmd->add_option("--level", level, "keep level M only")->excludes(deg_opt);
  spectrum_cmd->add_option("--seed", seed);
  spectrum_cmd->add_option("--out", out_path);

  auto* synth_cmd = app.add_subcommand("synth", "truth table from a spectrum JSON");
  std::string synth_input;
  synth_cmd->add_option("--input", synth_input, "spectrum JSON file")->required();
  synth_cmd->add_option("--out", out_path);

  auto* bh_cmd = app.add_subcommand("bh", "coefficient-norm to sup-norm ratio");
  Source bh_src;
  bh_src.add(bh_cmd, true);
  bh_cmd->add_option("--seed", seed);
  bh_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteConfig suite_cfg;
  bool as_csv = false;
  verify_cmd->add_option("suite", suite, "fourier|hyper|blei|polarization|markov|psi|lorentz|aa|all")
      ->required();
  verify_cmd->add_option("--n", suite_cfg.n);
  verify_cmd->add_option("--d", suite_cfg.d);
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--trials", suite_cfg.trials);
  verify_cmd->add_option("--tol", tol);
  auto* json_flag = verify_cmd->add_flag("--json", "JSON output (default)");
  verify_cmd->add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);
  verify_cmd->add_option("--out", out_path);

  auto* search_cmd = app.add_subcommand("search", "search for large coefficient ratios");
  SearchConfig search_cfg;
  std::string strategy = std::string(strategy_name(search_cfg.strategy));
  bool all_levels = false;
  std::string csv_path;
  search_cmd->add_option("--n", search_cfg.n);
  search_cmd->add_option("--d", search_cfg.d);
  search_cmd->add_option("--strategy", strategy,
                         "random-restart|sign-flip-local-search|flat-sign-exhaustive");
  search_cmd->add_option("--iters", search_cfg.iterations);
  search_cmd->add_option("--seed", seed);
  search_cmd->add_flag("--all-levels", all_levels, "use levels 0..d instead of level d only");
  search_cmd->add_option("--out", out_path, "witness JSON path");
  search_cmd->add_option("--csv", csv_path, "ratio table over d <= D, n <= N");

  auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev, psi and Markov tables as CSV");
  int cheb_d = 4;
  cheb_cmd->add_option("--d", cheb_d);
  cheb_cmd->add_option("--out", out_path);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    apply_threads(threads);

    if (spectrum_cmd->parsed()) {
      FourierSpectrum s = spectrum_src.load(seed);
      if (degree_cap >= 0) s = truncate_degree(s, degree_cap);
      if (level >= 0) s = homogeneous_part(s, level);
      emit(out_path, out, [&](std::ostream& o) { o << io::spectrum_to_json(s).dump(2) << '\n'; });
      return kExitOk;
    }

    if (synth_cmd->parsed()) {
      const BooleanFunction f = inverse_transform(read_spectrum_file(synth_input));
      emit(out_path, out, [&](std::ostream& o) { io::write_truth_table(o, f); });
      return kExitOk;
    }

    if (bh_cmd->parsed()) {
      const InequalityReport r = bh_ratio(bh_src.load(seed));
      emit(out_path, out, [&](std::ostream& o) { o << io::report_to_json(r).dump(2) << '\n'; });
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      suite_cfg.seed = seed;
      suite_cfg.tol = tol;
      const SuiteResult result = run_suite(suite, suite_cfg);
      emit(out_path, out, [&](std::ostream& o) {
        if (as_csv) io::write_reports_csv(o, result.reports);
        else o << suite_to_json(result).dump(2) << '\n';
      });
      err << "verify " << suite << ": " << result.passed() << "/" << result.reports.size()
          << " passed in " << result.wall_seconds << " s\n";
      return result.failed() == 0 ? kExitOk : kExitFailure;
    }

    if (search_cmd->parsed()) {
      const auto parsed = parse_strategy(strategy);
      if (!parsed) throw ParseError("unknown strategy \"" + strategy + "\"", 0);
      search_cfg.strategy = *parsed;
      search_cfg.seed = seed;
      search_cfg.homogeneous_only = !all_levels;
      if (!csv_path.empty()) {
        std::vector<int> ds, ns;
        for (int d = 1; d <= search_cfg.d; ++d) ds.push_back(d);
        for (int n = 1; n <= search_cfg.n; ++n) ns.push_back(n);
        const auto rows = ratio_table(ds, ns, search_cfg);
        emit(csv_path, out, [&](std::ostream& o) { write_ratio_csv(o, rows); });
        if (out_path.empty()) return kExitOk;
      }
      const Witness w = search_bh_witness(search_cfg);
      emit(out_path, out, [&](std::ostream& o) { o << witness_to_json(w, search_cfg).dump(2) << '\n'; });
      return kExitOk;
    }

    if (cheb_cmd->parsed()) {
      const auto t = chebyshev_exact(cheb_d);
      emit(out_path, out, [&](std::ostream& o) {
        o << "series,d,m,value\n";
        for (int m = 0; m <= cheb_d; ++m) o << "chebyshev," << cheb_d << ',' << m << ',' << to_string(t[m]) << '\n';
        for (int m = 0; m <= cheb_d; ++m)
          o << "psi," << cheb_d << ',' << m << ',' << to_string(cheb_psi_coeff(m, cheb_d)) << '\n';
        for (int m = 0; m <= cheb_d; ++m)
          o << "markov," << cheb_d << ',' << m << ',' << to_string(markov_number(m, cheb_d)) << '\n';
        if (cheb_d >= 1)
          for (const auto& g : markov_growth_trace(cheb_d))
            o << "growth," << g.d << ',' << g.argmax_m << ',' << io::format_double(g.value) << '\n';
      });
      return kExitOk;
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace bspec::cli
