#include "psearch/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "psearch/analysis.hpp"
#include "psearch/emit.hpp"
#include "psearch/grover_core.hpp"
#include "psearch/statevector.hpp"

namespace psearch {

namespace {

std::pair<long, long> parse_range(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range must be of the form lo:hi, got: " + text);
  try {
    size_t used = 0;
    const long lo = std::stol(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("");
    const std::string hi_part = text.substr(colon + 1);
    const long hi = std::stol(hi_part, &used);
    if (used != hi_part.size()) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be of the form lo:hi, got: " + text);
  }
}

int emit_to(const std::string& path, std::ostream& out, std::ostream& err,
            const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(out);
    return 0;
  }
  std::ofstream file(path);
  if (!file) {
    err << "error: cannot open output file: " << path << '\n';
    return 1;
  }
  write(file);
  if (!file.good()) {
    err << "error: failed writing output file: " << path << '\n';
    return 1;
  }
  return 0;
}

double trace_max_abs_diff(const RunTrace& a, const RunTrace& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.states.size(); ++i) {
    m = std::max(m, std::abs(a.states[i].amp_target - b.states[i].amp_target));
    m = std::max(m, std::abs(a.states[i].amp_block - b.states[i].amp_block));
    m = std::max(m, std::abs(a.states[i].amp_outside - b.states[i].amp_outside));
  }
  return m;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"partial quantum search: two-engine simulator and verification workbench",
               "psearch"};
  app.require_subcommand(1);

  long n = 0, k = 0, j1 = 0, j2 = 0;
  long sv_cap = kDefaultSvCap;
  long seed = 0;
  bool no_final = false;
  std::string engine = "reduced";
  std::string fmt_run = "json", fmt_sweep = "csv", fmt_verify = "json",
              fmt_bound = "human";
  std::string out_path, j1_range, j2_range;

  const auto add_common = [&](CLI::App* sub, std::string& fmt) {
    sub->add_option("--n", n, "number of items N")->required();
    sub->add_option("--k", k, "number of blocks K (must divide N)")->required();
    sub->add_option("--format", fmt, "output format: json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    sub->add_option("--out", out_path, "write the report to a file instead of stdout");
    sub->add_option("--seed", seed, "reserved; the dynamics are deterministic");
  };

  CLI::App* run = app.add_subcommand("run", "simulate one schedule on one space");
  add_common(run, fmt_run);
  run->add_option("--j1", j1, "global iterations (default: canonical count)")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--j2", j2, "local iterations (default: canonical count)")
      ->check(CLI::NonNegativeNumber);
  run->add_flag("--no-final", no_final, "skip the final global step");
  run->add_option("--engine", engine, "reduced|statevector|both")
      ->check(CLI::IsMember({"reduced", "statevector", "both"}));
  run->add_option("--sv-cap", sv_cap, "statevector item cap (default 16384)")
      ->check(CLI::PositiveNumber);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "grid of schedules; every grid point applies the final step");
  add_common(sweep, fmt_sweep);
  sweep->add_option("--j1-range", j1_range, "global iterations as lo:hi")->required();
  sweep->add_option("--j2-range", j2_range, "local iterations as lo:hi")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "compare every closed-form prediction against simulation");
  add_common(verify, fmt_verify);

  CLI::App* bound = app.add_subcommand(
      "bound", "query-count lower bound and canonical slack");
  add_common(bound, fmt_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const SearchSpace space = make_space(n, k);

    if (run->parsed()) {
      RunReport rep;
      rep.space = space;
      rep.engine = engine;
      Schedule sched;
      const bool explicit_j1 = run->count("--j1") > 0;
      const bool explicit_j2 = run->count("--j2") > 0;
      if (!explicit_j1 || !explicit_j2) {
        try {
          rep.canonical = canonical_schedule(space);
        } catch (const RawNegative& e) {
          err << "error: " << e.what() << "; pass --j1 and --j2 explicitly\n";
          return 2;
        }
        sched = rep.canonical->schedule;
      }
      if (explicit_j1) sched.global_iters = j1;
      if (explicit_j2) sched.local_iters = j2;
      sched.apply_final_step = !no_final;
      rep.schedule = sched;

      if (engine == "reduced" || engine == "both")
        rep.reduced = partial_search(space, sched);
      if (engine == "statevector" || engine == "both")
        rep.statevector = sv_partial_search(space, sched, sv_cap);
      if (engine == "both")
        rep.max_abs_diff = trace_max_abs_diff(*rep.reduced, *rep.statevector);

      const Format f = parse_format(fmt_run);
      return emit_to(out_path, out, err,
                     [&](std::ostream& o) { emit_run(rep, f, o); });
    }

    if (sweep->parsed()) {
      const auto [j1_lo, j1_hi] = parse_range(j1_range);
      const auto [j2_lo, j2_hi] = parse_range(j2_range);
      const SweepResult res = sweep_schedules(space, j1_lo, j1_hi, j2_lo, j2_hi);
      const Format f = parse_format(fmt_sweep);
      return emit_to(out_path, out, err,
                     [&](std::ostream& o) { emit_sweep(res, f, o); });
    }

    if (verify->parsed()) {
      const std::vector<Prediction> preds = verify_all(space);
      const Format f = parse_format(fmt_verify);
      const int rc = emit_to(out_path, out, err, [&](std::ostream& o) {
        emit_verify(space, preds, f, o);
      });
      if (rc != 0) return rc;
      for (const Prediction& p : preds)
        if (!p.passed) return 1;
      return 0;
    }

    if (bound->parsed()) {
      BoundReport rep;
      rep.space = space;
      rep.bound = lower_bound(space);
      try {
        const CanonicalSchedule c = canonical_schedule(space);
        rep.canonical_queries = query_count(c.schedule);
        rep.slack = static_cast<double>(*rep.canonical_queries) - rep.bound;
      } catch (const RawNegative&) {
      }
      const Format f = parse_format(fmt_bound);
      return emit_to(out_path, out, err,
                     [&](std::ostream& o) { emit_bound(rep, f, o); });
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace psearch
