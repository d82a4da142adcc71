#include "psearch/emit.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "psearch/grover_core.hpp"

namespace psearch {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt4(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

ordered_json space_json(const SearchSpace& sp) {
  return ordered_json{{"n_items", sp.n_items},
                      {"n_blocks", sp.n_blocks},
                      {"block_size", sp.block_size},
                      {"target_block", sp.target_block},
                      {"target_item", sp.target_item}};
}

ordered_json schedule_json(const Schedule& s) {
  return ordered_json{{"global_iters", s.global_iters},
                      {"local_iters", s.local_iters},
                      {"apply_final_step", s.apply_final_step}};
}

ordered_json trace_json(const RunTrace& t) {
  ordered_json steps = ordered_json::array();
  for (const ReducedState& s : t.states)
    steps.push_back({s.amp_target, s.amp_block, s.amp_outside});
  const ReducedState& fin = t.states.back();
  return ordered_json{
      {"query_count", t.query_count},
      {"block_success_probability", t.block_success_probability},
      {"outside_mass", t.outside_mass},
      {"final",
       {{"amp_target", fin.amp_target},
        {"amp_block", fin.amp_block},
        {"amp_outside", fin.amp_outside}}},
      {"trace", steps}};
}

void trace_csv(const RunTrace& t, const std::string& engine, std::ostream& out) {
  for (size_t i = 0; i < t.states.size(); ++i) {
    const ReducedState& s = t.states[i];
    out << engine << ',' << i << ',' << fmt_g12(s.amp_target) << ','
        << fmt_g12(s.amp_block) << ',' << fmt_g12(s.amp_outside) << ','
        << fmt_g12(block_success_probability(s)) << '\n';
  }
}

void run_human(const RunTrace& t, const std::string& engine, std::ostream& out) {
  const ReducedState& fin = t.states.back();
  out << engine << " final: amp_target=" << fmt4(fin.amp_target)
      << " amp_block=" << fmt4(fin.amp_block)
      << " amp_outside=" << fmt4(fin.amp_outside) << '\n'
      << engine << " block_success_probability=" << fmt4(t.block_success_probability)
      << " outside_mass=" << fmt4(t.outside_mass) << '\n';
}

} // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "human") return Format::human;
  throw std::invalid_argument("unknown format: " + name);
}

void emit_run(const RunReport& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["version"] = kVersion;
      doc["command"] = "run";
      doc["space"] = space_json(r.space);
      doc["schedule"] = schedule_json(r.schedule);
      if (r.canonical)
        doc["canonical_raw"] = {
            {"raw_global_iters", r.canonical->raw_global_iters},
            {"raw_local_iters", r.canonical->raw_local_iters}};
      doc["engine"] = r.engine;
      if (r.reduced) doc["reduced"] = trace_json(*r.reduced);
      if (r.statevector) doc["statevector"] = trace_json(*r.statevector);
      if (r.max_abs_diff) doc["max_abs_diff"] = *r.max_abs_diff;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "engine,step,amp_target,amp_block,amp_outside,"
             "block_success_probability\n";
      if (r.reduced) trace_csv(*r.reduced, "reduced", out);
      if (r.statevector) trace_csv(*r.statevector, "statevector", out);
      break;
    }
    case Format::human: {
      out << "space: n_items=" << r.space.n_items
          << " n_blocks=" << r.space.n_blocks
          << " block_size=" << r.space.block_size << '\n';
      out << "schedule: global_iters=" << r.schedule.global_iters
          << " local_iters=" << r.schedule.local_iters
          << " final_step=" << (r.schedule.apply_final_step ? "yes" : "no")
          << " (queries " << query_count(r.schedule) << ")\n";
      if (r.canonical)
        out << "canonical raw counts: global=" << fmt4(r.canonical->raw_global_iters)
            << " local=" << fmt4(r.canonical->raw_local_iters) << '\n';
      if (r.reduced) run_human(*r.reduced, "reduced", out);
      if (r.statevector) run_human(*r.statevector, "statevector", out);
      if (r.max_abs_diff)
        out << "max_abs_diff=" << fmt_g12(*r.max_abs_diff) << '\n';
      break;
    }
  }
}

void emit_sweep(const SweepResult& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["version"] = kVersion;
      doc["command"] = "sweep";
      doc["space"] = space_json(r.space);
      ordered_json grid = ordered_json::array();
      for (const SweepEntry& e : r.grid)
        grid.push_back({{"j1", e.j1},
                        {"j2", e.j2},
                        {"queries", e.queries},
                        {"probability", e.probability}});
      doc["grid"] = grid;
      doc["best_schedule"] = schedule_json(r.best_schedule);
      doc["best_probability"] = r.best_probability;
      doc["canonical_schedule"] =
          r.canonical ? schedule_json(*r.canonical) : ordered_json(nullptr);
      doc["canonical_gap"] =
          r.canonical_gap ? ordered_json(*r.canonical_gap) : ordered_json(nullptr);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "j1,j2,queries,probability\n";
      for (const SweepEntry& e : r.grid)
        out << e.j1 << ',' << e.j2 << ',' << e.queries << ','
            << fmt_g12(e.probability) << '\n';
      break;
    }
    case Format::human: {
      out << "j1      j2      queries probability\n";
      for (const SweepEntry& e : r.grid) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%-7ld %-7ld %-7ld %.4f\n", e.j1, e.j2,
                      e.queries, e.probability);
        out << buf;
      }
      out << "best: j1=" << r.best_schedule.global_iters
          << " j2=" << r.best_schedule.local_iters
          << " probability=" << fmt4(r.best_probability) << '\n';
      if (r.canonical)
        out << "canonical: j1=" << r.canonical->global_iters
            << " j2=" << r.canonical->local_iters
            << " (gap " << *r.canonical_gap << ")\n";
      else
        out << "canonical: undefined for this geometry\n";
      break;
    }
  }
}

void emit_verify(const SearchSpace& space, const std::vector<Prediction>& preds,
                 Format format, std::ostream& out) {
  bool all = true;
  for (const Prediction& p : preds) all = all && p.passed;

  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["version"] = kVersion;
      doc["command"] = "verify";
      doc["space"] = space_json(space);
      ordered_json arr = ordered_json::array();
      for (const Prediction& p : preds) {
        ordered_json e;
        e["label"] = label_name(p.label);
        e["predicted"] =
            p.predicted ? ordered_json(*p.predicted) : ordered_json(nullptr);
        e["simulated"] =
            p.simulated ? ordered_json(*p.simulated) : ordered_json(nullptr);
        e["abs_error"] = p.abs_error;
        e["rel_error"] = p.rel_error;
        e["tolerance"] = p.tolerance;
        e["tolerance_kind"] = p.tolerance_kind;
        e["passed"] = p.passed;
        e["note"] = p.note;
        ordered_json detail = ordered_json::object();
        for (const auto& [k, v] : p.detail) detail[k] = v;
        e["detail"] = detail;
        arr.push_back(e);
      }
      doc["predictions"] = arr;
      doc["all_passed"] = all;
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "label,predicted,simulated,abs_error,rel_error,tolerance,passed,"
             "note\n";
      for (const Prediction& p : preds) {
        out << label_name(p.label) << ','
            << (p.predicted ? fmt_g12(*p.predicted) : "") << ','
            << (p.simulated ? fmt_g12(*p.simulated) : "") << ','
            << fmt_g12(p.abs_error) << ',' << fmt_g12(p.rel_error) << ','
            << fmt_g12(p.tolerance) << ',' << (p.passed ? "true" : "false")
            << ',' << p.note << '\n';
      }
      break;
    }
    case Format::human: {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-13s %-12s %-12s %-10s %-10s %-10s %s\n",
                    "label", "predicted", "simulated", "abs_err", "rel_err",
                    "tol", "status");
      out << buf;
      for (const Prediction& p : preds) {
        const char* status =
            !p.note.empty() ? "skip" : (p.passed ? "pass" : "FAIL");
        std::snprintf(
            buf, sizeof buf, "%-13s %-12s %-12s %-10s %-10s %-10s %s%s%s\n",
            label_name(p.label),
            p.predicted ? fmt4(*p.predicted).c_str() : "-",
            p.simulated ? fmt4(*p.simulated).c_str() : "-",
            fmt4(p.abs_error).c_str(), fmt4(p.rel_error).c_str(),
            fmt4(p.tolerance).c_str(), status, p.note.empty() ? "" : "  ",
            p.note.c_str());
        out << buf;
      }
      out << "all passed: " << (all ? "yes" : "no") << '\n';
      break;
    }
  }
}

void emit_bound(const BoundReport& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      ordered_json doc;
      doc["version"] = kVersion;
      doc["command"] = "bound";
      doc["space"] = space_json(r.space);
      doc["lower_bound"] = r.bound;
      doc["canonical_queries"] = r.canonical_queries
                                     ? ordered_json(*r.canonical_queries)
                                     : ordered_json(nullptr);
      doc["slack"] = r.slack ? ordered_json(*r.slack) : ordered_json(nullptr);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      out << "lower_bound,canonical_queries,slack\n";
      out << fmt_g12(r.bound) << ','
          << (r.canonical_queries ? std::to_string(*r.canonical_queries) : "")
          << ',' << (r.slack ? fmt_g12(*r.slack) : "") << '\n';
      break;
    }
    case Format::human: {
      out << "lower_bound: " << fmt4(r.bound) << '\n';
      if (r.canonical_queries) {
        out << "canonical_queries: " << *r.canonical_queries << '\n';
        out << "slack: " << fmt4(*r.slack) << '\n';
      } else {
        out << "canonical_queries: n/a (canonical schedule undefined)\n";
        out << "slack: n/a\n";
      }
      break;
    }
  }
}

} // namespace psearch
