#ifndef BDUAL_CLI_HPP
#define BDUAL_CLI_HPP

// Command-line front end. Subcommands:
//
//   relations  --family heckeB|duplex --r R --m M [--dump DIR]
//   omega      --r R --m M [--I 2,3 --J 1]
//   qaction    --r R --m M [--gen NAME [--dump DIR]]
//   duality    --r R --m M --side levi|full --mode exact|eval [--seed S]
//   semisimple --r R --m M
//   schur      --r R --m M [--ambient N]
//   report-all --r R --m M [--mode exact|eval] [--seed S] [--ambient N]
//
// Every run prints one line per check and emits a JSON report (to --out FILE
// when given, to stdout otherwise). Exit code 0 iff no check failed; checks
// suppressed by size caps are reported as "skipped" and do not fail the run.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bdual/commutant.hpp"
#include "bdual/report.hpp"

namespace bdual {

namespace detail_cli {

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoi(tok));
  }
  return out;
}

inline std::string word_str(const BWord& w) {
  if (w.empty()) return "(empty word)";
  std::string s;
  for (const BLetter& letter : w) {
    if (!s.empty()) s += " ";
    s += "T" + std::to_string(letter.i) + (letter.e < 0 ? "^-1" : "");
  }
  return s;
}

// Runs fn, mapping a SizeGuardError to a single skipped entry.
inline std::vector<ReportEntry> guarded(
    const std::string& label, const std::function<std::vector<ReportEntry>()>& fn) {
  try {
    return fn();
  } catch (const SizeGuardError& e) {
    return {entry_of(CheckItem::skip(label, e.what()))};
  }
}

struct SuiteTiming {
  std::string label;
  int64_t ms;
};

class Runner {
 public:
  Runner(std::ostream& out, bool timings) : out_(out), timings_(timings) {}

  // Runs one suite, appends its entries, records wall time.
  void run(const std::string& label,
           const std::function<std::vector<ReportEntry>()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<ReportEntry> got = guarded(label, fn);
    auto t1 = std::chrono::steady_clock::now();
    int64_t ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    timings_log_.push_back({label, ms});
    for (auto& e : got) {
      if (timings_) e.wall_ms = ms;  // suite-level measurement
      entries_.push_back(std::move(e));
    }
  }

  const std::vector<ReportEntry>& entries() const { return entries_; }

  int finish(const nlohmann::ordered_json& config, uint64_t seed,
             const std::string& out_path) {
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& e : entries_) {
      if (e.item.status == "passed") {
        ++passed;
        out_ << "[PASS] " << e.item.name << "\n";
      } else if (e.item.status == "skipped") {
        ++skipped;
        out_ << "[SKIP] " << e.item.name
             << (e.item.detail.empty() ? "" : " -- " + e.item.detail) << "\n";
      } else {
        ++failed;
        out_ << "[FAIL] " << e.item.name
             << (e.item.detail.empty() ? "" : " -- " + e.item.detail) << "\n";
      }
    }
    for (const auto& t : timings_log_)
      out_ << "# " << t.label << " took " << t.ms << " ms\n";
    out_ << entries_.size() << " checks: " << passed << " passed, " << failed
         << " failed, " << skipped << " skipped\n";

    nlohmann::ordered_json report =
        build_report(config, seed, entries_, timings_);
    std::string text = render_report(report);
    if (out_path.empty()) {
      out_ << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        out_ << "cannot write report to " << out_path << "\n";
        return 2;
      }
      f << text;
      out_ << "report written to " << out_path << "\n";
    }
    return failed == 0 ? 0 : 1;
  }

 private:
  std::ostream& out_;
  bool timings_;
  std::vector<ReportEntry> entries_;
  std::vector<SuiteTiming> timings_log_;
};

inline void dump_op(const LinOp& op, const std::string& dir,
                    const std::string& name, std::ostream& out) {
  std::filesystem::create_directories(dir);
  std::string path = dir + "/" + name + ".txt";
  std::ofstream f(path, std::ios::binary);
  op.dump(f);
  out << "wrote " << path << "\n";
}

// --- suite wrappers ---------------------------------------------------------

inline std::vector<ReportEntry> suite_relations(const std::string& family,
                                                int r, int m, int64_t dim_cap,
                                                const std::string& dump_dir,
                                                std::ostream& out) {
  if (family == "heckeB") {
    HeckeFamily fam = build_hecke_family(TensorBasis(2 * r + 4, m, dim_cap));
    if (!dump_dir.empty())
      for (int i = 0; i < m; ++i) {
        dump_op(fam.H[static_cast<size_t>(i)], dump_dir,
                "H" + std::to_string(i), out);
        dump_op(fam.Hinv[static_cast<size_t>(i)], dump_dir,
                "Hinv" + std::to_string(i), out);
      }
    return entries_of(check_hecke_relations(fam));
  }
  DuplexFamily fam = build_duplex_family(r, m, dim_cap);
  if (!dump_dir.empty())
    for (const auto& g : duplex_generator_ops(fam)) {
      std::string name = g.name;
      for (char& ch : name)
        if (ch == '(' || ch == ')' || ch == ',') ch = '_';
      dump_op(g.op, dump_dir, name, out);
    }
  return entries_of(check_duplex_relations(fam));
}

inline std::vector<ReportEntry> suite_omega(int r, int m,
                                            const std::string& I_str,
                                            const std::string& J_str,
                                            int64_t dim_cap,
                                            std::ostream& out) {
  if (I_str.empty() && J_str.empty())
    return entries_of(check_omega(r, m, dim_cap));
  std::vector<int> I = parse_int_list(I_str);
  std::vector<int> J = parse_int_list(J_str);
  BWord word = omega_word(I, J, m);
  out << "word: " << word_str(word) << "\n";
  std::string name = "duplex.omega.I" + (I_str.empty() ? "-" : I_str) + ".J" +
                     (J_str.empty() ? "-" : J_str);
  ReportEntry e = entry_of(check_omega_pair(I, J, word, r, m, name));
  e.dimensions["rank"] = static_cast<int64_t>(
      component_tuples(I, J, r, m).size());
  return {e};
}

inline std::vector<ReportEntry> suite_qaction(int r, int m, int64_t dim_cap) {
  return entries_of(check_qaction(r, m, dim_cap));
}

inline int dump_qaction_generator(int r, int m, int64_t dim_cap,
                                  const std::string& gen,
                                  const std::string& dump_dir,
                                  std::ostream& out, std::ostream& err) {
  TensorBasis basis(2 * r + 4, m, dim_cap);
  LinOp op(basis.dim());
  bool found = false;
  for (const auto& g : full_iota_generators(basis, r))
    if (g.name == gen) {
      op = g.op;
      found = true;
      break;
    }
  if (!found && !gen.empty() &&
      (gen[0] == 'E' || gen[0] == 'F' || gen[0] == 'K')) {
    try {
      int i = std::stoi(gen.substr(1));
      if (gen[0] == 'E') op = op_E(basis, i);
      if (gen[0] == 'F') op = op_F(basis, i);
      if (gen[0] == 'K') op = op_K(basis, i, 1);
      found = true;
    } catch (const std::exception&) {
      found = false;
    }
  }
  if (!found) {
    err << "unknown generator name: " << gen << "\n";
    return 2;
  }
  if (dump_dir.empty())
    op.dump(out);
  else
    dump_op(op, dump_dir, gen, out);
  return 0;
}

inline std::vector<ReportEntry> suite_duality(int r, int m,
                                              const std::string& side,
                                              const std::string& mode,
                                              uint64_t seed,
                                              int64_t commutant_cap) {
  DualityReport rep =
      double_centralizer_check(r, m, side, mode, seed, commutant_cap);
  std::vector<ReportEntry> out;
  for (size_t k = 0; k < rep.items.size(); ++k) {
    ReportEntry e = entry_of(rep.items[k]);
    if (k == 0 && rep.quantum_closure_dim >= 0) {
      e.dimensions["closure_quantum"] = rep.quantum_closure_dim;
      e.dimensions["closure_hecke_side"] = rep.hecke_closure_dim;
      e.points = rep.points_used;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ReportEntry> suite_semisimple(int r, int m,
                                                 int64_t commutant_cap) {
  SemisimpleReport rep = semisimplicity_check(r, m, commutant_cap);
  std::vector<ReportEntry> out;
  for (size_t k = 0; k < rep.items.size(); ++k) {
    ReportEntry e = entry_of(rep.items[k]);
    if (k == 0 && rep.algebra_dim >= 0) {
      e.dimensions["algebra_dim"] = rep.algebra_dim;
      e.dimensions["gram_rank"] = rep.gram_rank;
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<ReportEntry> suite_schur(int r, int m, int ambient,
                                            int64_t dim_cap,
                                            int64_t commutant_cap) {
  SchurReport rep = permutation_module_check(ambient, m, dim_cap);
  std::vector<ReportEntry> out;
  for (size_t k = 0; k < rep.items.size(); ++k) {
    ReportEntry e = entry_of(rep.items[k]);
    e.dimensions["orbit"] = rep.orbit_dims[k];
    e.dimensions["expected"] = rep.expected_dims[k];
    out.push_back(std::move(e));
  }
  for (auto& it : gradation_check(r, m, commutant_cap))
    out.push_back(entry_of(std::move(it)));
  return out;
}

}  // namespace detail_cli

// Entry point shared by the binary and the in-process tests. args excludes
// the program name.
inline int run_cli(const std::vector<std::string>& args,
                   std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using detail_cli::Runner;

  CLI::App app{"Exact verification suites for the braid/duplex actions and "
               "coideal operators on enhanced tensor space"};
  app.require_subcommand(1);

  int r = 1, m = 2, ambient = 0;
  uint64_t seed = 0;
  bool timings = false;
  std::string out_path, dump_dir, family = "heckeB", side = "levi",
              mode = "exact", gen, I_str, J_str;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--r", r, "half-rank parameter (alphabet 2r+4)")
        ->capture_default_str();
    sub->add_option("--m", m, "number of tensor factors")
        ->capture_default_str();
    sub->add_option("--seed", seed, "seed for evaluation-point sampling")
        ->capture_default_str();
    sub->add_flag("--timings", timings,
                  "include wall-clock fields in the JSON report");
    sub->add_option("--out", out_path, "write the JSON report to this file");
  };

  CLI::App* relations =
      app.add_subcommand("relations", "verify the defining relations");
  add_common(relations);
  relations->add_option("--family", family, "heckeB or duplex")
      ->check(CLI::IsMember({"heckeB", "duplex"}))
      ->capture_default_str();
  relations->add_option("--dump", dump_dir,
                        "dump generator matrices into this directory");

  CLI::App* omega = app.add_subcommand(
      "omega", "verify the component transport words");
  add_common(omega);
  omega->add_option("--I", I_str, "comma-separated inner positions");
  omega->add_option("--J", J_str, "comma-separated low extra positions");

  CLI::App* qaction = app.add_subcommand(
      "qaction", "verify the quantum-group and coideal action laws");
  add_common(qaction);
  qaction->add_option("--gen", gen, "dump a single generator matrix instead");
  qaction->add_option("--dump", dump_dir, "directory for --gen output");

  CLI::App* duality =
      app.add_subcommand("duality", "verify the double-centralizer theorems");
  add_common(duality);
  duality->add_option("--side", side, "levi or full")
      ->check(CLI::IsMember({"levi", "full"}))
      ->capture_default_str();
  duality->add_option("--mode", mode, "exact or eval")
      ->check(CLI::IsMember({"exact", "eval"}))
      ->capture_default_str();

  CLI::App* semisimple = app.add_subcommand(
      "semisimple", "verify nondegeneracy of the trace form");
  add_common(semisimple);

  CLI::App* schur = app.add_subcommand(
      "schur", "verify permutation-module dimensions and the gradation");
  add_common(schur);
  schur->add_option("--ambient", ambient,
                    "ambient alphabet size (default 2r+2)");

  CLI::App* report_all = app.add_subcommand(
      "report-all", "run every suite in a fixed order");
  add_common(report_all);
  report_all->add_option("--mode", mode, "exact or eval (default eval)")
      ->check(CLI::IsMember({"exact", "eval"}));
  report_all->add_option("--ambient", ambient,
                         "ambient alphabet size (default 2r+2)");

  std::vector<const char*> argv;
  argv.push_back("bdual");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // CLI11 prints help to the first stream, errors to the second.
    return app.exit(e, out, err);
  }

  const int64_t dim_cap = default_dim_cap();
  const int64_t commutant_cap = default_commutant_cap();
  if (ambient == 0) ambient = 2 * r + 2;
  if (app.got_subcommand(report_all) && report_all->count("--mode") == 0)
    mode = "eval";

  Runner runner(out, timings);
  nlohmann::ordered_json config;

  auto run_relations = [&](const std::string& fam_name) {
    runner.run("relations." + fam_name, [&, fam_name] {
      return detail_cli::suite_relations(fam_name, r, m, dim_cap, dump_dir,
                                         out);
    });
  };

  try {
    if (app.got_subcommand(relations)) {
      config["subcommand"] = "relations";
      config["family"] = family;
      config["r"] = r;
      config["m"] = m;
      run_relations(family);
    } else if (app.got_subcommand(omega)) {
      config["subcommand"] = "omega";
      config["r"] = r;
      config["m"] = m;
      config["I"] = I_str;
      config["J"] = J_str;
      runner.run("omega", [&] {
        return detail_cli::suite_omega(r, m, I_str, J_str, dim_cap, out);
      });
    } else if (app.got_subcommand(qaction)) {
      if (!gen.empty())
        return detail_cli::dump_qaction_generator(r, m, dim_cap, gen, dump_dir,
                                                  out, err);
      config["subcommand"] = "qaction";
      config["r"] = r;
      config["m"] = m;
      runner.run("qaction",
                 [&] { return detail_cli::suite_qaction(r, m, dim_cap); });
    } else if (app.got_subcommand(duality)) {
      config["subcommand"] = "duality";
      config["r"] = r;
      config["m"] = m;
      config["side"] = side;
      config["mode"] = mode;
      runner.run("duality." + side + "." + mode, [&] {
        return detail_cli::suite_duality(r, m, side, mode, seed,
                                         commutant_cap);
      });
    } else if (app.got_subcommand(semisimple)) {
      config["subcommand"] = "semisimple";
      config["r"] = r;
      config["m"] = m;
      runner.run("semisimple", [&] {
        return detail_cli::suite_semisimple(r, m, commutant_cap);
      });
    } else if (app.got_subcommand(schur)) {
      config["subcommand"] = "schur";
      config["r"] = r;
      config["m"] = m;
      config["ambient"] = ambient;
      runner.run("schur", [&] {
        return detail_cli::suite_schur(r, m, ambient, dim_cap, commutant_cap);
      });
    } else if (app.got_subcommand(report_all)) {
      config["subcommand"] = "report-all";
      config["r"] = r;
      config["m"] = m;
      config["mode"] = mode;
      config["ambient"] = ambient;
      run_relations("heckeB");
      run_relations("duplex");
      runner.run("omega",
                 [&] { return entries_of(check_omega(r, m, dim_cap)); });
      runner.run("qaction",
                 [&] { return detail_cli::suite_qaction(r, m, dim_cap); });
      runner.run("schur", [&] {
        return detail_cli::suite_schur(r, m, ambient, dim_cap, commutant_cap);
      });
      runner.run("duality.levi." + mode, [&] {
        return detail_cli::suite_duality(r, m, "levi", mode, seed,
                                         commutant_cap);
      });
      runner.run("duality.full." + mode, [&] {
        return detail_cli::suite_duality(r, m, "full", mode, seed,
                                         commutant_cap);
      });
      runner.run("semisimple", [&] {
        return detail_cli::suite_semisimple(r, m, commutant_cap);
      });
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  config["dim_cap"] = dim_cap;
  config["commutant_cap"] = commutant_cap;
  return runner.finish(config, seed, out_path);
}

}  // namespace bdual

#endif  // BDUAL_CLI_HPP
