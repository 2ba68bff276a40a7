// Copyright 2026 The sqkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sqctl: command-line driver for the sqkit experiments. Every
// subcommand reads an optional key=value config file (flags win),
// runs one experiment, and writes a CSV or JSON artifact whose header
// carries the tool version, the resolved configuration, and the seed
// where one applies. No timestamps: identical inputs give
// byte-identical outputs.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "sq/decoherence.hpp"
#include "sq/hubbard.hpp"
#include "sq/logical.hpp"
#include "sq/sq_design.hpp"
#include "sq/two_sq.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Report {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void param(const std::string& key, const std::string& value) {
    config.emplace_back(key, value);
  }
  void param(const std::string& key, double value) { param(key, fmt(value)); }
  void param(const std::string& key, int value) {
    param(key, std::to_string(value));
  }
};

void write_csv(const Report& r, std::ostream& os) {
  os << "# sqctl " << kVersion << "\n";
  os << "# subcommand = " << r.subcommand << "\n";
  for (const auto& [k, v] : r.config) os << "# " << k << " = " << v << "\n";
  for (std::size_t c = 0; c < r.columns.size(); ++c)
    os << (c ? "," : "") << r.columns[c];
  os << "\n";
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? "," : "") << row[c];
    os << "\n";
  }
}

void write_json(const Report& r, std::ostream& os) {
  nlohmann::ordered_json j;
  j["tool"] = "sqctl";
  j["version"] = kVersion;
  j["subcommand"] = r.subcommand;
  nlohmann::ordered_json cfg;
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  os << j.dump(2) << "\n";
}

void write_report(const Report& r, const std::string& path,
                  const std::string& format) {
  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file)
      throw sq::Error(sq::ErrorCode::Domain, "cannot open output file " + path);
  }
  std::ostream& os = path.empty() ? std::cout : file;
  if (format == "json")
    write_json(r, os);
  else
    write_csv(r, os);
}

// "a-b" or "a,b" in the 1-based site labels used in reports
sq::EdgeId parse_edge(const std::string& text, int n_sites) {
  const auto sep = text.find_first_of("-,");
  if (sep == std::string::npos)
    throw sq::Error(sq::ErrorCode::Domain, "edge must look like a-b: " + text);
  const int a = std::stoi(text.substr(0, sep));
  const int b = std::stoi(text.substr(sep + 1));
  if (a < 1 || a > n_sites || b < 1 || b > n_sites || a == b)
    throw sq::Error(sq::ErrorCode::IndexOutOfRange,
                    "edge sites out of range: " + text);
  return sq::EdgeId(a - 1, b - 1);
}

std::string edge_label(sq::EdgeId e) {
  return std::to_string(e.a + 1) + "-" + std::to_string(e.b + 1);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty())
    throw sq::Error(sq::ErrorCode::Domain, "empty list: " + text);
  return out;
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

sq::SqLayout solved_layout(int chain_len, double j16,
                           std::pair<double, double> bracket,
                           double* closed_form = nullptr) {
  std::vector<double> chain(chain_len - 1, 1.0);
  sq::SqLayout layout = sq::rhombus_layout(chain_len, j16, chain);
  const sq::EdgeId free_edge = layout.chain_edges[(chain_len - 1) / 2];
  sq::solve_mediator_coupling(layout, free_edge, bracket);
  if (closed_form)
    *closed_form = chain_len == 2 ? sq::j56_closed_form(j16)
                                  : std::numeric_limits<double>::quiet_NaN();
  return layout;
}

// ---------------------------------------------------------------- table1

Report run_table1(double lo, double hi) {
  Report r;
  r.subcommand = "table1";
  r.param("bracket_lo", lo);
  r.param("bracket_hi", hi);
  r.columns = {"j16", "j56_closed", "j56_numeric", "gap"};
  for (double j16 : {1.0, 1.17672, 2.0}) {
    double cf = 0.0;
    sq::SqLayout layout = solved_layout(2, j16, {lo, hi}, &cf);
    const double j56 = layout.graph.coupling(layout.chain_edges.front());
    r.rows.push_back({fmt(j16), fmt(cf), fmt(j56), fmt(sq::energy_gap(layout))});
  }
  return r;
}

// ----------------------------------------------------------- solve / gap

Report run_solve(double j16, int chain_len, double lo, double hi) {
  Report r;
  r.subcommand = "solve";
  r.param("j16", j16);
  r.param("chain_len", chain_len);
  r.param("bracket_lo", lo);
  r.param("bracket_hi", hi);
  r.columns = {"j16", "j56_closed", "j56_numeric", "gap"};
  double cf = 0.0;
  sq::SqLayout layout = solved_layout(chain_len, j16, {lo, hi}, &cf);
  const sq::EdgeId free_edge = layout.chain_edges[(chain_len - 1) / 2];
  r.rows.push_back({fmt(j16), fmt(cf), fmt(layout.graph.coupling(free_edge)),
                    fmt(sq::energy_gap(layout))});
  return r;
}

Report run_gap(double j16) {
  Report r;
  r.subcommand = "gap";
  r.param("j16", j16);
  r.columns = {"j16", "j56", "gap"};
  const sq::SqLayout layout = sq::standard_layout(j16);
  r.rows.push_back({fmt(j16), fmt(sq::j56_closed_form(j16)),
                    fmt(sq::energy_gap(layout))});
  return r;
}

// ---------------------------------------------------------------- correct

Report run_correct(double j16, const std::string& perturbed,
                   double perturbed_value, const std::string& free_e) {
  Report r;
  r.subcommand = "correct";
  r.param("j16", j16);
  r.param("perturbed_edge", perturbed);
  r.param("perturbed_value", perturbed_value);
  r.param("free_edge", free_e);
  r.columns = {"j16", "perturbed_edge", "perturbed_value", "free_edge",
               "corrected_value", "gap"};
  sq::SqLayout layout = sq::standard_layout(j16);
  const sq::EdgeId pe = parse_edge(perturbed, layout.n_sites());
  const sq::EdgeId fe = parse_edge(free_e, layout.n_sites());
  sq::SolveOptions opts;
  opts.singlet_tol = 1e-6;  // isotropic perturbations preserve SU(2)
  const double corrected =
      sq::correct_coupling(layout, pe, perturbed_value, fe, opts);
  if (layout.graph.has_edge(pe))
    layout.graph.set_coupling(pe, perturbed_value);
  else
    layout.graph.add_edge(pe.a, pe.b, perturbed_value);
  layout.graph.set_coupling(fe, corrected);
  r.rows.push_back({fmt(j16), edge_label(pe), fmt(perturbed_value),
                    edge_label(fe), fmt(corrected),
                    fmt(sq::energy_gap(layout))});
  return r;
}

// ------------------------------------------------------------- min-attach

Report run_min_attach(int chain_len, double lo, double hi) {
  Report r;
  r.subcommand = "min-attach";
  r.param("chain_len", chain_len);
  r.param("range_lo", lo);
  r.param("range_hi", hi);
  r.columns = {"chain_len", "min_j16"};
  r.rows.push_back(
      {std::to_string(chain_len), fmt(sq::min_attachment(chain_len, {lo, hi}))});
  return r;
}

// ------------------------------------------------------------------- axes

Report run_axes(const std::string& layout_name, double j16) {
  Report r;
  r.subcommand = "axes";
  r.param("layout", layout_name);
  r.columns = {"site_a", "site_b", "c0", "cx", "cz", "angle_to_z_deg"};

  sq::LogicalSubspace sub;
  if (layout_name == "k4") {
    sub = sq::ground_subspace(sq::CouplingGraph::complete(4, 1.0),
                              sq::EdgeId(0, 1));
  } else if (layout_name == "sq6") {
    r.param("j16", j16);
    sub = sq::ground_subspace(sq::standard_layout(j16));
  } else {
    throw sq::Error(sq::ErrorCode::Domain,
                    "layout must be sq6 or k4: " + layout_name);
  }
  const auto gz = sq::effective_generator(sub, sub.z_edge);
  for (int a = 0; a < sub.n_sites(); ++a)
    for (int b = a + 1; b < sub.n_sites(); ++b) {
      const auto g = sq::effective_generator(sub, sq::EdgeId(a, b));
      double angle = std::numeric_limits<double>::quiet_NaN();
      try {
        angle = sq::bloch_axis_angle(gz, g);
      } catch (const sq::Error&) {
        // identity-like generator: axis undefined, reported as nan
      }
      r.rows.push_back({std::to_string(a + 1), std::to_string(b + 1),
                        fmt(g.c0), fmt(g.cx), fmt(g.cz), fmt(angle)});
    }
  return r;
}

// -------------------------------------------------------------- gate ops

sq::TwoSqSystem make_system(const std::string& scheme, double j16) {
  const sq::SqLayout a = sq::standard_layout(j16);
  return sq::couple_sqs(a, a, sq::default_scheme_edges(scheme), scheme);
}

Report run_sweep_gate(const std::string& scheme, double j16, double jmax,
                      int points) {
  Report r;
  r.subcommand = "sweep-gate";
  r.param("scheme", scheme);
  r.param("j16", j16);
  r.param("jmax", jmax);
  r.param("points", points);
  r.columns = {"j_inter", "lam00",       "lam01",      "lam10",
               "lam11",   "leakage_gap", "min_overlap"};
  if (points < 1)
    throw sq::Error(sq::ErrorCode::Domain, "points must be positive");
  std::vector<double> js(points);
  for (int i = 0; i < points; ++i) js[i] = jmax * (i + 1) / points;
  const auto sweep = sq::sweep_inter_coupling(make_system(scheme, j16), js);
  for (const auto& p : sweep.points)
    r.rows.push_back({fmt(p.j_inter), fmt(p.lam00), fmt(p.lam01),
                      fmt(p.lam10), fmt(p.lam11), fmt(p.leakage_gap),
                      fmt(p.min_overlap)});
  return r;
}

Report run_cphase(const std::string& scheme, double j16, double j_inter) {
  Report r;
  r.subcommand = "cphase";
  r.param("scheme", scheme);
  r.param("j16", j16);
  r.param("j_inter", j_inter);
  r.columns = {"j_inter", "omega",        "duration", "alpha_a",
               "alpha_b", "global_phase", "fidelity"};
  const auto pulse = sq::cphase_pulse(make_system(scheme, j16), j_inter);
  r.rows.push_back({fmt(pulse.j_inter), fmt(pulse.omega), fmt(pulse.duration),
                    fmt(pulse.alpha_a), fmt(pulse.alpha_b),
                    fmt(pulse.global_phase), fmt(pulse.fidelity)});
  return r;
}

// ------------------------------------------------------------- precession

Report run_precession(const std::string& encodings, const std::string& j_list,
                      double hb, int samples, std::uint64_t seed) {
  Report r;
  r.subcommand = "precession";
  r.param("encodings", encodings);
  r.param("j_values_ueV", j_list);
  r.param("hb_ueV", hb);
  r.param("samples", samples);
  r.param("seed", std::to_string(seed));
  r.columns = {"encoding",     "J_ueV",      "Hb_ueV",
               "n",            "dT_median_ns", "dT_mean_ns",
               "dT_q1_ns",     "dT_q3_ns",   "excluded"};
  std::vector<sq::Encoding> encs;
  for (const auto& name : split_names(encodings))
    encs.push_back(sq::Encoding::from_label(name));
  const auto results =
      sq::precession_sweep(encs, parse_list(j_list), hb, samples, seed);
  for (const auto& res : results)
    r.rows.push_back({res.encoding.label(), fmt(res.j), fmt(res.hb),
                      std::to_string(res.n_samples), fmt(res.dt_median),
                      fmt(res.dt_mean), fmt(res.dt_q1), fmt(res.dt_q3),
                      std::to_string(res.excluded)});
  return r;
}

// ---------------------------------------------------------------- hubbard

Report run_hubbard(double j16, const std::string& u_list,
                   double tune_window) {
  Report r;
  r.subcommand = "hubbard";
  r.param("j16", j16);
  r.param("u_over_j", u_list);
  r.param("tune_window", tune_window);
  r.columns = {"U_over_J", "naive_t56", "tuned_t56", "residual_splitting",
               "gap_ratio"};
  const sq::SqLayout layout = sq::standard_layout(j16);
  const sq::EdgeId chain_edge = layout.chain_edges.front();
  const double heis_gap = sq::energy_gap(layout);
  for (double uoj : parse_list(u_list)) {
    const double u = uoj;  // rhombus coupling is the J unit
    const double naive =
        sq::hopping_from_exchange(layout.graph.coupling(chain_edge), u);
    const double tuned = sq::tune_hoppings(
        layout, u, chain_edge,
        {(1.0 - tune_window) * naive, (1.0 + tune_window) * naive});
    sq::HubbardModel model = sq::hubbard_from_layout(layout, u);
    for (auto& hop : model.hoppings)
      if (hop.id == chain_edge) hop.coupling = tuned;
    const auto spec = sq::half_filled_spectrum(model, 3);
    const double resid = spec.eigenvalues(1) - spec.eigenvalues(0);
    const double hubbard_gap = spec.eigenvalues(2) - spec.eigenvalues(0);
    r.rows.push_back({fmt(uoj), fmt(naive), fmt(tuned), fmt(resid),
                      fmt(hubbard_gap / heis_gap)});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("SQKIT_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"sqctl: exchange-cluster logical-qubit experiments"};
  app.set_version_flag("--version", kVersion);
  app.set_config("--config", "",
                 "key = value config file with [subcommand] sections");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1);

  std::string output, format = "csv";
  app.add_option("-o,--output", output, "output file (default: stdout)")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::function<Report()> action;

  {
    auto* c = app.add_subcommand("table1",
                                 "reproduce the reference coupling table");
    auto lo = std::make_shared<double>(0.05);
    auto hi = std::make_shared<double>(10.0);
    c->add_option("--bracket-lo", *lo, "solver bracket low")->capture_default_str();
    c->add_option("--bracket-hi", *hi, "solver bracket high")->capture_default_str();
    c->callback([&action, lo, hi] {
      action = [lo, hi] { return run_table1(*lo, *hi); };
    });
  }
  {
    auto* c = app.add_subcommand(
        "solve", "solve the mediator coupling for a given attachment");
    auto j16 = std::make_shared<double>(1.0);
    auto chain = std::make_shared<int>(2);
    auto lo = std::make_shared<double>(0.05);
    auto hi = std::make_shared<double>(12.0);
    c->add_option("--j16", *j16, "attachment coupling")->required();
    c->add_option("--chain-len", *chain, "mediator chain length (even)")
        ->capture_default_str();
    c->add_option("--bracket-lo", *lo, "solver bracket low")->capture_default_str();
    c->add_option("--bracket-hi", *hi, "solver bracket high")->capture_default_str();
    c->callback([&action, j16, chain, lo, hi] {
      action = [j16, chain, lo, hi] {
        return run_solve(*j16, *chain, *lo, *hi);
      };
    });
  }
  {
    auto* c = app.add_subcommand("gap", "protection gap of a solved layout");
    auto j16 = std::make_shared<double>(1.0);
    c->add_option("--j16", *j16, "attachment coupling")->required();
    c->callback([&action, j16] {
      action = [j16] { return run_gap(*j16); };
    });
  }
  {
    auto* c = app.add_subcommand(
        "correct", "re-solve one coupling after perturbing another");
    auto j16 = std::make_shared<double>(1.0);
    auto pe = std::make_shared<std::string>("2-4");
    auto pv = std::make_shared<double>(1.1);
    auto fe = std::make_shared<std::string>("5-6");
    c->add_option("--j16", *j16, "attachment coupling")->capture_default_str();
    c->add_option("--perturbed-edge", *pe, "edge a-b, 1-based site labels")
        ->capture_default_str();
    c->add_option("--perturbed-value", *pv, "new coupling on that edge")
        ->capture_default_str();
    c->add_option("--free-edge", *fe, "edge re-solved for degeneracy")
        ->capture_default_str();
    c->callback([&action, j16, pe, pv, fe] {
      action = [j16, pe, pv, fe] {
        return run_correct(*j16, *pe, *pv, *fe);
      };
    });
  }
  {
    auto* c = app.add_subcommand(
        "min-attach", "smallest feasible attachment coupling");
    auto chain = std::make_shared<int>(2);
    auto lo = std::make_shared<double>(0.5);
    auto hi = std::make_shared<double>(1.5);
    c->add_option("--chain-len", *chain, "mediator chain length (even)")
        ->capture_default_str();
    c->add_option("--lo", *lo, "search range low")->capture_default_str();
    c->add_option("--hi", *hi, "search range high")->capture_default_str();
    c->callback([&action, chain, lo, hi] {
      action = [chain, lo, hi] { return run_min_attach(*chain, *lo, *hi); };
    });
  }
  {
    auto* c = app.add_subcommand(
        "axes", "logical rotation generators and Bloch-axis angles");
    auto layout = std::make_shared<std::string>("sq6");
    auto j16 = std::make_shared<double>(1.0);
    c->add_option("--layout", *layout, "sq6 or k4")->capture_default_str();
    c->add_option("--j16", *j16, "attachment coupling (sq6 only)")
        ->capture_default_str();
    c->callback([&action, layout, j16] {
      action = [layout, j16] { return run_axes(*layout, *j16); };
    });
  }
  {
    auto* c = app.add_subcommand(
        "sweep-gate", "labeled eigenvalues of two coupled SQs vs J");
    auto scheme = std::make_shared<std::string>("horizontal");
    auto j16 = std::make_shared<double>(1.17672);
    auto jmax = std::make_shared<double>(1.2);
    auto points = std::make_shared<int>(50);
    c->add_option("--scheme", *scheme, "coupling scheme")
        ->check(CLI::IsMember({"horizontal", "vertical"}))
        ->capture_default_str();
    c->add_option("--j16", *j16, "single-SQ attachment coupling")
        ->capture_default_str();
    c->add_option("--jmax", *jmax, "largest inter coupling")->capture_default_str();
    c->add_option("--points", *points, "sweep points")->capture_default_str();
    c->callback([&action, scheme, j16, jmax, points] {
      action = [scheme, j16, jmax, points] {
        return run_sweep_gate(*scheme, *j16, *jmax, *points);
      };
    });
  }
  {
    auto* c = app.add_subcommand(
        "cphase", "synthesize a one-interval conditional-phase pulse");
    auto scheme = std::make_shared<std::string>("vertical");
    auto j16 = std::make_shared<double>(1.17672);
    auto j = std::make_shared<double>(0.5);
    c->add_option("--scheme", *scheme, "coupling scheme")
        ->check(CLI::IsMember({"horizontal", "vertical"}))
        ->capture_default_str();
    c->add_option("--j16", *j16, "single-SQ attachment coupling")
        ->capture_default_str();
    c->add_option("--j", *j, "inter coupling strength")->capture_default_str();
    c->callback([&action, scheme, j16, j] {
      action = [scheme, j16, j] { return run_cphase(*scheme, *j16, *j); };
    });
  }
  {
    auto* c = app.add_subcommand(
        "precession", "precession-time statistics under random fields");
    auto encs =
        std::make_shared<std::string>("single,triangle3,sq4,sq6");
    auto js = std::make_shared<std::string>("6,12,24,36,48,60");
    auto hb = std::make_shared<double>(0.06);
    auto samples = std::make_shared<int>(200);
    auto seed = std::make_shared<std::uint64_t>(12345);
    c->add_option("--encodings", *encs, "comma list of encodings")
        ->capture_default_str();
    c->add_option("--j", *js, "comma list of J values in ueV")
        ->capture_default_str();
    c->add_option("--hb", *hb, "field magnitude in ueV")->capture_default_str();
    c->add_option("--samples", *samples, "samples per point")
        ->capture_default_str();
    c->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    c->callback([&action, encs, js, hb, samples, seed] {
      action = [encs, js, hb, samples, seed] {
        return run_precession(*encs, *js, *hb, *samples, *seed);
      };
    });
  }
  {
    auto* c = app.add_subcommand(
        "hubbard", "finite-U hopping corrections for the mapped model");
    auto j16 = std::make_shared<double>(1.0);
    auto us = std::make_shared<std::string>("20,100,400,10000");
    auto window = std::make_shared<double>(0.5);
    c->add_option("--j16", *j16, "attachment coupling")->capture_default_str();
    c->add_option("--u-over-j", *us, "comma list of U/J ratios")
        ->capture_default_str();
    c->add_option("--tune-window", *window,
                  "tuning bracket as a fraction of the naive hopping")
        ->capture_default_str();
    c->callback([&action, j16, us, window] {
      action = [j16, us, window] { return run_hubbard(*j16, *us, *window); };
    });
  }

  // global options (-o, --format, --config) may follow the subcommand
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    write_report(action(), output, format);
  } catch (const sq::Error& e) {
    std::cerr << "error: " << sq::error_code_name(e.code()) << ": " << e.what()
              << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
