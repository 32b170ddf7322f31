// Command-line front end: builds cellulations and codes, constructs and
// verifies measurement gadgets, and runs the Monte Carlo protocols.
// All outputs are deterministic given --seed; results are plain JSON,
// CSV, and text so external tools can consume them.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homm/complex.hpp"
#include "homm/cover.hpp"
#include "homm/css.hpp"
#include "homm/decoder.hpp"
#include "homm/f2.hpp"
#include "homm/gadget.hpp"
#include "homm/io.hpp"
#include "homm/sim.hpp"

namespace {

using namespace homm;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// "0.01", "0.01,0.02", "lo:hi:logN", "lo:hi:linN"
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') == std::string::npos) {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
  }
  std::stringstream ss(text);
  std::string lo_s, hi_s, scale;
  if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') || !std::getline(ss, scale))
    throw std::invalid_argument("grid: expected lo:hi:logN or lo:hi:linN");
  double lo = std::stod(lo_s), hi = std::stod(hi_s);
  bool log_scale = scale.rfind("log", 0) == 0;
  bool lin_scale = scale.rfind("lin", 0) == 0;
  if (!log_scale && !lin_scale) throw std::invalid_argument("grid: scale must be logN or linN");
  int count = std::stoi(scale.substr(3));
  if (count < 2 || (lo <= 0.0 && log_scale))
    throw std::invalid_argument("grid: bad parameters");
  for (int i = 0; i < count; ++i) {
    double t = static_cast<double>(i) / (count - 1);
    out.push_back(log_scale ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                            : lo + t * (hi - lo));
  }
  return out;
}

// Orientation-inferring walk from an edge id list; must chain and close.
EdgePath walk_from_edge_ids(const CellComplex2& m, const std::vector<std::uint32_t>& ids) {
  if (ids.empty()) throw std::invalid_argument("loop: empty edge list");
  for (auto e : ids)
    if (e >= m.num_edges()) throw std::invalid_argument("loop: edge id out of range");
  for (bool first_forward : {true, false}) {
    EdgePath p;
    p.start = first_forward ? m.edges[ids[0]].u : m.edges[ids[0]].v;
    std::uint32_t cur = p.start;
    bool ok = true;
    for (auto e : ids) {
      if (m.edges[e].u == cur) {
        p.steps.push_back({e, true});
        cur = m.edges[e].v;
      } else if (m.edges[e].v == cur) {
        p.steps.push_back({e, false});
        cur = m.edges[e].u;
      } else {
        ok = false;
        break;
      }
    }
    if (ok && cur == p.start) return p;
  }
  throw std::invalid_argument("loop: edge list does not chain into a closed walk");
}

EdgePath resolve_loop(const TorusLattice& torus, const std::string& text) {
  if (text == "Z1") return torus.loop_z1();
  if (text == "Z2") return torus.loop_z2();
  if (text == "Z1Z2") return torus.loop_z1z2();
  std::vector<std::uint32_t> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) ids.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  return walk_from_edge_ids(torus.complex(), ids);
}

// Names a data-block Z class against the torus presets, when the data
// code is recognizably a torus.
std::string name_coset(const CssCode& data, const f2::BitVec& rep) {
  int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(data.n) / 2)));
  if (d < 2 || static_cast<std::size_t>(2 * d * d) != data.n) return "(unnamed)";
  TorusLattice t(d);
  auto torus_code = css_of_complex(t.complex());
  if (torus_code.h_x != data.h_x || torus_code.h_z != data.h_z) return "(unnamed)";
  f2::Reducer stab(data.h_z);
  auto z1 = path_edge_vector(t.complex(), t.loop_z1());
  auto z2 = path_edge_vector(t.complex(), t.loop_z2());
  if (stab.contains(rep ^ z1)) return "Z1";
  if (stab.contains(rep ^ z2)) return "Z2";
  if (stab.contains(rep ^ z1 ^ z2)) return "Z1Z2";
  if (stab.contains(rep)) return "(stabilizer)";
  return "(other)";
}

struct GadgetReport {
  HomGadget gadget;
  std::size_t d_data = 0, d_anc = 0, loop_weight = 0;
  EffectiveXDistance effdist;
  bool preservation_ok = false, diagram_ok = false;
};

GadgetReport analyze_gadget(const HomGadget& g, std::size_t loop_weight) {
  GadgetReport rep;
  rep.gadget = g;
  rep.loop_weight = loop_weight;
  rep.d_data = detail::code_distance(g.data, g.origin ? &g.origin->target : nullptr);
  rep.d_anc = detail::code_distance(g.ancilla, g.origin ? &g.origin->source : nullptr);
  rep.preservation_ok = stabilizer_preservation_check(g).ok();
  rep.diagram_ok = g.origin ? verify_cellmap(*g.origin).ok() : true;
  rep.effdist = effective_x_distance(g);
  return rep;
}

void print_gadget_report(std::ostream& out, const GadgetReport& rep, const std::string& title) {
  const auto& g = rep.gadget;
  auto mg = measured_group(g);
  out << "gadget: " << title << "\n";
  out << "data code: [[" << g.data.n << "," << g.data.k << "," << rep.d_data << "]]\n";
  out << "ancilla code: [[" << g.ancilla.n << "," << g.ancilla.k << "," << rep.d_anc << "]]\n";
  out << "condition 1, rs(Hz' G^T) <= rs(Hz): PASS\n";
  out << "condition 2, rs(Hx G) <= rs(Hx'): PASS\n";
  out << "stabilizer preservation Tz'=Tz, Tx'=Tx: " << (rep.preservation_ok ? "PASS" : "FAIL")
      << "\n";
  if (g.origin)
    out << "commutative diagram d2.g2=g1.d2', g0.d1'=d1.g1: " << (rep.diagram_ok ? "PASS" : "FAIL")
        << "\n";
  out << "k' = " << g.ancilla.k << "\n";
  out << "d_A = " << rep.d_anc << ", d_D = " << rep.d_data << "\n";
  std::size_t doubled = 0;
  for (std::size_t r = 0; r < g.gamma.rows(); ++r)
    if (g.gamma.row(r).weight() >= 2) ++doubled;
  if (doubled == 0)
    out << "gate matrix: transversal (injective edge map)\n";
  else
    out << "gate matrix: " << doubled << " data edges covered twice (two-layer rows)\n";
  out << "measured group rank " << mg.rank << ":\n";
  for (std::size_t i = 0; i < mg.rank; ++i)
    out << "  [" << i << "] " << mg.basis.row(i).str() << "  ~ " << name_coset(g.data, mg.basis.row(i))
        << "\n";
  out << "effective X-distance: " << rep.effdist.value
      << (rep.effdist.found ? "" : " (lower bound)")
      << " (bound min{d_D,d_A} = " << rep.effdist.bound
      << (rep.effdist.complete ? ", complete" : ", weight-limited") << ", budget "
      << rep.effdist.weight_budget << ")\n";
  const std::size_t m = g.ancilla.n, n = g.data.n, w = rep.loop_weight;
  out << "ancilla size: m = " << m << ", n = " << n << ", w = " << w << ", d = " << rep.d_data
      << ", m*d/(n*w) = " << fmt(static_cast<double>(m * rep.d_data) / (n * w)) << "\n";
  if (rep.d_anc < rep.d_data)
    out << "warning: d_A < d_D; the gadget is in the cat-state regime and needs repeated "
           "measurements\n";
}

int cmd_build(const std::string& shape, int d, int c, int h, const std::string& out,
              const std::string& code_out) {
  CellComplex2 m;
  if (shape == "torus") {
    m = build_torus(d);
  } else if (shape == "cylinder") {
    m = build_cylinder(c, h);
  } else if (shape == "planar" || shape == "planar-fig5") {
    m = build_planar_patch(d);
  } else {
    throw std::invalid_argument("unknown shape " + shape);
  }
  auto code = css_of_complex(m);
  std::string dist = "?";
  if (code.k >= 1) {
    auto sd = surface_distance(m);
    dist = std::to_string(std::min(sd.d_z, sd.d_x));
    std::cout << "[[" << code.n << "," << code.k << "," << dist << "]] shape=" << shape
              << " d_z=" << sd.d_z << " d_x=" << sd.d_x << "\n";
  } else {
    std::cout << "[[" << code.n << "," << code.k << ",-]] shape=" << shape << "\n";
  }
  if (!out.empty()) io::write_file(out, io::complex_to_json(m).dump(2) + "\n");
  if (!code_out.empty()) io::write_file(code_out, io::code_to_json(code).dump(2) + "\n");
  return 0;
}

int cmd_distance(const std::string& code_path, const std::string& complex_path,
                 const std::string& hx_path, const std::string& hz_path, std::size_t budget) {
  if (!complex_path.empty()) {
    auto m = io::complex_from_json(io::json::parse(io::read_file(complex_path)));
    auto code = css_of_complex(m);
    auto sd = surface_distance(m);
    std::cout << "n=" << code.n << " k=" << code.k << " d_z=" << sd.d_z << " d_x=" << sd.d_x
              << " (exact)\n";
    return 0;
  }
  CssCode code;
  if (!code_path.empty()) {
    code = io::code_from_json(io::json::parse(io::read_file(code_path)));
  } else if (!hx_path.empty() && !hz_path.empty()) {
    code = css_from_checks(io::matrix_from_text(io::read_file(hx_path)),
                           io::matrix_from_text(io::read_file(hz_path)));
  } else {
    throw std::invalid_argument("distance: need --code, --complex, or both check matrices");
  }
  auto dz = min_distance_z(code, budget);
  auto dx = min_distance_x(code, budget);
  std::cout << "n=" << code.n << " k=" << code.k << " d_z=" << dz.weight
            << (dz.exact ? "" : " (upper bound)") << " d_x=" << dx.weight
            << (dx.exact ? "" : " (upper bound)") << "\n";
  return 0;
}

int cmd_gadget_build(int d, const std::string& loop_arg, const std::string& width,
                     const std::string& out) {
  TorusLattice torus(d);
  auto loop = resolve_loop(torus, loop_arg);
  CoveringAncilla anc = width == "auto"
                            ? build_covering_ancilla_auto(torus, loop)
                            : build_covering_ancilla(torus, loop, std::stoi(width));
  if (!anc.primitive)
    std::cout << "warning: deck t_{" << anc.deck.r << "," << anc.deck.s
              << "} is non-primitive; the measured class is a product of smaller logicals\n";
  auto g = gadget_from_cellmap(anc.map);
  auto rep = analyze_gadget(g, path_edge_vector(torus.complex(), loop).weight());
  print_gadget_report(std::cout, rep,
                      "torus d=" + std::to_string(d) + " loop=" + loop_arg + " width=" + width);
  if (!out.empty()) io::write_file(out, io::bundle_to_json(g).dump(2) + "\n");
  return 0;
}

int cmd_gadget_validate(const std::string& bundle_path, bool x_type) {
  auto j = io::json::parse(io::read_file(bundle_path));
  HomGadget g;
  try {
    g = io::bundle_from_json(j);
    if (x_type) g = dual_gadget(g);  // reversed-role (X-type) reading
  } catch (const GadgetConditionViolation& e) {
    std::cout << "condition " << e.condition << ": FAIL\nwitness: " << e.witness.str() << "\n";
    return 1;
  }
  std::cout << "condition 1, rs(Hz' G^T) <= rs(Hz): PASS\n";
  std::cout << "condition 2, rs(Hx G) <= rs(Hx'): PASS\n";
  bool ok = stabilizer_preservation_check(g).ok();
  std::cout << "stabilizer preservation: " << (ok ? "PASS" : "FAIL") << "\n";
  bool diagram = true;
  if (g.origin) {
    auto cert = verify_cellmap(*g.origin);
    diagram = cert.ok();
    std::cout << "commutative diagram: " << (diagram ? "PASS" : "FAIL");
    if (!diagram) {
      std::cout << " (bad faces:";
      for (auto f : cert.bad_faces) std::cout << ' ' << f;
      std::cout << "; bad edges:";
      for (auto e : cert.bad_edges) std::cout << ' ' << e;
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return ok && diagram ? 0 : 1;
}

int cmd_gadget_measured(const std::string& bundle_path, bool x_type) {
  auto g = io::bundle_from_json(io::json::parse(io::read_file(bundle_path)));
  if (x_type) g = dual_gadget(g);
  std::cout << (x_type ? "X-type " : "Z-type ");
  auto mg = measured_group(g);
  std::cout << "measured group rank " << mg.rank << "\n";
  for (std::size_t i = 0; i < mg.rank; ++i)
    std::cout << "[" << i << "] " << mg.basis.row(i).str() << "  ~ "
              << name_coset(g.data, mg.basis.row(i)) << "\n";
  return 0;
}

int cmd_gadget_effdist(const std::string& bundle_path, std::size_t budget) {
  auto g = io::bundle_from_json(io::json::parse(io::read_file(bundle_path)));
  auto res = effective_x_distance(g, budget);
  std::cout << "effective X-distance: " << res.value << (res.found ? "" : " (lower bound)")
            << " bound=" << res.bound << (res.complete ? " complete" : " weight-limited")
            << " budget=" << res.weight_budget << "\n";
  return 0;
}

constexpr const char* kCsvHeader =
    "gadget,p_data,p_anc,p_meas,trials,readout_errors,data_errors,rate,ci_low,ci_high,seed";

int cmd_simulate(const std::string& mode, const std::string& bundle_path,
                 const std::string& grid_spec, std::uint64_t trials, std::uint64_t seed,
                 const std::string& decoder, int shor_w, std::uint64_t rounds,
                 double p_data_fix, double p_anc_fix, double p_meas_fix,
                 const std::string& out) {
  auto grid = parse_grid(grid_spec);
  DecoderMode dm = decoder == "union-find" ? DecoderMode::UnionFind : DecoderMode::Exact;
  std::ostringstream csv;
  csv << kCsvHeader << "\n";
  auto channel = [](double fixed, double swept) { return fixed >= 0 ? fixed : swept; };
  if (trials > 0 && mode == "homomorphic") {
    auto g = io::bundle_from_json(io::json::parse(io::read_file(bundle_path)));
    HomomorphicSimulator sim(std::move(g), dm);
    for (double p : grid) {
      NoiseModel noise{channel(p_data_fix, p), channel(p_anc_fix, p), channel(p_meas_fix, p),
                       seed};
      auto stats = sim.run(noise, trials);
      csv << bundle_path << ',' << fmt(noise.p_data) << ',' << fmt(noise.p_anc_residual) << ','
          << fmt(noise.p_meas) << ',' << stats.trials << ',' << stats.readout_errors << ','
          << stats.data_errors << ',' << fmt(stats.readout.rate) << ','
          << fmt(stats.readout.ci_low) << ',' << fmt(stats.readout.ci_high) << ',' << seed
          << "\n";
    }
  } else if (trials > 0 && mode == "shor") {
    if (shor_w < 1) throw std::invalid_argument("simulate: --w required in shor mode");
    auto data = css_from_checks(f2::BitMatrix(0, shor_w), f2::BitMatrix(0, shor_w));
    f2::BitVec support(shor_w);
    for (int i = 0; i < shor_w; ++i) support.set(i);
    for (double p : grid) {
      auto stats = run_shor_repeated(data, support, channel(p_meas_fix, p), rounds, trials, seed);
      csv << "shor:w=" << shor_w << ":rounds=" << rounds << ',' << fmt(0.0) << ',' << fmt(0.0)
          << ',' << fmt(channel(p_meas_fix, p)) << ',' << stats.trials << ',' << stats.errors
          << ",0," << fmt(stats.error_stat.rate) << ',' << fmt(stats.error_stat.ci_low) << ','
          << fmt(stats.error_stat.ci_high) << ',' << seed << "\n";
    }
  } else if (trials > 0) {
    throw std::invalid_argument("simulate: mode must be homomorphic or shor");
  }
  if (out.empty())
    std::cout << csv.str();
  else
    io::write_file(out, csv.str());
  return 0;
}

int cmd_report(const std::string& d_list, const std::string& preset_list,
               const std::string& out) {
  std::ostringstream text;
  text << "d preset n m w k' d_A effdist m*d/(n*w)\n";
  std::stringstream ds(d_list);
  std::string d_tok;
  while (std::getline(ds, d_tok, ',')) {
    int d = std::stoi(d_tok);
    TorusLattice torus(d);
    std::stringstream ps(preset_list);
    std::string preset;
    while (std::getline(ps, preset, ',')) {
      auto loop = resolve_loop(torus, preset);
      auto g = gadget_from_cellmap(build_covering_ancilla_auto(torus, loop).map);
      auto rep = analyze_gadget(g, path_edge_vector(torus.complex(), loop).weight());
      const std::size_t m = g.ancilla.n, n = g.data.n, w = rep.loop_weight;
      text << d << ' ' << preset << ' ' << n << ' ' << m << ' ' << w << ' ' << g.ancilla.k << ' '
           << rep.d_anc << ' ' << rep.effdist.value << ' '
           << fmt(static_cast<double>(m * rep.d_data) / (n * w)) << "\n";
    }
  }
  if (out.empty())
    std::cout << text.str();
  else
    io::write_file(out, text.str());
  return 0;
}

// JSON config support: fills in options absent from the command line
// ("flags win"). Keys are long option names without the leading dashes.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  auto it = std::find(args.begin(), args.end(), "--config");
  if (it == args.end() || it + 1 == args.end()) return args;
  std::string path = *(it + 1);
  args.erase(it, it + 2);
  auto j = io::json::parse(io::read_file(path));
  for (const auto& [key, value] : j.items()) {
    std::string flag = "--" + key;
    bool present = false;
    for (const auto& a : args)
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    if (present) continue;
    args.push_back(flag);
    if (value.is_string())
      args.push_back(value.get<std::string>());
    else if (!value.is_boolean())
      args.push_back(value.dump());
    else if (!value.get<bool>())
      args.pop_back();  // false boolean: drop the flag again
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homomorphic measurement gadgets for CSS surface codes"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");

  // build
  std::string shape = "torus", complex_out, code_out;
  int bd = 3, bc = 3, bh = 3;
  auto* build = app.add_subcommand("build", "build a cellulation and its CSS code");
  build->set_help_flag("--help", "print help");
  build->add_option("--shape", shape, "torus | cylinder | planar (alias planar-fig5)");
  build->add_option("--d", bd, "lattice size (torus, planar)");
  build->add_option("--c", bc, "cylinder circumference");
  build->add_option("--h", bh, "cylinder vertex rows");
  build->add_option("--out", complex_out, "complex JSON output path");
  build->add_option("--code-out", code_out, "code JSON output path");

  // distance
  std::string dist_code, dist_complex, dist_hx, dist_hz;
  std::size_t dist_budget = 6;
  auto* dist = app.add_subcommand("distance", "minimum distances of a CSS code");
  dist->add_option("--code", dist_code, "code JSON path");
  dist->add_option("--complex", dist_complex, "complex JSON path (graph-based, exact)");
  dist->add_option("--check-matrix-x", dist_hx, "H_X text file");
  dist->add_option("--check-matrix-z", dist_hz, "H_Z text file");
  dist->add_option("--budget", dist_budget, "weight budget for the bounded search");

  // gadget
  auto* gadget = app.add_subcommand("gadget", "construct and inspect measurement gadgets");
  gadget->require_subcommand(1);
  int gd = 3;
  std::string loop_arg = "Z1", width = "auto", bundle_out;
  auto* gbuild = gadget->add_subcommand("build", "covering-space gadget on the torus");
  gbuild->add_option("--d", gd, "torus size");
  gbuild->add_option("--loop", loop_arg, "Z1 | Z2 | Z1Z2 | comma-separated edge ids");
  gbuild->add_option("--width", width, "auto or a fixed ribbon width >= 1");
  gbuild->add_option("--out", bundle_out, "bundle JSON output path");
  std::string vb_path, mb_path, eb_path;
  bool val_x_type = false, meas_x_type = false;
  auto* gval = gadget->add_subcommand("validate", "re-check a stored gadget bundle");
  gval->add_option("bundle", vb_path, "bundle JSON path")->required();
  gval->add_flag("--x-type", val_x_type, "check the reversed-role (X-measurement) reading");
  auto* gmeas = gadget->add_subcommand("measured-group", "measured logical operators");
  gmeas->add_option("bundle", mb_path, "bundle JSON path")->required();
  gmeas->add_flag("--x-type", meas_x_type, "X-measurement reading (swaps X and Z)");
  std::size_t eff_budget = 0;
  auto* geff = gadget->add_subcommand("effdist", "effective X-distance");
  geff->add_option("bundle", eb_path, "bundle JSON path")->required();
  geff->add_option("--budget", eff_budget, "weight budget (0 = automatic)");

  // simulate
  std::string sim_mode = "homomorphic", sim_bundle, sim_grid = "0.01", sim_decoder = "exact",
              sim_out;
  std::uint64_t sim_trials = 100000, sim_seed = 0, sim_rounds = 1;
  int sim_w = 0;
  double fix_pd = -1, fix_pa = -1, fix_pm = -1;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo of the measurement protocols");
  sim->add_option("--mode", sim_mode, "homomorphic | shor");
  sim->add_option("--bundle", sim_bundle, "gadget bundle JSON (homomorphic mode)");
  sim->add_option("--p", sim_grid, "noise grid: value | v1,v2,... | lo:hi:logN | lo:hi:linN");
  sim->add_option("--trials", sim_trials, "trials per grid point");
  sim->add_option("--seed", sim_seed, "master seed; all randomness derives from it");
  sim->add_option("--decoder", sim_decoder, "exact | union-find");
  sim->add_option("--w", sim_w, "operator weight (shor mode)");
  sim->add_option("--rounds", sim_rounds, "repetition rounds, odd (shor mode)");
  sim->add_option("--p-data", fix_pd, "pin the data channel instead of sweeping it");
  sim->add_option("--p-anc", fix_pa, "pin the ancilla-preparation channel");
  sim->add_option("--p-meas", fix_pm, "pin the readout channel");
  sim->add_option("--out", sim_out, "CSV output path (default stdout)");

  // report
  std::string rep_d = "3,5", rep_presets = "Z1,Z2,Z1Z2", rep_out;
  auto* report = app.add_subcommand("report", "ancilla-size report across presets");
  report->add_option("--d", rep_d, "comma-separated torus sizes");
  report->add_option("--presets", rep_presets, "comma-separated loop presets");
  report->add_option("--out", rep_out, "output path (default stdout)");

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    args = apply_config(std::move(args));
    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) cargv.push_back(a.c_str());
    app.parse(static_cast<int>(cargv.size()), cargv.data());

    if (*build) return cmd_build(shape, bd, bc, bh, complex_out, code_out);
    if (*dist) return cmd_distance(dist_code, dist_complex, dist_hx, dist_hz, dist_budget);
    if (*gbuild) return cmd_gadget_build(gd, loop_arg, width, bundle_out);
    if (*gval) return cmd_gadget_validate(vb_path, val_x_type);
    if (*gmeas) return cmd_gadget_measured(mb_path, meas_x_type);
    if (*geff) return cmd_gadget_effdist(eb_path, eff_budget);
    if (*sim)
      return cmd_simulate(sim_mode, sim_bundle, sim_grid, sim_trials, sim_seed, sim_decoder,
                          sim_w, sim_rounds, fix_pd, fix_pa, fix_pm, sim_out);
    if (*report) return cmd_report(rep_d, rep_presets, rep_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
