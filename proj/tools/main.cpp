// Command-line driver: builds layered tilings and their tangency graphs,
// runs growth and separator analyses, and produces sphere packings.
//
// Exit codes: 0 ok, 2 validation error, 3 budget refusal, 4 internal error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tilings/gamma.hpp"
#include "tilings/growth.hpp"
#include "tilings/io.hpp"
#include "tilings/orthant.hpp"
#include "tilings/packing.hpp"
#include "tilings/separators.hpp"
#include "tilings/tangency.hpp"
#include "tilings/tiling.hpp"

namespace {

using namespace tilings;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "0.1.0";

struct CommonOptions {
  int d = 3;
  std::string gamma_csv;
  std::string pqh_csv;
  int power = 1;
  std::int64_t budget = 10'000'000;
  int threads = 1;
  std::uint64_t seed = 1;
  int samples = 64;
  std::string radii_csv;
  double tol = 1e-9;
  std::string out = "out";
};

std::vector<std::int64_t> parse_csv(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

GammaSequence resolve_gamma(const CommonOptions& c) {
  if (!c.gamma_csv.empty() && !c.pqh_csv.empty())
    throw std::invalid_argument("give either --gamma or --pqh, not both");
  if (!c.gamma_csv.empty()) return GammaSequence(parse_csv(c.gamma_csv));
  if (!c.pqh_csv.empty()) {
    auto v = parse_csv(c.pqh_csv);
    if (v.size() != 3)
      throw std::invalid_argument("--pqh needs three values p,q,h");
    return gamma_pqh(c.d, v[0], v[1], v[2]);
  }
  throw std::invalid_argument("a sequence is required: --gamma or --pqh");
}

json config_json(const CommonOptions& c, const std::string& command) {
  json j;
  j["command"] = command;
  j["d"] = c.d;
  j["gamma"] = c.gamma_csv;
  j["pqh"] = c.pqh_csv;
  j["power"] = c.power;
  j["budget"] = c.budget;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["radii"] = c.radii_csv;
  j["tol"] = c.tol;
  return j;
}

// Writes outputs + the run manifest. Timings are recorded in the manifest
// only, so output bytes stay reproducible.
struct RunWriter {
  fs::path dir;
  json manifest;
  Clock::time_point start = Clock::now();

  RunWriter(const CommonOptions& c, const std::string& command) : dir(c.out) {
    fs::create_directories(dir);
    json config = config_json(c, command);
    manifest["command"] = command;
    manifest["config"] = config;
    manifest["config_hash"] = digest_hex(config.dump());
    manifest["version"] = kVersion;
    manifest["outputs"] = json::object();
  }

  std::string emit(const std::string& name, const std::string& contents) {
    write_file((dir / name).string(), contents);
    manifest["outputs"][name] = digest_hex(contents);
    return (dir / name).string();
  }

  void finish() {
    manifest["timings_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                              start)
            .count();
    write_file((dir / "run_manifest.json").string(), manifest.dump(2) + "\n");
  }
};

std::vector<std::int64_t> default_radii(const GammaSequence& gamma, int n) {
  std::vector<std::int64_t> radii;
  std::int64_t r = gamma.length();
  for (int j = 1; j <= std::max(1, n); ++j) {
    radii.push_back(r);
    r *= gamma.length();
  }
  return radii;
}

int cmd_build(const CommonOptions& c) {
  GammaSequence gamma = resolve_gamma(c);
  BuildLimits limits{c.budget};
  RunWriter run(c, "build");

  Tiling t = power_tiling(c.d, gamma, c.power, limits);
  ValidationReport valid = validate_tiling(t);
  if (!valid.ok()) throw std::logic_error("constructed tiling failed validation");

  TangencyGraph g = build_tangency_graph(t);
  AlphaStats stats = alpha_stats(t, g);
  DiameterResult diam = diameter(g.graph, 200000, c.seed);

  run.emit("tiling.json", tiling_to_json(t).dump(2) + "\n");
  run.emit("graph.json", graph_to_json(g).dump() + "\n");
  write_graph_csr((run.dir / "graph.csr").string(), g.graph);
  run.manifest["outputs"]["graph.csr"] =
      digest_hex(read_file((run.dir / "graph.csr").string()));
  run.finish();

  std::cout << t.describe() << "\n"
            << "tiles: " << t.size() << "\n"
            << "edges: " << g.edge_count() << "\n"
            << "alpha: " << stats.alpha.get_str() << "\n"
            << "L: " << stats.max_side.get_str() << "\n"
            << "max_degree: " << stats.max_degree << "\n"
            << "diameter: [" << diam.lower << ", " << diam.upper << "]"
            << (diam.exact ? " (exact)" : " (certified interval)") << "\n";
  return 0;
}

int cmd_analyze_growth(const CommonOptions& c) {
  GammaSequence gamma = resolve_gamma(c);
  BuildLimits limits{c.budget};
  RunWriter run(c, "analyze-growth");

  Tiling t = power_tiling(c.d, gamma, c.power, limits);
  TangencyGraph g = build_tangency_graph(t);

  GrowthOptions opt;
  opt.sample_count = c.samples;
  opt.seed = c.seed;
  opt.threads = c.threads;
  opt.radii = c.radii_csv.empty() ? default_radii(gamma, c.power)
                                  : parse_csv(c.radii_csv);

  double k_theory = growth_degree(gamma, c.d).value;
  GrowthProfile prof = growth_profile(g.graph, opt, k_theory);
  DiameterResult diam = diameter(g.graph, 200000, c.seed);

  std::vector<std::uint32_t> verts = sample_vertices(g.graph.n, opt);
  IngredientReport lower = check_growth_lower_ingredient(t, g.graph, verts);

  json summary = growth_summary_json(prof, diam);
  summary["lower_ingredient_ok"] = lower.ok;

  run.emit("profile.csv", growth_profile_csv(prof));
  run.emit("summary.json", summary.dump(2) + "\n");
  run.finish();

  std::cout << "k_theory: " << k_theory << "\nk_fit: " << prof.fitted_k
            << "\nC_sandwich: " << prof.sandwich_C
            << "\nlower_ingredient_ok: " << (lower.ok ? "yes" : "no") << "\n";
  return 0;
}

int cmd_analyze_separators(const CommonOptions& c, std::int64_t rprime_offset) {
  GammaSequence gamma = resolve_gamma(c);
  BuildLimits limits{c.budget};
  RunWriter run(c, "analyze-separators");

  Tiling t = power_tiling(c.d, gamma, c.power, limits);
  TangencyGraph g = build_tangency_graph(t);
  FiberFamily fam = project(t);

  GrowthOptions opt;
  opt.sample_count = c.samples;
  opt.seed = c.seed;
  opt.full_enumeration_below = 0;  // always sample: flows are expensive
  std::vector<std::uint32_t> verts = sample_vertices(g.graph.n, opt);
  std::vector<std::int64_t> radii = c.radii_csv.empty()
                                        ? default_radii(gamma, c.power)
                                        : parse_csv(c.radii_csv);

  json certs = json::array();
  std::ostringstream csv;
  csv << "v,R,Rprime,h,fiber_count,flow_count,cut_size,regime_ok\n";
  for (std::uint32_t v : verts) {
    for (std::int64_t R : radii) {
      std::int64_t Rp = R + rprime_offset;
      AnnulusCertificate cert = annulus_path_certificate(t, g, fam, v, R);
      bool regime = annulus_regime_ok(t, Rp);
      CutCertificate flow;
      auto s1 = sphere_vertices(g.graph, v, R);
      auto s2 = sphere_vertices(g.graph, v, Rp);
      if (!s1.empty() && !s2.empty())
        flow = disjoint_path_count(g.graph, s1, s2);
      certs.push_back(certificate_to_json(cert, Rp, regime, flow));
      csv << v << "," << R << "," << Rp << "," << cert.h << ","
          << cert.fiber_ids.size() << "," << flow.path_count << ","
          << flow.min_cut.size() << "," << (regime ? 1 : 0) << "\n";
    }
  }

  run.emit("certificates.json", certs.dump(2) + "\n");
  run.emit("sweep.csv", csv.str());
  run.finish();
  std::cout << "certificates: " << certs.size() << "\n";
  return 0;
}

int cmd_pack(const CommonOptions& c, int ply_refine) {
  GammaSequence gamma = resolve_gamma(c);
  BuildLimits limits{c.budget};
  RunWriter run(c, "pack");

  CubePacking cp = cube_packing(gamma, c.power, c.d, limits);
  SpherePacking sp = sphere_pack(cp);
  PackingReport rep = validate_packing(sp, c.tol);
  if (!rep.ok()) {
    for (const auto& v : rep.violations) std::cerr << v << "\n";
    throw std::logic_error("constructed packing failed validation");
  }

  run.emit("packing.json", packing_to_json(sp).dump() + "\n");
  if (c.d == 3) {
    run.emit("packing.ply", spheres_to_ply(sp, ply_refine));
    run.emit("cubes.obj", cubes_to_obj(cp.cubes));
  }
  run.finish();

  std::cout << "cubes: " << cp.size() << "\nspheres: " << sp.size()
            << "\nalpha: " << cp.aspect.get_str()
            << "\neps: " << sp.eps.get_str() << "\nk: " << sp.chain_len
            << "\nsubdivision: " << sp.subdivision_order()
            << "\nM_realized: " << rep.M_realized
            << " (bound " << rep.M_bound << ")"
            << "\nmin_radius_ratio_60d: " << rep.min_radius_ratio_60d << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"layered tilings of the unit cube: tangency graphs, growth, "
               "separators, sphere packings"};
  app.require_subcommand(1);

  CommonOptions c;
  std::int64_t rprime_offset = 2;
  int ply_refine = 1;

  auto add_common = [&c](CLI::App* cmd, bool with_power = true) {
    cmd->add_option("--d", c.d, "dimension (>= 2)");
    cmd->add_option("--gamma", c.gamma_csv, "sequence, e.g. 3,6,3");
    cmd->add_option("--pqh", c.pqh_csv, "p,q,h triple for gamma^(p,q,h)");
    if (with_power) cmd->add_option("--power", c.power, "tensor power n");
    cmd->add_option("--budget", c.budget, "tile-count budget");
    cmd->add_option("--threads", c.threads, "worker threads");
    cmd->add_option("--seed", c.seed, "sampling seed");
    cmd->add_option("--samples", c.samples, "sample vertex count");
    cmd->add_option("--radii", c.radii_csv, "radii, e.g. 3,9,27");
    cmd->add_option("--tol", c.tol, "geometric tolerance (relative)");
    cmd->add_option("--out", c.out, "output directory");
  };

  CLI::App* build = app.add_subcommand("build", "construct tiling and graph");
  add_common(build);
  CLI::App* growth =
      app.add_subcommand("analyze-growth", "ball growth profile and fit");
  add_common(growth);
  CLI::App* seps = app.add_subcommand("analyze-separators",
                                      "annulus path certificates and flows");
  add_common(seps);
  seps->add_option("--rprime-offset", rprime_offset, "R' = R + offset");
  CLI::App* pack =
      app.add_subcommand("pack", "neat cube packing and sphere packing");
  add_common(pack);
  pack->add_option("--ply-refine", ply_refine, "icosphere refinement level");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return cmd_build(c);
    if (growth->parsed()) return cmd_analyze_growth(c);
    if (seps->parsed()) return cmd_analyze_separators(c, rprime_offset);
    if (pack->parsed()) return cmd_pack(c, ply_refine);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const tilings::budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  }
}
