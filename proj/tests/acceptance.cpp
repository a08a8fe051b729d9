// Acceptance suite: one line per criterion, tolerances pinned in code.
// Exit code 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tilings/gamma.hpp"
#include "tilings/growth.hpp"
#include "tilings/io.hpp"
#include "tilings/packing.hpp"
#include "tilings/separators.hpp"
#include "tilings/tangency.hpp"
#include "tilings/tiling.hpp"

using namespace tilings;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  int number;
  std::string name;
  bool pass;
  double seconds;
  std::vector<std::string> notes;
};

struct Suite {
  std::vector<Outcome> outcomes;
  std::string cli_path;
  std::string work_dir = "acceptance_work";

  // degree-bound bookkeeping for criterion 4: every instance the suite
  // constructs is checked
  std::size_t degree_checked = 0;
  std::size_t degree_failed = 0;

  void check_degree(const Tiling& t, const TangencyGraph& g) {
    DegreeBoundCheck chk = check_degree_bound(t, g);
    ++degree_checked;
    if (!chk.ok) ++degree_failed;
  }

  void run(int number, const std::string& name,
           const std::function<bool(std::vector<std::string>&)>& body) {
    Outcome out{number, name, false, 0.0, {}};
    auto start = Clock::now();
    try {
      out.pass = body(out.notes);
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes.push_back(std::string("exception: ") + e.what());
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    outcomes.push_back(out);
    std::printf("[%s] criterion %2d: %s (%.1fs)\n",
                out.pass ? "PASS" : "FAIL", number, name.c_str(),
                out.seconds);
    for (const auto& n : out.notes) std::printf("       - %s\n", n.c_str());
    std::fflush(stdout);
  }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

bool runtime_ok(std::vector<std::string>& notes, double seconds,
                double budget) {
  notes.push_back("runtime " + fmt(seconds) + "s of " + fmt(budget) +
                  "s budget");
  return seconds <= budget;
}

GammaSequence seeded_gamma(std::mt19937_64& rng, int max_len, int max_val) {
  std::uniform_int_distribution<int> len_d(1, max_len), val_d(1, max_val);
  std::vector<std::int64_t> e(static_cast<std::size_t>(len_d(rng)));
  for (auto& v : e) v = val_d(rng);
  return GammaSequence(e);
}

}  // namespace

// 1. Counting identities: |T^(3)_{<3,6,3> (x) n}| = 54^n, n = 0..3, and
//    multiplicativity of |.|^(d) under tensor for 20 seeded pairs.
static bool criterion1(std::vector<std::string>& notes) {
  auto start = Clock::now();
  GammaSequence gamma({3, 6, 3});
  bool ok = true;
  BigInt expect = 1;
  for (int n = 0; n <= 3; ++n) {
    Tiling t = power_tiling(3, gamma, n);
    ok = ok && BigInt(static_cast<unsigned long>(t.size())) == expect;
    ok = ok && size_formula(tensor_power(gamma, n), 3) == expect;
    expect *= 54;
  }
  notes.push_back("54^n counts exact for n = 0..3");

  std::mt19937_64 rng(20260808);
  std::uniform_int_distribution<int> dim_d(2, 4);
  for (int trial = 0; trial < 20; ++trial) {
    GammaSequence a = seeded_gamma(rng, 5, 9);
    GammaSequence b = seeded_gamma(rng, 5, 9);
    int d = dim_d(rng);
    if (size_formula(tensor(a, b), d) !=
        size_formula(a, d) * size_formula(b, d)) {
      ok = false;
      notes.push_back("multiplicativity failed at trial " +
                      std::to_string(trial));
    }
  }
  notes.push_back("20 seeded tensor pairs multiplicative");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && runtime_ok(notes, secs, 60.0);
}

// 2. Exact algebra: associativity, identity laws, layered(tensor) = product.
static bool criterion2(std::vector<std::string>& notes) {
  auto start = Clock::now();
  bool ok = true;
  std::mt19937_64 rng(77001);
  int algebra_cases = 0;
  for (int d : {2, 3}) {
    Tiling id = identity_tiling(d);
    for (int trial = 0; trial < 6; ++trial) {
      GammaSequence ga = seeded_gamma(rng, 4, 6);
      GammaSequence gb = seeded_gamma(rng, 4, 6);
      GammaSequence gc = seeded_gamma(rng, 2, 3);
      Tiling S = layered_tiling(d, ga);
      Tiling T = layered_tiling(d, gb);
      Tiling U = layered_tiling(d, gc);
      ok = ok && same_tile_set(tile_product(tile_product(S, T), U),
                               tile_product(S, tile_product(T, U)));
      ok = ok && same_tile_set(tile_product(S, id), S);
      ok = ok && same_tile_set(tile_product(id, S), S);
      ok = ok && same_tile_set(layered_tiling(d, tensor(ga, gb)),
                               tile_product(S, T));
      ++algebra_cases;
    }
  }
  notes.push_back(std::to_string(algebra_cases) +
                  " seeded triples: associativity, identities, tensor law");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && runtime_ok(notes, secs, 60.0);
}

// 3. Sweep tangency equals the brute-force oracle across the test matrix.
static bool criterion3(Suite& suite, std::vector<std::string>& notes) {
  auto start = Clock::now();
  struct Case {
    int d;
    std::vector<std::int64_t> gamma;
    int n;
  };
  const std::vector<Case> matrix = {
      {2, {3, 6, 3}, 1}, {2, {3, 6, 3}, 2}, {2, {3, 6, 3}, 3},
      {2, {2, 4, 2}, 3}, {2, {5, 5, 5, 5, 5}, 1},
      {3, {3, 6, 3}, 1}, {3, {3, 6, 3}, 2}, {3, {4, 8, 8, 4}, 1},
      {3, {2, 3, 2}, 2}, {3, {1}, 0}, {3, {6, 6, 6}, 2},
      {4, {3, 6, 3}, 1}, {4, {2, 2}, 2}, {4, {2, 2}, 3}, {4, {3, 3, 3}, 2},
  };
  bool ok = true;
  for (const auto& c : matrix) {
    Tiling t = power_tiling(c.d, GammaSequence(c.gamma), c.n);
    if (t.size() > 20000) {
      ok = false;
      notes.push_back("matrix case exceeds the 20000-tile oracle guard");
      continue;
    }
    TangencyGraph sweep = build_tangency_graph(t);
    TangencyGraph brute = brute_force_tangency(t);
    if (!same_labeled_edges(sweep, brute)) {
      ok = false;
      notes.push_back("oracle mismatch at d=" + std::to_string(c.d) +
                      " n=" + std::to_string(c.n));
    }
    suite.check_degree(t, sweep);
  }
  notes.push_back(std::to_string(matrix.size()) +
                  " matrix instances, labeled edge sets equal");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && runtime_ok(notes, secs, 300.0);
}

// 5. Diameter sandwich b^n - 1 <= diam <= (d+1) b^n, exact BFS, n <= 3.
static bool criterion5(Suite& suite, std::vector<std::string>& notes) {
  auto start = Clock::now();
  bool ok = true;
  for (const std::vector<std::int64_t>& ge :
       {std::vector<std::int64_t>{3, 6, 3},
        std::vector<std::int64_t>{4, 8, 8, 4}}) {
    GammaSequence gamma(ge);
    std::int64_t b = gamma.length();
    std::int64_t bn = 1;
    for (int n = 0; n <= 3; ++n) {
      Tiling t = power_tiling(3, gamma, n);
      TangencyGraph g = build_tangency_graph(t);
      suite.check_degree(t, g);
      DiameterResult diam = diameter_exact(g.graph);
      if (!(diam.exact && bn - 1 <= diam.value() && diam.value() <= 4 * bn)) {
        ok = false;
        notes.push_back("sandwich violated at n=" + std::to_string(n));
      }
      if (n == 3)
        notes.push_back("b=" + std::to_string(b) + " n=3: diam " +
                        std::to_string(diam.value()) + " in [" +
                        std::to_string(bn - 1) + ", " + std::to_string(4 * bn) +
                        "], " + std::to_string(diam.bfs_count) + " BFS");
      bn *= b;
    }
  }

  // n = 4 by certified interval: the sandwich must be consistent with it
  {
    GammaSequence gamma({3, 6, 3});
    Tiling t4 = power_tiling(3, gamma, 4);
    TangencyGraph g4 = build_tangency_graph(t4);
    suite.check_degree(t4, g4);
    DiameterResult bounds = diameter_bounds(g4.graph, 3, 6);
    const std::int64_t lo = 80, hi = 324;  // b^4 - 1 and (d+1) b^4
    bool consistent = bounds.lower <= hi && bounds.upper >= lo &&
                      bounds.lower >= lo;
    notes.push_back("n=4 certified interval [" +
                    std::to_string(bounds.lower) + ", " +
                    std::to_string(bounds.upper) + "] vs sandwich [80, 324]");
    ok = ok && consistent;
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && runtime_ok(notes, secs, 600.0);
}

// 6. Growth sandwich at n = 3 with k = log_3 54: reported C <= 50 over 64
//    seeded vertices and R in {3,9,27}; C stable within 2x against n = 2;
//    pooled fitted slope within +-0.35 of 3.6309.
static bool criterion6(Suite& suite, const Graph& g3,
                       std::vector<std::string>& notes) {
  const double k_theory = growth_degree(GammaSequence({3, 6, 3}), 3).value;

  GrowthOptions opt3;
  opt3.sample_count = 64;
  opt3.seed = 1;
  opt3.radii = {3, 9, 27};
  opt3.full_enumeration_below = 0;
  GrowthProfile prof3 = growth_profile(g3, opt3, k_theory);

  GammaSequence gamma({3, 6, 3});
  Tiling t2 = power_tiling(3, gamma, 2);
  TangencyGraph g2 = build_tangency_graph(t2);
  suite.check_degree(t2, g2);
  GrowthOptions opt2 = opt3;
  opt2.radii = {3, 9};
  GrowthProfile prof2 = growth_profile(g2.graph, opt2, k_theory);

  bool c_ok = prof3.sandwich_C <= 50.0;
  double stability = prof3.sandwich_C / prof2.sandwich_C;
  bool stable_ok = stability <= 2.0 && stability >= 0.5;
  bool slope_ok = std::abs(prof3.fitted_k - 3.6309) <= 0.35;

  notes.push_back("C(n=3) = " + fmt(prof3.sandwich_C) +
                  " <= 50: " + (c_ok ? "ok" : "FAIL"));
  notes.push_back("C stability n=2 to n=3: " + fmt(stability) +
                  "x within [0.5, 2]: " + (stable_ok ? "ok" : "FAIL"));
  notes.push_back("fitted slope " + fmt(prof3.fitted_k) + " vs 3.6309 +- 0.35: " +
                  (slope_ok ? "ok" : "FAIL") + " (per-vertex slopes " +
                  fmt(prof3.min_vertex_slope) + ".." +
                  fmt(prof3.max_vertex_slope) + ")");
  if (!slope_ok)
    notes.push_back(
        "uniform-C clauses hold; the +-0.35 slope window is out of reach at "
        "this scale: R=27 balls are clipped by the diameter-78 boundary "
        "(scale-local slopes: 3->9 about 3.29, 9->27 about 2.94)");
  return c_ok && stable_ok && slope_ok;
}

// 7. Separator certificates on the n = 3 graph: fiber certificate sizes,
//    flow domination inside the regime, exact Menger self-checks.
static bool criterion7(const Tiling& t3, const TangencyGraph& g3,
                       std::vector<std::string>& notes) {
  auto start = Clock::now();
  FiberFamily fam = project(t3);

  GrowthOptions opt;
  opt.sample_count = 16;
  opt.seed = 2;
  opt.full_enumeration_below = 0;
  std::vector<std::uint32_t> verts = sample_vertices(g3.graph.n, opt);

  bool ok = true;
  int flows = 0, in_regime = 0;
  for (std::uint32_t v : verts) {
    for (std::int64_t R : {4, 12, 36}) {
      std::int64_t Rp = R + 2;
      AnnulusCertificate cert =
          annulus_path_certificate(t3, g3, fam, v, R);
      // h = floor(log_3(R/4)): 0, 1, 2 for R = 4, 12, 36
      std::int64_t h = R == 4 ? 0 : (R == 12 ? 1 : 2);
      BigInt required = bigint_pow(BigInt(12), static_cast<unsigned long>(h));
      if (cert.h != h ||
          BigInt(static_cast<unsigned long>(cert.fiber_ids.size())) <
              required ||
          !cert.sound()) {
        ok = false;
        notes.push_back("certificate failed at v=" + std::to_string(v) +
                        " R=" + std::to_string(R));
        continue;
      }
      auto s1 = sphere_vertices(g3.graph, v, R);
      auto s2 = sphere_vertices(g3.graph, v, Rp);
      if (s1.empty() || s2.empty()) continue;
      CutCertificate flow = disjoint_path_count(g3.graph, s1, s2);
      ++flows;
      if (!flow.menger_ok) {
        ok = false;
        notes.push_back("Menger self-check failed at v=" + std::to_string(v) +
                        " R=" + std::to_string(R));
      }
      if (annulus_regime_ok(t3, Rp)) {
        ++in_regime;
        if (flow.path_count <
            static_cast<std::int64_t>(cert.fiber_ids.size())) {
          ok = false;
          notes.push_back("flow below certificate at v=" + std::to_string(v) +
                          " R=" + std::to_string(R));
        }
      }
    }
  }
  notes.push_back(std::to_string(flows) + " flows, " +
                  std::to_string(in_regime) +
                  " inside the certified regime, Menger exact on all");
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  return ok && runtime_ok(notes, secs, 900.0);
}

// 8. Every fiber is a vertex-disjoint induced path with d_G-diameter
//    at least 3^n - 1.
static bool criterion8(const Tiling& t3, const TangencyGraph& g3,
                       std::vector<std::string>& notes) {
  FiberFamily fam = project(t3);
  bool ok = true;
  std::size_t total = 0;
  for (const auto& f : fam.fibers) total += f.size();
  if (total != t3.size()) {
    ok = false;
    notes.push_back("fibers do not partition the tile set");
  }
  for (std::uint32_t b = 0; b < fam.fiber_count() && ok; ++b) {
    FiberPathCheck chk = fiber_is_path(fam, g3, b);
    if (!chk.is_path) {
      ok = false;
      notes.push_back("fiber " + std::to_string(b) + ": " + chk.violation);
      break;
    }
    FiberDiameterCheck diam = fiber_diameter_bound(t3, fam, g3, b);
    if (!diam.ok || diam.bound != Rational(26)) {
      ok = false;
      notes.push_back("fiber diameter bound failed at " + std::to_string(b));
      break;
    }
  }
  notes.push_back(std::to_string(fam.fiber_count()) +
                  " fibers: disjoint induced paths, end distance >= 26");
  return ok;
}

// 9. Sphere packing at n=1: validation at 1e-9, isomorphism to the
//    (2k+3)-subdivision with k=72, ratios <= 1440, per-cube minimum radius
//    >= eps*l/(60d).
static bool criterion9(std::vector<std::string>& notes) {
  auto start = Clock::now();
  CubePacking cp = cube_packing(GammaSequence({3, 6, 3}), 1, 3);
  SpherePacking sp = sphere_pack(cp);
  PackingReport rep = validate_packing(sp, 1e-9);

  bool k_ok = sp.chain_len == 72 && sp.subdivision_order() == 147;
  bool validate_ok = rep.tangency_ok && rep.disjoint_ok && rep.separated_ok &&
                     rep.containment_ok;
  bool iso_ok = rep.iso_ok;
  bool ratio_ok = rep.m_ok && rep.M_realized <= 1440.0;
  bool radius_ok = rep.min_radius_ratio_60d >= 1.0;

  notes.push_back("k = " + std::to_string(sp.chain_len) + ", subdivision " +
                  std::to_string(sp.subdivision_order()) + ": " +
                  (k_ok ? "ok" : "FAIL"));
  notes.push_back(std::string("validation at 1e-9: ") +
                  (validate_ok ? "ok" : "FAIL") + " (worst tangency gap " +
                  fmt(rep.worst_tangency_gap) + ")");
  notes.push_back(std::string("tangency graph == [G]_147: ") +
                  (iso_ok ? "ok" : "FAIL"));
  notes.push_back("radius ratios: M_realized " + fmt(rep.M_realized) +
                  " <= 1440: " + (ratio_ok ? "ok" : "FAIL"));
  notes.push_back("min radius per cube vs eps*l/(60d): ratio " +
                  fmt(rep.min_radius_ratio_60d) + " >= 1: " +
                  (radius_ok ? "ok" : "FAIL"));
  if (!radius_ok)
    notes.push_back(
        "the pinned construction (hub l/4, leaf eps*l/8, k = ceil(6d/eps) "
        "chain spheres of radius |z-z'|/(2k)) yields r = l(1-eps)/(8k) = "
        "l/768 at facet-center contacts, below eps*l/(60d) = l/720; the "
        "stated floor is not attainable with the stated construction");

  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  bool rt = runtime_ok(notes, secs, 600.0);
  return k_ok && validate_ok && iso_ok && ratio_ok && radius_ok && rt;
}

// 10. Degenerate inputs are refused and violations carry witnesses; the
//     command line maps refusals to its documented exit codes.
static bool criterion10(Suite& suite, std::vector<std::string>& notes) {
  bool ok = true;

  // non-integral gamma refused for packing
  try {
    cube_packing(GammaSequence({2, 3, 2}), 1, 3);
    ok = false;
    notes.push_back("non-integral gamma was not refused");
  } catch (const std::invalid_argument& e) {
    notes.push_back(std::string("packing refusal: ") + e.what());
  }

  // duplicated tile detected with the pair reported
  {
    std::vector<std::vector<Rational>> corners = {
        {Rational(0), Rational(0)},
        {Rational(1, 2), Rational(0)},
        {Rational(1, 2), Rational(0)},
    };
    std::vector<std::vector<Rational>> sides = {
        {Rational(1, 2), Rational(1)},
        {Rational(1, 2), Rational(1)},
        {Rational(1, 2), Rational(1)},
    };
    ValidationReport rep =
        validate_tiling(Tiling::from_rational_tiles(2, corners, sides));
    if (rep.disjoint_ok || rep.overlap_pairs.empty()) {
      ok = false;
      notes.push_back("duplicated tile not detected");
    } else {
      notes.push_back(
          "duplicate pair reported: (" +
          std::to_string(rep.overlap_pairs[0][0]) + ", " +
          std::to_string(rep.overlap_pairs[0][1]) + ")");
    }
  }

  // perturbed packing fails validation with a named sphere
  {
    CubePacking cp = cube_packing(GammaSequence({3, 6, 3}), 1, 3);
    SpherePacking sp = sphere_pack(cp);
    std::uint32_t victim = sp.tangencies[10].first;
    sp.radii[victim] *= 1.001;
    PackingReport rep = validate_packing(sp, 1e-9);
    if (rep.tangency_ok || rep.violations.empty()) {
      ok = false;
      notes.push_back("perturbed packing passed validation");
    } else if (rep.violations[0].find(std::to_string(victim)) ==
               std::string::npos) {
      ok = false;
      notes.push_back("violation does not name the perturbed sphere");
    } else {
      notes.push_back("perturbation caught: " + rep.violations[0]);
    }
  }

  // exit codes: 2 validation, 3 budget
  if (!suite.cli_path.empty()) {
    auto rc_of = [&](const std::string& args) {
      std::string cmd = suite.cli_path + " " + args + " > /dev/null 2>&1";
      int rc = std::system(cmd.c_str());
      return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    int rc_invalid = rc_of("pack --d 3 --gamma 2,3,2 --power 1 --out " +
                           suite.work_dir + "/refused");
    int rc_budget = rc_of("build --d 3 --gamma 3,6,3 --power 9 --out " +
                          suite.work_dir + "/refused");
    if (rc_invalid != 2 || rc_budget != 3) {
      ok = false;
      notes.push_back("exit codes: invalid=" + std::to_string(rc_invalid) +
                      " budget=" + std::to_string(rc_budget));
    } else {
      notes.push_back("CLI exit codes: validation 2, budget 3");
    }
  }
  return ok;
}

// 11. Byte-identical outputs for identical configs.
static bool criterion11(Suite& suite, std::vector<std::string>& notes) {
  if (suite.cli_path.empty()) {
    notes.push_back("no --cli given");
    return false;
  }
  auto digests = [&](const std::string& dir) {
    json manifest = json::parse(read_file(dir + "/run_manifest.json"));
    return manifest.at("outputs");
  };
  auto run_cli = [&](const std::string& args, const std::string& dir) {
    std::string cmd = suite.cli_path + " " + args + " --out " + dir +
                      " > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
  };

  bool ok = true;
  const std::string base = suite.work_dir;
  struct Cmd {
    std::string name;
    std::string args;
  };
  const std::vector<Cmd> cmds = {
      {"build", "build --d 3 --gamma 3,6,3 --power 2"},
      {"growth", "analyze-growth --d 3 --gamma 3,6,3 --power 2 --radii 3,9 "
                 "--samples 32 --seed 5"},
      {"separators", "analyze-separators --d 3 --gamma 3,6,3 --power 2 "
                     "--samples 3 --radii 4 --seed 5"},
      {"pack", "pack --d 3 --gamma 3,6,3 --power 1 --tol 1e-9"},
  };
  for (const auto& c : cmds) {
    std::string d1 = base + "/" + c.name + "_a";
    std::string d2 = base + "/" + c.name + "_b";
    if (!run_cli(c.args, d1) || !run_cli(c.args, d2)) {
      ok = false;
      notes.push_back(c.name + ": command failed");
      continue;
    }
    if (digests(d1) != digests(d2)) {
      ok = false;
      notes.push_back(c.name + ": digests differ between identical runs");
    }
  }
  if (ok)
    notes.push_back("4 commands re-run: all output digests identical");
  return ok;
}

int main(int argc, char** argv) {
  Suite suite;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") suite.cli_path = argv[i + 1];
    if (flag == "--work") suite.work_dir = argv[i + 1];
  }
  if (std::system(("mkdir -p " + suite.work_dir).c_str()) != 0) {
    std::fprintf(stderr, "cannot create work dir %s\n",
                 suite.work_dir.c_str());
    return 1;
  }

  suite.run(1, "counting identities", criterion1);
  suite.run(2, "tile product algebra", criterion2);
  suite.run(3, "tangency oracle equivalence",
            [&](std::vector<std::string>& n) { return criterion3(suite, n); });

  // shared heavy build: the n = 3 gamma tiling and graph
  GammaSequence gamma({3, 6, 3});
  Tiling t3 = power_tiling(3, gamma, 3);
  TangencyGraph g3 = build_tangency_graph(t3);
  suite.check_degree(t3, g3);

  suite.run(5, "diameter sandwich (exact BFS, n <= 3)",
            [&](std::vector<std::string>& n) { return criterion5(suite, n); });
  suite.run(6, "growth sandwich at n = 3", [&](std::vector<std::string>& n) {
    return criterion6(suite, g3.graph, n);
  });
  suite.run(7, "separator certificates and flows",
            [&](std::vector<std::string>& n) { return criterion7(t3, g3, n); });
  suite.run(8, "fiber structure", [&](std::vector<std::string>& n) {
    return criterion8(t3, g3, n);
  });
  suite.run(9, "sphere packing", criterion9);
  suite.run(10, "degenerate and violation witnesses",
            [&](std::vector<std::string>& n) { return criterion10(suite, n); });
  suite.run(11, "determinism of command outputs",
            [&](std::vector<std::string>& n) { return criterion11(suite, n); });

  // criterion 4 aggregates every instance the suite constructed
  suite.run(4, "degree bound on all constructed instances",
            [&](std::vector<std::string>& notes) {
              notes.push_back(std::to_string(suite.degree_checked) +
                              " instances checked, " +
                              std::to_string(suite.degree_failed) +
                              " violations");
              return suite.degree_failed == 0 && suite.degree_checked >= 20;
            });

  int fails = 0;
  for (const auto& o : suite.outcomes)
    if (!o.pass) ++fails;
  std::printf("%d/%zu criteria passed\n", int(suite.outcomes.size()) - fails,
              suite.outcomes.size());
  return fails == 0 ? 0 : 1;
}
