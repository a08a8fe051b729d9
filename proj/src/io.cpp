#include "tilings/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tilings {

json tiling_to_json(const Tiling& t) {
  json j;
  j["dim"] = t.dim();
  if (t.provenance()) {
    j["gamma"] = t.provenance()->gamma.entries();
    j["power"] = t.provenance()->power;
  } else {
    j["gamma"] = nullptr;
    j["power"] = nullptr;
  }
  std::vector<std::int64_t> dens(t.dim());
  for (int a = 0; a < t.dim(); ++a) dens[a] = t.den(a);
  j["denominators"] = dens;
  json tiles = json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (int a = 0; a < t.dim(); ++a) row.push_back(t.lo(i, a));
    for (int a = 0; a < t.dim(); ++a) row.push_back(t.len(i, a));
    tiles.push_back(std::move(row));
  }
  j["tiles"] = std::move(tiles);
  return j;
}

Tiling tiling_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<std::int64_t> dens =
      j.at("denominators").get<std::vector<std::int64_t>>();
  std::vector<std::int64_t> lo, len;
  for (const auto& row : j.at("tiles")) {
    if (row.size() != static_cast<std::size_t>(2 * dim))
      throw std::invalid_argument("bad tile row width");
    for (int a = 0; a < dim; ++a) lo.push_back(row[a].get<std::int64_t>());
    for (int a = 0; a < dim; ++a)
      len.push_back(row[dim + a].get<std::int64_t>());
  }
  std::optional<Provenance> prov;
  if (!j.at("gamma").is_null())
    prov = Provenance{GammaSequence(j["gamma"].get<std::vector<std::int64_t>>()),
                      j.at("power").get<int>()};
  return Tiling::from_scaled(dim, std::move(dens), std::move(lo),
                             std::move(len), std::move(prov));
}

json graph_to_json(const TangencyGraph& g) {
  json j;
  j["n"] = g.graph.n;
  j["dim"] = g.dim;
  json edges = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    edges.push_back({g.graph.edges[e].first, g.graph.edges[e].second,
                     static_cast<int>(g.edge_dir[e]) + 1});
  }
  j["edges"] = std::move(edges);
  return j;
}

TangencyGraph graph_from_json(const json& j) {
  TangencyGraph g;
  g.dim = j.at("dim").get<int>();
  std::uint32_t n = j.at("n").get<std::uint32_t>();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& row : j.at("edges")) {
    edges.emplace_back(row[0].get<std::uint32_t>(),
                       row[1].get<std::uint32_t>());
    g.edge_dir.push_back(static_cast<std::uint8_t>(row[2].get<int>() - 1));
  }
  g.graph = Graph::from_edges(n, std::move(edges));
  return g;
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
std::uint32_t get_u32(const std::string& in, std::size_t& pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in.at(pos++)))
         << (8 * i);
  return v;
}
std::uint64_t get_u64(const std::string& in, std::size_t& pos) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in.at(pos++)))
         << (8 * i);
  return v;
}

}  // namespace

void write_graph_csr(const std::string& path, const Graph& g) {
  std::string out;
  out += "TCSR";
  put_u32(out, 1);  // version
  put_u32(out, g.n);
  put_u64(out, g.edges.size());
  for (std::uint32_t i = 0; i <= g.n; ++i) put_u64(out, g.offsets[i]);
  for (std::uint32_t v : g.neighbors) put_u32(out, v);
  write_file(path, out);
}

Graph read_graph_csr(const std::string& path) {
  std::string in = read_file(path);
  if (in.substr(0, 4) != "TCSR") throw std::invalid_argument("bad CSR magic");
  std::size_t pos = 4;
  std::uint32_t version = get_u32(in, pos);
  if (version != 1) throw std::invalid_argument("bad CSR version");
  std::uint32_t n = get_u32(in, pos);
  std::uint64_t m = get_u64(in, pos);
  std::vector<std::uint64_t> offsets(n + 1);
  for (std::uint32_t i = 0; i <= n; ++i) offsets[i] = get_u64(in, pos);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(m);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint64_t k = offsets[v]; k < offsets[v + 1]; ++k) {
      std::uint32_t w = get_u32(in, pos);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

namespace {

const char* role_name(SphereRole r) {
  switch (r) {
    case SphereRole::kHub: return "hub";
    case SphereRole::kChain: return "chain";
    case SphereRole::kLeaf: return "leaf";
  }
  return "?";
}

}  // namespace

json packing_to_json(const SpherePacking& s) {
  json j;
  j["dim"] = s.dim;
  j["cube_count"] = s.cube_count;
  j["k"] = s.chain_len;
  j["subdivision"] = s.subdivision_order();
  j["alpha"] = s.alpha.get_str();
  j["eps"] = s.eps.get_str();
  json spheres = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json sp;
    json c = json::array();
    for (int a = 0; a < s.dim; ++a) c.push_back(to_double(s.center_at(i, a)));
    sp["center"] = std::move(c);
    sp["radius"] = to_double(s.radii[i]);
    sp["cube"] = s.tags[i].cube;
    sp["role"] = role_name(s.tags[i].role);
    if (s.tags[i].role != SphereRole::kHub) {
      sp["edge"] = s.tags[i].edge;
      if (s.tags[i].role == SphereRole::kChain)
        sp["chain_pos"] = s.tags[i].chain_pos;
    }
    spheres.push_back(std::move(sp));
  }
  j["spheres"] = std::move(spheres);
  json tang = json::array();
  for (auto [a, b] : s.tangencies) {
    qreal dist = 0;
    for (int ax = 0; ax < s.dim; ++ax) {
      qreal t = s.center_at(a, ax) - s.center_at(b, ax);
      dist += t * t;
    }
    double gap =
        to_double(qsqrt(dist) - (s.radii[a] + s.radii[b]));
    tang.push_back({a, b, gap});
  }
  j["tangencies"] = std::move(tang);
  return j;
}

std::string growth_profile_csv(const GrowthProfile& p) {
  std::ostringstream os;
  os << "vertex_id,R,ball_size\n";
  for (const GrowthSample& s : p.samples)
    os << s.vertex << "," << s.radius << "," << s.ball << "\n";
  return os.str();
}

json growth_summary_json(const GrowthProfile& p, const DiameterResult& diam) {
  json j;
  if (p.k_theory) j["k_theory"] = *p.k_theory;
  else j["k_theory"] = nullptr;
  j["k_fit"] = p.fitted_k;
  j["k_fit_vertex_min"] = p.min_vertex_slope;
  j["k_fit_vertex_max"] = p.max_vertex_slope;
  j["C_sandwich"] = p.sandwich_C;
  j["diam_bounds"] = {diam.lower, diam.upper};
  j["diam_exact"] = diam.exact;
  return j;
}

json certificate_to_json(const AnnulusCertificate& cert, std::int64_t r_prime,
                         bool regime, const CutCertificate& flow) {
  json j;
  j["v"] = cert.center;
  j["R"] = cert.radius;
  j["Rprime"] = r_prime;
  j["h"] = cert.h;
  j["fiber_count"] = cert.fiber_ids.size();
  j["required_count"] = cert.required_count.get_str();
  j["count_ok"] = cert.count_ok;
  j["sound"] = cert.sound();
  j["flow_count"] = flow.path_count;
  j["cut_size"] = flow.min_cut.size();
  j["menger_ok"] = flow.menger_ok;
  j["regime_ok"] = regime;
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

json local_view_to_json(const LocalView& view) {
  json j;
  j["level_n"] = view.level;
  j["certified"] = view.certified;
  j["center"] = view.center;
  j["radius"] = view.radius;
  j["n"] = view.induced.n;
  j["vertices"] = view.vertices;
  json edges = json::array();
  for (const auto& [u, v] : view.induced.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

namespace {

struct Mesh {
  std::vector<std::array<double, 3>> verts;
  std::vector<std::array<std::uint32_t, 3>> faces;
};

// icosphere with `refine` midpoint subdivisions
Mesh icosphere(int refine) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Mesh m;
  auto add = [&m](double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    m.verts.push_back({x / n, y / n, z / n});
  };
  add(-1, phi, 0); add(1, phi, 0); add(-1, -phi, 0); add(1, -phi, 0);
  add(0, -1, phi); add(0, 1, phi); add(0, -1, -phi); add(0, 1, -phi);
  add(phi, 0, -1); add(phi, 0, 1); add(-phi, 0, -1); add(-phi, 0, 1);
  m.faces = {{0, 11, 5},  {0, 5, 1},   {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},   {5, 11, 4},  {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},   {3, 4, 2},   {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},   {2, 4, 11},  {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int step = 0; step < refine; ++step) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    auto mid = [&](std::uint32_t a, std::uint32_t b) {
      auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const auto& va = m.verts[a];
      const auto& vb = m.verts[b];
      add((va[0] + vb[0]) / 2, (va[1] + vb[1]) / 2, (va[2] + vb[2]) / 2);
      std::uint32_t id = static_cast<std::uint32_t>(m.verts.size() - 1);
      midpoint[key] = id;
      return id;
    };
    std::vector<std::array<std::uint32_t, 3>> faces;
    faces.reserve(m.faces.size() * 4);
    for (auto [a, b, c] : m.faces) {
      std::uint32_t ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      faces.push_back({a, ab, ca});
      faces.push_back({b, bc, ab});
      faces.push_back({c, ca, bc});
      faces.push_back({ab, bc, ca});
    }
    m.faces = std::move(faces);
  }
  return m;
}

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string spheres_to_ply(const SpherePacking& s, int refine) {
  if (s.dim != 3)
    throw std::invalid_argument("PLY export needs a 3-dimensional packing");
  Mesh base = icosphere(refine);
  const std::size_t n = s.size();
  std::string out;
  out += "ply\nformat ascii 1.0\n";
  out += "element vertex " + std::to_string(n * base.verts.size()) + "\n";
  out += "property float x\nproperty float y\nproperty float z\n";
  out += "element face " + std::to_string(n * base.faces.size()) + "\n";
  out += "property list uchar int vertex_indices\nend_header\n";
  for (std::size_t i = 0; i < n; ++i) {
    double r = to_double(s.radii[i]);
    for (const auto& v : base.verts) {
      for (int a = 0; a < 3; ++a) {
        if (a) out += ' ';
        append_double(out, to_double(s.center_at(i, a)) + r * v[a]);
      }
      out += '\n';
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t off = i * base.verts.size();
    for (const auto& f : base.faces) {
      out += "3 " + std::to_string(off + f[0]) + " " +
             std::to_string(off + f[1]) + " " + std::to_string(off + f[2]) +
             "\n";
    }
  }
  return out;
}

std::string spheres_to_obj(const SpherePacking& s, int refine) {
  if (s.dim != 3)
    throw std::invalid_argument("OBJ export needs a 3-dimensional packing");
  Mesh base = icosphere(refine);
  std::string out = "# sphere packing\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    double r = to_double(s.radii[i]);
    for (const auto& v : base.verts) {
      out += "v";
      for (int a = 0; a < 3; ++a) {
        out += ' ';
        append_double(out, to_double(s.center_at(i, a)) + r * v[a]);
      }
      out += '\n';
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t off = i * base.verts.size() + 1;  // OBJ is 1-based
    for (const auto& f : base.faces)
      out += "f " + std::to_string(off + f[0]) + " " +
             std::to_string(off + f[1]) + " " + std::to_string(off + f[2]) +
             "\n";
  }
  return out;
}

std::string cubes_to_obj(const Tiling& cubes) {
  if (cubes.dim() != 3)
    throw std::invalid_argument("OBJ export needs 3-dimensional cubes");
  std::string out = "# cube packing\n";
  static const int corner_bits[8][3] = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0},
                                        {0, 1, 0}, {0, 0, 1}, {1, 0, 1},
                                        {1, 1, 1}, {0, 1, 1}};
  static const int quads[6][4] = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
                                  {2, 3, 7, 6}, {1, 2, 6, 5}, {3, 0, 4, 7}};
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    for (const auto& bits : corner_bits) {
      out += "v";
      for (int a = 0; a < 3; ++a) {
        double lo = cubes.corner(i, a).get_d();
        double side = cubes.side(i, a).get_d();
        out += ' ';
        append_double(out, lo + bits[a] * side);
      }
      out += '\n';
    }
    std::size_t off = i * 8 + 1;
    for (const auto& q : quads)
      out += "f " + std::to_string(off + q[0]) + " " +
             std::to_string(off + q[1]) + " " + std::to_string(off + q[2]) +
             " " + std::to_string(off + q[3]) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(contents.data(),
            static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return std::string(buf);
}

}  // namespace tilings
