#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tilings/growth.hpp"
#include "tilings/orthant.hpp"
#include "tilings/packing.hpp"
#include "tilings/separators.hpp"
#include "tilings/tangency.hpp"
#include "tilings/tiling.hpp"

namespace tilings {

using json = nlohmann::json;

// Tiling JSON: header {dim, gamma, power, denominators}, tiles as arrays of
// integer-scaled coordinates (lo then len per axis), canonical order.
json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const json& j);

// Graph JSON: {n, dim, edges: [[u, v, dir]]} with 1-based direction labels.
json graph_to_json(const TangencyGraph& g);
TangencyGraph graph_from_json(const json& j);

// CSR adjacency in a little-endian binary container.
void write_graph_csr(const std::string& path, const Graph& g);
Graph read_graph_csr(const std::string& path);

json packing_to_json(const SpherePacking& s);

std::string growth_profile_csv(const GrowthProfile& p);
json growth_summary_json(const GrowthProfile& p, const DiameterResult& diam);

json certificate_to_json(const AnnulusCertificate& cert,
                         std::int64_t r_prime, bool regime,
                         const CutCertificate& flow);

// Graph JSON plus the {level_n, certified} header of an orthant window.
json local_view_to_json(const LocalView& view);

// ASCII geometry exports (d = 3 only).
std::string spheres_to_ply(const SpherePacking& s, int refine = 1);
std::string spheres_to_obj(const SpherePacking& s, int refine = 1);
std::string cubes_to_obj(const Tiling& cubes);

// file helpers + digests
void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

}  // namespace tilings
