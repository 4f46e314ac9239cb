#pragma once

#include "octoplane/jordan.hpp"
#include "octoplane/lie.hpp"

#include <json.hpp>

#include <string>

namespace octoplane {

using Json = nlohmann::json;

/// {"lambda": [3], "x": [[8] x 3], "mu": +-1, "gamma": [3]}; rationals as "p/q" strings.
Json to_json(const JordanElement& x);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
JordanElement jordan_from_json(const Json& j);

Json to_json(const AlgElement& a);
Json to_json(const VElement& w);

/// {"name", "label", "ambient_dim", "dim", "signature": [p, n, z], "character", "closed", "basis_digest"}
Json lie_report(const LieSubalgebra& sub);

/// Basis as sparse [row, col, "p/q"] triples, for the on-disk cache.
Json basis_to_json(const std::vector<LinearEndo>& basis, std::size_t ambient);
std::vector<LinearEndo> basis_from_json(const Json& j);

/// 8x8 table of {"index", "sign"} entries plus the metric.
Json multiplication_table(const CDAlgebra& alg);

}  // namespace octoplane
