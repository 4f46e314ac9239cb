#include "octoplane/store.hpp"

#include "octoplane/serialize.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace octoplane {

namespace fs = std::filesystem;

AlgebraStore::AlgebraStore(std::optional<fs::path> cache_dir) : dir_(std::move(cache_dir)) {}

std::optional<fs::path> AlgebraStore::default_cache_dir() {
  if (const char* d = std::getenv("OCTOPLANE_CACHE_DIR"); d && *d) return fs::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "octoplane";
  if (const char* d = std::getenv("HOME"); d && *d) return fs::path(d) / ".cache" / "octoplane";
  return std::nullopt;
}

JordanElement named_idempotent(const std::string& name, const CDAlgebra& alg, Gamma gamma) {
  if (name == "E11") return JordanElement::diagonal_idempotent(alg, 0, gamma);
  if (name == "E22") return JordanElement::diagonal_idempotent(alg, 1, gamma);
  if (name == "E33") return JordanElement::diagonal_idempotent(alg, 2, gamma);
  throw std::invalid_argument("unknown point '" + name + "' (expected E11, E22 or E33)");
}

std::vector<VElement> triangle_points(const CDAlgebra& alg) {
  const AlgElement zero(alg);
  return {embed_point(Finite{zero, zero}, alg).representative(), embed_point(Slope{zero}, alg).representative(),
          embed_point(Infinity{}, alg).representative()};
}

std::vector<VElement> quadrangle_points(const CDAlgebra& alg) {
  auto pts = triangle_points(alg);
  const AlgElement one = AlgElement::scalar(alg, 1);
  pts.push_back(embed_point(Finite{one, one}, alg).representative());
  return pts;
}

std::optional<fs::path> AlgebraStore::file_for(const std::string& id) const {
  if (!dir_) return std::nullopt;
  std::string safe;
  for (char c : id) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_')
      safe += c;
    else
      safe += c == '+' ? 'p' : c == '|' ? '.' : '_';
  }
  return *dir_ / (safe + ".json");
}

const LieSubalgebra& AlgebraStore::get(const std::string& which, const CDAlgebra& alg, Gamma gamma,
                                       const std::string& extra) {
  const std::string id = which + "|" + alg.name() + "|" + to_string(gamma) + "|" + extra;
  if (auto it = memo_.find(id); it != memo_.end()) return *it->second;

  const auto file = file_for(std::string(kConstructionVersion) + "_" + id);
  if (file && fs::exists(*file)) {
    try {
      std::ifstream in(*file);
      const Json j = Json::parse(in);
      if (j.at("key") == id && j.at("version") == kConstructionVersion) {
        auto sub = std::make_unique<LieSubalgebra>(j.at("report").at("label").get<std::string>(),
                                                   basis_from_json(j.at("basis")), &alg);
        if (lie_report(*sub) == j.at("report")) {
          ++hits_;
          return *memo_.emplace(id, std::move(sub)).first->second;
        }
      }
    } catch (const std::exception&) {
      // Unreadable or stale entries are rebuilt below.
    }
  }

  auto sub = build(which, alg, gamma, extra);
  if (file) {
    std::error_code ec;
    fs::create_directories(file->parent_path(), ec);
    Json j{{"key", id},
           {"version", kConstructionVersion},
           {"report", lie_report(*sub)},
           {"basis", basis_to_json(sub->basis(), sub->ambient_dim())}};
    const fs::path tmp = file->string() + ".tmp";
    std::ofstream out(tmp);
    if (out << j.dump()) {
      out.close();
      fs::rename(tmp, *file, ec);
    }
  }
  return *memo_.emplace(id, std::move(sub)).first->second;
}

std::unique_ptr<LieSubalgebra> AlgebraStore::build(const std::string& which, const CDAlgebra& alg, Gamma gamma,
                                                   const std::string& extra) {
  auto own = [](LieSubalgebra s) { return std::make_unique<LieSubalgebra>(std::move(s)); };
  if (which == "so") return own(so_of_form(alg));
  if (which == "der-alg") return own(derivations_of_algebra(alg));
  if (which == "tri") return own(triality_algebra(alg));
  if (which == "tri-diag") return own(triality_diagonal(alg));
  if (which == "der-jordan") return own(jordan_derivations(alg, gamma));
  if (which == "f4") return own(LieSubalgebra(get("der-jordan", alg, kGammaEuclidean)));
  if (which == "e6") return own(det_preserving_algebra(alg));
  if (which == "f4-beta") return own(form_preserving_subalgebra(get("e6", alg), FormKind::beta));
  if (which == "f4h") return own(form_preserving_subalgebra(get("e6", alg), FormKind::beta_minus));
  if (which == "beta-flip3") return own(form_preserving_subalgebra(get("e6", alg), FormKind::beta_flip_slot3));
  if (which == "triangle" || which == "quadrangle") {
    const std::string parent = extra.empty() ? "e6" : extra;
    if (parent != "e6" && parent != "f4-beta" && parent != "f4h")
      throw std::invalid_argument("unknown parent '" + parent + "' (expected e6, f4-beta or f4h)");
    const auto points = which == "triangle" ? triangle_points(alg) : quadrangle_points(alg);
    return own(projective_stabilizer(get(parent, alg), points, which + " stabilizer in " + parent));
  }
  if (which == "stabilizer") {
    const auto colon = extra.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("stabilizer key must be parent:point");
    const std::string parent = extra.substr(0, colon), point = extra.substr(colon + 1);
    if (parent != "f4" && parent != "f4h" && parent != "e6")
      throw std::invalid_argument("unknown parent '" + parent + "' (expected f4, f4h or e6)");
    return own(stabilizer_subalgebra(get(parent, alg), named_idempotent(point, alg)));
  }
  throw std::invalid_argument("unknown algebra construction '" + which + "'");
}

}  // namespace octoplane
