#pragma once

#include "octoplane/lie.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace octoplane {

/// Bumped whenever a constraint system changes; part of every cache key.
inline constexpr const char* kConstructionVersion = "octoplane-constructions-1";

/// Builds the named Lie algebras once per process and, when a cache
/// directory is set, reuses bases stored on disk by earlier runs.
///
/// Names: so, der-alg, tri, tri-diag, der-jordan (uses gamma), e6, f4 (der-jordan
/// with gamma +++), f4-beta (beta-preserving part of e6), f4h (beta_minus-preserving
/// part of e6), beta-flip3, stabilizer (extra is "parent:point", e.g. "f4:E11"),
/// triangle and quadrangle (extra names the parent: e6 by default, f4-beta or f4h).
class AlgebraStore {
 public:
  explicit AlgebraStore(std::optional<std::filesystem::path> cache_dir = std::nullopt);

  /// OCTOPLANE_CACHE_DIR, else $XDG_CACHE_HOME/octoplane, else $HOME/.cache/octoplane.
  static std::optional<std::filesystem::path> default_cache_dir();

  const LieSubalgebra& get(const std::string& which, const CDAlgebra& alg, Gamma gamma = kGammaEuclidean,
                           const std::string& extra = "");

  std::size_t cache_hits() const { return hits_; }

 private:
  std::unique_ptr<LieSubalgebra> build(const std::string& which, const CDAlgebra& alg, Gamma gamma,
                                       const std::string& extra);
  std::optional<std::filesystem::path> file_for(const std::string& id) const;

  std::optional<std::filesystem::path> dir_;
  std::map<std::string, std::unique_ptr<LieSubalgebra>> memo_;
  std::size_t hits_ = 0;
};

/// E11, E22 or E33 of the given twist.
JordanElement named_idempotent(const std::string& name, const CDAlgebra& alg, Gamma gamma = kGammaEuclidean);

/// The points (0,0), (0), (inf) and, for the quadrangle, (1,1).
std::vector<VElement> triangle_points(const CDAlgebra& alg);
std::vector<VElement> quadrangle_points(const CDAlgebra& alg);

}  // namespace octoplane
