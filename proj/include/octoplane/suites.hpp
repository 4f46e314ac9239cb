#pragma once

#include "octoplane/serialize.hpp"
#include "octoplane/veronese.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace octoplane {

struct CheckResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// First failing instance, or a witness for existence checks.
  Json detail;
  bool passed() const { return failures == 0; }
};

/// Composition, conjugation, inner-product, alternativity, Moufang and
/// zero-divisor checks on seeded random elements.
std::vector<CheckResult> algebra_check(const CDAlgebra& alg, std::size_t samples, std::uint64_t seed);

/// A pair of nonzero elements with zero product, searched among null
/// elements of the form 1 + u with norm(u) = -1. Empty over O.
std::optional<std::pair<AlgElement, AlgElement>> zero_divisor_witness(const CDAlgebra& alg);

struct PlaneReport {
  std::string algebra;
  Polarity polarity = Polarity::elliptic;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::size_t> failures;
  std::size_t degenerate_pairs = 0;
  std::size_t total_failures() const;
  Json to_json() const;
};

/// Samples point pairs, line pairs, triality and translation instances and
/// counts every violated incidence statement.
PlaneReport plane_axioms(const CDAlgebra& alg, Polarity polarity, std::size_t samples, std::uint64_t seed);

struct AuditComponent {
  std::string component;  // "x1", ..., "lambda3"
  std::string derived;    // formula text
  std::string printed;
  std::size_t disagreements = 0;
  Json evaluations;  // per-sample values of both formulas
};

struct TranslationAudit {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<AuditComponent> components;
  std::size_t derived_non_veronese = 0;
  std::size_t printed_non_veronese = 0;
  /// Components whose printed update is known to differ from the derived one.
  static const std::vector<std::string>& documented_typos();
  std::vector<std::string> discrepancies() const;
  bool consistent_with_documentation() const;
  Json to_json() const;
};

/// Compares translate and translate_as_printed component by component on
/// random Veronese vectors and shifts, over O.
TranslationAudit audit_translation(std::size_t samples, std::uint64_t seed);

}  // namespace octoplane
