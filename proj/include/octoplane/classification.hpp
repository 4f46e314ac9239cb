#pragma once

#include "octoplane/serialize.hpp"
#include "octoplane/store.hpp"

#include <string>
#include <vector>

namespace octoplane {

/// Real-form name in display case, e.g. "e6(-26)" -> "E6(-26)".
std::string display_name(const std::string& identified);

struct TableCell {
  std::string reference;  // display name, e.g. "F4(-20)"
  std::string computed;   // empty when not constructed
  std::string source;     // how the computed algebra was obtained
  bool constructed() const { return !computed.empty(); }
  bool matches() const { return !constructed() || computed == reference; }
  /// Computed name, or the reference name with a marker when not constructed.
  std::string display() const;
};

struct TableRow {
  std::string space;
  /// Rows over the complex numbers are listed from reference values only.
  bool computed = true;
  TableCell collineation, isometry, quadrangle_fixing;
  bool matches() const { return collineation.matches() && isometry.matches() && quadrangle_fixing.matches(); }
};

/// A plane as a quotient of an isometry algebra by a point stabilizer, with
/// (#nc, #c) the positive and negative Killing directions lost in the quotient.
struct PlaneType {
  std::string plane;
  std::string quotient;
  std::size_t dim = 0;
  std::size_t noncompact = 0, compact = 0;
  std::size_t reference_noncompact = 0, reference_compact = 0;
  long reference_character = 0;
  bool matches() const { return noncompact == reference_noncompact && compact == reference_compact; }
  long character() const { return static_cast<long>(noncompact) - static_cast<long>(compact); }
  /// The reference character disagrees in sign with #nc - #c of the reference type for two planes.
  bool character_sign_flagged() const { return character() != reference_character; }
};

struct DimensionCheck {
  std::string name;
  long expected = 0;
  long computed = 0;
  bool matches() const { return expected == computed; }
};

struct ClassificationTable {
  std::vector<TableRow> rows;
  std::vector<PlaneType> planes;
  std::vector<DimensionCheck> checks;
  bool all_match() const;
  Json to_json() const;
  /// space,collineation,isometry,quadrangle_fixing,source
  std::string to_csv() const;
  std::string to_text() const;
};

ClassificationTable build_classification_table(AlgebraStore& store);

}  // namespace octoplane
