#include "octoplane/classification.hpp"

#include <cctype>
#include <sstream>

namespace octoplane {
namespace {

TableCell cell(const std::string& reference, const LieSubalgebra& sub, std::string source) {
  return {reference, display_name(sub.identified_name()), std::move(source)};
}

TableCell reference_only(const std::string& reference) { return {reference, "", "paper"}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

PlaneType plane_type(const std::string& plane, const LieSubalgebra& parent, const LieSubalgebra& stab,
                     std::size_t reference_nc, std::size_t reference_c, long reference_chi) {
  PlaneType t;
  t.plane = plane;
  t.quotient = display_name(parent.identified_name()) + "/" + stab.identified_name();
  t.dim = parent.dim() - stab.dim();
  t.noncompact = parent.signature().positives - stab.signature().positives;
  t.compact = parent.signature().negatives - stab.signature().negatives;
  t.reference_noncompact = reference_nc;
  t.reference_compact = reference_c;
  t.reference_character = reference_chi;
  return t;
}

}  // namespace

std::string display_name(const std::string& identified) {
  std::string s = identified;
  if (!s.empty() && (s[0] == 'e' || s[0] == 'f' || s[0] == 'g')) s[0] = static_cast<char>(std::toupper(s[0]));
  return s;
}

std::string TableCell::display() const {
  return constructed() ? computed : reference + " [paper; not constructed]";
}

bool ClassificationTable::all_match() const {
  for (const auto& r : rows)
    if (!r.matches()) return false;
  for (const auto& p : planes)
    if (!p.matches()) return false;
  for (const auto& c : checks)
    if (!c.matches()) return false;
  return true;
}

ClassificationTable build_classification_table(AlgebraStore& store) {
  const CDAlgebra& o = CDAlgebra::octonions();
  const CDAlgebra& os = CDAlgebra::split_octonions();
  ClassificationTable t;

  TableRow complex{"OP2_C", false, reference_only("E6^C"), reference_only("F4^C"), reference_only("G2^C")};
  t.rows.push_back(complex);
  t.rows.push_back({"OP2", true, cell("E6(-26)", store.get("e6", o), "det-preserving maps of J3(O)"),
                    cell("F4(-52)", store.get("f4-beta", o), "e6 preserving beta"),
                    cell("G2(-14)", store.get("quadrangle", o, kGammaEuclidean, "e6"), "quadrangle stabilizer in e6")});
  t.rows.push_back({"OsP2", true, cell("E6(6)", store.get("e6", os), "det-preserving maps of J3(Os)"),
                    cell("F4(4)", store.get("f4-beta", os), "e6 preserving beta"),
                    cell("G2(2)", store.get("quadrangle", os, kGammaEuclidean, "e6"), "quadrangle stabilizer in e6")});
  t.rows.push_back({"OsH2", true, reference_only("E6(2)"),
                    cell("F4(4)", store.get("f4h", os), "e6 preserving beta_minus"),
                    cell("G2(2)", store.get("quadrangle", os, kGammaEuclidean, "f4h"),
                         "quadrangle stabilizer in the beta_minus isometries")});
  t.rows.push_back({"OH2", true, reference_only("E6(-14)"),
                    cell("F4(-20)", store.get("f4h", o), "e6 preserving beta_minus"),
                    cell("G2(-14)", store.get("quadrangle", o, kGammaEuclidean, "f4h"),
                         "quadrangle stabilizer in the beta_minus isometries")});

  t.planes.push_back(plane_type("OP2", store.get("f4", o), store.get("stabilizer", o, kGammaEuclidean, "f4:E11"), 0,
                                16, 16));
  t.planes.push_back(plane_type("OH2", store.get("f4h", o), store.get("stabilizer", o, kGammaEuclidean, "f4h:E33"),
                                16, 0, -16));
  t.planes.push_back(plane_type("OH2~", store.get("f4h", o),
                                store.get("stabilizer", o, kGammaEuclidean, "f4h:E11"), 8, 8, 0));
  t.planes.push_back(plane_type("OsH2~", store.get("f4", os),
                                store.get("stabilizer", os, kGammaEuclidean, "f4:E11"), 8, 8, 0));

  for (const CDAlgebra* alg : {&o, &os}) {
    const std::string n = alg->name();
    const long e6 = static_cast<long>(store.get("e6", *alg).dim());
    const long f4 = static_cast<long>(store.get("f4", *alg).dim());
    const long g2 = static_cast<long>(store.get("quadrangle", *alg, kGammaEuclidean, "e6").dim());
    const long spin9 = static_cast<long>(store.get("stabilizer", *alg, kGammaEuclidean, "f4:E11").dim());
    t.checks.push_back({"triangle stabilizer in f4 (" + n + ")", 28,
                        static_cast<long>(store.get("triangle", *alg, kGammaEuclidean, "f4-beta").dim())});
    t.checks.push_back({"dim e6 - dim g2 (" + n + ")", 64, e6 - g2});
    t.checks.push_back({"dim f4 - dim g2 (" + n + ")", 38, f4 - g2});
    t.checks.push_back({"dim f4 - dim stabilizer(E11) (" + n + ")", 16, f4 - spin9});
  }
  return t;
}

Json ClassificationTable::to_json() const {
  Json j;
  j["rows"] = Json::array();
  for (const auto& r : rows) {
    Json row{{"space", r.space}, {"computed", r.computed}, {"matches", r.matches()}};
    for (const auto& [key, c] : {std::pair{"collineation", &r.collineation}, std::pair{"isometry", &r.isometry},
                                 std::pair{"quadrangle_fixing", &r.quadrangle_fixing}}) {
      row[key] = {{"paper", c->reference},
                  {"computed", c->constructed() ? Json(c->computed) : Json(nullptr)},
                  {"source", c->source},
                  {"matches", c->matches()}};
    }
    j["rows"].push_back(row);
  }
  j["plane_types"] = Json::array();
  for (const auto& p : planes)
    j["plane_types"].push_back({{"plane", p.plane},
                                {"quotient", p.quotient},
                                {"dim", p.dim},
                                {"type", {p.noncompact, p.compact}},
                                {"paper_type", {p.reference_noncompact, p.reference_compact}},
                                {"character", p.character()},
                                {"paper_character", p.reference_character},
                                {"character_sign_flagged", p.character_sign_flagged()},
                                {"matches", p.matches()}});
  j["checks"] = Json::array();
  for (const auto& c : checks)
    j["checks"].push_back(
        {{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"matches", c.matches()}});
  j["all_match"] = all_match();
  return j;
}

std::string ClassificationTable::to_csv() const {
  std::ostringstream out;
  out << "space,collineation,isometry,quadrangle_fixing,source\n";
  for (const auto& r : rows) {
    std::string source;
    if (!r.computed) {
      source = "paper";
    } else {
      source = "collineation: " + r.collineation.source + "; isometry: " + r.isometry.source +
               "; quadrangle_fixing: " + r.quadrangle_fixing.source;
    }
    const auto shown = [&](const TableCell& c) { return r.computed ? c.display() : c.reference; };
    out << csv_field(r.space) << ',' << csv_field(shown(r.collineation)) << ',' << csv_field(shown(r.isometry))
        << ',' << csv_field(shown(r.quadrangle_fixing)) << ',' << csv_field(source) << '\n';
  }
  return out.str();
}

std::string ClassificationTable::to_text() const {
  std::ostringstream out;
  const auto pad = [](const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); };
  const auto show = [](const TableRow& r, const TableCell& c) {
    if (!r.computed) return c.reference + " (paper)";
    if (!c.constructed()) return c.display();
    return c.reference + " / " + c.computed + (c.matches() ? "" : "  MISMATCH");
  };
  out << "Motion algebras (paper / computed)\n";
  out << pad("space", 8) << pad("collineation", 34) << pad("isometry", 22) << "quadrangle-fixing\n";
  for (const auto& r : rows)
    out << pad(r.space, 8) << pad(show(r, r.collineation), 34) << pad(show(r, r.isometry), 22)
        << show(r, r.quadrangle_fixing) << '\n';
  out << "\nPlane types (#nc, #c)\n";
  for (const auto& p : planes) {
    out << pad(p.plane, 8) << pad(p.quotient, 20) << "dim " << p.dim << "  type (" << p.noncompact << ','
        << p.compact << ")  paper (" << p.reference_noncompact << ',' << p.reference_compact << ")"
        << (p.matches() ? "" : "  MISMATCH");
    if (p.character_sign_flagged())
      out << "  note: #nc-#c = " << p.character() << ", paper states chi = " << p.reference_character;
    out << '\n';
  }
  out << "\nDimension checks\n";
  for (const auto& c : checks)
    out << pad(c.name, 40) << c.computed << " (expected " << c.expected << ")" << (c.matches() ? "" : "  MISMATCH")
        << '\n';
  out << '\n' << (all_match() ? "all computed cells match" : "MISMATCHES FOUND") << '\n';
  return out.str();
}

}  // namespace octoplane
