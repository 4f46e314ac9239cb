// Acceptance harness: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "octoplane/classification.hpp"
#include "octoplane/jordan.hpp"
#include "octoplane/lie.hpp"
#include "octoplane/random.hpp"
#include "octoplane/store.hpp"
#include "octoplane/suites.hpp"
#include "octoplane/veronese.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace octoplane;

namespace {

const CDAlgebra& O = CDAlgebra::octonions();
const CDAlgebra& Os = CDAlgebra::split_octonions();
const CDAlgebra* const kBoth[] = {&O, &Os};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

AlgebraStore& store() {
  static AlgebraStore s(std::nullopt);
  return s;
}

const ConeTangentResult& cone_of(const CDAlgebra& alg) {
  static std::map<const CDAlgebra*, ConeTangentResult> memo;
  auto it = memo.find(&alg);
  if (it == memo.end()) it = memo.emplace(&alg, cone_tangent_algebra(alg)).first;
  return it->second;
}

void composition(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(1);
    std::size_t bad = 0;
    for (int t = 0; t < 500; ++t) {
      const auto x = rng.alg_element(*alg, 4), y = rng.alg_element(*alg, 4);
      if (norm(x * y) != norm(x) * norm(y)) ++bad;
    }
    out.require(bad == 0, alg->name() + ": " + std::to_string(bad) + " failures");
  }
  const double s = seconds_since(t0);
  out.require(s < 1.0, "took " + std::to_string(s) + " s");
  out.detail << " " << s << " s";
}

void rank_one(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(2);
    std::size_t bad = 0;
    for (int t = 0; t < 300; ++t) {
      const auto x = veronese_to_jordan(rng.veronese_vector(*alg));
      if (!sharp(x).is_zero() || det(x) != 0) ++bad;
    }
    std::size_t non = 0, bad_non = 0;
    while (non < 300) {
      const auto w = rng.v_element(*alg);
      if (is_veronese(w)) continue;
      ++non;
      if (sharp(veronese_to_jordan(w)).is_zero()) ++bad_non;
    }
    out.require(bad == 0, alg->name() + ": Veronese vector with nonzero sharp or det");
    out.require(bad_non == 0, alg->name() + ": non-Veronese vector with zero sharp");
  }
  const double s = seconds_since(t0);
  out.require(s < 5.0, "took " + std::to_string(s) + " s");
  out.detail << " " << s << " s";
}

void idempotents(Outcome& out) {
  for (const CDAlgebra* alg : kBoth) {
    Sampler rng(3);
    std::size_t tested = 0, bad = 0;
    while (tested < 300) {
      const auto w = rng.veronese_vector(*alg);
      if (sgn(w.lambda_sum()) == 0) continue;
      ++tested;
      const auto x = veronese_to_jordan(normalize_trace_one(w));
      if (!is_idempotent(x)) ++bad;
      const Rational c = rng.nonzero_rational();
      if (c != 1 && is_idempotent(x * c)) ++bad;
    }
    out.require(bad == 0, alg->name() + ": " + std::to_string(bad) + " failures");
  }
}

void dimensions(Outcome& out) {
  for (const CDAlgebra* alg : kBoth) {
    const auto expect = [&](const std::string& which, std::size_t dim, const std::string& extra = "") {
      const auto& sub = store().get(which, *alg, kGammaEuclidean, extra);
      out.detail << " " << alg->name() << ":" << which << "=" << sub.dim();
      out.require(sub.dim() == dim, alg->name() + " " + which + " expected " + std::to_string(dim));
    };
    expect("der-alg", 14);
    expect("tri", 28);
    expect("tri-diag", 14);
    expect("f4", 52);
    expect("e6", 78);
    expect("stabilizer", 36, "f4:E11");
    const auto& cone = cone_of(*alg);
    out.detail << " " << alg->name() << ":cone=" << cone.basis.size();
    out.require(cone.basis.size() == 79 && !cone.under_constrained, alg->name() + " cone expected 79");
  }
}

void characters(Outcome& out) {
  struct Want {
    const CDAlgebra* alg;
    const char* which;
    long chi;
  };
  const Want wants[] = {{&O, "der-alg", -14}, {&O, "f4-beta", -52}, {&O, "f4h", -20}, {&O, "e6", -26},
                        {&Os, "der-alg", 2},  {&Os, "f4-beta", 4},  {&Os, "f4h", 4},  {&Os, "e6", 6}};
  for (const auto& w : wants) {
    try {
      const auto& sub = store().get(w.which, *w.alg);
      out.detail << " " << w.alg->name() << ":" << sub.identified_name();
      out.require(sub.character() == w.chi, w.alg->name() + " " + w.which + " chi " + std::to_string(sub.character()));
      out.require(sub.signature().zeros == 0, w.alg->name() + " " + w.which + " Killing radical");
    } catch (const NotClosed& e) {
      out.require(false, w.alg->name() + " " + w.which + " not closed: " + e.what());
    }
  }
  // Every other algebra the harness builds must also be closed and semisimple.
  for (const CDAlgebra* alg : kBoth)
    for (const char* which : {"so", "tri", "tri-diag", "f4"}) {
      const auto& sub = store().get(which, *alg);
      out.require(sub.signature().zeros == 0, alg->name() + " " + which + " Killing radical");
    }
}

void cross_constructions(Outcome& out) {
  for (const CDAlgebra* alg : kBoth) {
    out.require(same_span(store().get("f4-beta", *alg).flat_basis(), store().get("f4", *alg).flat_basis()),
                alg->name() + ": beta-isometries differ from Jordan derivations");
    std::vector<RatVector> traceless;
    for (const auto& e : trace_zero_part(cone_of(*alg).basis)) traceless.push_back(e.entries());
    out.require(same_span(traceless, store().get("e6", *alg).flat_basis()),
                alg->name() + ": cone modulo identity differs from determinant-preserving maps");
  }
}

void projective_axioms(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto report = plane_axioms(O, Polarity::elliptic, 200, 0);
  const double s = seconds_since(t0);
  for (const auto& [name, n] : report.failures)
    if (n > 0) out.require(false, name + ": " + std::to_string(n));
  out.require(report.total_failures() == 0, "failures");
  out.require(s < 30.0, "took " + std::to_string(s) + " s");
  out.detail << " " << s << " s";
}

void classification(Outcome& out) {
  const auto table = build_classification_table(store());
  out.require(table.all_match(), "some constructed cell differs");
  std::size_t flagged = 0;
  for (const auto& row : table.rows)
    if ((row.space == "OsH2" || row.space == "OH2") && !row.collineation.constructed() &&
        row.collineation.display().find("not constructed") != std::string::npos)
      ++flagged;
  out.require(flagged == 2, "hyperbolic collineation cells flagged: " + std::to_string(flagged));
}

void audit(Outcome& out) {
  const auto a = audit_translation(50, 0);
  out.require(a.consistent_with_documentation(), "discrepancies differ from the documented list");
  for (const auto& c : a.components) {
    if (c.disagreements == 0) continue;
    out.detail << " " << c.component << ":" << c.disagreements << "/50";
    out.require(c.evaluations.size() == 50, c.component + " lacks 50 evaluations");
    for (const auto& e : c.evaluations)
      if (!e.contains("derived") || !e.contains("printed")) {
        out.require(false, c.component + " evaluation lacks a formula value");
        break;
      }
  }
  out.require(a.derived_non_veronese == 0, "derived translation left the Veronese set");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria = {
      {"composition law", composition},
      {"rank one iff Veronese", rank_one},
      {"trace-one idempotents", idempotents},
      {"Lie algebra dimensions", dimensions},
      {"Killing characters", characters},
      {"cross-construction agreement", cross_constructions},
      {"projective axioms over O", projective_axioms},
      {"classification table", classification},
      {"translation audit", audit},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    all = all && out.pass;
    std::printf("%s %d %s:%s\n", out.pass ? "PASS" : "FAIL", index++, name, out.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
