#include "octoplane/suites.hpp"

#include "octoplane/linalg.hpp"
#include "octoplane/random.hpp"

#include <functional>

namespace octoplane {
namespace {

Json pair_json(const AlgElement& x, const AlgElement& y) { return {{"x", to_json(x)}, {"y", to_json(y)}}; }

Json triple_json(const AlgElement& x, const AlgElement& y, const AlgElement& z) {
  return {{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
}

// Runs `trial` `samples` times; a trial returns a counterexample or null.
CheckResult run(const std::string& name, std::size_t samples, const std::function<Json()>& trial) {
  CheckResult r{name, samples, 0, nullptr};
  for (std::size_t t = 0; t < samples; ++t) {
    Json bad = trial();
    if (bad.is_null()) continue;
    if (r.failures++ == 0) r.detail = std::move(bad);
  }
  return r;
}

RatMatrix left_multiplication(const AlgElement& x) {
  RatMatrix m(8, 8);
  for (std::size_t c = 0; c < 8; ++c) {
    const AlgElement col = x * AlgElement::unit(x.algebra(), c);
    for (std::size_t r = 0; r < 8; ++r) m(r, c) = col[r];
  }
  return m;
}

}  // namespace

std::optional<std::pair<AlgElement, AlgElement>> zero_divisor_witness(const CDAlgebra& alg) {
  const AlgElement one = AlgElement::scalar(alg, 1);
  for (std::size_t k = 1; k < 8; ++k) {
    const AlgElement u = AlgElement::unit(alg, k);
    if (alg.metric(k) != -1) continue;
    const AlgElement x = one + u, y = one - u;
    if ((x * y).is_zero()) return std::make_pair(x, y);
  }
  return std::nullopt;
}

std::vector<CheckResult> algebra_check(const CDAlgebra& alg, std::size_t samples, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<CheckResult> out;
  auto el = [&] { return s.alg_element(alg, 3); };

  out.push_back(run("composition", samples, [&]() -> Json {
    const auto x = el(), y = el();
    return norm(x * y) == norm(x) * norm(y) ? Json() : pair_json(x, y);
  }));
  out.push_back(run("conjugation", samples, [&]() -> Json {
    const auto x = el(), y = el();
    return conj(conj(x)) == x && conj(x * y) == conj(y) * conj(x) ? Json() : pair_json(x, y);
  }));
  out.push_back(run("norm_is_real_part", samples, [&]() -> Json {
    const auto x = el();
    return conj(x) * x == AlgElement::scalar(alg, norm(x)) ? Json() : Json{{"x", to_json(x)}};
  }));
  out.push_back(run("inner_polarization", samples, [&]() -> Json {
    const auto x = el(), y = el();
    const Rational i = inner(x, y);
    const bool ok = i == norm(x + y) - norm(x) - norm(y) && conj(x) * y + conj(y) * x == AlgElement::scalar(alg, i) &&
                    inner(x, x) == 2 * norm(x);
    return ok ? Json() : pair_json(x, y);
  }));
  out.push_back(run("alternativity", samples, [&]() -> Json {
    const auto x = el(), y = el();
    const bool ok = associator(x, x, y).is_zero() && associator(y, x, x).is_zero() && associator(x, y, x).is_zero();
    return ok ? Json() : pair_json(x, y);
  }));
  out.push_back(run("moufang", samples, [&]() -> Json {
    const auto x = el(), y = el(), z = el();
    return ((x * y) * x) * z == x * (y * (x * z)) ? Json() : triple_json(x, y, z);
  }));

  CheckResult table{"basis_table", 0, 0, nullptr};
  for (std::size_t a = 0; a < 8; ++a) {
    const auto ea = AlgElement::unit(alg, a);
    for (std::size_t b = 0; b < 8; ++b) {
      const auto eb = AlgElement::unit(alg, b);
      ++table.trials;
      bool ok = norm(ea * eb) == norm(ea) * norm(eb);
      if (a == 0) ok = ok && ea * eb == eb;
      if (b == 0) ok = ok && ea * eb == ea;
      ok = ok && associator(ea, ea, eb).is_zero() && associator(ea, eb, eb).is_zero();
      if (!ok && table.failures++ == 0) table.detail = pair_json(ea, eb);
    }
  }
  out.push_back(table);

  if (alg.is_division()) {
    out.push_back(run("no_zero_divisors", samples, [&]() -> Json {
      auto x = el();
      if (x.is_zero()) x = AlgElement::scalar(alg, 1);
      return rank(left_multiplication(x)) == 8 ? Json() : Json{{"x", to_json(x)}};
    }));
  } else {
    CheckResult zd{"zero_divisor_witness", 1, 0, nullptr};
    if (auto w = zero_divisor_witness(alg))
      zd.detail = pair_json(w->first, w->second);
    else
      zd.failures = 1;
    out.push_back(zd);
  }
  return out;
}

// ---------------------------------------------------------------- plane

std::size_t PlaneReport::total_failures() const {
  std::size_t n = 0;
  for (const auto& [k, v] : failures) n += v;
  return n;
}

Json PlaneReport::to_json() const {
  Json j;
  j["algebra"] = algebra;
  j["polarity"] = to_string(polarity);
  j["samples"] = samples;
  j["seed"] = seed;
  j["axiom_failures"] = failures;
  j["degenerate_pairs"] = degenerate_pairs;
  return j;
}

namespace {

struct PlaneChecker {
  const CDAlgebra& alg;
  Polarity kind;
  Sampler s;
  PlaneReport& report;

  void fail(const std::string& key, bool bad) {
    if (bad) ++report.failures[key];
  }

  ProjPoint distinct_from(const ProjPoint& p) {
    for (;;) {
      ProjPoint q = s.point(alg);
      if (!(q == p)) return q;
    }
  }

  ProjLine random_line() { return polarity(s.point(alg), kind); }

  bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    if (a == b || a == c || b == c) return true;
    return incident(c, join(a, b, kind));
  }

  // A point of l different from `avoid`, obtained by meeting l with random lines.
  std::optional<ProjPoint> other_point_on(const ProjLine& l, const ProjPoint& avoid) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      ProjLine m = random_line();
      if (m.pole == l.pole) continue;
      ProjPoint r = meet(l, m);
      if (!(r == avoid)) return r;
    }
    return std::nullopt;
  }

  void point_pair() {
    const ProjPoint p = s.point(alg);
    const ProjPoint q = distinct_from(p);
    const ProjLine l = join(p, q, kind);
    fail("join_incidence", !incident(p, l) || !incident(q, l));
    fail("join_symmetry", !(join(q, p, kind) == l));
    if (auto r = other_point_on(l, p)) {
      fail("join_uniqueness", !incident(*r, l) || !(join(p, *r, kind) == l));
      fail("triality_incidence", !collinear(ProjPoint(triality(p.representative())),
                                            ProjPoint(triality(q.representative())),
                                            ProjPoint(triality(r->representative()))));
      const AlgElement a = s.alg_element(alg), b = s.alg_element(alg);
      auto tr = [&](const ProjPoint& x) { return ProjPoint(translate(a, b, x.representative())); };
      fail("translation_incidence", !collinear(tr(p), tr(q), tr(*r)));
    }
  }

  void line_pair() {
    const ProjLine l = random_line();
    ProjLine m = random_line();
    while (m.pole == l.pole) m = random_line();
    const ProjPoint x = meet(l, m);
    fail("meet_incidence", !incident(x, l) || !incident(x, m));
    fail("meet_symmetry", !(meet(m, l) == x));
    // Any other line n through x meets l exactly at x.
    const ProjPoint y = distinct_from(x);
    const ProjLine n = join(x, y, kind);
    if (!(n == l)) fail("meet_uniqueness", !(meet(l, n) == x));
  }

  void single_point() {
    const ProjPoint p = s.point(alg);
    fail("polarity_involution", !(polarity_inverse(polarity(p, kind)) == p));
    const ProjLine l = random_line();
    fail("polarity_involution", !(polarity(polarity_inverse(l), kind) == l));
    if (alg.is_division() && kind == Polarity::elliptic) fail("elliptic_polar_anisotropic", incident(p, polarity(p)));

    const VElement w = p.representative();
    fail("triality_order", !(triality(triality(triality(w))) == w));
    fail("triality_veronese", !is_veronese(triality(w)));
    fail("triality_beta", beta(triality(w), triality(l.pole.representative())) != beta(w, l.pole.representative()));

    const AlgElement a = s.alg_element(alg), b = s.alg_element(alg);
    fail("translation_veronese", !is_veronese(translate(a, b, w)));
    fail("translation_identity", !(translate(AlgElement(alg), AlgElement(alg), w) == w));

    const AlgElement x = s.alg_element(alg), y = s.alg_element(alg);
    const VElement e = embed_point(Finite{x, y}, alg).representative();
    fail("translation_chart", !(ProjPoint(translate(a, b, e)) == embed_point(Finite{x + a, y + b}, alg)));
    const AlgElement a2 = s.alg_element(alg), b2 = s.alg_element(alg);
    fail("translation_composition",
         !(ProjPoint(translate(a, b, translate(a2, b2, e))) == ProjPoint(translate(a + a2, b + b2, e))));
    fail("chart_roundtrip", !(embed_point(chart_of(p), alg) == p));
  }
};

}  // namespace

PlaneReport plane_axioms(const CDAlgebra& alg, Polarity polarity, std::size_t samples, std::uint64_t seed) {
  PlaneReport report;
  report.algebra = alg.name();
  report.polarity = polarity;
  report.samples = samples;
  report.seed = seed;
  for (const char* key :
       {"join_incidence", "join_symmetry", "join_uniqueness", "meet_incidence", "meet_symmetry", "meet_uniqueness",
        "polarity_involution", "triality_order", "triality_veronese", "triality_beta", "triality_incidence",
        "translation_veronese", "translation_identity", "translation_chart", "translation_composition",
        "translation_incidence", "chart_roundtrip"})
    report.failures[key] = 0;
  if (alg.is_division() && polarity == Polarity::elliptic) report.failures["elliptic_polar_anisotropic"] = 0;

  PlaneChecker c{alg, polarity, Sampler(seed), report};
  for (std::size_t t = 0; t < samples; ++t) {
    for (auto step : {&PlaneChecker::point_pair, &PlaneChecker::line_pair, &PlaneChecker::single_point}) {
      try {
        (c.*step)();
      } catch (const DegeneratePair&) {
        ++report.degenerate_pairs;
      } catch (const DegenerateChart&) {
        ++report.degenerate_pairs;
      } catch (const NotVeronese&) {
        ++report.degenerate_pairs;
      }
    }
  }
  if (alg.is_division()) report.failures["degenerate_pair"] = report.degenerate_pairs;
  return report;
}

// ---------------------------------------------------------------- audit

const std::vector<std::string>& TranslationAudit::documented_typos() {
  static const std::vector<std::string> typos{"lambda1", "lambda2"};
  return typos;
}

std::vector<std::string> TranslationAudit::discrepancies() const {
  std::vector<std::string> out;
  for (const auto& c : components)
    if (c.disagreements > 0) out.push_back(c.component);
  return out;
}

bool TranslationAudit::consistent_with_documentation() const {
  const auto& doc = documented_typos();
  for (const auto& c : discrepancies())
    if (std::find(doc.begin(), doc.end(), c) == doc.end()) return false;
  return derived_non_veronese == 0;
}

Json TranslationAudit::to_json() const {
  Json j;
  j["samples"] = samples;
  j["seed"] = seed;
  j["documented_typos"] = documented_typos();
  j["discrepancies"] = discrepancies();
  j["derived_non_veronese"] = derived_non_veronese;
  j["printed_non_veronese"] = printed_non_veronese;
  Json comps = Json::array();
  for (const auto& c : components) {
    Json e{{"component", c.component},
           {"derived", c.derived},
           {"printed", c.printed},
           {"disagreements", c.disagreements}};
    if (c.disagreements > 0) e["evaluations"] = c.evaluations;
    comps.push_back(e);
  }
  j["components"] = comps;
  j["consistent"] = consistent_with_documentation();
  return j;
}

TranslationAudit audit_translation(std::size_t samples, std::uint64_t seed) {
  const CDAlgebra& alg = CDAlgebra::octonions();
  TranslationAudit audit;
  audit.samples = samples;
  audit.seed = seed;
  audit.components = {
      {"x1", "x1 + l3 a", "x1 + l3 a", 0, Json::array()},
      {"x2", "x2 + l3 ~b", "x2 + l3 ~b", 0, Json::array()},
      {"x3", "x3 + b ~x1 + ~x2 ~a + l3 b ~a", "x3 + b ~x1 + ~x2 ~a + l3 b ~a", 0, Json::array()},
      {"lambda1", "l1 + <~x2, b> + l3 |b|^2", "l1 + <~x2, a> + l3 |b|^2", 0, Json::array()},
      {"lambda2", "l2 + <x1, a> + l3 |a|^2", "l2 + <~x1, a> + l3 |a|^2", 0, Json::array()},
      {"lambda3", "l3", "l3", 0, Json::array()},
  };
  Sampler s(seed);
  for (std::size_t t = 0; t < samples; ++t) {
    const VElement w = s.veronese_vector(alg);
    const AlgElement a = s.alg_element(alg), b = s.alg_element(alg);
    const VElement d = translate(a, b, w), p = translate_as_printed(a, b, w);
    if (!is_veronese(d)) ++audit.derived_non_veronese;
    if (!is_veronese(p)) ++audit.printed_non_veronese;
    for (std::size_t k = 0; k < 6; ++k) {
      Json dv, pv;
      bool same;
      if (k < 3) {
        same = d.x(k) == p.x(k);
        dv = to_json(d.x(k));
        pv = to_json(p.x(k));
      } else {
        same = d.lambda(k - 3) == p.lambda(k - 3);
        dv = to_string(d.lambda(k - 3));
        pv = to_string(p.lambda(k - 3));
      }
      auto& c = audit.components[k];
      if (!same) ++c.disagreements;
      c.evaluations.push_back({{"sample", t}, {"derived", dv}, {"printed", pv}});
    }
  }
  return audit;
}

}  // namespace octoplane
