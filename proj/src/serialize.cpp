#include "octoplane/serialize.hpp"

#include <stdexcept>

namespace octoplane {
namespace {

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer");
}

AlgElement alg_from(const CDAlgebra& alg, const Json& j) {
  if (!j.is_array() || j.size() != 8) throw std::invalid_argument("expected 8 algebra coordinates");
  AlgElement a(alg);
  for (std::size_t k = 0; k < 8; ++k) a[k] = rational_from(j[k]);
  return a;
}

}  // namespace

Json to_json(const AlgElement& a) {
  Json j = Json::array();
  for (const auto& q : a.coords()) j.push_back(to_string(q));
  return j;
}

Json to_json(const VElement& w) {
  Json j;
  j["x"] = Json::array({to_json(w.x(0)), to_json(w.x(1)), to_json(w.x(2))});
  j["lambda"] = Json::array({to_string(w.lambda(0)), to_string(w.lambda(1)), to_string(w.lambda(2))});
  j["mu"] = w.algebra().mu();
  return j;
}

Json to_json(const JordanElement& x) {
  Json j;
  j["lambda"] = Json::array({to_string(x.lambda(0)), to_string(x.lambda(1)), to_string(x.lambda(2))});
  j["x"] = Json::array({to_json(x.x(0)), to_json(x.x(1)), to_json(x.x(2))});
  j["mu"] = x.algebra().mu();
  j["gamma"] = Json::array({x.gamma()[0], x.gamma()[1], x.gamma()[2]});
  return j;
}

JordanElement jordan_from_json(const Json& j) {
  try {
    const int mu = j.value("mu", -1);
    if (mu != 1 && mu != -1) throw std::invalid_argument("mu must be +1 or -1");
    const CDAlgebra& alg = CDAlgebra::with_mu(mu);
    Gamma g = kGammaEuclidean;
    if (j.contains("gamma")) {
      const auto& gj = j.at("gamma");
      if (!gj.is_array() || gj.size() != 3) throw std::invalid_argument("gamma must have three entries");
      for (std::size_t i = 0; i < 3; ++i) g[i] = gj[i].get<int>();
    }
    const auto& l = j.at("lambda");
    const auto& x = j.at("x");
    if (!l.is_array() || l.size() != 3 || !x.is_array() || x.size() != 3)
      throw std::invalid_argument("lambda and x must have three entries");
    return JordanElement({rational_from(l[0]), rational_from(l[1]), rational_from(l[2])},
                         {alg_from(alg, x[0]), alg_from(alg, x[1]), alg_from(alg, x[2])}, g);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed Jordan element: ") + e.what());
  }
}

Json lie_report(const LieSubalgebra& sub) {
  const auto& s = sub.signature();
  Json j;
  j["name"] = sub.identified_name();
  j["label"] = sub.label();
  j["ambient_dim"] = sub.ambient_dim();
  j["dim"] = sub.dim();
  j["signature"] = Json::array({s.positives, s.negatives, s.zeros});
  j["character"] = sub.character();
  j["closed"] = sub.closed();
  j["basis_digest"] = sub.basis_digest();
  return j;
}

Json basis_to_json(const std::vector<LinearEndo>& basis, std::size_t ambient) {
  Json out;
  out["ambient_dim"] = ambient;
  Json list = Json::array();
  for (const auto& b : basis) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < ambient; ++r)
      for (std::size_t c = 0; c < ambient; ++c)
        if (sgn(b.matrix(r, c)) != 0) entries.push_back(Json::array({r, c, to_string(b.matrix(r, c))}));
    list.push_back(std::move(entries));
  }
  out["basis"] = std::move(list);
  return out;
}

std::vector<LinearEndo> basis_from_json(const Json& j) {
  try {
    const std::size_t n = j.at("ambient_dim").get<std::size_t>();
    std::vector<LinearEndo> out;
    for (const auto& entries : j.at("basis")) {
      RatMatrix m(n, n);
      for (const auto& e : entries) {
        const auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
        if (r >= n || c >= n) throw std::invalid_argument("basis entry out of range");
        m(r, c) = rational_from(e.at(2));
      }
      out.push_back(LinearEndo{std::move(m)});
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed basis: ") + e.what());
  }
}

Json multiplication_table(const CDAlgebra& alg) {
  Json j;
  j["algebra"] = alg.name();
  j["mu"] = alg.mu();
  Json metric = Json::array();
  for (std::size_t k = 0; k < 8; ++k) metric.push_back(alg.metric(k));
  j["metric"] = metric;
  Json table = Json::array();
  for (std::size_t a = 0; a < 8; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < 8; ++b) {
      const auto e = alg.product(a, b);
      row.push_back({{"index", e.index}, {"sign", e.sign}});
    }
    table.push_back(row);
  }
  j["table"] = table;
  return j;
}

}  // namespace octoplane
