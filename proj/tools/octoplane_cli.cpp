// octoplane: exact constructions on the octonionic planes and their motion algebras.

#include "octoplane/classification.hpp"
#include "octoplane/random.hpp"
#include "octoplane/serialize.hpp"
#include "octoplane/store.hpp"
#include "octoplane/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace octoplane;

namespace {

struct RunConfig {
  std::string algebra = "O";
  std::string gamma = "+++";
  std::string polarity = "elliptic";
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::string format = "text";
  std::string output;
  bool no_timestamp = false;
  bool no_cache = false;
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const CDAlgebra& algebra_of(const std::string& name) {
  if (name == "O") return CDAlgebra::octonions();
  if (name == "Os") return CDAlgebra::split_octonions();
  throw UsageError("--algebra must be O or Os");
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

class Emitter {
 public:
  explicit Emitter(const RunConfig& cfg) : cfg_(cfg) {}

  void json(Json j) {
    if (!cfg_.no_timestamp) j["timestamp"] = utc_timestamp();
    write(j.dump(2) + "\n");
  }

  void write(const std::string& text) {
    if (cfg_.output.empty() || cfg_.output == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(cfg_.output);
    if (!(out << text)) throw std::runtime_error("cannot write " + cfg_.output);
  }

 private:
  const RunConfig& cfg_;
};

AlgebraStore make_store(const RunConfig& cfg) {
  return AlgebraStore(cfg.no_cache ? std::nullopt : AlgebraStore::default_cache_dir());
}

int cmd_algebra_check(const RunConfig& cfg) {
  const CDAlgebra& alg = algebra_of(cfg.algebra);
  const auto results = algebra_check(alg, cfg.samples, cfg.seed);
  bool ok = true;
  Json checks = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed();
    checks.push_back({{"name", r.name},
                      {"trials", r.trials},
                      {"failures", r.failures},
                      {"passed", r.passed()},
                      {"detail", r.detail}});
  }
  Emitter out(cfg);
  if (cfg.format == "json") {
    out.json({{"command", "algebra-check"},
              {"algebra", alg.name()},
              {"seed", cfg.seed},
              {"samples", cfg.samples},
              {"checks", checks},
              {"passed", ok}});
  } else {
    std::ostringstream s;
    for (const auto& r : results) {
      s << (r.passed() ? "PASS " : "FAIL ") << r.name << "  " << r.failures << "/" << r.trials;
      if (!r.passed() || r.name == "zero_divisor_witness") s << "  " << r.detail.dump();
      s << '\n';
    }
    s << alg.name() << ": " << (ok ? "all checks passed" : "violations found") << '\n';
    out.write(s.str());
  }
  return ok ? 0 : 1;
}

struct LieOptions {
  std::string which;
  std::string parent = "f4";
  std::string point = "E11";
  std::string form;
  std::string expect;
  long expect_dim = -1;
  std::size_t cone_samples = 60;
};

int cmd_lie(const RunConfig& cfg, const LieOptions& opt) {
  const CDAlgebra& alg = algebra_of(cfg.algebra);
  AlgebraStore store = make_store(cfg);
  Json extra = Json::object();
  std::optional<LieSubalgebra> local;
  const LieSubalgebra* sub = nullptr;

  if (opt.which == "so") {
    sub = &store.get("so", alg);
  } else if (opt.which == "der-alg") {
    sub = &store.get("der-alg", alg);
  } else if (opt.which == "tri") {
    sub = &store.get("tri", alg);
    const auto& so = store.get("so", alg);
    std::vector<RatVector> projected;
    for (const auto& e : triality_projection(*sub)) projected.push_back(e.entries());
    extra["projection_onto_so"] = {{"rank", row_echelon(projected).rank()},
                                   {"same_span_as_so", same_span(projected, so.flat_basis())}};
    const auto& diag = store.get("tri-diag", alg);
    extra["diagonal_slice"] = lie_report(diag);
  } else if (opt.which == "der-jordan") {
    sub = &store.get("der-jordan", alg, parse_gamma(cfg.gamma));
  } else if (opt.which == "e6") {
    sub = &store.get("e6", alg);
  } else if (opt.which == "fix-form") {
    std::string form = opt.form;
    if (form.empty()) form = parse_polarity(cfg.polarity) == Polarity::elliptic ? "beta" : "beta_minus";
    if (form == "beta")
      sub = &store.get("f4-beta", alg);
    else if (form == "beta_minus")
      sub = &store.get("f4h", alg);
    else if (form == "beta_flip_slot3")
      sub = &store.get("beta-flip3", alg);
    else
      throw UsageError("--form must be beta, beta_minus or beta_flip_slot3");
    if (form == "beta") extra["same_span_as_der_jordan"] = same_span(sub->flat_basis(), store.get("f4", alg).flat_basis());
  } else if (opt.which == "stabilizer") {
    if (opt.parent != "f4" && opt.parent != "f4h" && opt.parent != "e6")
      throw UsageError("--parent must be f4, f4h or e6");
    if (opt.point != "E11" && opt.point != "E22" && opt.point != "E33")
      throw UsageError("--point must be E11, E22 or E33");
    const auto& parent = store.get(opt.parent, alg);
    sub = &store.get("stabilizer", alg, kGammaEuclidean, opt.parent + ":" + opt.point);
    extra["parent"] = lie_report(parent);
    extra["coset_dim"] = parent.dim() - sub->dim();
  } else if (opt.which == "cone") {
    const auto cone = cone_tangent_algebra(alg, opt.cone_samples, cfg.seed);
    local.emplace("cone tangent algebra (" + alg.name() + ")", cone.basis, &alg);
    sub = &*local;
    std::vector<RatVector> traceless;
    for (const auto& e : trace_zero_part(cone.basis)) traceless.push_back(e.entries());
    extra["samples_per_batch"] = cone.samples_per_batch;
    extra["batch_dims"] = cone.batch_dims;
    extra["first_batch_insufficient"] = cone.first_batch_insufficient();
    extra["under_constrained"] = cone.under_constrained;
    extra["trace_zero_part_equals_e6"] = same_span(traceless, store.get("e6", alg).flat_basis());
    if (cone.under_constrained)
      std::cerr << "warning: cone constraints did not stabilize; try a larger --cone-samples\n";
  } else {
    throw UsageError("unknown Lie algebra '" + opt.which + "'");
  }

  bool ok = true;
  Json expectations = Json::object();
  if (!opt.expect.empty()) {
    const bool hit = sub->identified_name() == opt.expect;
    expectations["name"] = {{"expected", opt.expect}, {"matched", hit}};
    ok = ok && hit;
  }
  if (opt.expect_dim >= 0) {
    const bool hit = static_cast<long>(sub->dim()) == opt.expect_dim;
    expectations["dim"] = {{"expected", opt.expect_dim}, {"matched", hit}};
    ok = ok && hit;
  }

  Json report = lie_report(*sub);
  report["command"] = "lie " + opt.which;
  report["algebra"] = alg.name();
  if (opt.which == "der-jordan") report["gamma"] = cfg.gamma;
  for (auto& [k, v] : extra.items()) report[k] = v;
  if (!expectations.empty()) report["expectations"] = expectations;
  report["passed"] = ok;

  Emitter out(cfg);
  if (cfg.format == "text") {
    std::ostringstream s;
    const auto& sig = sub->signature();
    s << sub->label() << ": dim " << sub->dim() << ", Killing signature (" << sig.positives << ", " << sig.negatives
      << ", " << sig.zeros << "), chi " << sub->character() << ", " << sub->identified_name() << '\n';
    for (auto& [k, v] : extra.items()) {
      if (v.is_object() && v.contains("name"))
        s << k << ": " << v["name"].get<std::string>() << ", dim " << v["dim"].dump() << '\n';
      else
        s << k << ": " << v.dump() << '\n';
    }
    for (auto& [k, v] : expectations.items())
      s << "expect " << k << " " << v["expected"].dump() << ": " << (v["matched"].get<bool>() ? "ok" : "MISMATCH")
        << '\n';
    out.write(s.str());
  } else {
    out.json(report);
  }
  if (!ok) std::cerr << "expectation not met: got " << sub->identified_name() << ", dim " << sub->dim() << '\n';
  return ok ? 0 : 1;
}

int cmd_plane_axioms(const RunConfig& cfg) {
  if (cfg.samples == 0) throw UsageError("--samples must be positive");
  const CDAlgebra& alg = algebra_of(cfg.algebra);
  const auto report = plane_axioms(alg, parse_polarity(cfg.polarity), cfg.samples, cfg.seed);
  Emitter out(cfg);
  if (cfg.format == "json") {
    out.json(report.to_json());
  } else {
    std::ostringstream s;
    s << alg.name() << " plane, " << to_string(report.polarity) << " polarity, " << report.samples
      << " samples, seed " << report.seed << '\n';
    for (const auto& [k, v] : report.failures) s << "  " << k << ": " << v << '\n';
    s << "degenerate pairs: " << report.degenerate_pairs << "\ntotal failures: " << report.total_failures() << '\n';
    out.write(s.str());
  }
  return alg.is_division() && report.total_failures() > 0 ? 1 : 0;
}

int cmd_table(const RunConfig& cfg) {
  AlgebraStore store = make_store(cfg);
  const auto table = build_classification_table(store);
  Emitter out(cfg);
  if (cfg.format == "json")
    out.json(table.to_json());
  else if (cfg.format == "csv")
    out.write(table.to_csv());
  else
    out.write(table.to_text());
  return table.all_match() ? 0 : 1;
}

int cmd_mul_table(const RunConfig& cfg) {
  const CDAlgebra& alg = algebra_of(cfg.algebra);
  Json j = multiplication_table(alg);
  Emitter out(cfg);
  if (cfg.format == "json") {
    out.json(j);
    return 0;
  }
  std::ostringstream s;
  s << alg.name() << " (mu = " << alg.mu() << ")\n     ";
  for (std::size_t b = 0; b < 8; ++b) s << "   i" << b;
  s << '\n';
  for (std::size_t a = 0; a < 8; ++a) {
    s << "i" << a << "   ";
    for (std::size_t b = 0; b < 8; ++b) {
      const auto e = alg.product(a, b);
      s << "  " << (e.sign < 0 ? '-' : '+') << 'i' << int(e.index);
    }
    s << '\n';
  }
  s << "metric:";
  for (std::size_t k = 0; k < 8; ++k) s << ' ' << (alg.metric(k) > 0 ? '+' : '-');
  s << '\n';
  out.write(s.str());
  return 0;
}

int cmd_audit(const RunConfig& cfg) {
  const auto audit = audit_translation(cfg.samples, cfg.seed);
  Emitter out(cfg);
  if (cfg.format == "json") {
    out.json(audit.to_json());
  } else {
    std::ostringstream s;
    s << "translation audit: " << audit.samples << " samples, seed " << audit.seed << '\n';
    for (const auto& c : audit.components) {
      s << "  " << c.component << ": " << (c.disagreements ? "DIFFERS" : "agrees") << " (" << c.disagreements << "/"
        << audit.samples << ")\n    derived: " << c.derived << "\n    printed: " << c.printed << '\n';
    }
    s << "non-Veronese images: derived " << audit.derived_non_veronese << ", printed " << audit.printed_non_veronese
      << '\n';
    s << (audit.consistent_with_documentation() ? "discrepancies limited to documented components"
                                                : "UNDOCUMENTED DISCREPANCY")
      << '\n';
    out.write(s.str());
  }
  return audit.consistent_with_documentation() ? 0 : 1;
}

const char* rank_name(RankClass r) {
  switch (r) {
    case RankClass::rank0: return "0";
    case RankClass::rank1: return "1";
    case RankClass::rank2: return "2";
    case RankClass::rank3: return "3";
  }
  return "?";
}

int cmd_jordan_info(const RunConfig& cfg, const std::string& element) {
  const CDAlgebra& alg = algebra_of(cfg.algebra);
  const Gamma gamma = parse_gamma(cfg.gamma);
  JordanElement x = element.empty() ? Sampler(cfg.seed).jordan_element(alg, gamma) : [&] {
    try {
      Json j = Json::parse(element);
      if (!j.contains("mu")) j["mu"] = alg.mu();
      if (!j.contains("gamma")) j["gamma"] = {gamma[0], gamma[1], gamma[2]};
      return jordan_from_json(j);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("--element: ") + e.what());
    }
  }();
  Json j{{"element", to_json(x)},
         {"trace", to_string(trace(x))},
         {"det", to_string(det(x))},
         {"norm_form", to_string(quadratic_form(x))},
         {"square", to_json(jordan_square(x))},
         {"sharp", to_json(sharp(x))},
         {"rank", rank_name(rank_of(x))},
         {"idempotent", is_idempotent(x)}};
  Emitter out(cfg);
  if (cfg.format == "json") {
    out.json(j);
  } else {
    std::ostringstream s;
    s << "trace " << j["trace"].get<std::string>() << ", det " << j["det"].get<std::string>() << ", rank "
      << j["rank"].get<std::string>() << (is_idempotent(x) ? ", idempotent" : "") << '\n';
    out.write(s.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions on the octonionic and split-octonionic planes"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  bool samples_given = false;
  app.add_option("--seed", cfg.seed, "Seed for all random sampling");
  auto* samples_opt = app.add_option("--samples", cfg.samples, "Number of random instances");
  auto* format_opt =
      app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--output,-o", cfg.output, "Write output to a file instead of stdout");
  app.add_flag("--no-timestamp", cfg.no_timestamp, "Omit the timestamp field from JSON output");
  app.add_flag("--no-cache", cfg.no_cache, "Ignore the on-disk algebra cache");

  const auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", cfg.algebra, "O or Os")->check(CLI::IsMember({"O", "Os"}));
  };
  const auto add_gamma = [&](CLI::App* sub) {
    sub->add_option("--gamma", cfg.gamma, "Involution signs, e.g. ++-")
        ->check(CLI::IsMember({"+++", "++-", "+-+", "-++", "+--", "-+-", "--+", "---"}));
  };
  const auto add_polarity = [&](CLI::App* sub) {
    sub->add_option("--polarity", cfg.polarity, "elliptic or hyperbolic")
        ->check(CLI::IsMember({"elliptic", "hyperbolic"}));
  };

  auto* check = app.add_subcommand("algebra-check", "Composition, alternativity, Moufang and zero-divisor checks");
  add_algebra(check);

  LieOptions lie;
  auto* lie_cmd = app.add_subcommand("lie", "Construct a Lie algebra and report its real form");
  lie_cmd->add_option("which", lie.which, "so | der-alg | tri | der-jordan | e6 | cone | fix-form | stabilizer")
      ->required()
      ->check(CLI::IsMember({"so", "der-alg", "tri", "der-jordan", "e6", "cone", "fix-form", "stabilizer"}));
  add_algebra(lie_cmd);
  add_gamma(lie_cmd);
  add_polarity(lie_cmd);
  lie_cmd->add_option("--form", lie.form, "beta | beta_minus | beta_flip_slot3 (fix-form; overrides --polarity)");
  lie_cmd->add_option("--parent", lie.parent, "f4 | f4h | e6 (stabilizer)");
  lie_cmd->add_option("--point", lie.point, "E11 | E22 | E33 (stabilizer)");
  lie_cmd->add_option("--expect", lie.expect, "Expected real-form name, e.g. f4(-20)");
  lie_cmd->add_option("--expect-dim", lie.expect_dim, "Expected dimension");
  lie_cmd->add_option("--cone-samples", lie.cone_samples, "Veronese samples per batch (cone)")
      ->check(CLI::Range(30, 100000));

  auto* plane = app.add_subcommand("plane-axioms", "Sample incidence, polarity, triality and translation checks");
  add_algebra(plane);
  add_polarity(plane);

  auto* table = app.add_subcommand("table", "Reproduce the motion-group classification table");
  auto* mul = app.add_subcommand("mul-table", "Print the 8x8 multiplication table");
  add_algebra(mul);
  auto* audit = app.add_subcommand("audit-translation", "Compare the translation formula with its printed form");

  std::string element;
  auto* jordan = app.add_subcommand("jordan-info", "Trace, determinant, sharp and rank of a Jordan element");
  add_algebra(jordan);
  add_gamma(jordan);
  jordan->add_option("--element", element, "Element as JSON; a seeded random element if omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  samples_given = samples_opt->count() > 0;
  if (lie_cmd->parsed() && format_opt->count() == 0) cfg.format = "json";
  if (audit->parsed() && !samples_given) cfg.samples = 50;

  try {
    if (check->parsed()) return cmd_algebra_check(cfg);
    if (lie_cmd->parsed()) return cmd_lie(cfg, lie);
    if (plane->parsed()) return cmd_plane_axioms(cfg);
    if (table->parsed()) return cmd_table(cfg);
    if (mul->parsed()) return cmd_mul_table(cfg);
    if (audit->parsed()) return cmd_audit(cfg);
    if (jordan->parsed()) return cmd_jordan_info(cfg, element);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const NotClosed& e) {
    std::cerr << "bracket not closed: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
