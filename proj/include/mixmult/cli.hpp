#pragma once

// Command-line front end: subcommand dispatch, configuration, JSON output.
// Needs CLI11.hpp and json.hpp on the include path.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixmult/parser.hpp"
#include "mixmult/sv_cycles.hpp"
#include "mixmult/testing/selftest.hpp"

namespace mixmult::cli {

using json = nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kMath = 2, kGenericity = 3 };

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint32_t prime = kDefaultPrime;
  bool prime_given = false;
  int max_retries = 16;
  bool verify = false;

  GenericityConfig genericity() const { return {seed, prime, max_retries}; }
};

inline std::uint64_t parse_unsigned(const std::string& name, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(name + " must be a nonnegative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError(name + " is out of range: " + text);
  }
}

/// Defaults, then MIXMULT_* environment variables; flags are applied later.
inline RunConfig config_from_env() {
  RunConfig c;
  if (const char* s = std::getenv("MIXMULT_SEED")) c.seed = parse_unsigned("MIXMULT_SEED", s);
  if (const char* p = std::getenv("MIXMULT_PRIME")) {
    auto v = parse_unsigned("MIXMULT_PRIME", p);
    if (v >= (1ull << 31) || !is_prime(v)) throw UsageError("MIXMULT_PRIME is not a prime below 2^31");
    c.prime = static_cast<std::uint32_t>(v);
    c.prime_given = true;
  }
  if (const char* r = std::getenv("MIXMULT_MAX_RETRIES")) {
    auto v = parse_unsigned("MIXMULT_MAX_RETRIES", r);
    if (v < 1 || v > 100000) throw UsageError("MIXMULT_MAX_RETRIES must be between 1 and 100000");
    c.max_retries = static_cast<int>(v);
  }
  return c;
}

inline std::string str(const Integer& n) { return n.str(); }

inline json strings(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(str(x));
  return a;
}

template <class Field>
json poly_list(const std::vector<Polynomial<Field>>& v) {
  json a = json::array();
  for (const auto& p : v) a.push_back(to_string(p));
  return a;
}

inline json opt(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

/// Parsed command line, independent of the field.
struct Request {
  std::string command;
  std::string file;
  std::string ideal, ambient, primary, sequence, x, y;
  std::optional<int> i, j, upto;
  RunConfig config;
};

struct Inputs {
  ProblemFile pf;
  json names = json::object();
};

template <class Field>
class Runner {
 public:
  Runner(const Request& req, const ProblemFile& pf, const Field& field) : req_(req), problem_(pf, field) {}

  /// Fills result and certificates.
  void run(json& result, json& certs) {
    const auto& c = req_.command;
    if (c == "gb") gb(result, certs);
    else if (c == "hilbert") hilbert(result, certs);
    else if (c == "bigraded-report") bigraded_report(result);
    else if (c == "bigraded-e") bigraded_e(result, certs);
    else if (c == "ideal-mixed") ideal_mixed(result, certs);
    else if (c == "rees-mult") rees_mult(result, certs, false);
    else if (c == "diagonal-degree") rees_mult(result, certs, true);
    else if (c == "sv") sv(result, certs);
    else throw UsageError("unknown command " + c);
  }

 private:
  const Ideal<Field>& need(const std::string& name, const char* flag) {
    if (name.empty()) throw UsageError(std::string("missing ") + flag);
    return problem_.ideal(name);
  }

  void gb(json& result, json& certs) {
    const auto& I = need(req_.ideal, "--ideal");
    const auto& basis = I.groebner_basis();
    json lm = json::array();
    for (const auto& g : basis) lm.push_back(monomial_to_string(*I.ring(), g.leading_monomial()));
    result = {{"ring", I.ring()->name()}, {"basis", poly_list(basis)}, {"leading_monomials", lm}, {"size", basis.size()}};
    certs["s_pairs_reduce_to_zero"] = is_groebner_basis(basis);
  }

  static json table_json(const ETable& t) {
    return {{"r", opt(t.r)}, {"r1", t.r ? json(t.r1) : json(nullptr)}, {"r2", t.r ? json(t.r2) : json(nullptr)},
            {"diagonal", strings(t.diagonal())}};
  }

  void hilbert(json& result, json& certs) {
    const auto& I = need(req_.ideal, "--ideal");
    auto series = series_of(I);
    auto poly = polynomial_of(series);
    json num = json::array();
    for (const auto& [e, c] : series.numerator) num.push_back({{"u", e.first}, {"v", e.second}, {"c", str(c)}});
    json coeffs = json::array();
    for (const auto& [ij, a] : poly.coeffs) coeffs.push_back({{"i", ij.first}, {"j", ij.second}, {"c", str(a)}});
    result["series"] = {{"n1", series.n1}, {"n2", series.n2}, {"numerator", num}};
    result["polynomial"] = {{"zero", poly.is_zero()},
                            {"degree", opt(poly.total_degree)},
                            {"degree_u", opt(poly.degree_u)},
                            {"degree_v", opt(poly.degree_v)},
                            {"stability", {poly.stability.first, poly.stability.second}},
                            {"coefficients", coeffs}};
    result["e_table"] = table_json(e_table(poly));
    if (!I.is_unit()) {
      auto tm = total_multiplicity(I);
      result["multiplicity"] = {{"dim", tm.dim}, {"degree", str(tm.degree)}};
    } else {
      result["multiplicity"] = nullptr;
    }
    if (req_.config.verify) {
      // Compare the series with a direct count of standard monomials on a window.
      int mismatches = 0;
      const int w = 6;
      for (int u = 0; u <= w; ++u)
        for (int v = 0; u + v <= w; ++v)
          if (series_coefficient(series, u, v) != hilbert_function(I, u, v)) ++mismatches;
      if (mismatches) throw MathError("Hilbert series disagrees with the standard monomial count");
      certs["standard_monomial_window"] = w;
      for (long u = poly.stability.first; u <= poly.stability.first + 2; ++u)
        for (long v = poly.stability.second; v <= poly.stability.second + 2; ++v)
          if (poly.evaluate(u, v) != series_coefficient(series, static_cast<int>(u), static_cast<int>(v)))
            throw MathError("Hilbert polynomial disagrees with the function past the stability bound");
      certs["polynomial_matches_beyond_stability"] = true;
    }
  }

  void bigraded_report(json& result) {
    BigradedAlgebra<Field> R(need(req_.ideal, "--ideal"));
    auto rep = degrees_report(R);
    auto table = e_table(polynomial_of(series_of(R.ideal())));
    result = {{"r", opt(rep.r)},
              {"r1", opt(rep.r1)},
              {"r2", opt(rep.r2)},
              {"polynomial_zero", rep.polynomial_zero},
              {"dims",
               {{"R", rep.dim_R},
                {"R_mod_R1", rep.dim_R_mod_r1},
                {"R_mod_R2", rep.dim_R_mod_r2},
                {"saturated", rep.r ? json(rep.dim_saturated) : json(nullptr)},
                {"saturated_plus_R2", rep.r ? json(rep.dim_saturated_plus_r2) : json(nullptr)},
                {"saturated_plus_R1", rep.r ? json(rep.dim_saturated_plus_r1) : json(nullptr)}}},
              {"e_table", table_json(table)},
              {"sum_check", to_string(sum_check(R))}};
  }

  static json cert_json(const FilterRegularCertificate<Field>& c) {
    json steps = json::array();
    for (const auto& s : c.steps)
      steps.push_back({{"element", to_string(s.element)},
                       {"bidegree", {s.degree.d1, s.degree.d2}},
                       {"passed", s.passed},
                       {"attempts", s.attempts},
                       {"witness", s.witness ? json(to_string(*s.witness)) : json(nullptr)}});
    return {{"seed", std::to_string(c.seed)}, {"passed", c.passed()}, {"steps", steps}};
  }

  void bigraded_e(json& result, json& certs) {
    if (!req_.i || !req_.j) throw UsageError("bigraded-e needs --i and --j");
    BigradedAlgebra<Field> R(need(req_.ideal, "--ideal"));
    auto rep = degrees_report(R);
    std::optional<std::vector<Polynomial<Field>>> seq;
    if (!req_.sequence.empty()) seq = problem_.generators(req_.sequence);
    auto cfg = req_.config.genericity();
    auto v = e_value_via_criterion(R, rep, *req_.i, *req_.j, cfg, seq);
    result = {{"i", *req_.i},
              {"j", *req_.j},
              {"e", str(v.value)},
              {"vanishes_by_degree_bound", v.vanishes_by_degree_bound},
              {"positive", v.value > 0},
              {"witness_dim", v.positivity ? json(v.positivity->witness_dim) : json(nullptr)}};
    certs["sequence"] = v.vanishes_by_degree_bound ? json(nullptr) : cert_json(v.cert);
    if (req_.config.verify) {
      auto table = e_table(polynomial_of(series_of(R.ideal())));
      auto expected = table.at(*req_.i, *req_.j);
      if (expected != v.value) throw MathError("criterion value disagrees with the Hilbert polynomial");
      certs["table_value"] = str(expected);
    }
  }

  GradedSetting<Field> setting() {
    const auto& J = need(req_.ideal, "--ideal");
    auto IA = req_.ambient.empty() ? Ideal<Field>::zero(J.ring()) : problem_.ideal(req_.ambient);
    std::optional<Ideal<Field>> I;
    if (!req_.primary.empty()) I = problem_.ideal(req_.primary);
    return GradedSetting<Field>(IA, J, I);
  }

  static json chain_json(const SatChain<Field>& ch) {
    json steps = json::array();
    for (const auto& s : ch.steps)
      steps.push_back({{"element", to_string(s.element)}, {"nzd", s.nzd_ok}, {"dim", s.dim}, {"attempts", s.attempts}});
    return {{"seed", std::to_string(ch.seed)}, {"d_work", ch.d_work}, {"dim0", ch.dim0}, {"steps", steps}};
  }

  static json report_json(const MixedIdealReport& rep) {
    return {{"e", strings(rep.e)},
            {"rho", rep.rho},
            {"spread", rep.spread},
            {"height", rep.height},
            {"dim", rep.dim_a},
            {"complete", rep.complete},
            {"height_bound_enforced", rep.height_bound_enforced}};
  }

  void ideal_mixed(json& result, json& certs) {
    auto S = setting();
    int spread = analytic_spread(S);
    int upto = req_.upto.value_or(spread);
    auto chain = sat_chain(S, upto, req_.config.genericity(), spread);
    auto rep = e_i_values(S, chain, spread);
    result = report_json(rep);
    json dims = json::array();
    for (std::size_t k = 0; k <= chain.steps.size(); ++k) dims.push_back(chain.dim_at(k));
    result["chain_dims"] = dims;
    result["j_work_equals_j"] = S.j_work() == S.J();
    certs["chain"] = chain_json(chain);
    if (S.ambient_is_polynomial_ring()) result["order"] = order_of(S).order;
    if (req_.config.verify && rep.complete && S.ambient_is_polynomial_ring() && S.j_equidegree() && S.i_is_maximal()) {
      auto t = rees_bigraded_crosscheck(S, rep);
      certs["rees_table_diagonal"] = strings(t.diagonal());
    }
  }

  void rees_mult(json& result, json& certs, bool diagonal) {
    auto S = setting();
    if (!S.i_is_maximal()) throw UsageError("Rees multiplicities use I = m");
    auto [chain, rep] = mixed_multiplicities(S, req_.config.genericity());
    auto sums = rees_and_diagonal(S, rep);
    result = {{"e", strings(rep.e)}};
    if (diagonal) {
      if (!sums.diagonal_degree)
        throw UsageError("diagonal degree needs a polynomial ring and J generated in one degree");
      result["diagonal_degree"] = str(*sums.diagonal_degree);
    } else {
      result["rees_mult"] = str(sums.rees_mult);
    }
    certs["chain"] = chain_json(chain);
    if (req_.config.verify) {
      auto t = rees_bigraded_crosscheck(S, rep);
      certs["rees_table_diagonal"] = strings(t.diagonal());
    }
  }

  void sv(json& result, json& certs) {
    JoinSetting<Field> js(need(req_.x, "--x"), need(req_.y, "--y"));
    auto rep = sv_degrees(js, req_.config.genericity());
    auto bc = bezout_check(js, rep);
    if (!bc.telescopes) throw MathError("degrees do not telescope to e_0");
    result = {{"n", js.n()},
              {"degrees", strings(rep.degs)},
              {"e", strings(rep.e)},
              {"sum", str(rep.sum())},
              {"spread", rep.spread},
              {"telescopes", bc.telescopes},
              {"deg_x", str(bc.deg_x)},
              {"deg_y", str(bc.deg_y)}};
    certs = {{"seed_used", std::to_string(rep.seed)}, {"retried", rep.retried}};
  }

  const Request& req_;
  Problem<Field> problem_;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json run_selftest_json(const RunConfig& cfg, bool& ok) {
  auto suites = testing::run_selftest(cfg.seed);
  json arr = json::array();
  int checks = 0, failures = 0;
  for (const auto& s : suites) {
    arr.push_back({{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"messages", s.messages}});
    checks += s.checks;
    failures += s.failures;
  }
  ok = failures == 0;
  return {{"suites", arr}, {"checks", checks}, {"failures", failures}};
}

/// Runs one request; returns the exit code and writes a single JSON document.
inline int execute(const Request& req, std::ostream& out, std::ostream& err) {
  json doc;
  doc["command"] = req.command;
  doc["config"] = {{"seed", std::to_string(req.config.seed)},
                   {"prime", req.config.prime},
                   {"max_retries", req.config.max_retries},
                   {"verify", req.config.verify}};
  int code = kOk;
  try {
    if (req.command == "selftest") {
      bool ok = false;
      doc["inputs"] = json::object();
      doc["result"] = run_selftest_json(req.config, ok);
      doc["certificates"] = json::object();
      if (!ok) code = kMath;
    } else {
      if (req.file.empty()) throw UsageError("missing --file");
      auto text = read_file(req.file);
      auto pf = parse_problem(text);
      json names = json::object();
      auto put = [&](const char* k, const std::string& v) {
        if (!v.empty()) names[k] = v;
      };
      put("ideal", req.ideal);
      put("ambient", req.ambient);
      put("primary", req.primary);
      put("sequence", req.sequence);
      put("x", req.x);
      put("y", req.y);
      doc["inputs"] = {{"digest", pf.digest}, {"names", names}};
      json result = json::object(), certs = json::object();
      if (req.config.prime_given || !pf.rational) {
        std::uint32_t p = req.config.prime_given ? req.config.prime : pf.prime;
        doc["config"]["field"] = "F_" + std::to_string(p);
        Runner<PrimeField>(req, pf, PrimeField(p)).run(result, certs);
      } else {
        doc["config"]["field"] = "Q";
        Runner<RationalField>(req, pf, RationalField{}).run(result, certs);
      }
      doc["result"] = std::move(result);
      doc["certificates"] = std::move(certs);
    }
  } catch (const UsageError& e) {
    code = kUsage;
    doc["error"] = {{"kind", "usage"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const MathError& e) {
    code = kMath;
    doc["error"] = {{"kind", "math"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  } catch (const GenericityExhausted& e) {
    code = kGenericity;
    doc["error"] = {{"kind", "genericity"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
  }
  out << doc.dump(2) << "\n";
  return code;
}

/// Full command line handling.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Request req;
  try {
    req.config = config_from_env();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  CLI::App app{"Mixed multiplicities of bigraded algebras and ideals"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> prime;
  auto common = [&](CLI::App* s, bool file) {
    if (file) s->add_option("--file", req.file, "problem file")->required();
    s->add_option("--seed", seed, "seed for every random choice");
    s->add_option("--prime", prime, "compute over F_p instead of the file's field");
    s->add_flag("--verify", req.config.verify, "cross-check results by a second route");
  };
  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {{"gb", "reduced Groebner basis"},
                        {"hilbert", "bigraded Hilbert series, polynomial and mixed multiplicities"},
                        {"bigraded-report", "relevant dimension and partial degrees"},
                        {"bigraded-e", "one mixed multiplicity by the positivity criterion"},
                        {"ideal-mixed", "mixed multiplicities e_i(I|J) by saturation chains"},
                        {"rees-mult", "multiplicity of the Rees algebra"},
                        {"diagonal-degree", "degree of the diagonal subalgebra"},
                        {"sv", "degrees of the Stueckrad-Vogel cycles of two projective schemes"},
                        {"selftest", "property suites"}};
  for (const auto& sp : commands) {
    auto* s = app.add_subcommand(sp.name, sp.help);
    std::string n = sp.name;
    common(s, n != "selftest");
    if (n == "gb" || n == "hilbert" || n == "bigraded-report" || n == "bigraded-e")
      s->add_option("--ideal", req.ideal, "name of the ideal")->required();
    if (n == "bigraded-e") {
      s->add_option("--i", req.i, "index i")->required();
      s->add_option("--j", req.j, "index j")->required();
      s->add_option("--sequence", req.sequence, "ideal whose generators form the filter-regular sequence");
    }
    if (n == "ideal-mixed" || n == "rees-mult" || n == "diagonal-degree") {
      s->add_option("--ideal", req.ideal, "the ideal J")->required();
      s->add_option("--ambient", req.ambient, "defining ideal of A (default 0)");
      s->add_option("--primary", req.primary, "the m-primary ideal I (default m)");
    }
    if (n == "ideal-mixed") s->add_option("--upto", req.upto, "chain length (default s(J))");
    if (n == "sv") {
      s->add_option("--x", req.x, "ideal of X")->required();
      s->add_option("--y", req.y, "ideal of Y")->required();
    }
    s->callback([&req, n] { req.command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  if (seed) req.config.seed = *seed;
  if (prime) {
    if (*prime >= (1u << 31) || !is_prime(*prime)) {
      err << "error: --prime " << *prime << " is not a prime below 2^31\n";
      return kUsage;
    }
    req.config.prime = *prime;
    req.config.prime_given = true;
  }
  if (req.upto && *req.upto < 0) {
    err << "error: --upto must be nonnegative\n";
    return kUsage;
  }
  return execute(req, out, err);
}

}  // namespace mixmult::cli
