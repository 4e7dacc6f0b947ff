#include "hopoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>

#include "hopoly/cherednik.hpp"
#include "hopoly/error.hpp"
#include "hopoly/oracles.hpp"
#include "hopoly/verification.hpp"

namespace hopoly::cli {

using nlohmann::json;

std::optional<KValues> parse_k(std::string_view text) {
  if (text == "symbolic") return std::nullopt;
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return KValues::uniform(parse_rational(text));
  return KValues{parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

namespace {

struct Request {
  std::string command;
  std::string type = "A1";
  std::string highest;
  std::string weight;
  std::string k = "1";
  bool k_given = false;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t cases = 25;
  unsigned threads = 1;
};

json weight_json(const Weight& w) { return json(w.coords); }

std::string param_name(ParamClass c) { return c == ParamClass::Short ? "k_s" : "k_l"; }

std::string coefficient_text(ParamClass numerator, const KPoly& d) {
  const std::string den = d.to_string();
  const bool wrap = d.terms().size() > 1 || sgn(d.terms().begin()->second) < 0;
  return param_name(numerator) + "/" + (wrap ? "(" + den + ")" : den);
}

json k_json(const KValues& k) { return {{"short", to_string(k.short_k)}, {"long", to_string(k.long_k)}}; }

std::string word_text(const std::vector<int>& word) {
  std::string s = "[";
  for (std::size_t i = 0; i < word.size(); ++i) s += (i ? "," : "") + std::to_string(word[i]);
  return s + "]";
}

class Runner {
 public:
  Runner(const Request& req, std::ostream& out) : req_(req), out_(out), rs_(CartanType::parse(req.type)) {}

  int run() {
    const std::string& c = req_.command;
    if (c == "mult") return mult();
    if (c == "character") return character_cmd();
    if (c == "epoly") return epoly();
    if (c == "ppoly-cleared") return ppoly_cleared();
    if (c == "positivity") return positivity();
    if (c == "reduce") return reduce();
    if (c == "verify") return verify();
    throw ParseError("unknown command '" + c + "'");
  }

 private:
  bool json_out() const { return req_.format == "json"; }

  Weight weight_arg(const std::string& text, const char* flag) const {
    if (text.empty()) throw ParseError(std::string("missing ") + flag);
    Weight w = parse_weight(text);
    if (w.size() != static_cast<std::size_t>(rs_.rank())) {
      throw ParseError(std::string(flag) + " has " + std::to_string(w.size()) + " coordinates; " +
                       rs_.cartan_type().name() + " needs " + std::to_string(rs_.rank()));
    }
    return w;
  }

  Weight highest() const { return weight_arg(req_.highest, "--highest"); }

  Weight dominant_highest() const {
    Weight w = highest();
    if (!w.is_dominant()) throw ParseError("--highest " + req_.highest + " is not dominant");
    return w;
  }

  void require_k_one() const {
    const auto k = parse_k(req_.k);
    if (!k || !(k->short_k == 1 && k->long_k == 1)) {
      throw ParseError(req_.command + " is defined at k = 1 only");
    }
  }

  void require_symbolic_k() const {
    if (req_.k_given && req_.k != "symbolic") {
      throw ParseError(req_.command + " works with symbolic k only");
    }
  }

  json envelope() const {
    json j;
    j["command"] = req_.command;
    j["type"] = rs_.cartan_type().name();
    return j;
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  int mult() {
    require_k_one();
    const Weight lam = dominant_highest();
    const Weight mu = weight_arg(req_.weight, "--weight");
    const CherednikContext ctx(rs_, KValues{});
    const BigInt m = multiplicity(ctx, lam, mu);
    const ReductionChain chain = reduce_to_minuscule(rs_, lam);

    std::optional<SubsetSumResult> subsets;
    if (chain.length() <= kSubsetWordLimit) {
      subsets = multiplicity_subset_sum(ctx, lam, mu, true);
      if (subsets->value != BigRational(m)) throw Error("subset-sum formula disagrees with the character");
    }
    if (json_out()) {
      json j = envelope();
      j["highest"] = weight_json(lam);
      j["weight"] = weight_json(mu);
      json r;
      r["multiplicity"] = m.get_si();
      r["word"] = chain.word;
      if (subsets) {
        json terms = json::array();
        for (const auto& t : subsets->terms) terms.push_back({{"J", t.subset}, {"c_J", to_string(t.c_J)}});
        r["decomposition"] = {{"orbit_ratio", to_string(subsets->orbit_ratio)},
                              {"subset_total", to_string(subsets->subset_total)},
                              {"text", to_string(subsets->orbit_ratio) + " × " + to_string(subsets->subset_total)},
                              {"subsets", terms}};
      }
      j["result"] = r;
      emit(j);
    } else {
      out_ << "multiplicity " << m.get_str() << '\n';
      if (subsets) {
        out_ << "decomposition " << to_string(subsets->orbit_ratio) << " × " << to_string(subsets->subset_total)
             << '\n';
        for (const auto& t : subsets->terms) {
          out_ << "J={";
          for (std::size_t i = 0; i < t.subset.size(); ++i) out_ << (i ? "," : "") << t.subset[i];
          out_ << "} c_J=" << to_string(t.c_J) << '\n';
        }
      }
    }
    return kExitOk;
  }

  int character_cmd() {
    require_k_one();
    const Weight lam = dominant_highest();
    const CherednikContext ctx(rs_, KValues{});
    const NumericSum chi = character(ctx, lam, req_.threads);
    BigInt dim = 0;
    for (const auto& [w, c] : chi) dim += c.get_num();
    if (json_out()) {
      json j = envelope();
      j["highest"] = weight_json(lam);
      json weights = json::array();
      for (const auto& [w, c] : chi) weights.push_back({{"weight", w.coords}, {"multiplicity", c.get_num().get_si()}});
      j["result"] = {{"dimension", dim.get_si()}, {"weights", weights}};
      emit(j);
    } else {
      out_ << "dimension " << dim.get_str() << '\n';
      for (const auto& [w, c] : chi) out_ << to_string(w) << ' ' << to_string(c) << '\n';
    }
    return kExitOk;
  }

  int epoly() {
    const auto k = parse_k(req_.k);
    if (!k) throw ParseError("epoly needs numeric k");
    const Weight lam = highest();
    const CherednikContext ctx(rs_, *k);
    const NumericSum E = build_E(ctx, lam);
    if (json_out()) {
      json j = envelope();
      j["highest"] = weight_json(lam);
      j["k"] = k_json(*k);
      json terms = json::array();
      for (const auto& [w, c] : E) terms.push_back({{"weight", w.coords}, {"coefficient", to_string(c)}});
      j["result"] = {{"terms", terms}};
      emit(j);
    } else {
      for (const auto& [w, c] : E) out_ << to_string(w) << ' ' << to_string(c) << '\n';
    }
    return kExitOk;
  }

  int ppoly_cleared() {
    require_symbolic_k();
    const Weight lam = dominant_highest();
    const CherednikContext ctx(rs_);
    const ClearedE cleared = build_E_cleared(ctx, lam);
    const ClearedSum table = symmetrize_sum(ctx, cleared.sum, req_.threads);
    const KPoly c_lambda = compute_c_lambda(ctx, lam);
    if (json_out()) {
      json j = envelope();
      j["highest"] = weight_json(lam);
      json terms = json::array();
      for (const auto& [w, c] : table) terms.push_back({{"weight", w.coords}, {"coefficient", c.to_string()}});
      j["result"] = {{"denominator", cleared.denominator.to_string()},
                     {"c_lambda", c_lambda.to_string()},
                     {"terms", terms}};
      emit(j);
    } else {
      out_ << "denominator " << cleared.denominator << '\n';
      out_ << "c_lambda " << c_lambda << '\n';
      for (const auto& [w, c] : table) out_ << to_string(w) << ' ' << c << '\n';
    }
    return kExitOk;
  }

  int positivity() {
    require_symbolic_k();
    const Weight lam = dominant_highest();
    const CherednikContext ctx(rs_);
    const PositivityReport rep = verify_positivity(ctx, lam, req_.threads);
    if (json_out()) {
      json j = envelope();
      j["highest"] = weight_json(lam);
      json dens = json::array();
      for (const auto& d : rep.denominators) dens.push_back({{"d", d.to_string()}, {"in_P1", is_in_P1(d)}});
      json coeffs = json::array();
      for (const auto& [w, ok] : rep.coefficient_checks) {
        coeffs.push_back({{"weight", w.coords}, {"coefficient", rep.c_lambda_P.coefficient(w).to_string()}, {"in_Zplus", ok}});
      }
      j["result"] = {{"c_lambda", rep.c_lambda.to_string()},
                     {"c_lambda_in_Zplus", rep.c_lambda_in_Zplus},
                     {"denominators", dens},
                     {"coefficients", coeffs},
                     {"passed", rep.passed}};
      emit(j);
    } else {
      out_ << "c_lambda " << rep.c_lambda << ' ' << (rep.c_lambda_in_Zplus ? "pass" : "FAIL") << '\n';
      for (std::size_t i = 0; i < rep.denominators.size(); ++i) {
        out_ << "d_" << i + 1 << ' ' << rep.denominators[i] << ' ' << (is_in_P1(rep.denominators[i]) ? "pass" : "FAIL")
             << '\n';
      }
      for (const auto& [w, ok] : rep.coefficient_checks) {
        out_ << to_string(w) << ' ' << rep.c_lambda_P.coefficient(w) << ' ' << (ok ? "pass" : "FAIL") << '\n';
      }
      out_ << (rep.passed ? "certificate passed" : "certificate FAILED") << '\n';
    }
    return rep.passed ? kExitOk : kExitVerification;
  }

  int reduce() {
    require_symbolic_k();
    const Weight lam = highest();
    const ReductionChain chain = reduce_to_minuscule(rs_, lam);
    std::vector<std::string> d, c;
    for (std::size_t i = 0; i < chain.length(); ++i) {
      d.push_back(chain.denominators[i].to_string());
      c.push_back(coefficient_text(chain.numerators[i], chain.denominators[i]));
    }
    if (json_out()) {
      json j = envelope();
      j["highest"] = weight_json(lam);
      json chain_json = json::array();
      for (const auto& w : chain.chain) chain_json.push_back(w.coords);
      j["result"] = {{"lambda_bar", chain.lambda_bar.coords},
                     {"word", chain.word},
                     {"length", chain.length()},
                     {"chain", chain_json},
                     {"d", d},
                     {"c", c}};
      emit(j);
    } else {
      out_ << "lambda_bar " << to_string(chain.lambda_bar) << '\n';
      out_ << "word " << word_text(chain.word) << '\n';
      for (std::size_t i = 0; i < chain.length(); ++i) {
        out_ << "j=" << i + 1 << " s_" << chain.word[i] << " lambda_(j)=" << to_string(chain.chain[i])
             << " d=" << d[i] << " c=" << c[i] << '\n';
      }
    }
    return kExitOk;
  }

  int verify() {
    VerifyOptions opt;
    opt.seed = req_.seed;
    opt.cases = req_.cases;
    const auto results = run_verification(rs_, opt);
    const bool ok = std::all_of(results.begin(), results.end(), [](const SuiteResult& r) { return r.passed(); });
    if (json_out()) {
      json j = envelope();
      j["seed"] = req_.seed;
      json suites = json::array();
      for (const auto& r : results) {
        suites.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"first_failure", r.first_failure}});
      }
      j["result"] = {{"suites", suites}, {"passed", ok}};
      emit(j);
    } else {
      for (const auto& r : results) {
        out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << ' ' << r.cases - r.failures << '/' << r.cases;
        if (!r.passed()) out_ << " (" << r.first_failure << ')';
        out_ << '\n';
      }
    }
    return ok ? kExitOk : kExitVerification;
  }

  const Request& req_;
  std::ostream& out_;
  RootSystem rs_;
};

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
  }
  return false;
}

int report_error(const std::vector<std::string>& args, std::ostream& err, const std::string& kind,
                 const std::string& message, int code) {
  if (wants_json(args)) {
    err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight multiplicities, characters and Heckman-Opdam polynomials", "hopoly"};
  app.require_subcommand(1);
  Request req;

  auto add_common = [&req](CLI::App* sub, bool needs_highest) {
    auto* t = sub->add_option("--type", req.type, "Cartan type, e.g. A2, B3, G2")->required();
    (void)t;
    auto* h = sub->add_option("--highest", req.highest, "weight in fundamental-weight coordinates, e.g. 1,0,2");
    if (needs_highest) h->required();
    sub->add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_k = [&req](CLI::App* sub) {
    sub->add_option("--k", req.k, "parameter: 1, p/q, p/q,r/s (short,long) or symbolic");
  };
  auto add_threads = [&req](CLI::App* sub) {
    sub->add_option("--threads", req.threads, "worker threads for W_0 symmetrization")->check(CLI::Range(1u, 256u));
  };

  auto* mult = app.add_subcommand("mult", "weight multiplicity m_lambda(mu) with its subset-sum decomposition");
  add_common(mult, true);
  add_k(mult);
  mult->add_option("--weight", req.weight, "the weight mu")->required();

  auto* chr = app.add_subcommand("character", "full character table and dimension");
  add_common(chr, true);
  add_k(chr);
  add_threads(chr);

  auto* ep = app.add_subcommand("epoly", "nonsymmetric polynomial E_lambda at numeric k");
  add_common(ep, true);
  add_k(ep);

  auto* pp = app.add_subcommand("ppoly-cleared", "denominator-free c_lambda P_lambda");
  add_common(pp, true);
  add_k(pp);
  add_threads(pp);

  auto* pos = app.add_subcommand("positivity", "positivity certificate for c_lambda P_lambda");
  add_common(pos, true);
  add_k(pos);
  add_threads(pos);

  auto* red = app.add_subcommand("reduce", "reduced word, chain and intertwiner coefficients");
  add_common(red, true);
  add_k(red);

  auto* ver = app.add_subcommand("verify", "seeded identity and oracle suites");
  add_common(ver, false);
  ver->add_option("--seed", req.seed, "sampling seed");
  ver->add_option("--cases", req.cases, "cases per suite")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

  std::vector<const char*> argv{"hopoly"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(args, err, "usage", e.what(), kExitInput);
  }

  for (auto* sub : app.get_subcommands()) {
    req.command = sub->get_name();
    auto* k_opt = sub->get_option_no_throw("--k");
    req.k_given = k_opt && k_opt->count() > 0;
  }

  try {
    Runner runner(req, out);
    return runner.run();
  } catch (const ResourceError& e) {
    return report_error(args, err, "resource", e.what(), kExitResource);
  } catch (const ParseError& e) {
    return report_error(args, err, "input", e.what(), kExitInput);
  } catch (const ConstructionError& e) {
    return report_error(args, err, "input", e.what(), kExitInput);
  } catch (const DomainError& e) {
    return report_error(args, err, "input", e.what(), kExitInput);
  } catch (const SingularParameterError& e) {
    return report_error(args, err, "singular", e.what(), kExitInput);
  } catch (const Error& e) {
    return report_error(args, err, "internal", e.what(), kExitVerification);
  }
}

}  // namespace hopoly::cli
