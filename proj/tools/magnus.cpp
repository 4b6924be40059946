#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "magnus/io.hpp"
#include "magnus/lie.hpp"
#include "magnus/notation.hpp"
#include "magnus/suite.hpp"

namespace {

using namespace magnus;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Bad input detected after argument parsing: malformed words, curves or
// files, unsupported genus/degree combinations.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string expansion = "build";
  std::optional<int> genus;
  std::optional<int> degree;
  std::string output = "pretty";

  bool json() const { return output == "json"; }
};

void add_common(CLI::App* cmd, Common& c, bool with_expansion = true) {
  if (with_expansion) {
    cmd->add_option("--expansion", c.expansion,
                    "builtin:standard | builtin:exp | fixture:g1 | fixture:g2 | fixture:massuyeau | build | file:PATH")
        ->capture_default_str();
    cmd->add_option("--genus", c.genus, "Surface genus (1-7)")->check(CLI::Range(1, kMaxGenus));
    cmd->add_option("--degree", c.degree, "Truncation degree")->check(CLI::Range(2, kMaxTruncation));
  }
  cmd->add_option("--output", c.output, "json | pretty")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
}

std::optional<std::string> fixture_name(const std::string& source) {
  if (!source.starts_with("fixture:")) return std::nullopt;
  const std::string name = source.substr(8);
  if (name != "g1" && name != "g2" && name != "massuyeau") throw UsageError("unknown fixture '" + name + "'");
  return name;
}

Expansion load_expansion(const Common& c) {
  if (c.expansion.starts_with("file:")) {
    Expansion theta = expansion_from_json(read_json_file(c.expansion.substr(5)));
    if (c.genus && *c.genus != theta.genus()) {
      throw UsageError("--genus " + std::to_string(*c.genus) + " does not match the file's genus " +
                       std::to_string(theta.genus()));
    }
    if (c.degree) {
      if (*c.degree > theta.truncation()) {
        throw UsageError("--degree " + std::to_string(*c.degree) + " exceeds the file's truncation " +
                         std::to_string(theta.truncation()));
      }
      theta = theta.with_truncation(*c.degree);
    }
    return theta;
  }
  if (auto name = fixture_name(c.expansion)) {
    const int genus = c.genus.value_or(*name == "g2" ? 2 : 1);
    const int trusted = fixture_trusted_truncation(*name);
    const int degree = c.degree.value_or(trusted);
    if (degree > trusted) {
      throw UsageError("fixture " + *name + " is trusted only up to degree " + std::to_string(trusted));
    }
    return load_fixture(*name, genus, degree);
  }
  const AlgebraContext ctx(c.genus.value_or(1), c.degree.value_or(4));
  if (c.expansion == "builtin:standard") return Expansion::standard(ctx);
  if (c.expansion == "builtin:exp") return Expansion::exponential(ctx);
  if (c.expansion == "build") return build_symplectic(ctx.genus(), ctx.truncation());
  throw UsageError("unknown expansion source '" + c.expansion + "'");
}

Json expansion_summary(const Expansion& theta) {
  return {{"genus", theta.genus()}, {"truncation", theta.truncation()}, {"kind", kind_name(theta.kind())}};
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_certificate(const Certificate& cert) {
  std::cout << (cert.pass ? "PASS " : "FAIL ") << cert.check << ' ' << cert.params.dump();
  if (!cert.witness.empty()) std::cout << ": " << cert.witness;
  std::cout << '\n';
}

int report(const Common& c, const std::vector<Certificate>& certs, Json extra = Json::object()) {
  bool ok = true;
  for (const auto& cert : certs) ok = ok && cert.pass;
  if (c.json()) {
    Json list = Json::array();
    for (const auto& cert : certs) list.push_back(cert.to_json());
    extra["certificates"] = std::move(list);
    print(extra);
  } else {
    for (const auto& cert : certs) print_certificate(cert);
  }
  return ok ? kExitOk : kExitFailed;
}

std::vector<Certificate> expansion_certificates(const Expansion& theta) {
  Json p = expansion_summary(theta);
  Certificate group_like{"is_group_like", p, true, {}};
  if (!is_group_like(theta)) group_like.fail("some generator log is not a Lie element");
  Certificate symplectic{"is_symplectic", p, true, {}};
  if (!group_like.pass) {
    symplectic.fail("not group-like");
  } else if (!is_symplectic(theta)) {
    const Tensor defect = log_evaluate(theta, boundary_word(theta.genus())) - symplectic_form(theta.context());
    symplectic.fail("log theta(zeta) - omega starts in degree " + std::to_string(filtration_degree(defect)));
  }
  return {group_like, symplectic};
}

GroupWord parse_word(const Expansion& theta, const std::string& text) {
  return GroupWord::parse(theta.genus(), text);
}

CurveDescriptor parse_curve(const std::string& text) {
  if (!text.starts_with("conj:")) return CurveDescriptor::parse(text);
  const Json j = read_json_file(text.substr(5));
  const FreeAutomorphism phi = automorphism_from_json(j);
  if (!phi.factorization()) throw UsageError("conj: file needs a \"factorization\" to conjugate by");
  CurveDescriptor base = CurveDescriptor::nonseparating();
  if (auto it = j.find("base"); it != j.end()) {
    if (!it->is_string()) throw UsageError("conj: \"base\" must be a curve string");
    base = CurveDescriptor::parse(it->get<std::string>());
  }
  return CurveDescriptor::conjugated(*phi.factorization(), base);
}

std::string pretty(const Tensor& t) { return is_lie(t) && !t.is_zero() ? format_lie(t) : format_tensor(t); }

int run_build(const Common& c, int genus, int degree, const std::string& out, const std::string& seed) {
  Common seed_source = c;
  seed_source.expansion = seed;
  seed_source.genus = genus;
  Expansion start = Expansion::exponential(AlgebraContext(genus, degree));
  if (seed != "builtin:exp") {
    if (!fixture_name(seed) && !seed.starts_with("file:")) throw UsageError("--seed must be builtin:exp, fixture:NAME or file:PATH");
    seed_source.degree = std::nullopt;
    start = load_expansion(seed_source);
  }
  const Expansion theta = build_symplectic(start, degree);
  write_json_file(out, expansion_to_json(theta));
  Certificate cert{"is_symplectic", expansion_summary(theta), true, {}};
  cert.params["out"] = out;
  if (!is_symplectic(theta)) cert.fail("built expansion failed the symplectic check");
  return report(c, {cert});
}

int run_eval(const Common& c, const std::string& word, bool log_form) {
  const Expansion theta = load_expansion(c);
  const GroupWord w = parse_word(theta, word);
  const Tensor value = log_form ? log_evaluate(theta, w) : evaluate(theta, w);
  if (c.json()) {
    print(Json{{"word", w.to_string()}, {"expansion", expansion_summary(theta)}, {log_form ? "log" : "value", tensor_to_json(value)}});
  } else {
    std::cout << (log_form ? pretty(value) : format_tensor(value)) << '\n';
  }
  return kExitOk;
}

int run_l_invariant(const Common& c, const std::string& word) {
  const Expansion theta = load_expansion(c);
  const GroupWord w = parse_word(theta, word);
  const Derivation l = l_invariant(theta, w);
  if (c.json()) {
    print(Json{{"word", w.to_string()}, {"expansion", expansion_summary(theta)}, {"l_invariant", derivation_to_json(l)}});
  } else {
    std::cout << "tensor: " << format_tensor(l.to_tensor()) << '\n';
    for (int x = 0; x < theta.context().rank(); ++x) {
      std::cout << basis_name(x) << " -> " << format_tensor(l.value(x)) << '\n';
    }
  }
  return kExitOk;
}

int run_johnson(const Common& c, const std::string& curve_text, int k) {
  const Expansion theta = load_expansion(c);
  if (k < 1 || k + 1 > theta.truncation()) {
    throw UsageError("--k must satisfy 1 <= k <= degree - 1 (degree " + std::to_string(theta.truncation()) + ")");
  }
  const CurveDescriptor curve = parse_curve(curve_text);
  const JohnsonComponent tau = johnson_component(theta, curve.twist(theta.genus()), k);
  if (c.json()) {
    print(Json{{"curve", curve.to_string()}, {"expansion", expansion_summary(theta)}, {"johnson", johnson_to_json(tau)}});
  } else {
    for (int x = 0; x < theta.context().rank(); ++x) {
      std::cout << basis_name(x) << " -> " << format_tensor(tau.values[x]) << '\n';
    }
  }
  return kExitOk;
}

int run_sigma(const Common& c, const std::string& loop, const std::string& word, std::optional<int> power) {
  const Expansion theta = load_expansion(c);
  const GroupWord u = parse_word(theta, loop), v = parse_word(theta, word);
  const Tensor value = power ? sigma_log_power(theta, u, *power, v) : sigma_act(theta, u, v);
  if (c.json()) {
    Json j{{"loop", u.to_string()}, {"word", v.to_string()}, {"expansion", expansion_summary(theta)}};
    if (power) j["log_power"] = *power;
    j["value"] = tensor_to_json(value);
    print(j);
  } else {
    std::cout << format_tensor(value) << '\n';
  }
  return kExitOk;
}

int run_verify(const Common& c, const std::string& selection) {
  const std::vector<int> ids = parse_suite_selection(selection);
  bool ok = true;
  Json entries = Json::array();
  for (int id : ids) {
    const SuiteEntry entry = run_suite_entry(id);
    ok = ok && entry.pass();
    if (c.json()) {
      entries.push_back(entry.to_json());
      continue;
    }
    std::printf("%s %2d  %-66s %8.3f s\n", entry.pass() ? "PASS" : "FAIL", entry.id, entry.title.c_str(), entry.seconds);
    for (const auto& cert : entry.checks) {
      if (!cert.pass) std::cout << "       " << cert.check << ' ' << cert.params.dump() << ": " << cert.witness << '\n';
    }
    std::cout.flush();
  }
  if (c.json()) print(Json{{"suite", selection}, {"status", ok ? "pass" : "fail"}, {"entries", std::move(entries)}});
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with symplectic expansions, Dehn twists and Johnson maps"};
  app.require_subcommand(1);
  Common common;

  auto* build = app.add_subcommand("build-expansion", "Build a symplectic expansion and write it as JSON");
  int build_genus = 1, build_degree = 2;
  std::string build_out, build_seed = "builtin:exp";
  build->add_option("--genus", build_genus, "Surface genus (1-7)")->required()->check(CLI::Range(1, kMaxGenus));
  build->add_option("--degree", build_degree, "Truncation degree (>= 2)")->required()->check(CLI::Range(2, kMaxTruncation));
  build->add_option("--out", build_out, "Output JSON path")->required();
  build->add_option("--seed", build_seed, "Group-like start: builtin:exp | fixture:NAME | file:PATH")->capture_default_str();
  add_common(build, common, false);

  auto* check = app.add_subcommand("check-expansion", "Check an expansion JSON file");
  std::string check_in;
  check->add_option("--in", check_in, "Expansion JSON path")->required();
  add_common(check, common, false);

  auto* eval = app.add_subcommand("eval", "Evaluate the expansion on a word");
  std::string eval_word;
  bool eval_log = false;
  eval->add_option("--word", eval_word, "Word such as \"a1 b1 A1\"")->required();
  eval->add_flag("--log", eval_log, "Print the logarithm instead");
  add_common(eval, common);

  auto* linv = app.add_subcommand("l-invariant", "Loop invariant L(w) as a derivation");
  std::string linv_word;
  linv->add_option("--word", linv_word, "Word such as \"a1\"")->required();
  add_common(linv, common);

  auto* johnson = app.add_subcommand("johnson", "Johnson component tau_k of a Dehn twist");
  std::string johnson_curve;
  int johnson_k = 1;
  johnson->add_option("--curve", johnson_curve, "nonsep | sep:h | alpha:i | beta:i | conj(...):CURVE | conj:FILE")->required();
  johnson->add_option("--k", johnson_k, "Component index k >= 1")->required();
  add_common(johnson, common);

  auto* sigma = app.add_subcommand("sigma", "Action of a loop on a word through the expansion");
  std::string sigma_loop, sigma_word;
  std::optional<int> sigma_power;
  sigma->add_option("--loop", sigma_loop, "Loop word u")->required();
  sigma->add_option("--word", sigma_word, "Word v")->required();
  sigma->add_option("--log-power", sigma_power, "Act by (log u)^p instead of u (p >= 2)")->check(CLI::Range(2, kMaxTruncation));
  add_common(sigma, common);

  auto* verify = app.add_subcommand("verify", "Run the certificate suite");
  std::string verify_suite = "all";
  verify->add_option("--suite", verify_suite, "all | comma-separated ids 1-14")->capture_default_str();
  add_common(verify, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return run_build(common, build_genus, build_degree, build_out, build_seed);
    if (*check) {
      const Expansion theta = expansion_from_json(read_json_file(check_in));
      return report(common, expansion_certificates(theta), Json{{"expansion", expansion_summary(theta)}});
    }
    if (*eval) return run_eval(common, eval_word, eval_log);
    if (*linv) return run_l_invariant(common, linv_word);
    if (*johnson) return run_johnson(common, johnson_curve, johnson_k);
    if (*sigma) return run_sigma(common, sigma_loop, sigma_word, sigma_power);
    if (*verify) return run_verify(common, verify_suite);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
