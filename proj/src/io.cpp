#include "magnus/io.hpp"

#include <fstream>
#include <stdexcept>

#include "magnus/lie.hpp"

namespace magnus {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

AlgebraContext context_from_json(const Json& j) {
  try {
    return AlgebraContext(int_field(j, "genus"), int_field(j, "truncation"));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json tensor_body(const Tensor& t) {
  Json terms = Json::array();
  for (const auto& term : t.terms()) {
    terms.push_back(Json{{"mono", term.mono.letters()}, {"coeff", rational_to_fraction_string(term.coeff)}});
  }
  return Json{{"genus", t.genus()}, {"truncation", t.truncation()}, {"terms", std::move(terms)}};
}

Tensor terms_from_json(AlgebraContext ctx, const Json& terms) {
  if (!terms.is_array()) bad("\"terms\" must be an array");
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& item : terms) {
    const Json& mono = field(item, "mono");
    if (!mono.is_array()) bad("\"mono\" must be an array");
    std::vector<int> letters;
    for (const auto& x : mono) {
      if (!x.is_number_integer()) bad("monomial letters must be integers");
      const int v = x.get<int>();
      if (v < 0 || v >= ctx.rank()) bad("monomial letter " + std::to_string(v) + " out of range");
      letters.push_back(v);
    }
    if (int(letters.size()) > ctx.truncation()) bad("monomial degree exceeds truncation");
    Rational c = parse_rational(string_field(item, "coeff"));
    if (c == 0) bad("zero coefficient");
    out.push_back(Term{Monomial::from_letters(letters), std::move(c)});
  }
  const std::size_t n = out.size();
  Tensor t = Tensor::from_terms(ctx, std::move(out));
  if (t.size() != n) bad("duplicate monomial");
  return t;
}

}  // namespace

Json tensor_to_json(const Tensor& t) { return tensor_body(t); }

Tensor tensor_from_json(const Json& j) { return terms_from_json(context_from_json(j), field(j, "terms")); }

Json lie_to_json(const Tensor& t) {
  if (!is_lie(t)) throw PreconditionError("lie_to_json: tensor is not a Lie element");
  Json j = tensor_body(t);
  j["lie"] = true;
  return j;
}

Tensor lie_from_json(const Json& j) {
  Tensor t = tensor_from_json(j);
  auto it = j.find("lie");
  if (it != j.end()) {
    if (!it->is_boolean()) bad("\"lie\" must be a boolean");
    if (it->get<bool>() && !is_lie(t)) bad("tensor flagged \"lie\" is not a Lie element");
  }
  return t;
}

Json derivation_to_json(const Derivation& d) {
  Json j = tensor_body(d.to_tensor());
  j["view"] = "tensor";
  return j;
}

Derivation derivation_from_json(const Json& j) {
  if (string_field(j, "view") != "tensor") bad("derivation \"view\" must be \"tensor\"");
  const Tensor t = tensor_from_json(j);
  if (t.truncation() < 2) bad("derivation tensor view needs truncation >= 2");
  const Derivation d = Derivation::from_tensor(t);
  if (d.to_tensor() != t) bad("tensor is not the tensor view of a derivation (nonzero part of degree <= 1)");
  return d;
}

Json expansion_to_json(const Expansion& theta) {
  Json gens = Json::array();
  const char* key = theta.log_mode() ? "log" : "raw";
  for (int x = 0; x < theta.context().rank(); ++x) {
    gens.push_back(Json{{"name", generator_name(x)}, {key, tensor_body(theta.stored()[x])}});
  }
  return Json{{"genus", theta.genus()},
              {"truncation", theta.truncation()},
              {"kind", kind_name(theta.kind())},
              {"generators", std::move(gens)}};
}

Expansion expansion_from_json(const Json& j) {
  const AlgebraContext ctx = context_from_json(j);
  ExpansionKind kind;
  try {
    kind = parse_kind(string_field(j, "kind"));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array() || int(gens.size()) != ctx.rank()) {
    bad("\"generators\" must list " + std::to_string(ctx.rank()) + " entries");
  }
  std::vector<Tensor> logs, raws;
  for (int x = 0; x < ctx.rank(); ++x) {
    const Json& g = gens[x];
    if (string_field(g, "name") != generator_name(x)) bad("generator " + std::to_string(x) + " must be named " + generator_name(x));
    const bool has_log = g.contains("log"), has_raw = g.contains("raw");
    if (has_log == has_raw) bad("generator " + generator_name(x) + " needs exactly one of \"log\" or \"raw\"");
    Tensor t = tensor_from_json(g.at(has_log ? "log" : "raw"));
    if (t.context() != ctx) bad("generator " + generator_name(x) + " has a different genus or truncation");
    (has_log ? logs : raws).push_back(std::move(t));
  }
  if (!logs.empty() && !raws.empty()) bad("generators mix \"log\" and \"raw\"");
  try {
    return logs.empty() ? Expansion::from_raw(std::move(raws), kind) : Expansion::from_logs(std::move(logs), kind);
  } catch (const std::domain_error& e) {
    bad(e.what());
  }
}

Json automorphism_to_json(const FreeAutomorphism& phi) {
  Json images = Json::array();
  for (const auto& w : phi.images()) images.push_back(w.to_string());
  Json j{{"genus", phi.genus()}, {"images", std::move(images)}};
  if (phi.factorization()) {
    Json f = Json::array();
    for (const auto& atom : *phi.factorization()) f.push_back(atom.to_string());
    j["factorization"] = std::move(f);
  }
  return j;
}

FreeAutomorphism automorphism_from_json(const Json& j) {
  const int g = int_field(j, "genus");
  if (g < 1 || g > kMaxGenus) bad("genus out of range");
  const Json& images = field(j, "images");
  if (!images.is_array() || int(images.size()) != 2 * g) bad("\"images\" must list " + std::to_string(2 * g) + " words");
  std::vector<GroupWord> words;
  for (const auto& w : images) {
    if (!w.is_string()) bad("images must be strings");
    words.push_back(GroupWord::parse(g, w.get<std::string>()));
  }
  std::optional<std::vector<TwistAtom>> factorization;
  if (auto it = j.find("factorization"); it != j.end()) {
    if (!it->is_array()) bad("\"factorization\" must be an array");
    factorization.emplace();
    for (const auto& a : *it) {
      if (!a.is_string()) bad("factorization entries must be strings");
      factorization->push_back(TwistAtom::parse(a.get<std::string>()));
    }
    const FreeAutomorphism expected = FreeAutomorphism::from_factorization(g, *factorization);
    if (expected.images() != words) bad("images do not match the factorization");
  }
  return FreeAutomorphism(g, std::move(words), std::move(factorization));
}

Json johnson_to_json(const JohnsonComponent& c) {
  Json values = Json::array();
  for (int x = 0; x < int(c.values.size()); ++x) {
    values.push_back(Json{{"name", basis_name(x)}, {"value", tensor_body(c.values[x])}});
  }
  return Json{{"k", c.k}, {"values", std::move(values)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace magnus
