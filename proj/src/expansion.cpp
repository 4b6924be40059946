#include "magnus/expansion.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "magnus/lie.hpp"
#include "magnus/notation.hpp"

namespace magnus {

namespace fixture_data {
extern const char* const kGenus1;
extern const char* const kGenus2;
extern const char* const kMassuyeau;
}  // namespace fixture_data

namespace {

constexpr std::pair<ExpansionKind, const char*> kKindNames[] = {
    {ExpansionKind::standard, "standard"},
    {ExpansionKind::exponential, "exponential"},
    {ExpansionKind::fixture_genus1, "fixture-genus1"},
    {ExpansionKind::fixture_genus2, "fixture-genus2"},
    {ExpansionKind::fixture_massuyeau, "fixture-massuyeau-partial"},
    {ExpansionKind::built, "built"},
    {ExpansionKind::user, "user"},
};

void check_generator_data(const std::vector<Tensor>& data) {
  if (data.empty()) throw std::invalid_argument("expansion needs generator values");
  const AlgebraContext ctx = data.front().context();
  if (data.size() != std::size_t(ctx.rank())) throw std::invalid_argument("expansion needs 2g generator values");
  for (int i = 0; i < ctx.rank(); ++i) {
    require_same_context(ctx, data[i].context(), "expansion");
    if (data[i].constant_term() != 0) throw PreconditionError("generator " + generator_name(i) + ": nonzero constant term");
    if (graded_part(data[i], 1) != Tensor::basis(ctx, i)) {
      throw PreconditionError("generator " + generator_name(i) + ": degree-1 part must be " + basis_name(i));
    }
  }
}

}  // namespace

std::string kind_name(ExpansionKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  throw std::logic_error("unknown expansion kind");
}

ExpansionKind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw std::invalid_argument("unknown expansion kind '" + std::string(name) + "'");
}

Expansion::Expansion(AlgebraContext ctx, ExpansionKind kind, bool log_mode, std::vector<Tensor> data)
    : ctx_(ctx), kind_(kind), log_mode_(log_mode) {
  check_generator_data(data);
  const Tensor one = Tensor::one(ctx);
  for (const auto& d : data) {
    if (log_mode) {
      values_.push_back(exp(d));
      inverses_.push_back(exp(-d));
    } else {
      values_.push_back(one + d);
      inverses_.push_back(inverse_unit(values_.back()));
      logs_.push_back(log(values_.back()));
    }
  }
  if (log_mode) {
    logs_ = std::move(data);
  } else {
    raw_ = std::move(data);
  }
}

Expansion Expansion::from_logs(std::vector<Tensor> logs, ExpansionKind kind) {
  if (logs.empty()) throw std::invalid_argument("expansion needs generator values");
  const AlgebraContext ctx = logs.front().context();
  return Expansion(ctx, kind, true, std::move(logs));
}

Expansion Expansion::from_raw(std::vector<Tensor> raw, ExpansionKind kind) {
  if (raw.empty()) throw std::invalid_argument("expansion needs generator values");
  const AlgebraContext ctx = raw.front().context();
  return Expansion(ctx, kind, false, std::move(raw));
}

Expansion Expansion::standard(const AlgebraContext& ctx) {
  std::vector<Tensor> raw;
  for (int i = 0; i < ctx.rank(); ++i) raw.push_back(Tensor::basis(ctx, i));
  return from_raw(std::move(raw), ExpansionKind::standard);
}

Expansion Expansion::exponential(const AlgebraContext& ctx) {
  std::vector<Tensor> logs;
  for (int i = 0; i < ctx.rank(); ++i) logs.push_back(Tensor::basis(ctx, i));
  return from_logs(std::move(logs), ExpansionKind::exponential);
}

Expansion Expansion::with_truncation(int truncation) const {
  std::vector<Tensor> data;
  for (const auto& d : stored()) data.push_back(magnus::with_truncation(d, truncation));
  return Expansion(ctx_.with_truncation(truncation), kind_, log_mode_, std::move(data));
}

Expansion Expansion::with_kind(ExpansionKind kind) const {
  Expansion out = *this;
  out.kind_ = kind;
  return out;
}

Tensor evaluate(const Expansion& theta, const GroupWord& w) {
  if (w.genus() != theta.genus()) throw ContextMismatch("evaluate: genus mismatch");
  Tensor out = Tensor::one(theta.context());
  for (const Letter& x : w.letters()) out = out * theta.value(x.generator, x.inverse);
  return out;
}

Tensor log_evaluate(const Expansion& theta, const GroupWord& w) {
  if (w.length() == 1) {
    const Letter x = w.letters()[0];
    return x.inverse ? -theta.log_value(x.generator) : theta.log_value(x.generator);
  }
  return log(evaluate(theta, w));
}

bool is_group_like(const Expansion& theta) {
  for (int i = 0; i < theta.context().rank(); ++i) {
    if (!is_lie(theta.log_value(i))) return false;
  }
  return true;
}

bool is_symplectic(const Expansion& theta) {
  if (theta.truncation() < 2) throw std::invalid_argument("is_symplectic needs truncation >= 2");
  return is_group_like(theta) && log_evaluate(theta, boundary_word(theta.genus())) == symplectic_form(theta.context());
}

Expansion build_symplectic(const Expansion& seed, int truncation) {
  if (truncation < 2) throw std::invalid_argument("build_symplectic needs truncation >= 2");
  if (!is_group_like(seed)) throw PreconditionError("build_symplectic: seed is not group-like");
  const int g = seed.genus();
  // Degree m of log theta(zeta) depends only on the logs below degree m, so
  // the pass at m = N + 1 fixes the top degree of the result. The output is
  // then the truncation of a symplectic expansion, not merely symplectic
  // modulo T_{N+1}.
  const int last = std::min(truncation + 1, kMaxTruncation);
  const GroupWord zeta = boundary_word(g);
  std::vector<Tensor> logs;
  for (int i = 0; i < 2 * g; ++i) logs.push_back(with_truncation(seed.log_value(i), last));

  for (int m = 2; m <= last; ++m) {
    // Work modulo T_{m+1}: only degree m of log theta(zeta) is examined.
    std::vector<Tensor> at_m;
    for (const auto& l : logs) at_m.push_back(with_truncation(l, m));
    const Expansion current = Expansion::from_logs(std::move(at_m));
    const Tensor defect = graded_part(log_evaluate(current, zeta) - symplectic_form(current.context()), m);
    if (defect.is_zero()) continue;
    if (m == 2) throw std::logic_error("build_symplectic: degree-2 defect of a group-like seed is nonzero");
    // defect = (1/m) phi(defect) = (1/m) sum_X [X, phi(r_X)]; a degree-(m-1)
    // change c in l(alpha_i) (resp. l(beta_i)) moves degree m of
    // log theta(zeta) by [c, B_i] (resp. [A_i, c]).
    const auto parts = split_first_letter(defect);
    const Rational inv_m(1, m);
    for (int i = 0; i < g; ++i) {
      const int a = 2 * i, b = 2 * i + 1;
      if (!parts[b].is_zero()) logs[a] += with_truncation(inv_m * phi(parts[b]), last);
      if (!parts[a].is_zero()) logs[b] -= with_truncation(inv_m * phi(parts[a]), last);
    }
  }
  const Expansion extended = Expansion::from_logs(logs, ExpansionKind::built);
  if (!is_symplectic(extended)) throw std::logic_error("build_symplectic: result failed the symplectic check");
  return extended.with_truncation(truncation);
}

Expansion build_symplectic(int genus, int truncation) {
  return build_symplectic(Expansion::exponential(AlgebraContext(genus, truncation)), truncation);
}

bool is_symplectic_truncation(const Expansion& theta) {
  if (theta.truncation() >= kMaxTruncation) throw std::invalid_argument("no room above the truncation");
  return is_symplectic(theta.with_truncation(theta.truncation() + 1));
}

AlgebraEndomorphism connecting_automorphism(const Expansion& theta1, const Expansion& theta2) {
  require_same_context(theta1.context(), theta2.context(), "connecting_automorphism");
  std::vector<Tensor> sources, targets;
  for (int i = 0; i < theta1.context().rank(); ++i) {
    sources.push_back(theta1.value(i));
    targets.push_back(theta2.value(i));
  }
  return AlgebraEndomorphism::solve(sources, targets);
}

namespace {

struct FixtureInfo {
  const char* name;
  const char* file;
  const char* const* text;
  ExpansionKind kind;
};

constexpr FixtureInfo kFixtures[] = {
    {"g1", "genus1.json", &fixture_data::kGenus1, ExpansionKind::fixture_genus1},
    {"g2", "genus2.json", &fixture_data::kGenus2, ExpansionKind::fixture_genus2},
    {"massuyeau", "massuyeau.json", &fixture_data::kMassuyeau, ExpansionKind::fixture_massuyeau},
};

const FixtureInfo& find_fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (name == f.name) return f;
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (expected g1, g2 or massuyeau)");
}

}  // namespace

std::string fixture_text(std::string_view name) {
  const FixtureInfo& info = find_fixture(name);
  if (const char* dir = std::getenv("MAGNUS_DATA_DIR"); dir != nullptr && *dir != '\0') {
    const std::string path = std::string(dir) + "/fixtures/" + info.file;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read fixture file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return *info.text;
}

int fixture_trusted_truncation(std::string_view name) {
  return nlohmann::json::parse(fixture_text(name)).at("trusted_truncation").get<int>();
}

Expansion load_fixture(std::string_view name, int genus, int truncation) {
  const FixtureInfo& info = find_fixture(name);
  const auto doc = nlohmann::json::parse(fixture_text(name));
  const int trusted = doc.at("trusted_truncation").get<int>();
  const bool partial = doc.at("partial").get<bool>();
  const int fixture_genus = doc.at("genus").get<int>();
  if (!partial && genus != fixture_genus) {
    throw std::invalid_argument("fixture " + std::string(name) + " is genus " + std::to_string(fixture_genus));
  }
  if (truncation > trusted) {
    throw std::invalid_argument("fixture " + std::string(name) + " is trusted only up to degree " +
                                std::to_string(trusted) + ", requested " + std::to_string(truncation));
  }
  const AlgebraContext ctx(genus, truncation);
  // Parse at the trusted truncation so bracket products are exact, then cut.
  const AlgebraContext full(genus, trusted);
  std::vector<Tensor> logs;
  for (int i = 0; i < ctx.rank(); ++i) logs.push_back(Tensor::basis(ctx, i));
  for (const auto& [key, value] : doc.at("generators").items()) {
    const int i = parse_generator_name(key, genus);
    logs[i] = with_truncation(parse_tensor(full, value.get<std::string>()), truncation);
  }
  return Expansion::from_logs(std::move(logs), info.kind);
}

}  // namespace magnus
