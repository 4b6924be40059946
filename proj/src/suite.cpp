#include "magnus/suite.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "magnus/cyclic.hpp"
#include "magnus/lie.hpp"

namespace magnus {

namespace {

using Json = nlohmann::ordered_json;

Json params(const Expansion& theta) {
  return {{"genus", theta.genus()}, {"truncation", theta.truncation()}, {"expansion", kind_name(theta.kind())}};
}

Certificate make(std::string name, Json p) { return Certificate{std::move(name), std::move(p), true, {}}; }

Certificate time_limit(double seconds, double limit, Json p) {
  Certificate cert = make("runtime", std::move(p));
  cert.params["limit_seconds"] = limit;
  cert.params["seconds"] = seconds;
  if (seconds >= limit) cert.fail("took " + std::to_string(seconds) + " s");
  return cert;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Second symplectic expansion, distinct from build_symplectic(g, N) from
// degree 3 on.
Expansion second_expansion(int genus, int truncation) {
  return build_symplectic(load_fixture("massuyeau", genus, 4), truncation).with_kind(ExpansionKind::user);
}

Certificate fixture_check(std::string_view name, int genus, int truncation, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const Expansion theta = load_fixture(name, genus, truncation);
  Certificate cert = make("fixture_boundary_log", params(theta));
  if (!is_group_like(theta)) cert.fail("some generator log is not a Lie element");
  const Tensor l = log_evaluate(theta, boundary_word(genus));
  if (l != symplectic_form(theta.context())) cert.fail("log theta(zeta) differs from omega");
  cert.params["seconds"] = seconds_since(t0);
  if (seconds_since(t0) >= limit) cert.fail("runtime limit exceeded");
  return cert;
}

std::vector<Certificate> criterion_1() { return {fixture_check("g1", 1, 5, 1.0)}; }
std::vector<Certificate> criterion_2() { return {fixture_check("g2", 2, 4, 1.0)}; }

std::vector<Certificate> criterion_3() {
  std::vector<Certificate> out;
  for (int g = 1; g <= 3; ++g) {
    const auto t0 = std::chrono::steady_clock::now();
    const Expansion theta = build_symplectic(g, 6);
    const double s = seconds_since(t0);
    Certificate cert = make("is_symplectic", params(theta));
    if (!is_symplectic(theta)) cert.fail("built expansion is not symplectic");
    out.push_back(cert);
    if (g == 3) out.push_back(time_limit(s, 60.0, params(theta)));
  }
  return out;
}

const char* const kConjugatedCurves[] = {"conj(beta1):nonsep", "conj(alpha2,beta1^-1):nonsep", "conj(beta2,sep1):nonsep"};

std::vector<Certificate> criterion_4() {
  std::vector<Certificate> out;
  for (const Expansion& theta : {build_symplectic(2, 5), load_fixture("g2", 2, 4)}) {
    std::vector<CurveDescriptor> curves{CurveDescriptor::nonseparating(), CurveDescriptor::separating(1)};
    for (const char* c : kConjugatedCurves) curves.push_back(CurveDescriptor::parse(c));
    for (const auto& c : curves) out.push_back(verify_dehn_twist_formula(theta, c));
  }
  return out;
}

std::vector<Certificate> criterion_5() {
  std::vector<Certificate> out;
  for (int g = 1; g <= 3; ++g) {
    std::vector<CurveDescriptor> curves;
    for (int i = 1; i <= g; ++i) {
      curves.push_back(CurveDescriptor::parse("alpha:" + std::to_string(i)));
      curves.push_back(CurveDescriptor::parse("beta:" + std::to_string(i)));
      curves.push_back(CurveDescriptor::separating(i));
    }
    for (const auto& c : curves) {
      Certificate cert = make("transvection", {{"genus", g}, {"curve", c.to_string()}});
      std::vector<int> cls(2 * g, 0);
      const GroupWord word = c.word(g);
      for (Letter l : word.letters()) cls[l.generator] += l.inverse ? -1 : 1;
      const RationalMatrix m = homology_action(c.twist(g));
      for (int x = 0; x < 2 * g; ++x) {
        // X - (X . [C]) [C]
        int pairing = 0;
        for (int y = 0; y < 2 * g; ++y) pairing += intersection(x, y) * cls[y];
        for (int y = 0; y < 2 * g; ++y) {
          const int expected = (x == y ? 1 : 0) - pairing * cls[y];
          if (m(y, x) != expected) cert.fail("column " + basis_name(x) + " differs at " + basis_name(y));
        }
      }
      out.push_back(cert);
    }
  }
  return out;
}

// On the basis of H: tau_1 = -L3 and tau_2 = -L4 + 1/2 [L2, L4] + 1/2 L3 L3.
Certificate low_degree_johnson(const Expansion& theta) {
  Certificate cert = make("low_degree_johnson", params(theta));
  cert.params["curve"] = "nonsep";
  const int g = theta.genus();
  const Derivation l = l_invariant(theta, GroupWord::alpha(g, 1));
  const Derivation l2 = l.tensor_degree_part(2), l3 = l.tensor_degree_part(3), l4 = l.tensor_degree_part(4);
  const FreeAutomorphism t = twist_nonseparating(g);
  const JohnsonComponent tau1 = johnson_component(theta, t, 1);
  const JohnsonComponent tau2 = johnson_component(theta, t, 2);
  const Rational half(1, 2);
  for (int x = 0; x < theta.context().rank(); ++x) {
    const Tensor h = Tensor::basis(theta.context(), x);
    if (tau1.values[x] != -apply(l3, h)) cert.fail("tau_1 differs from -L3 on " + basis_name(x));
    const Tensor f = -apply(l4, h) + half * (apply(l2, apply(l4, h)) - apply(l4, apply(l2, h))) +
                     half * apply(l3, apply(l3, h));
    if (tau2.values[x] != f) cert.fail("tau_2 differs from the L2/L3/L4 formula on " + basis_name(x));
  }
  return cert;
}

std::vector<Certificate> criterion_6() {
  return {low_degree_johnson(build_symplectic(2, 5)), low_degree_johnson(second_expansion(2, 5))};
}

std::vector<Certificate> criterion_7() {
  std::vector<Certificate> out;
  const Expansion theta = build_symplectic(2, 6);
  for (int k = 1; k <= 4; ++k) {
    Certificate cert = make("separating_tau_series", params(theta));
    cert.params["h"] = 1;
    cert.params["k"] = k;
    if (johnson_component(theta, twist_separating(2, 1), k) != separating_tau_formula(theta, 1, k)) {
      cert.fail("johnson_component differs from the separating series");
    }
    out.push_back(cert);
  }
  return out;
}

Tensor random_cyclic(std::mt19937& rng, const AlgebraContext& ctx, int degree) {
  for (;;) {
    TermAccumulator acc(ctx);
    const int terms = 1 + int(rng() % 3);
    for (int k = 0; k < terms; ++k) {
      std::vector<int> letters;
      for (int i = 0; i < degree; ++i) letters.push_back(int(rng() % ctx.rank()));
      acc.add(Monomial::from_letters(letters), make_rational(int(rng() % 7) - 3, 1 + int(rng() % 3)));
    }
    const Tensor t = cyclic_n(acc.finish());
    if (!t.is_zero()) return t;
  }
}

std::vector<Certificate> criterion_8() {
  std::mt19937 rng(20240801);
  Certificate cert = make("necklace_commutator", {{"samples", 120}, {"max_total_degree", 5}});
  int nonzero = 0;
  for (int s = 0; s < 120; ++s) {
    const AlgebraContext ctx(1 + s % 2, 6);
    const int n = 2 + int(rng() % 2);
    const int m = n == 3 ? 2 : 2 + int(rng() % 2);
    const Tensor u = random_cyclic(rng, ctx, n), v = random_cyclic(rng, ctx, m);
    const Tensor w = necklace_bracket(u, v);
    nonzero += !w.is_zero();
    const Derivation lhs = Derivation::from_tensor(w);
    const Derivation rhs = commutator(Derivation::from_tensor(u), Derivation::from_tensor(v));
    if (lhs.values() != rhs.values()) cert.fail("sample " + std::to_string(s) + ": bracket and commutator differ");
  }
  cert.params["nonzero_brackets"] = nonzero;
  if (nonzero < 50) cert.fail("too few nonzero brackets to be informative");
  return {cert};
}

GroupWord random_word(std::mt19937& rng, int genus, int max_length) {
  for (;;) {
    std::vector<Letter> letters;
    const int len = 1 + int(rng() % max_length);
    for (int i = 0; i < len; ++i) letters.push_back(Letter{int(rng() % (2 * genus)), rng() % 2 == 1});
    GroupWord w(genus, std::move(letters));
    if (!w.empty()) return w;
  }
}

std::vector<Certificate> criterion_9() {
  std::mt19937 rng(9001);
  const Expansion theta = build_symplectic(2, 5);
  Certificate cert = make("l_invariant_conjugation", params(theta));
  cert.params["samples"] = 100;
  for (int s = 0; s < 100; ++s) {
    const GroupWord x = random_word(rng, 2, 8), y = random_word(rng, 2, 8);
    const Tensor l = l_invariant_tensor(theta, x);
    if (l_invariant_tensor(theta, conjugate(x, y)) != l) cert.fail("L(y x y^-1) != L(x) for x = " + x.to_string() + ", y = " + y.to_string());
    if (l_invariant_tensor(theta, inverse(x)) != l) cert.fail("L(x^-1) != L(x) for x = " + x.to_string());
  }
  return {cert};
}

Certificate sigma_check(const Expansion& theta) {
  Certificate cert = make("sigma_log_square", params(theta));
  const int g = theta.genus();
  const GroupWord a = GroupWord::alpha(g, 1), b = GroupWord::beta(g, 1);
  const Tensor theta_b = evaluate(theta, b);
  const Tensor expected = Rational(2) * (theta_b * theta.log_value(0));
  if (sigma_log_power(theta, a, 2, b) != expected) cert.fail("sigma((log alpha1)^2) beta1 differs from 2 theta(beta1) l(alpha1)");
  if (apply(l_invariant(theta, a), theta_b) != -(theta_b * theta.log_value(0))) {
    cert.fail("L(alpha1) theta(beta1) differs from -theta(beta1) l(alpha1)");
  }
  return cert;
}

std::vector<Certificate> criterion_10() {
  return {sigma_check(load_fixture("g1", 1, 5)), sigma_check(build_symplectic(1, 5)), sigma_check(build_symplectic(2, 5))};
}

std::vector<Certificate> criterion_11() {
  const Expansion theta = build_symplectic(2, 5);
  Certificate cert = make("disjoint_curve_action", params(theta));
  const Derivation l = l_invariant(theta, GroupWord::alpha(2, 1));
  for (const char* w : {"a1", "a2", "b2"}) {
    if (!apply(l, evaluate(theta, GroupWord::parse(2, w))).is_zero()) cert.fail(std::string("L(alpha1) does not kill theta(") + w + ")");
  }
  return {cert};
}

std::vector<Certificate> criterion_12() {
  return {verify_operator_identities(build_symplectic(2, 6), CurveDescriptor::nonseparating()),
          verify_operator_identities(second_expansion(2, 6), CurveDescriptor::nonseparating())};
}

std::vector<Certificate> criterion_13() {
  std::vector<Certificate> out;
  const Expansion theta = build_symplectic(2, 4);
  out.push_back(verify_closed_surface_formula(theta, CurveDescriptor::nonseparating()));
  out.push_back(verify_closed_surface_formula(theta, CurveDescriptor::separating(1)));
  out.push_back(verify_closed_surface_formula(theta, CurveDescriptor::parse(kConjugatedCurves[1])));
  return out;
}

Certificate connecting_check(const Expansion& built, const Expansion& other) {
  const AlgebraContext& ctx = built.context();
  Certificate cert = make("connecting_automorphism", params(built));
  cert.params["other"] = kind_name(other.kind());
  const Derivation d(log_on_h(connecting_automorphism(built, other)));
  cert.params["trivial"] = d.is_zero();
  Tensor kernel(ctx);
  for (int i = 0; i < ctx.genus(); ++i) {
    const Tensor a = Tensor::basis(ctx, 2 * i), b = Tensor::basis(ctx, 2 * i + 1);
    const Tensor da = d.value(2 * i), db = d.value(2 * i + 1);
    if (!is_lie(da) || !is_lie(db)) cert.fail("log U takes a non-Lie value on H");
    if (filtration_degree(da) < 2 || filtration_degree(db) < 2) cert.fail("log U has a degree-1 value on H");
    kernel += bracket(b, da) - bracket(a, db);
  }
  if (!kernel.is_zero()) cert.fail("(log U)|_H is not in the kernel of the bracket");
  const Tensor u1 = graded_part(d.to_tensor(), 3);
  if (antisymmetrize(u1) != u1) cert.fail("u_1 is not in the exterior cube of H");
  cert.params["u1_terms"] = u1.size();
  return cert;
}

// Seeded along the derivation of A1 ^ B1 ^ A2, which the builder keeps, so
// the pair differs and u_1 is nonzero.
Expansion cube_shifted_expansion(int truncation) {
  const AlgebraContext ctx(2, truncation);
  const Derivation shift = Derivation::from_tensor(antisymmetrize(
      Tensor::basis(AlgebraContext(2, 3), 0) * Tensor::basis(AlgebraContext(2, 3), 1) * Tensor::basis(AlgebraContext(2, 3), 2)));
  std::vector<Tensor> logs;
  for (int x = 0; x < ctx.rank(); ++x) logs.push_back(Tensor::basis(ctx, x) + with_truncation(shift.value(x), truncation));
  return build_symplectic(Expansion::from_logs(logs), truncation);
}

std::vector<Certificate> criterion_14() {
  std::vector<Certificate> out{connecting_check(build_symplectic(1, 5), load_fixture("g1", 1, 5))};
  Certificate nontrivial = connecting_check(build_symplectic(2, 5), cube_shifted_expansion(5));
  if (nontrivial.params["u1_terms"] == 0) nontrivial.fail("the shifted pair should give a nonzero u_1");
  out.push_back(nontrivial);
  return out;
}

struct Criterion {
  const char* title;
  std::vector<Certificate> (*run)();
};

const Criterion kCriteria[kSuiteSize] = {
    {"genus-1 fixture is group-like with boundary log omega (N = 5)", criterion_1},
    {"genus-2 fixture is group-like with boundary log omega (N = 4)", criterion_2},
    {"build_symplectic is symplectic for genus 1-3 at N = 6", criterion_3},
    {"Dehn twist formula at genus 2 (built N = 5, fixture N = 4)", criterion_4},
    {"twists act on homology by transvections, genus 1-3", criterion_5},
    {"tau_1 and tau_2 of the non-separating twist for two expansions", criterion_6},
    {"separating tau series for k = 1..4 at genus 2, N = 6", criterion_7},
    {"necklace bracket equals derivation commutator", criterion_8},
    {"L invariant under conjugation and inversion", criterion_9},
    {"sigma of (log alpha1)^2 on beta1", criterion_10},
    {"L(alpha1) kills disjoint generators", criterion_11},
    {"operator identities for two expansions at genus 2, N = 6", criterion_12},
    {"twist formula modulo the omega ideal at genus 2, N = 4", criterion_13},
    {"connecting automorphism log restricts to the bracket kernel", criterion_14},
};

}  // namespace

bool SuiteEntry::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

Json SuiteEntry::to_json() const {
  Json list = Json::array();
  for (const auto& c : checks) list.push_back(c.to_json());
  return Json{{"id", id}, {"title", title}, {"status", pass() ? "pass" : "fail"}, {"seconds", seconds}, {"checks", std::move(list)}};
}

SuiteEntry run_suite_entry(int id) {
  if (id < 1 || id > kSuiteSize) throw std::invalid_argument("suite entry out of range: " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  SuiteEntry entry{id, c.title, {}, 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    entry.checks = c.run();
  } catch (const std::exception& e) {
    Certificate cert = make("exception", Json::object());
    cert.fail(e.what());
    entry.checks.push_back(cert);
  }
  entry.seconds = seconds_since(t0);
  return entry;
}

std::vector<int> parse_suite_selection(std::string_view text) {
  std::vector<int> ids;
  if (text == "all") {
    for (int i = 1; i <= kSuiteSize; ++i) ids.push_back(i);
    return ids;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item(text.substr(pos, comma - pos));
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || id < 1 || id > kSuiteSize) {
      throw std::invalid_argument("bad suite selection '" + std::string(text) + "': expected 'all' or ids 1-" +
                                  std::to_string(kSuiteSize));
    }
    ids.push_back(id);
    pos = comma + 1;
  }
  return ids;
}

}  // namespace magnus
