#include "magnus/twist_johnson.hpp"

#include "magnus/cyclic.hpp"
#include "magnus/lie.hpp"

namespace magnus {

namespace {

// Least degree where a and b differ, or -1.
int first_difference(const Tensor& a, const Tensor& b) {
  const Tensor d = a - b;
  return d.is_zero() ? -1 : filtration_degree(d);
}

void require_symplectic(const Expansion& theta, const char* op) {
  if (!is_symplectic(theta)) throw PreconditionError(std::string(op) + ": expansion is not symplectic");
}

Tensor raise(const Tensor& t) { return with_truncation(t, t.truncation() + 1); }

// Calls f on every (m_1, ..., m_parts) with m_i >= least and sum total.
template <class F>
void for_each_composition(int parts, int total, int least, F&& f) {
  std::vector<int> current;
  auto rec = [&](auto&& self, int left, int remaining) -> void {
    if (left == 0) {
      if (remaining == 0) f(current);
      return;
    }
    for (int m = least; m <= remaining - least * (left - 1); ++m) {
      current.push_back(m);
      self(self, left - 1, remaining - m);
      current.pop_back();
    }
  };
  rec(rec, parts, total);
}

nlohmann::ordered_json expansion_params(const Expansion& theta) {
  return {{"genus", theta.genus()}, {"truncation", theta.truncation()}, {"expansion", kind_name(theta.kind())}};
}

}  // namespace

Tensor l_invariant_tensor(const Expansion& theta, const GroupWord& w) {
  // l(w)^2 modulo T_{N+2} needs only l(w) modulo T_{N+1}.
  const Tensor l = raise(log_evaluate(theta, w));
  return Rational(1, 2) * cyclic_n(l * l);
}

Derivation l_invariant(const Expansion& theta, const GroupWord& w) {
  return Derivation::from_tensor(l_invariant_tensor(theta, w));
}

AlgebraEndomorphism total_johnson(const Expansion& theta, const FreeAutomorphism& phi) {
  if (phi.genus() != theta.genus()) throw ContextMismatch("total_johnson: genus mismatch");
  std::vector<Tensor> sources, targets;
  for (int i = 0; i < theta.context().rank(); ++i) {
    sources.push_back(theta.value(i));
    targets.push_back(evaluate(theta, phi.image(i)));
  }
  return AlgebraEndomorphism::solve(sources, targets);
}

JohnsonComponent johnson_component(const Expansion& theta, const FreeAutomorphism& phi, int k) {
  if (k < 1 || k + 1 > theta.truncation()) {
    throw std::out_of_range("johnson_component: need 1 <= k <= N - 1, got k = " + std::to_string(k));
  }
  const AlgebraEndomorphism t = total_johnson(theta, phi);
  const RationalMatrix inv = homology_action(phi).inverse();
  const AlgebraContext& ctx = theta.context();
  JohnsonComponent out{k, {}};
  for (int x = 0; x < ctx.rank(); ++x) {
    TermAccumulator acc(ctx);
    for (int y = 0; y < ctx.rank(); ++y) {
      if (inv(y, x) != 0) acc.add(t.value(y), inv(y, x));
    }
    out.values.push_back(graded_part(acc.finish(), k + 1));
  }
  return out;
}

JohnsonComponent separating_tau_formula(const Expansion& theta, int h, int k) {
  if (k < 1 || k + 1 > theta.truncation()) {
    throw std::out_of_range("separating_tau_formula: need 1 <= k <= N - 1, got k = " + std::to_string(k));
  }
  const AlgebraContext& ctx = theta.context();
  const Derivation l = l_invariant(theta, separating_word(theta.genus(), h));
  std::vector<Derivation> parts;  // parts[m] = L_m
  for (int m = 0; m <= k + 2; ++m) parts.push_back(l.tensor_degree_part(m));

  JohnsonComponent out{k, std::vector<Tensor>(ctx.rank(), Tensor(ctx))};
  for (int n = 1; 2 * n <= k; ++n) {
    const Rational coeff = Rational(n % 2 == 0 ? 1 : -1) / factorial(n);
    // The operator product L_{m_1} ... L_{m_n} applies L_{m_n} first.
    for_each_composition(n, 2 * n + k, 4, [&](const std::vector<int>& ms) {
      for (int x = 0; x < ctx.rank(); ++x) {
        Tensor v = Tensor::basis(ctx, x);
        for (int i = n - 1; i >= 0; --i) v = apply(parts[ms[i]], v);
        out.values[x] += coeff * v;
      }
    });
  }
  return out;
}

Tensor sigma_act(const Expansion& theta, const GroupWord& u, const GroupWord& v) {
  require_symplectic(theta, "sigma_act");
  const int n = theta.truncation();
  const Tensor cyclic = cyclic_n(evaluate(theta, u) - Tensor::one(theta.context()));
  // The values are known modulo T_N. The degree-1 part of the cyclic tensor
  // gives constant values, which lower degree, so theta(v) is used up to
  // degree N; the padded values only reach degrees >= N.
  const Derivation d = Derivation::from_tensor(cyclic);
  std::vector<Tensor> values;
  for (const auto& x : d.values()) values.push_back(with_truncation(x, n));
  return with_truncation(-apply(Derivation(std::move(values)), evaluate(theta, v)), n - 1);
}

Tensor sigma_log_power(const Expansion& theta, const GroupWord& u, int p, const GroupWord& v) {
  if (p < 2) throw std::invalid_argument("sigma_log_power needs p >= 2");
  require_symplectic(theta, "sigma_log_power");
  const Tensor l = raise(log_evaluate(theta, u));
  Tensor power = l;
  for (int i = 1; i < p; ++i) power = power * l;
  const Derivation d = Derivation::from_tensor(cyclic_n(power));
  return -apply(d, evaluate(theta, v));
}

CurveDescriptor CurveDescriptor::conjugated(std::vector<TwistAtom> phi, CurveDescriptor base_curve) {
  CurveDescriptor out = base_curve;
  phi.insert(phi.end(), base_curve.conjugator.begin(), base_curve.conjugator.end());
  out.conjugator = std::move(phi);
  return out;
}

CurveDescriptor CurveDescriptor::parse(std::string_view text) {
  CurveDescriptor out;
  if (text.starts_with("conj(")) {
    const auto close = text.find(')');
    if (close == std::string_view::npos || close + 1 >= text.size() || text[close + 1] != ':') {
      throw std::invalid_argument("bad conjugated curve '" + std::string(text) + "'");
    }
    std::vector<TwistAtom> atoms;
    std::string_view list = text.substr(5, close - 5);
    while (!list.empty()) {
      const auto comma = list.find(',');
      atoms.push_back(TwistAtom::parse(list.substr(0, comma)));
      list = comma == std::string_view::npos ? std::string_view() : list.substr(comma + 1);
    }
    return conjugated(std::move(atoms), parse(text.substr(close + 2)));
  }
  if (text == "nonsep") return out;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("bad curve '" + std::string(text) + "'");
  const std::string_view kind = text.substr(0, colon);
  std::string index(text.substr(colon + 1));
  if (kind == "sep") {
    out.base = TwistAtom::parse("sep" + index);
  } else if (kind == "alpha" || kind == "beta") {
    out.base = TwistAtom::parse(std::string(kind) + index);
  } else {
    throw std::invalid_argument("bad curve '" + std::string(text) + "'");
  }
  if (out.base.power != 1) throw std::invalid_argument("curve index must be a plain integer");
  return out;
}

std::string CurveDescriptor::to_string() const {
  std::string base_text;
  switch (base.kind) {
    case TwistAtom::Kind::alpha:
      base_text = base.index == 1 ? "nonsep" : "alpha:" + std::to_string(base.index);
      break;
    case TwistAtom::Kind::beta:
      base_text = "beta:" + std::to_string(base.index);
      break;
    case TwistAtom::Kind::sep:
      base_text = "sep:" + std::to_string(base.index);
      break;
  }
  if (conjugator.empty()) return base_text;
  std::string out = "conj(";
  for (std::size_t i = 0; i < conjugator.size(); ++i) {
    if (i) out += ",";
    out += conjugator[i].to_string();
  }
  return out + "):" + base_text;
}

GroupWord CurveDescriptor::word(int genus) const {
  const GroupWord w = twist_curve_word(genus, base);
  if (conjugator.empty()) return w;
  return FreeAutomorphism::from_factorization(genus, conjugator).apply(w);
}

FreeAutomorphism CurveDescriptor::twist(int genus) const {
  const FreeAutomorphism t = magnus::twist(genus, base);
  if (conjugator.empty()) return t;
  const FreeAutomorphism phi = FreeAutomorphism::from_factorization(genus, conjugator);
  return compose(compose(phi, t), invert(phi));
}

void Certificate::fail(std::string why) {
  if (pass) witness = std::move(why);
  pass = false;
}

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = pass ? "pass" : "fail";
  if (!witness.empty()) j["witness"] = witness;
  return j;
}

Certificate verify_dehn_twist_formula(const Expansion& theta, const CurveDescriptor& curve) {
  Certificate cert{"dehn_twist_formula", expansion_params(theta), true, {}};
  cert.params["curve"] = curve.to_string();
  const int g = theta.genus();
  const FreeAutomorphism t_c = curve.twist(g);
  const Derivation minus_l = -l_invariant(theta, curve.word(g));
  const AlgebraEndomorphism t = total_johnson(theta, t_c);
  for (int i = 0; i < theta.context().rank(); ++i) {
    const Tensor lhs = exp_derivation(minus_l, theta.value(i));
    const Tensor rhs = t.apply(theta.value(i));
    if (const int d = first_difference(lhs, rhs); d >= 0) {
      cert.fail("generator " + generator_name(i) + ": exp(-L) and T differ in degree " + std::to_string(d));
    }
    if (const int d = first_difference(rhs, evaluate(theta, t_c.image(i))); d >= 0) {
      cert.fail("generator " + generator_name(i) + ": T(theta(x)) != theta(t_C(x)) in degree " + std::to_string(d));
    }
  }
  return cert;
}

Certificate verify_closed_surface_formula(const Expansion& theta, const CurveDescriptor& curve) {
  Certificate cert{"closed_surface_formula", expansion_params(theta), true, {}};
  cert.params["curve"] = curve.to_string();
  const AlgebraContext& ctx = theta.context();
  const int g = theta.genus();
  const FreeAutomorphism t_c = curve.twist(g);
  const Derivation minus_l = -l_invariant(theta, curve.word(g));
  if (!apply(minus_l, symplectic_form(ctx)).is_zero()) cert.fail("L(C) does not kill omega");
  const AlgebraEndomorphism t = total_johnson(theta, t_c);
  const OmegaIdealContext ideal(ctx);
  for (int i = 0; i < ctx.rank(); ++i) {
    const Tensor x = Tensor::basis(ctx, i);
    if (!ideal.equal(exp_derivation(minus_l, x), t.apply(x))) {
      cert.fail("basis vector " + basis_name(i) + ": exp(-L) and T differ modulo the omega ideal");
    }
    if (!ideal.equal(exp_derivation(minus_l, theta.value(i)), evaluate(theta, t_c.image(i)))) {
      cert.fail("generator " + generator_name(i) + ": exp(-L) theta(x) and theta(t_C(x)) differ modulo the omega ideal");
    }
  }
  return cert;
}

Certificate verify_nilpotent_dependence(const Expansion& theta, const GroupWord& w1, const GroupWord& w2, int k) {
  Certificate cert{"nilpotent_dependence", expansion_params(theta), true, {}};
  cert.params["w1"] = w1.to_string();
  cert.params["w2"] = w2.to_string();
  cert.params["k"] = k;
  const Tensor l1 = l_invariant_tensor(theta, w1);
  const Tensor l2 = l_invariant_tensor(theta, w2);
  for (int i = 2; i <= std::min(k + 1, l1.truncation()); ++i) {
    if (graded_part(l1, i) != graded_part(l2, i)) cert.fail("L_" + std::to_string(i) + " differs");
  }
  return cert;
}

Certificate verify_operator_identities(const Expansion& theta, const CurveDescriptor& curve) {
  Certificate cert{"operator_identities", expansion_params(theta), true, {}};
  cert.params["curve"] = curve.to_string();
  const AlgebraContext& ctx = theta.context();
  if (ctx.truncation() < 3) throw std::invalid_argument("operator identities need truncation >= 3");
  const int g = theta.genus();
  const Derivation l = l_invariant(theta, curve.word(g));
  const Derivation l2 = l.tensor_degree_part(2), l3 = l.tensor_degree_part(3), l4 = l.tensor_degree_part(4);
  const FreeAutomorphism t_c = curve.twist(g);
  const JohnsonComponent tau1 = johnson_component(theta, t_c, 1);
  const JohnsonComponent tau2 = johnson_component(theta, t_c, 2);
  const Rational half(1, 2);
  for (int x = 0; x < ctx.rank(); ++x) {
    const std::string on = " on " + basis_name(x);
    const Tensor X = Tensor::basis(ctx, x);
    const Tensor l2x = apply(l2, X), l3x = apply(l3, X), l4x = apply(l4, X);
    if (!apply(l2, l2x).is_zero()) cert.fail("L2 L2 != 0" + on);
    if (!apply(l2, l3x).is_zero()) cert.fail("L2 L3 != 0" + on);
    if (!apply(l3, l2x).is_zero()) cert.fail("L3 L2 != 0" + on);
    if (Rational(2) * apply(l2, apply(l4, l2x)) != apply(l2, apply(l2, l4x))) cert.fail("2 L2 L4 L2 != L2 L2 L4" + on);
    if (tau1.values[x] != -l3x) cert.fail("tau_1 != -L3" + on);
    const Tensor formula = -l4x + half * (apply(l2, l4x) - apply(l4, l2x)) + half * apply(l3, l3x);
    if (tau2.values[x] != formula) cert.fail("tau_2 != -L4 + 1/2 [L2,L4] + 1/2 L3^2" + on);
  }
  return cert;
}

}  // namespace magnus
