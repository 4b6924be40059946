#include "magnus/lie.hpp"

namespace magnus {

namespace {

void require_no_constant(const Tensor& t, const char* op) {
  if (t.constant_term() != 0) throw PreconditionError(std::string(op) + ": nonzero constant term");
}

// phi on the positive-degree part of t.
Tensor phi_positive(const Tensor& t) {
  const AlgebraContext& ctx = t.context();
  const auto parts = split_first_letter(t);
  TermAccumulator acc(ctx);
  for (int x = 0; x < ctx.rank(); ++x) {
    const Tensor& r = parts[x];
    if (r.is_zero()) continue;
    const Tensor X = Tensor::basis(ctx, x);
    const Rational c = r.constant_term();
    if (c != 0) acc.add(Monomial::letter(x), c);
    const Tensor rest = degree_range(r, 1, ctx.truncation());
    if (!rest.is_zero()) acc.add(bracket(X, phi_positive(rest)));
  }
  return acc.finish();
}

}  // namespace

Tensor bracket(const Tensor& u, const Tensor& v) { return u * v - v * u; }

Tensor phi(const Tensor& t) {
  require_no_constant(t, "phi");
  return phi_positive(t);
}

bool is_lie(const Tensor& t) {
  if (t.constant_term() != 0) return false;
  return phi_positive(t) == euler_scale(t);
}

Tensor exp(const Tensor& t) {
  require_no_constant(t, "exp");
  const AlgebraContext& ctx = t.context();
  Tensor sum = Tensor::one(ctx);
  Tensor power = Tensor::one(ctx);
  for (int k = 1; k <= ctx.truncation(); ++k) {
    power = Rational(1, k) * (power * t);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

Tensor log(const Tensor& t) {
  if (t.constant_term() != 1) throw PreconditionError("log: constant term must be 1");
  const AlgebraContext& ctx = t.context();
  const Tensor u = t - Tensor::one(ctx);
  Tensor sum(ctx);
  Tensor power = Tensor::one(ctx);
  for (int k = 1; k <= ctx.truncation(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum += Rational(k % 2 == 1 ? 1 : -1, k) * power;
  }
  return sum;
}

Tensor inverse_unit(const Tensor& t) {
  if (t.constant_term() != 1) throw PreconditionError("inverse_unit: constant term must be 1");
  const AlgebraContext& ctx = t.context();
  const Tensor minus_u = Tensor::one(ctx) - t;
  Tensor sum = Tensor::one(ctx);
  Tensor power = Tensor::one(ctx);
  for (int k = 1; k <= ctx.truncation(); ++k) {
    power = power * minus_u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum;
}

LieElement::LieElement(Tensor t) : t_(std::move(t)) {
  if (!is_lie(t_)) throw PreconditionError("tensor is not a Lie element");
}

LieElement bch(const LieElement& u, const LieElement& v) { return LieElement(bch(u.tensor(), v.tensor())); }

Tensor bch(const Tensor& u, const Tensor& v) {
  if (!is_lie(u) || !is_lie(v)) throw PreconditionError("bch: inputs must be Lie elements");
  Tensor out = log(exp(u) * exp(v));
  if (!is_lie(out)) throw std::logic_error("bch: result failed the Lie test");
  return out;
}

}  // namespace magnus
