#include "magnus/algebra_map.hpp"

#include <stdexcept>

namespace magnus {

namespace {

Tensor apply_values(const std::vector<Tensor>& values, const Tensor& t) {
  const AlgebraContext& ctx = t.context();
  // t = c + sum_x X_x r_x, so U(t) = c + sum_x U(X_x) U(r_x).
  Tensor out = Tensor::scalar(ctx, t.constant_term());
  if (t.max_degree() <= 0) return out;
  const auto parts = split_first_letter(t);
  TermAccumulator acc(ctx);
  acc.add(out);
  for (int x = 0; x < ctx.rank(); ++x) {
    if (parts[x].is_zero() || values[x].is_zero()) continue;
    acc.add(values[x] * apply_values(values, parts[x]));
  }
  return acc.finish();
}

}  // namespace

AlgebraEndomorphism::AlgebraEndomorphism(std::vector<Tensor> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("endomorphism needs values");
  const AlgebraContext ctx = values_.front().context();
  if (values_.size() != std::size_t(ctx.rank())) throw std::invalid_argument("endomorphism needs 2g values");
  for (const auto& v : values_) {
    require_same_context(ctx, v.context(), "endomorphism");
    if (v.constant_term() != 0) throw PreconditionError("endomorphism value with nonzero constant term");
  }
}

AlgebraEndomorphism AlgebraEndomorphism::identity(const AlgebraContext& ctx) {
  std::vector<Tensor> values;
  for (int x = 0; x < ctx.rank(); ++x) values.push_back(Tensor::basis(ctx, x));
  return AlgebraEndomorphism(std::move(values));
}

AlgebraEndomorphism AlgebraEndomorphism::solve(const std::vector<Tensor>& sources, const std::vector<Tensor>& targets) {
  if (sources.empty() || sources.size() != targets.size()) throw std::invalid_argument("solve: size mismatch");
  const AlgebraContext ctx = sources.front().context();
  const int rank = ctx.rank();
  if (sources.size() != std::size_t(rank)) throw std::invalid_argument("solve: need 2g sources");
  std::vector<Tensor> higher;  // sources[i] - 1 - X_i, in T_2
  for (int i = 0; i < rank; ++i) {
    require_same_context(ctx, sources[i].context(), "solve");
    require_same_context(ctx, targets[i].context(), "solve");
    if (targets[i].constant_term() != 1) throw PreconditionError("solve: target constant term must be 1");
    const Tensor h = sources[i] - Tensor::one(ctx) - Tensor::basis(ctx, i);
    if (filtration_degree(h) < 2) throw PreconditionError("solve: source is not 1 + X_i mod T_2");
    higher.push_back(h);
  }
  std::vector<Tensor> values(rank, Tensor(ctx));
  for (int d = 1; d <= ctx.truncation(); ++d) {
    // Degree d of U(h_i) only involves the parts of U(X_j) below degree d.
    std::vector<Tensor> current;
    for (const auto& v : values) current.push_back(with_truncation(v, d));
    for (int i = 0; i < rank; ++i) {
      const Tensor known = graded_part(apply_values(current, with_truncation(higher[i], d)), d);
      values[i] += with_truncation(graded_part(with_truncation(targets[i], d), d) - known, ctx.truncation());
    }
  }
  return AlgebraEndomorphism(std::move(values));
}

Tensor AlgebraEndomorphism::apply(const Tensor& t) const {
  require_same_context(context(), t.context(), "apply endomorphism");
  return apply_values(values_, t);
}

AlgebraEndomorphism compose(const AlgebraEndomorphism& u, const AlgebraEndomorphism& v) {
  std::vector<Tensor> values;
  for (const auto& x : v.values()) values.push_back(u.apply(x));
  return AlgebraEndomorphism(std::move(values));
}

std::vector<Tensor> log_on_h(const AlgebraEndomorphism& u) {
  const AlgebraContext& ctx = u.context();
  std::vector<Tensor> out;
  for (int x = 0; x < ctx.rank(); ++x) {
    Tensor v = Tensor::basis(ctx, x);
    Tensor sum(ctx);
    for (int k = 1; k <= ctx.truncation(); ++k) {
      v = u.apply(v) - v;
      if (v.is_zero()) break;
      sum += Rational(k % 2 == 1 ? 1 : -1, k) * v;
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace magnus
