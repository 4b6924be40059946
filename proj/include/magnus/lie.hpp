#ifndef MAGNUS_LIE_HPP
#define MAGNUS_LIE_HPP

#include "magnus/tensor.hpp"

namespace magnus {

/// uv - vu.
Tensor bracket(const Tensor& u, const Tensor& v);

/// Left-normed bracketing X_1...X_n -> [X_1, [..., [X_{n-1}, X_n]...]],
/// extended linearly. Throws PreconditionError on a nonzero constant term.
Tensor phi(const Tensor& t);

/// Dynkin-Specht-Wever test: zero constant term and phi(u_n) = n u_n in
/// every degree.
bool is_lie(const Tensor& t);

/// Power series, exact modulo the truncation.
/// exp requires a zero constant term, log a constant term of 1.
Tensor exp(const Tensor& t);
Tensor log(const Tensor& t);
/// Multiplicative inverse of an element with constant term 1.
Tensor inverse_unit(const Tensor& t);

/// A tensor certified Lie on construction.
class LieElement {
 public:
  explicit LieElement(AlgebraContext ctx) : t_(ctx) {}
  /// Throws PreconditionError when t fails is_lie.
  explicit LieElement(Tensor t);

  const Tensor& tensor() const { return t_; }
  const AlgebraContext& context() const { return t_.context(); }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  Tensor t_;
};

/// log(exp(u) exp(v)); the result is re-certified.
LieElement bch(const LieElement& u, const LieElement& v);
/// Same, for raw tensors; throws PreconditionError unless both are Lie.
Tensor bch(const Tensor& u, const Tensor& v);

}  // namespace magnus

#endif  // MAGNUS_LIE_HPP
