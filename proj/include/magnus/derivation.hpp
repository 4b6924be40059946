#ifndef MAGNUS_DERIVATION_HPP
#define MAGNUS_DERIVATION_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "magnus/tensor.hpp"

namespace magnus {

class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Derivation of T/T_{N+1}, stored by its values D(X) on the basis of H.
///
/// Under Poincare duality X (x) u corresponds to Y -> (Y . X) u. The tensor
/// view sum_i B_i D(A_i) - A_i D(B_i) is one degree longer than the values,
/// so a derivation at truncation N has its tensor view at truncation N + 1.
class Derivation {
 public:
  /// The zero derivation.
  explicit Derivation(const AlgebraContext& ctx);
  /// values[x] = D(X_x); all in one context.
  explicit Derivation(std::vector<Tensor> values);

  /// t must have zero constant term; the result acts at truncation t.N - 1.
  static Derivation from_tensor(const Tensor& t);
  Tensor to_tensor() const;

  const AlgebraContext& context() const { return ctx_; }
  const std::vector<Tensor>& values() const { return values_; }
  const Tensor& value(int basis_index) const { return values_.at(basis_index); }
  bool is_zero() const;

  /// Derivation whose tensor view is the degree-m part of this one's.
  Derivation tensor_degree_part(int m) const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  AlgebraContext ctx_;
  std::vector<Tensor> values_;
};

Derivation operator+(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& a, const Derivation& b);
Derivation operator-(const Derivation& d);
Derivation operator*(const Rational& c, const Derivation& d);

/// Leibniz extension of d to t; degrees above the truncation are dropped.
Tensor apply(const Derivation& d, const Tensor& t);

/// d1 o d2 - d2 o d1.
Derivation commutator(const Derivation& d1, const Derivation& d2);

/// Kills omega modulo T_{N+1}.
bool is_symplectic_derivation(const Derivation& d);

/// Default max_terms for exp_derivation: (N+1)(N+2).
int default_exp_terms(const AlgebraContext& ctx);

/// sum_k d^k(t)/k!, stopping at the first exactly-zero term. Throws
/// NonTermination if term number max_terms (counting t as term 0) is
/// still nonzero.
Tensor exp_derivation(const Derivation& d, const Tensor& t, int max_terms = 0);

/// Row-reduced basis of the two-sided ideal generated by omega, degree by
/// degree up to the truncation.
class OmegaIdealContext {
 public:
  explicit OmegaIdealContext(const AlgebraContext& ctx);

  const AlgebraContext& context() const { return ctx_; }
  /// Dimension of the ideal in degree n.
  int dimension(int n) const;

  /// Canonical representative modulo the ideal.
  Tensor reduce(const Tensor& t) const;
  bool equal(const Tensor& a, const Tensor& b) const { return reduce(a - b).is_zero(); }

 private:
  // Fully reduced rows keyed by pivot monomial (the least monomial of the row).
  AlgebraContext ctx_;
  std::vector<std::map<Monomial, Tensor>> rows_;
};

inline Tensor omega_ideal_reduce(const Tensor& t, const OmegaIdealContext& ctx) { return ctx.reduce(t); }
inline bool omega_ideal_equal(const Tensor& a, const Tensor& b, const OmegaIdealContext& ctx) {
  return ctx.equal(a, b);
}

}  // namespace magnus

#endif  // MAGNUS_DERIVATION_HPP
