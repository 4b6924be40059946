#ifndef MAGNUS_ALGEBRA_MAP_HPP
#define MAGNUS_ALGEBRA_MAP_HPP

#include <vector>

#include "magnus/tensor.hpp"

namespace magnus {

/// Filtered algebra endomorphism of T/T_{N+1}, determined by its values on
/// the basis of H. Every value must have zero constant term.
class AlgebraEndomorphism {
 public:
  explicit AlgebraEndomorphism(std::vector<Tensor> values);
  static AlgebraEndomorphism identity(const AlgebraContext& ctx);

  /// The unique U with U(sources[i]) = targets[i], where
  /// sources[i] = 1 + X_i mod T_2 and targets[i] has constant term 1.
  /// Solved degree by degree.
  static AlgebraEndomorphism solve(const std::vector<Tensor>& sources, const std::vector<Tensor>& targets);

  const AlgebraContext& context() const { return values_.front().context(); }
  const std::vector<Tensor>& values() const { return values_; }
  const Tensor& value(int basis_index) const { return values_.at(basis_index); }

  Tensor apply(const Tensor& t) const;

  friend bool operator==(const AlgebraEndomorphism&, const AlgebraEndomorphism&) = default;

 private:
  std::vector<Tensor> values_;
};

/// (u o v)(t) = u(v(t)).
AlgebraEndomorphism compose(const AlgebraEndomorphism& u, const AlgebraEndomorphism& v);

/// Values on H of log U = sum (-1)^{k-1}/k (U - 1)^k, for U acting as the
/// identity on H modulo T_2. These are the values of a derivation.
std::vector<Tensor> log_on_h(const AlgebraEndomorphism& u);

}  // namespace magnus

#endif  // MAGNUS_ALGEBRA_MAP_HPP
