#ifndef MAGNUS_CYCLIC_HPP
#define MAGNUS_CYCLIC_HPP

#include "magnus/tensor.hpp"

namespace magnus {

/// Cyclic rotation X_1 X_2 ... X_p -> X_2 ... X_p X_1.
Tensor nu(const Tensor& t);

/// Sum of the p rotations on degree p; kills the constant term.
Tensor cyclic_n(const Tensor& t);

/// (1/p) cyclic_n on degree p; kills the constant term.
Tensor cyclic_n_hat(const Tensor& t);

bool is_nu_invariant(const Tensor& t);

/// Bracket of cyclic tensors:
///   [N(X_1..X_n), N(Y_1..Y_m)] = -sum_{i,j} (X_i . Y_j) N(X_{i+1}..X_{i-1} Y_{j+1}..Y_{j-1}),
/// extended bilinearly. Inputs must be nu-invariant with zero constant term
/// (throws PreconditionError otherwise). Degrees above the truncation are dropped.
Tensor necklace_bracket(const Tensor& u, const Tensor& v);

}  // namespace magnus

#endif  // MAGNUS_CYCLIC_HPP
