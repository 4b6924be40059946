#ifndef MAGNUS_NOTATION_HPP
#define MAGNUS_NOTATION_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "magnus/tensor.hpp"

namespace magnus {

class NotationError : public std::invalid_argument {
 public:
  NotationError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses tensor expressions such as
///   "A1 + 1/2 [A1,B1] - 1/12 [B1,[B1,A1]] + 3 A1 B2 A1 - (A2 + 1)(B2 - 1)"
/// Letters are A1..Ag, B1..Bg (bare A and B mean handle 1); juxtaposition
/// multiplies, [x,y] is the commutator, numbers are rationals p or p/q.
Tensor parse_tensor(const AlgebraContext& ctx, std::string_view text);

/// Raw monomial form, sorted: "1 + A1 - 1/2 A1 B1". Zero prints as "0".
std::string format_tensor(const Tensor& t);

/// Lie elements in the Lyndon basis with standard bracketing,
/// e.g. "A1 + 1/2 [A1,B1] + 1/12 [[A1,B1],B1]". Falls back to the raw
/// form when t is not Lie.
std::string format_lie(const Tensor& t);

/// Standard bracketing of a Lyndon word as a tensor and as text.
/// Throws std::invalid_argument if the word is not Lyndon.
Tensor lyndon_bracket(const AlgebraContext& ctx, Monomial word);
std::string lyndon_bracket_text(Monomial word);
bool is_lyndon(Monomial word);

}  // namespace magnus

#endif  // MAGNUS_NOTATION_HPP
