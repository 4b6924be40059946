#ifndef MAGNUS_CONTEXT_HPP
#define MAGNUS_CONTEXT_HPP

#include <stdexcept>
#include <string>

namespace magnus {

// Largest genus and truncation representable by the packed monomial keys.
inline constexpr int kMaxGenus = 7;
inline constexpr int kMaxTruncation = 16;

class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation's precondition on its arguments fails
/// (nonzero constant term where none is allowed, non-Lie input, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Genus and truncation shared by every tensor of one computation.
///
/// H has basis index 2i-2 <-> A_i and 2i-1 <-> B_i (i = 1..g); the
/// intersection form is the standard symplectic one, (A_i . B_i) = 1.
class AlgebraContext {
 public:
  AlgebraContext(int genus, int truncation);

  int genus() const { return genus_; }
  int truncation() const { return truncation_; }
  int rank() const { return 2 * genus_; }

  AlgebraContext with_truncation(int truncation) const { return {genus_, truncation}; }

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;

 private:
  int genus_;
  int truncation_;
};

void require_same_context(const AlgebraContext& a, const AlgebraContext& b, const char* op);

/// Basis vector index in [0, 2g).
class BasisVector {
 public:
  BasisVector(int genus, int index);

  static BasisVector a(int genus, int i) { return {genus, 2 * i - 2}; }
  static BasisVector b(int genus, int i) { return {genus, 2 * i - 1}; }

  int genus() const { return genus_; }
  int index() const { return index_; }
  /// 1-based handle number.
  int handle() const { return index_ / 2 + 1; }
  bool is_a() const { return index_ % 2 == 0; }

  friend bool operator==(const BasisVector&, const BasisVector&) = default;

 private:
  int genus_;
  int index_;
};

/// Intersection pairing of basis vectors by index; antisymmetric, (A_i . B_i) = 1.
constexpr int intersection(int x, int y) {
  if (x / 2 != y / 2) return 0;
  if (x % 2 == 0 && y % 2 == 1) return 1;
  if (x % 2 == 1 && y % 2 == 0) return -1;
  return 0;
}

int intersection(const BasisVector& x, const BasisVector& y);

/// Symplectic partner: the unique basis index pairing nontrivially with x.
constexpr int dual_index(int x) { return x ^ 1; }

/// "A1", "B2", ...
std::string basis_name(int index);

}  // namespace magnus

#endif  // MAGNUS_CONTEXT_HPP
