#ifndef MAGNUS_FREE_GROUP_HPP
#define MAGNUS_FREE_GROUP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/context.hpp"
#include "magnus/matrix.hpp"

namespace magnus {

/// Generator 2i-2 is alpha_i, 2i-1 is beta_i; same indices as the homology basis.
struct Letter {
  int generator;
  bool inverse;

  Letter inverted() const { return {generator, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// "a1", "b2", ... for generator indices 0, 3, ...
std::string generator_name(int index);
/// Inverse of generator_name; throws std::invalid_argument.
int parse_generator_name(std::string_view name, int genus);

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Freely reduced word in the free group on alpha_1, beta_1, ..., alpha_g, beta_g.
class GroupWord {
 public:
  explicit GroupWord(int genus);
  /// Reduces the given letters.
  GroupWord(int genus, std::vector<Letter> letters);

  static GroupWord generator(int genus, int index, bool inverse = false);
  static GroupWord alpha(int genus, int i) { return generator(genus, 2 * i - 2); }
  static GroupWord beta(int genus, int i) { return generator(genus, 2 * i - 1); }

  /// Whitespace-separated tokens a1..ag, b1..bg; uppercase A1..Bg are the
  /// inverses. "1" or an empty string is the identity.
  static GroupWord parse(int genus, std::string_view text);

  int genus() const { return genus_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string to_string() const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  int genus_;
  std::vector<Letter> letters_;
};

GroupWord operator*(const GroupWord& x, const GroupWord& y);
GroupWord inverse(const GroupWord& w);
GroupWord power(const GroupWord& w, int n);
/// y x y^-1.
GroupWord conjugate(const GroupWord& x, const GroupWord& y);
/// x y x^-1 y^-1.
GroupWord commutator(const GroupWord& x, const GroupWord& y);
/// zeta = [alpha_1, beta_1] ... [alpha_g, beta_g].
GroupWord boundary_word(int genus);
/// gamma_h = [alpha_1, beta_1] ... [alpha_h, beta_h].
GroupWord separating_word(int genus, int h);

/// One Dehn twist about an adapted curve, raised to a power.
///   alpha i: beta_i -> beta_i alpha_i             (twist along alpha_i)
///   beta i:  alpha_i -> alpha_i beta_i^-1         (twist along beta_i)
///   sep h:   x -> gamma_h^-1 x gamma_h for the generators of handles 1..h
struct TwistAtom {
  enum class Kind { alpha, beta, sep };
  Kind kind;
  int index;
  int power = 1;

  /// "alpha1", "beta2^-1", "sep1".
  static TwistAtom parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const TwistAtom&, const TwistAtom&) = default;
};

/// The curve a twist atom is taken along, as a word.
GroupWord twist_curve_word(int genus, const TwistAtom& atom);

/// Endomorphism of the free group given by generator images.
class FreeAutomorphism {
 public:
  /// Throws std::invalid_argument unless the induced map on H is invertible.
  FreeAutomorphism(int genus, std::vector<GroupWord> images,
                   std::optional<std::vector<TwistAtom>> factorization = std::nullopt);

  static FreeAutomorphism identity(int genus);
  static FreeAutomorphism from_factorization(int genus, const std::vector<TwistAtom>& atoms);

  int genus() const { return genus_; }
  const std::vector<GroupWord>& images() const { return images_; }
  const GroupWord& image(int generator) const { return images_.at(generator); }
  const std::optional<std::vector<TwistAtom>>& factorization() const { return factorization_; }
  /// Whether the boundary word is fixed as a reduced word.
  bool preserves_boundary() const { return preserves_boundary_; }

  GroupWord apply(const GroupWord& w) const;

 private:
  int genus_;
  std::vector<GroupWord> images_;
  std::optional<std::vector<TwistAtom>> factorization_;
  bool preserves_boundary_;
};

inline GroupWord apply_automorphism(const FreeAutomorphism& phi, const GroupWord& w) { return phi.apply(w); }

FreeAutomorphism twist(int genus, const TwistAtom& atom);
/// Twist along alpha_1.
FreeAutomorphism twist_nonseparating(int genus);
/// Twist along gamma_h; 1 <= h <= g (h = g is the boundary-parallel curve).
FreeAutomorphism twist_separating(int genus, int h);

/// (phi1 o phi2)(x) = phi1(phi2(x)). Factorizations concatenate when both exist.
FreeAutomorphism compose(const FreeAutomorphism& phi1, const FreeAutomorphism& phi2);
/// Inverse from the twist factorization; throws std::invalid_argument without one.
FreeAutomorphism invert(const FreeAutomorphism& phi);

/// Abelianization: column x holds the homology class of phi(x_x).
RationalMatrix homology_action(const FreeAutomorphism& phi);

}  // namespace magnus

#endif  // MAGNUS_FREE_GROUP_HPP
