#ifndef MAGNUS_MONOMIAL_HPP
#define MAGNUS_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "magnus/context.hpp"

namespace magnus {

/// A word in the basis letters of H, packed into one 64-bit key.
///
/// Letters are stored left-aligned, one nibble each, as (index + 1); an unused
/// nibble is zero. Unsigned comparison of the packed key is then exactly
/// lexicographic order with a proper prefix sorting first, which is the
/// canonical order of tensor terms.
class Monomial {
 public:
  static constexpr int kMaxDegree = 16;

  constexpr Monomial() = default;

  static Monomial from_letters(std::span<const int> letters);
  static Monomial from_letters(std::initializer_list<int> letters) {
    return from_letters(std::span<const int>(letters.begin(), letters.size()));
  }
  static constexpr Monomial letter(int index) { return Monomial(std::uint64_t(index + 1) << 60); }
  static constexpr Monomial from_code(std::uint64_t code) { return Monomial(code); }

  constexpr std::uint64_t code() const { return code_; }

  constexpr int degree() const {
    return code_ == 0 ? 0 : 16 - std::countr_zero(code_) / 4;
  }

  /// Letter index at position p (0-based).
  constexpr int at(int p) const { return int((code_ >> (60 - 4 * p)) & 0xF) - 1; }
  constexpr int first() const { return at(0); }

  /// Concatenation; caller guarantees degree() + rhs.degree() <= kMaxDegree.
  constexpr Monomial concat(Monomial rhs) const {
    const int d = degree();
    return d == 0 ? rhs : Monomial(code_ | (d == 16 ? 0 : rhs.code_ >> (4 * d)));
  }

  /// Letters [from, from + count).
  constexpr Monomial slice(int from, int count) const {
    if (count == 0) return {};
    const std::uint64_t shifted = code_ << (4 * from);
    const std::uint64_t mask = count == 16 ? ~std::uint64_t{0} : ~(~std::uint64_t{0} >> (4 * count));
    return Monomial(shifted & mask);
  }

  constexpr Monomial drop_first() const { return Monomial(code_ << 4); }

  /// X_1 X_2 ... X_p -> X_2 ... X_p X_1.
  constexpr Monomial rotate() const {
    const int d = degree();
    if (d <= 1) return *this;
    const std::uint64_t head = code_ >> 60;
    return Monomial((code_ << 4) | (head << (64 - 4 * d)));
  }

  std::vector<int> letters() const;

  constexpr auto operator<=>(const Monomial&) const = default;

 private:
  constexpr explicit Monomial(std::uint64_t code) : code_(code) {}
  std::uint64_t code_ = 0;
};

}  // namespace magnus

template <>
struct std::hash<magnus::Monomial> {
  std::size_t operator()(magnus::Monomial m) const noexcept {
    std::uint64_t x = m.code();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return std::size_t(x);
  }
};

#endif  // MAGNUS_MONOMIAL_HPP
