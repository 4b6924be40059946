#include "magnus/monomial.hpp"

#include <stdexcept>

namespace magnus {

Monomial Monomial::from_letters(std::span<const int> letters) {
  if (letters.size() > std::size_t(kMaxDegree)) throw std::invalid_argument("monomial longer than 16 letters");
  std::uint64_t code = 0;
  int shift = 60;
  for (int x : letters) {
    if (x < 0 || x >= 2 * kMaxGenus) throw std::invalid_argument("letter index out of range");
    code |= std::uint64_t(x + 1) << shift;
    shift -= 4;
  }
  return Monomial(code);
}

std::vector<int> Monomial::letters() const {
  std::vector<int> out;
  const int d = degree();
  out.reserve(d);
  for (int p = 0; p < d; ++p) out.push_back(at(p));
  return out;
}

}  // namespace magnus
