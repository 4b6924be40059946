#include "magnus/context.hpp"

#include <string>

namespace magnus {

AlgebraContext::AlgebraContext(int genus, int truncation) : genus_(genus), truncation_(truncation) {
  if (genus < 1 || genus > kMaxGenus) {
    throw std::invalid_argument("genus must lie in [1, " + std::to_string(kMaxGenus) + "], got " +
                                std::to_string(genus));
  }
  if (truncation < 1 || truncation > kMaxTruncation) {
    throw std::invalid_argument("truncation must lie in [1, " + std::to_string(kMaxTruncation) +
                                "], got " + std::to_string(truncation));
  }
}

void require_same_context(const AlgebraContext& a, const AlgebraContext& b, const char* op) {
  if (a != b) {
    throw ContextMismatch(std::string(op) + ": context mismatch (genus " + std::to_string(a.genus()) +
                          ", truncation " + std::to_string(a.truncation()) + " vs genus " +
                          std::to_string(b.genus()) + ", truncation " + std::to_string(b.truncation()) + ")");
  }
}

BasisVector::BasisVector(int genus, int index) : genus_(genus), index_(index) {
  if (index < 0 || index >= 2 * genus) {
    throw std::invalid_argument("basis index " + std::to_string(index) + " out of range for genus " +
                                std::to_string(genus));
  }
}

int intersection(const BasisVector& x, const BasisVector& y) {
  if (x.genus() != y.genus()) throw ContextMismatch("intersection: genus mismatch");
  return intersection(x.index(), y.index());
}

std::string basis_name(int index) {
  return std::string(index % 2 == 0 ? "A" : "B") + std::to_string(index / 2 + 1);
}

}  // namespace magnus
