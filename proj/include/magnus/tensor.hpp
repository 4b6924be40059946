#ifndef MAGNUS_TENSOR_HPP
#define MAGNUS_TENSOR_HPP

#include <span>
#include <unordered_map>
#include <vector>

#include "magnus/context.hpp"
#include "magnus/monomial.hpp"
#include "magnus/rational.hpp"

namespace magnus {

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Truncated element of the completed tensor algebra over H.
///
/// Terms are kept sorted by monomial with no zero coefficient and no
/// monomial of degree above the truncation. Immutable once built.
class Tensor {
 public:
  explicit Tensor(AlgebraContext ctx) : ctx_(ctx) {}
  Tensor(int genus, int truncation) : ctx_(genus, truncation) {}

  /// Builds from arbitrary terms: sums duplicates, drops zeros and
  /// monomials above the truncation.
  static Tensor from_terms(AlgebraContext ctx, std::vector<Term> terms);

  static Tensor one(AlgebraContext ctx);
  static Tensor scalar(AlgebraContext ctx, const Rational& c);
  static Tensor basis(AlgebraContext ctx, int index);
  static Tensor monomial(AlgebraContext ctx, Monomial m, const Rational& c = 1);

  const AlgebraContext& context() const { return ctx_; }
  int genus() const { return ctx_.genus(); }
  int truncation() const { return ctx_.truncation(); }

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Monomial m) const;
  Rational constant_term() const { return coefficient(Monomial{}); }
  int max_degree() const;

  Tensor& operator+=(const Tensor& rhs);
  Tensor& operator-=(const Tensor& rhs);

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  friend class TermAccumulator;
  Tensor(AlgebraContext ctx, std::vector<Term> sorted_terms)
      : ctx_(ctx), terms_(std::move(sorted_terms)) {}

  AlgebraContext ctx_;
  std::vector<Term> terms_;
};

/// Hash-keyed sum of terms; finish() yields the canonical Tensor.
/// Monomials above the truncation are silently dropped.
class TermAccumulator {
 public:
  explicit TermAccumulator(AlgebraContext ctx, std::size_t reserve = 0);

  const AlgebraContext& context() const { return ctx_; }

  void add(Monomial m, const Rational& c);
  /// Adds a * b at m.
  void add_product(Monomial m, const Rational& a, const Rational& b);
  void add(const Tensor& t, const Rational& scale = 1);

  Tensor finish();

 private:
  AlgebraContext ctx_;
  std::unordered_map<Monomial, Rational> sums_;
  Rational scratch_;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a);
Tensor operator*(const Rational& c, const Tensor& t);
/// Concatenation product; degrees above the truncation are discarded.
Tensor operator*(const Tensor& a, const Tensor& b);

inline Tensor add(const Tensor& a, const Tensor& b) { return a + b; }
inline Tensor multiply(const Tensor& a, const Tensor& b) { return a * b; }

Tensor graded_part(const Tensor& t, int m);
/// Sum of the graded parts in [lo, hi].
Tensor degree_range(const Tensor& t, int lo, int hi);
/// Least degree with a nonzero term; truncation + 1 for zero.
int filtration_degree(const Tensor& t);
/// Same terms in another truncation (terms above the new bound are dropped).
Tensor with_truncation(const Tensor& t, int truncation);

/// Left-letter decomposition: part[x] is the tensor r with t = c + sum_x X_x r_x.
std::vector<Tensor> split_first_letter(const Tensor& t);
/// Inverse of split_first_letter for the positive-degree part.
Tensor join_first_letter(AlgebraContext ctx, std::span<const Tensor> parts);

/// omega = sum_i A_i B_i - B_i A_i.
Tensor symplectic_form(AlgebraContext ctx);

/// X_1 ^ ... ^ X_k embedded as the full signed sum over permutations.
/// Each input must be homogeneous of degree 1.
Tensor wedge_embed(std::span<const Tensor> vectors);

/// Total antisymmetrization (1/k!) sum_s sign(s) s.t of a degree-k tensor;
/// fixed exactly on the image of wedge_embed.
Tensor antisymmetrize(const Tensor& t);

/// Multiplies each degree-n part by n.
Tensor euler_scale(const Tensor& t);

/// Multiplies degree-n part by f(n).
template <class F>
Tensor scale_by_degree(const Tensor& t, F&& f) {
  TermAccumulator acc(t.context(), t.size());
  for (const auto& term : t.terms()) acc.add(term.mono, term.coeff * f(term.mono.degree()));
  return acc.finish();
}

}  // namespace magnus

#endif  // MAGNUS_TENSOR_HPP
