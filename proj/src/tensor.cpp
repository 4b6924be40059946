#include "magnus/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace magnus {

namespace {

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

// Indices of t's terms ordered by degree, plus prefix counts: the terms of
// degree <= d are order[0 .. upto[d]).
struct DegreeIndex {
  std::vector<std::size_t> order;
  std::vector<std::size_t> upto;

  explicit DegreeIndex(const Tensor& t) : upto(t.truncation() + 2, 0) {
    const auto terms = t.terms();
    for (const auto& term : terms) ++upto[term.mono.degree() + 1];
    std::partial_sum(upto.begin(), upto.end(), upto.begin());
    order.resize(terms.size());
    std::vector<std::size_t> fill(upto.begin(), upto.end() - 1);
    for (std::size_t i = 0; i < terms.size(); ++i) order[fill[terms[i].mono.degree()]++] = i;
    upto.erase(upto.begin());
  }
};

}  // namespace

Tensor Tensor::from_terms(AlgebraContext ctx, std::vector<Term> terms) {
  TermAccumulator acc(ctx, terms.size());
  for (auto& term : terms) acc.add(term.mono, term.coeff);
  return acc.finish();
}

Tensor Tensor::one(AlgebraContext ctx) { return scalar(ctx, 1); }

Tensor Tensor::scalar(AlgebraContext ctx, const Rational& c) {
  if (c == 0) return Tensor(ctx);
  return Tensor(ctx, std::vector<Term>{Term{Monomial{}, c}});
}

Tensor Tensor::basis(AlgebraContext ctx, int index) {
  if (index < 0 || index >= ctx.rank()) throw std::invalid_argument("basis index out of range");
  return monomial(ctx, Monomial::letter(index));
}

Tensor Tensor::monomial(AlgebraContext ctx, Monomial m, const Rational& c) {
  for (int x : m.letters()) {
    if (x >= ctx.rank()) throw std::invalid_argument("monomial letter out of range for genus");
  }
  if (c == 0 || m.degree() > ctx.truncation()) return Tensor(ctx);
  return Tensor(ctx, std::vector<Term>{Term{m, c}});
}

Rational Tensor::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.mono < key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int Tensor::max_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Tensor& Tensor::operator+=(const Tensor& rhs) { return *this = *this + rhs; }
Tensor& Tensor::operator-=(const Tensor& rhs) { return *this = *this - rhs; }

TermAccumulator::TermAccumulator(AlgebraContext ctx, std::size_t reserve) : ctx_(ctx) {
  if (reserve) sums_.reserve(reserve);
}

void TermAccumulator::add(Monomial m, const Rational& c) {
  if (m.degree() > ctx_.truncation() || sgn(c) == 0) return;
  auto [it, inserted] = sums_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add_product(Monomial m, const Rational& a, const Rational& b) {
  if (m.degree() > ctx_.truncation()) return;
  mpq_mul(scratch_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  auto [it, inserted] = sums_.try_emplace(m, scratch_);
  if (!inserted) mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), scratch_.get_mpq_t());
}

void TermAccumulator::add(const Tensor& t, const Rational& scale) {
  require_same_context(ctx_, t.context(), "accumulate");
  if (scale == 0) return;
  for (const auto& term : t.terms()) {
    if (scale == 1) {
      add(term.mono, term.coeff);
    } else {
      add_product(term.mono, term.coeff, scale);
    }
  }
}

Tensor TermAccumulator::finish() {
  std::vector<Term> out;
  out.reserve(sums_.size());
  for (auto& [m, c] : sums_) {
    if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
  }
  sums_.clear();
  std::sort(out.begin(), out.end(), term_less);
  return Tensor(ctx_, std::move(out));
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  require_same_context(a.context(), b.context(), "add");
  // Linear merge of two sorted term lists.
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.terms().begin(), ea = a.terms().end();
  auto ib = b.terms().begin(), eb = b.terms().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->mono < ib->mono)) {
      out.push_back(*ia++);
    } else if (ia == ea || ib->mono < ia->mono) {
      out.push_back(*ib++);
    } else {
      Rational s = ia->coeff + ib->coeff;
      if (sgn(s) != 0) out.push_back(Term{ia->mono, std::move(s)});
      ++ia;
      ++ib;
    }
  }
  return Tensor::from_terms(a.context(), std::move(out));
}

Tensor operator-(const Tensor& a) { return Rational(-1) * a; }

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-b); }

Tensor operator*(const Rational& c, const Tensor& t) {
  TermAccumulator acc(t.context(), t.size());
  acc.add(t, c);
  return acc.finish();
}

Tensor operator*(const Tensor& a, const Tensor& b) {
  require_same_context(a.context(), b.context(), "multiply");
  const int n = a.truncation();
  TermAccumulator acc(a.context(), a.size() + b.size());
  const DegreeIndex bi(b);
  const auto bt = b.terms();
  for (const auto& ta : a.terms()) {
    const int room = n - ta.mono.degree();
    for (std::size_t k = 0; k < bi.upto[room]; ++k) {
      const Term& tb = bt[bi.order[k]];
      acc.add_product(ta.mono.concat(tb.mono), ta.coeff, tb.coeff);
    }
  }
  return acc.finish();
}

Tensor graded_part(const Tensor& t, int m) {
  if (m < 0 || m > t.truncation()) {
    throw std::out_of_range("graded_part: degree " + std::to_string(m) + " outside [0, " +
                            std::to_string(t.truncation()) + "]");
  }
  return degree_range(t, m, m);
}

Tensor degree_range(const Tensor& t, int lo, int hi) {
  std::vector<Term> out;
  for (const auto& term : t.terms()) {
    const int d = term.mono.degree();
    if (d >= lo && d <= hi) out.push_back(term);
  }
  return Tensor::from_terms(t.context(), std::move(out));
}

int filtration_degree(const Tensor& t) {
  int d = t.truncation() + 1;
  for (const auto& term : t.terms()) d = std::min(d, term.mono.degree());
  return d;
}

Tensor with_truncation(const Tensor& t, int truncation) {
  const AlgebraContext ctx = t.context().with_truncation(truncation);
  std::vector<Term> out;
  for (const auto& term : t.terms()) {
    if (term.mono.degree() <= truncation) out.push_back(term);
  }
  return Tensor::from_terms(ctx, std::move(out));
}

std::vector<Tensor> split_first_letter(const Tensor& t) {
  std::vector<TermAccumulator> parts;
  parts.reserve(t.context().rank());
  for (int x = 0; x < t.context().rank(); ++x) parts.emplace_back(t.context());
  for (const auto& term : t.terms()) {
    if (term.mono.degree() == 0) continue;
    parts[term.mono.first()].add(term.mono.drop_first(), term.coeff);
  }
  std::vector<Tensor> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(p.finish());
  return out;
}

Tensor join_first_letter(AlgebraContext ctx, std::span<const Tensor> parts) {
  if (parts.size() != std::size_t(ctx.rank())) throw std::invalid_argument("join_first_letter: wrong part count");
  TermAccumulator acc(ctx);
  for (int x = 0; x < ctx.rank(); ++x) {
    const Monomial head = Monomial::letter(x);
    for (const auto& term : parts[x].terms()) acc.add(head.concat(term.mono), term.coeff);
  }
  return acc.finish();
}

Tensor symplectic_form(AlgebraContext ctx) {
  if (ctx.truncation() < 2) throw std::invalid_argument("symplectic_form needs truncation >= 2");
  std::vector<Term> terms;
  for (int i = 0; i < ctx.genus(); ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    terms.push_back(Term{Monomial::from_letters({a, b}), 1});
    terms.push_back(Term{Monomial::from_letters({b, a}), -1});
  }
  return Tensor::from_terms(ctx, std::move(terms));
}

Tensor wedge_embed(std::span<const Tensor> vectors) {
  if (vectors.empty()) throw std::invalid_argument("wedge_embed needs at least one vector");
  const AlgebraContext ctx = vectors.front().context();
  const int k = int(vectors.size());
  for (const auto& v : vectors) {
    require_same_context(ctx, v.context(), "wedge_embed");
    for (const auto& term : v.terms()) {
      if (term.mono.degree() != 1) throw PreconditionError("wedge_embed: input not homogeneous of degree 1");
    }
  }
  if (k > ctx.truncation()) throw std::invalid_argument("wedge_embed: k exceeds truncation");
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  TermAccumulator acc(ctx);
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
    Tensor prod = Tensor::scalar(ctx, inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < k; ++i) prod = prod * vectors[perm[i]];
    acc.add(prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc.finish();
}

Tensor antisymmetrize(const Tensor& t) {
  TermAccumulator acc(t.context());
  for (const auto& term : t.terms()) {
    const auto letters = term.mono.letters();
    const int k = int(letters.size());
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    const Rational w = term.coeff / factorial(k);
    std::vector<int> permuted(k);
    do {
      int inversions = 0;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
      for (int i = 0; i < k; ++i) permuted[i] = letters[perm[i]];
      acc.add(Monomial::from_letters(permuted), inversions % 2 == 0 ? w : Rational(-w));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return acc.finish();
}

Tensor euler_scale(const Tensor& t) {
  return scale_by_degree(t, [](int n) { return Rational(n); });
}

}  // namespace magnus
