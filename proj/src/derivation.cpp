#include "magnus/derivation.hpp"

namespace magnus {

Derivation::Derivation(const AlgebraContext& ctx) : ctx_(ctx), values_(ctx.rank(), Tensor(ctx)) {}

Derivation::Derivation(std::vector<Tensor> values) : ctx_(values.at(0).context()), values_(std::move(values)) {
  if (values_.size() != std::size_t(ctx_.rank())) throw std::invalid_argument("derivation needs 2g values");
  for (const auto& v : values_) require_same_context(ctx_, v.context(), "derivation");
}

Derivation Derivation::from_tensor(const Tensor& t) {
  if (t.constant_term() != 0) throw PreconditionError("from_tensor: nonzero constant term");
  if (t.truncation() < 2) throw std::invalid_argument("from_tensor needs truncation >= 2");
  const AlgebraContext ctx = t.context().with_truncation(t.truncation() - 1);
  const auto parts = split_first_letter(t);
  std::vector<Tensor> values;
  for (int i = 0; i < ctx.genus(); ++i) {
    // B_i (x) u contributes (A_i . B_i) u = u to D(A_i);
    // A_i (x) u contributes (B_i . A_i) u = -u to D(B_i).
    values.push_back(with_truncation(parts[2 * i + 1], ctx.truncation()));
    values.push_back(-with_truncation(parts[2 * i], ctx.truncation()));
  }
  return Derivation(std::move(values));
}

Tensor Derivation::to_tensor() const {
  const AlgebraContext wide = ctx_.with_truncation(ctx_.truncation() + 1);
  std::vector<Tensor> parts;
  for (int i = 0; i < ctx_.genus(); ++i) {
    parts.push_back(-with_truncation(values_[2 * i + 1], wide.truncation()));
    parts.push_back(with_truncation(values_[2 * i], wide.truncation()));
  }
  return join_first_letter(wide, parts);
}

bool Derivation::is_zero() const {
  for (const auto& v : values_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Derivation Derivation::tensor_degree_part(int m) const {
  std::vector<Tensor> values;
  for (const auto& v : values_) values.push_back(degree_range(v, m - 1, m - 1));
  return Derivation(std::move(values));
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  require_same_context(a.context(), b.context(), "derivation add");
  std::vector<Tensor> values;
  for (int x = 0; x < a.context().rank(); ++x) values.push_back(a.value(x) + b.value(x));
  return Derivation(std::move(values));
}

Derivation operator-(const Derivation& d) { return Rational(-1) * d; }

Derivation operator-(const Derivation& a, const Derivation& b) { return a + (-b); }

Derivation operator*(const Rational& c, const Derivation& d) {
  std::vector<Tensor> values;
  for (const auto& v : d.values()) values.push_back(c * v);
  return Derivation(std::move(values));
}

Tensor apply(const Derivation& d, const Tensor& t) {
  require_same_context(d.context(), t.context(), "apply derivation");
  const int n_max = t.truncation();
  TermAccumulator acc(t.context());
  for (const auto& term : t.terms()) {
    const int n = term.mono.degree();
    for (int k = 0; k < n; ++k) {
      const Tensor& image = d.value(term.mono.at(k));
      if (image.is_zero()) continue;
      const Monomial prefix = term.mono.slice(0, k);
      const Monomial suffix = term.mono.slice(k + 1, n - k - 1);
      for (const auto& it : image.terms()) {
        if (n - 1 + it.mono.degree() > n_max) continue;
        acc.add_product(prefix.concat(it.mono).concat(suffix), term.coeff, it.coeff);
      }
    }
  }
  return acc.finish();
}

Derivation commutator(const Derivation& d1, const Derivation& d2) {
  require_same_context(d1.context(), d2.context(), "derivation commutator");
  std::vector<Tensor> values;
  for (int x = 0; x < d1.context().rank(); ++x) {
    values.push_back(apply(d1, d2.value(x)) - apply(d2, d1.value(x)));
  }
  return Derivation(std::move(values));
}

bool is_symplectic_derivation(const Derivation& d) {
  return apply(d, symplectic_form(d.context())).is_zero();
}

int default_exp_terms(const AlgebraContext& ctx) { return (ctx.truncation() + 1) * (ctx.truncation() + 2); }

Tensor exp_derivation(const Derivation& d, const Tensor& t, int max_terms) {
  if (max_terms <= 0) max_terms = default_exp_terms(d.context());
  Tensor sum = t;
  Tensor term = t;
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > max_terms) {
      throw NonTermination("exp_derivation: term " + std::to_string(max_terms) + " is nonzero");
    }
    term = Rational(1, k) * apply(d, term);
    sum += term;
  }
  return sum;
}

OmegaIdealContext::OmegaIdealContext(const AlgebraContext& ctx) : ctx_(ctx), rows_(ctx.truncation() + 1) {
  if (ctx.truncation() < 2) return;
  const Tensor omega = symplectic_form(ctx);
  const int rank = ctx.rank();
  for (int n = 2; n <= ctx.truncation(); ++n) {
    auto& rows = rows_[n];
    // Enumerate m1 omega m2 with deg m1 + deg m2 = n - 2.
    for (int p = 0; p <= n - 2; ++p) {
      const int q = n - 2 - p;
      std::vector<int> digits(p + q, 0);
      while (true) {
        const Monomial m1 = Monomial::from_letters(std::span<const int>(digits.data(), p));
        const Monomial m2 = Monomial::from_letters(std::span<const int>(digits.data() + p, q));
        Tensor v = Tensor::monomial(ctx, m1) * omega * Tensor::monomial(ctx, m2);
        for (const auto& [pivot, row] : rows) {
          const Rational c = v.coefficient(pivot);
          if (c != 0) v -= c * row;
        }
        if (!v.is_zero()) {
          const Monomial pivot = v.terms().front().mono;
          v = (1 / v.terms().front().coeff) * v;
          for (auto& [other, row] : rows) {
            const Rational c = row.coefficient(pivot);
            if (c != 0) row -= c * v;
          }
          rows.emplace(pivot, std::move(v));
        }
        int pos = p + q - 1;
        while (pos >= 0 && digits[pos] == rank - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
      }
    }
  }
}

int OmegaIdealContext::dimension(int n) const {
  if (n < 0 || n > ctx_.truncation()) throw std::out_of_range("degree out of range");
  return int(rows_[n].size());
}

Tensor OmegaIdealContext::reduce(const Tensor& t) const {
  require_same_context(ctx_, t.context(), "omega_ideal_reduce");
  Tensor out = t;
  for (const auto& rows : rows_) {
    for (const auto& [pivot, row] : rows) {
      const Rational c = t.coefficient(pivot);
      if (c != 0) out -= c * row;
    }
  }
  return out;
}

}  // namespace magnus
