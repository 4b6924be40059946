#include "magnus/cyclic.hpp"

namespace magnus {

Tensor nu(const Tensor& t) {
  TermAccumulator acc(t.context(), t.size());
  for (const auto& term : t.terms()) acc.add(term.mono.rotate(), term.coeff);
  return acc.finish();
}

Tensor cyclic_n(const Tensor& t) {
  TermAccumulator acc(t.context(), t.size());
  for (const auto& term : t.terms()) {
    Monomial m = term.mono;
    for (int r = 0; r < term.mono.degree(); ++r, m = m.rotate()) acc.add(m, term.coeff);
  }
  return acc.finish();
}

Tensor cyclic_n_hat(const Tensor& t) {
  TermAccumulator acc(t.context(), t.size());
  for (const auto& term : t.terms()) {
    const int p = term.mono.degree();
    if (p == 0) continue;
    const Rational c = term.coeff / p;
    Monomial m = term.mono;
    for (int r = 0; r < p; ++r, m = m.rotate()) acc.add(m, c);
  }
  return acc.finish();
}

bool is_nu_invariant(const Tensor& t) { return nu(t) == t; }

Tensor necklace_bracket(const Tensor& u, const Tensor& v) {
  require_same_context(u.context(), v.context(), "necklace_bracket");
  for (const Tensor* t : {&u, &v}) {
    if (t->constant_term() != 0 || !is_nu_invariant(*t)) {
      throw PreconditionError("necklace_bracket: input is not in the image of N");
    }
  }
  const AlgebraContext& ctx = u.context();
  // A nu-invariant degree-n part w equals N(w / n); the words below are
  // collected first and cyclically symmetrized once at the end.
  TermAccumulator words(ctx);
  for (const auto& tu : u.terms()) {
    const int n = tu.mono.degree();
    for (const auto& tv : v.terms()) {
      const int m = tv.mono.degree();
      if (n + m - 2 > ctx.truncation()) continue;
      const Rational weight = -tu.coeff * tv.coeff / (n * m);
      Monomial x = tu.mono;
      for (int i = 0; i < n; ++i, x = x.rotate()) {
        Monomial y = tv.mono;
        for (int j = 0; j < m; ++j, y = y.rotate()) {
          const int pairing = intersection(x.first(), y.first());
          if (pairing == 0) continue;
          words.add(x.drop_first().concat(y.drop_first()), weight * pairing);
        }
      }
    }
  }
  return cyclic_n(words.finish());
}

}  // namespace magnus
