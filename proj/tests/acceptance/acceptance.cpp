// Acceptance run: every numbered suite entry plus an independent cross-check
// built on NaivePoly, which shares no arithmetic code with Tensor.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../unit/test_support.hpp"
#include "magnus/cyclic.hpp"
#include "magnus/derivation.hpp"
#include "magnus/expansion.hpp"
#include "magnus/suite.hpp"
#include "magnus/twist_johnson.hpp"

namespace magnus {
namespace {

using testing::NaivePoly;

struct Outcome {
  bool pass = true;
  std::string why;

  void require(bool ok, const std::string& message) {
    if (!ok && pass) {
      pass = false;
      why = message;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

NaivePoly naive_value(const Expansion& theta, const GroupWord& w) {
  const int n = theta.truncation(), rank = theta.context().rank();
  NaivePoly p = NaivePoly::constant(rank, n, 1);
  for (Letter l : w.letters()) p = p * NaivePoly::from(theta.value(l.generator, l.inverse));
  return p;
}

// Sum_i A_i B_i - B_i A_i, written out letter by letter.
Tensor hand_omega(const AlgebraContext& ctx) {
  std::vector<Term> terms;
  for (int i = 0; i < ctx.genus(); ++i) {
    terms.push_back(Term{Monomial::from_letters({2 * i, 2 * i + 1}), Rational(1)});
    terms.push_back(Term{Monomial::from_letters({2 * i + 1, 2 * i}), Rational(-1)});
  }
  return Tensor::from_terms(ctx, std::move(terms));
}

// Dynkin-Specht-Wever: p is Lie iff each degree-n part satisfies D(p_n) = n p_n,
// where D sends a word to its left-normed bracket.
bool naive_is_lie(const Tensor& t) {
  const int rank = t.context().rank(), n = t.truncation();
  NaivePoly lhs(rank, n), rhs(rank, n);
  for (const auto& term : t.terms()) {
    const std::vector<int> w = term.mono.letters();
    if (w.empty()) return false;
    NaivePoly b = lhs.letter(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) {
      const NaivePoly l = lhs.letter(w[k]);
      b = b * l + (l * b).scaled(-1);
    }
    lhs = lhs + b.scaled(term.coeff);
    rhs = rhs + NaivePoly::from(Tensor::from_terms(t.context(), {term})).scaled(Rational(int(w.size())));
  }
  return lhs.to_tensor(t.context()) == rhs.to_tensor(t.context());
}

// N(t): sum over cyclic rotations of each word.
Tensor naive_cyclic(const Tensor& t) {
  std::vector<Term> terms;
  for (const auto& term : t.terms()) {
    std::vector<int> w = term.mono.letters();
    for (std::size_t r = 0; r < w.size(); ++r) {
      terms.push_back(Term{Monomial::from_letters(w), term.coeff});
      std::rotate(w.begin(), w.begin() + 1, w.end());
    }
  }
  TermAccumulator acc(t.context());
  for (const auto& term : terms) acc.add(term.mono, term.coeff);
  return acc.finish();
}

std::vector<NaivePoly> naive_values(const Derivation& d) {
  std::vector<NaivePoly> out;
  for (const auto& v : d.values()) out.push_back(NaivePoly::from(v));
  return out;
}

// exp(D) p = sum_k D^k p / k!, stopping once the iterate vanishes.
NaivePoly naive_exp_derivation(const std::vector<NaivePoly>& d, const NaivePoly& p, const AlgebraContext& ctx) {
  NaivePoly sum = p, term = p;
  for (int k = 1; k <= 4 * ctx.truncation() + 4; ++k) {
    term = term.derive(d).scaled(Rational(1) / k);
    if (term.to_tensor(ctx).is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

void check_group_like_boundary(Outcome& out, const Expansion& theta) {
  const AlgebraContext& ctx = theta.context();
  for (int x = 0; x < ctx.rank(); ++x) {
    const Tensor l = NaivePoly::from(theta.value(x)).log().to_tensor(ctx);
    out.require(naive_is_lie(l), "log theta(" + generator_name(x) + ") is not Lie");
  }
  const Tensor boundary_log = naive_value(theta, boundary_word(theta.genus())).log().to_tensor(ctx);
  out.require(boundary_log == hand_omega(ctx), "log theta(zeta) differs from omega");
}

Outcome oracle_fixture(std::string_view name, int genus, int truncation) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const Expansion theta = load_fixture(name, genus, truncation);
  check_group_like_boundary(out, theta);
  out.require(seconds_since(t0) < 1.0, "fixture check took at least one second");
  return out;
}

Outcome oracle_3() {
  Outcome out;
  for (int g = 1; g <= 3; ++g) {
    const auto t0 = std::chrono::steady_clock::now();
    const Expansion theta = build_symplectic(g, 6);
    if (g == 3) out.require(seconds_since(t0) < 60.0, "genus-3 build took at least 60 s");
    check_group_like_boundary(out, theta);
  }
  return out;
}

Outcome oracle_4() {
  Outcome out;
  for (const Expansion& theta : {build_symplectic(2, 5), load_fixture("g2", 2, 4)}) {
    const AlgebraContext& ctx = theta.context();
    for (const char* c : {"nonsep", "sep:1", "conj(beta1):nonsep", "conj(alpha2,beta1^-1):nonsep", "conj(beta2,sep1):nonsep"}) {
      const CurveDescriptor curve = CurveDescriptor::parse(c);
      const FreeAutomorphism t = curve.twist(2);
      const std::vector<NaivePoly> minus_l = naive_values(-l_invariant(theta, curve.word(2)));
      for (int x = 0; x < ctx.rank(); ++x) {
        const Tensor lhs = naive_exp_derivation(minus_l, NaivePoly::from(theta.value(x)), ctx).to_tensor(ctx);
        out.require(lhs == naive_value(theta, t.image(x)).to_tensor(ctx),
                    std::string("twist formula fails for ") + c + " on " + generator_name(x));
      }
    }
  }
  return out;
}

// Hand-coded form: (A_i . B_i) = 1, (B_i . A_i) = -1.
int hand_pairing(int x, int y) {
  if (x / 2 != y / 2 || x == y) return 0;
  return x % 2 == 0 ? 1 : -1;
}

Outcome oracle_5() {
  Outcome out;
  for (int g = 1; g <= 3; ++g) {
    for (int i = 1; i <= g; ++i) {
      for (const std::string c : {"alpha:", "beta:", "sep:"}) {
        const CurveDescriptor curve = CurveDescriptor::parse(c + std::to_string(i));
        const GroupWord cw = curve.word(g);
        std::vector<int> cls(2 * g, 0);
        for (Letter l : cw.letters()) cls[l.generator] += l.inverse ? -1 : 1;
        const FreeAutomorphism t = curve.twist(g);
        for (int x = 0; x < 2 * g; ++x) {
          std::vector<int> image(2 * g, 0);
          for (Letter l : t.image(x).letters()) image[l.generator] += l.inverse ? -1 : 1;
          int pairing = 0;
          for (int y = 0; y < 2 * g; ++y) pairing += hand_pairing(x, y) * cls[y];
          for (int y = 0; y < 2 * g; ++y) {
            out.require(image[y] == (x == y ? 1 : 0) - pairing * cls[y],
                        "twist along " + curve.to_string() + " is not a transvection at genus " + std::to_string(g));
          }
        }
      }
    }
  }
  return out;
}

std::vector<int> abelianize(const GroupWord& w, int rank) {
  std::vector<int> cls(rank, 0);
  for (Letter l : w.letters()) cls[l.generator] += l.inverse ? -1 : 1;
  return cls;
}

// tau_1 = degree 2 of T o |t|^-1. From T(theta(x)) = theta(t x) in degree 2:
// T_2(X) = theta(t x)_2 - (|t| (x) |t|) theta_2(x), and |t|^-1 X = X + (X . C) C.
Outcome oracle_6() {
  Outcome out;
  for (const Expansion& theta : {build_symplectic(2, 5), build_symplectic(load_fixture("massuyeau", 2, 4), 5)}) {
    const AlgebraContext& ctx = theta.context();
    const int rank = ctx.rank();
    const FreeAutomorphism t = twist_nonseparating(2);
    const std::vector<int> c = abelianize(GroupWord::alpha(2, 1), rank);
    std::vector<NaivePoly> hom, t2;
    for (int x = 0; x < rank; ++x) {
      const std::vector<int> col = abelianize(t.image(x), rank);
      NaivePoly p(rank, ctx.truncation());
      for (int y = 0; y < rank; ++y) p = p + p.letter(y).scaled(col[y]);
      hom.push_back(p);
    }
    for (int x = 0; x < rank; ++x) {
      NaivePoly moved(rank, ctx.truncation());
      const Tensor quadratic = graded_part(theta.value(x), 2);
      for (const auto& term : quadratic.terms()) {
        const auto w = term.mono.letters();
        moved = moved + (hom[w[0]] * hom[w[1]]).scaled(term.coeff);
      }
      const Tensor image = graded_part(naive_value(theta, t.image(x)).to_tensor(ctx), 2);
      t2.push_back(NaivePoly::from(image) + moved.scaled(-1));
    }
    const JohnsonComponent tau1 = johnson_component(theta, t, 1);
    for (int x = 0; x < rank; ++x) {
      int pairing = 0;
      for (int y = 0; y < rank; ++y) pairing += hand_pairing(x, y) * c[y];
      NaivePoly expected = t2[x];
      for (int y = 0; y < rank; ++y) expected = expected + t2[y].scaled(pairing * c[y]);
      out.require(expected.to_tensor(ctx) == tau1.values[x], "tau_1 differs from the naive degree-2 solve on " + basis_name(x));
    }
  }
  return out;
}

Tensor naive_random_cyclic(std::mt19937& rng, const AlgebraContext& ctx, int degree) {
  for (;;) {
    TermAccumulator acc(ctx);
    for (int k = 0; k < 2; ++k) {
      std::vector<int> letters;
      for (int i = 0; i < degree; ++i) letters.push_back(int(rng() % ctx.rank()));
      acc.add(Monomial::from_letters(letters), make_rational(int(rng() % 5) - 2, 1 + int(rng() % 2)));
    }
    const Tensor base = acc.finish();
    const Tensor t = naive_cyclic(base);
    if (cyclic_n(base) != t) throw std::logic_error("cyclic_n differs from the rotation sum");
    if (!t.is_zero()) return t;
  }
}

Outcome oracle_8() {
  Outcome out;
  std::mt19937 rng(4242);
  for (int s = 0; s < 40; ++s) {
    const AlgebraContext ctx(1 + s % 2, 6);
    const int n = 2 + s % 2, m = 2;
    const Tensor u = naive_random_cyclic(rng, ctx, n), v = naive_random_cyclic(rng, ctx, m);
    const Derivation bracket_d = Derivation::from_tensor(necklace_bracket(u, v));
    const std::vector<NaivePoly> du = naive_values(Derivation::from_tensor(u)), dv = naive_values(Derivation::from_tensor(v));
    const AlgebraContext& dctx = bracket_d.context();
    for (int x = 0; x < dctx.rank(); ++x) {
      const NaivePoly gen = NaivePoly(dctx.rank(), dctx.truncation()).letter(x);
      const NaivePoly c = gen.derive(dv).derive(du) + gen.derive(du).derive(dv).scaled(-1);
      out.require(c.to_tensor(dctx) == bracket_d.value(x), "necklace bracket differs from naive commutator");
    }
  }
  return out;
}

// 1/2 N(l l) with l = log theta(x), all through NaivePoly at truncation N + 1.
Tensor naive_l_invariant(const Expansion& theta, const GroupWord& w) {
  const AlgebraContext up(theta.genus(), theta.truncation() + 1);
  const NaivePoly l = naive_value(theta, w).log();
  const NaivePoly ll = NaivePoly::from(with_truncation(l.to_tensor(theta.context()), up.truncation()));
  return make_rational(1, 2) * naive_cyclic((ll * ll).to_tensor(up));
}

Outcome oracle_9() {
  Outcome out;
  std::mt19937 rng(77);
  const Expansion theta = build_symplectic(2, 5);
  for (int s = 0; s < 8; ++s) {
    std::vector<Letter> xs, ys;
    for (int i = 0; i < 1 + int(rng() % 4); ++i) xs.push_back(Letter{int(rng() % 4), rng() % 2 == 1});
    for (int i = 0; i < 1 + int(rng() % 4); ++i) ys.push_back(Letter{int(rng() % 4), rng() % 2 == 1});
    const GroupWord x(2, xs), y(2, ys);
    if (x.empty()) continue;
    const Tensor expected = naive_l_invariant(theta, x);
    out.require(l_invariant_tensor(theta, x) == expected, "L(x) differs from 1/2 N(l l)");
    out.require(naive_l_invariant(theta, conjugate(x, y)) == expected, "naive L(y x y^-1) != L(x)");
    out.require(naive_l_invariant(theta, inverse(x)) == expected, "naive L(x^-1) != L(x)");
  }
  return out;
}

Outcome oracle_10_11() {
  Outcome out;
  const Expansion theta = build_symplectic(2, 5);
  const AlgebraContext& ctx = theta.context();
  const std::vector<NaivePoly> l = naive_values(l_invariant(theta, GroupWord::alpha(2, 1)));
  const NaivePoly b = NaivePoly::from(theta.value(1));
  const NaivePoly log_a = NaivePoly::from(theta.value(0)).log();
  out.require(b.derive(l).to_tensor(ctx) == (b * log_a).scaled(-1).to_tensor(ctx), "L(alpha1) theta(beta1) != -theta(beta1) l(alpha1)");
  for (int x : {0, 2, 3}) {
    out.require(NaivePoly::from(theta.value(x)).derive(l).to_tensor(ctx).is_zero(),
                "L(alpha1) does not kill theta(" + generator_name(x) + ")");
  }
  return out;
}

Outcome oracle_10() {
  Outcome out = oracle_10_11();
  // sigma((log alpha1)^2) beta1 = 2 theta(beta1) l(alpha1), checked at the sigma_act level too.
  const Expansion theta = build_symplectic(1, 5);
  const AlgebraContext& ctx = theta.context();
  const NaivePoly b = NaivePoly::from(theta.value(1)), log_a = NaivePoly::from(theta.value(0)).log();
  out.require(sigma_log_power(theta, GroupWord::alpha(1, 1), 2, GroupWord::beta(1, 1)) == (b * log_a).scaled(2).to_tensor(ctx),
              "sigma_log_power differs from the naive product");
  return out;
}

Expansion cube_shifted(int truncation) {
  const AlgebraContext ctx(2, truncation), c3(2, 3);
  const Tensor cube = antisymmetrize(Tensor::basis(c3, 0) * Tensor::basis(c3, 1) * Tensor::basis(c3, 2));
  const Derivation shift = Derivation::from_tensor(cube);
  std::vector<Tensor> logs;
  for (int x = 0; x < ctx.rank(); ++x) logs.push_back(Tensor::basis(ctx, x) + with_truncation(shift.value(x), truncation));
  return build_symplectic(Expansion::from_logs(logs), truncation);
}

Outcome oracle_14() {
  Outcome out;
  const std::pair<Expansion, Expansion> pairs[] = {{build_symplectic(1, 5), load_fixture("g1", 1, 5)},
                                                   {build_symplectic(2, 5), cube_shifted(5)}};
  for (const auto& [built, other] : pairs) {
    const AlgebraContext& ctx = built.context();
    const AlgebraEndomorphism u = connecting_automorphism(built, other);
    // U substituted letter by letter into theta_built(x) must give theta_other(x).
    for (int x = 0; x < ctx.rank(); ++x) {
      NaivePoly image(ctx.rank(), ctx.truncation());
      for (const auto& term : built.value(x).terms()) {
        NaivePoly p = NaivePoly::constant(ctx.rank(), ctx.truncation(), term.coeff);
        for (int letter : term.mono.letters()) p = p * NaivePoly::from(u.value(letter));
        image = image + p;
      }
      out.require(image.to_tensor(ctx) == other.value(x), "U(theta_built(x)) != theta_other(x)");
    }
    const Derivation d(log_on_h(u));
    for (const auto& v : d.values()) out.require(naive_is_lie(v), "log U is not Lie on H");
  }
  // At genus 2 the degree-2 values of log U are D_c(X) for c = A1 ^ B1 ^ A2.
  const Derivation d(log_on_h(connecting_automorphism(pairs[1].first, pairs[1].second)));
  const AlgebraContext c3(2, 3);
  NaivePoly cube(4, 4);
  const int letters[3] = {0, 1, 2};
  for (int p : {0, 1, 2}) {
    for (int q : {0, 1, 2}) {
      for (int r : {0, 1, 2}) {
        if (p == q || q == r || p == r) continue;
        const int sign = ((q - p) * (r - p) * (r - q)) > 0 ? 1 : -1;
        cube = cube + (cube.letter(letters[p]) * cube.letter(letters[q]) * cube.letter(letters[r])).scaled(make_rational(sign, 6));
      }
    }
  }
  out.require(graded_part(d.to_tensor(), 3) == with_truncation(cube.to_tensor(AlgebraContext(2, 4)), 6),
              "u_1 differs from the seeded cube element");
  return out;
}

Outcome no_oracle() { return {}; }

}  // namespace
}  // namespace magnus

int main() {
  using namespace magnus;
  const std::vector<std::function<Outcome()>> oracles = {
      [] { return oracle_fixture("g1", 1, 5); }, [] { return oracle_fixture("g2", 2, 4); },
      oracle_3, oracle_4, oracle_5, oracle_6, no_oracle, oracle_8, oracle_9, oracle_10,
      oracle_10_11, no_oracle, no_oracle, oracle_14,
  };
  int failures = 0;
  for (int id = 1; id <= kSuiteSize; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteEntry entry = run_suite_entry(id);
    Outcome oracle;
    try {
      oracle = oracles[id - 1]();
    } catch (const std::exception& e) {
      oracle.require(false, std::string("exception: ") + e.what());
    }
    const bool pass = entry.pass() && oracle.pass;
    failures += !pass;
    std::printf("%s criterion %2d: %s (%.2fs)\n", pass ? "PASS" : "FAIL", id, entry.title.c_str(), seconds_since(t0));
    for (const auto& c : entry.checks) {
      if (!c.pass) std::printf("    %s: %s\n", c.check.c_str(), c.witness.c_str());
    }
    if (!oracle.pass) std::printf("    oracle: %s\n", oracle.why.c_str());
  }
  std::printf("%d of %d criteria passed\n", kSuiteSize - failures, kSuiteSize);
  return failures == 0 ? 0 : 1;
}
