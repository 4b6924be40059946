#ifndef MAGNUS_TWIST_JOHNSON_HPP
#define MAGNUS_TWIST_JOHNSON_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "magnus/algebra_map.hpp"
#include "magnus/derivation.hpp"
#include "magnus/expansion.hpp"
#include "magnus/free_group.hpp"

namespace magnus {

/// Tensor view of L(w) = 1/2 N(l(w) l(w)), at truncation N + 1.
Tensor l_invariant_tensor(const Expansion& theta, const GroupWord& w);
/// L(w) as a derivation at truncation N.
Derivation l_invariant(const Expansion& theta, const GroupWord& w);

/// The automorphism T of T/T_{N+1} with T(theta(x)) = theta(phi(x)).
AlgebraEndomorphism total_johnson(const Expansion& theta, const FreeAutomorphism& phi);

/// Degree-(k+1) parts of T o |phi|^-1 on the basis of H.
struct JohnsonComponent {
  int k;
  std::vector<Tensor> values;

  friend bool operator==(const JohnsonComponent&, const JohnsonComponent&) = default;
};

/// Requires 1 <= k and k + 1 <= N.
JohnsonComponent johnson_component(const Expansion& theta, const FreeAutomorphism& phi, int k);

/// For the twist along gamma_h:
///   sum_{1 <= n <= k/2} (-1)^n/n! sum_{m_1+..+m_n = 2n+k, m_i >= 4} L_{m_1} ... L_{m_n}
/// on the basis of H, with L = L(gamma_h). Requires k + 1 <= N.
JohnsonComponent separating_tau_formula(const Expansion& theta, int h, int k);

/// theta(sigma(u) v) = -(N(theta(u) - 1)) acting on theta(v). The cyclic
/// tensor is known only modulo T_{N+1}, so the result is exact at
/// truncation N - 1 and is returned there. Requires a symplectic theta.
Tensor sigma_act(const Expansion& theta, const GroupWord& u, const GroupWord& v);
/// theta(sigma((log u)^p) v) = -(N(l(u)^p)) acting on theta(v), for p >= 2;
/// exact at truncation N. Requires a symplectic theta.
Tensor sigma_log_power(const Expansion& theta, const GroupWord& u, int p, const GroupWord& v);

/// A curve given by an adapted twist atom, possibly moved by a product of
/// twists: the curve word is phi(base word) and its twist phi t_base phi^-1.
struct CurveDescriptor {
  TwistAtom base{TwistAtom::Kind::alpha, 1, 1};
  std::vector<TwistAtom> conjugator;

  static CurveDescriptor nonseparating() { return {}; }
  static CurveDescriptor separating(int h) { return {TwistAtom{TwistAtom::Kind::sep, h, 1}, {}}; }
  static CurveDescriptor conjugated(std::vector<TwistAtom> phi, CurveDescriptor base_curve = nonseparating());

  /// "nonsep", "sep:h", "alpha:i", "beta:i"; conjugated curves print as
  /// "conj(alpha2,beta1^-1):nonsep".
  static CurveDescriptor parse(std::string_view text);
  std::string to_string() const;

  GroupWord word(int genus) const;
  FreeAutomorphism twist(int genus) const;
};

struct Certificate {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  bool pass = true;
  std::string witness;

  /// Records the first failure only.
  void fail(std::string why);
  nlohmann::ordered_json to_json() const;
};

/// exp(-L(C)) theta(x) = T(t_C) theta(x) for every generator x.
Certificate verify_dehn_twist_formula(const Expansion& theta, const CurveDescriptor& curve);

/// L_i(w1) = L_i(w2) for 2 <= i <= k + 1.
Certificate verify_nilpotent_dependence(const Expansion& theta, const GroupWord& w1, const GroupWord& w2, int k);

/// Closed-surface shadow: L(C) kills omega, and exp(-L) agrees with T(t_C)
/// modulo the two-sided ideal generated by omega, both on the basis of H
/// and on every theta(x).
Certificate verify_closed_surface_formula(const Expansion& theta, const CurveDescriptor& curve);

/// On the basis of H, for L = L(C):
///   L2 L2 = L2 L3 = L3 L2 = 0,  2 L2 L4 L2 = L2 L2 L4,
///   tau_1(t_C) = -L3,  tau_2(t_C) = -L4 + 1/2 [L2, L4] + 1/2 L3 L3.
/// Needs N >= 3.
Certificate verify_operator_identities(const Expansion& theta, const CurveDescriptor& curve);

}  // namespace magnus

#endif  // MAGNUS_TWIST_JOHNSON_HPP
