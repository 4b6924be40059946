#ifndef MAGNUS_EXPANSION_HPP
#define MAGNUS_EXPANSION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magnus/algebra_map.hpp"
#include "magnus/free_group.hpp"
#include "magnus/tensor.hpp"

namespace magnus {

enum class ExpansionKind { standard, exponential, fixture_genus1, fixture_genus2, fixture_massuyeau, built, user };

std::string kind_name(ExpansionKind kind);
/// Inverse of kind_name; throws std::invalid_argument.
ExpansionKind parse_kind(std::string_view name);

/// A Magnus expansion, stored by its values on the free generators.
///
/// In log mode the stored data are the logs l(x_i) (degree-1 part exactly
/// X_i); in raw mode they are theta(x_i) - 1, for expansions that are not
/// group-like. Both modes cache theta(x_i), theta(x_i)^-1 and log theta(x_i).
class Expansion {
 public:
  /// Throws PreconditionError unless every log has zero constant term and
  /// degree-1 part X_i.
  static Expansion from_logs(std::vector<Tensor> logs, ExpansionKind kind = ExpansionKind::user);
  /// raw[i] = theta(x_i) - 1, with the same degree-0/1 requirements.
  static Expansion from_raw(std::vector<Tensor> raw, ExpansionKind kind = ExpansionKind::user);

  /// theta(x_i) = 1 + X_i; not group-like.
  static Expansion standard(const AlgebraContext& ctx);
  /// theta(x_i) = exp(X_i).
  static Expansion exponential(const AlgebraContext& ctx);

  const AlgebraContext& context() const { return ctx_; }
  int genus() const { return ctx_.genus(); }
  int truncation() const { return ctx_.truncation(); }
  ExpansionKind kind() const { return kind_; }
  bool log_mode() const { return log_mode_; }

  /// Stored data: logs in log mode, theta(x_i) - 1 in raw mode.
  const std::vector<Tensor>& stored() const { return log_mode_ ? logs_ : raw_; }
  const Tensor& log_value(int generator) const { return logs_.at(generator); }
  const Tensor& value(int generator, bool inverse = false) const {
    return inverse ? inverses_.at(generator) : values_.at(generator);
  }

  /// Same stored data at another truncation: higher degrees are dropped,
  /// or (when raising the truncation) taken to be zero.
  Expansion with_truncation(int truncation) const;
  Expansion with_kind(ExpansionKind kind) const;

 private:
  Expansion(AlgebraContext ctx, ExpansionKind kind, bool log_mode, std::vector<Tensor> data);

  AlgebraContext ctx_;
  ExpansionKind kind_;
  bool log_mode_;
  std::vector<Tensor> logs_;
  std::vector<Tensor> raw_;
  std::vector<Tensor> values_;
  std::vector<Tensor> inverses_;
};

/// theta(w), the ordered product of the letter values.
Tensor evaluate(const Expansion& theta, const GroupWord& w);
/// log theta(w).
Tensor log_evaluate(const Expansion& theta, const GroupWord& w);

/// Every generator log is Lie.
bool is_group_like(const Expansion& theta);
/// Group-like and log theta(zeta) = omega (needs truncation >= 2).
bool is_symplectic(const Expansion& theta);

/// Stronger test for truncated data: log theta(zeta) = omega modulo T_{N+2}
/// with the logs zero-padded to degree N + 1. Degree N + 1 of
/// log theta(zeta) involves only the stored degrees, so this holds exactly
/// when the data is the truncation of a symplectic expansion.
bool is_symplectic_truncation(const Expansion& theta);

/// Corrects the seed degree by degree until log theta(zeta) = omega modulo
/// T_{N+2}, then truncates to N; the result passes is_symplectic_truncation.
/// The seed (default: exponential) must be group-like; it is truncated or
/// zero-padded first. Seeds passing is_symplectic_truncation come back
/// unchanged.
Expansion build_symplectic(const Expansion& seed, int truncation);
Expansion build_symplectic(int genus, int truncation);

/// The filtered automorphism U of T/T_{N+1} with U(theta1(x_i)) = theta2(x_i).
AlgebraEndomorphism connecting_automorphism(const Expansion& theta1, const Expansion& theta2);

/// Names accepted by load_fixture: "g1", "g2", "massuyeau".
int fixture_trusted_truncation(std::string_view name);
/// Loads a shipped fixture at the given genus and truncation. Throws
/// std::invalid_argument on an unknown name, a genus the fixture does not
/// cover, or a truncation above the trusted one. The partial fixture fills
/// generators of handles >= 2 with exponential values.
Expansion load_fixture(std::string_view name, int genus, int truncation);
/// Raw JSON text of a fixture; read from $MAGNUS_DATA_DIR/fixtures when
/// that variable is set, otherwise from the copy compiled into the library.
std::string fixture_text(std::string_view name);

}  // namespace magnus

#endif  // MAGNUS_EXPANSION_HPP
