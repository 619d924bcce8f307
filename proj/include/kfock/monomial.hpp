#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kfock {

enum class VarKind : std::uint8_t { Nu = 0, T = 1 };

/// A generator of the ambient ring: nu_{r,alpha} (Fock creation variable) or
/// t_k (coordinate of the descendant input in the (L-1)^k basis).
/// Ordering: every Nu before every T, then by (index, color).
struct VarId {
  VarKind kind = VarKind::Nu;
  std::uint16_t index = 1;
  std::uint16_t color = 1;

  static VarId nu(int r, int color = 1);
  static VarId t(int k);

  bool is_nu() const { return kind == VarKind::Nu; }
  bool is_t() const { return kind == VarKind::T; }
  /// Grading: wt(nu_r) = r, wt(t_k) = 0.
  int weight() const { return is_nu() ? index : 0; }

  /// "nu_2" (color 1), "nu_2_3" (color 3), "t_0".
  std::string name() const;
  static VarId parse(std::string_view name);

  auto operator<=>(const VarId&) const = default;
};

/// A product of variables with positive exponents, kept sorted by VarId.
class Monomial {
 public:
  using Factor = std::pair<VarId, int>;

  Monomial() = default;
  static Monomial of(VarId v, int exponent = 1);
  /// Builds from arbitrary factors; merges repeats and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  int exponent(VarId v) const;
  int nu_weight() const { return nu_weight_; }
  int t_degree() const { return t_degree_; }

  Monomial operator*(const Monomial& other) const;
  /// The monomial with v's exponent lowered by one; requires exponent(v) > 0.
  Monomial lowered(VarId v) const;
  /// The monomial with v removed entirely.
  Monomial without(VarId v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  void recompute();

  std::vector<Factor> factors_;
  int nu_weight_ = 0;
  int t_degree_ = 0;
};

/// Canonical term order: graded by (nu-weight, t-degree), then lexicographic
/// on the sorted factor list.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Truncation bounds of a series. Every operation discards monomials whose
/// weighted nu-degree exceeds max_weight or whose t-degree exceeds max_t_degree.
struct TruncationPolicy {
  int max_nu_index = 6;   // R
  int max_weight = 6;     // D
  int max_t_index = 4;    // K_t
  int max_t_degree = 3;   // T

  bool admits(const Monomial& m) const { return m.nu_weight() <= max_weight && m.t_degree() <= max_t_degree; }
  /// True when v is a variable of the ring this policy describes.
  bool contains(VarId v) const;
  /// Component-wise <=.
  bool within(const TruncationPolicy& other) const;
  /// Throws InvalidArgument on a negative bound.
  void validate() const;

  friend bool operator==(const TruncationPolicy&, const TruncationPolicy&) = default;
};

}  // namespace kfock
