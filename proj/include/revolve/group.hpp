#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "revolve/angle.hpp"

namespace revolve {

/// Element of the revolving group: the unit complex number e^{2*pi*i*k/L},
/// stored as the exponent k in [0, L).
struct GroupElement {
  std::int64_t exponent = 0;

  friend bool operator==(GroupElement, GroupElement) = default;
};

/// The finite cyclic group Delta generated by {e^{i*theta_j}} for a
/// generator set S.  Represented exactly as Z_L with L = lcm of the angle
/// denominators; complex values are derived views, so the group law never
/// touches floating point.
///
/// Cheap to copy (shared immutable state).
class RevolvingGroup {
 public:
  explicit RevolvingGroup(GeneratorSet generators);

  const GeneratorSet& generators() const;

  /// |Delta| = lcm(p_1, ..., p_{m-1});  1 for the degenerate m = 1 case.
  std::int64_t order() const;

  /// Number of generator angles m (including theta_0 = 0).
  std::size_t arity() const;

  /// a_j = (q_j * L / p_j) mod L, the additive step of generator j.
  /// a_0 == 0.
  std::int64_t step_exponent(std::size_t j) const;

  /// Inverse of step_exponent: which generator produces this exponent
  /// difference, if any.
  std::optional<std::size_t> step_index(std::int64_t diff) const;

  bool contains_exponent(std::int64_t k) const;

  /// g * e^{i*theta_j}, exact exponent arithmetic.
  GroupElement apply(GroupElement g, std::size_t j) const;

  /// g * e^{i*theta}.  Throws std::invalid_argument if theta is not one of
  /// the generator angles.
  GroupElement apply_angle(GroupElement g, const RationalAngle& theta) const;

  std::complex<double> to_complex(GroupElement g) const;

  /// All L elements, exponents 0..L-1.
  std::vector<GroupElement> elements() const;

  friend bool operator==(const RevolvingGroup& a, const RevolvingGroup& b) {
    return a.impl_ == b.impl_ || a.generators() == b.generators();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

RevolvingGroup build_group(const GeneratorSet& generators);

}  // namespace revolve
