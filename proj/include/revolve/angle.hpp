#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace revolve {

/// A rational multiple of a full turn, 2*pi*q/p, kept in reduced form and
/// normalized so the represented angle lies in (-pi, pi].  The zero angle
/// is stored as 0/1.
class RationalAngle {
 public:
  /// Zero angle.
  RationalAngle() = default;

  /// Angle 2*pi*q/p.  Throws std::invalid_argument if p < 1.
  RationalAngle(std::int64_t q, std::int64_t p);

  std::int64_t num() const { return q_; }
  std::int64_t den() const { return p_; }

  bool is_zero() const { return q_ == 0; }

  /// Value in radians, in (-pi, pi].
  double radians() const;

  /// e^{i * 2*pi*q/p}.  Cardinal directions come out exact.
  std::complex<double> unit() const;

  /// "q/p" ("0" for the zero angle).
  std::string str() const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

 private:
  std::int64_t q_ = 0;
  std::int64_t p_ = 1;
};

RationalAngle make_angle(std::int64_t q, std::int64_t p);

/// Parse "q/p" or "q" (fraction of a full turn), e.g. "1/2" -> pi.
RationalAngle parse_angle(const std::string& text);

/// e^{2*pi*i*k/L} with exact values on the four cardinal directions.
std::complex<double> unit_root(std::int64_t k, std::int64_t L);

/// An ordered set of distinct rational angles theta_0..theta_{m-1} with
/// theta_0 = 0.  Parametrizes both the sequence grammars and the IFS
/// rotations.
class GeneratorSet {
 public:
  /// Throws std::invalid_argument unless the list is nonempty, starts with
  /// the zero angle, and has pairwise-distinct entries.
  explicit GeneratorSet(std::vector<RationalAngle> angles);

  std::size_t size() const { return angles_.size(); }  // m
  const RationalAngle& angle(std::size_t j) const { return angles_[j]; }
  const std::vector<RationalAngle>& angles() const { return angles_; }

  /// m == 1: the trivial grammar where every sequence is constant.
  bool degenerate() const { return angles_.size() == 1; }

  std::string str() const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::vector<RationalAngle> angles_;
};

}  // namespace revolve
