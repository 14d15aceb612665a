#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revolve/group.hpp"

namespace revolve {

/// Finite prefix of a coding sequence: digits x_1..x_N, each in [0, m).
class CodingWord {
 public:
  CodingWord(std::vector<int> digits, std::size_t arity);

  std::size_t size() const { return digits_.size(); }
  int digit(std::size_t n) const { return digits_[n]; }  // 0-based
  const std::vector<int>& digits() const { return digits_; }
  std::size_t arity() const { return arity_; }

  friend bool operator==(const CodingWord&, const CodingWord&) = default;

 private:
  std::vector<int> digits_;
  std::size_t arity_;
};

/// Finite prefix of a Delta-revolving sequence: group elements
/// gamma_1..gamma_N.  Stores the elements rather than the step choices;
/// the step decomposition is recovered by delta_to_coding.
class DeltaWord {
 public:
  DeltaWord(RevolvingGroup group, std::vector<GroupElement> elements);

  std::size_t size() const { return elements_.size(); }
  GroupElement at(std::size_t n) const { return elements_[n]; }  // 0-based
  const std::vector<GroupElement>& elements() const { return elements_; }
  const RevolvingGroup& group() const { return group_; }

 private:
  RevolvingGroup group_;
  std::vector<GroupElement> elements_;
};

/// Entry of a Delta_0- or GR-word: the zero symbol, or a unit written as an
/// integer exponent.  The zero symbol is a distinct tag; it is never the
/// exponent 0 (which denotes the complex number 1).
using ZeroableEntry = std::optional<std::int64_t>;
inline constexpr ZeroableEntry kZeroEntry = std::nullopt;

/// Finite prefix of a Delta_0-revolving sequence: entries from
/// Delta union {0}, exponents taken in Z_L.
class DeltaZeroWord {
 public:
  DeltaZeroWord(RevolvingGroup group, std::vector<ZeroableEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const ZeroableEntry& at(std::size_t n) const { return entries_[n]; }
  const std::vector<ZeroableEntry>& entries() const { return entries_; }
  const RevolvingGroup& group() const { return group_; }

 private:
  RevolvingGroup group_;
  std::vector<ZeroableEntry> entries_;
};

/// Finite prefix of a generalized revolving sequence for a single nonzero
/// angle theta = 2*pi*q/p: entries are the zero symbol or powers of
/// e^{i*theta}, stored as the power in [0, p).
class GRWord {
 public:
  GRWord(RationalAngle theta, std::vector<ZeroableEntry> entries);

  std::size_t size() const { return entries_.size(); }
  const ZeroableEntry& at(std::size_t n) const { return entries_[n]; }
  const std::vector<ZeroableEntry>& entries() const { return entries_; }
  const RationalAngle& theta() const { return theta_; }

  /// Complex value of entry n: 0 or (e^{i*theta})^entry.
  std::complex<double> value(std::size_t n) const;

 private:
  RationalAngle theta_;
  std::vector<ZeroableEntry> entries_;
};

// Text forms: coding words as digit strings ("10212"); Delta-words as
// comma-separated exponents ("0,3,5"); Delta_0/GR words with "z" for the
// zero symbol ("0,3,z,5").

std::string format_word(const CodingWord& w);
std::string format_word(const DeltaWord& w);
std::string format_word(const DeltaZeroWord& w);
std::string format_word(const GRWord& w);

CodingWord parse_coding_word(const std::string& text, std::size_t arity);
DeltaWord parse_delta_word(const std::string& text, const RevolvingGroup& g);
DeltaZeroWord parse_delta_zero_word(const std::string& text,
                                    const RevolvingGroup& g);
GRWord parse_gr_word(const std::string& text, const RationalAngle& theta);

}  // namespace revolve
