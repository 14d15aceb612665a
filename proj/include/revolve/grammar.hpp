#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "revolve/words.hpp"

namespace revolve {

/// Upper bound on how many words an enumeration may produce.
struct EnumerationCap {
  std::int64_t max_words = 5'000'000;
};

/// Thrown when an enumeration would exceed its cap; names the count.
class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(std::int64_t requested, std::int64_t cap);
  /// Requested word count, saturated at 2^62 when astronomically large.
  std::int64_t requested() const { return requested_; }

 private:
  std::int64_t requested_;
};

// --- validation ---------------------------------------------------------

/// DRC: every consecutive exponent difference is a generator step.
bool validate_drc(const DeltaWord& w);

/// DZRC: after the leading all-zero prefix, each nonzero entry is the
/// previous nonzero entry rotated by some theta_k in S \ {0}.
bool validate_dzrc(const DeltaZeroWord& w);

/// GRC: after the leading all-zero prefix, each nonzero entry is the
/// previous nonzero entry rotated by theta.
bool validate_grc(const GRWord& w);

// --- exact word counts (the enumeration sizes, saturated at 2^62) -------

std::int64_t count_drc_words(const RevolvingGroup& g, int length,
                             bool first_fixed);
std::int64_t count_dzrc_words(const RevolvingGroup& g, int length);
std::int64_t count_grc_words(const RationalAngle& theta, int length);

// --- enumeration ---------------------------------------------------------

/// All DRC words of the given length, in lexicographic order of
/// (first exponent, step indices).  With `first` fixed the count is
/// m^(length-1), otherwise |Delta| * m^(length-1).
std::vector<DeltaWord> enumerate_drc(const RevolvingGroup& g, int length,
                                     std::optional<GroupElement> first = {},
                                     EnumerationCap cap = {});

std::vector<DeltaZeroWord> enumerate_dzrc(const RevolvingGroup& g, int length,
                                          EnumerationCap cap = {});

std::vector<GRWord> enumerate_grc(const RationalAngle& theta, int length,
                                  EnumerationCap cap = {});

/// Streaming variants: visit each word without materializing the list.
void for_each_drc_word(const RevolvingGroup& g, int length,
                       std::optional<GroupElement> first, EnumerationCap cap,
                       const std::function<void(const DeltaWord&)>& fn);
void for_each_dzrc_word(const RevolvingGroup& g, int length, EnumerationCap cap,
                        const std::function<void(const DeltaZeroWord&)>& fn);
void for_each_grc_word(const RationalAngle& theta, int length,
                       EnumerationCap cap,
                       const std::function<void(const GRWord&)>& fn);

// --- random sampling -----------------------------------------------------
// Uniform independent choice among the options valid at each position
// (and a uniform first element).

DeltaWord sample_drc(const RevolvingGroup& g, int length, std::mt19937_64& rng);
DeltaZeroWord sample_dzrc(const RevolvingGroup& g, int length,
                          std::mt19937_64& rng);
GRWord sample_grc(const RationalAngle& theta, int length, std::mt19937_64& rng);

DeltaWord sample_drc(const RevolvingGroup& g, int length, std::uint64_t seed);
DeltaZeroWord sample_dzrc(const RevolvingGroup& g, int length,
                          std::uint64_t seed);
GRWord sample_grc(const RationalAngle& theta, int length, std::uint64_t seed);

// --- conversions ---------------------------------------------------------

/// gamma_1 = 1, gamma_{n+1} = gamma_n * e^{i*theta_{x_n}}; length N+1.
DeltaWord coding_to_delta(const CodingWord& x, const RevolvingGroup& g);

/// Unique coding word of length N-1 with x_n = k whenever step n uses
/// theta_k.  Throws std::invalid_argument if some step is not a generator.
CodingWord delta_to_coding(const DeltaWord& w);

/// s_n = c_k where step n of the word uses theta_k; length N-1.
std::vector<std::complex<double>> constant_sequence(
    const DeltaWord& w, std::span<const std::complex<double>> constants);

/// delta_n = 0 if x_n = 0, else the accumulated rotation
/// e^{i * sum_{j<n} theta_{x_j}}.
DeltaZeroWord dzrc_from_coding(const CodingWord& x, const RevolvingGroup& g);

}  // namespace revolve
