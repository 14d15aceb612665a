#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "revolve/grammar.hpp"
#include "revolve/group.hpp"

namespace revolve {

/// z -> ratio * z + offset.
struct AffineMap {
  std::complex<double> ratio;
  std::complex<double> offset;

  std::complex<double> operator()(std::complex<double> z) const {
    return ratio * z + offset;
  }
};

/// An IFS of m similar contractions with a common scale alpha and rotations
/// from a generator set: psi_0(z) = alpha z + c_0,
/// psi_k(z) = alpha e^{i theta_k} z + c_k.
class IFSSpec {
 public:
  /// Throws std::invalid_argument unless |alpha| < 1 and there is exactly
  /// one constant per generator angle.
  IFSSpec(std::complex<double> alpha, GeneratorSet generators,
          std::vector<std::complex<double>> constants);

  std::complex<double> alpha() const { return alpha_; }
  const GeneratorSet& generators() const { return group_.generators(); }
  const RevolvingGroup& group() const { return group_; }
  const std::vector<std::complex<double>>& constants() const {
    return constants_;
  }
  std::size_t arity() const { return constants_.size(); }

  std::vector<AffineMap> maps() const;

  /// |alpha|, the common contraction ratio.
  double contraction() const;
  double max_constant() const;
  /// max|c| / (1 - |alpha|): every series value lies in this disk.
  double bounding_radius() const;

 private:
  std::complex<double> alpha_;
  RevolvingGroup group_;
  std::vector<std::complex<double>> constants_;
};

std::vector<AffineMap> maps_from_spec(const IFSSpec& spec);

enum class CloudMode { exhaustive, sampled };

/// Finite truncation of an attractor: a bag of points in the complex plane.
struct PointCloud {
  std::vector<std::complex<double>> points;
  int depth = 0;
  CloudMode mode = CloudMode::exhaustive;
  std::string source;
};

/// Sort by (re, im).
void canonicalize(std::vector<std::complex<double>>& points);

/// Canonicalize, then merge sort-adjacent points whose coordinates agree
/// within tol.
void dedup_points(std::vector<std::complex<double>>& points,
                  double tol = 1e-12);

/// I_k(x, n): how many of the first n digits equal k.
int count_digit(const CodingWord& x, int k, std::size_t n);

/// Depth-N partial sum sum_{n=1}^{N} c_{x_n} alpha^{n-1}
/// e^{i sum_{j<n} theta_{x_j}}, with the rotation kept as an exact group
/// exponent until the final multiply.
std::complex<double> eval_coding(const IFSSpec& spec, const CodingWord& x);

/// Partial sums of every coding word of the given depth, deduplicated.
PointCloud attractor_exhaustive(const IFSSpec& spec, int depth,
                                EnumerationCap cap = {});

/// Chaos game: n_points random-composition iterates, after a burn-in of 20
/// discarded steps.  Deterministic for a fixed seed.
PointCloud attractor_sampled(const IFSSpec& spec, std::int64_t n_points,
                             std::uint64_t seed);

}  // namespace revolve
