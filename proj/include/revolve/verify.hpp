#pragma once

#include <complex>
#include <span>
#include <string>

#include "revolve/series.hpp"

namespace revolve {

/// Outcome of one numerical certification run.
struct VerificationReport {
  std::string claim_id;
  std::string parameters;
  int depth = 0;
  double tolerance = 0.0;
  double discrepancy = 0.0;
  bool pass = false;
  double seconds = 0.0;

  /// "claim_id status discrepancy tolerance depth seconds"
  std::string line() const;
};

/// Formats a batch footer: "summary: <passed> passed, <failed> failed".
std::string summary_line(std::span<const VerificationReport> reports);

using PointSpan = std::span<const std::complex<double>>;

/// Symmetric Hausdorff distance between two finite nonempty point sets.
/// Brute force up to 10^4 points per side, grid-accelerated beyond.
double hausdorff(PointSpan a, PointSpan b);
double hausdorff_brute(PointSpan a, PointSpan b);
double hausdorff_grid(PointSpan a, PointSpan b);
double hausdorff(const PointCloud& a, const PointCloud& b);

struct SetMatch {
  bool match = false;
  double mismatch = 0.0;  // the Hausdorff distance
};

/// true iff hausdorff(a, b) <= eps.
SetMatch set_match(PointSpan a, PointSpan b, double eps);

/// Size of the multiplicative closure of a set of unit complex numbers,
/// deduplicated within a small angular tolerance.  Independent of the
/// exact exponent arithmetic; used as the brute-force group-order oracle.
/// Throws std::runtime_error if the closure exceeds max_size.
std::size_t closure_size(PointSpan generators, std::size_t max_size = 1 << 20);

/// X_{alpha,S} from Delta-word enumeration vs the union of |Delta| rotated
/// copies of the coding-enumerated attractor T_{alpha,S}.  The finite-depth
/// sets coincide, so the discrepancy is pure floating error.
VerificationReport check_main_theorem(const IFSSpec& spec, int depth,
                                      double eps, EnumerationCap cap = {});

/// X*_{alpha,S} from Delta_0-word enumeration vs rotated copies of the
/// attractor with constants (0, alpha, ..., alpha).
VerificationReport check_corollary(std::complex<double> alpha,
                                   const GeneratorSet& generators, int depth,
                                   double eps, EnumerationCap cap = {});

/// X_{alpha,theta} from GR-word enumeration vs the p rotated copies of the
/// two-map attractor psi_0 = alpha z, psi_1 = alpha e^{i theta} z + alpha.
VerificationReport check_kawamura_allen(std::complex<double> alpha,
                                        const RationalAngle& theta, int depth,
                                        double eps, EnumerationCap cap = {});

/// Brute-force multiplicative closure size vs lcm of the denominators.
VerificationReport check_group_order(const GeneratorSet& generators);

}  // namespace revolve
