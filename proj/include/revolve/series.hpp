#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "revolve/ifs.hpp"

namespace revolve {

/// Depth-N partial sum sum_{n=1}^{N} alpha^{n-1} s_n gamma_n, where (s_n)
/// is the constant sequence of the word.  A depth-N sum consumes a word of
/// length N+1 because s_N depends on gamma_{N+1}.  Produces bit-identical
/// results to eval_coding on the corresponding coding word.
std::complex<double> eval_delta_word(const IFSSpec& spec, const DeltaWord& w);

/// sum_{n=1}^{N} delta_n alpha^n (powers start at 1).
std::complex<double> eval_grs_word(std::complex<double> alpha, const GRWord& w);

/// sum_{n=1}^{N} delta_n alpha^n with the zero symbol contributing nothing.
std::complex<double> eval_dzrc_word(std::complex<double> alpha,
                                    const DeltaZeroWord& w);

// X_{alpha,S}: series over Delta-revolving words.  Exhaustive clouds
// enumerate the gamma_1 = 1 words only and apply the |Delta| rotations
// afterward.
PointCloud cloud_x_exhaustive(const IFSSpec& spec, int depth,
                              EnumerationCap cap = {});
PointCloud cloud_x_sampled(const IFSSpec& spec, int depth,
                           std::int64_t n_points, std::uint64_t seed);

// X*_{alpha,S}: series over Delta_0-revolving words.
PointCloud cloud_xstar_exhaustive(std::complex<double> alpha,
                                  const GeneratorSet& generators, int depth,
                                  EnumerationCap cap = {});
PointCloud cloud_xstar_sampled(std::complex<double> alpha,
                               const GeneratorSet& generators, int depth,
                               std::int64_t n_points, std::uint64_t seed);

// X_{alpha,theta}: series over generalized revolving words.
PointCloud cloud_grs_exhaustive(std::complex<double> alpha,
                                const RationalAngle& theta, int depth,
                                EnumerationCap cap = {});
PointCloud cloud_grs_sampled(std::complex<double> alpha,
                             const RationalAngle& theta, int depth,
                             std::int64_t n_points, std::uint64_t seed);

/// Which sequence-parametrized set a spec describes.
enum class SeriesKind { delta, delta_zero, grs };

/// A renderable set: the grammar kind plus the (alpha, S, c) data.  For
/// delta_zero and grs the constants are the implied (0, alpha, ..., alpha).
struct SeriesSpec {
  SeriesKind kind;
  IFSSpec ifs;

  std::complex<double> alpha() const { return ifs.alpha(); }
  const GeneratorSet& generators() const { return ifs.generators(); }
};

/// Builds a SeriesSpec, filling in implied constants.  delta requires
/// explicit constants; delta_zero and grs forbid them.  grs additionally
/// requires exactly one nonzero angle.
SeriesSpec make_series_spec(
    SeriesKind kind, std::complex<double> alpha, GeneratorSet generators,
    std::optional<std::vector<std::complex<double>>> constants);

const char* series_kind_name(SeriesKind kind);
std::optional<SeriesKind> series_kind_from_name(const std::string& name);

PointCloud make_cloud_exhaustive(const SeriesSpec& spec, int depth,
                                 EnumerationCap cap = {});
PointCloud make_cloud_sampled(const SeriesSpec& spec, int depth,
                              std::int64_t n_points, std::uint64_t seed);

/// max|c| |alpha|^N / (1 - |alpha|): every infinite extension of a depth-N
/// word lands within this distance of the partial sum.
double tail_bound(const IFSSpec& spec, int depth);

}  // namespace revolve
