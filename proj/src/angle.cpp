#include "revolve/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace revolve {

namespace {

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

RationalAngle::RationalAngle(std::int64_t q, std::int64_t p) {
  if (p < 1) {
    throw std::invalid_argument("RationalAngle: denominator must be >= 1");
  }
  // Reduce q modulo p into (-p/2, p/2] so the angle lands in (-pi, pi].
  std::int64_t r = mod_positive(q, p);
  if (2 * r > p) r -= p;
  if (r == 0) {
    q_ = 0;
    p_ = 1;
    return;
  }
  const std::int64_t g = std::gcd(r < 0 ? -r : r, p);
  q_ = r / g;
  p_ = p / g;
}

double RationalAngle::radians() const {
  return 2.0 * std::numbers::pi * static_cast<double>(q_) /
         static_cast<double>(p_);
}

std::complex<double> RationalAngle::unit() const {
  return unit_root(q_, p_);
}

std::string RationalAngle::str() const {
  if (q_ == 0) return "0";
  std::ostringstream out;
  out << q_ << '/' << p_;
  return out.str();
}

RationalAngle make_angle(std::int64_t q, std::int64_t p) {
  return RationalAngle(q, p);
}

RationalAngle parse_angle(const std::string& text) {
  std::istringstream in(text);
  std::int64_t q = 0;
  std::int64_t p = 1;
  if (!(in >> q)) {
    throw std::invalid_argument("parse_angle: expected 'q' or 'q/p', got '" +
                                text + "'");
  }
  char slash = 0;
  if (in >> slash) {
    if (slash != '/' || !(in >> p)) {
      throw std::invalid_argument("parse_angle: expected 'q/p', got '" + text +
                                  "'");
    }
  }
  char trailing = 0;
  if (in >> trailing) {
    throw std::invalid_argument("parse_angle: trailing characters in '" + text +
                                "'");
  }
  return RationalAngle(q, p);
}

std::complex<double> unit_root(std::int64_t k, std::int64_t L) {
  if (L < 1) throw std::invalid_argument("unit_root: order must be >= 1");
  k = mod_positive(k, L);
  // Quarter turns are exact; everything else goes through cos/sin.
  if ((4 * k) % L == 0) {
    switch ((4 * k) / L) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                   static_cast<double>(L);
  return {std::cos(t), std::sin(t)};
}

GeneratorSet::GeneratorSet(std::vector<RationalAngle> angles)
    : angles_(std::move(angles)) {
  if (angles_.empty()) {
    throw std::invalid_argument("GeneratorSet: need at least one angle");
  }
  if (!angles_.front().is_zero()) {
    throw std::invalid_argument("GeneratorSet: theta_0 must be the zero angle");
  }
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    for (std::size_t j = i + 1; j < angles_.size(); ++j) {
      if (angles_[i] == angles_[j]) {
        throw std::invalid_argument("GeneratorSet: angles must be distinct (" +
                                    angles_[i].str() + " repeats)");
      }
    }
  }
}

std::string GeneratorSet::str() const {
  std::string out;
  for (std::size_t j = 0; j < angles_.size(); ++j) {
    if (j > 0) out += ',';
    out += angles_[j].str();
  }
  return out;
}

}  // namespace revolve
