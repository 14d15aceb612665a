#include "revolve/group.hpp"

#include <numeric>
#include <stdexcept>

namespace revolve {

struct RevolvingGroup::Impl {
  GeneratorSet generators;
  std::int64_t order = 1;
  std::vector<std::int64_t> step_exponents;  // a_0 == 0, a_1, ..., a_{m-1}
  std::vector<std::complex<double>> roots;   // e^{2*pi*i*k/order}

  explicit Impl(GeneratorSet s) : generators(std::move(s)) {
    for (std::size_t j = 1; j < generators.size(); ++j) {
      order = std::lcm(order, generators.angle(j).den());
    }
    step_exponents.reserve(generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto& theta = generators.angle(j);
      std::int64_t a = (theta.num() * (order / theta.den())) % order;
      if (a < 0) a += order;
      step_exponents.push_back(a);
    }
    roots.reserve(static_cast<std::size_t>(order));
    for (std::int64_t k = 0; k < order; ++k) {
      roots.push_back(unit_root(k, order));
    }
  }
};

RevolvingGroup::RevolvingGroup(GeneratorSet generators)
    : impl_(std::make_shared<const Impl>(std::move(generators))) {}

const GeneratorSet& RevolvingGroup::generators() const {
  return impl_->generators;
}

std::int64_t RevolvingGroup::order() const { return impl_->order; }

std::size_t RevolvingGroup::arity() const { return impl_->generators.size(); }

std::int64_t RevolvingGroup::step_exponent(std::size_t j) const {
  return impl_->step_exponents.at(j);
}

std::optional<std::size_t> RevolvingGroup::step_index(std::int64_t diff) const {
  if (diff < 0 || diff >= impl_->order) {
    diff %= impl_->order;
    if (diff < 0) diff += impl_->order;
  }
  const auto& steps = impl_->step_exponents;
  for (std::size_t j = 0; j < steps.size(); ++j) {
    if (steps[j] == diff) return j;
  }
  return std::nullopt;
}

bool RevolvingGroup::contains_exponent(std::int64_t k) const {
  return k >= 0 && k < impl_->order;
}

GroupElement RevolvingGroup::apply(GroupElement g, std::size_t j) const {
  return {(g.exponent + impl_->step_exponents.at(j)) % impl_->order};
}

GroupElement RevolvingGroup::apply_angle(GroupElement g,
                                         const RationalAngle& theta) const {
  for (std::size_t j = 0; j < impl_->generators.size(); ++j) {
    if (impl_->generators.angle(j) == theta) return apply(g, j);
  }
  throw std::invalid_argument("apply_angle: " + theta.str() +
                              " is not a generator angle of {" +
                              impl_->generators.str() + "}");
}

std::complex<double> RevolvingGroup::to_complex(GroupElement g) const {
  if (!contains_exponent(g.exponent)) {
    throw std::invalid_argument("to_complex: exponent out of range");
  }
  return impl_->roots[static_cast<std::size_t>(g.exponent)];
}

std::vector<GroupElement> RevolvingGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(impl_->order));
  for (std::int64_t k = 0; k < impl_->order; ++k) out.push_back({k});
  return out;
}

RevolvingGroup build_group(const GeneratorSet& generators) {
  return RevolvingGroup(generators);
}

}  // namespace revolve
