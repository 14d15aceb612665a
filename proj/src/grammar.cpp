#include "revolve/grammar.hpp"

#include <string>

namespace revolve {

namespace {

constexpr std::int64_t kCountSaturation = std::int64_t{1} << 62;

std::int64_t mul_sat(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kCountSaturation / b) return kCountSaturation;
  return a * b;
}

std::int64_t pow_sat(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out = mul_sat(out, base);
  return out;
}

std::int64_t add_sat(std::int64_t a, std::int64_t b) {
  if (a >= kCountSaturation - b) return kCountSaturation;
  return a + b;
}

std::string count_str(std::int64_t count) {
  if (count >= kCountSaturation) return ">= 2^62";
  return std::to_string(count);
}

void require_length(int length) {
  if (length < 1) {
    throw std::invalid_argument("word length must be >= 1");
  }
}

void check_cap(std::int64_t count, EnumerationCap cap) {
  if (count > cap.max_words) {
    throw cap_exceeded(count, cap.max_words);
  }
}

std::int64_t mod_order(std::int64_t a, std::int64_t L) {
  std::int64_t r = a % L;
  return r < 0 ? r + L : r;
}

}  // namespace

cap_exceeded::cap_exceeded(std::int64_t requested, std::int64_t cap)
    : std::runtime_error("enumeration refused: " + count_str(requested) +
                         " words exceed the cap of " + std::to_string(cap)),
      requested_(requested) {}

// --- validation ---------------------------------------------------------

bool validate_drc(const DeltaWord& w) {
  const auto& g = w.group();
  const std::int64_t L = g.order();
  for (std::size_t n = 1; n < w.size(); ++n) {
    const std::int64_t diff =
        mod_order(w.at(n).exponent - w.at(n - 1).exponent, L);
    if (!g.step_index(diff)) return false;
  }
  return true;
}

bool validate_dzrc(const DeltaZeroWord& w) {
  const auto& g = w.group();
  const std::int64_t L = g.order();
  std::optional<std::int64_t> last;
  for (const auto& e : w.entries()) {
    if (!e) continue;
    if (last) {
      const auto j = g.step_index(mod_order(*e - *last, L));
      if (!j || *j == 0) return false;  // staying in place is not a rotation
    }
    last = *e;
  }
  return true;
}

bool validate_grc(const GRWord& w) {
  const std::int64_t p = w.theta().den();
  std::optional<std::int64_t> last;
  for (const auto& e : w.entries()) {
    if (!e) continue;
    if (last && *e != (*last + 1) % p) return false;
    last = *e;
  }
  return true;
}

// --- counts --------------------------------------------------------------

std::int64_t count_drc_words(const RevolvingGroup& g, int length,
                             bool first_fixed) {
  require_length(length);
  const std::int64_t firsts = first_fixed ? 1 : g.order();
  return mul_sat(firsts, pow_sat(static_cast<std::int64_t>(g.arity()),
                                 length - 1));
}

std::int64_t count_dzrc_words(const RevolvingGroup& g, int length) {
  require_length(length);
  const auto m = static_cast<std::int64_t>(g.arity());
  if (m == 1) return add_sat(1, mul_sat(g.order(), length));
  // 1 (all-zero) + sum over the first nonzero position t of L * m^(N-t).
  const std::int64_t mn = pow_sat(m, length);
  if (mn >= kCountSaturation) return kCountSaturation;
  return add_sat(1, mul_sat(g.order(), (mn - 1) / (m - 1)));
}

std::int64_t count_grc_words(const RationalAngle& theta, int length) {
  require_length(length);
  if (theta.is_zero()) {
    throw std::invalid_argument("GRC grammar needs a nonzero revolving angle");
  }
  const std::int64_t pow2 = pow_sat(2, length);
  if (pow2 >= kCountSaturation) return kCountSaturation;
  return add_sat(1, mul_sat(theta.den(), pow2 - 1));
}

// --- enumeration ---------------------------------------------------------

namespace {

void drc_walk(const RevolvingGroup& g, std::vector<GroupElement>& elems,
              std::size_t pos, const std::function<void(const DeltaWord&)>& fn) {
  if (pos == elems.size()) {
    fn(DeltaWord(g, elems));
    return;
  }
  for (std::size_t j = 0; j < g.arity(); ++j) {
    elems[pos] = g.apply(elems[pos - 1], j);
    drc_walk(g, elems, pos + 1, fn);
  }
}

void dzrc_walk(const RevolvingGroup& g, std::vector<ZeroableEntry>& entries,
               std::size_t pos, std::optional<std::int64_t> last,
               const std::function<void(const DeltaZeroWord&)>& fn) {
  if (pos == entries.size()) {
    fn(DeltaZeroWord(g, entries));
    return;
  }
  entries[pos] = kZeroEntry;
  dzrc_walk(g, entries, pos + 1, last, fn);
  if (!last) {
    for (std::int64_t k = 0; k < g.order(); ++k) {
      entries[pos] = k;
      dzrc_walk(g, entries, pos + 1, k, fn);
    }
  } else {
    for (std::size_t j = 1; j < g.arity(); ++j) {
      const std::int64_t k = (*last + g.step_exponent(j)) % g.order();
      entries[pos] = k;
      dzrc_walk(g, entries, pos + 1, k, fn);
    }
  }
}

void grc_walk(const RationalAngle& theta, std::vector<ZeroableEntry>& entries,
              std::size_t pos, std::optional<std::int64_t> last,
              const std::function<void(const GRWord&)>& fn) {
  if (pos == entries.size()) {
    fn(GRWord(theta, entries));
    return;
  }
  const std::int64_t p = theta.den();
  entries[pos] = kZeroEntry;
  grc_walk(theta, entries, pos + 1, last, fn);
  if (!last) {
    for (std::int64_t e = 0; e < p; ++e) {
      entries[pos] = e;
      grc_walk(theta, entries, pos + 1, e, fn);
    }
  } else {
    const std::int64_t e = (*last + 1) % p;
    entries[pos] = e;
    grc_walk(theta, entries, pos + 1, e, fn);
  }
}

}  // namespace

void for_each_drc_word(const RevolvingGroup& g, int length,
                       std::optional<GroupElement> first, EnumerationCap cap,
                       const std::function<void(const DeltaWord&)>& fn) {
  check_cap(count_drc_words(g, length, first.has_value()), cap);
  if (first && !g.contains_exponent(first->exponent)) {
    throw std::invalid_argument("for_each_drc_word: first element not in Delta");
  }
  std::vector<GroupElement> elems(static_cast<std::size_t>(length));
  const std::int64_t lo = first ? first->exponent : 0;
  const std::int64_t hi = first ? first->exponent + 1 : g.order();
  for (std::int64_t k = lo; k < hi; ++k) {
    elems[0] = {k};
    drc_walk(g, elems, 1, fn);
  }
}

void for_each_dzrc_word(const RevolvingGroup& g, int length, EnumerationCap cap,
                        const std::function<void(const DeltaZeroWord&)>& fn) {
  check_cap(count_dzrc_words(g, length), cap);
  std::vector<ZeroableEntry> entries(static_cast<std::size_t>(length));
  dzrc_walk(g, entries, 0, std::nullopt, fn);
}

void for_each_grc_word(const RationalAngle& theta, int length,
                       EnumerationCap cap,
                       const std::function<void(const GRWord&)>& fn) {
  check_cap(count_grc_words(theta, length), cap);
  std::vector<ZeroableEntry> entries(static_cast<std::size_t>(length));
  grc_walk(theta, entries, 0, std::nullopt, fn);
}

std::vector<DeltaWord> enumerate_drc(const RevolvingGroup& g, int length,
                                     std::optional<GroupElement> first,
                                     EnumerationCap cap) {
  std::vector<DeltaWord> out;
  out.reserve(
      static_cast<std::size_t>(count_drc_words(g, length, first.has_value())));
  for_each_drc_word(g, length, first, cap,
                    [&](const DeltaWord& w) { out.push_back(w); });
  return out;
}

std::vector<DeltaZeroWord> enumerate_dzrc(const RevolvingGroup& g, int length,
                                          EnumerationCap cap) {
  std::vector<DeltaZeroWord> out;
  out.reserve(static_cast<std::size_t>(count_dzrc_words(g, length)));
  for_each_dzrc_word(g, length, cap,
                     [&](const DeltaZeroWord& w) { out.push_back(w); });
  return out;
}

std::vector<GRWord> enumerate_grc(const RationalAngle& theta, int length,
                                  EnumerationCap cap) {
  std::vector<GRWord> out;
  out.reserve(static_cast<std::size_t>(count_grc_words(theta, length)));
  for_each_grc_word(theta, length, cap,
                    [&](const GRWord& w) { out.push_back(w); });
  return out;
}

// --- sampling -------------------------------------------------------------

DeltaWord sample_drc(const RevolvingGroup& g, int length, std::mt19937_64& rng) {
  require_length(length);
  std::uniform_int_distribution<std::int64_t> pick_first(0, g.order() - 1);
  std::uniform_int_distribution<std::size_t> pick_step(0, g.arity() - 1);
  std::vector<GroupElement> elems(static_cast<std::size_t>(length));
  elems[0] = {pick_first(rng)};
  for (std::size_t n = 1; n < elems.size(); ++n) {
    elems[n] = g.apply(elems[n - 1], pick_step(rng));
  }
  return DeltaWord(g, std::move(elems));
}

DeltaZeroWord sample_dzrc(const RevolvingGroup& g, int length,
                          std::mt19937_64& rng) {
  require_length(length);
  const std::int64_t L = g.order();
  const auto m = static_cast<std::int64_t>(g.arity());
  std::vector<ZeroableEntry> entries(static_cast<std::size_t>(length));
  std::optional<std::int64_t> last;
  for (auto& entry : entries) {
    if (!last) {
      std::uniform_int_distribution<std::int64_t> pick(0, L);
      const std::int64_t r = pick(rng);
      entry = (r == 0) ? kZeroEntry : ZeroableEntry(r - 1);
    } else if (m == 1) {
      entry = kZeroEntry;  // no rotation available
    } else {
      std::uniform_int_distribution<std::int64_t> pick(0, m - 1);
      const std::int64_t r = pick(rng);
      entry = (r == 0) ? kZeroEntry
                       : ZeroableEntry(
                             (*last + g.step_exponent(static_cast<std::size_t>(
                                          r))) %
                             L);
    }
    if (entry) last = *entry;
  }
  return DeltaZeroWord(g, std::move(entries));
}

GRWord sample_grc(const RationalAngle& theta, int length, std::mt19937_64& rng) {
  require_length(length);
  if (theta.is_zero()) {
    throw std::invalid_argument("GRC grammar needs a nonzero revolving angle");
  }
  const std::int64_t p = theta.den();
  std::vector<ZeroableEntry> entries(static_cast<std::size_t>(length));
  std::optional<std::int64_t> last;
  for (auto& entry : entries) {
    if (!last) {
      std::uniform_int_distribution<std::int64_t> pick(0, p);
      const std::int64_t r = pick(rng);
      entry = (r == 0) ? kZeroEntry : ZeroableEntry(r - 1);
    } else {
      std::uniform_int_distribution<int> pick(0, 1);
      entry = (pick(rng) == 0) ? kZeroEntry : ZeroableEntry((*last + 1) % p);
    }
    if (entry) last = *entry;
  }
  return GRWord(theta, std::move(entries));
}

DeltaWord sample_drc(const RevolvingGroup& g, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_drc(g, length, rng);
}

DeltaZeroWord sample_dzrc(const RevolvingGroup& g, int length,
                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_dzrc(g, length, rng);
}

GRWord sample_grc(const RationalAngle& theta, int length, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_grc(theta, length, rng);
}

// --- conversions ----------------------------------------------------------

DeltaWord coding_to_delta(const CodingWord& x, const RevolvingGroup& g) {
  if (x.arity() != g.arity()) {
    throw std::invalid_argument("coding_to_delta: word arity " +
                                std::to_string(x.arity()) +
                                " does not match generator count " +
                                std::to_string(g.arity()));
  }
  std::vector<GroupElement> elems;
  elems.reserve(x.size() + 1);
  elems.push_back({0});
  for (std::size_t n = 0; n < x.size(); ++n) {
    elems.push_back(g.apply(elems.back(), static_cast<std::size_t>(x.digit(n))));
  }
  return DeltaWord(g, std::move(elems));
}

CodingWord delta_to_coding(const DeltaWord& w) {
  const auto& g = w.group();
  const std::int64_t L = g.order();
  std::vector<int> digits;
  digits.reserve(w.size() > 0 ? w.size() - 1 : 0);
  for (std::size_t n = 1; n < w.size(); ++n) {
    const auto j =
        g.step_index(mod_order(w.at(n).exponent - w.at(n - 1).exponent, L));
    if (!j) {
      throw std::invalid_argument(
          "delta_to_coding: step " + std::to_string(n) +
          " is not a generator rotation (word violates the DRC)");
    }
    digits.push_back(static_cast<int>(*j));
  }
  return CodingWord(std::move(digits), g.arity());
}

std::vector<std::complex<double>> constant_sequence(
    const DeltaWord& w, std::span<const std::complex<double>> constants) {
  if (w.size() < 2) {
    throw std::invalid_argument("constant_sequence: word must have length >= 2");
  }
  if (constants.size() != w.group().arity()) {
    throw std::invalid_argument(
        "constant_sequence: need one constant per generator angle");
  }
  const CodingWord steps = delta_to_coding(w);
  std::vector<std::complex<double>> out;
  out.reserve(steps.size());
  for (std::size_t n = 0; n < steps.size(); ++n) {
    out.push_back(constants[static_cast<std::size_t>(steps.digit(n))]);
  }
  return out;
}

DeltaZeroWord dzrc_from_coding(const CodingWord& x, const RevolvingGroup& g) {
  if (x.arity() != g.arity()) {
    throw std::invalid_argument("dzrc_from_coding: word arity " +
                                std::to_string(x.arity()) +
                                " does not match generator count " +
                                std::to_string(g.arity()));
  }
  std::vector<ZeroableEntry> entries;
  entries.reserve(x.size());
  std::int64_t rotation = 0;  // exponent of e^{i sum_{j<n} theta_{x_j}}
  for (std::size_t n = 0; n < x.size(); ++n) {
    const int digit = x.digit(n);
    entries.push_back(digit == 0 ? kZeroEntry : ZeroableEntry(rotation));
    rotation = (rotation + g.step_exponent(static_cast<std::size_t>(digit))) %
               g.order();
  }
  return DeltaZeroWord(g, std::move(entries));
}

}  // namespace revolve
