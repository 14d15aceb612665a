#include "revolve/words.hpp"

#include <sstream>
#include <stdexcept>

namespace revolve {

namespace {

std::int64_t parse_int(const std::string& token) {
  std::size_t pos = 0;
  std::int64_t value = std::stoll(token, &pos);
  if (pos != token.size()) {
    throw std::invalid_argument("malformed word entry '" + token + "'");
  }
  return value;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(token);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::string format_zeroable(const std::vector<ZeroableEntry>& entries) {
  std::string out;
  for (std::size_t n = 0; n < entries.size(); ++n) {
    if (n > 0) out += ',';
    if (entries[n]) {
      out += std::to_string(*entries[n]);
    } else {
      out += 'z';
    }
  }
  return out;
}

std::vector<ZeroableEntry> parse_zeroable(const std::string& text) {
  std::vector<ZeroableEntry> entries;
  for (const auto& token : split_commas(text)) {
    if (token == "z" || token == "Z") {
      entries.push_back(kZeroEntry);
    } else {
      entries.push_back(parse_int(token));
    }
  }
  return entries;
}

}  // namespace

CodingWord::CodingWord(std::vector<int> digits, std::size_t arity)
    : digits_(std::move(digits)), arity_(arity) {
  if (arity_ == 0) {
    throw std::invalid_argument("CodingWord: arity must be >= 1");
  }
  for (int d : digits_) {
    if (d < 0 || static_cast<std::size_t>(d) >= arity_) {
      throw std::invalid_argument("CodingWord: digit " + std::to_string(d) +
                                  " out of range [0," +
                                  std::to_string(arity_) + ")");
    }
  }
}

DeltaWord::DeltaWord(RevolvingGroup group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  for (GroupElement g : elements_) {
    if (!group_.contains_exponent(g.exponent)) {
      throw std::invalid_argument("DeltaWord: exponent " +
                                  std::to_string(g.exponent) +
                                  " not in [0," +
                                  std::to_string(group_.order()) + ")");
    }
  }
}

DeltaZeroWord::DeltaZeroWord(RevolvingGroup group,
                             std::vector<ZeroableEntry> entries)
    : group_(std::move(group)), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e && !group_.contains_exponent(*e)) {
      throw std::invalid_argument("DeltaZeroWord: exponent " +
                                  std::to_string(*e) + " not in [0," +
                                  std::to_string(group_.order()) + ")");
    }
  }
}

GRWord::GRWord(RationalAngle theta, std::vector<ZeroableEntry> entries)
    : theta_(theta), entries_(std::move(entries)) {
  if (theta_.is_zero()) {
    throw std::invalid_argument("GRWord: the revolving angle must be nonzero");
  }
  for (const auto& e : entries_) {
    if (e && (*e < 0 || *e >= theta_.den())) {
      throw std::invalid_argument("GRWord: power " + std::to_string(*e) +
                                  " not in [0," + std::to_string(theta_.den()) +
                                  ")");
    }
  }
}

std::complex<double> GRWord::value(std::size_t n) const {
  const auto& e = entries_[n];
  if (!e) return {0.0, 0.0};
  const std::int64_t p = theta_.den();
  return unit_root(theta_.num() * *e % p, p);
}

std::string format_word(const CodingWord& w) {
  if (w.arity() > 10) {
    throw std::invalid_argument(
        "format_word: digit strings support arity <= 10");
  }
  std::string out;
  out.reserve(w.size());
  for (int d : w.digits()) out += static_cast<char>('0' + d);
  return out;
}

std::string format_word(const DeltaWord& w) {
  std::string out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (n > 0) out += ',';
    out += std::to_string(w.at(n).exponent);
  }
  return out;
}

std::string format_word(const DeltaZeroWord& w) {
  return format_zeroable(w.entries());
}

std::string format_word(const GRWord& w) { return format_zeroable(w.entries()); }

CodingWord parse_coding_word(const std::string& text, std::size_t arity) {
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("parse_coding_word: invalid digit '" +
                                  std::string(1, c) + "'");
    }
    digits.push_back(c - '0');
  }
  return CodingWord(std::move(digits), arity);
}

DeltaWord parse_delta_word(const std::string& text, const RevolvingGroup& g) {
  std::vector<GroupElement> elements;
  for (const auto& token : split_commas(text)) {
    elements.push_back({parse_int(token)});
  }
  return DeltaWord(g, std::move(elements));
}

DeltaZeroWord parse_delta_zero_word(const std::string& text,
                                    const RevolvingGroup& g) {
  return DeltaZeroWord(g, parse_zeroable(text));
}

GRWord parse_gr_word(const std::string& text, const RationalAngle& theta) {
  return GRWord(theta, parse_zeroable(text));
}

}  // namespace revolve
