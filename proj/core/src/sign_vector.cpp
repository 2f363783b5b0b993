#include "ccells/sign_vector.hpp"

#include <sstream>

#include "ccells/errors.hpp"

namespace ccells {

namespace {

void check_label(int e) {
  if (e < 1 || e > kMaxElements) {
    throw InvalidElementError("element label " + std::to_string(e) + " outside 1.." +
                              std::to_string(kMaxElements));
  }
}

}  // namespace

ElementSet ElementSet::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

ElementSet ElementSet::of(std::span<const int> elements) {
  std::uint64_t bits = 0;
  for (int e : elements) {
    check_label(e);
    bits |= std::uint64_t{1} << (e - 1);
  }
  return ElementSet{bits};
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

SignVector::SignVector(int n, std::uint64_t pos, std::uint64_t neg) : n_(n), pos_(pos), neg_(neg) {
  if (n < 0 || n > kMaxElements) {
    throw DimensionError("sign vector size " + std::to_string(n) + " outside 0.." +
                         std::to_string(kMaxElements));
  }
  if ((pos & neg) != 0) {
    throw InvalidElementError("positive and negative parts overlap");
  }
  if (((pos | neg) & ~ground_mask(n)) != 0) {
    throw InvalidElementError("support exceeds ground set of size " + std::to_string(n));
  }
}

SignVector SignVector::parse(std::string_view text) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
  int n = 0;
  for (std::size_t i = 0; i < text.size(); ++n) {
    if (n >= kMaxElements) {
      throw DimensionError("sign vector longer than " + std::to_string(kMaxElements));
    }
    const std::uint64_t bit = std::uint64_t{1} << n;
    if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      neg |= bit;
      i += kUnicodeMinus.size();
      continue;
    }
    switch (text[i]) {
      case '+': pos |= bit; break;
      case '-': neg |= bit; break;
      case '0': break;
      default:
        throw FormatError(std::string("unexpected character '") + text[i] + "' in sign vector");
    }
    ++i;
  }
  return SignVector(n, pos, neg);
}

int SignVector::sign(int e) const {
  if (e < 1 || e > n_) {
    throw InvalidElementError("element " + std::to_string(e) + " outside 1.." + std::to_string(n_));
  }
  const std::uint64_t bit = std::uint64_t{1} << (e - 1);
  if (pos_ & bit) return 1;
  if (neg_ & bit) return -1;
  return 0;
}

std::string SignVector::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (pos_ & bit) s[i] = '+';
    else if (neg_ & bit) s[i] = '-';
  }
  return s;
}

ElementSet separation(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) {
    throw DimensionError("separation of sign vectors of sizes " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()));
  }
  return ElementSet{(x.pos_bits() & y.neg_bits()) | (x.neg_bits() & y.pos_bits())};
}

bool orthogonal(const SignVector& x, const SignVector& y) {
  const bool sep = !separation(x, y).empty();
  const bool sep_neg = !separation(x, -y).empty();
  return sep == sep_neg;
}

SignVector flip(const SignVector& t, int e) {
  if (!t.support().contains(e) || e > t.size()) {
    throw InvalidElementError("cannot flip element " + std::to_string(e) + " outside the support");
  }
  const std::uint64_t bit = std::uint64_t{1} << (e - 1);
  return SignVector(t.size(), t.pos_bits() ^ bit, t.neg_bits() ^ bit);
}

}  // namespace ccells
