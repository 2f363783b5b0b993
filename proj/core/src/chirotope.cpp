#include "ccells/chirotope.hpp"

#include <algorithm>
#include <cctype>

#include "ccells/errors.hpp"

namespace ccells {

namespace {

SubsetIndex make_index(int n, int r, SubsetOrder order) {
  if (r < 1 || n < r || n > kMaxElements) {
    throw ParameterError("chirotope needs 1 <= r <= n <= 64, got n=" + std::to_string(n) +
                         " r=" + std::to_string(r));
  }
  return SubsetIndex(n, r, order);
}

}  // namespace

Chirotope::Chirotope(int n, int r, std::vector<std::int8_t> signs, SubsetOrder order)
    : index_(make_index(n, r, order)), signs_(std::move(signs)) {
  if (signs_.size() != index_.count()) {
    throw FormatError("chirotope needs " + std::to_string(index_.count()) + " signs, got " +
                      std::to_string(signs_.size()));
  }
  for (std::int8_t s : signs_) {
    if (s != 1 && s != -1) throw FormatError("chirotope entries must be +1 or -1");
  }
}

Chirotope parse_chirotope(std::string_view text, int n, int r, SubsetOrder order) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  const SubsetIndex index = make_index(n, r, order);
  std::vector<std::int8_t> signs;
  signs.reserve(index.count());
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      signs.push_back(-1);
      i += kUnicodeMinus.size();
      continue;
    }
    const char c = text[i++];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (c == '0') {
      throw FormatError("non-uniform input not supported (found '0' sign)");
    } else {
      throw FormatError(std::string("unexpected character '") + c + "' in chirotope");
    }
  }
  if (signs.size() != index.count()) {
    throw FormatError("chirotope for n=" + std::to_string(n) + " r=" + std::to_string(r) +
                      " needs " + std::to_string(index.count()) + " signs, got " +
                      std::to_string(signs.size()));
  }
  return Chirotope(n, r, std::move(signs), order);
}

std::string serialize_chirotope(const Chirotope& chi) {
  std::string out;
  out.reserve(chi.signs().size());
  for (std::int8_t s : chi.signs()) out.push_back(s > 0 ? '+' : '-');
  return out;
}

Chirotope alternating_chirotope(int n, int r, SubsetOrder order) {
  const SubsetIndex index = make_index(n, r, order);
  return Chirotope(n, r, std::vector<std::int8_t>(index.count(), 1), order);
}

Chirotope reorient(const Chirotope& chi, ElementSet flipped) {
  if (flipped.max_element() > chi.elements()) {
    throw InvalidElementError("reorientation set " + flipped.to_string() +
                              " exceeds ground set of size " + std::to_string(chi.elements()));
  }
  std::vector<std::int8_t> signs(chi.signs().begin(), chi.signs().end());
  for (std::uint64_t i = 0; i < signs.size(); ++i) {
    if ((chi.index().unrank_set(i) & flipped).size() % 2 == 1) signs[i] = -signs[i];
  }
  return Chirotope(chi.elements(), chi.rank(), std::move(signs), chi.order());
}

Chirotope relabel(const Chirotope& chi, std::span<const int> perm) {
  const int n = chi.elements();
  if (static_cast<int>(perm.size()) != n) {
    throw DimensionError("permutation of size " + std::to_string(perm.size()) +
                         " for ground set of size " + std::to_string(n));
  }
  std::vector<int> inverse(static_cast<std::size_t>(n) + 1, 0);
  for (int e = 1; e <= n; ++e) {
    const int image = perm[e - 1];
    if (image < 1 || image > n || inverse[image] != 0) {
      throw InvalidElementError("relabeling is not a permutation of 1.." + std::to_string(n));
    }
    inverse[image] = e;
  }
  const SubsetIndex& index = chi.index();
  std::vector<std::int8_t> signs(index.count());
  for (std::uint64_t i = 0; i < index.count(); ++i) {
    std::vector<int> preimage = index.unrank(i);
    for (int& e : preimage) e = inverse[e];
    int inversions = 0;
    for (std::size_t a = 0; a < preimage.size(); ++a) {
      for (std::size_t b = a + 1; b < preimage.size(); ++b) {
        if (preimage[a] > preimage[b]) ++inversions;
      }
    }
    std::sort(preimage.begin(), preimage.end());
    const int s = chi.sign_of(preimage);
    signs[i] = static_cast<std::int8_t>(inversions % 2 == 0 ? s : -s);
  }
  return Chirotope(n, chi.rank(), std::move(signs), chi.order());
}

Chirotope with_order(const Chirotope& chi, SubsetOrder order) {
  if (order == chi.order()) return chi;
  const SubsetIndex target(chi.elements(), chi.rank(), order);
  std::vector<std::int8_t> signs(target.count());
  for (std::uint64_t i = 0; i < target.count(); ++i) signs[i] = chi.sign_of(target.unrank_set(i));
  return Chirotope(chi.elements(), chi.rank(), std::move(signs), order);
}

}  // namespace ccells
