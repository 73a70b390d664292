#pragma once

#include "aktangent/bigint.hpp"

#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <string_view>

namespace aktangent {

/// Expected dimension d(d+3)/2 of the space of plane curves of degree d.
inline long long curve_space_dimension(long long d) { return d * (d + 3) / 2; }

/// A multiset of A_i singularity types: index i >= 1 maps to the number of
/// (ordered) singular points of type A_i. Zero counts are never stored, so two
/// profiles compare equal iff they describe the same multiset.
class SingularityProfile {
 public:
  SingularityProfile() = default;

  /// Parses whitespace- or comma-separated tokens `A<i>` or `A<i>^<m>`
  /// (case-insensitive `A`). Repeated indices accumulate. `none` denotes the
  /// empty profile.
  static SingularityProfile parse(std::string_view text);

  static SingularityProfile single(int index, int count = 1) {
    SingularityProfile p;
    p.add(index, count);
    return p;
  }

  void add(int index, int count = 1) {
    if (index < 1) throw PreconditionError("singularity index must be >= 1 (A_0 is a smooth point)");
    if (count < 0) throw PreconditionError("singularity count must be >= 0");
    if (count == 0) return;
    counts_[index] += count;
  }

  /// delta_i; zero when absent.
  int count(int index) const {
    auto it = counts_.find(index);
    return it == counts_.end() ? 0 : it->second;
  }
  const std::map<int, int>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  /// Largest index with a nonzero count, 0 for the empty profile.
  int max_index() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

  /// Total number of singular points.
  int size() const {
    int n = 0;
    for (const auto& [i, m] : counts_) n += m;
    return n;
  }

  /// Sum of i * delta_i: the number of conditions the singularities impose.
  long long codimension() const {
    long long c = 0;
    for (const auto& [i, m] : counts_) c += static_cast<long long>(i) * m;
    return c;
  }

  /// Number of generic points left for a tangency count in degree d:
  /// d(d+3)/2 - (1 + codimension).
  long long free_points(long long d) const { return curve_space_dimension(d) - (1 + codimension()); }

  /// Degree bound k + 2 delta_1 + delta_2 + ... + delta_k from which the
  /// tangency recursion is proven.
  long long min_valid_degree() const {
    long long b = max_index();
    for (const auto& [i, m] : counts_) b += (i == 1 ? 2LL : 1LL) * m;
    return b;
  }

  /// Product of delta_i!: the ordered/unordered conversion factor.
  BigInt symmetry_factor() const {
    BigInt f = 1;
    for (const auto& [i, m] : counts_) f *= factorial(static_cast<unsigned>(m));
    return f;
  }

  /// The profile with one fewer A_index point (used for conditioned keys).
  SingularityProfile without_one(int index) const {
    SingularityProfile p = *this;
    auto it = p.counts_.find(index);
    if (it == p.counts_.end()) throw PreconditionError("profile has no A" + std::to_string(index) + " point");
    if (--it->second == 0) p.counts_.erase(it);
    return p;
  }

  /// Canonical text: ascending index, `A<i>` or `A<i>^<m>`, joined by `sep`;
  /// `none` for the empty profile.
  std::string to_string(std::string_view sep = " ") const {
    if (counts_.empty()) return "none";
    std::string out;
    for (const auto& [i, m] : counts_) {
      if (!out.empty()) out += sep;
      out += "A" + std::to_string(i);
      if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
  }

  friend bool operator==(const SingularityProfile&, const SingularityProfile&) = default;
  friend auto operator<=>(const SingularityProfile& a, const SingularityProfile& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::map<int, int> counts_;
};

inline SingularityProfile SingularityProfile::parse(std::string_view text) {
  SingularityProfile p;
  std::string token;
  bool saw_none = false;
  int tokens = 0;
  auto parse_int = [&](std::string_view s, const std::string& what) {
    if (s.empty() || s.size() > 6) throw ParseError("profile token '" + token + "': bad " + what);
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("profile token '" + token + "': bad " + what);
    return std::stoi(std::string(s));
  };
  auto flush = [&]() {
    if (token.empty()) return;
    ++tokens;
    std::string lower;
    for (char ch : token) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "none") {
      saw_none = true;
      token.clear();
      return;
    }
    if (lower[0] != 'a') throw ParseError("profile token '" + token + "' must start with 'A'");
    const std::string_view body = std::string_view(token).substr(1);
    const auto caret = body.find('^');
    const int index = parse_int(body.substr(0, caret), "index");
    const int mult = caret == std::string_view::npos ? 1 : parse_int(body.substr(caret + 1), "multiplicity");
    if (index < 1) throw ParseError("profile token '" + token + "': index must be >= 1");
    if (mult < 1) throw ParseError("profile token '" + token + "': multiplicity must be >= 1");
    p.add(index, mult);
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  if (saw_none && tokens > 1) throw ParseError("'none' cannot be combined with other profile tokens");
  if (tokens == 0) throw ParseError("empty profile (write 'none' for no singularities)");
  return p;
}

}  // namespace aktangent
