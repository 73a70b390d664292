#pragma once

// Memoized Caporaso-Harris recursion for generalized (possibly reducible)
// relative Severi degrees N^{d,delta}(alpha, beta): the number of reduced
// degree-d curves with delta nodes, not containing a fixed line L, having
// alpha_k contacts of order k with L at fixed general points, beta_k contacts
// of order k at unassigned points, and passing through
//
//   n = d(d+3)/2 - delta - I(alpha) - I(beta) + |beta|
//
// general points, where I(a) = sum k a_k and |a| = sum a_k. The recursion:
//
//   N^{d,delta}(alpha, beta) =
//       sum_{k: beta_k > 0} k N^{d,delta}(alpha + e_k, beta - e_k)
//     + sum I^{beta' - beta} C(alpha, alpha') C(beta', beta) N^{d-1,delta'}(alpha', beta')
//
// with the second sum over alpha' <= alpha, beta' >= beta, I(alpha') + I(beta')
// = d - 1 and delta' = delta + |beta' - beta| - (d - 1) >= 0. Base case: a line
// (d = 1, delta = 0) satisfying its single contact condition is unique.
//
// Conventions: a key with n < 0 or delta < 0 has value 0. A key with n == 0
// and d >= 2 also has value 0, because a reduced nodal curve has at most
// d(d-1)/2 nodes and so every nonzero key has n >= d.

#include "aktangent/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace aktangent {

/// Contact data with the fixed line. Entry k-1 of each vector holds the
/// number of contacts of order k; trailing zeros are trimmed.
struct TangencyPair {
  std::vector<int> alpha;
  std::vector<int> beta;

  TangencyPair() = default;
  TangencyPair(std::vector<int> a, std::vector<int> b) : alpha(std::move(a)), beta(std::move(b)) { trim(); }

  static long long weighted(const std::vector<int>& v) {
    long long s = 0;
    for (std::size_t k = 0; k < v.size(); ++k) s += static_cast<long long>(k + 1) * v[k];
    return s;
  }
  static long long total(const std::vector<int>& v) {
    long long s = 0;
    for (int x : v) s += x;
    return s;
  }

  /// I(alpha) + I(beta): the intersection number with the line.
  long long intersection() const { return weighted(alpha) + weighted(beta); }

  void trim() {
    while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
    while (!beta.empty() && beta.back() == 0) beta.pop_back();
  }

  friend bool operator==(const TangencyPair&, const TangencyPair&) = default;
};

/// Memoization key: degree, node count and contact data.
struct CHKey {
  int d = 0;
  int delta = 0;
  TangencyPair pair;

  /// Number of general points the curves must pass through.
  long long point_conditions() const {
    return static_cast<long long>(d) * (d + 3) / 2 - delta - TangencyPair::weighted(pair.alpha) -
           TangencyPair::weighted(pair.beta) + TangencyPair::total(pair.beta);
  }

  std::string encode() const {
    std::string s;
    // d and delta take two bytes each (delta reaches d(d-1)/2); the
    // contact entries are bounded by d and take one.
    s.reserve(6 + pair.alpha.size() + pair.beta.size());
    s.push_back(static_cast<char>(d & 0xff));
    s.push_back(static_cast<char>(d >> 8));
    s.push_back(static_cast<char>(delta & 0xff));
    s.push_back(static_cast<char>(delta >> 8));
    s.push_back(static_cast<char>(pair.alpha.size()));
    for (int a : pair.alpha) s.push_back(static_cast<char>(a));
    for (int b : pair.beta) s.push_back(static_cast<char>(b));
    return s;
  }
};

class CaporasoHarris {
 public:
  /// Largest degree accepted; keeps every key component within one byte.
  static constexpr int kMaxDegree = 120;
  static constexpr const char* kCacheFormat = "aktangent-ch-memo v1";

  /// N^{d,delta}(alpha, beta). Throws PreconditionError when
  /// I(alpha) + I(beta) != d or an entry is negative.
  BigInt severi(const CHKey& key) {
    validate(key);
    return eval(key.d, key.delta, key.pair.alpha, key.pair.beta);
  }

  BigInt severi(int d, int delta, const TangencyPair& pair) { return severi(CHKey{d, delta, pair}); }

  /// delta-nodal degree-d curves tangent to the line at one unassigned point,
  /// through d(d+3)/2 - 1 - delta general points (unordered nodes).
  BigInt tangent(int d, int delta) {
    if (d < 2) throw PreconditionError("tangent Severi degree needs d >= 2");
    if (delta < 0) throw PreconditionError("node count must be >= 0");
    return severi(d, delta, tangent_pair(d));
  }

  /// Classical delta-nodal Severi degree (unordered nodes).
  BigInt plain(int d, int delta) {
    if (d < 1) throw PreconditionError("degree must be >= 1");
    if (delta < 0) throw PreconditionError("node count must be >= 0");
    return severi(d, delta, TangencyPair({}, {d}));
  }

  static TangencyPair tangent_pair(int d) {
    std::vector<int> beta{d - 2, 1};
    return TangencyPair({}, beta);
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

  void clear() {
    std::unique_lock lock(mu_);
    memo_.clear();
  }

  /// Writes the memo as a versioned line file:
  ///   header, then `d delta a1 .. ak | b1 .. bm value` per entry, then a
  ///   `# checksum <hex>` trailer over all entry lines.
  void save_cache(const std::filesystem::path& file) const;

  /// Merges a cache file into the memo. A missing, corrupt or mismatched
  /// file is ignored entirely and the reason returned; nothing is merged
  /// unless the whole file validates.
  std::optional<std::string> load_cache(const std::filesystem::path& file);

 private:
  static void validate(const CHKey& key) {
    if (key.d < 0 || key.d > kMaxDegree) throw PreconditionError("degree out of range");
    for (int a : key.pair.alpha)
      if (a < 0) throw PreconditionError("alpha entries must be >= 0");
    for (int b : key.pair.beta)
      if (b < 0) throw PreconditionError("beta entries must be >= 0");
    if (key.pair.intersection() != key.d)
      throw PreconditionError("I(alpha) + I(beta) must equal the degree " + std::to_string(key.d));
  }

  std::optional<BigInt> lookup(const std::string& k) const {
    std::shared_lock lock(mu_);
    auto it = memo_.find(k);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }

  void store(std::string k, const BigInt& v) {
    std::unique_lock lock(mu_);
    memo_.try_emplace(std::move(k), v);
  }

  BigInt eval(int d, int delta, const std::vector<int>& alpha, const std::vector<int>& beta);

  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, BigInt> memo_;
};

namespace detail {

inline void trim(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Calls fn(gamma) for every multiplicity vector gamma with sum k*gamma_k ==
/// weight and parts of size at most max_part.
inline void for_each_partition(int weight, int max_part, std::vector<int>& gamma,
                               const std::function<void(const std::vector<int>&)>& fn) {
  if (weight == 0) {
    fn(gamma);
    return;
  }
  if (max_part == 0) return;
  const int part = std::min(max_part, weight);
  for (int copies = weight / part; copies >= 0; --copies) {
    if (static_cast<int>(gamma.size()) < part) gamma.resize(static_cast<std::size_t>(part), 0);
    gamma[static_cast<std::size_t>(part - 1)] = copies;
    for_each_partition(weight - copies * part, part - 1, gamma, fn);
    gamma[static_cast<std::size_t>(part - 1)] = 0;
  }
}

}  // namespace detail

inline BigInt CaporasoHarris::eval(int d, int delta, const std::vector<int>& alpha, const std::vector<int>& beta) {
  if (delta < 0) return 0;
  const CHKey key{d, delta, TangencyPair(alpha, beta)};
  const long long n = key.point_conditions();
  if (n < 0) return 0;
  if (d == 0) return delta == 0 ? 1 : 0;
  if (d == 1) return delta == 0 ? 1 : 0;
  if (n == 0) return 0;

  const std::string k = key.encode();
  if (auto hit = lookup(k)) return *hit;

  BigInt total = 0;

  // Specialize a point onto L where the curve meets L with an unassigned
  // contact of order k: that contact becomes fixed.
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    if (beta[idx] == 0) continue;
    std::vector<int> a2 = alpha;
    std::vector<int> b2 = beta;
    if (a2.size() <= idx) a2.resize(idx + 1, 0);
    a2[idx] += 1;
    b2[idx] -= 1;
    detail::trim(b2);
    assert(CHKey({d, delta, TangencyPair(a2, b2)}).point_conditions() == n - 1);
    total += BigInt(static_cast<long>(idx + 1)) * eval(d, delta, a2, b2);
  }

  // The limit curve contains L: the residual curve of degree d-1 keeps a
  // subset alpha' of the fixed contacts and gains new unassigned ones.
  const long long i_beta = TangencyPair::weighted(beta);
  std::vector<int> sub(alpha.size(), 0);
  std::function<void(std::size_t, long long)> choose_alpha = [&](std::size_t pos, long long i_sub) {
    if (pos == alpha.size()) {
      const long long rest = (d - 1) - i_sub - i_beta;
      if (rest < 0) return;
      BigInt alpha_coeff = seq_binomial(alpha, sub);
      std::vector<int> sub_trim = sub;
      detail::trim(sub_trim);
      std::vector<int> gamma;
      detail::for_each_partition(static_cast<int>(rest), d - 1, gamma, [&](const std::vector<int>& g) {
        const long long new_points = TangencyPair::total(g);
        const long long delta2 = delta + new_points - (d - 1);
        if (delta2 < 0) return;
        std::vector<int> b2 = beta;
        if (b2.size() < g.size()) b2.resize(g.size(), 0);
        BigInt weight = 1;
        for (std::size_t j = 0; j < g.size(); ++j) {
          b2[j] += g[j];
          for (int c = 0; c < g[j]; ++c) weight *= static_cast<long>(j + 1);
        }
        detail::trim(b2);
        const BigInt coeff = weight * alpha_coeff * seq_binomial(b2, beta);
        assert(CHKey({d - 1, static_cast<int>(delta2), TangencyPair(sub_trim, b2)}).point_conditions() == n - 1);
        total += coeff * eval(d - 1, static_cast<int>(delta2), sub_trim, b2);
      });
      return;
    }
    for (int take = 0; take <= alpha[pos]; ++take) {
      const long long i_next = i_sub + static_cast<long long>(pos + 1) * take;
      if (i_next + i_beta > d - 1) break;
      sub[pos] = take;
      choose_alpha(pos + 1, i_next);
    }
    sub[pos] = 0;
  };
  choose_alpha(0, 0);

  store(k, total);
  return total;
}

namespace detail {

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string format_entry(const std::string& encoded, const BigInt& value) {
  const auto* p = reinterpret_cast<const unsigned char*>(encoded.data());
  const int d = p[0] | (p[1] << 8);
  const int delta = p[2] | (p[3] << 8);
  const std::size_t na = p[4];
  std::ostringstream os;
  os << d << ' ' << delta;
  for (std::size_t i = 0; i < na; ++i) os << ' ' << static_cast<int>(p[5 + i]);
  os << " |";
  for (std::size_t i = 5 + na; i < encoded.size(); ++i) os << ' ' << static_cast<int>(p[i]);
  os << ' ' << value.str();
  return os.str();
}

}  // namespace detail

inline void CaporasoHarris::save_cache(const std::filesystem::path& file) const {
  std::vector<std::string> lines;
  {
    std::shared_lock lock(mu_);
    lines.reserve(memo_.size());
    for (const auto& [k, v] : memo_) lines.push_back(detail::format_entry(k, v));
  }
  std::sort(lines.begin(), lines.end());
  std::uint64_t h = detail::fnv1a("");
  std::ofstream out(file);
  if (!out) throw DataError("cannot write cache file " + file.string());
  out << kCacheFormat << '\n';
  for (const auto& l : lines) {
    out << l << '\n';
    h = detail::fnv1a(l + "\n", h);
  }
  out << "# checksum " << std::hex << h << '\n';
}

inline std::optional<std::string> CaporasoHarris::load_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return "cannot open " + file.string();
  std::string line;
  if (!std::getline(in, line) || line != kCacheFormat) return "unrecognized cache header";
  std::vector<std::pair<std::string, BigInt>> entries;
  std::uint64_t h = detail::fnv1a("");
  bool have_checksum = false;
  while (std::getline(in, line)) {
    if (line.rfind("# checksum ", 0) == 0) {
      std::ostringstream expect;
      expect << std::hex << h;
      if (line.substr(11) != expect.str()) return "checksum mismatch";
      have_checksum = true;
      if (std::getline(in, line)) return "trailing data after checksum";
      break;
    }
    h = detail::fnv1a(line + "\n", h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    auto bar = std::find(tok.begin(), tok.end(), "|");
    if (tok.size() < 4 || bar == tok.end() || bar - tok.begin() < 2 || tok.end() - bar < 2)
      return "malformed entry: " + line;
    try {
      auto to_int = [](const std::string& s, int max) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size() || v < 0 || v > max) throw DataError("field out of range");
        return v;
      };
      CHKey key;
      key.d = to_int(tok[0], kMaxDegree);
      key.delta = to_int(tok[1], 65535);
      std::vector<int> a, b;
      for (auto it = tok.begin() + 2; it != bar; ++it) a.push_back(to_int(*it, kMaxDegree));
      for (auto it = bar + 1; it + 1 != tok.end(); ++it) b.push_back(to_int(*it, kMaxDegree));
      key.pair = TangencyPair(a, b);
      if (key.pair.alpha != a || key.pair.beta != b) return "untrimmed entry: " + line;
      if (key.pair.intersection() != key.d) return "inconsistent entry: " + line;
      BigInt value = parse_bigint(tok.back());
      if (value < 0) return "negative value: " + line;
      entries.emplace_back(key.encode(), std::move(value));
    } catch (const std::exception&) {
      return "malformed entry: " + line;
    }
  }
  if (!have_checksum) return "missing checksum";
  std::unique_lock lock(mu_);
  for (auto& [k, v] : entries) memo_.try_emplace(k, std::move(v));
  return std::nullopt;
}

}  // namespace aktangent
