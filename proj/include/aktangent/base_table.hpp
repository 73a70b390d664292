#pragma once

// Ingested characteristic numbers. Two record kinds, one per line:
//
//   N  d=<int> profile=<profile> value=<int>             N_d(profile)
//   NL d=<int> profile=<profile> cond=A<i> value=<int>   N_d(profile; L_{A_i})
//
// `#` starts a comment; blank lines are ignored. A profile containing spaces
// must be double-quoted; commas need no quoting (profile=A1,A4).

#include "aktangent/bigint.hpp"
#include "aktangent/profile.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace aktangent {

class BaseValueTable {
 public:
  using PlainKey = std::pair<long long, SingularityProfile>;
  using ConditionedKey = std::tuple<long long, SingularityProfile, int>;

  static BaseValueTable parse(std::istream& in, const std::string& source = "<input>");
  static BaseValueTable load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot open table file " + file.string());
    return parse(in, file.string());
  }

  /// Adds N_d(profile); duplicate keys and negative values are errors.
  void add_plain(long long d, const SingularityProfile& profile, BigInt value) {
    check_common(d, value);
    if (!plain_.try_emplace({d, profile}, std::move(value)).second)
      throw DataError("duplicate N entry for d=" + std::to_string(d) + " profile=" + profile.to_string(","));
  }

  /// Adds N_d(profile; L_{A_cond}); requires delta_cond >= 1.
  void add_conditioned(long long d, const SingularityProfile& profile, int cond, BigInt value) {
    check_common(d, value);
    if (profile.count(cond) < 1)
      throw DataError("NL entry conditions on A" + std::to_string(cond) + " but profile " + profile.to_string(",") +
                      " has no such point");
    if (!conditioned_.try_emplace({d, profile, cond}, std::move(value)).second)
      throw DataError("duplicate NL entry for d=" + std::to_string(d) + " profile=" + profile.to_string(",") +
                      " cond=A" + std::to_string(cond));
  }

  std::optional<BigInt> plain(long long d, const SingularityProfile& profile) const {
    auto it = plain_.find({d, profile});
    if (it == plain_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<BigInt> conditioned(long long d, const SingularityProfile& profile, int cond) const {
    auto it = conditioned_.find({d, profile, cond});
    if (it == conditioned_.end()) return std::nullopt;
    return it->second;
  }

  const std::map<PlainKey, BigInt>& plain_entries() const { return plain_; }
  const std::map<ConditionedKey, BigInt>& conditioned_entries() const { return conditioned_; }
  bool empty() const { return plain_.empty() && conditioned_.empty(); }

  /// Canonical text form: N records then NL records, sorted by key.
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : plain_)
      os << "N d=" << k.first << " profile=" << k.second.to_string(",") << " value=" << v << '\n';
    for (const auto& [k, v] : conditioned_)
      os << "NL d=" << std::get<0>(k) << " profile=" << std::get<1>(k).to_string(",") << " cond=A"
         << std::get<2>(k) << " value=" << v << '\n';
    return os.str();
  }

 private:
  static void check_common(long long d, const BigInt& value) {
    if (d < 1) throw DataError("table degree must be >= 1");
    if (value < 0) throw DataError("table values must be >= 0");
  }

  std::map<PlainKey, BigInt> plain_;
  std::map<ConditionedKey, BigInt> conditioned_;
};

namespace detail {

/// Splits on whitespace, keeping double-quoted spans together (quotes removed).
inline std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool have = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && std::isspace(static_cast<unsigned char>(ch))) {
      if (have) out.push_back(cur);
      cur.clear();
      have = false;
    } else {
      cur.push_back(ch);
      have = true;
    }
  }
  if (quoted) throw ParseError("unterminated quote");
  if (have) out.push_back(cur);
  return out;
}

}  // namespace detail

inline BaseValueTable BaseValueTable::parse(std::istream& in, const std::string& source) {
  BaseValueTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    try {
      const auto tokens = detail::split_record(line);
      if (tokens.empty()) continue;
      const std::string& tag = tokens[0];
      if (tag != "N" && tag != "NL") throw DataError("unknown record tag '" + tag + "'");
      std::map<std::string, std::string> fields;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto eq = tokens[i].find('=');
        if (eq == std::string::npos) throw DataError("expected key=value, got '" + tokens[i] + "'");
        const std::string key = tokens[i].substr(0, eq);
        if (!fields.emplace(key, tokens[i].substr(eq + 1)).second) throw DataError("repeated field '" + key + "'");
      }
      const std::vector<std::string> required =
          tag == "N" ? std::vector<std::string>{"d", "profile", "value"}
                     : std::vector<std::string>{"d", "profile", "cond", "value"};
      for (const auto& r : required)
        if (!fields.count(r)) throw DataError("missing field '" + r + "'");
      if (fields.size() != required.size()) throw DataError("unexpected extra field");

      const BigInt dval = parse_bigint(fields["d"]);
      if (dval < 1 || dval > 100000) throw DataError("degree out of range");
      const long long d = dval.convert_to<long long>();
      const SingularityProfile profile = SingularityProfile::parse(fields["profile"]);
      BigInt value = parse_bigint(fields["value"]);
      if (tag == "N") {
        table.add_plain(d, profile, std::move(value));
      } else {
        const SingularityProfile cond = SingularityProfile::parse(fields["cond"]);
        if (cond.size() != 1) throw DataError("cond must name a single A<i>");
        table.add_conditioned(d, profile, cond.max_index(), std::move(value));
      }
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    } catch (const ParseError& e) {
      throw DataError(where + e.what());
    } catch (const PreconditionError& e) {
      throw DataError(where + e.what());
    }
  }
  return table;
}

}  // namespace aktangent
