#pragma once

// The tangency recursion
//
//   N_d^T(profile) = 2(d-1) N_d(profile) - sum_i delta_i (i+1) N_d(profile; L_{A_i})
//
// over base characteristic numbers supplied by a BaseValueTable. The factor
// (i+1) is the order to which the tangency conditions vanish when an A_i
// point lands on the line.

#include "aktangent/base_table.hpp"
#include "aktangent/bigint.hpp"
#include "aktangent/closed_forms.hpp"
#include "aktangent/profile.hpp"

#include <string>

namespace aktangent {

/// A table lookup the recursion needs but the table does not provide.
struct MissingEntryError : DataError {
  using DataError::DataError;
};

inline std::string plain_key_name(long long d, const SingularityProfile& p) {
  return "N d=" + std::to_string(d) + " profile=" + p.to_string(",");
}

inline std::string conditioned_key_name(long long d, const SingularityProfile& p, int cond) {
  return "NL d=" + std::to_string(d) + " profile=" + p.to_string(",") + " cond=A" + std::to_string(cond);
}

/// The boundary correction sum_i delta_i (i+1) N_d(profile; L_{A_i}).
inline BigInt boundary_correction(long long d, const SingularityProfile& profile, const BaseValueTable& table) {
  BigInt sum = 0;
  for (const auto& [i, m] : profile.counts()) {
    auto nl = table.conditioned(d, profile, i);
    if (!nl) throw MissingEntryError("missing table entry: " + conditioned_key_name(d, profile, i));
    sum += BigInt(m) * (i + 1) * *nl;
  }
  return sum;
}

inline CountValue nt_recursive(long long d, const SingularityProfile& profile, const BaseValueTable& table) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  BigInt plain = 1;  // N_d = 1 for the empty profile
  if (!profile.empty()) {
    auto n = table.plain(d, profile);
    if (!n) throw MissingEntryError("missing table entry: " + plain_key_name(d, profile));
    plain = *n;
  }
  BigInt value = BigInt(2 * (d - 1)) * plain - boundary_correction(d, profile, table);
  return {value, d >= profile.min_valid_degree(), true};
}

/// Solves the recursion for the conditioned number of a single-type profile
/// A_k^m: N_d(A_k^m; L_{A_k}) = [2(d-1) N - N^T] / (m (k+1)).
inline BigInt invert_for_conditioned(long long d, const SingularityProfile& profile, const BigInt& plain,
                                     const BigInt& tangent) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  if (profile.counts().size() != 1)
    throw PreconditionError("inversion needs a profile with a single singularity type, got " + profile.to_string());
  const auto [k, m] = *profile.counts().begin();
  const BigInt numer = BigInt(2 * (d - 1)) * plain - tangent;
  const BigInt denom = BigInt(m) * (k + 1);
  if (numer % denom != 0)
    throw DataError("inconsistent data: 2(d-1)N - N^T = " + numer.str() + " is not divisible by " + denom.str());
  return numer / denom;
}

/// Same, taking N from the table and N^T from the closed forms.
inline BigInt invert_for_conditioned(long long d, const SingularityProfile& profile, const BaseValueTable& table) {
  auto n = table.plain(d, profile);
  if (!n) throw MissingEntryError("missing table entry: " + plain_key_name(d, profile));
  return invert_for_conditioned(d, profile, *n, nt_closed(d, profile).value);
}

}  // namespace aktangent
