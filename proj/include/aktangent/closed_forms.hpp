#pragma once

// Closed-form tangency counts N_d^T(profile): the number of degree-d plane
// curves through d(d+3)/2 - 1 - codim generic points with the given ordered
// A_k singularities and tangent to a fixed line.
//
// Available shapes: A_k (1 <= k <= 8), A_1 A_k (1 <= k <= 7, where k = 1 is
// A_1^2), A_1^m (1 <= m <= 8), and the empty profile, where the count is
// 2(d - 1).

#include "aktangent/bigint.hpp"
#include "aktangent/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aktangent {

struct NoClosedFormError : PreconditionError {
  using PreconditionError::PreconditionError;
};

/// A count under the ordered-singularities convention, together with whether
/// d reached the degree bound from which the count is proven.
struct CountValue {
  BigInt value;
  bool within_proven_range = true;
  bool ordered = true;
};

/// scale * prod(factors), each factor an integer polynomial in d with
/// coefficients listed from the highest power down.
struct ClosedForm {
  SingularityProfile profile;
  long long scale = 1;
  std::vector<std::vector<long long>> factors;

  BigInt evaluate_horner(const BigInt& d) const {
    BigInt r = scale;
    for (const auto& f : factors) {
      BigInt acc = 0;
      for (long long c : f) acc = acc * d + c;
      r *= acc;
    }
    return r;
  }

  /// Sum of c_k * d^k per factor, with explicit powers. Kept alongside
  /// Horner as an internal cross-check.
  BigInt evaluate_naive(const BigInt& d) const {
    BigInt r = scale;
    for (const auto& f : factors) {
      BigInt acc = 0;
      const std::size_t deg = f.size() - 1;
      for (std::size_t i = 0; i < f.size(); ++i) {
        BigInt term = f[i];
        for (std::size_t e = 0; e < deg - i; ++e) term *= d;
        acc += term;
      }
      r *= acc;
    }
    return r;
  }

  int degree() const {
    int deg = 0;
    for (const auto& f : factors) deg += static_cast<int>(f.size()) - 1;
    return deg;
  }
};

namespace detail {

inline SingularityProfile a1_ak(int k) {
  SingularityProfile p = SingularityProfile::single(1);
  p.add(k);
  return p;
}

inline std::vector<ClosedForm> build_catalog() {
  using P = SingularityProfile;
  std::vector<ClosedForm> c;
  // A_k
  c.push_back({P::single(1), 6, {{1, 0}, {1, -1}, {1, -2}}});
  c.push_back({P::single(2), 12, {{2, -8, 8, -1}}});
  c.push_back({P::single(3), 4, {{25, -146, 228, -84}}});
  c.push_back({P::single(4), 120, {{3, -20, 36, -15}}});
  c.push_back({P::single(5), 36, {{35, -260, 524, -239}}});
  c.push_back({P::single(6), 7, {{632, -5134, 11343, -5538}}});
  c.push_back({P::single(7), 24, {{651, -5702, 13602, -7002}}});
  c.push_back({P::single(8), 288, {{190, -1778, 4533, -2436}}});
  // A_1 A_k
  c.push_back({P::single(1, 2), 2, {{9, -45, 30, 123, -145, 6}}});
  c.push_back({a1_ak(2), 12, {{1, -3}, {6, -18, -22, 67, -13}}});
  c.push_back({a1_ak(3), 12, {{25, -171, 187, 774, -1535, 426}}});
  c.push_back({a1_ak(4), 20, {{54, -414, 534, 2238, -5207, 1815}}});
  c.push_back({a1_ak(5), 18, {{210, -1770, 2572, 11299, -29650, 11959}}});
  c.push_back({a1_ak(6), 21, {{632, -5766, 9164, 42837, -123391, 55068}}});
  c.push_back({a1_ak(7), 8, {{5859, -57177, 97677, 485874, -1509623, 725940}}});
  // A_1^m, m >= 3
  c.push_back({P::single(1, 3), 6, {{9, -63, 36, 549, -857, -1148, 2266, -300}}});
  c.push_back({P::single(1, 4), 18, {{9, -81, 36, 1458, -2834, -8500, 22455, 13543, -49222, 10488}}});
  c.push_back({P::single(1, 5),
               6,
               {{81, -891, 270, 27270, -63450, -303912, 1014807, 1348725, -6097876, -1168832, 12259248,
                 -3513840}}});
  c.push_back({P::single(1, 6),
               1,
               {{1458, -18954, 2916, 882090, -2390310, -15901596, 64328418, 130916898, -732619008,
                 -395637750, 3855455766, -418407408, -7418026440, 2643818400}}});
  c.push_back({P::single(1, 7),
               1,
               {{4374, -65610, 0, 4317138, -13352850, -114293592, 543520530, 1481762970, -9946281060,
                 -8470208502, 95900422338, 1014814332, -467415101124, 168796887984, 880782565392,
                 -374053619520}}});
  c.push_back({P::single(1, 8),
               1,
               {{13122, -223074, -34992, 19717992, -68543496, -719400528, 3933317556, 13400193204,
                 -105120249336, -119845037160, 1587321808632, 150918108768, -13835625254910,
                 5746599271062, 64281794069664, -38151916883064, -120388035085920, 59358641529600}}});
  return c;
}

}  // namespace detail

/// Every tabulated closed form (the empty profile is handled by nt_base).
inline const std::vector<ClosedForm>& closed_form_catalog() {
  static const std::vector<ClosedForm> catalog = detail::build_catalog();
  return catalog;
}

inline const ClosedForm* find_closed_form(const SingularityProfile& profile) {
  for (const auto& f : closed_form_catalog())
    if (f.profile == profile) return &f;
  return nullptr;
}

inline bool has_closed_form(const SingularityProfile& profile) {
  return profile.empty() || find_closed_form(profile) != nullptr;
}

/// Curves through d(d+3)/2 - 1 generic points tangent to a line: 2(d - 1).
inline BigInt nt_base(long long d) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  return BigInt(2 * (d - 1));
}

/// Closed-form N_d^T(profile). Degrees below the proven bound are still
/// evaluated and flagged rather than refused.
inline CountValue nt_closed(long long d, const SingularityProfile& profile) {
  if (d < 1) throw PreconditionError("degree must be >= 1");
  if (profile.empty()) return {nt_base(d), true, true};
  const ClosedForm* form = find_closed_form(profile);
  if (!form)
    throw NoClosedFormError("no closed form for profile " + profile.to_string() +
                            "; use the tangency recursion with a base-value table");
  return {form->evaluate_horner(BigInt(d)), d >= profile.min_valid_degree(), true};
}

/// Divides an ordered count by prod(delta_i!); throws if the division is not exact.
inline CountValue unordered_view(const CountValue& ordered, const SingularityProfile& profile) {
  if (!ordered.ordered) return ordered;
  const BigInt f = profile.symmetry_factor();
  if (ordered.value % f != 0)
    throw DataError("ordered count " + ordered.value.str() + " is not divisible by " + f.str());
  return {ordered.value / f, ordered.within_proven_range, false};
}

}  // namespace aktangent
