// Prints a small table of tangency counts and checks a few of them against
// the Caporaso-Harris recursion and a random pencil.

#include "aktangent/caporaso_harris.hpp"
#include "aktangent/closed_forms.hpp"
#include "aktangent/pencil.hpp"
#include "aktangent/profile.hpp"

#include <iomanip>
#include <iostream>

using namespace aktangent;

int main() {
  const char* profiles[] = {"none", "A1", "A2", "A3", "A1^2", "A1 A2", "A4", "A1^3"};

  std::cout << std::left << std::setw(8) << "profile";
  for (int d = 3; d <= 7; ++d) std::cout << std::right << std::setw(14) << ("d=" + std::to_string(d));
  std::cout << '\n';
  for (const char* text : profiles) {
    const SingularityProfile p = SingularityProfile::parse(text);
    std::cout << std::left << std::setw(8) << p.to_string();
    for (int d = 3; d <= 7; ++d) {
      const CountValue v = nt_closed(d, p);
      // '*' marks degrees below the proven bound.
      std::cout << std::right << std::setw(13) << v.value << (v.within_proven_range ? ' ' : '*');
    }
    std::cout << '\n';
  }

  std::cout << "\nunordered nodal counts from Caporaso-Harris:\n";
  CaporasoHarris ch;
  for (int delta = 1; delta <= 4; ++delta) {
    const int d = 1 + 2 * delta;
    const BigInt closed = nt_closed(d, SingularityProfile::single(1, delta)).value;
    const BigInt recursed = ch.tangent(d, delta);
    std::cout << "  d=" << d << " delta=" << delta << ": " << recursed << "  (closed form / delta! = "
              << closed / factorial(static_cast<unsigned>(delta)) << ")\n";
  }

  const PencilTrial t = run_pencil_trial(4, 7);
  std::cout << "\nrandom quartic pencil: " << t.result.count << " tangent members, 2(d-1) = " << nt_base(4) << '\n';
}
