#ifndef HECKE_VERIFY_HPP_
#define HECKE_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

// Outcome of one verification sweep.  failures is empty iff the suite
// passed; sweeps enumerate cases in a fixed order, so the first
// recorded failure is the minimal one.
struct VerificationReport {
  std::string suite;
  int kappa = 0;
  long checked = 0;
  struct Failure {
    std::string inputs;
    std::string expected;
    std::string actual;
  };
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  std::string to_string() const;
};

// Enumerates every (family, w'', m, l) normal form and checks that
// reconstruction is a bijection onto S_kappa, inverts the decomposition,
// and adds lengths.  2 <= kappa <= 7.
VerificationReport verify_coset_cover(int kappa);

// The four kappa = 2 products against their closed-form values, on both
// backends.  Reported under the CLI suite id "prop31".
VerificationReport verify_kappa2_table();

// Backend agreement: geometric_product vs mul on every supported left
// factor times all of S_kappa, plus 200 seeded random products with
// unsupported left factors rebuilt by folding geometric generator
// products.  1 <= kappa <= 6.
VerificationReport verify_isomorphism(int kappa, std::uint64_t seed = 0);

// Quadratic, far-commutation and braid relations over all valid index
// pairs, on the algebraic backend and on the geometric backend (every
// generator is a supported left factor).  2 <= kappa <= 7.
VerificationReport verify_relations(int kappa);

}  // namespace hecke

#endif  // HECKE_VERIFY_HPP_
