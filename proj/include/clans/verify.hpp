#ifndef CLANS_VERIFY_HPP
#define CLANS_VERIFY_HPP

#include <string>
#include <vector>

#include "clans/clan.hpp"
#include "clans/relation.hpp"

namespace clans {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

bool all_passed(const std::vector<CheckResult>& results);

/* Exhaustive self-checks of the combinatorial order at one signature:
   partial-order axioms of the rank criterion, rank profile sanity,
   profile-to-clan reconstruction round trips, strict monotonicity of
   every covering move, agreement of move reachability with the rank
   criterion, realizability of every cover as a move, purity of the
   rank function, the expected extremal elements, and the
   factorization of the order through the underlying involution plus
   sign counts.  */
std::vector<CheckResult> verify_order(Signature sig,
                                      Execution ex = Execution::parallel);

// The two formulations of the Bruhat order on involutions (prefix
// rank counts on strings with dots versus northwest rank matrices of
// the corresponding permutations) agree on all pairs of length n.
std::vector<CheckResult> verify_involutions(int n);

/* Geometric cross-checks at one signature, all in exact arithmetic:
   explicit representatives land in their own orbits, closure
   membership of representatives reproduces the combinatorial order,
   seeded random block-diagonal changes of basis leave orbits fixed,
   and projection sums respect their dimension bounds.  */
std::vector<CheckResult> verify_geometry(Signature sig,
                                         unsigned seed = 20240801);

}  // namespace clans

#endif  // CLANS_VERIFY_HPP
