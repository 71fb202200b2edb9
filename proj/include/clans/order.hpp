#ifndef CLANS_ORDER_HPP
#define CLANS_ORDER_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "clans/clan.hpp"

namespace clans {

/* The closure order on clans of a fixed signature:

     gamma <= tau  iff  gamma(i;+) >= tau(i;+) and gamma(i;-) >= tau(i;-)
                        for every i, and gamma(i;j) <= tau(i;j) for every
                        i < j.

   Smaller clans have more signs early (bigger intersections with the
   two split subspaces), larger clans have wider arcs.  */
bool leq(const RankProfile& a, const RankProfile& b);
bool leq(const Clan& a, const Clan& b);

/* Bruhat order on involution strings, two ways.

   Rank-count form: v <= w iff v(i;.) >= w(i;.) for all i and
   v(s;t) <= w(s;t) for all s < t, where v(i;.) counts dots plus twice
   the completed pairs among the first i symbols and v(s;t) counts arcs
   a..b with a <= s, b > t.

   Symmetric-group form: read the involution as the permutation fixing
   dots and swapping arc ends, and compare the northeast rank matrices
   r_u(i,j) = #{k <= i : u(k) >= j}; u <= v iff r_u(i,j) <= r_v(i,j)
   everywhere (the identity is minimal).

   The two agree; the test suites check that exhaustively.  */
bool involution_leq_rank(const InvolutionString& a, const InvolutionString& b);
bool involution_leq_sn(const InvolutionString& a, const InvolutionString& b);

/* The ten covering moves. Patterns are scattered: the listed positions
   are arbitrary i < j (< k (< l)), not adjacent ones. Sources and
   results below show the symbols at those positions only; everything
   else is untouched.

     plus_minus_to_arc       + -        ->  1 1
     minus_plus_to_arc       - +        ->  1 1
     arc_over_plus_right     1 1 +      ->  1 + 1
     arc_over_minus_right    1 1 -      ->  1 - 1
     arc_over_plus_left      + 1 1      ->  1 + 1
     arc_over_minus_left     - 1 1      ->  1 - 1
     disjoint_to_crossing    1 1 2 2    ->  1 2 1 2
     disjoint_to_plus_minus  1 1 2 2    ->  1 + - 1
     disjoint_to_minus_plus  1 1 2 2    ->  1 - + 1
     crossing_to_nested      1 2 1 2    ->  1 2 2 1

   The sign slides move an arc end away from its mate; the four-point
   moves act on two disjoint arcs i..j, k..l with j < k, or on crossing
   arcs i..k, j..l. Every move strictly increases the order; moves need
   not be covers (the poset build recovers covers by transitive
   reduction).  */
enum class MoveType {
  plus_minus_to_arc,
  minus_plus_to_arc,
  arc_over_plus_right,
  arc_over_minus_right,
  arc_over_plus_left,
  arc_over_minus_left,
  disjoint_to_crossing,
  disjoint_to_plus_minus,
  disjoint_to_minus_plus,
  crossing_to_nested,
};

const char* move_name(MoveType t);  // e.g. "11+ -> 1+1"

struct MoveInstance {
  MoveType type;
  std::array<int, 4> pos{};  // 1-based, first arity() entries used
  int arity() const;
  friend bool operator==(const MoveInstance&, const MoveInstance&) = default;
};

// Applies one move; throws std::invalid_argument unless the source
// symbols at inst.pos match the move's pattern.
Clan apply_move(const Clan& c, const MoveInstance& inst);

// Every applicable move instance with its result, sorted by
// (type, positions). Distinct instances may repeat a result clan; all
// are reported.
std::vector<std::pair<MoveInstance, Clan>> covering_moves(const Clan& c);

}  // namespace clans

#endif  // CLANS_ORDER_HPP
