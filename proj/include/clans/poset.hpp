#ifndef CLANS_POSET_HPP
#define CLANS_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "clans/clan.hpp"
#include "clans/order.hpp"
#include "clans/relation.hpp"

namespace clans {

/* The full closure order on all clans of one signature, with the
   Hasse diagram and a rank function (longest chain up from a minimal
   element). Node numbering follows enumeration_less, so indices are
   stable across runs.  */
struct ClanPoset {
  Signature sig;
  std::vector<Clan> nodes;            // sorted by enumeration_less
  std::vector<RankProfile> profiles;  // profiles[i] = rank_profile(nodes[i])
  BitMatrix relation;                 // reflexive: test(x,y) iff x <= y
  BitMatrix cover_bits;               // test(x,y) iff y covers x
  std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted
  std::vector<int> rank;
  std::vector<int> minimal;  // no cover below
  std::vector<int> maximal;  // no cover above

  int size() const { return static_cast<int>(nodes.size()); }
  bool leq_idx(int x, int y) const { return relation.test(x, y); }
  int index_of(const Clan& c) const;  // ClanError if absent
};

// Builds the poset two independent ways and cross-checks them: the
// rank-number criterion gives the full relation, the covering moves
// give a graph whose reachability must reproduce it exactly. Any
// disagreement throws OrderMismatchError naming the offending pair.
ClanPoset build_poset(Signature sig, Execution ex = Execution::parallel);

/* One interval [bottom, top] of the poset. Chain length and the
   histogram use the longest-path rank inside the interval (covers of
   the interval are the global covers with both ends inside it).  */
struct IntervalReport {
  int bottom = 0;
  int top = 0;
  std::vector<int> elements;        // ascending node indices
  int length = 0;                   // longest chain bottom..top
  bool is_chain = false;            // every pair comparable
  std::vector<int> rank_histogram;  // size length+1, by relative rank
};

// Throws NotComparableError unless bottom <= top.
IntervalReport interval(const ClanPoset& poset, int bottom, int top);

struct CoverRankViolation {
  int lower = 0;
  int upper = 0;
  int rank_lower = 0;
  int rank_upper = 0;
};

// Interval of length two with a middle count other than two. The
// artificial bottom adjoined below every minimal element is index -1.
struct ThinViolation {
  int lower = 0;
  int upper = 0;
  int middle_count = 0;
};

// Interval whose element counts by rank parity differ.
struct ParityViolation {
  int lower = 0;
  int upper = 0;
  int even_count = 0;
  int odd_count = 0;
};

struct PosetProperties {
  Signature sig;
  int size = 0;
  int cover_count = 0;
  int height = 0;  // largest rank value
  std::vector<int> minimal;
  std::vector<int> maximal;
  std::vector<int> maximal_ranks;  // ranks of the maximal elements
  bool minimal_all_sign_only = false;
  bool unique_maximal = false;

  // Pure: every cover raises rank by one and all maximal elements sit
  // at the same rank, so every maximal chain has the same length.
  bool pure = false;
  std::vector<CoverRankViolation> purity_violations;  // capped sample
  long long purity_violation_count = 0;

  // Thin and Eulerian are judged on the poset with one artificial
  // bottom adjoined (rank shifted up by one, the bottom at rank zero);
  // they only make sense when that poset is graded with a top, so both
  // are skipped unless pure and unique_maximal hold.
  bool lattice_checks_evaluated = false;
  bool thin = false;
  std::vector<ThinViolation> thin_violations;  // capped sample
  long long thin_violation_count = 0;
  bool eulerian = false;
  std::vector<ParityViolation> euler_violations;  // capped sample
  long long euler_violation_count = 0;
};

PosetProperties poset_properties(const ClanPoset& poset,
                                 int witness_cap = 5);

// Graphviz text of the Hasse diagram, edges pointing upward, one
// rank=same group per rank level.
std::string export_hasse_dot(const ClanPoset& poset);

// JSON text: {"signature": {"p":..,"q":..}, "nodes": [...],
// "covers": [[lower, upper], ...], "rank": [...]}, 2-space indent.
std::string export_hasse_json(const ClanPoset& poset);

}  // namespace clans

#endif  // CLANS_POSET_HPP
