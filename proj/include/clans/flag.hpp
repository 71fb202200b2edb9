#ifndef CLANS_FLAG_HPP
#define CLANS_FLAG_HPP

#include <string>
#include <vector>

#include "clans/clan.hpp"
#include "clans/linalg.hpp"

namespace clans {

/* Everything here is relative to the coordinate split picked out by a
   signature (p,q): the plus part is the span of the first p standard
   basis vectors, the minus part the span of the last q, and the
   projection is the coordinate projection onto the plus part.  */
enum class SplitPart { plus_part, minus_part };

// A complete flag in Q^n: F_i is the span of the first i columns.
// The basis matrix must be square and invertible.
class Flag {
 public:
  explicit Flag(RatMatrix columns);  // InvalidFlagError if not a basis

  int n() const { return cols_.cols; }
  const RatMatrix& columns() const { return cols_; }

 private:
  RatMatrix cols_;
};

// The flag with basis g * (basis of f).
Flag apply(const RatMatrix& g, const Flag& f);

// dim(F_i cap E) where E is the chosen coordinate part.
int dim_intersection(const Flag& f, int i, SplitPart part, Signature sig);

// dim(pi(F_i) + F_j) for 1 <= i < j <= n.
int dim_projection_sum(const Flag& f, int i, int j, Signature sig);

/* The table (dim(F_i cap plus part), dim(F_i cap minus part),
   dim(pi(F_i) + F_j) - j) laid out exactly like a clan's rank
   profile. Orbits of the block-diagonal symmetry are the level sets
   of this table, so the profile of a flag always reconstructs to the
   clan of its orbit.  */
RankProfile geometric_profile(const Flag& f, Signature sig);

// The clan whose orbit contains f.
Clan orbit_of(const Flag& f, Signature sig);

// Whether f lies in the closure of the orbit of tau: the flag's
// intersection dimensions weakly beat tau's rank numbers and its
// projection sums weakly undercut them.
bool in_closure(const Flag& f, const Clan& tau);

// Per-arc choice of which end carries the plus coordinate; entries
// follow the arcs in order of their first endpoints.
struct YamamotoChoice {
  std::vector<bool> plus_on_first;
};

/* The explicit orbit representative built from signed basis vectors:
   plus-coordinate positions (signs and chosen arc ends) take the
   coordinates 1..p in position order, the rest take p+1..n, and the
   columns are e_s for a sign, e_s + e_t across an arc seen from its
   plus end, e_s - e_t seen from its minus end (s the plus-end
   coordinate). Default choice: the plus end is the first end.  */
Flag yamamoto_representative(const Clan& c);
Flag yamamoto_representative(const Clan& c, const YamamotoChoice& choice);

// Same chain of subspaces, bases may differ.
bool same_flag(const Flag& a, const Flag& b);

// {"n": 4, "columns": [["1","0","0","0"], ...]}; columns listed
// outermost, entries written "a" or "a/b". Loading also accepts bare
// JSON integers as entries.
Flag load_flag_json(const std::string& text);
std::string flag_to_json(const Flag& f);

}  // namespace clans

#endif  // CLANS_FLAG_HPP
