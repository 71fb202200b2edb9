#ifndef CLANS_CURVES_HPP
#define CLANS_CURVES_HPP

#include <array>
#include <string>
#include <vector>

#include "clans/clan.hpp"
#include "clans/flag.hpp"
#include "clans/order.hpp"

namespace clans {

// One entry of the block-diagonal witness matrix: the identity entry
// at (row, col) is replaced by constant + over_t / t. Rows and
// columns are 1-based coordinates.
struct KEntry {
  int row = 0;
  int col = 0;
  Rational constant;
  Rational over_t;
};

/* A covering move realized by an explicit curve of flags: E sits in
   the lower orbit, F in the upper one, k(t) keeps k(t).F in the upper
   orbit for t != 0, and the rescaled family G(t) equals k(t).F as a
   flag while extending to t = 0 with G(0) = E. The family columns are
   affine in t: G(t) = family_const + t * family_slope.  */
struct CurveCase {
  MoveType move{};
  Signature sig;
  MoveInstance instance;
  Clan source;  // lower clan
  Clan target;  // upper clan
  RatMatrix lower_rep;
  RatMatrix upper_rep;
  std::vector<KEntry> k_entries;
  RatMatrix family_const;
  RatMatrix family_slope;
};

// Instantiates the tabulated construction for one move type, with the
// pattern placed at the given 1-based positions (only the first
// 'arity' entries are read) inside a clan of the given signature.
// Positions must be strictly increasing; every non-pattern position
// is filled with a sign, pluses first. Throws ClanError if the
// pattern does not fit the signature.
CurveCase make_curve_case(MoveType move, Signature sig,
                          std::array<int, 4> pos);

// The k(t) matrix of a case at a concrete t != 0.
RatMatrix curve_k(const CurveCase& c, const Rational& t);

// The family G(t); t = 0 gives the claimed limit flag.
RatMatrix curve_family(const CurveCase& c, const Rational& t);

// All ten move types, each in its smallest signature at the leftmost
// positions and once more shifted right inside a one-larger signature.
std::vector<CurveCase> standard_curve_cases();

std::string describe(const CurveCase& c);

// Nonzero sample points used by default: 1, 1/2, 1/3, -1.
std::vector<Rational> default_curve_samples();

struct CurveCheckItem {
  std::string what;
  bool pass = false;
  std::string detail;  // empty when passing
};

struct CurveReport {
  std::vector<CurveCheckItem> items;
  bool ok() const;
  int failures() const;
};

/* Verifies a case end to end with exact arithmetic: both
   representatives lie in their stated orbits, the move really maps
   source to target, k(t) respects the block split, and for every
   sample t the matrix k(t) is invertible, k(t).F stays in the upper
   orbit, the family is a flag equal to k(t).F, and the family at
   t = 0 is the lower representative's flag. Samples must be nonzero
   (std::invalid_argument otherwise).  */
CurveReport curve_check_report(const CurveCase& c,
                               const std::vector<Rational>& samples);

// Same checks; throws CaseMismatchError listing every failed item.
void curve_check(const CurveCase& c, const std::vector<Rational>& samples);

}  // namespace clans

#endif  // CLANS_CURVES_HPP
