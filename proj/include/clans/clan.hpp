#ifndef CLANS_CLAN_HPP
#define CLANS_CLAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "clans/errors.hpp"

namespace clans {

/* A (p,q)-clan is a string c_1...c_n, n = p+q, whose symbols are plus
   signs, minus signs, and natural numbers occurring in matching pairs,
   subject to #(+) - #(-) = p - q. Matched pairs are "arcs"; the actual
   labels carry no information beyond the matching, so internally an arc
   end stores the position of its mate and labels only exist in text
   form. All public indices are 1-based.  */

struct Signature {
  int p = 0;
  int q = 0;
  int n() const { return p + q; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

class Clan {
 public:
  static constexpr int kPlus = -1;
  static constexpr int kMinus = -2;

  // code is 0-based: kPlus, kMinus, or the 0-based position of the mate.
  Clan(Signature sig, std::vector<int> code);

  const Signature& signature() const { return sig_; }
  int size() const { return static_cast<int>(code_.size()); }

  bool is_plus(int i) const { return code_[i - 1] == kPlus; }
  bool is_minus(int i) const { return code_[i - 1] == kMinus; }
  bool is_sign(int i) const { return code_[i - 1] < 0; }
  bool is_arc(int i) const { return code_[i - 1] >= 0; }
  bool is_arc_first(int i) const { return code_[i - 1] >= i; }
  int mate(int i) const;  // 1-based; requires is_arc(i)

  int arc_count() const;
  bool sign_only() const;

  const std::vector<int>& code() const { return code_; }

  friend bool operator==(const Clan&, const Clan&) = default;

 private:
  Signature sig_;
  std::vector<int> code_;
};

// Canonical total order used for enumeration and node numbering:
// position by position, + < - < arc-first < arc-second, ties between
// arc symbols broken by mate position.
bool enumeration_less(const Clan& a, const Clan& b);

// Accepts either a compact string ("1+1-", one character per symbol,
// labels 1..9) or a whitespace-separated token list ("1 + 1 -", labels
// any positive integer; the only form possible with 10+ arcs).
// Arbitrary labels are fine, only the matching matters.
Clan parse_clan(const std::string& text, Signature sig);

// Same, with the signature read off the string: p = #(+) + #arcs.
Clan parse_clan(const std::string& text);

// Canonical text: arcs labeled 1,2,... by first occurrence; compact
// form when every label fits one character, token form otherwise.
// parse_clan(format_clan(c), c.signature()) == c.
std::string format_clan(const Clan& c);

// All clans of the signature, sorted by enumeration_less.
std::vector<Clan> enumerate_clans(Signature sig);

/* Rank numbers of a clan gamma:
     gamma(i;+)  = #(+) plus #(completed arcs) among c_1..c_i
     gamma(i;-)  = #(-) plus #(completed arcs) among c_1..c_i
     gamma(i;j)  = #(arcs s..t with s <= i < j < t),  1 <= i < j <= n
   Stored flat as bytes so order comparisons are a single sweep.  */
class RankProfile {
 public:
  RankProfile(Signature sig, std::vector<std::uint8_t> data);

  static int pair_index(int n, int i, int j) {
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
  }
  static int data_size(int n) { return 2 * n + n * (n - 1) / 2; }

  const Signature& signature() const { return sig_; }
  int size() const { return n_; }

  int plus(int i) const { return data_[i - 1]; }
  int minus(int i) const { return data_[n_ + i - 1]; }
  int pairs(int i, int j) const { return data_[2 * n_ + pair_index(n_, i, j)]; }

  // Layout: plus(1..n), minus(1..n), pairs in row-major (i,j) order.
  const std::vector<std::uint8_t>& data() const { return data_; }

  friend bool operator==(const RankProfile&, const RankProfile&) = default;

 private:
  Signature sig_;
  int n_;
  std::vector<std::uint8_t> data_;
};

RankProfile rank_profile(const Clan& c);

// Inverse of rank_profile. Symbols are recovered from the jump pattern
// of the plus/minus rows (simultaneous jump = second arc end, plus jump
// only = '+', minus jump only = '-', no jump = first arc end); mates
// are resolved left to right: a second end at k mates the first unmated
// opening i_l, l minimal with gamma(i_l;k) < l. Throws
// InconsistentProfileError unless the result reproduces r exactly.
Clan clan_from_rank_profile(const RankProfile& r);

/* Involution strings: dots and matched pairs, no signs. These carry the
   part of a clan that survives forgetting the signs, and have their own
   rank counts (see order.hpp).  */
class InvolutionString {
 public:
  static constexpr int kDot = -1;

  explicit InvolutionString(std::vector<int> code);  // 0-based mates or kDot

  int size() const { return static_cast<int>(code_.size()); }
  bool is_dot(int i) const { return code_[i - 1] == kDot; }
  int mate(int i) const;

  const std::vector<int>& code() const { return code_; }

  friend bool operator==(const InvolutionString&, const InvolutionString&) =
      default;

 private:
  std::vector<int> code_;
};

InvolutionString underlying_involution(const Clan& c);

// Dots as '.', arcs labeled by first occurrence.
std::string format_involution(const InvolutionString& v);

// All involution strings of length n, deterministic order.
std::vector<InvolutionString> enumerate_involutions(int n);

}  // namespace clans

#endif  // CLANS_CLAN_HPP
