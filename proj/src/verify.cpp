#include "clans/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "clans/flag.hpp"
#include "clans/order.hpp"
#include "clans/poset.hpp"

namespace clans {

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

namespace {

void add(std::vector<CheckResult>& out, std::string name, bool pass,
         std::string detail = "") {
  out.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
}

std::string clan_pair(const Clan& a, const Clan& b) {
  return format_clan(a) + " / " + format_clan(b);
}

}  // namespace

std::vector<CheckResult> verify_order(Signature sig, Execution ex) {
  std::vector<CheckResult> out;
  const std::vector<Clan> nodes = enumerate_clans(sig);
  const int count = static_cast<int>(nodes.size());
  std::vector<RankProfile> profiles;
  profiles.reserve(nodes.size());
  for (const Clan& c : nodes) profiles.push_back(rank_profile(c));

  {  // Rank profile shape: unit jumps, correct totals, and the sign
     // rows summing to the underlying involution's prefix counts.
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count; ++x) {
      const Clan& c = nodes[x];
      const RankProfile& r = profiles[x];
      const int n = c.size();
      int dots = 0, closed = 0;
      for (int i = 1; i <= n && ok; ++i) {
        const int dp = r.plus(i) - (i > 1 ? r.plus(i - 1) : 0);
        const int dm = r.minus(i) - (i > 1 ? r.minus(i - 1) : 0);
        if (dp < 0 || dp > 1 || dm < 0 || dm > 1) ok = false;
        if (c.is_sign(i)) ++dots;
        if (c.is_arc(i) && !c.is_arc_first(i)) ++closed;
        if (r.plus(i) + r.minus(i) != dots + 2 * closed) ok = false;
      }
      if (ok && (r.plus(n) != sig.p || r.minus(n) != sig.q)) ok = false;
      if (!ok) {
        detail = format_clan(c);
        break;
      }
    }
    add(out, "rank profiles have unit jumps and the right totals", ok,
        detail);
  }

  {  // Profile -> clan reconstruction round trip.
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      if (!(clan_from_rank_profile(profiles[x]) == nodes[x])) {
        ok = false;
        detail = format_clan(nodes[x]);
      }
    add(out, "every clan is recovered from its rank profile", ok, detail);
  }

  {  // Moves go strictly up, never back.
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      for (const auto& [mv, img] : covering_moves(nodes[x])) {
        if (img == nodes[x] || !leq(nodes[x], img) || leq(img, nodes[x])) {
          ok = false;
          detail = clan_pair(nodes[x], img);
          break;
        }
      }
    add(out, "every move raises the order strictly", ok, detail);
  }

  std::optional<ClanPoset> poset;
  std::string mismatch;
  try {
    poset = build_poset(sig, ex);
  } catch (const OrderMismatchError& e) {
    mismatch = e.what();
  }
  add(out, "move reachability reproduces the rank criterion",
      poset.has_value(), mismatch);
  if (!poset) return out;
  const BitMatrix& rel = poset->relation;
  const int words = rel.words();

  {
    bool ok = true;
    for (int x = 0; x < count; ++x) ok &= rel.test(x, x);
    add(out, "the order is reflexive", ok);
  }
  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      rel.for_each_in_row(x, [&](int y) {
        if (y != x && rel.test(y, x) && ok) {
          ok = false;
          detail = clan_pair(nodes[x], nodes[y]);
        }
      });
    add(out, "the order is antisymmetric", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      rel.for_each_in_row(x, [&](int z) {
        if (ok && !BitMatrix::subset(rel.row(z), rel.row(x), words)) {
          ok = false;
          detail = clan_pair(nodes[x], nodes[z]);
        }
      });
    add(out, "the order is transitive", ok, detail);
  }

  {  // Every cover is realizable as a single move.
    BitMatrix medges(count);
    for (int x = 0; x < count; ++x)
      for (const auto& [mv, img] : covering_moves(nodes[x]))
        medges.set(x, poset->index_of(img));
    bool ok = true;
    std::string detail;
    for (const auto& [lo, hi] : poset->covers)
      if (!medges.test(lo, hi)) {
        ok = false;
        detail = clan_pair(nodes[lo], nodes[hi]);
        break;
      }
    add(out, "every cover is a single move", ok, detail);
  }

  const PosetProperties props = poset_properties(*poset);
  {
    std::ostringstream detail;
    if (!props.pure && !props.purity_violations.empty()) {
      const auto& v = props.purity_violations.front();
      detail << "cover " << clan_pair(nodes[v.lower], nodes[v.upper])
             << " jumps rank " << v.rank_lower << " -> " << v.rank_upper;
    }
    add(out, "every maximal chain has the same length", props.pure,
        detail.str());
  }
  add(out, "minimal elements are exactly the sign-only clans",
      props.minimal_all_sign_only);
  add(out, "there is a unique maximal element", props.unique_maximal);

  {  // Order factorization: below iff involutions are below and the
     // sign counts dominate.
    bool ok = true;
    std::string detail;
    std::vector<InvolutionString> unders;
    unders.reserve(nodes.size());
    for (const Clan& c : nodes) unders.push_back(underlying_involution(c));
    const int n = sig.n();
    for (int x = 0; x < count && ok; ++x)
      for (int y = 0; y < count; ++y) {
        bool signs_dominate = true;
        for (int i = 1; i <= n && signs_dominate; ++i)
          signs_dominate = profiles[x].plus(i) >= profiles[y].plus(i) &&
                           profiles[x].minus(i) >= profiles[y].minus(i);
        const bool split = signs_dominate &&
                           involution_leq_rank(unders[x], unders[y]);
        if (split != rel.test(x, y)) {
          ok = false;
          detail = clan_pair(nodes[x], nodes[y]);
          break;
        }
      }
    add(out,
        "order = involution order + sign domination, on all pairs", ok,
        detail);
  }

  return out;
}

std::vector<CheckResult> verify_involutions(int n) {
  std::vector<CheckResult> out;
  const std::vector<InvolutionString> all = enumerate_involutions(n);
  const int count = static_cast<int>(all.size());

  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      for (int y = 0; y < count; ++y)
        if (involution_leq_rank(all[x], all[y]) !=
            involution_leq_sn(all[x], all[y])) {
          ok = false;
          detail = format_involution(all[x]) + " / " +
                   format_involution(all[y]);
          break;
        }
    add(out, "rank-count and permutation-matrix orders agree", ok, detail);
  }
  {
    const InvolutionString id(std::vector<int>(n, InvolutionString::kDot));
    bool ok = true;
    std::string detail;
    for (const InvolutionString& w : all)
      if (!involution_leq_rank(id, w)) {
        ok = false;
        detail = format_involution(w);
        break;
      }
    add(out, "the identity involution is the minimum", ok, detail);
  }
  return out;
}

std::vector<CheckResult> verify_geometry(Signature sig, unsigned seed) {
  std::vector<CheckResult> out;
  const std::vector<Clan> nodes = enumerate_clans(sig);
  const int count = static_cast<int>(nodes.size());
  const int n = sig.n();

  std::vector<RankProfile> profiles;
  std::vector<RankProfile> geo;
  profiles.reserve(nodes.size());
  geo.reserve(nodes.size());
  for (const Clan& c : nodes) {
    profiles.push_back(rank_profile(c));
    geo.push_back(geometric_profile(yamamoto_representative(c), sig));
  }

  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      if (!(geo[x] == profiles[x])) {
        ok = false;
        detail = format_clan(nodes[x]);
      }
    add(out, "representatives have the rank numbers of their clans", ok,
        detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      for (int y = 0; y < count; ++y)
        if (leq(geo[x], profiles[y]) != leq(profiles[x], profiles[y])) {
          ok = false;
          detail = clan_pair(nodes[x], nodes[y]);
          break;
        }
    add(out, "closure membership of representatives matches the order", ok,
        detail);
  }
  {  // dim(pi(F_i) + F_j) = j + pairs(i,j) must sit inside its bounds.
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x)
      for (int i = 1; i < n && ok; ++i)
        for (int j = i + 1; j <= n; ++j) {
          const int dim = j + geo[x].pairs(i, j);
          if (dim < j || dim > std::min(n, i + j)) {
            ok = false;
            detail = format_clan(nodes[x]);
            break;
          }
        }
    add(out, "projection sums stay inside their dimension bounds", ok,
        detail);
  }
  {  // Random block-diagonal changes of basis must not move an orbit.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    auto random_block = [&]() {
      while (true) {
        RatMatrix k(n, n);
        for (int r = 0; r < sig.p; ++r)
          for (int c = 0; c < sig.p; ++c) k.at(r, c) = entry(rng);
        for (int r = sig.p; r < n; ++r)
          for (int c = sig.p; c < n; ++c) k.at(r, c) = entry(rng);
        if (rank_of(k) == n) return k;
      }
    };
    bool ok = true;
    std::string detail;
    for (int x = 0; x < count && ok; ++x) {
      const Flag moved = apply(random_block(), yamamoto_representative(nodes[x]));
      if (!(orbit_of(moved, sig) == nodes[x])) {
        ok = false;
        detail = format_clan(nodes[x]);
      }
    }
    add(out, "block-diagonal basis changes preserve every orbit", ok,
        detail);
  }
  return out;
}

}  // namespace clans
