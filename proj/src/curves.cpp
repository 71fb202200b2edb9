#include "clans/curves.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace clans {

namespace {

// Roles name the four coordinates every tabulated construction can
// touch: e_1, e_2, e_{n-1}, e_n.
constexpr int kRP1 = 0;
constexpr int kRP2 = 1;
constexpr int kRM1 = 2;
constexpr int kRM2 = 3;

// One representative column, as coefficients on (e_1, e_2, e_{n-1},
// e_n): a constant part and a part multiplied by t.
struct ColSpec {
  std::array<int, 4> c{};
  std::array<int, 4> s{};
};

// Constant column and column with a t-slope.
ColSpec cc(int p1, int p2, int m1, int m2) {
  return ColSpec{{p1, p2, m1, m2}, {}};
}
ColSpec ct(int p1, int p2, int m1, int m2, int sp1, int sp2, int sm1,
           int sm2) {
  return ColSpec{{p1, p2, m1, m2}, {sp1, sp2, sm1, sm2}};
}

struct CaseSpec {
  const char* gamma = nullptr;
  const char* tau = nullptr;
  std::vector<ColSpec> lower;
  std::vector<ColSpec> upper;
  std::vector<ColSpec> family;
  // (row role, column role, a, b): the identity entry there becomes
  // a + b/t.
  std::vector<std::array<int, 4>> k;
};

/* The tables below spell out, per move type, the lower and upper
   representatives, the witness matrix k(t), and the rescaled family
   whose t -> 0 limit is the lower representative. The sign-mirrored
   and left-slide variants come from the displayed ones by swapping
   the roles of the plus and minus coordinate blocks (e_1 <-> e_n,
   e_2 <-> e_{n-1}) and conjugating k(t) accordingly.  */
CaseSpec case_spec(MoveType m) {
  CaseSpec s;
  switch (m) {
    case MoveType::plus_minus_to_arc:
      s.gamma = "+-";
      s.tau = "11";
      s.lower = {cc(1, 0, 0, 0), cc(0, 0, 0, 1)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 0, 0, 1)};
      s.family = {ct(1, 0, 0, 0, 0, 0, 0, 1), cc(0, 0, 0, 1)};
      s.k = {{kRP1, kRP1, 0, 1}};
      break;
    case MoveType::minus_plus_to_arc:
      s.gamma = "-+";
      s.tau = "11";
      s.lower = {cc(0, 0, 0, 1), cc(1, 0, 0, 0)};
      s.upper = {cc(1, 0, 0, 1), cc(1, 0, 0, 0)};
      s.family = {ct(0, 0, 0, 1, 1, 0, 0, 0), cc(1, 0, 0, 0)};
      s.k = {{kRM2, kRM2, 0, 1}};
      break;
    case MoveType::arc_over_plus_right:
      s.gamma = "11+";
      s.tau = "1+1";
      s.lower = {cc(1, 0, 0, 1), cc(1, 0, 0, 0), cc(0, 1, 0, 0)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 1, 0, 0), cc(1, 0, 0, 0)};
      s.family = {cc(1, 0, 0, 1), ct(1, 0, 0, 0, 0, 1, 0, 0),
                  cc(2, 1, 0, 1)};
      s.k = {{kRP1, kRP2, 0, 1}};
      break;
    case MoveType::arc_over_minus_right:
      s.gamma = "11-";
      s.tau = "1-1";
      s.lower = {cc(1, 0, 0, 1), cc(0, 0, 0, 1), cc(0, 0, 1, 0)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 0, 1, 0), cc(0, 0, 0, 1)};
      s.family = {cc(1, 0, 0, 1), ct(0, 0, 0, 1, 0, 0, 1, 0),
                  cc(1, 0, 1, 2)};
      s.k = {{kRM2, kRM1, 0, 1}};
      break;
    case MoveType::arc_over_plus_left:
      s.gamma = "+11";
      s.tau = "1+1";
      s.lower = {cc(1, 0, 0, 0), cc(0, 1, 0, 1), cc(0, 0, 0, 1)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 1, 0, 0), cc(0, 0, 0, 1)};
      s.family = {ct(1, 0, 0, 0, 0, 0, 0, 1), cc(1, 1, 0, 1),
                  cc(0, 0, 0, 1)};
      s.k = {{kRP1, kRP1, 0, 1}, {kRP1, kRP2, 1, -1}};
      break;
    case MoveType::arc_over_minus_left:
      s.gamma = "-11";
      s.tau = "1-1";
      s.lower = {cc(0, 0, 0, 1), cc(1, 0, 1, 0), cc(1, 0, 0, 0)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 0, 1, 0), cc(1, 0, 0, 0)};
      s.family = {ct(0, 0, 0, 1, 1, 0, 0, 0), cc(1, 0, 1, 1),
                  cc(1, 0, 0, 0)};
      s.k = {{kRM2, kRM2, 0, 1}, {kRM2, kRM1, 1, -1}};
      break;
    case MoveType::disjoint_to_crossing:
      s.gamma = "1122";
      s.tau = "1212";
      s.lower = {cc(1, 0, 1, 0), cc(0, 0, 1, 0), cc(0, 1, 0, 1),
                 cc(0, 0, 0, 1)};
      s.upper = {cc(1, 0, 1, 0), cc(0, 1, 0, 1), cc(0, 0, 1, 0),
                 cc(0, 0, 0, 1)};
      s.family = {cc(1, 0, 1, 0), ct(0, 0, 1, 0, 0, 1, 0, 1),
                  cc(0, 1, 0, 1), cc(0, 0, 0, 1)};
      s.k = {{kRM1, kRM2, 0, 1}};
      break;
    case MoveType::disjoint_to_plus_minus:
      // The new plus sign takes the second coordinate, the new minus
      // sign the second-to-last; the wide arc joins the outer two.
      s.gamma = "1122";
      s.tau = "1+-1";
      s.lower = {cc(1, 0, 1, 0), cc(0, 0, 1, 0), cc(0, 1, 0, 1),
                 cc(0, 0, 0, 1)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 1, 0, 0), cc(0, 0, 1, 0),
                 cc(0, 0, 0, 1)};
      s.family = {ct(1, 0, 1, 0, 0, 1, 0, 1), ct(0, 0, 1, 0, 0, 1, 0, 1),
                  cc(0, 1, 0, 1), cc(0, 0, 0, 1)};
      s.k = {{kRP1, kRP1, 0, 1}, {kRP1, kRP2, 0, -1}, {kRP2, kRP1, 1, 0},
             {kRP2, kRP2, 0, 0}, {kRM1, kRM1, 0, -1}, {kRM1, kRM2, 0, 1}};
      break;
    case MoveType::disjoint_to_minus_plus:
      // Same construction with the two coordinate blocks exchanged.
      s.gamma = "1122";
      s.tau = "1-+1";
      s.lower = {cc(0, 1, 0, 1), cc(0, 1, 0, 0), cc(1, 0, 1, 0),
                 cc(1, 0, 0, 0)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 0, 1, 0), cc(0, 1, 0, 0),
                 cc(1, 0, 0, 0)};
      s.family = {ct(0, 1, 0, 1, 1, 0, 1, 0), ct(0, 1, 0, 0, 1, 0, 1, 0),
                  cc(1, 0, 1, 0), cc(1, 0, 0, 0)};
      s.k = {{kRM2, kRM2, 0, 1}, {kRM2, kRM1, 0, -1}, {kRM1, kRM2, 1, 0},
             {kRM1, kRM1, 0, 0}, {kRP2, kRP2, 0, -1}, {kRP2, kRP1, 0, 1}};
      break;
    case MoveType::crossing_to_nested:
      s.gamma = "1212";
      s.tau = "1221";
      s.lower = {cc(1, 0, 1, 0), cc(0, 1, 0, 1), cc(0, 0, 1, 0),
                 cc(0, 0, 0, 1)};
      s.upper = {cc(1, 0, 0, 1), cc(0, 1, 1, 0), cc(0, 0, 1, 0),
                 cc(0, 0, 0, 1)};
      s.family = {ct(1, 0, 1, 0, 0, 1, 0, 1), cc(0, 1, 0, 1),
                  cc(0, 0, 1, 0), cc(0, 0, 0, 1)};
      s.k = {{kRP1, kRP1, 0, 1}, {kRP1, kRP2, 0, -1}, {kRP2, kRP1, 1, 0},
             {kRP2, kRP2, 0, 0}, {kRM1, kRM1, 0, -1}, {kRM1, kRM2, 0, 1}};
      break;
  }
  return s;
}

int role_coord(int role, Signature sig) {
  switch (role) {
    case kRP1:
      return 1;
    case kRP2:
      return 2;
    case kRM1:
      return sig.n() - 1;
    default:
      return sig.n();
  }
}

struct PatternCounts {
  int plus = 0;
  int minus = 0;
  int arcs = 0;
};

PatternCounts count_pattern(const char* pattern) {
  PatternCounts pc;
  bool seen[10] = {};
  for (const char* p = pattern; *p; ++p) {
    if (*p == '+') ++pc.plus;
    else if (*p == '-') ++pc.minus;
    else if (!seen[*p - '0']) {
      seen[*p - '0'] = true;
      ++pc.arcs;
    }
  }
  return pc;
}

// The full clan realizing the pattern at the given positions, every
// other position a sign, pluses before minuses.
Clan assemble(const char* pattern, Signature sig, const int* pos,
              int arity) {
  const int n = sig.n();
  const PatternCounts pc = count_pattern(pattern);
  const int fill_plus = sig.p - pc.plus - pc.arcs;
  const int fill_minus = sig.q - pc.minus - pc.arcs;
  if (fill_plus < 0 || fill_minus < 0)
    throw ClanError("pattern does not fit the signature");
  std::vector<int> code(n, Clan::kPlus);
  std::vector<bool> taken(n + 1, false);
  for (int a = 0; a < arity; ++a) {
    if (pos[a] < 1 || pos[a] > n || (a > 0 && pos[a] <= pos[a - 1]))
      throw ClanError("pattern positions must increase inside 1..n");
    taken[pos[a]] = true;
  }
  for (int a = 0; a < arity; ++a) {
    const char ch = pattern[a];
    if (ch == '+') {
      code[pos[a] - 1] = Clan::kPlus;
    } else if (ch == '-') {
      code[pos[a] - 1] = Clan::kMinus;
    } else {
      for (int b = 0; b < arity; ++b)
        if (b != a && pattern[b] == ch) code[pos[a] - 1] = pos[b] - 1;
    }
  }
  int placed_plus = 0;
  for (int i = 1; i <= n; ++i)
    if (!taken[i])
      code[i - 1] = placed_plus++ < fill_plus ? Clan::kPlus : Clan::kMinus;
  return Clan(sig, std::move(code));
}

}  // namespace

CurveCase make_curve_case(MoveType move, Signature sig,
                          std::array<int, 4> pos) {
  const CaseSpec spec = case_spec(move);
  const int arity = static_cast<int>(std::strlen(spec.gamma));
  const int n = sig.n();

  CurveCase c{move,
              sig,
              MoveInstance{move, pos},
              assemble(spec.gamma, sig, pos.data(), arity),
              assemble(spec.tau, sig, pos.data(), arity),
              RatMatrix(n, n),
              RatMatrix(n, n),
              {},
              RatMatrix(n, n),
              RatMatrix(n, n)};

  if (!(apply_move(c.source, c.instance) == c.target))
    throw CaseMismatchError("tabulated patterns disagree with the move");

  // Coordinates spoken for by the construction; everything else is
  // free for the sign fillers.
  bool role_used[4] = {};
  auto mark = [&](const std::vector<ColSpec>& cols) {
    for (const ColSpec& col : cols)
      for (int r = 0; r < 4; ++r)
        if (col.c[r] != 0 || col.s[r] != 0) role_used[r] = true;
  };
  mark(spec.lower);
  mark(spec.upper);
  mark(spec.family);
  for (const auto& entry : spec.k) {
    role_used[entry[0]] = true;
    role_used[entry[1]] = true;
  }
  std::vector<bool> coord_taken(n + 1, false);
  for (int r = 0; r < 4; ++r) {
    if (!role_used[r]) continue;
    const int coord = role_coord(r, sig);
    const bool plus_side = r == kRP1 || r == kRP2;
    if (coord < 1 || coord > n || coord_taken[coord] ||
        plus_side != (coord <= sig.p))
      throw ClanError("signature too small for this construction");
    coord_taken[coord] = true;
  }
  std::vector<int> free_plus, free_minus;
  for (int coord = 1; coord <= n; ++coord)
    if (!coord_taken[coord])
      (coord <= sig.p ? free_plus : free_minus).push_back(coord);

  // Filler columns, shared by E, F, and the family.
  std::vector<bool> pattern_pos(n + 1, false);
  for (int a = 0; a < arity; ++a) pattern_pos[pos[a]] = true;
  std::size_t next_plus = 0, next_minus = 0;
  for (int i = 1; i <= n; ++i) {
    if (pattern_pos[i]) continue;
    const int coord = c.source.is_plus(i) ? free_plus[next_plus++]
                                          : free_minus[next_minus++];
    c.lower_rep.at(coord - 1, i - 1) = 1;
    c.upper_rep.at(coord - 1, i - 1) = 1;
    c.family_const.at(coord - 1, i - 1) = 1;
  }

  auto fill = [&](const std::vector<ColSpec>& cols, RatMatrix& constant,
                  RatMatrix* slope) {
    for (int a = 0; a < arity; ++a)
      for (int r = 0; r < 4; ++r) {
        const int coord = role_coord(r, sig);
        if (cols[a].c[r] != 0)
          constant.at(coord - 1, pos[a] - 1) = cols[a].c[r];
        if (slope && cols[a].s[r] != 0)
          slope->at(coord - 1, pos[a] - 1) = cols[a].s[r];
      }
  };
  fill(spec.lower, c.lower_rep, nullptr);
  fill(spec.upper, c.upper_rep, nullptr);
  fill(spec.family, c.family_const, &c.family_slope);

  for (const auto& entry : spec.k)
    c.k_entries.push_back({role_coord(entry[0], sig),
                           role_coord(entry[1], sig), Rational(entry[2]),
                           Rational(entry[3])});
  return c;
}

RatMatrix curve_k(const CurveCase& c, const Rational& t) {
  if (t.is_zero())
    throw std::invalid_argument("the witness matrix needs t != 0");
  RatMatrix k = RatMatrix::identity(c.sig.n());
  for (const KEntry& e : c.k_entries)
    k.at(e.row - 1, e.col - 1) = e.constant + e.over_t / t;
  return k;
}

RatMatrix curve_family(const CurveCase& c, const Rational& t) {
  RatMatrix g = c.family_const;
  if (!t.is_zero())
    for (std::size_t idx = 0; idx < g.a.size(); ++idx)
      g.a[idx] += t * c.family_slope.a[idx];
  return g;
}

std::vector<CurveCase> standard_curve_cases() {
  static const MoveType all[] = {
      MoveType::plus_minus_to_arc,    MoveType::minus_plus_to_arc,
      MoveType::arc_over_plus_right,  MoveType::arc_over_minus_right,
      MoveType::arc_over_plus_left,   MoveType::arc_over_minus_left,
      MoveType::disjoint_to_crossing, MoveType::disjoint_to_plus_minus,
      MoveType::disjoint_to_minus_plus, MoveType::crossing_to_nested};
  std::vector<CurveCase> cases;
  for (MoveType m : all) {
    const CaseSpec spec = case_spec(m);
    const PatternCounts pc = count_pattern(spec.gamma);
    const int arity = static_cast<int>(std::strlen(spec.gamma));
    const Signature smallest{pc.plus + pc.arcs, pc.minus + pc.arcs};
    std::array<int, 4> at_front{};
    std::array<int, 4> shifted{};
    for (int a = 0; a < arity; ++a) {
      at_front[a] = a + 1;
      shifted[a] = a + 2;
    }
    cases.push_back(make_curve_case(m, smallest, at_front));
    cases.push_back(make_curve_case(
        m, Signature{smallest.p + 1, smallest.q + 1}, shifted));
  }
  return cases;
}

std::string describe(const CurveCase& c) {
  std::ostringstream o;
  o << move_name(c.move) << " at (";
  for (int a = 0; a < c.instance.arity(); ++a)
    o << (a ? "," : "") << c.instance.pos[a];
  o << ") in (" << c.sig.p << "," << c.sig.q << ")";
  return o.str();
}

std::vector<Rational> default_curve_samples() {
  return {Rational(1), Rational(1, 2), Rational(1, 3), Rational(-1)};
}

bool CurveReport::ok() const { return failures() == 0; }

int CurveReport::failures() const {
  int bad = 0;
  for (const auto& item : items) bad += !item.pass;
  return bad;
}

CurveReport curve_check_report(const CurveCase& c,
                               const std::vector<Rational>& samples) {
  for (const Rational& t : samples)
    if (t.is_zero())
      throw std::invalid_argument("curve samples must be nonzero");

  CurveReport report;
  const std::string tag = describe(c) + ": ";
  auto run = [&](const std::string& what, auto&& body) {
    CurveCheckItem item;
    item.what = tag + what;
    try {
      item.detail = body();
      item.pass = item.detail.empty();
    } catch (const std::exception& e) {
      item.pass = false;
      item.detail = e.what();
    }
    report.items.push_back(std::move(item));
  };

  run("k(t) respects the block split", [&]() -> std::string {
    for (const KEntry& e : c.k_entries)
      if ((e.row <= c.sig.p) != (e.col <= c.sig.p))
        return "entry (" + std::to_string(e.row) + "," +
               std::to_string(e.col) + ") crosses the blocks";
    return "";
  });
  run("lower representative lies in its orbit", [&]() -> std::string {
    const Clan found = orbit_of(Flag(c.lower_rep), c.sig);
    if (found == c.source) return "";
    return "landed in " + format_clan(found);
  });
  run("upper representative lies in its orbit", [&]() -> std::string {
    const Clan found = orbit_of(Flag(c.upper_rep), c.sig);
    if (found == c.target) return "";
    return "landed in " + format_clan(found);
  });
  run("move sends the lower clan to the upper clan", [&]() -> std::string {
    if (apply_move(c.source, c.instance) == c.target) return "";
    return "move image is " + format_clan(apply_move(c.source, c.instance));
  });

  for (const Rational& t : samples) {
    run("k(t) keeps the curve in the upper orbit at t=" + t.str(),
        [&]() -> std::string {
          const Flag moved = apply(curve_k(c, t), Flag(c.upper_rep));
          const Clan found = orbit_of(moved, c.sig);
          if (found == c.target) return "";
          return "curve point lies in " + format_clan(found);
        });
    run("family is a flag equal to k(t).F at t=" + t.str(),
        [&]() -> std::string {
          const Flag moved = apply(curve_k(c, t), Flag(c.upper_rep));
          const Flag fam = Flag(curve_family(c, t));  // may throw
          if (same_flag(fam, moved)) return "";
          return "family spans a different flag";
        });
  }

  run("family at t=0 equals the lower representative", [&]() -> std::string {
    const Flag limit = Flag(curve_family(c, Rational(0)));
    if (same_flag(limit, Flag(c.lower_rep))) return "";
    return "limit flag differs";
  });
  return report;
}

void curve_check(const CurveCase& c, const std::vector<Rational>& samples) {
  const CurveReport report = curve_check_report(c, samples);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << report.failures() << " curve check(s) failed:";
  for (const auto& item : report.items)
    if (!item.pass) msg << "\n  " << item.what << " (" << item.detail << ")";
  throw CaseMismatchError(msg.str());
}

}  // namespace clans
