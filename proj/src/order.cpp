#include "clans/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace clans {

bool leq(const RankProfile& a, const RankProfile& b) {
  if (!(a.signature() == b.signature()))
    throw SignatureMismatchError("comparing clans of different signatures");
  const auto& x = a.data();
  const auto& y = b.data();
  const int split = 2 * a.size();
  const int total = static_cast<int>(x.size());
  for (int t = 0; t < split; ++t)
    if (x[t] < y[t]) return false;
  for (int t = split; t < total; ++t)
    if (x[t] > y[t]) return false;
  return true;
}

bool leq(const Clan& a, const Clan& b) {
  return leq(rank_profile(a), rank_profile(b));
}

namespace {

// v(i;.) for i = 1..n: dots plus twice the completed pairs.
std::vector<int> dot_counts(const InvolutionString& v) {
  const int n = v.size();
  std::vector<int> out(n + 1, 0);
  int dots = 0, complete = 0;
  for (int i = 1; i <= n; ++i) {
    if (v.is_dot(i))
      ++dots;
    else if (v.mate(i) < i)
      ++complete;
    out[i] = dots + 2 * complete;
  }
  return out;
}

// v(s;t) for s < t, same triangular layout as clan rank profiles.
std::vector<int> pair_counts(const InvolutionString& v) {
  const int n = v.size();
  std::vector<int> out(n * (n - 1) / 2, 0);
  for (int s = 1; s <= n; ++s) {
    if (v.is_dot(s) || v.mate(s) < s) continue;
    const int t = v.mate(s);
    for (int i = s; i <= t - 2; ++i)
      for (int j = i + 1; j <= t - 1; ++j)
        ++out[RankProfile::pair_index(n, i, j)];
  }
  return out;
}

}  // namespace

bool involution_leq_rank(const InvolutionString& a,
                         const InvolutionString& b) {
  if (a.size() != b.size())
    throw LengthMismatchError("comparing involutions of different lengths");
  const auto da = dot_counts(a), db = dot_counts(b);
  for (int i = 1; i <= a.size(); ++i)
    if (da[i] < db[i]) return false;
  const auto pa = pair_counts(a), pb = pair_counts(b);
  for (std::size_t t = 0; t < pa.size(); ++t)
    if (pa[t] > pb[t]) return false;
  return true;
}

namespace {

// r_u(i,j) = #{k <= i : u(k) >= j} over 1..n, row by row.
std::vector<std::vector<int>> ne_rank_matrix(const InvolutionString& v) {
  const int n = v.size();
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 2, 0));
  for (int i = 1; i <= n; ++i) {
    const int ui = v.is_dot(i) ? i : v.mate(i);
    for (int j = 1; j <= n; ++j)
      r[i][j] = r[i - 1][j] + (ui >= j ? 1 : 0);
  }
  return r;
}

}  // namespace

bool involution_leq_sn(const InvolutionString& a, const InvolutionString& b) {
  if (a.size() != b.size())
    throw LengthMismatchError("comparing involutions of different lengths");
  const auto ra = ne_rank_matrix(a), rb = ne_rank_matrix(b);
  for (int i = 1; i <= a.size(); ++i)
    for (int j = 1; j <= a.size(); ++j)
      if (ra[i][j] > rb[i][j]) return false;
  return true;
}

int MoveInstance::arity() const {
  switch (type) {
    case MoveType::plus_minus_to_arc:
    case MoveType::minus_plus_to_arc:
      return 2;
    case MoveType::arc_over_plus_right:
    case MoveType::arc_over_minus_right:
    case MoveType::arc_over_plus_left:
    case MoveType::arc_over_minus_left:
      return 3;
    default:
      return 4;
  }
}

const char* move_name(MoveType t) {
  switch (t) {
    case MoveType::plus_minus_to_arc:
      return "+- -> 11";
    case MoveType::minus_plus_to_arc:
      return "-+ -> 11";
    case MoveType::arc_over_plus_right:
      return "11+ -> 1+1";
    case MoveType::arc_over_minus_right:
      return "11- -> 1-1";
    case MoveType::arc_over_plus_left:
      return "+11 -> 1+1";
    case MoveType::arc_over_minus_left:
      return "-11 -> 1-1";
    case MoveType::disjoint_to_crossing:
      return "1122 -> 1212";
    case MoveType::disjoint_to_plus_minus:
      return "1122 -> 1+-1";
    case MoveType::disjoint_to_minus_plus:
      return "1122 -> 1-+1";
    case MoveType::crossing_to_nested:
      return "1212 -> 1221";
  }
  return "?";
}

namespace {

[[noreturn]] void bad_pattern(const MoveInstance& inst) {
  throw std::invalid_argument(std::string("positions do not match pattern ") +
                              move_name(inst.type));
}

}  // namespace

Clan apply_move(const Clan& c, const MoveInstance& inst) {
  const auto [i, j, k, l] = inst.pos;
  const int n = c.size();
  for (int a = 0; a < inst.arity(); ++a) {
    if (inst.pos[a] < 1 || inst.pos[a] > n) bad_pattern(inst);
    if (a && inst.pos[a] <= inst.pos[a - 1]) bad_pattern(inst);
  }
  std::vector<int> code(c.code());
  auto arc = [&](int a, int b) {
    code[a - 1] = b - 1;
    code[b - 1] = a - 1;
  };
  switch (inst.type) {
    case MoveType::plus_minus_to_arc:
      if (!c.is_plus(i) || !c.is_minus(j)) bad_pattern(inst);
      arc(i, j);
      break;
    case MoveType::minus_plus_to_arc:
      if (!c.is_minus(i) || !c.is_plus(j)) bad_pattern(inst);
      arc(i, j);
      break;
    case MoveType::arc_over_plus_right:
      if (!c.is_arc(i) || c.mate(i) != j || !c.is_plus(k)) bad_pattern(inst);
      arc(i, k);
      code[j - 1] = Clan::kPlus;
      break;
    case MoveType::arc_over_minus_right:
      if (!c.is_arc(i) || c.mate(i) != j || !c.is_minus(k)) bad_pattern(inst);
      arc(i, k);
      code[j - 1] = Clan::kMinus;
      break;
    case MoveType::arc_over_plus_left:
      if (!c.is_plus(i) || !c.is_arc(j) || c.mate(j) != k) bad_pattern(inst);
      arc(i, k);
      code[j - 1] = Clan::kPlus;
      break;
    case MoveType::arc_over_minus_left:
      if (!c.is_minus(i) || !c.is_arc(j) || c.mate(j) != k) bad_pattern(inst);
      arc(i, k);
      code[j - 1] = Clan::kMinus;
      break;
    case MoveType::disjoint_to_crossing:
      if (!c.is_arc(i) || c.mate(i) != j || !c.is_arc(k) || c.mate(k) != l)
        bad_pattern(inst);
      arc(i, k);
      arc(j, l);
      break;
    case MoveType::disjoint_to_plus_minus:
      if (!c.is_arc(i) || c.mate(i) != j || !c.is_arc(k) || c.mate(k) != l)
        bad_pattern(inst);
      arc(i, l);
      code[j - 1] = Clan::kPlus;
      code[k - 1] = Clan::kMinus;
      break;
    case MoveType::disjoint_to_minus_plus:
      if (!c.is_arc(i) || c.mate(i) != j || !c.is_arc(k) || c.mate(k) != l)
        bad_pattern(inst);
      arc(i, l);
      code[j - 1] = Clan::kMinus;
      code[k - 1] = Clan::kPlus;
      break;
    case MoveType::crossing_to_nested:
      if (!c.is_arc(i) || c.mate(i) != k || !c.is_arc(j) || c.mate(j) != l)
        bad_pattern(inst);
      arc(i, l);
      arc(j, k);
      break;
  }
  return Clan(c.signature(), std::move(code));
}

std::vector<std::pair<MoveInstance, Clan>> covering_moves(const Clan& c) {
  const int n = c.size();
  std::vector<int> plus, minus;
  std::vector<std::pair<int, int>> arcs;  // (first, second)
  for (int i = 1; i <= n; ++i) {
    if (c.is_plus(i)) plus.push_back(i);
    if (c.is_minus(i)) minus.push_back(i);
    if (c.is_arc_first(i)) arcs.emplace_back(i, c.mate(i));
  }
  std::vector<MoveInstance> insts;
  for (int p : plus)
    for (int m : minus) {
      if (p < m)
        insts.push_back({MoveType::plus_minus_to_arc, {p, m, 0, 0}});
      else
        insts.push_back({MoveType::minus_plus_to_arc, {m, p, 0, 0}});
    }
  for (const auto& [a, b] : arcs) {
    for (int s : plus) {
      if (s > b) insts.push_back({MoveType::arc_over_plus_right, {a, b, s, 0}});
      if (s < a) insts.push_back({MoveType::arc_over_plus_left, {s, a, b, 0}});
    }
    for (int s : minus) {
      if (s > b)
        insts.push_back({MoveType::arc_over_minus_right, {a, b, s, 0}});
      if (s < a) insts.push_back({MoveType::arc_over_minus_left, {s, a, b, 0}});
    }
  }
  for (const auto& [a, b] : arcs)
    for (const auto& [x, y] : arcs) {
      if (b < x) {  // disjoint, a < b < x < y
        insts.push_back({MoveType::disjoint_to_crossing, {a, b, x, y}});
        insts.push_back({MoveType::disjoint_to_plus_minus, {a, b, x, y}});
        insts.push_back({MoveType::disjoint_to_minus_plus, {a, b, x, y}});
      }
      if (a < x && x < b && b < y)  // crossing
        insts.push_back({MoveType::crossing_to_nested, {a, x, b, y}});
    }
  std::sort(insts.begin(), insts.end(),
            [](const MoveInstance& u, const MoveInstance& v) {
              if (u.type != v.type) return u.type < v.type;
              return u.pos < v.pos;
            });
  std::vector<std::pair<MoveInstance, Clan>> out;
  out.reserve(insts.size());
  for (const auto& inst : insts) out.emplace_back(inst, apply_move(c, inst));
  return out;
}

}  // namespace clans
