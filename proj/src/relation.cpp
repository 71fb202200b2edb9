#include "clans/relation.hpp"

#include <cstddef>
#include <utility>

namespace clans {

namespace {

// leq() without the per-call signature check; the caller checked once.
inline bool profile_leq_raw(const RankProfile& a, const RankProfile& b,
                            int split) {
  const auto& x = a.data();
  const auto& y = b.data();
  const int total = static_cast<int>(x.size());
  for (int t = 0; t < split; ++t)
    if (x[t] < y[t]) return false;
  for (int t = split; t < total; ++t)
    if (x[t] > y[t]) return false;
  return true;
}

}  // namespace

BitMatrix leq_matrix(const std::vector<RankProfile>& profiles, Execution ex) {
  const int n = static_cast<int>(profiles.size());
  BitMatrix rel(n);
  if (n == 0) return rel;
  const Signature sig = profiles.front().signature();
  for (const auto& p : profiles)
    if (!(p.signature() == sig))
      throw SignatureMismatchError("mixed signatures in one relation");
  const int split = 2 * profiles.front().size();
  auto fill_row = [&](int x) {
    for (int y = 0; y < n; ++y)
      if (profile_leq_raw(profiles[x], profiles[y], split)) rel.set(x, y);
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int x = 0; x < n; ++x) fill_row(x);
  } else {
    for (int x = 0; x < n; ++x) fill_row(x);
  }
  return rel;
}

BitMatrix reachability_closure(const std::vector<std::vector<int>>& edges) {
  const int n = static_cast<int>(edges.size());
  BitMatrix clo(n);
  std::vector<int> state(n, 0);  // 0 fresh, 1 on stack, 2 done
  std::vector<std::pair<int, std::size_t>> stack;
  for (int start = 0; start < n; ++start) {
    if (state[start] == 2) continue;
    stack.emplace_back(start, 0);
    state[start] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < edges[v].size()) {
        const int w = edges[v][next++];
        if (state[w] == 1) throw ClanError("cycle in the move graph");
        if (state[w] == 0) {
          state[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        clo.set(v, v);
        for (int w : edges[v]) clo.or_row_into(w, v);
        state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return clo;
}

BitMatrix transitive_reduction(const BitMatrix& order, Execution ex) {
  const int n = order.n();
  const int words = order.words();
  // strict part first
  BitMatrix strict = order;
  for (int x = 0; x < n; ++x) strict.reset(x, x);
  BitMatrix covers(n);
  auto reduce_row = [&](int x) {
    std::vector<std::uint64_t> via(static_cast<std::size_t>(words), 0);
    strict.for_each_in_row(x, [&](int z) {
      const std::uint64_t* zr = strict.row(z);
      for (int w = 0; w < words; ++w) via[w] |= zr[w];
    });
    const std::uint64_t* sx = strict.row(x);
    std::uint64_t* cx = covers.row(x);
    for (int w = 0; w < words; ++w) cx[w] = sx[w] & ~via[w];
  };
  if (ex == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int x = 0; x < n; ++x) reduce_row(x);
  } else {
    for (int x = 0; x < n; ++x) reduce_row(x);
  }
  return covers;
}

}  // namespace clans
