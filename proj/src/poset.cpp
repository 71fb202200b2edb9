#include "clans/poset.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "json.hpp"

namespace clans {

int ClanPoset::index_of(const Clan& c) const {
  if (!(c.signature() == sig))
    throw SignatureMismatchError("clan signature differs from the poset");
  auto it = std::lower_bound(nodes.begin(), nodes.end(), c, enumeration_less);
  if (it == nodes.end() || !(*it == c))
    throw ClanError("clan not found in the poset");
  return static_cast<int>(it - nodes.begin());
}

namespace {

// Longest path from a source (in-degree zero) node, over the cover DAG.
std::vector<int> longest_path_ranks(int n,
                                    const std::vector<std::vector<int>>& up,
                                    std::vector<int> indeg) {
  std::vector<int> rk(n, 0);
  std::queue<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  int seen = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop();
    ++seen;
    for (int w : up[v]) {
      rk[w] = std::max(rk[w], rk[v] + 1);
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (seen != n) throw ClanError("cover graph is not acyclic");
  return rk;
}

}  // namespace

ClanPoset build_poset(Signature sig, Execution ex) {
  std::vector<Clan> nodes = enumerate_clans(sig);
  const int n = static_cast<int>(nodes.size());

  std::vector<RankProfile> profiles;
  profiles.reserve(nodes.size());
  for (const Clan& c : nodes) profiles.push_back(rank_profile(c));

  BitMatrix relation = leq_matrix(profiles, ex);

  // Independent construction: reachability along the covering moves.
  std::vector<std::vector<int>> edges(n);
  {
    std::vector<Clan> sorted = nodes;  // already sorted; kept for clarity
    for (int x = 0; x < n; ++x) {
      for (const auto& [mv, image] : covering_moves(nodes[x])) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), image,
                                   enumeration_less);
        edges[x].push_back(static_cast<int>(it - sorted.begin()));
      }
      std::sort(edges[x].begin(), edges[x].end());
      edges[x].erase(std::unique(edges[x].begin(), edges[x].end()),
                     edges[x].end());
    }
  }
  BitMatrix reachable = reachability_closure(edges);
  if (!(reachable == relation)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (reachable.test(x, y) != relation.test(x, y)) {
          std::ostringstream msg;
          msg << "order disagreement at (" << format_clan(nodes[x]) << ", "
              << format_clan(nodes[y]) << "): moves say "
              << (reachable.test(x, y) ? "reachable" : "unreachable")
              << ", rank numbers say "
              << (relation.test(x, y) ? "below" : "not below");
          throw OrderMismatchError(msg.str());
        }
  }

  BitMatrix cover_bits = transitive_reduction(relation, ex);
  std::vector<std::pair<int, int>> covers;
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    cover_bits.for_each_in_row(x, [&](int y) {
      covers.emplace_back(x, y);
      up[x].push_back(y);
      ++indeg[y];
    });

  std::vector<int> rank = longest_path_ranks(n, up, indeg);

  std::vector<int> minimal;
  std::vector<int> maximal;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) minimal.push_back(v);
    if (up[v].empty()) maximal.push_back(v);
  }

  return ClanPoset{sig,
                   std::move(nodes),
                   std::move(profiles),
                   std::move(relation),
                   std::move(cover_bits),
                   std::move(covers),
                   std::move(rank),
                   std::move(minimal),
                   std::move(maximal)};
}

IntervalReport interval(const ClanPoset& poset, int bottom, int top) {
  const int n = poset.size();
  if (bottom < 0 || bottom >= n || top < 0 || top >= n)
    throw ClanError("interval endpoint out of range");
  if (!poset.leq_idx(bottom, top)) {
    std::ostringstream msg;
    msg << format_clan(poset.nodes[bottom]) << " is not below "
        << format_clan(poset.nodes[top]);
    throw NotComparableError(msg.str());
  }

  IntervalReport out;
  out.bottom = bottom;
  out.top = top;
  std::vector<int> local(n, -1);
  for (int z = 0; z < n; ++z)
    if (poset.leq_idx(bottom, z) && poset.leq_idx(z, top)) {
      local[z] = static_cast<int>(out.elements.size());
      out.elements.push_back(z);
    }
  const int m = static_cast<int>(out.elements.size());

  // Covers of the interval are the global covers with both ends inside.
  std::vector<std::vector<int>> up(m);
  std::vector<int> indeg(m, 0);
  for (int z : out.elements)
    poset.cover_bits.for_each_in_row(z, [&](int w) {
      if (local[w] >= 0) {
        up[local[z]].push_back(local[w]);
        ++indeg[local[w]];
      }
    });
  std::vector<int> rel_rank = longest_path_ranks(m, up, indeg);

  out.length = rel_rank[local[top]];
  out.rank_histogram.assign(out.length + 1, 0);
  for (int k = 0; k < m; ++k) ++out.rank_histogram[rel_rank[k]];

  out.is_chain = true;
  for (int a = 0; a < m && out.is_chain; ++a)
    for (int b = a + 1; b < m; ++b) {
      const int u = out.elements[a];
      const int v = out.elements[b];
      if (!poset.leq_idx(u, v) && !poset.leq_idx(v, u)) {
        out.is_chain = false;
        break;
      }
    }
  return out;
}

PosetProperties poset_properties(const ClanPoset& poset, int witness_cap) {
  PosetProperties out;
  out.sig = poset.sig;
  out.size = poset.size();
  out.cover_count = static_cast<int>(poset.covers.size());
  out.minimal = poset.minimal;
  out.maximal = poset.maximal;
  out.height = 0;
  for (int r : poset.rank) out.height = std::max(out.height, r);
  for (int v : poset.maximal) out.maximal_ranks.push_back(poset.rank[v]);
  out.unique_maximal = poset.maximal.size() == 1;

  int sign_only_nodes = 0;
  for (const Clan& c : poset.nodes) sign_only_nodes += c.sign_only();
  out.minimal_all_sign_only =
      sign_only_nodes == static_cast<int>(poset.minimal.size()) &&
      std::all_of(poset.minimal.begin(), poset.minimal.end(),
                  [&](int v) { return poset.nodes[v].sign_only(); });

  // Purity: covers climb one rank at a time and the maximal elements
  // share one rank; together that pins every maximal chain's length.
  for (const auto& [lo, hi] : poset.covers)
    if (poset.rank[hi] != poset.rank[lo] + 1) {
      ++out.purity_violation_count;
      if (static_cast<int>(out.purity_violations.size()) < witness_cap)
        out.purity_violations.push_back(
            {lo, hi, poset.rank[lo], poset.rank[hi]});
    }
  bool max_ranks_equal = true;
  for (int r : out.maximal_ranks) max_ranks_equal &= (r == out.height);
  out.pure = out.purity_violation_count == 0 && max_ranks_equal;

  out.lattice_checks_evaluated = out.pure && out.unique_maximal;
  if (!out.lattice_checks_evaluated) return out;

  // Work in the poset with one artificial bottom adjoined: its rank is
  // zero and every original rank shifts up by one. Index -1 stands for
  // the bottom in the witnesses.
  const int n = poset.size();
  const int words = poset.relation.words();
  BitMatrix geq = poset.relation.transposed();
  std::vector<std::uint64_t> even_rank(words, 0);
  std::vector<std::uint64_t> odd_rank(words, 0);
  for (int v = 0; v < n; ++v) {
    auto& mask = (poset.rank[v] % 2 == 0) ? even_rank : odd_rank;
    mask[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  auto note_thin = [&](int lo, int hi, int mid) {
    if (mid == 2) return;
    ++out.thin_violation_count;
    if (static_cast<int>(out.thin_violations.size()) < witness_cap)
      out.thin_violations.push_back({lo, hi, mid});
  };
  auto note_parity = [&](int lo, int hi, int even, int odd) {
    if (even == odd) return;
    ++out.euler_violation_count;
    if (static_cast<int>(out.euler_violations.size()) < witness_cap)
      out.euler_violations.push_back({lo, hi, even, odd});
  };

  for (int y = 0; y < n; ++y) {
    // Intervals rooted at the artificial bottom. Adjoined ranks are
    // original ranks plus one, and the bottom itself is even.
    const int below_even =
        BitMatrix::and_popcount(geq.row(y), even_rank.data(), words);
    const int below_odd =
        BitMatrix::and_popcount(geq.row(y), odd_rank.data(), words);
    if (poset.rank[y] == 1) note_thin(-1, y, below_even);  // minimal below y
    note_parity(-1, y, below_odd + 1, below_even);
  }
  for (int x = 0; x < n; ++x)
    poset.relation.for_each_in_row(x, [&](int y) {
      if (y == x) return;
      const int diff = poset.rank[y] - poset.rank[x];
      if (diff == 2)
        note_thin(x, y,
                  BitMatrix::and_popcount(poset.relation.row(x), geq.row(y),
                                          words) -
                      2);
      const int even = BitMatrix::and3_popcount(
          poset.relation.row(x), geq.row(y), even_rank.data(), words);
      const int odd = BitMatrix::and3_popcount(
          poset.relation.row(x), geq.row(y), odd_rank.data(), words);
      // Adjoined-rank parity flips both counts the same way; compare
      // them in original parity, swapped when the report needs the
      // adjoined convention.
      note_parity(x, y, odd, even);
    });

  out.thin = out.thin_violation_count == 0;
  out.eulerian = out.euler_violation_count == 0;
  return out;
}

std::string export_hasse_dot(const ClanPoset& poset) {
  std::ostringstream o;
  o << "digraph hasse {\n";
  o << "  rankdir=BT;\n";
  o << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int v = 0; v < poset.size(); ++v)
    o << "  n" << v << " [label=\"" << format_clan(poset.nodes[v]) << "\"];\n";
  for (const auto& [lo, hi] : poset.covers)
    o << "  n" << lo << " -> n" << hi << ";\n";
  int height = 0;
  for (int r : poset.rank) height = std::max(height, r);
  for (int level = 0; level <= height; ++level) {
    o << "  { rank=same;";
    for (int v = 0; v < poset.size(); ++v)
      if (poset.rank[v] == level) o << " n" << v << ";";
    o << " }\n";
  }
  o << "}\n";
  return o.str();
}

std::string export_hasse_json(const ClanPoset& poset) {
  nlohmann::ordered_json j;
  j["signature"]["p"] = poset.sig.p;
  j["signature"]["q"] = poset.sig.q;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const Clan& c : poset.nodes) j["nodes"].push_back(format_clan(c));
  j["covers"] = nlohmann::ordered_json::array();
  for (const auto& [lo, hi] : poset.covers)
    j["covers"].push_back({lo, hi});
  j["rank"] = poset.rank;
  return j.dump(2);
}

}  // namespace clans
