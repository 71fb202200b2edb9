#ifndef CLANS_RELATION_HPP
#define CLANS_RELATION_HPP

#include <vector>

#include "clans/bitmatrix.hpp"
#include "clans/clan.hpp"

namespace clans {

// The pairwise kernels below come in an OpenMP flavor and a plain
// serial one. Results are identical bit for bit; the tests check that
// and the benchmark tool compares timings.
enum class Execution { serial, parallel };

// Full order relation on a profile list: out.test(x,y) iff
// profiles[x] <= profiles[y]. All profiles must share one signature.
BitMatrix leq_matrix(const std::vector<RankProfile>& profiles, Execution ex);

// Reflexive-transitive closure of a DAG given as adjacency lists.
// Throws ClanError on a cycle.
BitMatrix reachability_closure(const std::vector<std::vector<int>>& edges);

// Cover relation of a reflexive partial order: (x,y) survives iff
// x < y with nothing strictly between.
BitMatrix transitive_reduction(const BitMatrix& order, Execution ex);

}  // namespace clans

#endif  // CLANS_RELATION_HPP
