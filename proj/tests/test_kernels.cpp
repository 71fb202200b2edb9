#include <vector>

#include "clans/bitmatrix.hpp"
#include "clans/clan.hpp"
#include "clans/errors.hpp"
#include "clans/order.hpp"
#include "clans/relation.hpp"
#include "clans/verify.hpp"
#include "doctest.h"

using namespace clans;

namespace {

std::vector<RankProfile> profiles_of(Signature sig) {
  std::vector<RankProfile> out;
  for (const Clan& c : enumerate_clans(sig)) out.push_back(rank_profile(c));
  return out;
}

}  // namespace

TEST_CASE("bitmatrix basics") {
  BitMatrix m(70);  // forces a second word per row
  CHECK_FALSE(m.test(0, 64));
  m.set(0, 64);
  m.set(0, 3);
  m.set(1, 3);
  CHECK(m.test(0, 64));
  CHECK(m.row_popcount(0) == 2);
  m.or_row_into(0, 1);
  CHECK(m.row_popcount(1) == 2);
  m.reset(1, 64);
  CHECK(m.row_popcount(1) == 1);

  int seen = 0;
  m.for_each_in_row(0, [&](int) { ++seen; });
  CHECK(seen == 2);

  BitMatrix t = m.transposed();
  CHECK(t.test(64, 0));
  CHECK(t.test(3, 1));
  CHECK_FALSE(t.test(64, 1));
}

TEST_CASE("serial and parallel order kernels agree bit for bit") {
  for (Signature sig : {Signature{2, 2}, Signature{3, 2}, Signature{4, 1}}) {
    std::vector<RankProfile> profiles = profiles_of(sig);
    BitMatrix serial = leq_matrix(profiles, Execution::serial);
    BitMatrix parallel = leq_matrix(profiles, Execution::parallel);
    CHECK(serial == parallel);

    BitMatrix red_serial = transitive_reduction(serial, Execution::serial);
    BitMatrix red_parallel =
        transitive_reduction(parallel, Execution::parallel);
    CHECK(red_serial == red_parallel);
  }
}

TEST_CASE("the order matrix is what leq says, pair by pair") {
  Signature sig{2, 1};
  std::vector<RankProfile> profiles = profiles_of(sig);
  BitMatrix m = leq_matrix(profiles, Execution::serial);
  int n = static_cast<int>(profiles.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      CHECK(m.test(x, y) == leq(profiles[x], profiles[y]));
}

TEST_CASE("mixed signatures are rejected") {
  std::vector<RankProfile> mixed = {rank_profile(parse_clan("+-")),
                                    rank_profile(parse_clan("-+")),
                                    rank_profile(parse_clan("++-"))};
  CHECK_THROWS_AS(leq_matrix(mixed, Execution::serial),
                  SignatureMismatchError);
}

TEST_CASE("reachability closure of a diamond") {
  // 0 -> 1 -> 3, 0 -> 2 -> 3
  std::vector<std::vector<int>> edges = {{1, 2}, {3}, {3}, {}};
  BitMatrix clo = reachability_closure(edges);
  for (int v = 0; v < 4; ++v) CHECK(clo.test(v, v));
  CHECK(clo.test(0, 3));
  CHECK(clo.test(0, 1));
  CHECK(clo.test(1, 3));
  CHECK_FALSE(clo.test(1, 2));
  CHECK_FALSE(clo.test(3, 0));
}

TEST_CASE("reachability closure refuses cycles") {
  std::vector<std::vector<int>> cyclic = {{1}, {2}, {0}};
  CHECK_THROWS_AS(reachability_closure(cyclic), ClanError);
  std::vector<std::vector<int>> self_loop = {{0}};
  CHECK_THROWS_AS(reachability_closure(self_loop), ClanError);
}

TEST_CASE("transitive reduction strips implied edges") {
  // Chain 0 < 1 < 2 plus the implied 0 < 2, reflexive closure included.
  BitMatrix order(3);
  for (int v = 0; v < 3; ++v) order.set(v, v);
  order.set(0, 1);
  order.set(1, 2);
  order.set(0, 2);
  BitMatrix covers = transitive_reduction(order, Execution::serial);
  CHECK(covers.test(0, 1));
  CHECK(covers.test(1, 2));
  CHECK_FALSE(covers.test(0, 2));
  CHECK_FALSE(covers.test(0, 0));
}

TEST_CASE("order self-checks pass on small signatures") {
  for (Signature sig : {Signature{2, 1}, Signature{1, 1}, Signature{3, 0}}) {
    for (Execution ex : {Execution::serial, Execution::parallel}) {
      std::vector<CheckResult> results = verify_order(sig, ex);
      CHECK(results.size() >= 9);
      for (const CheckResult& r : results) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
      }
      CHECK(all_passed(results));
    }
  }
}

TEST_CASE("involution self-checks pass") {
  for (const CheckResult& r : verify_involutions(4)) {
    CAPTURE(r.name);
    CHECK(r.pass);
  }
}

TEST_CASE("geometry self-checks pass") {
  for (Signature sig : {Signature{2, 1}, Signature{1, 2}}) {
    for (const CheckResult& r : verify_geometry(sig)) {
      CAPTURE(r.name);
      CAPTURE(r.detail);
      CHECK(r.pass);
    }
  }
}
