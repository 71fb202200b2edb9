#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clans/poset.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace clans;

namespace {

std::vector<std::string> node_names(const ClanPoset& poset) {
  std::vector<std::string> names;
  for (const Clan& c : poset.nodes) names.push_back(format_clan(c));
  return names;
}

std::set<std::pair<std::string, std::string>> cover_names(
    const ClanPoset& poset) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [lo, hi] : poset.covers)
    out.insert({format_clan(poset.nodes[lo]), format_clan(poset.nodes[hi])});
  return out;
}

}  // namespace

TEST_CASE("the (1,1) poset") {
  ClanPoset poset = build_poset(Signature{1, 1});
  CHECK(node_names(poset) == std::vector<std::string>{"+-", "-+", "11"});
  CHECK(cover_names(poset) ==
        std::set<std::pair<std::string, std::string>>{{"+-", "11"},
                                                      {"-+", "11"}});
  CHECK(poset.rank == std::vector<int>{0, 0, 1});
  CHECK(poset.minimal == std::vector<int>{0, 1});
  CHECK(poset.maximal == std::vector<int>{2});
}

TEST_CASE("the (2,1) poset") {
  ClanPoset poset = build_poset(Signature{2, 1});
  REQUIRE(poset.size() == 6);
  CHECK(node_names(poset) == std::vector<std::string>{"++-", "+-+", "+11",
                                                      "-++", "11+", "1+1"});
  CHECK(cover_names(poset) == std::set<std::pair<std::string, std::string>>{
                                  {"++-", "+11"},
                                  {"+-+", "+11"},
                                  {"+-+", "11+"},
                                  {"-++", "11+"},
                                  {"+11", "1+1"},
                                  {"11+", "1+1"}});
  // Ranks: signs at 0, one-arc clans at 1, the wide arc on top.
  CHECK(poset.rank == std::vector<int>{0, 0, 1, 0, 1, 2});
  CHECK(poset.maximal == std::vector<int>{5});

  CHECK(poset.index_of(parse_clan("1+1")) == 5);
  CHECK_THROWS_AS(poset.index_of(parse_clan("11-", Signature{1, 2})),
                  SignatureMismatchError);

  // relation and cover_bits agree with the flat cover list.
  for (auto [lo, hi] : poset.covers) {
    CHECK(poset.cover_bits.test(lo, hi));
    CHECK(poset.leq_idx(lo, hi));
  }
  CHECK_FALSE(poset.leq_idx(2, 4));  // +11 vs 11+
  CHECK_FALSE(poset.leq_idx(4, 2));
}

TEST_CASE("poset build is identical in serial and parallel") {
  ClanPoset a = build_poset(Signature{2, 2}, Execution::serial);
  ClanPoset b = build_poset(Signature{2, 2}, Execution::parallel);
  CHECK(a.size() == 21);
  CHECK(a.nodes == b.nodes);
  CHECK(a.relation == b.relation);
  CHECK(a.covers == b.covers);
  CHECK(a.rank == b.rank);
}

TEST_CASE("the five-element interval between the two-arc clans") {
  ClanPoset poset = build_poset(Signature{2, 2});
  int bottom = poset.index_of(parse_clan("1122"));
  int top = poset.index_of(parse_clan("1221"));
  IntervalReport report = interval(poset, bottom, top);

  REQUIRE(report.elements.size() == 5);
  std::set<std::string> names;
  for (int x : report.elements) names.insert(format_clan(poset.nodes[x]));
  CHECK(names ==
        std::set<std::string>{"1122", "1+-1", "1-+1", "1212", "1221"});
  CHECK(report.length == 2);
  CHECK_FALSE(report.is_chain);
  CHECK(report.rank_histogram == std::vector<int>{1, 3, 1});
}

TEST_CASE("a linear chain interval") {
  ClanPoset poset = build_poset(Signature{2, 1});
  IntervalReport report = interval(poset, poset.index_of(parse_clan("++-")),
                                   poset.index_of(parse_clan("1+1")));
  CHECK(report.elements.size() == 3);
  CHECK(report.length == 2);
  CHECK(report.is_chain);
  CHECK(report.rank_histogram == std::vector<int>{1, 1, 1});
}

TEST_CASE("one-point and empty-direction intervals") {
  ClanPoset poset = build_poset(Signature{2, 1});
  int x = poset.index_of(parse_clan("+11"));
  IntervalReport self = interval(poset, x, x);
  CHECK(self.elements == std::vector<int>{x});
  CHECK(self.length == 0);
  CHECK(self.is_chain);

  // Incomparable endpoints are a caller error.
  CHECK_THROWS_AS(
      interval(poset, x, poset.index_of(parse_clan("11+"))),
      NotComparableError);
  CHECK_THROWS_AS(
      interval(poset, poset.index_of(parse_clan("1+1")), x),
      NotComparableError);
}

TEST_CASE("properties of the (2,1) poset") {
  ClanPoset poset = build_poset(Signature{2, 1});
  PosetProperties props = poset_properties(poset);
  CHECK(props.size == 6);
  CHECK(props.cover_count == 6);
  CHECK(props.height == 2);
  CHECK(props.minimal_all_sign_only);
  CHECK(props.unique_maximal);
  CHECK(props.pure);
  CHECK(props.purity_violation_count == 0);
  CHECK(props.lattice_checks_evaluated);
}

TEST_CASE("the (2,2) poset is pure but neither thin nor Eulerian") {
  ClanPoset poset = build_poset(Signature{2, 2});
  PosetProperties props = poset_properties(poset);
  CHECK(props.size == 21);
  CHECK(props.pure);
  CHECK(props.unique_maximal);
  CHECK(props.minimal_all_sign_only);
  CHECK(props.lattice_checks_evaluated);

  CHECK_FALSE(props.thin);
  CHECK(props.thin_violation_count > 0);
  REQUIRE_FALSE(props.thin_violations.empty());
  // Each reported witness really is a length-two interval with the
  // wrong number of middles, counted against the adjoined bottom when
  // lower is -1.
  for (const ThinViolation& v : props.thin_violations) {
    CHECK(v.middle_count != 2);
    int middles = 0;
    for (int m = 0; m < props.size; ++m) {
      bool above_lower = v.lower < 0
                             ? poset.rank[m] == 0
                             : poset.cover_bits.test(v.lower, m);
      if (above_lower && poset.cover_bits.test(m, v.upper)) ++middles;
    }
    CHECK(middles == v.middle_count);
  }

  CHECK_FALSE(props.eulerian);
  CHECK(props.euler_violation_count > 0);
  REQUIRE_FALSE(props.euler_violations.empty());
  for (const ParityViolation& v : props.euler_violations) {
    CHECK(v.even_count != v.odd_count);
  }
}

TEST_CASE("dot export of the (1,1) poset") {
  ClanPoset poset = build_poset(Signature{1, 1});
  std::string dot = export_hasse_dot(poset);
  CHECK(dot.find("digraph hasse {") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"+-\"") != std::string::npos);
  CHECK(dot.find("\"11\"") != std::string::npos);
  CHECK(dot.find("n0 -> n2") != std::string::npos);
  CHECK(dot.find("n1 -> n2") != std::string::npos);
  // Deterministic output.
  CHECK(dot == export_hasse_dot(build_poset(Signature{1, 1})));
}

TEST_CASE("json export matches the poset") {
  ClanPoset poset = build_poset(Signature{2, 1});
  std::string text = export_hasse_json(poset);
  CHECK(text == export_hasse_json(build_poset(Signature{2, 1})));

  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["signature"]["p"] == 2);
  CHECK(doc["signature"]["q"] == 1);
  REQUIRE(doc["nodes"].size() == 6);
  CHECK(doc["nodes"][0] == "++-");
  CHECK(doc["nodes"][5] == "1+1");
  CHECK(doc["covers"].size() == poset.covers.size());
  for (std::size_t e = 0; e < poset.covers.size(); ++e) {
    CHECK(doc["covers"][e][0] == poset.covers[e].first);
    CHECK(doc["covers"][e][1] == poset.covers[e].second);
  }
  std::vector<int> rank = doc["rank"].get<std::vector<int>>();
  CHECK(rank == poset.rank);
}
