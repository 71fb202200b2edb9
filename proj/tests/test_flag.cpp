#include <string>
#include <vector>

#include "clans/clan.hpp"
#include "clans/errors.hpp"
#include "clans/flag.hpp"
#include "clans/linalg.hpp"
#include "clans/order.hpp"
#include "doctest.h"

using namespace clans;

namespace {

Flag standard_flag(int n) { return Flag(RatMatrix::identity(n)); }

}  // namespace

TEST_CASE("flags validate their basis") {
  CHECK_THROWS_AS(Flag{RatMatrix(2, 3)}, InvalidFlagError);
  RatMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(0, 1) = 2;
  CHECK_THROWS_AS(Flag{singular}, InvalidFlagError);
  CHECK(standard_flag(3).n() == 3);
}

TEST_CASE("intersection dimensions of the standard flag") {
  Signature sig{2, 2};
  Flag f = standard_flag(4);
  for (int i = 1; i <= 4; ++i) {
    CHECK(dim_intersection(f, i, SplitPart::plus_part, sig) ==
          (i < 2 ? i : 2));
    CHECK(dim_intersection(f, i, SplitPart::minus_part, sig) ==
          (i > 2 ? i - 2 : 0));
  }
}

TEST_CASE("projection sums of the worked one-arc flag") {
  Signature sig{2, 2};
  Flag f = yamamoto_representative(parse_clan("1+1-"));
  // The opening arc end projects outside F_2, so the sum fills three
  // dimensions already at (1,2).
  CHECK(dim_projection_sum(f, 1, 2, sig) == 3);
  CHECK(dim_projection_sum(f, 1, 3, sig) == 3);
  CHECK(dim_projection_sum(f, 1, 4, sig) == 4);
  CHECK(dim_projection_sum(f, 2, 3, sig) == 3);
  CHECK(dim_projection_sum(f, 3, 4, sig) == 4);
}

TEST_CASE("projection sums respect their bounds on the standard flag") {
  Signature sig{2, 1};
  Flag f = standard_flag(3);
  for (int i = 1; i < 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) {
      int d = dim_projection_sum(f, i, j, sig);
      CHECK(d >= j);
      CHECK(d <= 3);
      CHECK(d <= i + j);
    }
  }
}

TEST_CASE("geometric profile of a representative is the clan's profile") {
  for (const char* name : {"1+1-", "1122", "1221", "1212", "+-+-"}) {
    Clan c = parse_clan(name);
    CHECK(geometric_profile(yamamoto_representative(c), c.signature()) ==
          rank_profile(c));
  }
}

TEST_CASE("the standard flag belongs to the all-signs clan") {
  CHECK(format_clan(orbit_of(standard_flag(6), Signature{3, 3})) ==
        "+++---");
  CHECK(format_clan(orbit_of(standard_flag(3), Signature{2, 1})) == "++-");
}

TEST_CASE("the worked basis with a split arc") {
  // e1+e4, e3, e2, e1-e4 is the classic representative of 1-+1.
  RatMatrix m = from_columns(
      4, {{1, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, -1}});
  Flag f{m};
  CHECK(format_clan(orbit_of(f, Signature{2, 2})) == "1-+1");

  // The default construction reproduces that basis column for column.
  Flag rep = yamamoto_representative(parse_clan("1-+1"));
  CHECK(rep.columns() == m);
}

TEST_CASE("representative construction for the running example") {
  // 1+1-: plus class is the opening end and the plus sign, so sigma
  // sends 1,2 to the plus coordinates and 3,4 to the minus ones.
  Flag rep = yamamoto_representative(parse_clan("1+1-"));
  RatMatrix expect = from_columns(
      4, {{1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, -1, 0}, {0, 0, 0, 1}});
  CHECK(rep.columns() == expect);
}

TEST_CASE("orbit roundtrip with both arc orientations") {
  for (Signature sig : {Signature{2, 1}, Signature{2, 2}}) {
    for (const Clan& c : enumerate_clans(sig)) {
      CHECK(orbit_of(yamamoto_representative(c), sig) == c);
      YamamotoChoice flipped;
      flipped.plus_on_first.assign(c.arc_count(), false);
      CHECK(orbit_of(yamamoto_representative(c, flipped), sig) == c);
    }
  }
}

TEST_CASE("the choice vector must cover every arc") {
  YamamotoChoice wrong;
  wrong.plus_on_first = {true, true};
  CHECK_THROWS_AS(yamamoto_representative(parse_clan("1+1-"), wrong),
                  ClanError);
}

TEST_CASE("closure membership follows the order") {
  Signature sig{2, 1};
  std::vector<Clan> all = enumerate_clans(sig);
  for (const Clan& gamma : all) {
    Flag rep = yamamoto_representative(gamma);
    for (const Clan& tau : all) {
      CHECK(in_closure(rep, tau) == leq(gamma, tau));
    }
  }
  CHECK(in_closure(yamamoto_representative(parse_clan("++-")),
                   parse_clan("1+1")));
  CHECK_FALSE(in_closure(yamamoto_representative(parse_clan("1+1")),
                         parse_clan("++-")));
}

TEST_CASE("basis changes inside the two blocks preserve the orbit") {
  Signature sig{2, 2};
  Clan c = parse_clan("1+1-");
  Flag rep = yamamoto_representative(c);

  RatMatrix g = RatMatrix::identity(4);
  // Upper-left block mixing the plus coordinates.
  g.at(0, 0) = 2;
  g.at(0, 1) = 1;
  g.at(1, 0) = 3;
  g.at(1, 1) = 2;
  // Lower-right block mixing the minus coordinates.
  g.at(2, 3) = Rational(1, 2);
  g.at(3, 2) = -1;
  CHECK(orbit_of(apply(g, rep), sig) == c);

  // A cross-block map moves the flag to a different orbit.
  RatMatrix swap(2, 2);
  swap.at(0, 1) = 1;
  swap.at(1, 0) = 1;
  Flag moved = apply(swap, standard_flag(2));
  CHECK(format_clan(orbit_of(moved, Signature{1, 1})) == "-+");
}

TEST_CASE("flag equality ignores the choice of basis") {
  RatMatrix a = from_columns(2, {{1, 0}, {0, 1}});
  RatMatrix b = from_columns(2, {{1, 0}, {3, 2}});
  RatMatrix c = from_columns(2, {{0, 1}, {1, 0}});
  CHECK(same_flag(Flag{a}, Flag{b}));
  CHECK_FALSE(same_flag(Flag{a}, Flag{c}));
  CHECK_FALSE(same_flag(Flag{a}, standard_flag(3)));
}

TEST_CASE("json writing is exact and stable") {
  RatMatrix m = from_columns(2, {{1, 0}, {Rational(1, 2), 1}});
  std::string text = flag_to_json(Flag{m});
  CHECK(text ==
        "{\n"
        "  \"n\": 2,\n"
        "  \"columns\": [\n"
        "    [\n"
        "      \"1\",\n"
        "      \"0\"\n"
        "    ],\n"
        "    [\n"
        "      \"1/2\",\n"
        "      \"1\"\n"
        "    ]\n"
        "  ]\n"
        "}");
  Flag back = load_flag_json(text);
  CHECK(back.columns() == m);
}

TEST_CASE("json loading accepts integer entries") {
  Flag f = load_flag_json(
      "{\"n\": 2, \"columns\": [[0, 1], [\"1\", \"0\"]]}");
  CHECK(f.columns().at(1, 0) == Rational(1));
  CHECK(f.columns().at(0, 1) == Rational(1));
}

TEST_CASE("json loading failure modes") {
  CHECK_THROWS_AS(load_flag_json("not json"), ParseError);
  CHECK_THROWS_AS(load_flag_json("{\"columns\": []}"), ParseError);
  CHECK_THROWS_AS(load_flag_json("{\"n\": 2, \"columns\": [[1, 0]]}"),
                  ParseError);
  CHECK_THROWS_AS(
      load_flag_json("{\"n\": 1, \"columns\": [[\"1/0\"]]}"), ParseError);
  CHECK_THROWS_AS(load_flag_json("{\"n\": 1, \"columns\": [[true]]}"),
                  ParseError);
  // Valid JSON, dependent columns: rejected later by the flag check.
  CHECK_THROWS_AS(
      load_flag_json("{\"n\": 2, \"columns\": [[1, 1], [2, 2]]}"),
      InvalidFlagError);
}
