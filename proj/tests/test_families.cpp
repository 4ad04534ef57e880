#include <catch2/catch_amalgamated.hpp>

#include <tuple>

#include "helpers.hpp"

using namespace treecube;

TEST_CASE("caterpillar and lobster generators build what they promise", "[families]") {
  Tree wide = tch::wide_caterpillar();
  REQUIRE(wide.size() == 24);
  auto c = classify(wide);
  CHECK(c.stems == std::vector<int>{0, 1, 3, 4, 5, 7});
  CHECK(c.major_stems == std::vector<int>{0, 3, 4, 7});
  // spine 0..7, end chains make the far legs long
  CHECK(wide.distance(0, 7) == 7);

  Tree lob = tch::long_end_lobster();
  REQUIRE(lob.size() == 28);
  auto lc = classify(lob);
  CHECK(lc.stems == std::vector<int>{0, 2, 3, 4, 6});
  CHECK(lc.major_stems == std::vector<int>{0, 2, 4, 6});
  int midlegs = 0;
  for (const Leg& leg : lc.legs)
    if (leg.kind == LegKind::Midleg) ++midlegs;
  CHECK(midlegs == 4);

  // a caterpillar with no pendants is just its spine
  CHECK(gen_caterpillar(5, {0, 0, 0, 0, 0}).is_path());
}

TEST_CASE("generator input validation", "[families]") {
  CHECK_THROWS_AS(gen_caterpillar(0, {}), FamilySpecError);
  CHECK_THROWS_AS(gen_caterpillar(3, {1, 2}), FamilySpecError);
  CHECK_THROWS_AS(gen_caterpillar(2, {1, -1}), FamilySpecError);
  CHECK_THROWS_AS(gen_caterpillar(2, {0, 0}, -1, 0), FamilySpecError);
  CHECK_THROWS_AS(gen_caterpillar(1, {0}), FamilySpecError);  // single vertex
  CHECK_THROWS_AS(gen_lobster(2, {0, 0}, {0}), FamilySpecError);
  CHECK_THROWS_AS(gen_lobster(2, {0, 0}, {0, -2}), FamilySpecError);
  CHECK_THROWS_AS(gen_spider({2, 2}), FamilySpecError);
  CHECK_THROWS_AS(gen_spider({2, 0, 2}), FamilySpecError);
  CHECK_THROWS_AS(gen_d_regular(1, 2), FamilySpecError);
  CHECK_THROWS_AS(gen_d_regular(3, 0), FamilySpecError);
  CHECK_THROWS_AS(gen_dimension_n(4), FamilySpecError);
  CHECK_THROWS_AS(gen_central_path_pendant(0, {}), FamilySpecError);
  CHECK_THROWS_AS(gen_central_path_pendant(5, {{5, 1}}), FamilySpecError);
  CHECK_THROWS_AS(gen_central_path_pendant(5, {{1, 1}, {1, 1}}), FamilySpecError);
  CHECK_THROWS_AS(gen_central_path_pendant(5, {{1, 0}}), FamilySpecError);
  CHECK_THROWS_AS(gen_central_path_pendant(1, {}), FamilySpecError);
}

TEST_CASE("regular trees have uniform interior degree and even leaf depth", "[families]") {
  const std::vector<std::tuple<int, int, int>> shapes{
      {3, 1, 4}, {4, 1, 5}, {3, 2, 10}, {4, 2, 17}, {3, 3, 22}};
  for (auto [d, depth, size] : shapes) {
    Tree t = gen_d_regular(d, depth);
    INFO("d=" << d << " depth=" << depth);
    REQUIRE(t.size() == size);
    for (int v = 0; v < t.size(); ++v) {
      if (t.degree(v) == 1)
        CHECK(t.distance(0, v) == depth);
      else
        CHECK(t.degree(v) == d);
    }
  }
}

TEST_CASE("target-dimension family hits its cube dimension", "[families]") {
  // (n, vertices, beta, lower, upper); cube dimension checked by brute force
  const std::vector<std::array<int, 5>> rows{
      {5, 12, 2, 4, 5},  {7, 19, 3, 5, 7},  {8, 20, 4, 6, 8},
      {9, 26, 4, 6, 9},  {10, 27, 5, 7, 10}};
  for (auto [n, verts, beta, lo, hi] : rows) {
    Tree t = gen_dimension_n(n);
    INFO("n=" << n);
    REQUIRE(t.size() == verts);
    CHECK(beta_tree(t) == beta);
    CHECK(lower_bound_cube(t) == lo);
    CHECK(upper_bound_cube(t) == hi);
    CHECK(tch::cube_dimension(t) == n);
    auto cs = construct_resolving_set_cube(t);
    CHECK(static_cast<int>(cs.set.size()) == hi);
    CHECK_FALSE(cs.augmented);
  }
  // the n = 6 instance degenerates to the n = 5 tree, documented behavior
  CHECK(canonical_string(gen_dimension_n(6)) == canonical_string(gen_dimension_n(5)));
  CHECK(tch::cube_dimension(gen_dimension_n(6)) == 5);
}

TEST_CASE("family intervals hold on generated instances", "[families]") {
  using K = FamilySpec::Kind;
  auto contains = [](std::pair<int, int> iv, int x) { return iv.first <= x && x <= iv.second; };

  {
    Tree t = gen_spider({2, 2, 2});
    CHECK(family_cube_interval(K::Spider, t) == std::pair{4, 6});
    CHECK(contains({4, 6}, tch::cube_dimension(t)));
  }
  {
    Tree t = gen_spider({3, 3, 3});
    CHECK(family_cube_interval(K::Spider, t) == std::pair{2, 4});
    CHECK(tch::cube_dimension(t) == 4);
  }
  {
    Tree t = gen_spider({1, 1, 3});
    CHECK(family_cube_interval(K::Spider, t) == std::pair{2, 4});
    CHECK(tch::cube_dimension(t) == 4);
  }
  for (int m = 3; m <= 8; ++m) {
    Tree t = tch::star(m);
    CHECK(family_cube_interval(K::Spider, t) == std::pair{m, m});
    CHECK(tch::cube_dimension(t) == m);
  }
  {
    const std::vector<std::tuple<int, int, int, int, int>> rows{
        {3, 1, 2, 5, 3}, {4, 1, 3, 7, 4}, {3, 2, 3, 6, 6}, {4, 2, 8, 12, 12}, {3, 3, 6, 9, 9}};
    for (auto [d, depth, lo, hi, exact] : rows) {
      Tree t = gen_d_regular(d, depth);
      INFO("d=" << d << " depth=" << depth);
      CHECK(family_cube_interval(K::DRegular, t) == std::pair{lo, hi});
      CHECK(tch::cube_dimension(t) == exact);
    }
  }
  {
    Tree t = tch::wide_caterpillar();
    CHECK(family_cube_interval(K::Caterpillar, t) == std::pair{7, 10});
  }
  {
    Tree t = tch::plain_caterpillar();
    CHECK(family_cube_interval(K::Caterpillar, t) == std::pair{7, 10});
  }
  {
    Tree t = tch::branched_lobster();
    CHECK(family_cube_interval(K::Lobster, t) == std::pair{10, 13});
  }
  {
    Tree t = tch::long_end_lobster();
    CHECK(family_cube_interval(K::Lobster, t) == std::pair{9, 12});
    CHECK(tch::cube_dimension(t) == 9);
  }
  CHECK_THROWS_AS(family_cube_interval(K::DimensionN, gen_dimension_n(5)), std::invalid_argument);
  CHECK_THROWS_AS(family_cube_interval(K::CentralPathPendant, tch::collapse_min()),
                  std::invalid_argument);
}

TEST_CASE("family spec strings round-trip through the generators", "[families]") {
  auto same = [](const Tree& a, const Tree& b) {
    return canonical_string(a) == canonical_string(b);
  };
  CHECK(same(generate_family(parse_family_spec("cat:spine=8;pendants=2,1,0,3,2,1,0,2;end0=3;end1=2")),
             tch::wide_caterpillar()));
  CHECK(same(generate_family(parse_family_spec(
                 "lob:spine=7;pendants=2,0,3,1,0,0,1;midlegs=1,0,0,0,2,0,1;end0=3;end1=3")),
             tch::long_end_lobster()));
  CHECK(same(generate_family(parse_family_spec("spider:1,1,3")), gen_spider({1, 1, 3})));
  CHECK(same(generate_family(parse_family_spec("dreg:3,2")), gen_d_regular(3, 2)));
  CHECK(same(generate_family(parse_family_spec("dimn:8")), gen_dimension_n(8)));
  CHECK(same(generate_family(parse_family_spec("cpp:len=7;stems=0:2,2:2,4:2,6:2")),
             tch::collapse_min()));
  // pendant list defaults to zeros
  CHECK(generate_family(parse_family_spec("cat:spine=4")).is_path());

  CHECK_THROWS_AS(parse_family_spec("nocolon"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("wheel:5"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("cat:spine=2;legs=1,1"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("cat:spine"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("cat:spine=two"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("dreg:3"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("dimn:x"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("cpp:len=7;stems=0-2"), FamilySpecError);
  CHECK_THROWS_AS(parse_family_spec("cat:pendants=1;midlegs=1"), FamilySpecError);
}

TEST_CASE("backbone spacing check accepts the collapsing instances", "[families]") {
  {
    auto rep = check_characterization(tch::long_pendant_row());
    REQUIRE(rep.eligible);
    CHECK(rep.satisfied);
    CHECK(rep.chain == std::array<int, 3>{5, 7, 12});
    // a minimum resolving set of the cube: one pendant per stem
    Tree t = tch::long_pendant_row();
    std::vector<int> pendants{17, 19, 21, 23, 25, 27, 29, 31};
    CHECK(is_resolving_set(t, pendants, 3));
    CHECK(lower_bound_cube(t) == static_cast<int>(pendants.size()));
  }
  {
    Tree t = tch::collapse_min();
    auto rep = check_characterization(t);
    REQUIRE(rep.eligible);
    CHECK(rep.satisfied);
    for (int i = 0; i < 3; ++i) CHECK(rep.chain[i] >= 0);
    CHECK(rep.chain[0] < rep.chain[1]);
    CHECK(rep.chain[1] < rep.chain[2]);
    CHECK((rep.chain[1] - rep.chain[0]) % 3 == 2);
    CHECK((rep.chain[2] - rep.chain[1]) % 3 == 2);
    CHECK(tch::cube_dimension(t) == beta_tree(t));
  }
  {
    Tree t = tch::shielded_collapse();
    auto rep = check_characterization(t);
    REQUIRE(rep.eligible);
    CHECK(rep.satisfied);
    CHECK(tch::cube_dimension(t) == 7);
    CHECK(beta_tree(t) == 7);
  }
}

TEST_CASE("backbone spacing check rejects bad spacing with the failing condition", "[families]") {
  Tree t = tch::collapse_fail();
  auto rep = check_characterization(t);
  REQUIRE(rep.eligible);
  CHECK_FALSE(rep.satisfied);
  CHECK(rep.failing_condition == 1);
  CHECK(tch::cube_dimension(t) == 5);
  CHECK(beta_tree(t) == 3);
}

TEST_CASE("spacing conditions are necessary but not sufficient", "[families]") {
  // every spacing condition holds, yet the cube dimension stays above the
  // tree dimension: the stem at position 3 has no partner at residue-two
  // distance, so no pendant-per-stem set separates its pendant pair
  Tree t = tch::spacing_blind_tree();
  auto rep = check_characterization(t);
  REQUIRE(rep.eligible);
  CHECK(rep.satisfied);
  CHECK(beta_tree(t) == 5);
  CHECK(tch::cube_dimension(t) == 6);
  std::vector<int> pendant_per_stem{7, 9, 11, 13, 15};
  CHECK(is_resolving_set(t, pendant_per_stem, 1));
  auto cr = check_conditions(t, pendant_per_stem);
  CHECK_FALSE(cr.overall);
  CHECK_FALSE(cr.cond[0].holds);  // an adjacent pair stays blind
}

TEST_CASE("ineligible shapes are named", "[families]") {
  CHECK_FALSE(check_characterization(tch::path(6)).eligible);
  CHECK(check_characterization(tch::path(6)).ineligible_reason == "tree is a path, it has no stems");

  auto spider = check_characterization(gen_spider({1, 2, 3}));
  CHECK_FALSE(spider.eligible);
  CHECK(spider.ineligible_reason == "a stem carries a leg longer than a pendant");

  // three pendant-bearing stems at the tips of a Y: never on one path
  Tree y = tch::make(16, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9},
                          {3, 10}, {3, 11}, {6, 12}, {6, 13}, {9, 14}, {9, 15}});
  auto yr = check_characterization(y);
  CHECK_FALSE(yr.eligible);
  CHECK(yr.ineligible_reason == "stems do not lie on a single path");
}

TEST_CASE("collapse needs a misaligned pair of heavy stems", "[families]") {
  CHECK(check_mod3_pair_necessity(tch::collapse_min()));
  CHECK(check_mod3_pair_necessity(tch::long_pendant_row()));
  CHECK(check_mod3_pair_necessity(tch::shielded_collapse()));
  CHECK_FALSE(check_mod3_pair_necessity(tch::collapse_fail()));
  CHECK_THROWS_AS(check_mod3_pair_necessity(gen_spider({1, 1, 3})), std::invalid_argument);
  CHECK_THROWS_AS(check_mod3_pair_necessity(tch::path(6)), std::invalid_argument);
}
