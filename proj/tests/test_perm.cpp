#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sbd/errors.hpp"
#include "sbd/perm.hpp"

using namespace sbd;

namespace {

Perm random_perm(int degree, std::mt19937& rng) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Perm::from_images(images);
}

}  // namespace

TEST_CASE("cycle parsing") {
  Perm p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p.images() == std::vector<int>{1, 2, 0, 4, 3});

  CHECK(parse_cycles("", 7) == Perm(7));
  CHECK(parse_cycles("  ", 7) == Perm(7));
  CHECK(parse_cycles("(3)", 5) == Perm(5));  // singleton cycle is a no-op

  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)", 3), RepeatError);
  CHECK_THROWS_AS(parse_cycles("(1 8)", 7), RangeError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 7), RangeError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 7), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)", 7), ParseError);
  CHECK_THROWS_AS(parse_cycles("()", 7), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 a)", 7), ParseError);
}

TEST_CASE("canonical cycle format") {
  CHECK(format_cycles(parse_cycles("(4 5)(1 2 3)", 7)) == "(1 2 3)(4 5)");
  CHECK(format_cycles(parse_cycles("(2 3 1)", 3)) == "(1 2 3)");
  CHECK(format_cycles(Perm(5)) == "");

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Perm p = random_perm(9, rng);
    CHECK(parse_cycles(format_cycles(p), 9) == p);
    std::string canon = format_cycles(p);
    CHECK(format_cycles(parse_cycles(canon, 9)) == canon);
  }
}

TEST_CASE("order, power, compose") {
  CHECK(perm_order(parse_cycles("(1 2 3)(4 5)", 5)) == 6);
  CHECK(perm_order(Perm(4)) == 1);
  CHECK(perm_order(parse_cycles("(1 2 3 4 5 6 7)", 7)) == 7);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Perm p = random_perm(8, rng);
    CHECK(power(p, perm_order(p)) == Perm(8));
    CHECK(compose(p, inverse(p)) == Perm(8));
    Perm q = random_perm(8, rng), r = random_perm(8, rng);
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
  }

  CHECK_THROWS_AS(compose(Perm(5), Perm(6)), DegreeMismatch);
}

TEST_CASE("orbits") {
  Perm c7 = parse_cycles("(1 2 3 4 5 6 7)", 7);
  auto o1 = orbits(GroupSpec{7, {c7}}, 7);
  REQUIRE(o1.size() == 1);
  CHECK(o1[0].size() == 7);

  auto o2 = orbits(GroupSpec{7, {}}, 7);
  CHECK(o2.size() == 7);

  GroupSpec g{7, {parse_cycles("(4 5)(6 7)", 7), parse_cycles("(2 3)(6 7)", 7)}};
  auto o3 = orbits(g, 7);
  REQUIRE(o3.size() == 4);
  CHECK(o3[0] == std::vector<int>{0});
  CHECK(o3[1] == std::vector<int>{1, 2});
  CHECK(o3[2] == std::vector<int>{3, 4});
  CHECK(o3[3] == std::vector<int>{5, 6});
}

TEST_CASE("group closure") {
  auto klein = group_closure(GroupSpec{4, {parse_cycles("(1 2)", 4),
                                           parse_cycles("(3 4)", 4)}});
  CHECK(klein.size() == 4);
  CHECK(klein[0] == Perm(4));

  CHECK(group_closure(GroupSpec{5, {}}).size() == 1);

  GroupSpec big{7, {parse_cycles("(1 2 3 4 5 6 7)", 7), parse_cycles("(2 3)(4 7)", 7)}};
  CHECK_THROWS_AS(group_closure(big, 10), CapExceeded);
}

TEST_CASE("burnside on real and hypothetical actions") {
  auto real_counts = [](const Perm& p) {
    return std::optional<long long>(count_fixed_points(p));
  };

  SUBCASE("identity-only group fixes everything") {
    BurnsideResult r = burnside({Perm(81)}, real_counts);
    CHECK(r.orbit_count == Fraction::of(81, 1));
    CHECK(r.is_integral);
  }

  SUBCASE("C7 on seven points has one orbit") {
    auto elems = group_closure(GroupSpec{7, {parse_cycles("(1 2 3 4 5 6 7)", 7)}});
    REQUIRE(elems.size() == 7);
    BurnsideResult r = burnside(elems, real_counts, /*check_group=*/true);
    CHECK(r.fixed_sum == 7);  // identity fixes 7, the rest fix 0
    CHECK(r.orbit_count == Fraction::of(1, 1));
    CHECK(r.orbit_count.num ==
          static_cast<long long>(orbits(GroupSpec{7, {parse_cycles("(1 2 3 4 5 6 7)", 7)}}, 7).size()));
  }

  SUBCASE("hypothetical 25-element group, nonidentity fixing one point") {
    // three 25-cycles plus six fixed points give an order-25 permutation of
    // 81 points; the fix counts are injected as a hypothesis
    std::string cyc;
    for (int c = 0; c < 3; ++c) {
      cyc += "(";
      for (int i = 0; i < 25; ++i) {
        if (i) cyc += " ";
        cyc += std::to_string(c * 25 + i + 1);
      }
      cyc += ")";
    }
    auto elems = group_closure(GroupSpec{81, {parse_cycles(cyc, 81)}});
    REQUIRE(elems.size() == 25);
    auto hypothetical = [](const Perm& p) {
      return std::optional<long long>(p.is_identity() ? 81 : 1);
    };
    BurnsideResult r = burnside(elems, hypothetical);
    CHECK(r.orbit_count == Fraction::of(21, 5));
    CHECK_FALSE(r.is_integral);
  }

  SUBCASE("missing fix count") {
    auto missing = [](const Perm& p) {
      return p.is_identity() ? std::optional<long long>(5) : std::nullopt;
    };
    CHECK_THROWS_AS(burnside({Perm(5), parse_cycles("(1 2)", 5)}, missing),
                    MissingFixCount);
  }
}

TEST_CASE("burnside with true counts is integral and equals the orbit count") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> pt(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    GroupSpec g{7, {}};
    for (int i = 0; i < 2; ++i) {
      int a = pt(rng), b = pt(rng);
      if (a == b) continue;
      g.generators.push_back(
          parse_cycles("(" + std::to_string(a) + " " + std::to_string(b) + ")", 7));
    }
    auto elems = group_closure(g);
    BurnsideResult r = burnside(elems, [](const Perm& p) {
      return std::optional<long long>(count_fixed_points(p));
    });
    CHECK(r.is_integral);
    CHECK(r.orbit_count.num == static_cast<long long>(orbits(g, 7).size()));

    // element orders divide the group order
    for (const Perm& e : elems) CHECK(elems.size() % perm_order(e) == 0);
  }
}
