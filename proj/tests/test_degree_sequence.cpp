#include <doctest.h>

#include <set>
#include <string>

#include "treext/degree_sequence.hpp"

using namespace treext;

TEST_SUITE_BEGIN("degree_sequence");

TEST_CASE("validate accepts tree-realizable sequences") {
  CHECK(DegreeSequence::validate({1, 1}).size() == 2);
  DegreeSequence d = DegreeSequence::validate({1, 3, 1, 2, 2, 1});
  CHECK(d.degrees() == std::vector<int>{3, 2, 2, 1, 1, 1});
  CHECK(DegreeSequence::validate({0}).size() == 1);  // single vertex
}

TEST_CASE("validate rejects bad input") {
  CHECK_THROWS_AS(DegreeSequence::validate({}), RejectsEmpty);
  CHECK_THROWS_AS(DegreeSequence::validate({3, 3, 1, 1}), RejectsNonTree);  // sum 8 != 6
  CHECK_THROWS_AS(DegreeSequence::validate({2, 0, 1, 1}), RejectsNonTree);
  CHECK_THROWS_AS(DegreeSequence::validate({-1, 1}), RejectsNonTree);
  CHECK_THROWS_AS(DegreeSequence::validate({1}), RejectsNonTree);
}

TEST_CASE("parse_csv is order-insensitive") {
  CHECK(DegreeSequence::parse_csv("1,3,1, 2,2,1") ==
        DegreeSequence::validate({3, 2, 2, 1, 1, 1}));
  CHECK_THROWS_AS(DegreeSequence::parse_csv("2,x,1"), ParseError);
}

TEST_CASE("reduce splits internal degrees from leaves") {
  auto r1 = reduce(DegreeSequence::validate({1, 1}));
  CHECK(r1.internal_degrees.empty());
  CHECK(r1.leaf_count == 2);

  auto r2 = reduce(DegreeSequence::validate({4, 3, 3, 1, 1, 1, 1, 1, 1}));
  CHECK(r2.internal_degrees == std::vector<int>{4, 3, 3});
  CHECK(r2.leaf_count == 6);

  auto r3 = reduce(DegreeSequence::validate({2, 2, 2, 1, 1}));
  CHECK(r3.internal_degrees == std::vector<int>{2, 2, 2});
  CHECK(r3.leaf_count == 2);
}

TEST_CASE("reduce satisfies the handshake identity and round-trips") {
  for (int n = 1; n <= 10; ++n) {
    DegreeSequence star = DegreeSequence::validate(
        n == 1 ? std::vector<int>{0}
               : [&] {
                   std::vector<int> raw(n, 1);
                   raw[0] = n - 1;
                   return raw;
                 }());
    for (const DegreeSequence& d : enumerate_majorised(star)) {
      auto r = reduce(d);
      long t = static_cast<long>(r.internal_degrees.size());
      long sum = 0;
      for (int v : r.internal_degrees) sum += v;
      if (n >= 2) CHECK(r.leaf_count == 2 - 2 * t + sum);
      CHECK(r.expand() == d);
    }
  }
}

TEST_CASE("majorisation basics") {
  DegreeSequence d = DegreeSequence::validate({3, 2, 2, 1, 1, 1});
  CHECK(majorises(d, d));  // reflexive
  DegreeSequence star = DegreeSequence::validate({5, 1, 1, 1, 1, 1});
  CHECK(majorises(star, d));
  CHECK_FALSE(majorises(d, DegreeSequence::validate({4, 2, 1, 1, 1, 1})));
  CHECK_THROWS_AS(majorises(d, DegreeSequence::validate({1, 1})), LengthMismatch);
}

TEST_CASE("enumerate_majorised small cases") {
  auto only_edge = enumerate_majorised(DegreeSequence::validate({1, 1}));
  REQUIRE(only_edge.size() == 1);
  CHECK(only_edge[0] == DegreeSequence::validate({1, 1}));

  auto from_star4 = enumerate_majorised(DegreeSequence::validate({3, 1, 1, 1}));
  REQUIRE(from_star4.size() == 2);
  CHECK(from_star4[0] == DegreeSequence::validate({3, 1, 1, 1}));
  CHECK(from_star4[1] == DegreeSequence::validate({2, 2, 1, 1}));
}

TEST_CASE("enumerate_majorised is downward closed and complete") {
  for (int n = 2; n <= 10; ++n) {
    std::vector<int> raw(n, 1);
    raw[0] = n - 1;
    DegreeSequence star = DegreeSequence::validate(raw);
    auto all = enumerate_majorised(star);
    // star bound covers every valid sequence
    for (const DegreeSequence& d : all) CHECK(majorises(star, d));
    // pick a mid bound and check membership equals the majorisation predicate
    DegreeSequence bound = all[all.size() / 2];
    auto subset = enumerate_majorised(bound);
    std::set<std::string> in_subset;
    for (const DegreeSequence& d : subset) in_subset.insert(d.to_string());
    for (const DegreeSequence& d : all)
      CHECK(in_subset.count(d.to_string()) == (majorises(bound, d) ? 1u : 0u));
  }
}

TEST_SUITE_END();
