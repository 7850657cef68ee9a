#include <doctest.h>

#include <set>
#include <sstream>

#include "oracles.hpp"
#include "treext/bracket.hpp"
#include "treext/branch_split.hpp"
#include "treext/canonical.hpp"
#include "treext/enumerate.hpp"
#include "treext/tree.hpp"

using namespace treext;

TEST_SUITE_BEGIN("treecore");

TEST_CASE("from_edges validates structure") {
  CHECK(Tree::single_vertex().size() == 1);
  Tree p3 = Tree::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(p3.degree(1) == 2);
  CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {1, 2}, {2, 0}}), NotATree);  // cycle
  CHECK_THROWS_AS(Tree::from_edges(2, {{0, 0}}), NotATree);                  // self-loop
  CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {0, 1}}), NotATree);          // duplicate
  CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {2, 3}}), NotATree);          // wrong count
  CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {0, 5}}), NotATree);          // out of range
}

TEST_CASE("degree_sequence of standard trees") {
  CHECK(degree_sequence(Tree::path(2)) == DegreeSequence::validate({1, 1}));
  CHECK(degree_sequence(Tree::star(5)) == DegreeSequence::validate({4, 1, 1, 1, 1}));
}

TEST_CASE("subdivision") {
  CHECK(subdivision(Tree::single_vertex()).size() == 1);
  CHECK(canonical_code(subdivision(Tree::path(2))) == canonical_code(Tree::path(3)));
  Tree spider = subdivision(Tree::star(4));
  CHECK(spider.size() == 7);
  CHECK(degree_sequence(spider) == DegreeSequence::validate({3, 2, 2, 2, 1, 1, 1}));
  for (int n = 2; n <= 8; ++n)
    for (const Tree& t : all_trees(n))
      CHECK(subdivision(t).size() == 2 * n - 1);  // |E(S(T))| = 2(n-1)
}

TEST_CASE("canonical code is invariant under relabelling") {
  Tree a = Tree::from_edges(3, {{0, 1}, {1, 2}});  // 0-1-2
  Tree b = Tree::from_edges(3, {{1, 0}, {0, 2}});  // 1-0-2
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(Tree::star(4)) != canonical_code(Tree::path(4)));
}

TEST_CASE("the two trees with degree sequence (3,2,2,1,1,1) have different codes") {
  Tree spider221 = Tree::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
  Tree spider311 = Tree::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}});
  CHECK(degree_sequence(spider221) == degree_sequence(spider311));
  CHECK(canonical_code(spider221) != canonical_code(spider311));
}

TEST_CASE("canonical code is a complete isomorphism invariant up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Tree> trees = all_trees(n);
    // distinct classes from the generator must disagree pairwise, and the
    // brute-force permutation search must agree with the codes
    for (std::size_t i = 0; i < trees.size(); ++i)
      for (std::size_t j = i; j < trees.size(); ++j) {
        bool same_code = canonical_code(trees[i]) == canonical_code(trees[j]);
        if (n <= 7 || i == j || trees.size() <= 12) {
          CHECK(same_code == oracles::brute_isomorphic(trees[i], trees[j]));
        } else {
          CHECK(same_code == (i == j));
        }
      }
  }
}

TEST_CASE("branch_split shapes") {
  Tree star = Tree::star(5);
  BranchSplit s = branch_split(star, 0, 1);  // centre, leaf
  CHECK(s.left_branches.size() == 3);
  CHECK(s.right_branches.empty());
  CHECK(s.host.size() == 2);

  Tree p4 = Tree::path(4);
  BranchSplit mid = branch_split(p4, 1, 2);
  CHECK(mid.left_branches.size() == 1);
  CHECK(mid.right_branches.size() == 1);
  CHECK(mid.left_branches[0].tree.size() == 1);
  CHECK(mid.host.size() == 2);

  CHECK_THROWS_AS(branch_split(p4, 2, 2), SameVertex);
}

TEST_CASE("branch_split counts k = deg(v) - 1 and reassembles") {
  for (int n = 2; n <= 8; ++n)
    for (const Tree& t : all_trees(n)) {
      std::string code = canonical_code(t);
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) {
          if (v == w) continue;
          BranchSplit s = branch_split(t, v, w);
          CHECK(static_cast<int>(s.left_branches.size()) == t.degree(v) - 1);
          CHECK(static_cast<int>(s.right_branches.size()) == t.degree(w) - 1);
          CHECK(s.host.degree(s.host_v) == 1);
          CHECK(s.host.degree(s.host_w) == 1);
          CHECK(canonical_code(reassemble(s)) == code);
        }
    }
}

TEST_CASE("bracket serialization") {
  CHECK(serialize_bracket({Tree::single_vertex(), 0}) == "[]");
  CHECK(serialize_bracket({Tree::path(3), 1}) == "[[],[]]");
  CHECK(serialize_bracket({Tree::star(4), 0}) == "[[],[],[]]");  // pseudo-leaf branch [4]

  CHECK_THROWS_AS(parse_bracket("[[]"), ParseError);
  CHECK_THROWS_AS(parse_bracket("[]]"), ParseError);
  CHECK_THROWS_AS(parse_bracket("hello"), ParseError);
  try {
    parse_bracket("[[]x]");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("bracket round-trips rooted trees exactly") {
  for (int n = 1; n <= 8; ++n)
    for (const Tree& t : all_trees(n))
      for (int root = 0; root < n; ++root) {
        std::string text = serialize_bracket({t, root});
        RootedTree back = parse_bracket(text);
        CHECK(serialize_bracket(back) == text);
        CHECK(canonical_code(back.tree) == canonical_code(t));
      }
}

TEST_CASE("edge-list io round-trips") {
  Tree t = Tree::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  std::ostringstream out;
  write_edge_list(out, t);
  Tree back = parse_edge_list(out.str());
  CHECK(back.edges() == t.edges());
  CHECK_THROWS_AS(parse_edge_list("3\n0 1"), ParseError);
}

TEST_SUITE_END();
