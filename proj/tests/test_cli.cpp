#include <doctest.h>

#include <sstream>

#include "treext/canonical.hpp"
#include "treext/cli.hpp"
#include "treext/construct.hpp"

using namespace treext;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("construct emits an edge list") {
  auto r = run({"construct", "--degrees", "4,1,1,1,1", "--kind", "greedy", "--format", "edges"});
  CHECK(r.exit_code == 0);
  Tree t = parse_edge_list(r.out);
  CHECK(canonical_code(t) == canonical_code(Tree::star(5)));
}

TEST_CASE("construct emits canonical brackets") {
  auto r = run({"construct", "--degrees", "2,2,1,1", "--kind", "mtree", "--format", "bracket"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "[[[]],[]]\n");  // P_4 rooted at a centroid
}

TEST_CASE("construct rejects a non-tree sequence with exit 2") {
  auto r = run({"construct", "--degrees", "3,3", "--kind", "greedy"});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("2(n-1)") != std::string::npos);  // names the violated invariant
}

TEST_CASE("invariant reads edge lists from stdin") {
  auto r = run({"invariant", "--tree", "-", "--name", "wiener"}, "3\n0 1\n1 2\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("invariant selectors") {
  std::string p3 = "3\n0 1\n1 2\n";
  CHECK(run({"invariant", "--tree", "-", "--name", "harary"}, p3).out == "5/2\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "hosoya"}, p3).out == "3\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "ms"}, p3).out == "5\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "subtrees"}, p3).out == "6\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "steiner:2"}, p3).out == "4\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "matching-poly"}, p3).out == "[\"1\",\"2\"]\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "rsf-poly"}, p3).out ==
        "[\"0\",\"3\",\"4\",\"1\"]\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "solvability"}, "1\n").out == "s=3 t=2\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "rho:rho1:1/2"}, "1\n").out == "1/3\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "rho:rho5"}, "1\n").out == "3/2\n");
  CHECK(run({"invariant", "--tree", "-", "--name", "wab:1,1"}, p3).out == "4\n");
  auto bad = run({"invariant", "--tree", "-", "--name", "blub"}, p3);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("terminal wiener of the Fig. 6 greedy tree through the cli") {
  std::string fig6 = "9\n0 1\n0 2\n0 3\n1 4\n4 5\n2 6\n6 7\n3 8\n";
  auto r = run({"invariant", "--tree", "-", "--name", "wab:1,0"}, fig6);
  CHECK(r.out == "16\n");
}

TEST_CASE("enumerate counts isomorphism classes") {
  auto r = run({"enumerate", "--degrees", "3,2,2,1,1,1", "--count-only"});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");
  auto listed = run({"enumerate", "--degrees", "3,2,2,1,1,1"});
  CHECK(listed.out.find('[') != std::string::npos);
}

TEST_CASE("enumerate respects the bound with exit 3") {
  auto r = run({"enumerate", "--degrees", "3,2,2,1,1,1", "--count-only", "--bound", "4"});
  CHECK(r.exit_code == 3);
}

TEST_CASE("verify steiner:5 reports the known tie") {
  auto r = run({"verify", "--degrees", "3,2,2,1,1,1", "--invariant", "steiner:5"});
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["optimum"] == "27");
  CHECK(j["attained"] == true);
  CHECK(j["unique"] == false);
  CHECK(j["class_size"] == 2);
  CHECK(j["witnesses"].size() == 2);
}

TEST_CASE("verify emits csv summaries") {
  auto r = run({"verify", "--degrees", "3,2,2,1,1,1", "--invariant", "wiener", "--csv"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("claim,params,degrees") == 0);
  CHECK(r.out.find("wiener") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", "--degrees", "3,3", "--invariant", "wiener"}).exit_code == 2);
  CHECK(run({"verify", "--degrees", "3,2,2,1,1,1", "--invariant", "wiener", "--bound", "4"})
            .exit_code == 3);
  CHECK(run({"bogus-subcommand"}).exit_code == 2);
}

TEST_CASE("verify --majorised covers the spec example") {
  auto r = run({"verify", "--degrees", "3,3,2,1,1,1,1", "--majorised", "--invariant", "hosoya"});
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["attained"] == true);
  CHECK(j["majorised"] == true);
  CHECK(j["bound"] == "3,3,2,1,1,1,1");
}

TEST_CASE("crosscheck subcommand") {
  auto r = run({"crosscheck", "--nmax", "4"});
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["attained"] == true);
}

TEST_SUITE_END();
