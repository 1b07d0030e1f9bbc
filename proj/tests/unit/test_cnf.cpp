#include <doctest.h>

#include <stdexcept>

#include "alcfit/cnf.hpp"
#include "alcfit/error.hpp"

using namespace alcfit;

TEST_SUITE("cnf") {
  TEST_CASE("clauses, groups and counts") {
    Cnf cnf;
    cnf.add({1, -2}, ClauseGroup::syntax);
    cnf.add({3}, ClauseGroup::fitting);
    cnf.add({-1, 2, 3}, ClauseGroup::syntax);
    CHECK(cnf.num_vars() == 3);
    CHECK(cnf.num_clauses() == 3);
    CHECK(cnf.count(ClauseGroup::syntax) == 2);
    CHECK(cnf.count(ClauseGroup::fitting) == 1);
    CHECK(cnf.literal_count() == 6);
    CHECK(cnf.clause(2).size() == 3);
    CHECK(cnf.clause(2)[0] == -1);
    CHECK(cnf.group(1) == ClauseGroup::fitting);
  }

  TEST_CASE("empty clauses and zero literals are rejected") {
    Cnf cnf;
    CHECK_THROWS_AS(cnf.add({}, ClauseGroup::syntax), std::logic_error);
    CHECK_THROWS_AS(cnf.add({0}, ClauseGroup::syntax), std::logic_error);
  }

  TEST_CASE("DIMACS export and parse") {
    Cnf cnf;
    cnf.add({1, -2}, ClauseGroup::syntax);
    cnf.add({2}, ClauseGroup::semantics);
    cnf.declare_vars(5);
    const std::string text = export_dimacs(cnf, {"hello", "x(1,top) = 1"});
    CHECK(text.rfind("c hello\n", 0) == 0);
    CHECK(text.find("p cnf 5 2\n") != std::string::npos);
    const Cnf back = parse_dimacs(text);
    CHECK(back.num_vars() == 5);
    REQUIRE(back.num_clauses() == 2);
    CHECK(back.clause(0)[1] == -2);
    CHECK(export_dimacs(back) == export_dimacs(cnf));
  }

  TEST_CASE("malformed DIMACS") {
    CHECK_THROWS_AS(parse_dimacs("1 2 0\n"), DataError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 x 0\n"), DataError);
  }

  TEST_CASE("counting and tee sinks") {
    Cnf cnf;
    CountingSink count;
    TeeSink tee(cnf, count);
    tee.add({1, 2}, ClauseGroup::templates);
    tee.add({-1}, ClauseGroup::templates);
    CHECK(count.count(ClauseGroup::templates) == 2);
    CHECK(count.total() == 2);
    CHECK(count.literal_count() == 3);
    CountingSink replayed;
    cnf.replay(replayed);
    CHECK(replayed.total() == 2);
  }
}
