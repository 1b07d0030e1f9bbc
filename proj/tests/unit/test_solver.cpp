#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "alcfit/error.hpp"
#include "alcfit/solver.hpp"

using namespace alcfit;

namespace {

// Pigeonhole: n+1 pigeons, n holes. Hard enough to exhaust small budgets.
Cnf pigeonhole(int n) {
  Cnf cnf;
  auto var = [n](int p, int h) { return p * n + h + 1; };
  for (int p = 0; p <= n; ++p) {
    std::vector<Lit> c;
    for (int h = 0; h < n; ++h) c.push_back(var(p, h));
    cnf.add_clause(c, ClauseGroup::syntax);
  }
  for (int h = 0; h < n; ++h)
    for (int p = 0; p <= n; ++p)
      for (int q = p + 1; q <= n; ++q) cnf.add({-var(p, h), -var(q, h)}, ClauseGroup::syntax);
  return cnf;
}

void check_backend(const SolverConfig& cfg) {
  auto s = make_session(cfg);
  s->reserve_vars(3);
  s->add({1, 2}, ClauseGroup::syntax);
  s->add({-1, 3}, ClauseGroup::syntax);
  SolveOutcome out = s->solve();
  REQUIRE(out.status == SolveStatus::sat);
  CHECK((out.value(1) || out.value(2)));
  CHECK((!out.value(1) || out.value(3)));

  const Lit assume[] = {1, -3};
  CHECK(s->solve(assume).status == SolveStatus::unsat);
  // Assumptions do not persist.
  CHECK(s->solve().status == SolveStatus::sat);

  s->add({-2}, ClauseGroup::syntax);
  s->add({-3}, ClauseGroup::syntax);
  CHECK(s->solve().status == SolveStatus::unsat);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("in-process backend: incremental clauses and assumptions") { check_backend({}); }

#ifdef ALCFIT_CLI_PATH
  TEST_CASE("external backend through a DIMACS subprocess") {
    SolverConfig cfg;
    cfg.backend = "external";
    cfg.external_command = std::string(ALCFIT_CLI_PATH) + " solve-dimacs";
    check_backend(cfg);
    auto s = make_session(cfg);
    CHECK(s->backend_name() == "external");
  }

  TEST_CASE("external backend: missing binary is a configuration error") {
    SolverConfig cfg;
    cfg.backend = "external";
    cfg.external_command = "/nonexistent/solver";
    auto s = make_session(cfg);
    s->reserve_vars(1);
    s->add({1}, ClauseGroup::syntax);
    CHECK_THROWS_AS(s->solve(), ConfigError);
  }
#endif

  TEST_CASE("budgets make the solver give up") {
    const Cnf hard = pigeonhole(10);
    auto s = make_session({});
    s->reserve_vars(hard.num_vars());
    s->add_cnf(hard);
    SolveBudget b;
    b.conflicts = 10;
    CHECK(s->solve({}, b).status == SolveStatus::unknown);

    std::atomic<bool> cancel{true};
    SolveBudget c;
    c.cancel = &cancel;
    CHECK(s->solve({}, c).status == SolveStatus::unknown);

    SolveBudget d;
    d.deadline = Clock::now();
    CHECK(s->solve({}, d).status == SolveStatus::unknown);
  }

  TEST_CASE("small pigeonhole is UNSAT") {
    const Cnf php = pigeonhole(4);
    auto s = make_session({});
    s->reserve_vars(php.num_vars());
    s->add_cnf(php);
    CHECK(s->solve().status == SolveStatus::unsat);
  }

  TEST_CASE("clauses over unreserved variables are rejected") {
    auto s = make_session({});
    s->reserve_vars(2);
    CHECK_THROWS_AS(s->add({3}, ClauseGroup::syntax), std::logic_error);
    CHECK_THROWS_AS(s->add({}, ClauseGroup::syntax), std::logic_error);
  }

  TEST_CASE("configuration") {
    SolverConfig bad;
    bad.backend = "glucose";
    CHECK_THROWS_AS(make_session(bad), ConfigError);
    SolverConfig ext;
    ext.backend = "external";
    CHECK_THROWS_AS(make_session(ext), ConfigError);

    setenv("ALCFIT_SEED", "42", 1);
    setenv("ALCFIT_BACKEND", "external", 1);
    setenv("ALCFIT_SOLVER_CMD", "kissat -q", 1);
    const SolverConfig env = solver_config_from_env();
    unsetenv("ALCFIT_SEED");
    unsetenv("ALCFIT_BACKEND");
    unsetenv("ALCFIT_SOLVER_CMD");
    CHECK(env.seed == 42u);
    CHECK(env.backend == "external");
    CHECK(env.external_command == "kissat -q");
  }

  TEST_CASE("competition output format") {
    const SolveOutcome sat = parse_solver_output("c hi\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
    REQUIRE(sat.status == SolveStatus::sat);
    CHECK(sat.value(1));
    CHECK_FALSE(sat.value(2));
    CHECK(sat.value(3));
    CHECK(parse_solver_output("s UNSATISFIABLE\n", 3).status == SolveStatus::unsat);
    CHECK(parse_solver_output("s UNKNOWN\n", 3).status == SolveStatus::unknown);
    CHECK(parse_solver_output(format_solver_output(sat), 3).model == sat.model);
  }
}
