#include <doctest.h>

#include <set>

#include "alcfit/encoder.hpp"
#include "alcfit/error.hpp"
#include "alcfit/oracle.hpp"
#include "alcfit/semantics.hpp"
#include "corpus.hpp"

using namespace alcfit;
using testing::solve_cnf;

namespace {

Sample fig1() { return load_sample(ALCFIT_TEST_DATA_DIR "/fig1/fig1.manifest"); }

std::optional<Concept> solve_and_decode(const Encoding& enc) {
  const SolveOutcome out = solve_cnf(enc.cnf);
  REQUIRE(out.status != SolveStatus::unknown);
  if (out.status == SolveStatus::unsat) return std::nullopt;
  return decode_model([&](int v) { return out.value(v); }, enc.vars);
}

// Every model of the bare syntax encoding, decoded, as a set of concepts.
std::set<Concept> all_syntax_models(int k, OperatorSet ops, const Signature& sig, bool templates) {
  auto [cnf, vm] = encode_syntax(k, ops, sig);
  if (templates) {
    ClauseWriter out(vm, cnf);
    encode_templates(out, 10);
    cnf.declare_vars(vm.num_vars());
  }
  std::set<Concept> found;
  auto session = make_session({});
  session->reserve_vars(cnf.num_vars());
  session->add_cnf(cnf);
  while (true) {
    const SolveOutcome out = session->solve();
    if (out.status != SolveStatus::sat) break;
    const Concept c = decode_model([&](int v) { return out.value(v); }, vm);
    found.insert(c);
    // Block this labeling and edge choice.
    std::vector<Lit> block;
    for (int v = 1; v <= vm.num_vars(); ++v) {
      const auto kind = vm.tag(v).kind;
      if (kind == VarKind::label || kind == VarKind::succ1 || kind == VarKind::succ2)
        block.push_back(out.value(v) ? -v : v);
    }
    session->add_clause(block);
  }
  return found;
}

}  // namespace

TEST_SUITE("encoder") {
  TEST_CASE("topology enumeration matches the recursive tree count") {
    for (unsigned bits = 1; bits < 8; ++bits) {
      const std::array<bool, 3> ar{(bits & 1u) != 0, (bits & 2u) != 0, (bits & 4u) != 0};
      for (int k = 1; k <= 10; ++k) {
        CAPTURE(bits);
        CAPTURE(k);
        CHECK(static_cast<std::int64_t>(enumerate_topologies(k, ar).size()) == testing::count_trees(k, ar));
      }
    }
    // Motzkin numbers when every arity is available.
    const std::array<bool, 3> all{true, true, true};
    CHECK(enumerate_topologies(3, all).size() == 2);
    CHECK(enumerate_topologies(5, all).size() == 9);
    CHECK(enumerate_topologies(10, all).size() == 835);
  }

  TEST_CASE("level-order arity sequences are well formed") {
    for (const auto& seq : enumerate_topologies(6, {true, true, true})) {
      REQUIRE(seq.size() == 6);
      int c = 1;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        c += seq[i];
        if (i + 1 < seq.size()) CHECK(c >= static_cast<int>(i) + 2);
      }
      CHECK(c == 6);
    }
  }

  TEST_CASE("prefixes are exactly the prefixes of full sequences") {
    const std::array<bool, 3> all{true, true, true};
    const auto full = enumerate_topologies(8, all);
    std::set<std::vector<int>> cut;
    for (const auto& s : full) cut.emplace(s.begin(), s.begin() + 5);
    const auto pre = enumerate_topology_prefixes(8, 5, all);
    CHECK(std::set<std::vector<int>>(pre.begin(), pre.end()) == cut);
  }

  TEST_CASE("syntax models are exactly the concepts of size k, with and without templates") {
    const Signature sig{{"A"}, {"r"}};
    for (const OperatorSet ops : {OperatorSet::all(), OperatorSet{Op::conj, Op::exists}, OperatorSet{Op::neg}}) {
      for (int k = 1; k <= 4; ++k) {
        const auto expected = enumerate_concepts(ops, sig, k);
        const std::set<Concept> want(expected.begin(), expected.end());
        CAPTURE(ops.to_string());
        CAPTURE(k);
        CHECK(all_syntax_models(k, ops, sig, false) == want);
        CHECK(all_syntax_models(k, ops, sig, true) == want);
      }
    }
  }

  TEST_CASE("Fig. 1: UNSAT at k <= 3, SAT at 4") {
    const Sample s = fig1();
    for (int k = 1; k <= 3; ++k) CHECK_FALSE(solve_and_decode(build_encoding(s, k, OperatorSet::all(), {})));
    const auto c = solve_and_decode(build_encoding(s, 4, OperatorSet::all(), {}));
    REQUIRE(c);
    CHECK(size(*c) == 4);
    CHECK(fits(*c, s));
  }

  TEST_CASE("typed and base encodings differ only in name semantics") {
    const Sample s = fig1();
    EncodingOptions typed, base;
    base.typed = false;
    const Encoding a = build_encoding(s, 4, OperatorSet::all(), typed);
    const Encoding b = build_encoding(s, 4, OperatorSet::all(), base);
    CHECK(a.cnf.count(ClauseGroup::semantics) == b.cnf.count(ClauseGroup::semantics));
    CHECK(a.cnf.count(ClauseGroup::fitting) == 3);
    // Base: one clause per node, element and name.
    CHECK(b.cnf.count(ClauseGroup::name_semantics) == 4u * 7u * 2u);
    // Typed: k|T||Sigma_C| + 2k|D|, with the types {}, {A}, {B}.
    CHECK(a.cnf.count(ClauseGroup::name_semantics) == 4u * 3u * 2u + 2u * 4u * 7u);
  }

  TEST_CASE("typed encoding rejects a type table for another interpretation") {
    const Sample s = fig1();
    const Interpretation other = load_facts("C(a)\n");
    VarMap vm(3, OperatorSet::all(), s.interpretation().signature());
    Cnf cnf;
    ClauseWriter out(vm, cnf);
    CHECK_THROWS_AS(encode_semantics_typed(s.interpretation(), compute_types(other), out), ConfigError);
  }

  TEST_CASE("pattern bans keep the minimal fitting size") {
    for (const auto& s : testing::random_corpus(25, 3)) {
      auto oracle = brute_force_fit(s, OperatorSet::all(), 5);
      int found = 0;
      for (int k = 1; k <= 5 && !found; ++k)
        if (solve_and_decode(build_encoding(s, k, OperatorSet::all(), {}))) found = k;
      CHECK(found == (oracle ? oracle->second : 0));
    }
  }

  TEST_CASE("coverage counter: at least m examples correct") {
    const Sample s = fig1();
    // Size 1 over Fig. 1: top covers 2 of 3, nothing covers all 3.
    for (int m = 1; m <= 3; ++m) {
      Encoding enc = build_encoding(s, 1, OperatorSet::all(), {}, false);
      CoverageCounter counter(s, enc.vars);
      ClauseWriter out(enc.vars, enc.cnf);
      counter.require(m, out);
      enc.cnf.declare_vars(enc.vars.num_vars());
      const auto c = solve_and_decode(enc);
      CAPTURE(m);
      CHECK(c.has_value() == (m <= 2));
      if (c) CHECK(coverage_of(evaluate(*c, s.interpretation()), s) >= m);
    }
    Encoding enc = build_encoding(s, 1, OperatorSet::all(), {}, false);
    CoverageCounter counter(s, enc.vars);
    ClauseWriter out(enc.vars, enc.cnf);
    CHECK_THROWS_AS(counter.require(0, out), ConfigError);
    CHECK_THROWS_AS(counter.require(4, out), ConfigError);
  }

  TEST_CASE("raising m only adds clauses") {
    const Sample s = fig1();
    Encoding enc = build_encoding(s, 4, OperatorSet::all(), {}, false);
    CoverageCounter counter(s, enc.vars);
    ClauseWriter out(enc.vars, enc.cnf);
    counter.require(1, out);
    const std::size_t before = enc.cnf.num_clauses();
    const Lit first = enc.cnf.clause(0)[0];
    counter.require(3, out);
    CHECK(enc.cnf.num_clauses() > before);
    CHECK(enc.cnf.clause(0)[0] == first);
    enc.cnf.declare_vars(enc.vars.num_vars());
    const auto c = solve_and_decode(enc);
    REQUIRE(c);
    CHECK(fits(*c, s));
  }

  TEST_CASE("decoding rejects garbage models") {
    auto [cnf, vm] = encode_syntax(3, OperatorSet::all(), Signature{{"A"}, {"r"}});
    CHECK_THROWS_AS(decode_model([](int) { return false; }, vm), SoundnessError);
    CHECK_THROWS_AS(decode_model([](int) { return true; }, vm), SoundnessError);
  }

  TEST_CASE("variable map describes variables") {
    const Sample s = fig1();
    const Encoding enc = build_encoding(s, 2, OperatorSet::all(), {});
    const auto comments = enc.vars.dimacs_comments(&s.interpretation().elements());
    CHECK(static_cast<int>(comments.size()) == enc.vars.num_vars() + 1);  // plus a header line
    CHECK(enc.vars.y1(1, 2) != 0);
    CHECK(enc.vars.y1(2, 1) == 0);
    CHECK(enc.vars.y2(1, 2) == 0);  // no right child at node 3
  }
}
