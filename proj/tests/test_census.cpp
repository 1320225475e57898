#include <doctest.h>

#include <string>

#include "imptab/census.hpp"
#include "imptab/sequences.hpp"

using namespace imptab;

namespace {

void check_cases(const Census& c, long c1, long c2, long c3, long c4) {
  CHECK(c.cases[0] == c1);
  CHECK(c.cases[1] == c2);
  CHECK(c.cases[2] == c3);
  CHECK(c.cases[3] == c4);
  CHECK(c.total == c1 + c2 + c3 + c4);
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("three variables, all connectives") {
  check_cases(run_census(3, Connective::Imp), 6, 4, 2, 4);
  check_cases(run_census(3, Connective::MImp1), 2, 4, 4, 6);
  check_cases(run_census(3, Connective::MImp2), 6, 4, 4, 2);
  check_cases(run_census(3, Connective::MImp3), 6, 4, 2, 4);
}

TEST_CASE("one variable has uncased rows only") {
  const Census c = run_census(1, Connective::MImp1);
  CHECK(c.uncased_true == 1);
  CHECK(c.uncased_false == 1);
  CHECK(c.total == 2);
  CHECK(c.cases[0] == 0);
  CHECK(c.cases[3] == 0);
}

TEST_CASE("per-formula counts for the two three-variable bracketings") {
  const auto formulas = enumerate_bracketings(3);
  REQUIRE(formulas.size() == 2);
  check_cases(per_formula_census(formulas[0], Connective::Imp), 3, 3, 1, 1);
  check_cases(per_formula_census(formulas[1], Connective::Imp), 3, 1, 1, 3);
}

TEST_CASE("per-formula censuses add up to the full census") {
  for (Connective c : kAllConnectives) {
    const Census whole = run_census(5, c);
    Census sum;
    for (const auto& f : enumerate_bracketings(5)) {
      const Census one = per_formula_census(f, c);
      for (int i = 0; i < 4; ++i) sum.cases[i] += one.cases[i];
      sum.total += one.total;
    }
    for (int i = 0; i < 4; ++i) CHECK(sum.cases[i] == whole.cases[i]);
    CHECK(sum.total == whole.total);
  }
}

TEST_CASE("census counts equal the recurrence tables for n <= 7") {
  SequenceBasis basis(7);
  const auto table = [&](SequenceId id) { return compute(id, basis); };
  struct Mapping {
    Connective conn;
    SequenceId by_case[4];
  };
  const Mapping mappings[] = {
      {Connective::Imp, {SequenceId::T1, SequenceId::T2, SequenceId::T3, SequenceId::F}},
      {Connective::MImp1, {SequenceId::D1, SequenceId::D2, SequenceId::D3, SequenceId::Y}},
      {Connective::MImp2, {SequenceId::K1, SequenceId::K2, SequenceId::K3, SequenceId::H}},
      {Connective::MImp3, {SequenceId::T1, SequenceId::F, SequenceId::T3, SequenceId::T2}},
  };
  for (const auto& m : mappings) {
    for (int n = 2; n <= 7; ++n) {
      const Census c = run_census(n, m.conn);
      for (int i = 0; i < 4; ++i) CHECK(c.cases[i] == table(m.by_case[i]).at(n));
      CHECK(c.total == total_rows(n));
    }
  }
}

TEST_CASE("totals equal 2^n times the bracketing count up to the default cap") {
  for (Connective c : kAllConnectives)
    for (int n = 2; n <= 9; ++n) CHECK(run_census(n, c).total == total_rows(n));
  // n = 10 spot checks, including the type 2 bracketing-count coincidence.
  const Census imp10 = run_census(10, Connective::Imp);
  CHECK(imp10.total == total_rows(10));
  const Census m2 = run_census(10, Connective::MImp2);
  CHECK(m2.cases[3] == catalan(10));
  CHECK(m2.total == total_rows(10));
}

TEST_CASE("brute force confirms the corrected tenth type 1 false count") {
  // The published list shows 819238 here; the census settles it.
  const Census c = run_census(10, Connective::MImp1);
  CHECK(c.cases[3] == 1819238);
}

TEST_CASE("caps and overrides") {
  CHECK_THROWS_AS(run_census(11, Connective::Imp), CensusCapError);
  try {
    run_census(11, Connective::Imp);
  } catch (const CensusCapError& e) {
    CHECK(e.n() == 11);
    CHECK(e.cap() == kDefaultCensusCap);
    CHECK(std::string(e.what()).find("34398208") != std::string::npos);
  }
  CHECK_THROWS_AS(run_census(13, Connective::Imp, 100), CensusCapError);
  try {
    run_census(13, Connective::Imp, 100);
  } catch (const CensusCapError& e) {
    CHECK(e.cap() == kHardCensusCap);
    CHECK(std::string(e.what()).find("seq") != std::string::npos);
  }
  CHECK_THROWS_AS(run_census(0, Connective::Imp), std::invalid_argument);
}

TEST_CASE("an overridden census at n = 11 matches the eleventh false count") {
  const Census c = run_census(11, Connective::Imp, kHardCensusCap);
  CHECK(c.cases[3] == 7580904);
  CHECK(c.total == total_rows(11));
}

TEST_CASE("merged truth table for three variables") {
  const std::string expected =
      "p1 p2 p3 | p1->(p2->p3) | (p1->p2)->p3\n"
      "---------+--------------+-------------\n"
      " 1  1  1 |         1 #1 |         1 #1\n"
      " 1  1  0 |         0 #4 |         0 #4\n"
      " 1  0  1 |         1 #1 |         1 #2\n"
      " 1  0  0 |         1 #1 |         1 #3\n"
      " 0  1  1 |         1 #2 |         1 #1\n"
      " 0  1  0 |         1 #3 |         0 #4\n"
      " 0  0  1 |         1 #2 |         1 #1\n"
      " 0  0  0 |         1 #2 |         0 #4\n";
  CHECK(render_table(3, Connective::Imp) == expected);
}

TEST_CASE("merged truth table for type 2 at three variables") {
  const std::string expected =
      "p1 p2 p3 | p1.-(p2.-p3) | (p1.-p2).-p3\n"
      "---------+--------------+-------------\n"
      " 1  1  1 |         1 #1 |         1 #1\n"
      " 1  1  0 |         1 #1 |         1 #2\n"
      " 1  0  1 |         1 #1 |         1 #1\n"
      " 1  0  0 |         1 #2 |         1 #2\n"
      " 0  1  1 |         1 #3 |         1 #1\n"
      " 0  1  0 |         1 #3 |         1 #2\n"
      " 0  0  1 |         1 #3 |         1 #3\n"
      " 0  0  0 |         0 #4 |         0 #4\n";
  CHECK(render_table(3, Connective::MImp2) == expected);
}

TEST_CASE("single-variable table") {
  const std::string expected =
      "p1 | p1\n"
      "---+---\n"
      " 1 |  1\n"
      " 0 |  0\n";
  CHECK(render_table(1, Connective::Imp) == expected);
}

TEST_CASE("table rendering refuses n > 5") {
  CHECK_THROWS_AS(render_table(6, Connective::Imp), std::invalid_argument);
  try {
    render_table(6, Connective::Imp);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("run_census") != std::string::npos);
  }
}

}  // TEST_SUITE
