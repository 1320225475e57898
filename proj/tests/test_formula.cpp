#include <doctest.h>

#include <stdexcept>

#include "imptab/formula.hpp"
#include "imptab/sequences.hpp"

using namespace imptab;

namespace {

Valuation val(std::initializer_list<int> bits) {
  Valuation v;
  for (int b : bits) v.push_back(static_cast<std::uint8_t>(b));
  return v;
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("row semantics: each connective is false on exactly one pair") {
  CHECK(apply(Connective::Imp, true, true));
  CHECK_FALSE(apply(Connective::Imp, true, false));
  CHECK(apply(Connective::Imp, false, true));
  CHECK(apply(Connective::Imp, false, false));

  CHECK_FALSE(apply(Connective::MImp1, true, true));
  CHECK(apply(Connective::MImp1, true, false));
  CHECK(apply(Connective::MImp1, false, true));
  CHECK(apply(Connective::MImp1, false, false));

  CHECK(apply(Connective::MImp2, true, true));
  CHECK(apply(Connective::MImp2, true, false));
  CHECK(apply(Connective::MImp2, false, true));
  CHECK_FALSE(apply(Connective::MImp2, false, false));

  CHECK(apply(Connective::MImp3, true, true));
  CHECK(apply(Connective::MImp3, true, false));
  CHECK_FALSE(apply(Connective::MImp3, false, true));
  CHECK(apply(Connective::MImp3, false, false));
}

TEST_CASE("case numbering per connective") {
  using enum Connective;
  auto rc = [](RowCase c) { return static_cast<int>(c); };

  CHECK(rc(split_case(Imp, true, true)) == 1);
  CHECK(rc(split_case(Imp, false, true)) == 2);
  CHECK(rc(split_case(Imp, false, false)) == 3);
  CHECK(rc(split_case(Imp, true, false)) == 4);

  CHECK(rc(split_case(MImp1, false, false)) == 1);
  CHECK(rc(split_case(MImp1, false, true)) == 2);
  CHECK(rc(split_case(MImp1, true, false)) == 3);
  CHECK(rc(split_case(MImp1, true, true)) == 4);

  CHECK(rc(split_case(MImp2, true, true)) == 1);
  CHECK(rc(split_case(MImp2, true, false)) == 2);
  CHECK(rc(split_case(MImp2, false, true)) == 3);
  CHECK(rc(split_case(MImp2, false, false)) == 4);

  CHECK(rc(split_case(MImp3, true, true)) == 1);
  CHECK(rc(split_case(MImp3, true, false)) == 2);
  CHECK(rc(split_case(MImp3, false, false)) == 3);
  CHECK(rc(split_case(MImp3, false, true)) == 4);

  // Case 4 is always the false combination.
  for (Connective c : kAllConnectives)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        CHECK((split_case(c, a, b) == RowCase::Case4) == !apply(c, a, b));
}

TEST_CASE("names and glyphs") {
  CHECK(connective_name(Connective::Imp) == "imp");
  CHECK(connective_name(Connective::MImp3) == "mimp3");
  CHECK(connective_from_name("mimp2") == Connective::MImp2);
  CHECK_FALSE(connective_from_name("nand").has_value());
  CHECK(connective_glyph(Connective::Imp) == "->");
  CHECK(connective_glyph(Connective::MImp1) == "-.");
  CHECK(connective_glyph(Connective::MImp2) == ".-");
  CHECK(connective_glyph(Connective::MImp3) == "..");
  CHECK(connective_glyph(Connective::Imp, true) == "→");
}

TEST_CASE("enumeration order and renders for small n") {
  auto strings = [](int n) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_bracketings(n)) out.push_back(render(f, Connective::Imp));
    return out;
  };
  CHECK(strings(1) == std::vector<std::string>{"p1"});
  CHECK(strings(2) == std::vector<std::string>{"p1->p2"});
  CHECK(strings(3) == std::vector<std::string>{"p1->(p2->p3)", "(p1->p2)->p3"});
  CHECK(strings(4) == std::vector<std::string>{"p1->(p2->(p3->p4))", "p1->((p2->p3)->p4)",
                                               "(p1->p2)->(p3->p4)", "(p1->(p2->p3))->p4",
                                               "((p1->p2)->p3)->p4"});
}

TEST_CASE("render uses the requested connective and glyph set") {
  const Formula f = node(leaf(1), leaf(2));
  CHECK(render(f, Connective::MImp1) == "p1-.p2");
  CHECK(render(f, Connective::MImp2) == "p1.-p2");
  CHECK(render(f, Connective::MImp3) == "p1..p2");
  CHECK(render(f, Connective::MImp1, true) == "p1⇀p2");
  const Formula ff = node(node(leaf(1), leaf(2)), leaf(3));
  CHECK(render(ff, Connective::MImp2) == "(p1.-p2).-p3");
}

TEST_CASE("enumeration count equals the bracketing numbers") {
  for (int n = 1; n <= 14; ++n) {
    const auto formulas = enumerate_bracketings(n);
    CHECK(mpz_class(static_cast<unsigned long>(formulas.size())) == catalan(n));
    for (const auto& f : formulas) CHECK(f->leaf_count() == n);
  }
}

TEST_CASE("evaluate on the right-nested three-variable formula") {
  const Formula f = node(leaf(1), node(leaf(2), leaf(3)));
  CHECK(evaluate(f, Connective::Imp, val({1, 1, 1})));
  CHECK_FALSE(evaluate(f, Connective::Imp, val({1, 1, 0})));
  CHECK(evaluate(f, Connective::Imp, val({0, 1, 0})));
  CHECK_FALSE(evaluate(f, Connective::MImp1, val({1, 1, 0})));
  CHECK(evaluate(f, Connective::MImp1, val({1, 1, 1})));  // inner is false, so the pair is (1,0)
  CHECK_FALSE(evaluate(f, Connective::MImp2, val({0, 0, 0})));
  CHECK(evaluate(f, Connective::MImp3, val({1, 0, 0})));
}

TEST_CASE("top_split_case matches the evaluated subformula pair") {
  const Formula f = node(leaf(1), node(leaf(2), leaf(3)));
  CHECK(top_split_case(f, Connective::Imp, val({1, 1, 0})) == RowCase::Case4);
  CHECK(top_split_case(f, Connective::Imp, val({1, 1, 1})) == RowCase::Case1);
  CHECK(top_split_case(f, Connective::Imp, val({0, 1, 0})) == RowCase::Case3);
  CHECK(top_split_case(f, Connective::Imp, val({0, 0, 0})) == RowCase::Case2);
  const Formula g = node(node(leaf(1), leaf(2)), leaf(3));
  CHECK(top_split_case(g, Connective::Imp, val({1, 0, 1})) == RowCase::Case2);
  CHECK(top_split_case(g, Connective::Imp, val({1, 0, 0})) == RowCase::Case3);
}

TEST_CASE("structural invariants across all small formulas") {
  // The all-true valuation satisfies every -> bracketing; the all-false
  // valuation refutes every .- bracketing.
  for (int n = 2; n <= 10; ++n) {
    const Valuation ones(static_cast<std::size_t>(n), 1);
    const Valuation zeros(static_cast<std::size_t>(n), 0);
    for (const auto& f : enumerate_bracketings(n)) {
      CHECK(evaluate(f, Connective::Imp, ones));
      CHECK_FALSE(evaluate(f, Connective::MImp2, zeros));
    }
  }
}

TEST_CASE("evaluation is total over all rows at small n") {
  for (int n = 1; n <= 6; ++n) {
    const auto formulas = enumerate_bracketings(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Valuation v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) v[i] = (mask >> (n - 1 - i)) & 1u;
      for (const auto& f : formulas)
        for (Connective c : kAllConnectives) {
          const bool value = evaluate(f, c, v);
          if (n >= 2) {
            const RowCase rc = top_split_case(f, c, v);
            CHECK(value == (rc != RowCase::Case4));
          } else {
            (void)value;
          }
        }
    }
  }
}

TEST_CASE("error handling") {
  CHECK_THROWS_AS(enumerate_bracketings(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_bracketings(-3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_bracketings(17), std::invalid_argument);
  CHECK_THROWS_AS(leaf(0), std::invalid_argument);
  CHECK_THROWS_AS(node(nullptr, leaf(1)), std::invalid_argument);

  const Formula f = node(leaf(1), leaf(2));
  CHECK_THROWS_AS(evaluate(f, Connective::Imp, val({1})), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(f, Connective::Imp, val({1, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(top_split_case(leaf(1), Connective::Imp, val({1})), std::invalid_argument);
}

}  // TEST_SUITE
