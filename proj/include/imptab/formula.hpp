#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace imptab {

// The four row semantics for a single binary connective. Each is false on
// exactly one combination of its two argument values:
//   Imp   (->)  false on (1,0)        MImp1 (-.)  false on (1,1)
//   MImp2 (.-)  false on (0,0)        MImp3 (..)  false on (0,1)
enum class Connective { Imp, MImp1, MImp2, MImp3 };

inline constexpr std::array<Connective, 4> kAllConnectives = {
    Connective::Imp, Connective::MImp1, Connective::MImp2, Connective::MImp3};

constexpr bool apply(Connective c, bool a, bool b) {
  switch (c) {
    case Connective::Imp: return !a || b;
    case Connective::MImp1: return !(a && b);
    case Connective::MImp2: return a || b;
    case Connective::MImp3: return a || !b;
  }
  return false;  // unreachable
}

std::string_view connective_name(Connective c);                      // "imp", "mimp1", ...
std::optional<Connective> connective_from_name(std::string_view s);  // accepts the names above
std::string_view connective_glyph(Connective c, bool unicode = false);

// Case of a truth-table row with n >= 2 variables, determined by the values
// (a, b) of the two top-level subformulas. Case 4 is always the combination
// on which the connective is false; cases 1-3 number its three true
// combinations. Each connective has its own numbering (chosen so that the
// case counts line up with the recurrence roles):
//
//              (1,1) (1,0) (0,1) (0,0)
//   Imp          1     4     2     3
//   MImp1        4     3     2     1
//   MImp2        1     2     3     4
//   MImp3        1     2     4     3
enum class RowCase { Case1 = 1, Case2 = 2, Case3 = 3, Case4 = 4 };

RowCase split_case(Connective c, bool a, bool b);

class FormulaNode;

// Immutable bracketing tree, shared freely between formulas. A well-formed
// formula over n variables has leaves p1..pn in left-to-right order.
using Formula = std::shared_ptr<const FormulaNode>;

class FormulaNode {
 public:
  explicit FormulaNode(int var) : var_(var), nvars_(1) {}
  FormulaNode(Formula l, Formula r)
      : var_(0),
        nvars_(l->nvars_ + r->nvars_),
        left_(std::move(l)),
        right_(std::move(r)) {}

  bool is_leaf() const { return var_ != 0; }
  int var() const { return var_; }  // 1-based; leaves only
  int leaf_count() const { return nvars_; }
  const Formula& left() const { return left_; }
  const Formula& right() const { return right_; }

 private:
  int var_;
  int nvars_;
  Formula left_, right_;
};

Formula leaf(int var);               // var >= 1
Formula node(Formula l, Formula r);  // both non-null

inline constexpr int kMaxEnumerationVars = 16;

// All bracketings of p1..pn, in recursive split-point order: the split after
// p_i is taken for i = 1..n-1, with all bracketings of the left part (outer
// loop, in this same order) paired with all bracketings of the right part
// (inner loop). Subtrees over a common variable interval are shared.
std::vector<Formula> enumerate_bracketings(int n);

// v[i] is the value of p_{i+1}.
using Valuation = std::vector<std::uint8_t>;

// Value of f under v; v.size() must equal f->leaf_count().
bool evaluate(const Formula& f, Connective c, std::span<const std::uint8_t> v);

// Case of the row v for f's top-level split; f must be an internal node.
RowCase top_split_case(const Formula& f, Connective c, std::span<const std::uint8_t> v);

// "p1->(p2->p3)": leaves print as p<i>, internal subformulas are
// parenthesised, the root is bare.
std::string render(const Formula& f, Connective c, bool unicode = false);

}  // namespace imptab
