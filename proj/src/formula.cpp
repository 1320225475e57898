#include "imptab/formula.hpp"

#include <stdexcept>
#include <utility>

namespace imptab {

namespace {

constexpr std::array<std::string_view, 4> kNames = {"imp", "mimp1", "mimp2", "mimp3"};
constexpr std::array<std::string_view, 4> kAscii = {"->", "-.", ".-", ".."};
constexpr std::array<std::string_view, 4> kUnicode = {"→", "⇀", "↽", "⇌"};

// Indexed by connective, then (a<<1)|b.
constexpr int kCaseTable[4][4] = {
    /* Imp   */ {3, 2, 4, 1},
    /* MImp1 */ {1, 2, 3, 4},
    /* MImp2 */ {4, 3, 2, 1},
    /* MImp3 */ {3, 4, 2, 1},
};

bool eval_node(const FormulaNode* f, Connective c, std::span<const std::uint8_t> v) {
  if (f->is_leaf()) return v[static_cast<std::size_t>(f->var() - 1)] != 0;
  bool a = eval_node(f->left().get(), c, v);
  bool b = eval_node(f->right().get(), c, v);
  return apply(c, a, b);
}

void render_node(const FormulaNode* f, std::string_view op, std::string& out) {
  if (f->is_leaf()) {
    out += 'p';
    out += std::to_string(f->var());
    return;
  }
  auto child = [&](const FormulaNode* g) {
    if (g->is_leaf()) {
      render_node(g, op, out);
    } else {
      out += '(';
      render_node(g, op, out);
      out += ')';
    }
  };
  child(f->left().get());
  out += op;
  child(f->right().get());
}

}  // namespace

std::string_view connective_name(Connective c) { return kNames[static_cast<int>(c)]; }

std::optional<Connective> connective_from_name(std::string_view s) {
  for (int i = 0; i < 4; ++i)
    if (s == kNames[i]) return static_cast<Connective>(i);
  return std::nullopt;
}

std::string_view connective_glyph(Connective c, bool unicode) {
  return (unicode ? kUnicode : kAscii)[static_cast<int>(c)];
}

RowCase split_case(Connective c, bool a, bool b) {
  return static_cast<RowCase>(kCaseTable[static_cast<int>(c)][(a ? 2 : 0) | (b ? 1 : 0)]);
}

Formula leaf(int var) {
  if (var < 1) throw std::invalid_argument("leaf: variable index must be >= 1");
  return std::make_shared<const FormulaNode>(var);
}

Formula node(Formula l, Formula r) {
  if (!l || !r) throw std::invalid_argument("node: children must be non-null");
  return std::make_shared<const FormulaNode>(std::move(l), std::move(r));
}

std::vector<Formula> enumerate_bracketings(int n) {
  if (n < 1)
    throw std::invalid_argument("enumerate_bracketings: n must be >= 1 (no bracketings of zero variables)");
  if (n > kMaxEnumerationVars)
    throw std::invalid_argument("enumerate_bracketings: full enumeration is capped at n = 16");

  // memo[lo][len-1] holds every bracketing of p_{lo+1} .. p_{lo+len}.
  std::vector<std::vector<std::vector<Formula>>> memo(n);
  for (int lo = 0; lo < n; ++lo) {
    memo[lo].resize(n - lo);
    memo[lo][0].push_back(leaf(lo + 1));
  }
  for (int len = 2; len <= n; ++len) {
    for (int lo = 0; lo + len <= n; ++lo) {
      auto& out = memo[lo][len - 1];
      for (int i = 1; i < len; ++i) {
        for (const auto& l : memo[lo][i - 1])
          for (const auto& r : memo[lo + i][len - i - 1]) out.push_back(node(l, r));
      }
    }
  }
  return std::move(memo[0][n - 1]);
}

bool evaluate(const Formula& f, Connective c, std::span<const std::uint8_t> v) {
  if (!f) throw std::invalid_argument("evaluate: null formula");
  if (v.size() != static_cast<std::size_t>(f->leaf_count()))
    throw std::invalid_argument("evaluate: valuation length does not match the formula's variable count");
  return eval_node(f.get(), c, v);
}

RowCase top_split_case(const Formula& f, Connective c, std::span<const std::uint8_t> v) {
  if (!f) throw std::invalid_argument("top_split_case: null formula");
  if (f->is_leaf())
    throw std::invalid_argument("top_split_case: a single variable has no top-level split");
  if (v.size() != static_cast<std::size_t>(f->leaf_count()))
    throw std::invalid_argument("top_split_case: valuation length does not match the formula's variable count");
  bool a = eval_node(f->left().get(), c, v);
  bool b = eval_node(f->right().get(), c, v);
  return split_case(c, a, b);
}

std::string render(const Formula& f, Connective c, bool unicode) {
  if (!f) throw std::invalid_argument("render: null formula");
  std::string out;
  render_node(f.get(), connective_glyph(c, unicode), out);
  return out;
}

}  // namespace imptab
