#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heffter/elements.hpp"

namespace heffter {

struct LoopEntry {
  Element lhs, rhs, value;
  friend bool operator==(const LoopEntry&, const LoopEntry&) = default;
};

// Cayley table of a (partial) loop over S~ for S = {1..n}. Rows and columns
// follow the canonical order 0, 1, ..., n, -n, ..., -1; undefined cells are
// the "." of the printed tables. The container itself is permissive; the loop
// axioms are checked by validate_partial_loop().
class PartialLoop {
 public:
  explicit PartialLoop(int n);  // all cells undefined

  // Table with the axiom-forced cells prefilled: identity row/column and the
  // inverse cells x + (-x) = (-x) + x = 0.
  static PartialLoop with_axioms(int n);

  int n() const { return n_; }
  int side() const { return 2 * n_ + 1; }

  // Table lookup; an Undefined operand or an undefined cell yields Undefined.
  Element at(Element x, Element y) const;
  Element at_index(int row, int col) const;
  void set(Element x, Element y, Element value);
  void set_index(int row, int col, Element value);

  bool is_total() const;
  int defined_cells() const;
  // Defined cells excluding identity row/column and inverse cells.
  int nontrivial_weight() const;

  std::vector<LoopEntry> entries() const;
  // Ent(other) is contained in Ent(*this).
  bool contains(const PartialLoop& other) const;

  friend bool operator==(const PartialLoop&, const PartialLoop&) = default;

 private:
  int n_;
  std::vector<Element> cells_;
};

// x +_L y. Undefined is absorbing.
Element add(const PartialLoop& loop, Element x, Element y);

struct LoopViolation {
  enum class Kind { LatinRow, LatinCol, Identity, Inverse };
  Kind kind;
  Element row, col;   // offending cell(s)
  std::string detail;
};

struct LoopReport {
  bool valid = false;
  std::vector<LoopViolation> violations;

  bool is_total = false;
  bool is_associative = false;
  std::optional<std::array<Element, 3>> associativity_counterexample;
  bool is_commutative = false;
  std::optional<std::array<Element, 2>> commutativity_counterexample;
  int weight = 0;  // defined non-axiom cells
};

// Checks the partial Latin property, the identity row/column, and the inverse
// cells; classifies totality, associativity and commutativity. For partial
// tables the classifications quantify over the cells where both sides of the
// law are defined.
LoopReport validate_partial_loop(const PartialLoop& loop);

// Ent(L^pi) = {(pi(x), pi(y), pi(L[x,y]))}.
PartialLoop relabel(const PartialLoop& loop, const SignedPermutation& pi);

// All sign-respecting permutations pi with L^pi = L, in lexicographic order
// of their image tuples. The search is restricted to the sign-respecting
// family (images of positives determine the map); n above the cap is
// rejected.
std::vector<SignedPermutation> automorphisms(const PartialLoop& loop, int cap = 9);

enum class CompletionStatus { Completed, BudgetExhausted, Infeasible };

struct CompletionResult {
  CompletionStatus status = CompletionStatus::Infeasible;
  std::optional<PartialLoop> loop;
  long long nodes = 0;
};

inline constexpr long long kDefaultCompletionBudget = 100'000'000;

// Deterministic backtracking completion of a valid partial loop to a total
// loop: cells are filled in row-major canonical order, candidate values tried
// in canonical element order, with forward checking on row/column
// availability. Distinguishes a proven-infeasible instance (search space
// exhausted) from an exhausted node budget.
CompletionResult complete(const PartialLoop& loop,
                          long long budget = kDefaultCompletionBudget);

// The integers mod 2n+1 written on {0, +-1, ..., +-n}: the reference abelian
// group table.
PartialLoop zn_loop(int n);

}  // namespace heffter
