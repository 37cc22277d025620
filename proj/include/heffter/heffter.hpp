#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heffter/arrays.hpp"
#include "heffter/constructions.hpp"
#include "heffter/loops.hpp"
#include "heffter/sumpoly.hpp"

namespace heffter {

struct DspsReport {
  bool valid = false;
  // Condition 1: polynomials whose support is not Symb(B) of any block.
  std::vector<int> unmatched_polys;
  // Condition 2: positive-weight blocks with no polynomial (class, block).
  std::vector<std::pair<int, int>> uncovered_blocks;
};

// Checks that P is a D-sum-polynomial set for the design: every member's
// support equals Symb(B) of some block, and every positive-weight block owns
// at least one polynomial. Weight-0 blocks are exempt.
DspsReport validate_dsps(const PartiallyFilledArray& a, const AffineDesign& d,
                         const std::vector<SumPolynomial>& polys);

struct HeffterReport {
  bool holds = false;
  DspsReport dsps;
  struct Failure {
    int poly_index;
    Element value;  // Undefined or nonzero
  };
  std::vector<Failure> failures;
  long long evaluations = 0;
};

// A is P-Heffter over L: validate_dsps passes and every member evaluates to 0.
// An Undefined evaluation counts as a failure. threads > 1 splits the
// evaluations across workers; the report is aggregated in input order.
HeffterReport is_p_heffter(const PartiallyFilledArray& a, const AffineDesign& d,
                           const std::vector<SumPolynomial>& polys,
                           const PartialLoop& loop, int threads = 1);

inline constexpr int kBlockWeightCap = 6;

// A is D-Heffter over L: P-Heffter with P = all Symb(B)-sum polynomials over
// every positive-weight block. Blocks heavier than the cap are rejected.
HeffterReport is_d_heffter(const PartiallyFilledArray& a, const AffineDesign& d,
                           const PartialLoop& loop, int cap = kBlockWeightCap,
                           int threads = 1);

struct ClassifyReport {
  bool d_heffter = false;
  bool heffter_linear_space = false;  // d_heffter and every symbol pair in exactly one block
  bool heffter_array = false;         // d_heffter and D = {rows, cols}
  HeffterReport detail;
};

ClassifyReport classify(const PartiallyFilledArray& a, const AffineDesign& d,
                        const PartialLoop& loop, int cap = kBlockWeightCap);

// Rectangular grid over Z_{2nk+1} with entries written as signed integers in
// +-[nk]; 0 marks an empty cell (the value 0 itself never appears in a
// Heffter array).
struct ClassicalGrid {
  int rows = 0, cols = 0;
  std::vector<int> cells;  // row-major, 0 = empty

  ClassicalGrid() = default;
  ClassicalGrid(int rows_, int cols_);
  int at(int r, int c) const { return cells[r * cols + c]; }
  void set(int r, int c, int v) { cells[r * cols + c] = v; }
};

struct ClassicalReport {
  bool valid = false;
  struct FillViolation {
    bool row;  // else column
    int index, count, expected;
  };
  std::vector<FillViolation> condition1;
  struct PairViolation {
    int base, pos_count, neg_count;
  };
  std::vector<PairViolation> condition2;
  struct SumViolation {
    bool row;
    int index, sum;  // representative in (-(nk), nk]
  };
  std::vector<SumViolation> condition3;
};

// The classical Heffter array conditions on an m x n grid: h filled cells per
// row and k per column, exactly one of each pair {i, -i} for i in [nk], and
// zero row/column sums mod 2nk+1.
ClassicalReport verify_classical(const ClassicalGrid& grid, int h, int k);

// Small deterministic backtracking search for a totally filled H(n;k) with
// n = k (square, no empty cells): picks a sign and a cell for each base so
// that all row and column sums vanish mod 2nk+1. Returns nullopt if none.
std::optional<ClassicalGrid> search_classical_square(int n);

// The cells of the partial loop forced by a block with symbol set T. For
// |T| = 3 the fragment is fully determined: s_i + s_j = -s_k around the
// block, plus the inverse cells. For |T| = 4 six placeholder values
// alpha..phi remain, tied by the negation pairs alpha = -phi, beta = -eps,
// gamma = -delta.
struct ForcedBlockStructure {
  std::vector<int> symbols;
  std::vector<LoopEntry> entries;  // concrete forced cells
  // unknown_cells[u] lists the cells carrying placeholder u.
  std::vector<std::vector<std::pair<Element, Element>>> unknown_cells;
  std::vector<std::pair<int, int>> negation_pairs;  // u_a = -u_b
};

ForcedBlockStructure derive_forced(const std::vector<int>& symbols);

// Materializes a fully concrete forced fragment (|T| = 3) as a partial loop
// over {0,+-1..+-n} with the axiom cells prefilled.
PartialLoop forced_to_partial_loop(const ForcedBlockStructure& forced, int n);

// Union of the per-block partial loops. The design must be affine with
// mu = 1; per_block_loops holds one loop per positive-weight block in
// class-major block order. Conflicting cells raise an InputError naming the
// two blocks.
PartialLoop assemble_ld(const PartiallyFilledArray& a, const AffineDesign& d,
                        const std::vector<PartialLoop>& per_block_loops);

// A positive-weight block's size admits no factorization k*p with p an odd
// prime and k != 2.
class UnsupportedBlockSize : public InputError {
 public:
  UnsupportedBlockSize(std::pair<int, int> block_id, int size);
  std::pair<int, int> block_id;
  int size;
};

struct TheoremResult {
  PartialLoop loop;
  std::vector<SumPolynomial> polys;  // one composite natural per block
  bool uniform_block_sizes = false;
  // Present when all positive-weight blocks share one size: the attempt to
  // complete the assembled partial loop to a total loop.
  std::optional<CompletionResult> completion;
};

// For each positive-weight block factor |Symb(B)| = k*p (smallest k first,
// p an odd prime, k != 2), build the general-construction loop on the block's
// symbols with the least primitive root and the canonical idempotent square,
// assemble the union, and emit the composite natural polynomial per block.
// The result is always P-Heffter by construction.
TheoremResult theorem_construct(const PartiallyFilledArray& a, const AffineDesign& d,
                                long long completion_budget = kDefaultCompletionBudget);

}  // namespace heffter
