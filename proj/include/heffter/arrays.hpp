#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heffter/elements.hpp"

namespace heffter {

struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Square m x m array over S with possibly empty cells. A filled cell stores a
// symbol index in [n]; 0 marks an empty cell.
class PartiallyFilledArray {
 public:
  static constexpr int kEmpty = 0;

  explicit PartiallyFilledArray(int m);
  PartiallyFilledArray(int m, std::vector<int> cells);  // row-major, 0 = empty

  int m() const { return m_; }
  int at(int row, int col) const;
  void set(int row, int col, int symbol);

  bool filled(int row, int col) const { return at(row, col) != kEmpty; }
  int weight() const;            // number of filled cells
  int max_symbol() const;        // largest symbol value present (0 if empty)
  std::vector<int> symbols() const;  // sorted distinct symbols

  friend bool operator==(const PartiallyFilledArray&, const PartiallyFilledArray&) = default;

 private:
  void check(int row, int col) const;
  int m_;
  std::vector<int> cells_;
};

// Non-empty entries (row, col, symbol) of the array.
struct ArrayEntry {
  int row, col, symbol;
  friend bool operator==(const ArrayEntry&, const ArrayEntry&) = default;
};
std::vector<ArrayEntry> entries(const PartiallyFilledArray& a);

// Block of grid cells. Blocks of a design live on all m^2 cells; the weight
// of a block counts only the filled cells it covers.
struct CellBlock {
  std::vector<Cell> cells;
  friend bool operator==(const CellBlock&, const CellBlock&) = default;
};

// Symbols of the filled cells covered by the block, sorted ascending.
std::vector<int> symb(const PartiallyFilledArray& a, const CellBlock& block);
int block_weight(const PartiallyFilledArray& a, const CellBlock& block);

using ParallelClass = std::vector<CellBlock>;

enum class PartitionKind { Row, Col, Diag, Adiag };
PartitionKind partition_kind_from_name(const std::string& name);
std::string partition_kind_name(PartitionKind kind);

// The four canonical cell partitions. Block j of the diagonal partition holds
// the cells (i, i+j); block j of the anti-diagonal partition holds the cells
// (i, -i-j-1); indices mod m.
ParallelClass partition(const PartiallyFilledArray& a, PartitionKind kind);

struct AffineDesign {
  std::vector<ParallelClass> classes;
  std::vector<std::string> names;  // optional labels, parallel to classes

  int lambda() const { return static_cast<int>(classes.size()); }
  // Flat list of (class index, block index) in class-major order.
  std::vector<std::pair<int, int>> block_ids() const;
  const CellBlock& block(std::pair<int, int> id) const;

  friend bool operator==(const AffineDesign& a, const AffineDesign& b) {
    return a.classes == b.classes;
  }
};

AffineDesign design_from_partitions(const PartiallyFilledArray& a,
                                    const std::vector<PartitionKind>& kinds);

struct AffineReport {
  bool partitions_ok = false;
  std::vector<std::string> partition_violations;

  bool mu_constant = false;
  std::optional<int> mu;  // empty when the design has no non-parallel pairs
  struct PairIntersection {
    int class_a, block_a, class_b, block_b, count;
  };
  std::vector<PairIntersection> intersection_violations;  // count != mu

  bool weights_ok = false;  // every block weight is 0 or >= 3
  struct WeightViolation {
    int class_index, block_index, weight;
  };
  std::vector<WeightViolation> weight_violations;

  bool is_affine_1_design = false;  // partitions_ok && mu_constant
  bool in_aff_lambda = false;       // affine with mu == 1 and weights_ok
  int lambda = 0;
};

// Checks that every class partitions the cell grid, that non-parallel blocks
// meet in a constant number of cells, and the Aff_lambda weight rule
// (weight 0 blocks are exempt). Out-of-range cells are an input error.
AffineReport validate_affine(const PartiallyFilledArray& a, const AffineDesign& d);

// Searches Sym(Z_m) for a permutation applied simultaneously to rows, columns
// and symbols carrying a1 onto a2. Symbols must be < m so that the same
// permutation can act on them. Brute force, guarded by the cap.
std::optional<std::vector<int>> array_isomorphic(const PartiallyFilledArray& a1,
                                                 const PartiallyFilledArray& a2,
                                                 int cap = 8);

}  // namespace heffter
