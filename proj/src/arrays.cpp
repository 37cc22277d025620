#include "heffter/arrays.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace heffter {

PartiallyFilledArray::PartiallyFilledArray(int m) : m_(m), cells_(m * m, kEmpty) {
  if (m < 1) throw InputError("array order must be positive");
}

PartiallyFilledArray::PartiallyFilledArray(int m, std::vector<int> cells)
    : m_(m), cells_(std::move(cells)) {
  if (m < 1) throw InputError("array order must be positive");
  if (static_cast<int>(cells_.size()) != m * m)
    throw InputError("array: cell count does not match order");
  for (int v : cells_)
    if (v < 0) throw InputError("array: symbols are positive indices");
}

void PartiallyFilledArray::check(int row, int col) const {
  if (row < 0 || row >= m_ || col < 0 || col >= m_)
    throw InputError("array cell out of range");
}

int PartiallyFilledArray::at(int row, int col) const {
  check(row, col);
  return cells_[row * m_ + col];
}

void PartiallyFilledArray::set(int row, int col, int symbol) {
  check(row, col);
  if (symbol < 0) throw InputError("array: symbols are positive indices");
  cells_[row * m_ + col] = symbol;
}

int PartiallyFilledArray::weight() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](int v) { return v != kEmpty; }));
}

int PartiallyFilledArray::max_symbol() const {
  return cells_.empty() ? 0 : *std::max_element(cells_.begin(), cells_.end());
}

std::vector<int> PartiallyFilledArray::symbols() const {
  std::set<int> s;
  for (int v : cells_)
    if (v != kEmpty) s.insert(v);
  return {s.begin(), s.end()};
}

std::vector<ArrayEntry> entries(const PartiallyFilledArray& a) {
  std::vector<ArrayEntry> out;
  for (int i = 0; i < a.m(); ++i)
    for (int j = 0; j < a.m(); ++j)
      if (a.filled(i, j)) out.push_back({i, j, a.at(i, j)});
  return out;
}

std::vector<int> symb(const PartiallyFilledArray& a, const CellBlock& block) {
  std::set<int> s;
  for (const Cell& c : block.cells)
    if (a.filled(c.row, c.col)) s.insert(a.at(c.row, c.col));
  return {s.begin(), s.end()};
}

int block_weight(const PartiallyFilledArray& a, const CellBlock& block) {
  int w = 0;
  for (const Cell& c : block.cells)
    if (a.filled(c.row, c.col)) ++w;
  return w;
}

PartitionKind partition_kind_from_name(const std::string& name) {
  if (name == "row") return PartitionKind::Row;
  if (name == "col") return PartitionKind::Col;
  if (name == "diag") return PartitionKind::Diag;
  if (name == "adiag") return PartitionKind::Adiag;
  throw InputError("unknown partition name: " + name);
}

std::string partition_kind_name(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::Row: return "row";
    case PartitionKind::Col: return "col";
    case PartitionKind::Diag: return "diag";
    case PartitionKind::Adiag: return "adiag";
  }
  throw InputError("bad partition kind");
}

ParallelClass partition(const PartiallyFilledArray& a, PartitionKind kind) {
  const int m = a.m();
  auto wrap = [m](int x) { return ((x % m) + m) % m; };
  ParallelClass out(m);
  for (int j = 0; j < m; ++j) {
    out[j].cells.reserve(m);
    for (int i = 0; i < m; ++i) {
      switch (kind) {
        case PartitionKind::Row: out[j].cells.push_back({j, i}); break;
        case PartitionKind::Col: out[j].cells.push_back({i, j}); break;
        case PartitionKind::Diag: out[j].cells.push_back({i, wrap(i + j)}); break;
        case PartitionKind::Adiag: out[j].cells.push_back({i, wrap(-i - j - 1)}); break;
      }
    }
  }
  return out;
}

std::vector<std::pair<int, int>> AffineDesign::block_ids() const {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    for (int b = 0; b < static_cast<int>(classes[c].size()); ++b) out.emplace_back(c, b);
  return out;
}

const CellBlock& AffineDesign::block(std::pair<int, int> id) const {
  return classes.at(id.first).at(id.second);
}

AffineDesign design_from_partitions(const PartiallyFilledArray& a,
                                    const std::vector<PartitionKind>& kinds) {
  AffineDesign d;
  for (PartitionKind k : kinds) {
    d.classes.push_back(partition(a, k));
    d.names.push_back(partition_kind_name(k));
  }
  return d;
}

namespace {

int intersection_count(const CellBlock& a, const CellBlock& b) {
  int count = 0;
  for (const Cell& c : a.cells)
    if (std::find(b.cells.begin(), b.cells.end(), c) != b.cells.end()) ++count;
  return count;
}

}  // namespace

AffineReport validate_affine(const PartiallyFilledArray& a, const AffineDesign& d) {
  const int m = a.m();
  AffineReport report;
  report.lambda = d.lambda();

  for (int c = 0; c < d.lambda(); ++c) {
    for (int b = 0; b < static_cast<int>(d.classes[c].size()); ++b)
      for (const Cell& cell : d.classes[c][b].cells)
        if (cell.row < 0 || cell.row >= m || cell.col < 0 || cell.col >= m)
          throw InputError("design block cell out of range");
  }

  // Each class must cover every grid cell exactly once.
  report.partitions_ok = true;
  for (int c = 0; c < d.lambda(); ++c) {
    std::vector<int> cover(m * m, 0);
    for (const CellBlock& block : d.classes[c])
      for (const Cell& cell : block.cells) ++cover[cell.row * m + cell.col];
    for (int idx = 0; idx < m * m; ++idx) {
      if (cover[idx] != 1) {
        report.partitions_ok = false;
        report.partition_violations.push_back(
            "class " + std::to_string(c) + " covers cell (" + std::to_string(idx / m) +
            "," + std::to_string(idx % m) + ") " + std::to_string(cover[idx]) + " times");
      }
    }
  }

  // Constant intersection across non-parallel block pairs.
  report.mu_constant = true;
  for (int c1 = 0; c1 < d.lambda(); ++c1)
    for (int c2 = c1 + 1; c2 < d.lambda(); ++c2)
      for (int b1 = 0; b1 < static_cast<int>(d.classes[c1].size()); ++b1)
        for (int b2 = 0; b2 < static_cast<int>(d.classes[c2].size()); ++b2) {
          const int count = intersection_count(d.classes[c1][b1], d.classes[c2][b2]);
          if (!report.mu.has_value()) report.mu = count;
          if (count != *report.mu)
            report.intersection_violations.push_back({c1, b1, c2, b2, count});
        }
  if (!report.intersection_violations.empty()) report.mu_constant = false;

  // Weight rule: 0 or at least 3 filled cells per block.
  report.weights_ok = true;
  for (int c = 0; c < d.lambda(); ++c)
    for (int b = 0; b < static_cast<int>(d.classes[c].size()); ++b) {
      const int w = block_weight(a, d.classes[c][b]);
      if (w != 0 && w < 3) {
        report.weights_ok = false;
        report.weight_violations.push_back({c, b, w});
      }
    }

  report.is_affine_1_design = report.partitions_ok && report.mu_constant;
  report.in_aff_lambda = report.is_affine_1_design && report.weights_ok &&
                         (!report.mu.has_value() || *report.mu == 1);
  return report;
}

std::optional<std::vector<int>> array_isomorphic(const PartiallyFilledArray& a1,
                                                 const PartiallyFilledArray& a2,
                                                 int cap) {
  if (a1.m() != a2.m()) return std::nullopt;
  const int m = a1.m();
  if (m > cap)
    throw SearchTooLarge("array_isomorphic: order " + std::to_string(m) +
                         " exceeds cap " + std::to_string(cap));
  if (a1.max_symbol() >= m || a2.max_symbol() >= m)
    throw InputError("array_isomorphic: symbols must be residues below m");
  if (a1.weight() != a2.weight()) return std::nullopt;

  std::vector<int> pi(m);
  std::iota(pi.begin(), pi.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m && ok; ++j) {
        if (!a1.filled(i, j)) continue;
        const int image = a2.at(pi[i], pi[j]);
        if (image == PartiallyFilledArray::kEmpty || image != pi[a1.at(i, j)]) ok = false;
      }
    if (ok) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

}  // namespace heffter
