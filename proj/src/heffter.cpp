#include "heffter/heffter.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace heffter {

namespace {

// A must belong to A(m, S): symbols 1..n, each appearing exactly once.
int check_array_class(const PartiallyFilledArray& a) {
  const int n = a.max_symbol();
  std::vector<int> count(n + 1, 0);
  for (const ArrayEntry& e : entries(a)) ++count[e.symbol];
  for (int s = 1; s <= n; ++s)
    if (count[s] != 1)
      throw InputError("array is not in A(m,S): symbol " + std::to_string(s) +
                       " appears " + std::to_string(count[s]) + " times");
  if (n == 0) throw InputError("array is empty");
  return n;
}

void check_design(const PartiallyFilledArray& a, const AffineDesign& d) {
  const AffineReport report = validate_affine(a, d);
  if (!report.in_aff_lambda)
    throw InputError("design is not an affine 1-design over the array (Aff_lambda)");
}

std::vector<std::pair<int, int>> positive_blocks(const PartiallyFilledArray& a,
                                                 const AffineDesign& d) {
  std::vector<std::pair<int, int>> out;
  for (auto id : d.block_ids())
    if (block_weight(a, d.block(id)) > 0) out.push_back(id);
  return out;
}

std::vector<Element> evaluate_set(const std::vector<SumPolynomial>& polys,
                                  const PartialLoop& loop, int threads) {
  std::vector<Element> values(polys.size());
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(polys.size())));
  if (workers == 1) {
    for (size_t i = 0; i < polys.size(); ++i) values[i] = evaluate(polys[i], loop);
    return values;
  }
  std::vector<std::thread> pool;
  const size_t chunk = (polys.size() + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const size_t begin = w * chunk;
    const size_t end = std::min(polys.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      for (size_t i = begin; i < end; ++i) values[i] = evaluate(polys[i], loop);
    });
  }
  for (std::thread& t : pool) t.join();
  return values;
}

}  // namespace

DspsReport validate_dsps(const PartiallyFilledArray& a, const AffineDesign& d,
                         const std::vector<SumPolynomial>& polys) {
  check_array_class(a);
  check_design(a, d);
  DspsReport report;

  std::set<std::vector<int>> block_symbol_sets;
  for (auto id : d.block_ids()) block_symbol_sets.insert(symb(a, d.block(id)));

  for (size_t i = 0; i < polys.size(); ++i)
    if (!block_symbol_sets.count(polys[i].support()))
      report.unmatched_polys.push_back(static_cast<int>(i));

  for (auto id : positive_blocks(a, d)) {
    const std::vector<int> symbols = symb(a, d.block(id));
    const bool covered = std::any_of(polys.begin(), polys.end(), [&](const SumPolynomial& p) {
      return p.support() == symbols;
    });
    if (!covered) report.uncovered_blocks.push_back(id);
  }

  report.valid = report.unmatched_polys.empty() && report.uncovered_blocks.empty();
  return report;
}

HeffterReport is_p_heffter(const PartiallyFilledArray& a, const AffineDesign& d,
                           const std::vector<SumPolynomial>& polys,
                           const PartialLoop& loop, int threads) {
  HeffterReport report;
  report.dsps = validate_dsps(a, d, polys);
  const std::vector<Element> values = evaluate_set(polys, loop, threads);
  report.evaluations = static_cast<long long>(values.size());
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] != Element::zero())
      report.failures.push_back({static_cast<int>(i), values[i]});
  report.holds = report.dsps.valid && report.failures.empty();
  return report;
}

HeffterReport is_d_heffter(const PartiallyFilledArray& a, const AffineDesign& d,
                           const PartialLoop& loop, int cap, int threads) {
  check_array_class(a);
  check_design(a, d);
  std::vector<SumPolynomial> polys;
  for (auto id : positive_blocks(a, d)) {
    const std::vector<int> symbols = symb(a, d.block(id));
    if (static_cast<int>(symbols.size()) > cap)
      throw SearchTooLarge("is_d_heffter: block (" + std::to_string(id.first) + "," +
                           std::to_string(id.second) + ") has weight " +
                           std::to_string(symbols.size()) + " above cap " +
                           std::to_string(cap) + "; raise the cap to override");
    for (SumPolynomial& p : enumerate_all(symbols, cap)) polys.push_back(std::move(p));
  }
  return is_p_heffter(a, d, polys, loop, threads);
}

namespace {

std::vector<std::vector<Cell>> sorted_classes(const AffineDesign& d) {
  std::vector<std::vector<Cell>> out;
  for (const ParallelClass& cls : d.classes) {
    std::vector<Cell> blocks_flat;  // canonical form: blocks as sorted groups
    std::vector<std::vector<Cell>> blocks;
    for (const CellBlock& b : cls) {
      std::vector<Cell> cells = b.cells;
      std::sort(cells.begin(), cells.end());
      blocks.push_back(std::move(cells));
    }
    std::sort(blocks.begin(), blocks.end());
    for (auto& b : blocks) {
      blocks_flat.insert(blocks_flat.end(), b.begin(), b.end());
      blocks_flat.push_back({-1, -1});  // separator
    }
    out.push_back(std::move(blocks_flat));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClassifyReport classify(const PartiallyFilledArray& a, const AffineDesign& d,
                        const PartialLoop& loop, int cap) {
  const int n = check_array_class(a);
  ClassifyReport out;
  out.detail = is_d_heffter(a, d, loop, cap);
  out.d_heffter = out.detail.holds;

  // Every pair of distinct symbols must share exactly one positive-weight block.
  bool pairs_ok = true;
  std::vector<std::vector<int>> pair_count(n + 1, std::vector<int>(n + 1, 0));
  for (auto id : positive_blocks(a, d)) {
    const std::vector<int> symbols = symb(a, d.block(id));
    for (size_t i = 0; i < symbols.size(); ++i)
      for (size_t j = i + 1; j < symbols.size(); ++j)
        ++pair_count[symbols[i]][symbols[j]];
  }
  for (int x = 1; x <= n && pairs_ok; ++x)
    for (int y = x + 1; y <= n && pairs_ok; ++y)
      if (pair_count[x][y] != 1) pairs_ok = false;
  out.heffter_linear_space = out.d_heffter && pairs_ok;

  const AffineDesign row_col = design_from_partitions(
      a, {PartitionKind::Row, PartitionKind::Col});
  out.heffter_array = out.d_heffter && sorted_classes(d) == sorted_classes(row_col);
  return out;
}

ClassicalGrid::ClassicalGrid(int rows_, int cols_)
    : rows(rows_), cols(cols_), cells(rows_ * cols_, 0) {
  if (rows_ < 1 || cols_ < 1) throw InputError("classical grid: bad dimensions");
}

ClassicalReport verify_classical(const ClassicalGrid& grid, int h, int k) {
  const int nk = grid.cols * k;
  const int mod = 2 * nk + 1;
  for (int v : grid.cells)
    if (v != 0 && (v < -nk || v > nk))
      throw InputError("classical grid: entry " + std::to_string(v) +
                       " outside +-[" + std::to_string(nk) + "]");

  ClassicalReport report;
  for (int r = 0; r < grid.rows; ++r) {
    int count = 0, sum = 0;
    for (int c = 0; c < grid.cols; ++c)
      if (grid.at(r, c) != 0) {
        ++count;
        sum = (sum + grid.at(r, c)) % mod;
      }
    if (count != h) report.condition1.push_back({true, r, count, h});
    if (sum % mod != 0) report.condition3.push_back({true, r, (sum % mod + mod) % mod});
  }
  for (int c = 0; c < grid.cols; ++c) {
    int count = 0, sum = 0;
    for (int r = 0; r < grid.rows; ++r)
      if (grid.at(r, c) != 0) {
        ++count;
        sum = (sum + grid.at(r, c)) % mod;
      }
    if (count != k) report.condition1.push_back({false, c, count, k});
    if (sum % mod != 0) report.condition3.push_back({false, c, (sum % mod + mod) % mod});
  }

  std::vector<int> pos(nk + 1, 0), neg(nk + 1, 0);
  for (int v : grid.cells) {
    if (v > 0) ++pos[v];
    if (v < 0) ++neg[-v];
  }
  for (int base = 1; base <= nk; ++base)
    if (pos[base] + neg[base] != 1)
      report.condition2.push_back({base, pos[base], neg[base]});

  report.valid = report.condition1.empty() && report.condition2.empty() &&
                 report.condition3.empty();
  return report;
}

namespace {

// Deterministic search for a fully filled n x n grid over Z_{2n^2+1}: one of
// each pair {b, -b}, zero row and column sums. Final row/column cells are
// forced by the sums, so only the leading (n-1)^2 cells branch.
class ClassicalSearch {
 public:
  explicit ClassicalSearch(int n)
      : n_(n), nk_(n * n), mod_(2 * n * n + 1), grid_(n, n),
        base_used_(nk_ + 1, false), row_sum_(n, 0), col_sum_(n, 0) {}

  std::optional<ClassicalGrid> run() {
    if (fill(0)) return grid_;
    return std::nullopt;
  }

 private:
  bool place(int r, int c, int v, bool& placed) {
    const int base = v < 0 ? -v : v;
    if (base < 1 || base > nk_ || base_used_[base]) return false;
    grid_.set(r, c, v);
    base_used_[base] = true;
    row_sum_[r] = ((row_sum_[r] + v) % mod_ + mod_) % mod_;
    col_sum_[c] = ((col_sum_[c] + v) % mod_ + mod_) % mod_;
    placed = true;
    return true;
  }

  void unplace(int r, int c) {
    const int v = grid_.at(r, c);
    const int base = v < 0 ? -v : v;
    base_used_[base] = false;
    row_sum_[r] = ((row_sum_[r] - v) % mod_ + mod_) % mod_;
    col_sum_[c] = ((col_sum_[c] - v) % mod_ + mod_) % mod_;
    grid_.set(r, c, 0);
  }

  // Signed representative of -sum in (-nk, nk].
  int forced_value(int sum) const {
    int v = (mod_ - sum) % mod_;
    if (v > nk_) v -= mod_;
    return v;
  }

  bool fill(int pos) {
    if (pos == n_ * n_) return true;
    const int r = pos / n_, c = pos % n_;
    const bool last_col = (c == n_ - 1), last_row = (r == n_ - 1);

    if (last_col || last_row) {
      const int want_row = forced_value(row_sum_[r]);
      const int want_col = forced_value(col_sum_[c]);
      int v = 0;
      if (last_col && last_row) {
        if (want_row != want_col) return false;
        v = want_row;
      } else {
        v = last_col ? want_row : want_col;
      }
      if (v == 0) return false;
      bool placed = false;
      if (!place(r, c, v, placed)) return false;
      if (fill(pos + 1)) return true;
      unplace(r, c);
      return false;
    }

    for (int base = 1; base <= nk_; ++base) {
      if (base_used_[base]) continue;
      for (int sign = 0; sign < 2; ++sign) {
        const int v = sign == 0 ? base : -base;
        bool placed = false;
        if (!place(r, c, v, placed)) continue;
        if (fill(pos + 1)) return true;
        unplace(r, c);
      }
    }
    return false;
  }

  int n_, nk_, mod_;
  ClassicalGrid grid_;
  std::vector<bool> base_used_;
  std::vector<int> row_sum_, col_sum_;
};

}  // namespace

std::optional<ClassicalGrid> search_classical_square(int n) {
  if (n < 3) return std::nullopt;  // no H(n;k) below k = 3
  return ClassicalSearch(n).run();
}

ForcedBlockStructure derive_forced(const std::vector<int>& symbols) {
  std::vector<int> t = symbols;
  std::sort(t.begin(), t.end());
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] <= 0) throw InputError("derive_forced: symbols must be positive");
    if (i > 0 && t[i] == t[i - 1]) throw InputError("derive_forced: duplicate symbol");
  }
  if (t.size() != 3 && t.size() != 4)
    throw InputError("derive_forced: unsupported block size " + std::to_string(t.size()) +
                     " (patterns exist for 3 and 4)");

  ForcedBlockStructure out;
  out.symbols = t;
  auto pos = [&](int i) { return Element::pos(t[i]); };
  auto neg = [&](int i) { return Element::neg(t[i]); };

  for (int i = 0; i < static_cast<int>(t.size()); ++i) {
    out.entries.push_back({pos(i), neg(i), Element::zero()});
    out.entries.push_back({neg(i), pos(i), Element::zero()});
  }

  if (t.size() == 3) {
    // s_i + s_j = -s_k for {i,j,k} = {1,2,3}.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const int k = 3 - i - j;
        out.entries.push_back({pos(i), pos(j), neg(k)});
      }
    return out;
  }

  // |T| = 4: six placeholders alpha..phi with alpha = -phi, beta = -eps,
  // gamma = -delta.
  out.unknown_cells.assign(6, {});
  auto put = [&](int u, Element a, Element b) {
    out.unknown_cells[u].push_back({a, b});
    out.unknown_cells[u].push_back({b, a});
  };
  put(0, pos(0), pos(1));  // alpha = s1 + s2
  put(0, neg(3), neg(2));
  put(1, pos(0), pos(2));  // beta = s1 + s3
  put(1, neg(3), neg(1));
  put(2, pos(0), pos(3));  // gamma = s1 + s4
  put(2, neg(2), neg(1));
  put(3, pos(1), pos(2));  // delta = s2 + s3
  put(3, neg(3), neg(0));
  put(4, pos(1), pos(3));  // eps = s2 + s4
  put(4, neg(2), neg(0));
  put(5, pos(2), pos(3));  // phi = s3 + s4
  put(5, neg(1), neg(0));
  out.negation_pairs = {{0, 5}, {1, 4}, {2, 3}};
  return out;
}

PartialLoop forced_to_partial_loop(const ForcedBlockStructure& forced, int n) {
  if (!forced.unknown_cells.empty())
    throw InputError("forced_to_partial_loop: fragment has unresolved placeholders");
  PartialLoop loop = PartialLoop::with_axioms(n);
  for (const LoopEntry& e : forced.entries) {
    const Element cur = loop.at(e.lhs, e.rhs);
    if (cur.defined() && cur != e.value)
      throw InputError("forced fragment conflicts with the loop axioms");
    loop.set(e.lhs, e.rhs, e.value);
  }
  return loop;
}

PartialLoop assemble_ld(const PartiallyFilledArray& a, const AffineDesign& d,
                        const std::vector<PartialLoop>& per_block_loops) {
  const int n = check_array_class(a);
  const AffineReport affine = validate_affine(a, d);
  if (!affine.is_affine_1_design || (affine.mu.has_value() && *affine.mu != 1))
    throw InputError("assemble_ld: design must be affine with mu = 1");

  const auto blocks = positive_blocks(a, d);
  if (blocks.size() != per_block_loops.size())
    throw InputError("assemble_ld: need one loop per positive-weight block (" +
                     std::to_string(blocks.size()) + " blocks, " +
                     std::to_string(per_block_loops.size()) + " loops)");

  PartialLoop out = PartialLoop::with_axioms(n);
  const int side = out.side();
  std::vector<int> provenance(side * side, -1);  // -1 = axiom cell

  for (size_t b = 0; b < blocks.size(); ++b) {
    if (per_block_loops[b].n() != n)
      throw InputError("assemble_ld: block loop must live on the ambient symbol set");
    for (const LoopEntry& e : per_block_loops[b].entries()) {
      const Element cur = out.at(e.lhs, e.rhs);
      if (cur.defined()) {
        if (cur == e.value) continue;
        const int idx = canonical_index(e.lhs, n) * side + canonical_index(e.rhs, n);
        const int other = provenance[idx];
        const std::string lhs_name =
            other < 0 ? std::string("the loop axioms")
                      : "block (" + std::to_string(blocks[other].first) + "," +
                            std::to_string(blocks[other].second) + ")";
        throw InputError("assemble_ld: cell (" + e.lhs.str() + "," + e.rhs.str() +
                         ") conflicts between " + lhs_name + " and block (" +
                         std::to_string(blocks[b].first) + "," +
                         std::to_string(blocks[b].second) + ")");
      }
      out.set(e.lhs, e.rhs, e.value);
      provenance[canonical_index(e.lhs, n) * side + canonical_index(e.rhs, n)] =
          static_cast<int>(b);
    }
  }
  return out;
}

UnsupportedBlockSize::UnsupportedBlockSize(std::pair<int, int> block_id_, int size_)
    : InputError("block (" + std::to_string(block_id_.first) + "," +
                 std::to_string(block_id_.second) + ") has size " +
                 std::to_string(size_) +
                 ", not expressible as k*p with p an odd prime and k != 2"),
      block_id(block_id_),
      size(size_) {}

namespace {

// Smallest k != 2 with size = k * p, p an odd prime.
std::optional<std::pair<int, int>> admissible_factorization(int size) {
  for (int k = 1; k <= size; ++k) {
    if (k == 2 || size % k != 0) continue;
    if (is_odd_prime(size / k)) return std::make_pair(k, size / k);
  }
  return std::nullopt;
}

// Copies a loop over local symbols 1..kp onto the ambient symbols given by
// the (sorted) block symbol list.
PartialLoop embed_loop(const PartialLoop& local, const std::vector<int>& symbols, int n) {
  auto lift = [&](Element e) {
    if (!e.defined() || e.is_zero()) return e;
    const int target = symbols[e.base() - 1];
    return e.positive() ? Element::pos(target) : Element::neg(target);
  };
  PartialLoop out(n);
  for (const LoopEntry& e : local.entries()) out.set(lift(e.lhs), lift(e.rhs), lift(e.value));
  return out;
}

}  // namespace

TheoremResult theorem_construct(const PartiallyFilledArray& a, const AffineDesign& d,
                                long long completion_budget) {
  const int n = check_array_class(a);
  check_design(a, d);

  std::vector<PartialLoop> block_loops;
  std::vector<SumPolynomial> polys;
  std::set<int> sizes;
  for (auto id : positive_blocks(a, d)) {
    const std::vector<int> symbols = symb(a, d.block(id));
    const int size = static_cast<int>(symbols.size());
    sizes.insert(size);
    const auto factorization = admissible_factorization(size);
    if (!factorization) throw UnsupportedBlockSize(id, size);
    const auto [k, p] = *factorization;
    const int r = least_primitive_root(p);
    const PartialLoop local =
        k == 1 ? build_lpr(p, r) : build_general(p, r, k, idempotent_square(k));
    block_loops.push_back(embed_loop(local, symbols, n));

    std::vector<std::vector<int>> sub_blocks;
    for (int l = 0; l < k; ++l)
      sub_blocks.emplace_back(symbols.begin() + l * p, symbols.begin() + (l + 1) * p);
    polys.push_back(composite_block_poly(sub_blocks));
  }

  TheoremResult result{assemble_ld(a, d, block_loops), std::move(polys), sizes.size() == 1,
                       std::nullopt};
  if (result.uniform_block_sizes)
    result.completion = complete(result.loop, completion_budget);
  return result;
}

}  // namespace heffter
