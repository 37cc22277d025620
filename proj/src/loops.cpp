#include "heffter/loops.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>

namespace heffter {

PartialLoop::PartialLoop(int n) : n_(n) {
  if (n < 1) throw InputError("loop: n must be positive");
  cells_.assign(side() * side(), Element::undefined());
}

PartialLoop PartialLoop::with_axioms(int n) {
  PartialLoop loop(n);
  for (Element e : canonical_elements(n)) {
    loop.set(Element::zero(), e, e);
    loop.set(e, Element::zero(), e);
    loop.set(e, e.negated(), Element::zero());
    loop.set(e.negated(), e, Element::zero());
  }
  return loop;
}

Element PartialLoop::at(Element x, Element y) const {
  if (!x.defined() || !y.defined()) return Element::undefined();
  return cells_[canonical_index(x, n_) * side() + canonical_index(y, n_)];
}

Element PartialLoop::at_index(int row, int col) const {
  return cells_[row * side() + col];
}

void PartialLoop::set(Element x, Element y, Element value) {
  cells_[canonical_index(x, n_) * side() + canonical_index(y, n_)] = value;
}

void PartialLoop::set_index(int row, int col, Element value) {
  cells_[row * side() + col] = value;
}

bool PartialLoop::is_total() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](Element e) { return e.defined(); });
}

int PartialLoop::defined_cells() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                        [](Element e) { return e.defined(); }));
}

int PartialLoop::nontrivial_weight() const {
  int w = 0;
  for (int r = 1; r < side(); ++r)
    for (int c = 1; c < side(); ++c) {
      const Element x = element_at(r, n_), y = element_at(c, n_);
      if (y == x.negated()) continue;
      if (at_index(r, c).defined()) ++w;
    }
  return w;
}

std::vector<LoopEntry> PartialLoop::entries() const {
  std::vector<LoopEntry> out;
  for (int r = 0; r < side(); ++r)
    for (int c = 0; c < side(); ++c)
      if (at_index(r, c).defined())
        out.push_back({element_at(r, n_), element_at(c, n_), at_index(r, c)});
  return out;
}

bool PartialLoop::contains(const PartialLoop& other) const {
  if (other.n_ != n_) return false;
  for (int i = 0; i < side() * side(); ++i)
    if (other.cells_[i].defined() && cells_[i] != other.cells_[i]) return false;
  return true;
}

Element add(const PartialLoop& loop, Element x, Element y) { return loop.at(x, y); }

LoopReport validate_partial_loop(const PartialLoop& loop) {
  const int n = loop.n();
  const int side = loop.side();
  LoopReport report;

  // Latin: each element at most once per row and per column.
  for (int r = 0; r < side; ++r) {
    std::vector<int> row_seen(side, -1), col_seen(side, -1);
    for (int c = 0; c < side; ++c) {
      const Element rv = loop.at_index(r, c);
      if (rv.defined()) {
        const int idx = canonical_index(rv, n);
        if (row_seen[idx] >= 0)
          report.violations.push_back({LoopViolation::Kind::LatinRow, element_at(r, n),
                                       element_at(c, n),
                                       "value " + rv.str() + " repeats in row"});
        row_seen[idx] = c;
      }
      const Element cv = loop.at_index(c, r);
      if (cv.defined()) {
        const int idx = canonical_index(cv, n);
        if (col_seen[idx] >= 0)
          report.violations.push_back({LoopViolation::Kind::LatinCol, element_at(c, n),
                                       element_at(r, n),
                                       "value " + cv.str() + " repeats in column"});
        col_seen[idx] = c;
      }
    }
  }

  // Identity row/column and inverse cells must be present and correct.
  for (Element e : canonical_elements(n)) {
    if (loop.at(Element::zero(), e) != e)
      report.violations.push_back({LoopViolation::Kind::Identity, Element::zero(), e,
                                   "0 + " + e.str() + " must equal " + e.str()});
    if (loop.at(e, Element::zero()) != e)
      report.violations.push_back({LoopViolation::Kind::Identity, e, Element::zero(),
                                   e.str() + " + 0 must equal " + e.str()});
    if (loop.at(e, e.negated()) != Element::zero())
      report.violations.push_back({LoopViolation::Kind::Inverse, e, e.negated(),
                                   e.str() + " + " + e.negated().str() + " must equal 0"});
  }

  report.valid = report.violations.empty();
  report.is_total = loop.is_total();
  report.weight = loop.nontrivial_weight();

  const auto elems = canonical_elements(n);
  report.is_commutative = true;
  for (Element x : elems) {
    for (Element y : elems) {
      const Element xy = loop.at(x, y), yx = loop.at(y, x);
      if (xy.defined() && yx.defined() && xy != yx) {
        report.is_commutative = false;
        report.commutativity_counterexample = {{x, y}};
        break;
      }
    }
    if (!report.is_commutative) break;
  }

  report.is_associative = true;
  for (Element x : elems) {
    for (Element y : elems) {
      for (Element z : elems) {
        const Element lhs = loop.at(loop.at(x, y), z);
        const Element rhs = loop.at(x, loop.at(y, z));
        if (lhs.defined() && rhs.defined() && lhs != rhs) {
          report.is_associative = false;
          report.associativity_counterexample = {{x, y, z}};
          break;
        }
      }
      if (!report.is_associative) break;
    }
    if (!report.is_associative) break;
  }

  return report;
}

PartialLoop relabel(const PartialLoop& loop, const SignedPermutation& pi) {
  if (pi.n() != loop.n()) throw InputError("relabel: permutation domain mismatch");
  PartialLoop out(loop.n());
  for (const LoopEntry& e : loop.entries())
    out.set(pi.apply(e.lhs), pi.apply(e.rhs), pi.apply(e.value));
  return out;
}

namespace {

// Backtracking enumeration of sign-respecting automorphisms: bases are
// assigned images one at a time, and every already-decided pair must carry a
// defined cell onto a compatible defined cell (and undefined onto undefined).
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const PartialLoop& loop)
      : loop_(loop), n_(loop.n()), image_(n_ + 1, 0), base_used_(n_ + 1, false) {}

  std::vector<SignedPermutation> run() {
    extend(1);
    return found_;
  }

 private:
  Element map(Element e) const {
    // Defined only when the base has been assigned.
    const int v = e.value();
    if (v == 0) return Element::zero();
    const int b = v < 0 ? -v : v;
    const int img = image_[b];
    return Element::of(v < 0 ? -img : img);
  }

  bool decided(Element e) const {
    if (!e.defined()) return false;
    return e.is_zero() || image_[e.base()] != 0;
  }

  bool consistent_with(int base) const {
    // Re-check all pairs of decided elements involving the new base.
    std::vector<Element> decided_elems;
    decided_elems.push_back(Element::zero());
    for (int b = 1; b <= n_; ++b)
      if (image_[b] != 0) {
        decided_elems.push_back(Element::pos(b));
        decided_elems.push_back(Element::neg(b));
      }
    for (Element x : decided_elems) {
      for (Element y : decided_elems) {
        // Only pairs touched by the new base need re-checking: the base may
        // appear in x, in y, or in the value of the cell.
        const Element v = loop_.at(x, y);
        const bool touches = (!x.is_zero() && x.base() == base) ||
                             (!y.is_zero() && y.base() == base) ||
                             (v.defined() && !v.is_zero() && v.base() == base);
        if (!touches) continue;
        const Element cell = loop_.at(map(x), map(y));
        if (!v.defined()) {
          if (cell.defined()) return false;
          continue;
        }
        if (!cell.defined()) return false;
        if (decided(v)) {
          if (cell != map(v)) return false;
        } else {
          // v's base is unassigned; the target value's base must still be free
          // as an image.
          if (cell.is_zero()) return false;
          if (base_used_[cell.base()]) return false;
        }
      }
    }
    return true;
  }

  void extend(int base) {
    if (base > n_) {
      std::vector<int> img(image_.begin() + 1, image_.end());
      found_.emplace_back(std::move(img));
      return;
    }
    for (int idx = 1; idx <= 2 * n_; ++idx) {
      const Element candidate = element_at(idx, n_);
      const int b = candidate.base();
      if (base_used_[b]) continue;
      image_[base] = candidate.value();
      base_used_[b] = true;
      if (consistent_with(base)) extend(base + 1);
      image_[base] = 0;
      base_used_[b] = false;
    }
  }

  const PartialLoop& loop_;
  int n_;
  std::vector<int> image_;      // image_[b] = signed image of +b, 0 = unassigned
  std::vector<bool> base_used_;
  std::vector<SignedPermutation> found_;
};

}  // namespace

std::vector<SignedPermutation> automorphisms(const PartialLoop& loop, int cap) {
  if (loop.n() > cap)
    throw SearchTooLarge("automorphisms: n = " + std::to_string(loop.n()) +
                         " exceeds cap " + std::to_string(cap));
  return AutomorphismSearch(loop).run();
}

namespace {

// Row-major Latin completion with forward checking. Values are indexed by
// canonical position and tracked in per-row/per-column bitmasks.
class CompletionSearch {
 public:
  CompletionSearch(const PartialLoop& start, long long budget)
      : n_(start.n()), side_(start.side()), budget_(budget), table_(start) {}

  CompletionResult run() {
    CompletionResult result;
    if (side_ > 63) throw SearchTooLarge("complete: table side exceeds 63");

    // Force the axiom cells first; a conflict here is already infeasible.
    PartialLoop forced = table_;
    for (Element e : canonical_elements(n_)) {
      if (!force(forced, Element::zero(), e, e) || !force(forced, e, Element::zero(), e) ||
          !force(forced, e, e.negated(), Element::zero()) ||
          !force(forced, e.negated(), e, Element::zero())) {
        result.status = CompletionStatus::Infeasible;
        result.nodes = nodes_;
        return result;
      }
    }
    table_ = forced;

    row_mask_.assign(side_, 0);
    col_mask_.assign(side_, 0);
    for (int r = 0; r < side_; ++r)
      for (int c = 0; c < side_; ++c) {
        const Element v = table_.at_index(r, c);
        if (!v.defined()) {
          empties_.push_back(r * side_ + c);
          continue;
        }
        const uint64_t bit = 1ull << canonical_index(v, n_);
        if ((row_mask_[r] & bit) || (col_mask_[c] & bit)) {
          result.status = CompletionStatus::Infeasible;  // input is not Latin
          result.nodes = nodes_;
          return result;
        }
        row_mask_[r] |= bit;
        col_mask_[c] |= bit;
      }

    const uint64_t full = (side_ == 63) ? ~0ull >> 1 : (1ull << side_) - 1;
    full_ = full;

    if (dfs(0)) {
      result.status = CompletionStatus::Completed;
      result.loop = table_;
    } else {
      result.status = exhausted_ ? CompletionStatus::BudgetExhausted
                                 : CompletionStatus::Infeasible;
    }
    result.nodes = nodes_;
    return result;
  }

 private:
  static bool force(PartialLoop& loop, Element x, Element y, Element v) {
    const Element cur = loop.at(x, y);
    if (cur.defined()) return cur == v;
    loop.set(x, y, v);
    return true;
  }

  bool dfs(size_t pos) {
    if (pos == empties_.size()) return true;
    if (exhausted_) return false;
    const int cell = empties_[pos];
    const int r = cell / side_, c = cell % side_;
    uint64_t candidates = full_ & ~(row_mask_[r] | col_mask_[c]);
    while (candidates) {
      const int idx = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const uint64_t bit = 1ull << idx;
      row_mask_[r] |= bit;
      col_mask_[c] |= bit;
      table_.set_index(r, c, element_at(idx, n_));
      if (feasible_after(r, c, pos) && dfs(pos + 1)) return true;
      table_.set_index(r, c, Element::undefined());
      row_mask_[r] &= ~bit;
      col_mask_[c] &= ~bit;
    }
    return false;
  }

  // Forward check: every still-empty cell in row r / column c keeps at least
  // one candidate.
  bool feasible_after(int r, int c, size_t pos) const {
    for (size_t k = pos + 1; k < empties_.size(); ++k) {
      const int cell = empties_[k];
      const int er = cell / side_, ec = cell % side_;
      if (er != r && ec != c) continue;
      if ((full_ & ~(row_mask_[er] | col_mask_[ec])) == 0) return false;
    }
    return true;
  }

  int n_, side_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  uint64_t full_ = 0;
  PartialLoop table_;
  std::vector<uint64_t> row_mask_, col_mask_;
  std::vector<int> empties_;  // row-major canonical order
};

}  // namespace

CompletionResult complete(const PartialLoop& loop, long long budget) {
  return CompletionSearch(loop, budget).run();
}

PartialLoop zn_loop(int n) {
  const int mod = 2 * n + 1;
  PartialLoop loop(n);
  for (Element x : canonical_elements(n))
    for (Element y : canonical_elements(n)) {
      int v = (x.value() + y.value()) % mod;
      if (v > n) v -= mod;
      if (v < -n) v += mod;
      loop.set(x, y, Element::of(v));
    }
  return loop;
}

}  // namespace heffter
