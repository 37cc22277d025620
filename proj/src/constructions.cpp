#include "heffter/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace heffter {

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int mod_pow(long long base, long long exp, int mod) {
  base %= mod;
  if (base < 0) base += mod;
  long long out = 1;
  while (exp > 0) {
    if (exp & 1) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(out);
}

bool is_primitive_root(int r, int p) {
  r %= p;
  if (r < 0) r += p;
  if (r == 0) return false;
  int order = 1;
  long long x = r;
  while (x != 1) {
    x = x * r % p;
    ++order;
  }
  return order == p - 1;
}

int least_primitive_root(int p) {
  for (int r = 2; r < p; ++r)
    if (is_primitive_root(r, p)) return r;
  throw InputError("no primitive root: " + std::to_string(p) + " is not prime");
}

int mod_inverse(int x, int p) {
  x %= p;
  if (x < 0) x += p;
  if (x == 0) throw InputError("mod_inverse of 0");
  return mod_pow(x, p - 2, p);  // p prime
}

SquareTable::SquareTable(int order_, std::vector<int> cells_)
    : order(order_), cells(std::move(cells_)) {
  if (order < 1) throw InputError("square table: order must be positive");
  if (static_cast<int>(cells.size()) != order * order)
    throw InputError("square table: cell count does not match order");
}

bool is_latin(const SquareTable& t, int lo, int hi) {
  if (hi - lo + 1 != t.order) return false;
  for (int r = 0; r < t.order; ++r) {
    std::vector<bool> row(t.order, false), col(t.order, false);
    for (int c = 0; c < t.order; ++c) {
      const int rv = t.at(r, c), cv = t.at(c, r);
      if (rv < lo || rv > hi || cv < lo || cv > hi) return false;
      if (row[rv - lo] || col[cv - lo]) return false;
      row[rv - lo] = col[cv - lo] = true;
    }
  }
  return true;
}

SquareTable build_hpr(int p, int r) {
  if (!is_odd_prime(p)) throw InputError("build_hpr: p must be an odd prime");
  if (!is_primitive_root(r, p))
    throw InputError("build_hpr: r = " + std::to_string(r) +
                     " is not a primitive root of " + std::to_string(p));
  const int rinv = mod_inverse(r, p);
  SquareTable h(p, std::vector<int>(p * p, 0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      h.set(i, j, static_cast<int>((j + static_cast<long long>(i - j + p) * rinv) % p));
  return h;
}

bool symmetry_check(const SquareTable& h) {
  for (int i = 0; i < h.order; ++i)
    for (int j = i + 1; j < h.order; ++j)
      if (h.at(i, j) != h.at(j, i)) return false;
  return true;
}

PartialLoop build_lpr(int p, int r) {
  const SquareTable h = build_hpr(p, r);
  PartialLoop loop = PartialLoop::with_axioms(p);
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      const int hv = h.at(i - 1, j - 1) + 1;
      loop.set(Element::pos(i), Element::pos(j), Element::of(-hv));
      if (i != j) {
        loop.set(Element::pos(i), Element::neg(j), Element::of(hv));
        loop.set(Element::neg(i), Element::pos(j), Element::of(hv));
        loop.set(Element::neg(i), Element::neg(j), Element::of(-hv));
      }
    }
  for (int i = 1; i <= p; ++i) loop.set(Element::neg(i), Element::neg(i), Element::pos(i));
  return loop;
}

Element partial_sum_formula(int p, int r, int ell) {
  if (!is_odd_prime(p) || !is_primitive_root(r, p))
    throw InputError("partial_sum_formula: invalid (p, r)");
  if (ell < 1 || ell > p) throw InputError("partial_sum_formula: ell out of range");
  if (ell == p) return Element::zero();
  // (-1)^(ell+1) * (((r^(1-ell) - 1) / (r - 1) + ell - 1 mod p) + 1)
  const int r_pow = mod_pow(mod_inverse(r, p), ell - 1, p);  // r^(1-ell)
  const int num = (r_pow - 1 + p) % p;
  const int frac = static_cast<int>(static_cast<long long>(num) * mod_inverse(r - 1, p) % p);
  const int inner = (frac + ell - 1) % p;
  const int magnitude = inner + 1;
  return ell % 2 == 1 ? Element::pos(magnitude) : Element::neg(magnitude);
}

bool is_idempotent_latin(const SquareTable& t) {
  if (!is_latin(t, 1, t.order)) return false;
  for (int l = 0; l < t.order; ++l)
    if (t.at(l, l) != l + 1) return false;
  return true;
}

namespace {

// Deterministic row-major backtracking over [k] with the diagonal prefilled.
bool fill_idempotent(SquareTable& t, int pos) {
  const int k = t.order;
  if (pos == k * k) return true;
  const int r = pos / k, c = pos % k;
  if (t.at(r, c) != 0) return fill_idempotent(t, pos + 1);
  for (int v = 1; v <= k; ++v) {
    bool ok = true;
    for (int x = 0; x < k && ok; ++x)
      if (t.at(r, x) == v || t.at(x, c) == v) ok = false;
    if (!ok) continue;
    t.set(r, c, v);
    if (fill_idempotent(t, pos + 1)) return true;
    t.set(r, c, 0);
  }
  return false;
}

}  // namespace

SquareTable idempotent_square(int k) {
  if (k < 1) throw InputError("idempotent_square: order must be positive");
  if (k == 2) throw InputError("idempotent_square: no idempotent Latin square of order 2");
  SquareTable t(k, std::vector<int>(k * k, 0));
  if (k % 2 == 1) {
    // I[i,j] = (i+j)/2 mod k on Z_k, shifted to [k].
    const int half = (k + 1) / 2;  // inverse of 2 mod k
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        t.set(i, j, static_cast<int>(static_cast<long long>(i + j) * half % k) + 1);
    return t;
  }
  for (int l = 0; l < k; ++l) t.set(l, l, l + 1);
  if (!fill_idempotent(t, 0))
    throw InputError("idempotent_square: search failed for order " + std::to_string(k));
  return t;
}

PartialLoop build_general(int p, int r, int k, const SquareTable& idem) {
  if (k == 2) throw InputError("build_general: k = 2 is not admissible");
  if (idem.order != k || !is_idempotent_latin(idem))
    throw InputError("build_general: not an idempotent Latin square of order k");
  const PartialLoop base = build_lpr(p, r);
  const int n = k * p;
  PartialLoop loop = PartialLoop::with_axioms(n);

  // lift(l, +-m) = +-s(l,m) with s(l,m) = (l-1)p + m; l, m 1-based.
  auto lift = [p](int l, Element v) {
    if (v.is_zero()) return Element::zero();
    const int flat = (l - 1) * p + v.base();
    return v.positive() ? Element::pos(flat) : Element::neg(flat);
  };

  for (int l1 = 1; l1 <= k; ++l1)
    for (int i1 = 1; i1 <= p; ++i1)
      for (int l2 = 1; l2 <= k; ++l2)
        for (int i2 = 1; i2 <= p; ++i2) {
          const int il = idem.at(l1 - 1, l2 - 1);
          const Element inner = base.at(Element::pos(i1), Element::pos(i2));
          const Element s1 = Element::pos((l1 - 1) * p + i1);
          const Element s2 = Element::pos((l2 - 1) * p + i2);
          const bool same = (l1 == l2 && i1 == i2);
          // (x, y), (x, -y), (-x, y), (-x, -y) with the inverse and
          // negative-diagonal cells excluded (axioms / special rule).
          loop.set(s1, s2, lift(il, inner));
          if (!same) {
            loop.set(s1, s2.negated(), lift(il, inner).negated());
            loop.set(s1.negated(), s2, lift(il, inner).negated());
            loop.set(s1.negated(), s2.negated(), lift(il, inner));
          }
        }
  for (int s = 1; s <= n; ++s)
    loop.set(Element::neg(s), Element::neg(s), Element::pos(s));
  return loop;
}

SumPolynomial composite_block_poly(const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) throw InputError("composite_block_poly: no blocks");
  std::vector<int> seen;
  for (const auto& block : blocks)
    for (int s : block) {
      if (std::find(seen.begin(), seen.end(), s) != seen.end())
        throw InputError("composite_block_poly: blocks overlap at symbol " +
                         std::to_string(s));
      seen.push_back(s);
    }
  SumPolynomial out = natural(blocks[0]);
  for (size_t i = 1; i < blocks.size(); ++i)
    out = SumPolynomial::sum(out, natural(blocks[i]));
  return out;
}

}  // namespace heffter
