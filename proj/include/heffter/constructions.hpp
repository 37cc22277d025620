#pragma once

#include <vector>

#include "heffter/loops.hpp"
#include "heffter/sumpoly.hpp"

namespace heffter {

bool is_odd_prime(int p);
// r generates the multiplicative group mod p (checked by order computation).
bool is_primitive_root(int r, int p);
int least_primitive_root(int p);
int mod_pow(long long base, long long exp, int mod);
int mod_inverse(int x, int p);

// Square table of small integers; used both for Latin squares over Z_p
// (values 0..p-1) and idempotent Latin squares over [k] (values 1..k).
struct SquareTable {
  int order = 0;
  std::vector<int> cells;  // row-major

  SquareTable() = default;
  SquareTable(int order_, std::vector<int> cells_);
  int at(int row, int col) const { return cells[row * order + col]; }
  void set(int row, int col, int v) { cells[row * order + col] = v; }
  friend bool operator==(const SquareTable&, const SquareTable&) = default;
};

bool is_latin(const SquareTable& t, int lo, int hi);  // values in [lo, hi]

// H[i,j] = j + (i-j)/r mod p. Diagonally cyclic Latin square over Z_p with
// H[i,i] = i; requires r to be a primitive root of p.
SquareTable build_hpr(int p, int r);

// H[i,j] == H[j,i] everywhere (true exactly when r = 2).
bool symmetry_check(const SquareTable& h);

// The total loop on {0,+-1..+-p} derived from H_{p,r}:
//   L[i,j]   = -(H[i-1,j-1]+1)
//   L[i,-j]  = L[-i,j] = H[i-1,j-1]+1          (i != j)
//   L[-i,-j] = -(H[i-1,j-1]+1)                 (i != j)
//   L[-i,-i] = i
// plus the identity and inverse cells.
PartialLoop build_lpr(int p, int r);

// Closed form of the partial sums of the natural polynomial on L_{p,r}:
//   sigma(nu_[l]) = (-1)^(l+1) * (((r^(1-l)-1)/(r-1) + l - 1 mod p) + 1)
// for 1 <= l < p, and 0 at l = p.
Element partial_sum_formula(int p, int r, int ell);

bool is_idempotent_latin(const SquareTable& t);  // values over [k], I[l,l] = l

// Idempotent Latin square of order k over [k]. Odd k uses the midpoint
// construction I[i,j] = (i+j)/2 mod k; even k >= 4 comes from a deterministic
// backtracking search with the diagonal prefilled. No such square exists for
// k = 2.
SquareTable idempotent_square(int k);

// The general construction on kp symbols, split into k consecutive blocks of
// size p. With x = e1*s(l1,i1), y = e2*s(l2,i2) for signs e1,e2 and block
// positions i1,i2 in [p]:
//   y == -x            -> 0
//   x == y, e1 == -1   -> s(l1,i1)
//   otherwise          -> e1*e2 * lift(I[l1,l2], L_{p,r}[i1,i2])
// where lift(l, +-m) = +-s(l,m). Requires k != 2 and I idempotent of order k.
PartialLoop build_general(int p, int r, int k, const SquareTable& idem);

// Left comb of the natural polynomials of each block; blocks must be
// symbol-disjoint.
SumPolynomial composite_block_poly(const std::vector<std::vector<int>>& blocks);

}  // namespace heffter
