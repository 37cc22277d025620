#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heffter/loops.hpp"

namespace heffter {

// A sum polynomial: a full binary tree whose leaves are distinct positive
// symbols. Equality is structural (shape plus leaf labels); the canonical
// text form is fully parenthesized infix, e.g. "((1+2)+3)".
class SumPolynomial {
 public:
  static SumPolynomial leaf(int symbol);
  static SumPolynomial sum(const SumPolynomial& lhs, const SumPolynomial& rhs);

  int leaf_count() const;
  std::vector<int> leaf_sequence() const;  // left-to-right
  std::vector<int> support() const;        // sorted ascending
  std::string str() const;

  bool operator==(const SumPolynomial& other) const { return text_ == other.text_; }
  bool operator<(const SumPolynomial& other) const { return text_ < other.text_; }

  // Structure access for evaluation: node 0 is the root; a leaf node has
  // symbol > 0, an inner node has left/right child indices.
  struct Node {
    int left = -1, right = -1, symbol = 0;
    bool is_leaf() const { return symbol > 0; }
  };
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  SumPolynomial() = default;
  std::vector<Node> nodes_;  // node 0 is the root
  std::string text_;
  void refresh_text();
};

// Left comb (((t1+t2)+t3)+...)+tm over the given order.
SumPolynomial natural(const std::vector<int>& symbols);

// "(" expr "+" expr ")" | positive integer; whitespace insignificant.
SumPolynomial parse_poly(std::string_view text);

inline constexpr int kEnumerateCap = 6;

// Every T-sum polynomial: all leaf orders (lexicographic) x all well-balanced
// parenthesizations, in a fixed deterministic order. The count is
// |T|! * Catalan(|T|-1).
std::vector<SumPolynomial> enumerate_all(const std::vector<int>& symbols,
                                         int cap = kEnumerateCap);

// Bottom-up fold of the tree through the loop's operation; Undefined
// propagates.
Element evaluate(const SumPolynomial& poly, const PartialLoop& loop);

// Relabels the leaves by rho keeping the tree shape. Every support symbol
// must map to a positive element.
SumPolynomial permute_poly(const SumPolynomial& poly, const SignedPermutation& rho);

struct CompatibilityReport {
  bool compatible = false;
  std::vector<int> undefined_polys;  // indices into the input set
  struct Mismatch {
    int poly_a, poly_b;
    Element value_a, value_b;
  };
  std::vector<Mismatch> mismatches;  // equal support, different value
};

// L is P-compatible when no member evaluates to Undefined and members with
// equal support evaluate equal.
CompatibilityReport is_compatible(const PartialLoop& loop,
                                  const std::vector<SumPolynomial>& polys);

// Automorphisms of the loop whose action keeps every support symbol of P
// positive (so that P^pi is again a set of sum polynomials).
std::vector<SignedPermutation> aut_p(const PartialLoop& loop,
                                     const std::vector<SumPolynomial>& polys,
                                     int cap = 9);

}  // namespace heffter
