#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace heffter {

// Malformed input: bad parameters, unparsable files, broken preconditions on
// externally supplied data.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or search would exceed its configured cap.
class SearchTooLarge : public std::runtime_error {
 public:
  explicit SearchTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// One element of the signed closure S~ = {0} u {s, -s : s in S} of an ordered
// symbol set S = {1..n}, or the absorbing Undefined sentinel (printed ".").
// Stored as a plain signed integer with a reserved sentinel value, so that
// Undefined can absorb through table lookups without branching at call sites.
class Element {
 public:
  constexpr Element() : v_(kUndef) {}

  static constexpr Element undefined() { return Element(); }
  static constexpr Element zero() { return Element(0); }
  static Element pos(int base);
  static Element neg(int base);
  static constexpr Element of(int value) { return Element(value); }

  constexpr bool defined() const { return v_ != kUndef; }
  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool positive() const { return defined() && v_ > 0; }
  constexpr bool negative() const { return defined() && v_ < 0; }

  // Signed integer value; must be defined.
  int value() const;
  // |value| of a nonzero element.
  int base() const;

  constexpr Element negated() const { return defined() ? Element(-v_) : *this; }

  friend constexpr bool operator==(Element a, Element b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Element a, Element b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Element a, Element b) { return a.v_ < b.v_; }

  std::string str() const;  // "0", "3", "-7" or "."

 private:
  explicit constexpr Element(int v) : v_(v) {}
  static constexpr int kUndef = std::numeric_limits<int>::min();
  int v_;
};

// Involution realizing the +/- pairing; fixes 0 and Undefined.
Element negate(Element e);

// Canonical table order of S~: 0, 1, ..., n, -n, ..., -1.
int canonical_index(Element e, int n);
Element element_at(int index, int n);
std::vector<Element> canonical_elements(int n);

// The ordered symbol universe S. Symbols are addressed by 1-based index;
// names are only used for I/O. The identifier "0" is reserved.
class SymbolSet {
 public:
  explicit SymbolSet(std::vector<std::string> names);
  static SymbolSet numeric(int n);  // names "1".."n"

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int index) const;      // index in [1..n]
  int index_of(const std::string& name) const;   // 0 when absent

 private:
  std::vector<std::string> names_;
};

// Sign-respecting permutation of S~: determined by the images of the positive
// elements, with pi(0) = 0 and pi(-x) = -pi(x) for all x.
class SignedPermutation {
 public:
  // images[i-1] is the signed value of pi(+i); bases must be a permutation
  // of 1..n.
  explicit SignedPermutation(std::vector<int> images_of_positives);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(img_.size()); }
  Element apply(Element e) const;  // Undefined maps to Undefined
  SignedPermutation inverse() const;
  bool is_identity() const;
  const std::vector<int>& images() const { return img_; }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.img_ == b.img_;
  }

 private:
  std::vector<int> img_;
};

// (outer o inner)(x) = outer(inner(x)).
SignedPermutation compose(const SignedPermutation& outer, const SignedPermutation& inner);

Element apply_signed_perm(const SignedPermutation& pi, Element e);

// pi(i) = (a(i-1) + b mod p) + 1 on [p], extended sign-respecting.
// Requires p an odd prime, 0 < a < p, 0 <= b < p.
SignedPermutation affine_perm(int p, int a, int b);

// Permutation of [kp] acting blockwise: the l-th consecutive block of size p
// is permuted by the affine map (a_l, b_l). alpha = (a_1, b_1, ..., a_k, b_k).
SignedPermutation block_affine_perm(int p, int k, const std::vector<int>& alpha);

}  // namespace heffter
