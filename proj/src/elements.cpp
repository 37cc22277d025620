#include "heffter/elements.hpp"

#include <algorithm>
#include <cassert>

namespace heffter {

Element Element::pos(int base) {
  if (base <= 0) throw InputError("Element::pos: base must be positive");
  return Element(base);
}

Element Element::neg(int base) {
  if (base <= 0) throw InputError("Element::neg: base must be positive");
  return Element(-base);
}

int Element::value() const {
  if (!defined()) throw InputError("Element::value on Undefined");
  return v_;
}

int Element::base() const {
  if (!defined() || v_ == 0) throw InputError("Element::base needs a nonzero element");
  return v_ < 0 ? -v_ : v_;
}

std::string Element::str() const {
  return defined() ? std::to_string(v_) : std::string(".");
}

Element negate(Element e) { return e.negated(); }

int canonical_index(Element e, int n) {
  const int v = e.value();
  if (v < -n || v > n) throw InputError("element out of range for n=" + std::to_string(n));
  return v >= 0 ? v : 2 * n + 1 + v;
}

Element element_at(int index, int n) {
  if (index < 0 || index > 2 * n) throw InputError("canonical index out of range");
  return index <= n ? Element::of(index) : Element::of(index - (2 * n + 1));
}

std::vector<Element> canonical_elements(int n) {
  std::vector<Element> out;
  out.reserve(2 * n + 1);
  for (int i = 0; i <= 2 * n; ++i) out.push_back(element_at(i, n));
  return out;
}

SymbolSet::SymbolSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("SymbolSet: need at least one symbol");
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == "0") throw InputError("SymbolSet: the identifier \"0\" is reserved");
    for (size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw InputError("SymbolSet: duplicate symbol \"" + names_[i] + "\"");
  }
}

SymbolSet SymbolSet::numeric(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return SymbolSet(std::move(names));
}

const std::string& SymbolSet::name(int index) const {
  if (index < 1 || index > size()) throw InputError("SymbolSet: index out of range");
  return names_[index - 1];
}

int SymbolSet::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i + 1;
  return 0;
}

SignedPermutation::SignedPermutation(std::vector<int> images_of_positives)
    : img_(std::move(images_of_positives)) {
  const int n = static_cast<int>(img_.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : img_) {
    const int b = v < 0 ? -v : v;
    if (b < 1 || b > n) throw InputError("SignedPermutation: image base out of range");
    if (seen[b]) throw InputError("SignedPermutation: not a bijection");
    seen[b] = true;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return SignedPermutation(std::move(img));
}

Element SignedPermutation::apply(Element e) const {
  if (!e.defined()) return e;
  const int v = e.value();
  if (v == 0) return Element::zero();
  const int b = v < 0 ? -v : v;
  if (b > n()) throw InputError("SignedPermutation: element out of domain");
  const int image = img_[b - 1];
  return Element::of(v < 0 ? -image : image);
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < n(); ++i) {
    const int v = img_[i];
    const int b = v < 0 ? -v : v;
    inv[b - 1] = v < 0 ? -(i + 1) : (i + 1);
  }
  return SignedPermutation(std::move(inv));
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

SignedPermutation compose(const SignedPermutation& outer, const SignedPermutation& inner) {
  if (outer.n() != inner.n()) throw InputError("compose: mismatched domains");
  std::vector<int> img(inner.n());
  for (int i = 1; i <= inner.n(); ++i)
    img[i - 1] = outer.apply(inner.apply(Element::pos(i))).value();
  return SignedPermutation(std::move(img));
}

Element apply_signed_perm(const SignedPermutation& pi, Element e) { return pi.apply(e); }

SignedPermutation affine_perm(int p, int a, int b) {
  if (p < 2) throw InputError("affine_perm: p must be at least 2");
  a %= p;
  if (a < 0) a += p;
  b %= p;
  if (b < 0) b += p;
  if (a == 0) throw InputError("affine_perm: a = 0 is not a bijection");
  std::vector<int> img(p);
  for (int i = 1; i <= p; ++i)
    img[i - 1] = (static_cast<long long>(a) * (i - 1) + b) % p + 1;
  return SignedPermutation(std::move(img));
}

SignedPermutation block_affine_perm(int p, int k, const std::vector<int>& alpha) {
  if (static_cast<int>(alpha.size()) != 2 * k)
    throw InputError("block_affine_perm: alpha must have 2k components");
  std::vector<int> img(k * p);
  for (int l = 0; l < k; ++l) {
    const SignedPermutation comp = affine_perm(p, alpha[2 * l], alpha[2 * l + 1]);
    for (int i = 1; i <= p; ++i)
      img[l * p + i - 1] = l * p + comp.apply(Element::pos(i)).value();
  }
  return SignedPermutation(std::move(img));
}

}  // namespace heffter
