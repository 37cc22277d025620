#include <doctest.h>

#include <algorithm>
#include <random>

#include "heffter/elements.hpp"

using namespace heffter;

TEST_CASE("negate is the signed-pair involution") {
  CHECK(negate(Element::pos(3)) == Element::neg(3));
  CHECK(negate(Element::zero()) == Element::zero());
  CHECK(negate(Element::neg(7)) == Element::pos(7));
  CHECK(negate(Element::undefined()) == Element::undefined());
  for (int v = -9; v <= 9; ++v) CHECK(negate(negate(Element::of(v))) == Element::of(v));
}

TEST_CASE("canonical order is 0, 1..n, -n..-1") {
  const int n = 4;
  const auto elems = canonical_elements(n);
  REQUIRE(elems.size() == 9);
  CHECK(elems[0] == Element::zero());
  CHECK(elems[1] == Element::pos(1));
  CHECK(elems[4] == Element::pos(4));
  CHECK(elems[5] == Element::neg(4));
  CHECK(elems[8] == Element::neg(1));
  for (int i = 0; i <= 2 * n; ++i) CHECK(canonical_index(elems[i], n) == i);
}

TEST_CASE("symbol sets reject duplicates and the reserved 0") {
  CHECK_THROWS_AS(SymbolSet({"a", "a"}), InputError);
  CHECK_THROWS_AS(SymbolSet({"0"}), InputError);
  const SymbolSet s = SymbolSet::numeric(3);
  CHECK(s.size() == 3);
  CHECK(s.name(2) == "2");
  CHECK(s.index_of("3") == 3);
  CHECK(s.index_of("7") == 0);
}

TEST_CASE("apply_signed_perm basics") {
  const auto id = SignedPermutation::identity(7);
  CHECK(apply_signed_perm(id, Element::pos(5)) == Element::pos(5));
  CHECK(apply_signed_perm(id, Element::undefined()) == Element::undefined());

  SignedPermutation swap14({4, 2, 3, 1, 5, 6, 7});
  CHECK(swap14.apply(Element::neg(1)) == Element::neg(4));

  // The worked sum beginning at 6 corresponds to (a,b) = (2,5) under the
  // affine formula; (2,4) maps 1 to 5.
  CHECK(affine_perm(7, 2, 5).apply(Element::pos(1)) == Element::pos(6));
  CHECK(affine_perm(7, 2, 4).apply(Element::pos(1)) == Element::pos(5));
}

TEST_CASE("affine_perm matches the formula") {
  CHECK(affine_perm(7, 1, 3).apply(Element::pos(1)) == Element::pos(4));
  CHECK(affine_perm(7, 1, 0).is_identity());
  CHECK_THROWS_AS(affine_perm(7, 0, 3), InputError);

  const SignedPermutation pi = affine_perm(7, 2, 4);
  CHECK(pi.images() == std::vector<int>{5, 7, 2, 4, 6, 1, 3});
  CHECK(pi.apply(Element::pos(6)) == Element::pos(1));
}

TEST_CASE("sign-respecting law holds for random permutations") {
  std::mt19937 rng(20240817);
  const int n = 6;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::shuffle(img.begin(), img.end(), rng);
    for (int& v : img)
      if (rng() % 2) v = -v;
    const SignedPermutation pi{img};
    CHECK(pi.apply(Element::zero()) == Element::zero());
    for (int v = -n; v <= n; ++v) {
      const Element x = Element::of(v);
      CHECK(pi.apply(negate(x)) == negate(pi.apply(x)));
    }
    const SignedPermutation inv = pi.inverse();
    for (int v = -n; v <= n; ++v)
      CHECK(inv.apply(pi.apply(Element::of(v))) == Element::of(v));
  }
}

TEST_CASE("affine permutations are closed under composition") {
  const int p = 11;
  for (int a = 1; a < p; a += 3)
    for (int b = 0; b < p; b += 2)
      for (int c = 1; c < p; c += 4)
        for (int d = 0; d < p; d += 3) {
          const auto composite = compose(affine_perm(p, a, b), affine_perm(p, c, d));
          const auto direct = affine_perm(p, a * c % p, (a * d + b) % p);
          CHECK(composite == direct);
        }
}

TEST_CASE("block_affine_perm permutes each block by its own affine map") {
  const int p = 3, k = 3;
  CHECK(block_affine_perm(p, k, {1, 0, 1, 0, 1, 0}).is_identity());
  CHECK_THROWS_AS(block_affine_perm(p, k, {1, 0, 0, 1, 2, 2}), InputError);
  CHECK_THROWS_AS(block_affine_perm(p, k, {1, 0}), InputError);

  const SignedPermutation pi = block_affine_perm(p, k, {1, 0, 2, 1, 2, 2});
  for (int s = 1; s <= 3; ++s) CHECK(pi.apply(Element::pos(s)) == Element::pos(s));

  // The (a,b) = (2,2) component reverses a block of size 3: images of
  // i = 1,2,3 land at positions 3,2,1.
  const SignedPermutation rev = block_affine_perm(p, k, {1, 0, 2, 2, 2, 1});
  CHECK(rev.apply(Element::pos(4)) == Element::pos(6));
  CHECK(rev.apply(Element::pos(5)) == Element::pos(5));
  CHECK(rev.apply(Element::pos(6)) == Element::pos(4));

  for (int l = 0; l < k; ++l)
    for (int i = 1; i <= p; ++i) {
      const int image = pi.apply(Element::pos(l * p + i)).base();
      CHECK((image - 1) / p == l);
    }
}
