#pragma once

#include <random>
#include <vector>

#include "heffter/loops.hpp"

// Shared generators for randomized tests. Deterministic given the caller's RNG.
namespace heffter::testutil {

// Valid random partial loop: axiom skeleton plus up to `attempts` random
// non-axiom cells that keep the partial Latin property.
inline PartialLoop random_partial_loop(int n, int attempts, std::mt19937& rng) {
  PartialLoop loop = PartialLoop::with_axioms(n);
  std::uniform_int_distribution<int> idx(1, 2 * n);
  for (int t = 0; t < attempts; ++t) {
    const Element x = element_at(idx(rng), n);
    const Element y = element_at(idx(rng), n);
    if (y == x.negated() || loop.at(x, y).defined()) continue;
    const Element v = element_at(idx(rng), n);
    bool clash = false;
    for (Element e : canonical_elements(n)) {
      if (loop.at(x, e) == v || loop.at(e, y) == v) {
        clash = true;
        break;
      }
    }
    if (!clash) loop.set(x, y, v);
  }
  return loop;
}

// Random sign-respecting permutation; symbols listed in `positive_on` are
// guaranteed positive images.
inline SignedPermutation random_signed_perm(int n, std::mt19937& rng,
                                            const std::vector<int>& positive_on = {}) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<bool> keep_positive(n + 1, false);
  for (int s : positive_on) keep_positive[s] = true;
  for (int i = 0; i < n; ++i)
    if (!keep_positive[i + 1] && rng() % 2) img[i] = -img[i];
  return SignedPermutation(img);
}

}  // namespace heffter::testutil
