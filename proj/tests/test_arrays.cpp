#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "heffter/arrays.hpp"
#include "heffter/fixtures.hpp"

using namespace heffter;

TEST_CASE("entries lists exactly the filled cells") {
  const auto a = fixtures::example_2_1_array();
  const auto ent = entries(a);
  CHECK(ent.size() == 9);
  CHECK(std::find(ent.begin(), ent.end(), ArrayEntry{0, 0, 1}) != ent.end());
  CHECK(std::find(ent.begin(), ent.end(), ArrayEntry{2, 2, 7}) != ent.end());

  const auto b = fixtures::example_2_2_array();
  CHECK(b.weight() == 12);
  CHECK(entries(b).size() == 12);

  CHECK(entries(PartiallyFilledArray(3)).empty());
}

TEST_CASE("symb reads the covered filled cells") {
  const auto a = fixtures::example_2_1_array();
  const auto rows_a = partition(a, PartitionKind::Row);
  CHECK(symb(a, rows_a[0]) == std::vector<int>{1, 2, 3});

  const auto b = fixtures::example_2_2_array();
  const auto rows_b = partition(b, PartitionKind::Row);
  CHECK(rows_b[0].cells.size() == 4);
  CHECK(block_weight(b, rows_b[0]) == 3);
  CHECK(symb(b, rows_b[0]) == std::vector<int>{1, 2, 3});

  // Diagonal class of B contains an all-empty block: cells (0,3),(1,0),(2,1),(3,2).
  const auto diag_b = partition(b, PartitionKind::Diag);
  CHECK(diag_b[3].cells ==
        std::vector<Cell>{{0, 3}, {1, 0}, {2, 1}, {3, 2}});
  CHECK(symb(b, diag_b[3]).empty());
  CHECK(block_weight(b, diag_b[3]) == 0);
}

TEST_CASE("the four partitions") {
  const auto a = fixtures::example_2_1_array();

  const auto diag = partition(a, PartitionKind::Diag);
  CHECK(symb(a, diag[0]) == std::vector<int>{1, 4, 7});
  CHECK(symb(a, diag[1]) == std::vector<int>{2, 5, 8});

  const auto adiag = partition(a, PartitionKind::Adiag);
  CHECK(adiag[0].cells == std::vector<Cell>{{0, 2}, {1, 1}, {2, 0}});
  CHECK(symb(a, adiag[0]) == std::vector<int>{3, 4, 8});

  const auto rows = partition(a, PartitionKind::Row);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) CHECK(rows[j].cells[i] == Cell{j, i});
}

TEST_CASE("every partition kind splits the grid into m blocks of m cells") {
  for (int m = 3; m <= 7; ++m) {
    const PartiallyFilledArray a(m);
    for (PartitionKind kind : {PartitionKind::Row, PartitionKind::Col,
                               PartitionKind::Diag, PartitionKind::Adiag}) {
      const auto cls = partition(a, kind);
      REQUIRE(static_cast<int>(cls.size()) == m);
      std::set<Cell> seen;
      for (const CellBlock& b : cls) {
        CHECK(static_cast<int>(b.cells.size()) == m);
        for (const Cell& c : b.cells) CHECK(seen.insert(c).second);
      }
      CHECK(static_cast<int>(seen.size()) == m * m);
    }
  }
}

TEST_CASE("validate_affine on the worked designs") {
  const auto a = fixtures::example_2_1_array();
  const auto report_a = validate_affine(a, fixtures::example_2_1_design());
  CHECK(report_a.is_affine_1_design);
  CHECK(report_a.in_aff_lambda);
  CHECK(report_a.lambda == 4);
  CHECK(report_a.mu == 1);

  const auto b = fixtures::example_2_2_array();
  const auto report_all = validate_affine(b, fixtures::example_2_2_design_all_four());
  CHECK_FALSE(report_all.is_affine_1_design);
  // A diag/adiag pair meets in two cells.
  bool found_two = false;
  for (const auto& v : report_all.intersection_violations)
    if (v.count == 2 && ((v.class_a == 2 && v.class_b == 3))) found_two = true;
  CHECK(found_two);

  const auto report_b = validate_affine(b, fixtures::example_2_2_design());
  CHECK(report_b.in_aff_lambda);
  CHECK(report_b.lambda == 3);
  CHECK(report_b.mu == 1);
}

TEST_CASE("validate_affine rejects out-of-range cells") {
  const auto a = fixtures::example_2_1_array();
  AffineDesign d = fixtures::example_2_1_design();
  d.classes[0][0].cells[0] = {5, 0};
  CHECK_THROWS_AS(validate_affine(a, d), InputError);
}

TEST_CASE("validate_affine is invariant under class and block order") {
  const auto b = fixtures::example_2_2_array();
  AffineDesign d = fixtures::example_2_2_design();
  std::mt19937 rng(7);
  std::shuffle(d.classes.begin(), d.classes.end(), rng);
  for (auto& cls : d.classes) std::shuffle(cls.begin(), cls.end(), rng);
  const auto report = validate_affine(b, d);
  CHECK(report.in_aff_lambda);
  CHECK(report.mu == 1);
}

TEST_CASE("row/col/diag designs have mu = 1; diag/adiag only for odd m") {
  for (int m = 3; m <= 7; ++m) {
    PartiallyFilledArray a(m);
    const auto rcd = design_from_partitions(
        a, {PartitionKind::Row, PartitionKind::Col, PartitionKind::Diag});
    const auto report = validate_affine(a, rcd);
    CHECK(report.is_affine_1_design);
    CHECK(report.mu == 1);

    const auto da = design_from_partitions(a, {PartitionKind::Diag, PartitionKind::Adiag});
    const auto report_da = validate_affine(a, da);
    CHECK(report_da.is_affine_1_design == (m % 2 == 1));
    if (m % 2 == 1) CHECK(report_da.mu == 1);
  }

  // The even failure mode is the Example 2.2 one: intersections of size 2 or 0.
  PartiallyFilledArray a4(4);
  const auto report4 = validate_affine(
      a4, design_from_partitions(a4, {PartitionKind::Diag, PartitionKind::Adiag}));
  std::set<int> counts{*report4.mu};
  for (const auto& v : report4.intersection_violations) counts.insert(v.count);
  CHECK(counts == std::set<int>{0, 2});
}

TEST_CASE("array_isomorphic finds witnesses and honours the definition") {
  // Symbols must be residues below m; use a 3x3 array with symbols {1, 2}.
  PartiallyFilledArray a(3);
  a.set(0, 0, 1);
  a.set(1, 2, 2);

  const auto self = array_isomorphic(a, a);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<int>{0, 1, 2});

  // Swap rows 0 and 1 and relabel the symbols by the same transposition.
  const std::vector<int> pi = {1, 0, 2};
  PartiallyFilledArray b(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a.filled(i, j)) b.set(pi[i], pi[j], pi[a.at(i, j)]);

  const auto witness = array_isomorphic(a, b);
  REQUIRE(witness.has_value());
  const auto& w = *witness;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a.filled(i, j)) CHECK(b.at(w[i], w[j]) == w[a.at(i, j)]);

  PartiallyFilledArray c(3);
  c.set(0, 0, 1);
  CHECK_FALSE(array_isomorphic(a, c).has_value());  // weight mismatch

  CHECK_THROWS_AS(array_isomorphic(PartiallyFilledArray(9), PartiallyFilledArray(9)),
                  SearchTooLarge);
}
