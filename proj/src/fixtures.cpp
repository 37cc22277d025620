#include "heffter/fixtures.hpp"

#include <filesystem>
#include <map>

#include "heffter/io.hpp"

namespace heffter::fixtures {

namespace {

// Loop tables are kept in the text-table layout (header row, then one row per
// element over the columns 1..n,-n..-1, "." for undefined).

constexpr const char* kExample31LoopText = R"(0 1 2 3 4 5 6 7 8 9 -9 -8 -7 -6 -5 -4 -3 -2 -1
1 . -3 2 3 . . . . . . . . . . . . . 0
2 -1 1 4 . . . . . . . . . . . . . 0 .
3 -2 -4 . . . . . . . . . . . . . 0 . 1
4 . 3 . . . . . . . . . . . . 0 . . .
5 . . . . . . . . . . . . . 0 . . . .
6 . . . . . . . . . . . . 0 . . . . .
7 . . . . . . . . . . . 0 . . . . . .
8 . . . . . . . . . . 0 . . . . . . .
9 . . . . . . . . . 0 . . . . . . . .
-9 . . . . . . . . 0 . . . . . . . . .
-8 . . . . . . . 0 . . . . . . . . . .
-7 . . . . . . 0 . . . . . . . . . . .
-6 . . . . . 0 . . . . . . . . . . . .
-5 . . . . 0 . . . . . . . . . . . . .
-4 2 . . 0 . . . . . . . . . . . . . .
-3 . . 0 . . . . . . . . . . . . . . .
-2 . 0 . . . . . . . . . . . . . . . .
-1 0 . 1 . . . . . . . . . . . . . . .
)";

constexpr const char* kExample42LoopText = R"(0 1 2 3 4 5 6 7 -7 -6 -5 -4 -3 -2 -1
1 -1 -4 -7 -3 -6 -2 -5 5 2 6 3 7 4 0
2 -6 -2 -5 -1 -4 -7 -3 3 7 4 1 5 0 6
3 -4 -7 -3 -6 -2 -5 -1 1 5 2 6 0 7 4
4 -2 -5 -1 -4 -7 -3 -6 6 3 7 0 1 5 2
5 -7 -3 -6 -2 -5 -1 -4 4 1 0 2 6 3 7
6 -5 -1 -4 -7 -3 -6 -2 2 0 3 7 4 1 5
7 -3 -6 -2 -5 -1 -4 -7 0 4 1 5 2 6 3
-7 3 6 2 5 1 4 0 7 -4 -1 -5 -2 -6 -3
-6 5 1 4 7 3 0 2 -2 6 -3 -7 -4 -1 -5
-5 7 3 6 2 0 1 4 -4 -1 5 -2 -6 -3 -7
-4 2 5 1 0 7 3 6 -6 -3 -7 4 -1 -5 -2
-3 4 7 0 6 2 5 1 -1 -5 -2 -6 3 -7 -4
-2 6 0 5 1 4 7 3 -3 -7 -4 -1 -5 2 -6
-1 0 4 7 3 6 2 5 -5 -2 -6 -3 -7 -4 1
)";

constexpr const char* kExample44LoopText = R"(0 1 2 3 4 5 6 7 8 9 -9 -8 -7 -6 -5 -4 -3 -2 -1
1 -1 -3 -2 -7 -9 -8 -4 -6 -5 5 6 4 8 9 7 2 3 0
2 -3 -2 -1 -9 -8 -7 -6 -5 -4 4 5 6 7 8 9 1 0 3
3 -2 -1 -3 -8 -7 -9 -5 -4 -6 6 4 5 9 7 8 0 1 2
4 -7 -9 -8 -4 -6 -5 -1 -3 -2 2 3 1 5 6 0 8 9 7
5 -9 -8 -7 -6 -5 -4 -3 -2 -1 1 2 3 4 0 6 7 8 9
6 -8 -7 -9 -5 -4 -6 -2 -1 -3 3 1 2 0 4 5 9 7 8
7 -4 -6 -5 -1 -3 -2 -7 -9 -8 8 9 0 2 3 1 5 6 4
8 -6 -5 -4 -3 -2 -1 -9 -8 -7 7 0 9 1 2 3 4 5 6
9 -5 -4 -6 -2 -1 -3 -8 -7 -9 0 7 8 3 1 2 6 4 5
-9 5 4 6 2 1 3 8 7 0 9 -7 -8 -3 -1 -2 -6 -4 -5
-8 6 5 4 3 2 1 9 0 7 -7 8 -9 -1 -2 -3 -4 -5 -6
-7 4 6 5 1 3 2 0 9 8 -8 -9 7 -2 -3 -1 -5 -6 -4
-6 8 7 9 5 4 0 2 1 3 -3 -1 -2 6 -4 -5 -9 -7 -8
-5 9 8 7 6 0 4 3 2 1 -1 -2 -3 -4 5 -6 -7 -8 -9
-4 7 9 8 0 6 5 1 3 2 -2 -3 -1 -5 -6 4 -8 -9 -7
-3 2 1 0 8 7 9 5 4 6 -6 -4 -5 -9 -7 -8 3 -1 -2
-2 3 0 1 9 8 7 6 5 4 -4 -5 -6 -7 -8 -9 -1 2 -3
-1 0 3 2 7 9 8 4 6 5 -5 -6 -4 -8 -9 -7 -2 -3 1
)";

// The forced partial group: the fully determined positive quadrant plus the
// axiom cells; every other cell is open.
constexpr const char* kExample61PartialText = R"(0 1 2 3 4 5 6 7 8 9 -9 -8 -7 -6 -5 -4 -3 -2 -1
1 . -3 -2 -7 -9 -8 -4 -6 -5 . . . . . . . . 0
2 -3 . -1 -9 -8 -7 -6 -5 -4 . . . . . . . 0 .
3 -2 -1 . -8 -7 -9 -5 -4 -6 . . . . . . 0 . .
4 -7 -9 -8 . -6 -5 -1 -3 -2 . . . . . 0 . . .
5 -9 -8 -7 -6 . -4 -3 -2 -1 . . . . 0 . . . .
6 -8 -7 -9 -5 -4 . -2 -1 -3 . . . 0 . . . . .
7 -4 -6 -5 -1 -3 -2 . -9 -8 . . 0 . . . . . .
8 -6 -5 -4 -3 -2 -1 -9 . -7 . 0 . . . . . . .
9 -5 -4 -6 -2 -1 -3 -8 -7 . 0 . . . . . . . .
-9 . . . . . . . . 0 . . . . . . . . .
-8 . . . . . . . 0 . . . . . . . . . .
-7 . . . . . . 0 . . . . . . . . . . .
-6 . . . . . 0 . . . . . . . . . . . .
-5 . . . . 0 . . . . . . . . . . . . .
-4 . . . 0 . . . . . . . . . . . . . .
-3 . . 0 . . . . . . . . . . . . . . .
-2 . 0 . . . . . . . . . . . . . . . .
-1 0 . . . . . . . . . . . . . . . . .
)";

PartialLoop parse_fixture_loop(const char* text) { return loop_from_text(text); }

}  // namespace

PartiallyFilledArray example_2_1_array() {
  return PartiallyFilledArray(3, {1, 2, 3, 6, 4, 5, 8, 9, 7});
}

AffineDesign example_2_1_design() {
  return design_from_partitions(example_2_1_array(),
                                {PartitionKind::Row, PartitionKind::Col,
                                 PartitionKind::Diag, PartitionKind::Adiag});
}

PartiallyFilledArray example_2_2_array() {
  constexpr int E = PartiallyFilledArray::kEmpty;
  return PartiallyFilledArray(4, {1, 2, 3, E, E, 4, 5, 6, 9, E, 7, 8, 11, 12, E, 10});
}

AffineDesign example_2_2_design() {
  return design_from_partitions(
      example_2_2_array(), {PartitionKind::Row, PartitionKind::Col, PartitionKind::Diag});
}

AffineDesign example_2_2_design_all_four() {
  return design_from_partitions(example_2_2_array(),
                                {PartitionKind::Row, PartitionKind::Col,
                                 PartitionKind::Diag, PartitionKind::Adiag});
}

PartialLoop example_3_1_loop() { return parse_fixture_loop(kExample31LoopText); }

SquareTable example_4_1_hpr() {
  return SquareTable(7, {0, 3, 6, 2, 5, 1, 4,   //
                         5, 1, 4, 0, 3, 6, 2,   //
                         3, 6, 2, 5, 1, 4, 0,   //
                         1, 4, 0, 3, 6, 2, 5,   //
                         6, 2, 5, 1, 4, 0, 3,   //
                         4, 0, 3, 6, 2, 5, 1,   //
                         2, 5, 1, 4, 0, 3, 6});
}

PartialLoop example_4_2_lpr() { return parse_fixture_loop(kExample42LoopText); }

SquareTable example_4_4_idempotent() {
  return SquareTable(3, {1, 3, 2, 3, 2, 1, 2, 1, 3});
}

PartialLoop example_4_4_loop() { return parse_fixture_loop(kExample44LoopText); }

PartiallyFilledArray example_5_1_array() {
  return PartiallyFilledArray(3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
}

AffineDesign example_5_1_design() {
  return design_from_partitions(example_5_1_array(),
                                {PartitionKind::Row, PartitionKind::Col,
                                 PartitionKind::Diag, PartitionKind::Adiag});
}

PartialLoop example_6_1_partial() { return parse_fixture_loop(kExample61PartialText); }

// The printed completion coincides with the example_4_4 table.
PartialLoop example_6_1_completion() { return example_4_4_loop(); }

std::vector<std::string> fixture_names() {
  return {"example-2-1", "example-2-2", "example-3-1", "example-4-1",
          "example-4-2", "example-4-4", "example-5-1", "example-6-1"};
}

std::vector<std::string> write_fixture(const std::string& name, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto path = [&](const std::string& file) { return (fs::path(dir) / file).string(); };
  auto dump = [](const nlohmann::json& j) { return j.dump(2) + "\n"; };

  std::vector<std::string> written;
  auto emit = [&](const std::string& file, const std::string& content) {
    write_text_file(path(file), content);
    written.push_back(path(file));
  };

  if (name == "example-2-1") {
    emit("example-2-1.array.json", dump(array_to_json(example_2_1_array())));
    emit("example-2-1.design.json", dump(design_to_json(example_2_1_design())));
  } else if (name == "example-2-2") {
    emit("example-2-2.array.json", dump(array_to_json(example_2_2_array())));
    emit("example-2-2.design.json", dump(design_to_json(example_2_2_design())));
    emit("example-2-2.design-all-four.json",
         dump(design_to_json(example_2_2_design_all_four())));
  } else if (name == "example-3-1") {
    emit("example-3-1.loop.json", dump(loop_to_json(example_3_1_loop())));
  } else if (name == "example-4-1") {
    emit("example-4-1.hpr.json", dump(square_to_json(example_4_1_hpr())));
  } else if (name == "example-4-2") {
    emit("example-4-2.loop.json", dump(loop_to_json(example_4_2_lpr())));
  } else if (name == "example-4-4") {
    emit("example-4-4.idempotent.json", dump(square_to_json(example_4_4_idempotent())));
    emit("example-4-4.loop.json", dump(loop_to_json(example_4_4_loop())));
  } else if (name == "example-5-1") {
    emit("example-5-1.array.json", dump(array_to_json(example_5_1_array())));
    emit("example-5-1.design.json", dump(design_to_json(example_5_1_design())));
  } else if (name == "example-6-1") {
    emit("example-6-1.partial.loop.json", dump(loop_to_json(example_6_1_partial())));
    emit("example-6-1.completion.loop.json", dump(loop_to_json(example_6_1_completion())));
  } else {
    std::string known;
    for (const std::string& f : fixture_names()) known += " " + f;
    throw InputError("unknown fixture \"" + name + "\"; available:" + known);
  }
  return written;
}

}  // namespace heffter::fixtures
