#pragma once

#include <string>
#include <vector>

#include "heffter/arrays.hpp"
#include "heffter/constructions.hpp"
#include "heffter/heffter.hpp"
#include "heffter/loops.hpp"

// Bundled instances transcribed from the worked examples of the source
// material; they double as golden test vectors.
namespace heffter::fixtures {

// 3x3 array with rows 1 2 3 / 6 4 5 / 8 9 7 and its four-partition design.
PartiallyFilledArray example_2_1_array();
AffineDesign example_2_1_design();

// 4x4 array with empty cells; the full four-partition set fails the affine
// intersection condition, dropping the anti-diagonal class repairs it.
PartiallyFilledArray example_2_2_array();
AffineDesign example_2_2_design();             // rows, cols, diag
AffineDesign example_2_2_design_all_four();    // rows, cols, diag, adiag

// Sparse partial loop over {0,+-1..+-9} used for the twelve [3]-sum
// polynomial evaluations.
PartialLoop example_3_1_loop();

SquareTable example_4_1_hpr();      // H_{7,3}
PartialLoop example_4_2_lpr();      // L_{7,3}, 15x15
SquareTable example_4_4_idempotent();
PartialLoop example_4_4_loop();     // the general construction on 9 symbols, 19x19

// 3x3 array with rows 1 2 3 / 4 5 6 / 7 8 9 and its four partitions.
PartiallyFilledArray example_5_1_array();
AffineDesign example_5_1_design();

// The forced partial group on {0,+-1..+-9} and its printed completion (the
// completion coincides with the example_4_4 table).
PartialLoop example_6_1_partial();
PartialLoop example_6_1_completion();

std::vector<std::string> fixture_names();

// Writes the files of the named fixture into dir; returns the paths written.
std::vector<std::string> write_fixture(const std::string& name, const std::string& dir);

}  // namespace heffter::fixtures
