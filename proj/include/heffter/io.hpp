#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "heffter/arrays.hpp"
#include "heffter/constructions.hpp"
#include "heffter/heffter.hpp"
#include "heffter/loops.hpp"
#include "heffter/sumpoly.hpp"

namespace heffter {

// Array JSON: {"m": int, "cells": m x m matrix of symbol index or null}.
nlohmann::json array_to_json(const PartiallyFilledArray& a);
PartiallyFilledArray array_from_json(const nlohmann::json& j);

// Design JSON: {"classes": [[[[r,c],...],...],...], "names": [...]}. A file
// holding only names ("row","col","diag","adiag") derives the partitions
// from the array order m.
nlohmann::json design_to_json(const AffineDesign& d);
AffineDesign design_from_json(const nlohmann::json& j, int m);

// Loop JSON: {"n": int, "order": "0,1..n,-n..-1",
//             "table": (2n+1)^2 matrix of signed int or null}.
nlohmann::json loop_to_json(const PartialLoop& loop);
PartialLoop loop_from_json(const nlohmann::json& j);

// Paper-style text table: the first line is the canonical header (doubling as
// the identity row); each following line is "label v v ..." over the columns
// 1..n,-n..-1 with "." for undefined. Lossless for tables satisfying the
// identity axiom.
std::string loop_to_text(const PartialLoop& loop);
PartialLoop loop_from_text(std::string_view text);

std::string array_to_text(const PartiallyFilledArray& a);  // "." for empty
std::string array_to_csv(const PartiallyFilledArray& a);

nlohmann::json square_to_json(const SquareTable& t);
SquareTable square_from_json(const nlohmann::json& j);
std::string square_to_text(const SquareTable& t);

// Polynomial sets: JSON array of canonical strings.
nlohmann::json polys_to_json(const std::vector<SumPolynomial>& polys);
std::vector<SumPolynomial> polys_from_json(const nlohmann::json& j);

// Classical grid JSON: {"rows": int, "cols": int,
//                       "cells": matrix of signed int or null}
// ("m" is accepted for square grids).
nlohmann::json classical_to_json(const ClassicalGrid& g);
ClassicalGrid classical_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace heffter
