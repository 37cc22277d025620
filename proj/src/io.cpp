#include "heffter/io.hpp"

#include <fstream>
#include <sstream>

namespace heffter {

using nlohmann::json;

namespace {

constexpr const char* kOrderString = "0,1..n,-n..-1";

json element_to_json(Element e) {
  if (!e.defined()) return nullptr;
  return e.value();
}

Element element_from_json(const json& j) {
  if (j.is_null()) return Element::undefined();
  if (!j.is_number_integer()) throw InputError("expected signed integer or null");
  return Element::of(j.get<int>());
}

}  // namespace

json array_to_json(const PartiallyFilledArray& a) {
  json rows = json::array();
  for (int i = 0; i < a.m(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.m(); ++j) {
      if (a.filled(i, j))
        row.push_back(a.at(i, j));
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  return json{{"m", a.m()}, {"cells", std::move(rows)}};
}

PartiallyFilledArray array_from_json(const json& j) {
  if (!j.contains("m") || !j.contains("cells")) throw InputError("array JSON needs m and cells");
  const int m = j.at("m").get<int>();
  PartiallyFilledArray a(m);
  const json& rows = j.at("cells");
  if (!rows.is_array() || static_cast<int>(rows.size()) != m)
    throw InputError("array JSON: cells must be an m x m matrix");
  for (int i = 0; i < m; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != m)
      throw InputError("array JSON: cells must be an m x m matrix");
    for (int c = 0; c < m; ++c)
      if (!row.at(c).is_null()) a.set(i, c, row.at(c).get<int>());
  }
  return a;
}

json design_to_json(const AffineDesign& d) {
  json classes = json::array();
  for (const ParallelClass& cls : d.classes) {
    json blocks = json::array();
    for (const CellBlock& b : cls) {
      json cells = json::array();
      for (const Cell& c : b.cells) cells.push_back(json::array({c.row, c.col}));
      blocks.push_back(std::move(cells));
    }
    classes.push_back(std::move(blocks));
  }
  json out{{"classes", std::move(classes)}};
  if (!d.names.empty()) out["names"] = d.names;
  return out;
}

AffineDesign design_from_json(const json& j, int m) {
  AffineDesign d;
  if (j.contains("names")) d.names = j.at("names").get<std::vector<std::string>>();

  if (!j.contains("classes")) {
    // Named partitions only: derive the cell classes from the grid order.
    if (d.names.empty()) throw InputError("design JSON needs classes or names");
    PartiallyFilledArray probe(m);
    for (const std::string& name : d.names)
      d.classes.push_back(partition(probe, partition_kind_from_name(name)));
    return d;
  }

  for (const json& cls : j.at("classes")) {
    ParallelClass parallel;
    for (const json& block : cls) {
      CellBlock b;
      for (const json& cell : block) {
        if (!cell.is_array() || cell.size() != 2)
          throw InputError("design JSON: cells are [row, col] pairs");
        b.cells.push_back({cell.at(0).get<int>(), cell.at(1).get<int>()});
      }
      parallel.push_back(std::move(b));
    }
    d.classes.push_back(std::move(parallel));
  }
  return d;
}

json loop_to_json(const PartialLoop& loop) {
  json rows = json::array();
  for (int r = 0; r < loop.side(); ++r) {
    json row = json::array();
    for (int c = 0; c < loop.side(); ++c) row.push_back(element_to_json(loop.at_index(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"n", loop.n()}, {"order", kOrderString}, {"table", std::move(rows)}};
}

PartialLoop loop_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("table")) throw InputError("loop JSON needs n and table");
  if (j.contains("order") && j.at("order").get<std::string>() != kOrderString)
    throw InputError("loop JSON: unsupported element order");
  const int n = j.at("n").get<int>();
  PartialLoop loop(n);
  const json& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != loop.side())
    throw InputError("loop JSON: table must be (2n+1) x (2n+1)");
  for (int r = 0; r < loop.side(); ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != loop.side())
      throw InputError("loop JSON: table must be (2n+1) x (2n+1)");
    for (int c = 0; c < loop.side(); ++c)
      loop.set_index(r, c, element_from_json(row.at(c)));
  }
  return loop;
}

std::string loop_to_text(const PartialLoop& loop) {
  const int n = loop.n();
  std::ostringstream out;
  for (int c = 0; c <= 2 * n; ++c) {
    if (c) out << ' ';
    out << element_at(c, n).str();
  }
  out << '\n';
  for (int r = 1; r <= 2 * n; ++r) {
    out << element_at(r, n).str();
    for (int c = 1; c <= 2 * n; ++c) out << ' ' << loop.at_index(r, c).str();
    out << '\n';
  }
  return out.str();
}

namespace {

Element parse_element_token(const std::string& token) {
  if (token == ".") return Element::undefined();
  try {
    return Element::of(std::stoi(token));
  } catch (const std::exception&) {
    throw InputError("loop text: bad token \"" + token + "\"");
  }
}

}  // namespace

PartialLoop loop_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw InputError("loop text: empty input");
  std::istringstream header(line);
  std::vector<Element> order;
  for (std::string token; header >> token;) order.push_back(parse_element_token(token));
  const int n = (static_cast<int>(order.size()) - 1) / 2;
  if (static_cast<int>(order.size()) != 2 * n + 1 || n < 1)
    throw InputError("loop text: header must list 2n+1 elements");
  for (int c = 0; c <= 2 * n; ++c)
    if (order[c] != element_at(c, n)) throw InputError("loop text: non-canonical header order");

  PartialLoop loop(n);
  for (int c = 0; c <= 2 * n; ++c) loop.set_index(0, c, element_at(c, n));  // identity row
  for (int r = 1; r <= 2 * n; ++r) {
    if (!std::getline(in, line)) throw InputError("loop text: missing row");
    std::istringstream row(line);
    std::string token;
    if (!(row >> token)) throw InputError("loop text: missing row label");
    const Element label = parse_element_token(token);
    if (label != element_at(r, n)) throw InputError("loop text: rows must follow the header order");
    loop.set_index(r, 0, label);  // identity column
    for (int c = 1; c <= 2 * n; ++c) {
      if (!(row >> token)) throw InputError("loop text: short row");
      loop.set_index(r, c, parse_element_token(token));
    }
    if (row >> token) throw InputError("loop text: long row");
  }
  return loop;
}

std::string array_to_text(const PartiallyFilledArray& a) {
  std::ostringstream out;
  for (int i = 0; i < a.m(); ++i) {
    for (int j = 0; j < a.m(); ++j) {
      if (j) out << ' ';
      if (a.filled(i, j))
        out << a.at(i, j);
      else
        out << '.';
    }
    out << '\n';
  }
  return out.str();
}

std::string array_to_csv(const PartiallyFilledArray& a) {
  std::ostringstream out;
  for (int i = 0; i < a.m(); ++i) {
    for (int j = 0; j < a.m(); ++j) {
      if (j) out << ',';
      if (a.filled(i, j))
        out << a.at(i, j);
      else
        out << '.';
    }
    out << '\n';
  }
  return out.str();
}

json square_to_json(const SquareTable& t) {
  json rows = json::array();
  for (int i = 0; i < t.order; ++i) {
    json row = json::array();
    for (int j = 0; j < t.order; ++j) row.push_back(t.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"order", t.order}, {"table", std::move(rows)}};
}

SquareTable square_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("table"))
    throw InputError("square JSON needs order and table");
  const int order = j.at("order").get<int>();
  std::vector<int> cells;
  const json& rows = j.at("table");
  if (!rows.is_array() || static_cast<int>(rows.size()) != order)
    throw InputError("square JSON: bad table shape");
  for (const json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw InputError("square JSON: bad table shape");
    for (const json& v : row) cells.push_back(v.get<int>());
  }
  return SquareTable(order, std::move(cells));
}

std::string square_to_text(const SquareTable& t) {
  std::ostringstream out;
  for (int i = 0; i < t.order; ++i) {
    for (int j = 0; j < t.order; ++j) {
      if (j) out << ' ';
      out << t.at(i, j);
    }
    out << '\n';
  }
  return out.str();
}

json polys_to_json(const std::vector<SumPolynomial>& polys) {
  json out = json::array();
  for (const SumPolynomial& p : polys) out.push_back(p.str());
  return out;
}

std::vector<SumPolynomial> polys_from_json(const json& j) {
  if (!j.is_array()) throw InputError("polynomial set JSON must be an array of strings");
  std::vector<SumPolynomial> out;
  for (const json& item : j) out.push_back(parse_poly(item.get<std::string>()));
  return out;
}

json classical_to_json(const ClassicalGrid& g) {
  json rows = json::array();
  for (int r = 0; r < g.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < g.cols; ++c) {
      if (g.at(r, c) == 0)
        row.push_back(nullptr);
      else
        row.push_back(g.at(r, c));
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", g.rows}, {"cols", g.cols}, {"cells", std::move(rows)}};
}

ClassicalGrid classical_from_json(const json& j) {
  int rows = 0, cols = 0;
  if (j.contains("m")) rows = cols = j.at("m").get<int>();
  if (j.contains("rows")) rows = j.at("rows").get<int>();
  if (j.contains("cols")) cols = j.at("cols").get<int>();
  if (rows < 1 || cols < 1) throw InputError("classical JSON needs rows/cols or m");
  ClassicalGrid g(rows, cols);
  const json& matrix = j.at("cells");
  if (!matrix.is_array() || static_cast<int>(matrix.size()) != rows)
    throw InputError("classical JSON: bad cells shape");
  for (int r = 0; r < rows; ++r) {
    const json& row = matrix.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InputError("classical JSON: bad cells shape");
    for (int c = 0; c < cols; ++c)
      if (!row.at(c).is_null()) g.set(r, c, row.at(c).get<int>());
  }
  return g;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path);
  out << content;
}

}  // namespace heffter
