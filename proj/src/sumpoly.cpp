#include "heffter/sumpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

namespace heffter {

namespace {

void node_text(const std::vector<SumPolynomial::Node>& nodes, int idx, std::string& out) {
  const auto& node = nodes[idx];
  if (node.is_leaf()) {
    out += std::to_string(node.symbol);
    return;
  }
  out += '(';
  node_text(nodes, node.left, out);
  out += '+';
  node_text(nodes, node.right, out);
  out += ')';
}

}  // namespace

void SumPolynomial::refresh_text() {
  text_.clear();
  node_text(nodes_, 0, text_);
}

SumPolynomial SumPolynomial::leaf(int symbol) {
  if (symbol <= 0) throw InputError("sum polynomial: leaves are positive symbols");
  SumPolynomial p;
  p.nodes_.push_back({-1, -1, symbol});
  p.refresh_text();
  return p;
}

SumPolynomial SumPolynomial::sum(const SumPolynomial& lhs, const SumPolynomial& rhs) {
  SumPolynomial p;
  p.nodes_.push_back({1, 1 + static_cast<int>(lhs.nodes_.size()), 0});
  const int lhs_off = 1;
  for (const Node& n : lhs.nodes_)
    p.nodes_.push_back({n.is_leaf() ? -1 : n.left + lhs_off,
                        n.is_leaf() ? -1 : n.right + lhs_off, n.symbol});
  const int rhs_off = 1 + static_cast<int>(lhs.nodes_.size());
  for (const Node& n : rhs.nodes_)
    p.nodes_.push_back({n.is_leaf() ? -1 : n.left + rhs_off,
                        n.is_leaf() ? -1 : n.right + rhs_off, n.symbol});
  for (int a : lhs.support())
    for (int b : rhs.support())
      if (a == b)
        throw InputError("sum polynomial: symbol " + std::to_string(a) +
                         " appears in both operands");
  p.refresh_text();
  return p;
}

int SumPolynomial::leaf_count() const {
  return static_cast<int>((nodes_.size() + 1) / 2);
}

std::vector<int> SumPolynomial::leaf_sequence() const {
  std::vector<int> out;
  std::function<void(int)> walk = [&](int idx) {
    if (nodes_[idx].is_leaf()) {
      out.push_back(nodes_[idx].symbol);
      return;
    }
    walk(nodes_[idx].left);
    walk(nodes_[idx].right);
  };
  walk(0);
  return out;
}

std::vector<int> SumPolynomial::support() const {
  std::vector<int> out = leaf_sequence();
  std::sort(out.begin(), out.end());
  return out;
}

std::string SumPolynomial::str() const { return text_; }

SumPolynomial natural(const std::vector<int>& symbols) {
  if (symbols.empty()) throw InputError("natural: empty symbol list");
  SumPolynomial p = SumPolynomial::leaf(symbols[0]);
  for (size_t i = 1; i < symbols.size(); ++i)
    p = SumPolynomial::sum(p, SumPolynomial::leaf(symbols[i]));
  return p;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    if (peek() != c)
      throw InputError(std::string("polynomial parse: expected '") + c + "' at offset " +
                       std::to_string(pos));
    ++pos;
  }

  SumPolynomial expr() {
    if (peek() == '(') {
      ++pos;
      SumPolynomial lhs = expr();
      expect('+');
      SumPolynomial rhs = expr();
      expect(')');
      return SumPolynomial::sum(lhs, rhs);
    }
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw InputError("polynomial parse: expected symbol at offset " +
                                       std::to_string(pos));
    const int symbol = std::stoi(std::string(text.substr(start, pos - start)));
    return SumPolynomial::leaf(symbol);
  }
};

}  // namespace

SumPolynomial parse_poly(std::string_view text) {
  Parser parser{text};
  SumPolynomial p = parser.expr();
  parser.skip_ws();
  if (parser.pos != text.size())
    throw InputError("polynomial parse: trailing characters");
  return p;
}

namespace {

// All full binary tree shapes over the given leaf labels, leaves attached
// left to right; split position ascending.
std::vector<SumPolynomial> all_shapes(const std::vector<int>& leaves, size_t lo, size_t hi) {
  std::vector<SumPolynomial> out;
  if (hi - lo == 1) {
    out.push_back(SumPolynomial::leaf(leaves[lo]));
    return out;
  }
  for (size_t split = lo + 1; split < hi; ++split)
    for (const SumPolynomial& l : all_shapes(leaves, lo, split))
      for (const SumPolynomial& r : all_shapes(leaves, split, hi))
        out.push_back(SumPolynomial::sum(l, r));
  return out;
}

}  // namespace

std::vector<SumPolynomial> enumerate_all(const std::vector<int>& symbols, int cap) {
  if (symbols.empty()) throw InputError("enumerate_all: empty symbol list");
  if (static_cast<int>(symbols.size()) > cap)
    throw SearchTooLarge("enumerate_all: |T| = " + std::to_string(symbols.size()) +
                         " exceeds cap " + std::to_string(cap));
  std::vector<int> order = symbols;
  std::sort(order.begin(), order.end());
  for (size_t i = 1; i < order.size(); ++i)
    if (order[i] == order[i - 1]) throw InputError("enumerate_all: duplicate symbol");

  std::vector<SumPolynomial> out;
  do {
    for (SumPolynomial& p : all_shapes(order, 0, order.size())) out.push_back(std::move(p));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

namespace {

Element eval_node(const std::vector<SumPolynomial::Node>& nodes, int idx,
                  const PartialLoop& loop) {
  const auto& node = nodes[idx];
  if (node.is_leaf()) {
    if (node.symbol > loop.n())
      throw InputError("evaluate: symbol " + std::to_string(node.symbol) +
                       " outside the loop's symbol set");
    return Element::pos(node.symbol);
  }
  return loop.at(eval_node(nodes, node.left, loop), eval_node(nodes, node.right, loop));
}

}  // namespace

Element evaluate(const SumPolynomial& poly, const PartialLoop& loop) {
  return eval_node(poly.nodes(), 0, loop);
}

SumPolynomial permute_poly(const SumPolynomial& poly, const SignedPermutation& rho) {
  std::function<SumPolynomial(int)> rebuild = [&](int idx) -> SumPolynomial {
    const auto& node = poly.nodes()[idx];
    if (node.is_leaf()) {
      const Element image = rho.apply(Element::pos(node.symbol));
      if (!image.positive())
        throw InputError("permute_poly: symbol " + std::to_string(node.symbol) +
                         " maps to " + image.str() + ", not a positive symbol");
      return SumPolynomial::leaf(image.value());
    }
    return SumPolynomial::sum(rebuild(node.left), rebuild(node.right));
  };
  return rebuild(0);
}

CompatibilityReport is_compatible(const PartialLoop& loop,
                                  const std::vector<SumPolynomial>& polys) {
  CompatibilityReport report;
  std::vector<Element> values(polys.size());
  for (size_t i = 0; i < polys.size(); ++i) {
    values[i] = evaluate(polys[i], loop);
    if (!values[i].defined()) report.undefined_polys.push_back(static_cast<int>(i));
  }
  std::map<std::vector<int>, int> first_with_support;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (!values[i].defined()) continue;
    const auto [it, inserted] =
        first_with_support.try_emplace(polys[i].support(), static_cast<int>(i));
    if (!inserted && values[it->second] != values[i])
      report.mismatches.push_back(
          {it->second, static_cast<int>(i), values[it->second], values[i]});
  }
  report.compatible = report.undefined_polys.empty() && report.mismatches.empty();
  return report;
}

std::vector<SignedPermutation> aut_p(const PartialLoop& loop,
                                     const std::vector<SumPolynomial>& polys,
                                     int cap) {
  std::set<int> support;
  for (const SumPolynomial& p : polys)
    for (int s : p.support()) support.insert(s);

  std::vector<SignedPermutation> out;
  for (const SignedPermutation& pi : automorphisms(loop, cap)) {
    bool positive = true;
    for (int s : support)
      if (!pi.apply(Element::pos(s)).positive()) {
        positive = false;
        break;
      }
    if (positive) out.push_back(pi);
  }
  return out;
}

}  // namespace heffter
