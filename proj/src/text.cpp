#include "pdsort/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "pdsort/error.hpp"

namespace pdsort {

namespace {

class DiagramParser {
 public:
  DiagramParser(std::string_view text, int order) : text_(text), order_(order) {}

  PartitionDiagram parse() {
    if (order_ < 0 || order_ > kMaxOrder) {
      throw DomainError("diagram order " + std::to_string(order_) + " out of range");
    }
    expect('{');
    std::vector<Block> blocks;
    IndexMask seen_top = 0;
    IndexMask seen_bottom = 0;
    if (peek() != '}') {
      while (true) {
        Block b;
        while (true) {
          const std::size_t at = skip_ws();
          const NodeId v = node();
          IndexMask& row = v.row == Row::Top ? b.top : b.bottom;
          IndexMask& seen = v.row == Row::Top ? seen_top : seen_bottom;
          if ((row | seen) & index_bit(v.index)) {
            throw ParseError("duplicate node " + std::to_string(v.index) +
                                 (v.row == Row::Bottom ? "'" : ""),
                             at);
          }
          row |= index_bit(v.index);
          if (peek() != ',') break;
          ++pos_;
        }
        seen_top |= b.top;
        seen_bottom |= b.bottom;
        blocks.push_back(b);
        if (peek() != '|') break;
        ++pos_;
      }
    }
    expect('}');
    if (skip_ws() != text_.size()) throw ParseError("trailing characters", pos_);
    return PartitionDiagram(order_, std::move(blocks));
  }

 private:
  std::size_t skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  NodeId node() {
    const std::size_t start = pos_;
    Row row = Row::Top;
    if (peek() == '-') {
      row = Row::Bottom;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected node index", pos_);
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxOrder) break;
      ++pos_;
    }
    if (value < 1 || value > order_) {
      throw ParseError("node index " + std::to_string(value) + " outside 1.." +
                           std::to_string(order_),
                       start);
    }
    if (peek() == '\'') {
      if (row == Row::Bottom) throw ParseError("node marked bottom twice", pos_);
      row = Row::Bottom;
      ++pos_;
    }
    return {row, static_cast<int>(value)};
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

PartitionDiagram parse_diagram(std::string_view text, int order) {
  return DiagramParser(text, order).parse();
}

std::string format_block(const Block& b) {
  std::string out;
  for (int i : indices_of(b.top)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  for (int i : indices_of(b.bottom)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
    out += '\'';
  }
  return out;
}

std::string format_diagram(const PartitionDiagram& d) {
  std::string out = "{";
  bool first = true;
  for (const Block& b : d.blocks()) {
    if (!first) out += '|';
    first = false;
    out += format_block(b);
  }
  out += '}';
  return out;
}

std::string to_dot(const PartitionDiagram& d, std::string_view graph_name) {
  std::ostringstream os;
  auto id = [](NodeId v) {
    return (v.row == Row::Top ? "t" : "b") + std::to_string(v.index);
  };
  os << "graph " << graph_name << " {\n";
  os << "  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (Row row : {Row::Top, Row::Bottom}) {
    os << "  { rank=same;";
    for (int i = 1; i <= d.order(); ++i) {
      const NodeId v{row, i};
      os << ' ' << id(v) << " [label=\"" << i << (row == Row::Bottom ? "'" : "") << "\"];";
    }
    os << " }\n";
  }
  // Invisible edges pin the left-to-right order inside each row and keep the
  // top row above the bottom row.
  for (Row row : {Row::Top, Row::Bottom}) {
    for (int i = 1; i < d.order(); ++i) {
      os << "  " << id({row, i}) << " -- " << id({row, i + 1}) << " [style=invis];\n";
    }
  }
  if (d.order() > 0) os << "  t1 -- b1 [style=invis];\n";
  for (const Block& b : d.blocks()) {
    const auto nodes = b.nodes();
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      os << "  " << id(nodes[i - 1]) << " -- " << id(nodes[i]) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace pdsort
