#include "ktds/graph_expr.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ktds/error.hpp"

namespace ktds {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return g;
  }

 private:
  Graph expr() {
    Graph g = term();
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X')) {
        ++pos_;
        Graph h = term();
        g = cartesian_product(g, h);
      } else {
        return g;
      }
    }
  }

  Graph term() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a graph term, found end of input");
    const char c = text_[pos_];
    if (c == 'K') {
      ++pos_;
      return complete(number());
    }
    if (c == 'C') {
      ++pos_;
      return cycle(number());
    }
    if (text_.substr(pos_, 5) == "star(") {
      pos_ += 5;
      Graph inner = expr();
      expect(',');
      const std::size_t pendants = number();
      expect(')');
      return star_subdivide(inner, pendants);
    }
    if (c == 'P') {
      ++pos_;
      return petersen();
    }
    if (c == '(') {
      ++pos_;
      Graph inner = expr();
      expect(')');
      return inner;
    }
    if (c == '@') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      std::string file(text_.substr(start, pos_ - start));
      while (!file.empty() && std::isspace(static_cast<unsigned char>(file.back()))) file.pop_back();
      if (file.empty()) fail("expected a file name after '@'", start);
      return read_edge_list_file(file);
    }
    fail("expected K<n>, C<n>, P, star(...), (...) or @file");
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number", start);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("number out of range", start);
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) { throw ParseError(message, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_expr(std::string_view text) { return ExprParser(text).parse(); }

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t order = 0;
  bool have_order = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    long long a = 0;
    if (!(fields >> a)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected integers", 0);
    }
    if (!have_order) {
      if (a < 0) throw ParseError("edge list: negative vertex count", 0);
      order = static_cast<std::size_t>(a);
      have_order = true;
      continue;
    }
    long long b = 0;
    if (!(fields >> b) || a < 0 || b < 0) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'", 0);
    }
    edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  }
  if (!have_order) throw ParseError("edge list: missing vertex count", 0);
  return Graph::from_edges(order, edges);
}

Graph read_edge_list_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot open edge-list file '" + file.string() + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace ktds
