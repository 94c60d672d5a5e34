#include "chromabound/graph_io.hpp"

#include "chromabound/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace chromabound {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_label(std::string_view field, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || value < 0)
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(field) + "'");
  return value;
}

class Builder {
public:
  void add(long long a, long long b, std::size_t line_no) {
    if (a == b)
      throw InputError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(a));
    if (!seen_.insert({std::min(a, b), std::max(a, b)}).second)
      throw InputError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(a) +
                       " " + std::to_string(b));
    labels_.insert(a);
    labels_.insert(b);
    raw_.emplace_back(a, b);
  }

  void declare(long long label) { labels_.insert(label); }

  // Dense ids follow increasing label order.
  LoadedGraph finish() && {
    std::map<long long, Vertex> ids;
    std::vector<long long> labels(labels_.begin(), labels_.end());
    for (Vertex i = 0; i < labels.size(); ++i)
      ids[labels[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(raw_.size());
    for (auto [a, b] : raw_)
      edges.push_back({ids[a], ids[b]});
    return {Graph(labels.size(), std::move(edges)), std::move(labels)};
  }

private:
  std::set<long long> labels_;
  std::vector<std::pair<long long, long long>> raw_;
  std::set<std::pair<long long, long long>> seen_;
};

template <class LineFn>
void for_each_line(std::string_view text, LineFn &&fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    ++line_no;
    fn(text.substr(start, end - start), line_no);
    start = end + 1;
  }
}

} // namespace

LoadedGraph parse_edge_list(std::string_view text) {
  Builder builder;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#')
      return;
    if (fields.size() != 2)
      throw InputError("line " + std::to_string(line_no) + ": expected two vertex labels, got " +
                       std::to_string(fields.size()) + " fields");
    builder.add(parse_label(fields[0], line_no), parse_label(fields[1], line_no), line_no);
  });
  return std::move(builder).finish();
}

LoadedGraph parse_dimacs(std::string_view text) {
  Builder builder;
  long long declared_vertices = -1;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto fields = split_fields(line);
    if (fields.empty() || fields.front() == "c")
      return;
    if (fields.front() == "p") {
      if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col") || declared_vertices >= 0)
        throw InputError("line " + std::to_string(line_no) + ": malformed problem line");
      declared_vertices = parse_label(fields[2], line_no);
      // Isolated vertices still count, so register all ids up front.
      for (long long v = 0; v < declared_vertices; ++v)
        builder.declare(v);
      return;
    }
    if (fields.front() != "e" || fields.size() != 3)
      throw InputError("line " + std::to_string(line_no) + ": expected 'e u v'");
    if (declared_vertices < 0)
      throw InputError("line " + std::to_string(line_no) + ": edge before 'p edge' header");
    long long a = parse_label(fields[1], line_no);
    long long b = parse_label(fields[2], line_no);
    if (a < 1 || b < 1 || a > declared_vertices || b > declared_vertices)
      throw InputError("line " + std::to_string(line_no) + ": vertex out of range 1.." +
                       std::to_string(declared_vertices));
    builder.add(a - 1, b - 1, line_no);
  });
  if (declared_vertices < 0)
    throw InputError("missing 'p edge n m' header");
  return std::move(builder).finish();
}

std::string serialize_edge_list(const Graph &g) {
  std::ostringstream out;
  for (const Edge &e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  return out.str();
}

LoadedGraph load_graph_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const bool dimacs = path.size() >= 4 && path.compare(path.size() - 4, 4, ".col") == 0;
  return dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

} // namespace chromabound
