#include "pmc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pmc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
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

std::optional<long long> to_int(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    return std::nullopt;
  return value;
}

int vertex_token(std::string_view tok, int n, int base, int line) {
  auto v = to_int(tok);
  if (!v)
    throw ParseError(line, "expected a vertex index, got '" + std::string(tok) + "'");
  long long idx = *v - base;
  if (idx < 0 || idx >= n)
    throw ParseError(line, "vertex " + std::string(tok) + " out of range");
  return static_cast<int>(idx);
}

} // namespace

Weight parse_weight(std::string_view token) {
  auto slash = token.find('/');
  auto num = to_int(token.substr(0, slash));
  long long den = 1;
  if (slash != std::string_view::npos) {
    auto d = to_int(token.substr(slash + 1));
    if (!d)
      throw DomainError("malformed weight '" + std::string(token) + "'");
    den = *d;
  }
  if (!num || den == 0)
    throw DomainError("malformed weight '" + std::string(token) + "'");
  Weight w(*num, den);
  if (w <= Weight(0))
    throw DomainError("weight '" + std::string(token) + "' is not positive");
  return w;
}

GraphInput parse_graph(std::string_view text, GraphFormat format) {
  const int base = format == GraphFormat::Dimacs ? 1 : 0;
  int n = -1;
  long long declared_m = -1;
  std::vector<Edge> edges;
  std::vector<Weight> weights;
  std::vector<int> side1;
  bool have_bip = false;
  bool any_weight = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == '#')
      continue;

    if (format == GraphFormat::Dimacs) {
      if (tok[0] == "c")
        continue;
      if (tok[0] == "p") {
        if (n >= 0)
          throw ParseError(line_no, "duplicate problem line");
        if (tok.size() != 4)
          throw ParseError(line_no, "expected 'p edge n m'");
        auto nn = to_int(tok[2]);
        auto mm = to_int(tok[3]);
        if (!nn || !mm || *nn < 0 || *mm < 0)
          throw ParseError(line_no, "malformed problem line");
        if (*nn > VertexSet::kMaxVertices)
          throw ParseError(line_no, "graphs are limited to 512 vertices");
        n = static_cast<int>(*nn);
        declared_m = *mm;
        weights.assign(n, Weight(1));
        continue;
      }
      if (n < 0)
        throw ParseError(line_no, "edge data before the problem line");
      if (tok[0] == "e") {
        if (tok.size() != 3)
          throw ParseError(line_no, "expected 'e u v'");
        int u = vertex_token(tok[1], n, base, line_no);
        int v = vertex_token(tok[2], n, base, line_no);
        if (u == v)
          throw ParseError(line_no, "self-loop");
        edges.push_back({u, v});
        continue;
      }
    } else {
      if (n < 0) {
        if (tok.size() < 2 || tok.size() > 3 || (tok.size() == 3 && tok[2] != "weighted"))
          throw ParseError(line_no, "expected header 'n m [weighted]'");
        auto nn = to_int(tok[0]);
        auto mm = to_int(tok[1]);
        if (!nn || !mm || *nn < 0 || *mm < 0)
          throw ParseError(line_no, "malformed header");
        if (*nn > VertexSet::kMaxVertices)
          throw ParseError(line_no, "graphs are limited to 512 vertices");
        n = static_cast<int>(*nn);
        declared_m = *mm;
        weights.assign(n, Weight(1));
        continue;
      }
      if (tok.size() == 2 && tok[0] != "bip") {
        int u = vertex_token(tok[0], n, base, line_no);
        int v = vertex_token(tok[1], n, base, line_no);
        if (u == v)
          throw ParseError(line_no, "self-loop");
        edges.push_back({u, v});
        continue;
      }
    }

    if (tok[0] == "w") {
      if (tok.size() != 3)
        throw ParseError(line_no, "expected 'w v num/den'");
      int v = vertex_token(tok[1], n, base, line_no);
      try {
        weights[v] = parse_weight(tok[2]);
      } catch (const DomainError& e) {
        throw ParseError(line_no, e.what());
      }
      any_weight = true;
      continue;
    }
    if (tok[0] == "bip") {
      if (n < 0)
        throw ParseError(line_no, "bipartition before header");
      have_bip = true;
      for (std::size_t i = 1; i < tok.size(); ++i)
        side1.push_back(vertex_token(tok[i], n, base, line_no));
      continue;
    }
    throw ParseError(line_no, "unrecognised line '" + std::string(line) + "'");
  }

  if (n < 0)
    throw ParseError(line_no, "missing header");
  if (static_cast<long long>(edges.size()) != declared_m)
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " edges, found " +
                                  std::to_string(edges.size()));
  GraphInput out;
  out.graph = Graph(n, edges, any_weight ? weights : std::vector<Weight>{});
  if (have_bip)
    out.side1 = VertexSet::from(n, side1);
  return out;
}

GraphInput read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DomainError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), format);
}

std::string write_edgelist(const Graph& g, const std::optional<VertexSet>& side1) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count();
  if (g.weighted())
    out << " weighted";
  out << '\n';
  for (const Edge& e : g.edges())
    out << e.u << ' ' << e.v << '\n';
  if (g.weighted())
    for (int v = 0; v < g.n(); ++v)
      out << "w " << v << ' ' << g.weight(v).numerator() << '/' << g.weight(v).denominator() << '\n';
  if (side1) {
    out << "bip";
    for (int v : *side1)
      out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

} // namespace pmc
