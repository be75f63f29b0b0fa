#include "mgg/position_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mgg {

std::optional<Game> parse_game(std::string_view name) {
  if (name == "nimg-rm") return Game::nimg_rm;
  if (name == "nimg-mr") return Game::nimg_mr;
  if (name == "vgeo") return Game::vgeo;
  if (name == "egeo") return Game::egeo;
  return std::nullopt;
}

std::optional<Convention> parse_convention(std::string_view name) {
  if (name == "normal") return Convention::normal;
  if (name == "misere") return Convention::misere;
  return std::nullopt;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::uint64_t parse_uint(const Line& line, std::string_view token, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line.number, std::string(what) + " must be a non-negative integer, got '" +
                                      std::string(token) + "'");
  }
  return value;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* expected) {
    if (index_ >= lines_.size()) {
      std::size_t last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(last + 1, std::string("unexpected end of file, expected '") + expected + "'");
    }
    return lines_[index_++];
  }

  // Keyword line with exactly `arity` operands.
  const Line& keyword(const char* key, std::size_t arity) {
    const Line& line = next(key);
    if (line.tokens.front() != key) {
      throw ParseError(line.number, std::string("expected '") + key + "', got '" +
                                        std::string(line.tokens.front()) + "'");
    }
    if (line.tokens.size() != arity + 1) {
      throw ParseError(line.number, std::string("'") + key + "' takes " + std::to_string(arity) +
                                        " operand(s)");
    }
    return line;
  }

  bool done() const { return index_ >= lines_.size(); }
  const Line& peek() const { return lines_[index_]; }

 private:
  std::vector<Line> lines_;
  std::size_t index_ = 0;
};

}  // namespace

PositionRecord parse_position(std::string_view text) {
  Cursor cur(tokenize(text));

  const Line& header = cur.keyword("mgg-pos", 1);
  if (header.tokens[1] != "1") throw ParseError(header.number, "unsupported format version");

  const Line& game_line = cur.keyword("game", 1);
  auto game = parse_game(game_line.tokens[1]);
  if (!game) throw ParseError(game_line.number, "unknown game '" + std::string(game_line.tokens[1]) + "'");

  const Line& conv_line = cur.keyword("convention", 1);
  auto convention = parse_convention(conv_line.tokens[1]);
  if (!convention) {
    throw ParseError(conv_line.number, "unknown convention '" + std::string(conv_line.tokens[1]) + "'");
  }

  const Line& kind_line = cur.keyword("kind", 1);
  GraphKind kind;
  if (kind_line.tokens[1] == "ugraph") {
    kind = GraphKind::undirected;
  } else if (kind_line.tokens[1] == "digraph") {
    kind = GraphKind::directed;
  } else {
    throw ParseError(kind_line.number, "unknown graph kind '" + std::string(kind_line.tokens[1]) + "'");
  }

  const Line& n_line = cur.keyword("vertices", 1);
  const std::uint64_t n = parse_uint(n_line, n_line.tokens[1], "vertex count");
  if (n == 0) throw ParseError(n_line.number, "a graph needs at least one vertex");
  if (n >= kNoVertex) throw ParseError(n_line.number, "vertex count too large");
  const Line& m_line = cur.keyword("edges", 1);
  const std::uint64_t m = parse_uint(m_line, m_line.tokens[1], "edge count");
  const Line& s_line = cur.keyword("start", 1);
  const std::uint64_t start = parse_uint(s_line, s_line.tokens[1], "start vertex");
  if (start >= n) throw ParseError(s_line.number, "start vertex out of range");

  WeightMap weights;
  if (is_nimg(*game)) {
    weights.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (std::uint64_t i = 0; i < n; ++i) {
      const Line& line = cur.keyword("w", 2);
      const std::uint64_t v = parse_uint(line, line.tokens[1], "vertex");
      if (v >= n) throw ParseError(line.number, "vertex out of range");
      if (seen[v]) throw ParseError(line.number, "weight of vertex " + std::to_string(v) + " given twice");
      seen[v] = 1;
      weights[v] = parse_uint(line, line.tokens[2], "weight");
    }
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  std::size_t last_edge_line = m_line.number;
  for (std::uint64_t i = 0; i < m; ++i) {
    const Line& line = cur.keyword("e", 2);
    const std::uint64_t u = parse_uint(line, line.tokens[1], "endpoint");
    const std::uint64_t v = parse_uint(line, line.tokens[2], "endpoint");
    if (u >= n || v >= n) throw ParseError(line.number, "edge endpoint out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    last_edge_line = line.number;
  }
  if (!cur.done()) throw ParseError(cur.peek().number, "trailing content after the edge list");

  std::shared_ptr<const Graph> graph;
  try {
    graph = std::make_shared<const Graph>(kind, n, edges);
  } catch (const GraphError& e) {
    throw ParseError(last_edge_line, e.what());
  }
  try {
    Position p = is_nimg(*game)
                     ? Position::nimg(*game, graph, std::move(weights), static_cast<Vertex>(start))
                     : Position::geography(*game, graph, static_cast<Vertex>(start));
    return {std::move(p), *convention};
  } catch (const PositionError& e) {
    throw ParseError(s_line.number, e.what());
  }
}

std::string serialize_position(const PositionRecord& record) {
  const Position& p = record.position;
  if (!p.is_root()) throw PositionError("only root positions can be serialised");
  const Graph& g = p.graph();
  std::ostringstream out;
  out << "mgg-pos 1\n"
      << "game " << to_string(p.game()) << '\n'
      << "convention " << to_string(record.convention) << '\n'
      << "kind " << to_string(g.kind()) << '\n'
      << "vertices " << g.vertex_count() << '\n'
      << "edges " << g.edge_count() << '\n'
      << "start " << p.current() << '\n';
  if (is_nimg(p.game())) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "w " << v << ' ' << p.weight(v) << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.from << ' ' << e.to << '\n';
  return out.str();
}

PositionRecord read_position_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_position(buf.str());
}

void write_position_file(const std::filesystem::path& path, const PositionRecord& record) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_position(record);
}

}  // namespace mgg
