#include "madstar/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_map>

#include "madstar/errors.hpp"

namespace madstar {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

struct Token {
  std::string_view text;
  std::size_t offset;
};

// Splits a line into whitespace tokens, dropping anything after `comment`.
std::vector<Token> tokenize(std::string_view line, std::size_t base, char comment) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == comment) break;
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && line[j] != comment) ++j;
    out.push_back({line.substr(i, j - i), base + i});
    i = j;
  }
  return out;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    f(text.substr(pos, end - pos), pos);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

std::optional<std::int64_t> as_integer(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::int64_t require_integer(const Token& t, const char* what) {
  auto v = as_integer(t.text);
  if (!v) throw ParseError(std::string("expected ") + what + ", got '" + std::string(t.text) + "'", t.offset);
  return *v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::Auto;
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edgelist" || name == "edge_list" || name == "el") return GraphFormat::EdgeList;
  if (name == "dimacs" || name == "col") return GraphFormat::Dimacs;
  throw UsageError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::EdgeList: return "edgelist";
    case GraphFormat::Dimacs: return "dimacs";
    case GraphFormat::Auto: break;
  }
  return "auto";
}

GraphFormat format_from_path(std::string_view path) {
  auto dot = path.rfind('.');
  if (dot == std::string_view::npos) return GraphFormat::Auto;
  auto ext = path.substr(dot + 1);
  if (ext == "g6" || ext == "graph6") return GraphFormat::Graph6;
  if (ext == "col" || ext == "dimacs") return GraphFormat::Dimacs;
  if (ext == "el" || ext == "edges" || ext == "txt") return GraphFormat::EdgeList;
  return GraphFormat::Auto;
}

GraphFormat sniff_format(std::string_view text) {
  std::optional<GraphFormat> guess;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    if (guess) return;
    auto t = trim(line);
    if (t.empty()) return;
    if (t.rfind("p ", 0) == 0 || t.rfind("c ", 0) == 0 || t == "c") {
      guess = GraphFormat::Dimacs;
      return;
    }
    if (t.rfind(kGraph6Header, 0) == 0) {
      guess = GraphFormat::Graph6;
      return;
    }
    if (t.front() == '#') return;
    bool one_token = std::none_of(t.begin(), t.end(), is_space);
    bool all_digits = std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
    guess = (one_token && !all_digits) ? GraphFormat::Graph6 : GraphFormat::EdgeList;
  });
  return guess.value_or(GraphFormat::EdgeList);
}

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.rfind(kGraph6Header, 0) == 0) {
    line.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 string", base);
  for (std::size_t i = 0; i < line.size(); ++i) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range 63..126", base + i);
  }
  auto byte = [&](std::size_t i) { return static_cast<std::int64_t>(static_cast<unsigned char>(line[i]) - 63); };
  std::int64_t n = 0;
  std::size_t pos = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (line.size() >= 2 && byte(1) < 63) {
    if (line.size() < 4) throw ParseError("truncated graph6 size field", base + line.size());
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("truncated graph6 size field", base + line.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > std::numeric_limits<Vertex>::max() / 2) throw ParseError("graph6 vertex count too large", base);
  std::int64_t bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " +
                         std::to_string(need),
                     base + std::min(line.size(), pos + need));
  GraphBuilder b(static_cast<int>(n));
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::int64_t value = byte(pos + static_cast<std::size_t>(k / 6));
      if ((value >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    std::int64_t last = byte(pos + need - 1);
    if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", base + pos + need - 1);
  }
  return b.build();
}

std::string to_graph6(const Graph& g) {
  std::string out;
  std::int64_t n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_corpus(std::string_view text) {
  std::vector<Graph> out;
  for_each_line(text, [&](std::string_view line, std::size_t offset) {
    auto t = trim(line);
    if (t.empty()) return;
    try {
      out.push_back(parse_graph6(t));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), offset + e.offset());
    }
  });
  return out;
}

Graph parse_edge_list(std::string_view text) {
  struct Pending {
    std::size_t a, b;
    std::size_t offset;
  };
  std::vector<std::pair<std::string, std::size_t>> labels;  // text, first offset
  std::unordered_map<std::string, std::size_t> index;
  std::vector<Pending> pending;
  auto intern = [&](const Token& t) {
    std::string key(t.text);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::size_t id = labels.size();
    index.emplace(key, id);
    labels.emplace_back(key, t.offset);
    return id;
  };
  for_each_line(text, [&](std::string_view line, std::size_t offset) {
    auto tokens = tokenize(line, offset, '#');
    if (tokens.empty()) return;
    if (tokens.size() > 2)
      throw ParseError("edge list line has " + std::to_string(tokens.size()) + " tokens", tokens[2].offset);
    std::size_t a = intern(tokens[0]);
    if (tokens.size() == 2) pending.push_back({a, intern(tokens[1]), tokens[0].offset});
  });

  // Integer labels keep their numeric order; anything else keeps first appearance.
  std::vector<std::size_t> order(labels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  bool numeric = std::all_of(labels.begin(), labels.end(), [](const auto& l) { return as_integer(l.first).has_value(); });
  if (numeric)
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return *as_integer(labels[x].first) < *as_integer(labels[y].first); });
  std::vector<Vertex> id(labels.size());
  std::vector<std::string> names(labels.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    id[order[rank]] = static_cast<Vertex>(rank);
    names[rank] = labels[order[rank]].first;
  }
  GraphBuilder b(static_cast<int>(labels.size()));
  for (const auto& p : pending) {
    Vertex u = id[p.a], v = id[p.b];
    if (u == v) throw ValidationError("self-loop at vertex '" + labels[p.a].first + "'");
    if (!b.try_add_edge(u, v))
      throw ValidationError("duplicate edge ('" + labels[p.a].first + "', '" + labels[p.b].first + "')");
  }
  bool identity = true;
  for (std::size_t v = 0; v < names.size(); ++v)
    if (names[v] != std::to_string(v)) identity = false;
  if (!identity) b.set_names(std::move(names));
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) {
      out += g.name(v);
      out += '\n';
      continue;
    }
    for (Vertex u : nb) {
      if (u < v) continue;
      out += g.name(v);
      out += ' ';
      out += g.name(u);
      out += '\n';
    }
  }
  return out;
}

Graph parse_dimacs(std::string_view text) {
  std::optional<GraphBuilder> b;
  std::int64_t declared_m = 0;
  std::size_t header_offset = 0;
  for_each_line(text, [&](std::string_view line, std::size_t offset) {
    auto tokens = tokenize(line, offset, '\0');
    if (tokens.empty() || tokens[0].text == "c") return;
    if (tokens[0].text == "p") {
      if (b) throw ParseError("second DIMACS problem line", tokens[0].offset);
      if (tokens.size() != 4 || (tokens[1].text != "edge" && tokens[1].text != "col"))
        throw ParseError("expected 'p edge <n> <m>'", tokens[0].offset);
      std::int64_t n = require_integer(tokens[2], "vertex count");
      declared_m = require_integer(tokens[3], "edge count");
      if (n < 0 || n > std::numeric_limits<Vertex>::max() / 2) throw ParseError("bad vertex count", tokens[2].offset);
      if (declared_m < 0) throw ParseError("bad edge count", tokens[3].offset);
      b.emplace(static_cast<int>(n));
      header_offset = tokens[0].offset;
      return;
    }
    if (tokens[0].text == "e") {
      if (!b) throw ParseError("edge line before 'p edge' header", tokens[0].offset);
      if (tokens.size() != 3) throw ParseError("expected 'e <u> <v>'", tokens[0].offset);
      std::int64_t u = require_integer(tokens[1], "vertex");
      std::int64_t v = require_integer(tokens[2], "vertex");
      if (u < 1 || u > b->n()) throw ParseError("vertex " + std::to_string(u) + " out of range", tokens[1].offset);
      if (v < 1 || v > b->n()) throw ParseError("vertex " + std::to_string(v) + " out of range", tokens[2].offset);
      if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
      if (!b->try_add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        throw ValidationError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      return;
    }
    throw ParseError("unknown DIMACS line type '" + std::string(tokens[0].text) + "'", tokens[0].offset);
  });
  if (!b) throw ParseError("missing 'p edge' header", text.size());
  Graph g = b->build();
  if (g.m() != declared_m)
    throw ParseError("header declares " + std::to_string(declared_m) + " edges, found " + std::to_string(g.m()),
                     header_offset);
  return g;
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) format = sniff_format(text);
  switch (format) {
    case GraphFormat::Graph6: {
      auto graphs = parse_graph6_corpus(text);
      if (graphs.size() != 1)
        throw ParseError("expected exactly one graph6 line, found " + std::to_string(graphs.size()), 0);
      return std::move(graphs.front());
    }
    case GraphFormat::EdgeList: return parse_edge_list(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    case GraphFormat::Auto: break;
  }
  throw UsageError("unresolved graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::Auto:
    case GraphFormat::Graph6: return to_graph6(g) + "\n";
    case GraphFormat::EdgeList: return to_edge_list(g);
    case GraphFormat::Dimacs: return to_dimacs(g);
  }
  return {};
}

}  // namespace madstar
