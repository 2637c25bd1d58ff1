#include "reconf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace reconf {

GraphFormat format_from_name(const std::string& name) {
  if (name == "graph6") return GraphFormat::Graph6;
  if (name == "edgelist") return GraphFormat::EdgeList;
  throw Error(ErrorKind::ParseError, "unknown graph format: " + name);
}

const char* format_name(GraphFormat format) {
  return format == GraphFormat::Graph6 ? "graph6" : "edgelist";
}

Graph from_graph6(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty graph6 string", 0);
  const unsigned char first = static_cast<unsigned char>(text[0]);
  if (first < 63 || first > 63 + 62)
    throw Error(ErrorKind::ParseError, "graph6 size byte out of range", 0);
  const int n = first - 63;
  const long long bits = static_cast<long long>(n) * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < 1 + body)
    throw Error(ErrorKind::ParseError, "graph6 string truncated", text.size());
  if (text.size() > 1 + body)
    throw Error(ErrorKind::ParseError, "trailing data after graph6 string", 1 + body);

  Graph g(n);
  long long bit = 0;
  int i = 0, j = 1;
  for (std::size_t pos = 0; pos < body; ++pos) {
    const unsigned char byte = static_cast<unsigned char>(text[1 + pos]);
    if (byte < 63 || byte > 126)
      throw Error(ErrorKind::ParseError, "graph6 byte out of range", 1 + pos);
    const int group = byte - 63;
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      const int value = (group >> shift) & 1;
      if (bit >= bits) {
        if (value != 0)
          throw Error(ErrorKind::ParseError, "non-zero graph6 padding", 1 + pos);
        continue;
      }
      if (value) g.add_edge(i, j);
      if (++i == j) { i = 0; ++j; }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  if (g.n() > 62)
    throw Error(ErrorKind::UnsupportedCase, "graph too large for short graph6 form");
  std::string out(1, static_cast<char>(63 + g.n()));
  int group = 0, filled = 0;
  for (int j = 1; j < g.n(); ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

namespace {

struct Tokenizer {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos == text.size();
  }

  long long next_int(const char* what) {
    skip_space();
    const std::size_t start = pos;
    if (pos == text.size())
      throw Error(ErrorKind::ParseError, std::string("expected ") + what, pos);
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000'000)
        throw Error(ErrorKind::ParseError, std::string(what) + " too large", start);
      ++pos;
    }
    if (pos == start)
      throw Error(ErrorKind::ParseError, std::string("expected ") + what, start);
    return value;
  }
};

}  // namespace

Graph from_edgelist(const std::string& text) {
  Tokenizer tok{text};
  const long long n = tok.next_int("vertex count");
  const long long m = tok.next_int("edge count");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    tok.skip_space();
    const std::size_t edge_start = tok.pos;
    const long long u = tok.next_int("edge endpoint");
    const long long v = tok.next_int("edge endpoint");
    if (u >= n || v >= n)
      throw Error(ErrorKind::ParseError, "edge endpoint out of range", edge_start);
    if (u == v) throw Error(ErrorKind::ParseError, "loop edge", edge_start);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  if (!tok.at_end())
    throw Error(ErrorKind::ParseError, "unexpected trailing data", tok.pos);
  return g;
}

std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::string trimmed(const std::string& text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  return text.substr(a, b - a);
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? from_graph6(trimmed(text)) : from_edgelist(text);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? to_graph6(g) : to_edgelist(g);
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json reconfig_to_json(const ReconfigGraph& r, bool include_labels) {
  nlohmann::json j;
  j["kind"] = kind_name(r.kind);
  j["params"] = {{"k", r.k}};
  j["n"] = r.graph.n();
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : r.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (include_labels && r.labelled()) {
    nlohmann::json labels = nlohmann::json::array();
    if (r.kind == Kind::SingleVertex || r.kind == Kind::Kempe) {
      for (const Colouring& c : r.colour_labels) labels.push_back(c.assignment);
    } else {
      for (const TokenSet& s : r.token_labels) labels.push_back(s);
    }
    j["labels"] = std::move(labels);
  }
  return j;
}

ReconfigGraph reconfig_from_json(const nlohmann::json& j) {
  try {
    ReconfigGraph r;
    r.kind = kind_from_name(j.at("kind").get<std::string>());
    r.k = j.at("params").at("k").get<int>();
    const int n = j.at("n").get<int>();
    if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error(ErrorKind::ParseError, "edge entries must be pairs");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    r.graph = std::move(g);
    if (j.contains("labels")) {
      const auto& labels = j.at("labels");
      if (static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::ParseError, "label count must match vertex count");
      if (r.kind == Kind::SingleVertex || r.kind == Kind::Kempe) {
        for (const auto& entry : labels)
          r.colour_labels.push_back({entry.get<std::vector<int>>(), r.k});
      } else {
        for (const auto& entry : labels)
          r.token_labels.push_back(entry.get<std::vector<int>>());
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("bad reconfiguration JSON: ") + e.what());
  }
}

ReconfigGraph parse_reconfig_json(const std::string& text) {
  try {
    return reconfig_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what(),
                e.byte > 0 ? e.byte - 1 : 0);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write file: " + path);
  out << content;
}

std::string input_hash_hex(const std::string& bytes) {
  unsigned long long hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace reconf
