#include "antipath/graph_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace antipath {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

long long to_integer(const Token& tok, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size() || value < 0)
    throw ParseError(line, tok.column, std::string("expected a non-negative integer ") + what + ", got '" +
                                           std::string(tok.text) + "'");
  return value;
}

}  // namespace

Digraph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }

  std::size_t li = 0;
  auto next_content = [&]() -> std::optional<std::pair<int, std::vector<Token>>> {
    while (li < lines.size()) {
      auto tokens = tokenize(lines[li]);
      ++li;
      if (!tokens.empty()) return std::make_pair(static_cast<int>(li), std::move(tokens));
    }
    return std::nullopt;
  };

  auto header = next_content();
  if (!header) throw ParseError(1, 1, "empty graph file: expected 'oriented <n> <m>' or 'digraph <n> <m>'");
  auto& [hline, htok] = *header;
  GraphKind kind;
  if (htok[0].text == "oriented") kind = GraphKind::Oriented;
  else if (htok[0].text == "digraph") kind = GraphKind::Digraph;
  else throw ParseError(hline, htok[0].column, "unknown graph kind '" + std::string(htok[0].text) + "'");
  if (htok.size() != 3)
    throw ParseError(hline, htok.size() > 3 ? htok[3].column : 1, "header must be '<kind> <n> <m>'");
  const long long n = to_integer(htok[1], hline, "vertex count");
  const long long m = to_integer(htok[2], hline, "edge count");
  if (n > 100'000'000) throw ParseError(hline, htok[1].column, "vertex count too large");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<long long>(m, 1'000'000)));
  std::unordered_set<std::uint64_t> seen;
  auto key = [n](long long u, long long v) { return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + v; };
  int last_line = hline;
  for (long long e = 0; e < m; ++e) {
    auto row = next_content();
    if (!row)
      throw ParseError(last_line + 1, 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    auto& [line, tok] = *row;
    last_line = line;
    if (tok.size() != 2) throw ParseError(line, tok.size() > 2 ? tok[2].column : tok[0].column, "edge line must be '<u> <v>'");
    const long long u = to_integer(tok[0], line, "endpoint");
    const long long v = to_integer(tok[1], line, "endpoint");
    if (u >= n) throw ParseError(line, tok[0].column, "vertex " + std::to_string(u) + " out of range 0.." + std::to_string(n - 1));
    if (v >= n) throw ParseError(line, tok[1].column, "vertex " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(line, tok[0].column, "LoopEdge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (!seen.insert(key(u, v)).second)
      throw ParseError(line, tok[0].column, "DuplicateEdge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (kind == GraphKind::Oriented && seen.count(key(v, u)))
      throw ParseError(line, tok[0].column, "TwoCycleInOriented (" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (auto extra = next_content())
    throw ParseError(extra->first, extra->second[0].column, "unexpected content after " + std::to_string(m) + " edges");
  return build_graph(static_cast<int>(n), std::move(edges), kind);
}

std::string emit_graph(const Digraph& d) {
  std::string out = to_string(d.kind()) + " " + std::to_string(d.order()) + " " + std::to_string(d.size()) + "\n";
  for (const Edge& e : d.edges()) {
    out += std::to_string(e.from);
    out += ' ';
    out += std::to_string(e.to);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

Digraph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

void write_graph_file(const std::filesystem::path& path, const Digraph& d) { write_text_file(path, emit_graph(d)); }

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string graph_hash(const Digraph& d) { return sha256_hex(emit_graph(d)); }

std::string to_dot(const Digraph& d) {
  std::string out = "digraph G {\n";
  for (Vertex v = 0; v < d.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : d.edges()) out += "  " + std::to_string(e.from) + " -> " + std::to_string(e.to) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace antipath
