#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "antipath/digraph.hpp"

namespace antipath {

/// Parse failure with a 1-based line/column position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Graph file format:
///
///   oriented <n> <m>        (or: digraph <n> <m>)
///   <u> <v>                 m lines, 0-based endpoints
///
/// Blank lines and trailing whitespace are tolerated. The emitted form is
/// canonical: edges sorted lexicographically, single spaces, '\n' endings.
Digraph parse_graph(std::string_view text);
std::string emit_graph(const Digraph& d);

Digraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Digraph& d);

/// Lowercase hex SHA-256 of emit_graph(d).
std::string graph_hash(const Digraph& d);
std::string sha256_hex(std::string_view bytes);

/// Plain Graphviz rendering.
std::string to_dot(const Digraph& d);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace antipath
