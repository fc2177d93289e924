#include "clusterfin/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "clusterfin/errors.hpp"

namespace clusterfin {

namespace {

using nlohmann::json;

// Line/column of a byte offset, for json error mapping (1-based).
std::pair<std::size_t, std::size_t> offset_position(std::string_view text,
                                                    std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Int int_from_json(const json& value, std::size_t line) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Int(value.get<std::uint64_t>());
    return Int(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    const std::string& text = value.get<std::string>();
    try {
      return Int(text);
    } catch (const std::exception&) {
      throw ParseError("invalid integer literal '" + text + "'", line, 1);
    }
  }
  throw ParseError("matrix entry must be an integer or a decimal string", line, 1);
}

json int_to_json(const Int& value) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi)
    return json(static_cast<std::int64_t>(value));
  return json(value.str());
}

MatrixDocument parse_json_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    auto [line, column] = offset_position(text, err.byte ? err.byte - 1 : 0);
    throw ParseError("invalid JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", 1, 1);
  if (!doc.contains("rows") || !doc["rows"].is_array())
    throw ParseError("missing \"rows\" array", 1, 1);

  MatrixDocument out;
  out.format = MatrixFormat::json;
  const auto& rows = doc["rows"];
  std::size_t n = rows.size();
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n)
      throw ParseError("\"n\" does not match the number of rows", 1, 1);
  }
  std::vector<std::vector<Int>> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw ParseError("row " + std::to_string(i + 1) + " must hold " +
                           std::to_string(n) + " entries",
                       1, 1);
    std::vector<Int> row;
    for (const auto& cell : rows[i]) row.push_back(int_from_json(cell, 1));
    entries.push_back(std::move(row));
  }
  out.matrix = IntMatrix::from_rows(entries);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string", 1, 1);
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("symmetrizer")) {
    const auto& diag = doc["symmetrizer"];
    if (!diag.is_array() || diag.size() != n)
      throw ParseError("\"symmetrizer\" must list one entry per row", 1, 1);
    Symmetrizer d;
    for (const auto& cell : diag) {
      d.diag.push_back(int_from_json(cell, 1));
      if (d.diag.back() <= 0)
        throw ParseError("symmetrizer entries must be positive", 1, 1);
    }
    out.declared_symmetrizer = std::move(d);
  }
  return out;
}

struct TokenReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++pos;
  }

  void skip_space() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }

  /// Next whitespace-separated token; empty when exhausted.
  std::string_view next(std::size_t* tok_line, std::size_t* tok_column) {
    skip_space();
    *tok_line = line;
    *tok_column = column;
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
    return text.substr(start, pos - start);
  }
};

Int parse_int_token(std::string_view token, std::size_t line, std::size_t column) {
  bool ok = !token.empty();
  for (std::size_t i = 0; ok && i < token.size(); ++i) {
    char c = token[i];
    if (i == 0 && (c == '-' || c == '+')) {
      ok = token.size() > 1;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
  }
  if (!ok)
    throw ParseError("expected an integer, got '" + std::string(token) + "'",
                     line, column);
  return Int(std::string(token));
}

MatrixDocument parse_text_document(std::string_view text) {
  TokenReader reader{text};
  std::size_t line, column;
  std::string_view token = reader.next(&line, &column);
  if (token.empty()) throw ParseError("empty input", line, column);
  Int n_value = parse_int_token(token, line, column);
  if (n_value < 0 || n_value > 4096)
    throw ParseError("unreasonable matrix dimension", line, column);
  std::size_t n = static_cast<std::size_t>(n_value);

  MatrixDocument out;
  out.format = MatrixFormat::text;
  out.matrix = IntMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      token = reader.next(&line, &column);
      if (token.empty())
        throw ParseError("matrix ends early: expected " +
                             std::to_string(n * n) + " entries",
                         line, column);
      out.matrix(i, j) = parse_int_token(token, line, column);
    }
  token = reader.next(&line, &column);
  if (!token.empty())
    throw ParseError("trailing input after the matrix", line, column);
  return out;
}

}  // namespace

MatrixDocument parse_matrix_document(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() &&
         std::isspace(static_cast<unsigned char>(text[first])))
    ++first;
  if (first < text.size() && text[first] == '{')
    return parse_json_document(text);
  return parse_text_document(text);
}

std::string render_matrix_document(const MatrixDocument& doc,
                                   MatrixFormat format) {
  const std::size_t n = doc.matrix.size();
  if (format == MatrixFormat::text) {
    std::ostringstream os;
    os << n << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j) os << ' ';
        os << doc.matrix(i, j);
      }
      os << '\n';
    }
    return os.str();
  }
  json out;
  out["n"] = n;
  json rows = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(int_to_json(doc.matrix(i, j)));
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  if (!doc.name.empty()) out["name"] = doc.name;
  if (doc.declared_symmetrizer) {
    json diag = json::array();
    for (const Int& d : doc.declared_symmetrizer->diag) diag.push_back(int_to_json(d));
    out["symmetrizer"] = std::move(diag);
  }
  return out.dump(2) + "\n";
}

EdgeListDocument parse_edge_list(std::string_view text) {
  struct Entry {
    std::size_t u, v;
    Int weight;
  };
  std::vector<Entry> entries;
  std::size_t max_vertex = 0;
  std::size_t line_no = 0;
  std::istringstream stream{std::string(text)};
  std::string line;
  while (std::getline(stream, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3)
      throw ParseError("expected 'i j [weight]'", line_no, 1);
    Int u = parse_int_token(tokens[0], line_no, 1);
    Int v = parse_int_token(tokens[1], line_no, 1);
    if (u < 1 || v < 1)
      throw ParseError("vertices are 1-based positive integers", line_no, 1);
    if (u == v) throw ParseError("self-loops are not allowed", line_no, 1);
    Entry entry;
    entry.u = static_cast<std::size_t>(u) - 1;
    entry.v = static_cast<std::size_t>(v) - 1;
    entry.weight = tokens.size() == 3 ? parse_int_token(tokens[2], line_no, 1) : Int(1);
    if (entry.weight < 1) throw ParseError("edge weight must be >= 1", line_no, 1);
    max_vertex = std::max({max_vertex, entry.u, entry.v});
    entries.push_back(std::move(entry));
  }

  std::vector<Graph::Edge> pairs;
  pairs.reserve(entries.size());
  for (const auto& e : entries) pairs.emplace_back(e.u, e.v);
  EdgeListDocument out;
  try {
    out.graph = Graph(entries.empty() ? 0 : max_vertex + 1, pairs);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), line_no, 1);
  }
  out.weights.assign(out.graph.edges().size(), Int(1));
  for (const auto& e : entries)
    out.weights[*out.graph.edge_index(e.u, e.v)] = e.weight;
  return out;
}

}  // namespace clusterfin
