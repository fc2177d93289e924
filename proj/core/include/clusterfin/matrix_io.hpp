#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clusterfin/graph.hpp"
#include "clusterfin/int_matrix.hpp"
#include "clusterfin/numeric.hpp"
#include "clusterfin/skew_matrix.hpp"

namespace clusterfin {

enum class MatrixFormat { text, json };

/// A parsed matrix input.  Text form: first line n, then n lines of n
/// integers.  JSON form: {"n": ..., "rows": [[...]]} with optional "name"
/// and "symmetrizer" fields; entries may be JSON integers or decimal
/// strings so that round-trips stay bit-exact at any magnitude.
struct MatrixDocument {
  IntMatrix matrix;
  std::optional<Symmetrizer> declared_symmetrizer;
  std::string name;
  MatrixFormat format = MatrixFormat::text;
};

/// Parses either format (auto-detected).  Throws ParseError with line and
/// column on malformed input.
MatrixDocument parse_matrix_document(std::string_view text);

/// Renders in the requested format; render(parse(x)) is entrywise identical
/// to x.
std::string render_matrix_document(const MatrixDocument& doc,
                                   MatrixFormat format);

inline std::string render_matrix_document(const MatrixDocument& doc) {
  return render_matrix_document(doc, doc.format);
}

/// Edge list input for orientability commands: one edge per line as
/// "i j [weight]" with 1-based vertices; '#' starts a comment.
struct EdgeListDocument {
  Graph graph;
  std::vector<Int> weights;  // parallel to graph.edges(), default 1
};

EdgeListDocument parse_edge_list(std::string_view text);

}  // namespace clusterfin
