// clusterfin: decides whether a skew-symmetrizable integer matrix gives rise
// to a cluster algebra of finite type and names the Cartan-Killing type.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterfin/cyclic_orient.hpp"
#include "clusterfin/diagram.hpp"
#include "clusterfin/errors.hpp"
#include "clusterfin/matrix_io.hpp"
#include "clusterfin/quasi_cartan.hpp"
#include "clusterfin/recognizer.hpp"
#include "clusterfin/root_type.hpp"
#include "clusterfin/selftest.hpp"

namespace {

using namespace clusterfin;
using nlohmann::json;

constexpr const char* kSchema = "clusterfin/1";
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

struct Options {
  bool as_json = false;
  bool quiet = false;
  std::uint64_t seed = 20240901;
  std::size_t max_visited = 100000;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

MatrixDocument load_document(const std::string& path) {
  return parse_matrix_document(read_file(path));
}

SkewSymmetrizableMatrix to_skew(const MatrixDocument& doc) {
  auto d = try_find_symmetrizer(doc.matrix);
  if (!d)
    throw NotSkewSymmetrizableError(
        "input matrix is not skew-symmetrizable (no positive diagonal D with "
        "D*B skew-symmetric)");
  if (doc.declared_symmetrizer) {
    const auto& declared = doc.declared_symmetrizer->diag;
    for (std::size_t i = 0; i < doc.matrix.size(); ++i)
      for (std::size_t j = 0; j < doc.matrix.size(); ++j)
        if (declared[i] * doc.matrix(i, j) != -declared[j] * doc.matrix(j, i))
          throw NotSkewSymmetrizableError(
              "declared symmetrizer does not skew-symmetrize the matrix");
  }
  return SkewSymmetrizableMatrix{doc.matrix, std::move(*d)};
}

json int_to_json(const Int& value) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return json(static_cast<std::int64_t>(value));
  return json(value.str());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json cycle_to_json(const ChordlessCycle& z) {
  json vertices = json::array();
  for (std::size_t v : z.vertices) vertices.push_back(v + 1);
  return vertices;
}

json signs_to_json(const Graph& g, const SignAssignment& s) {
  json out = json::array();
  for (std::size_t e = 0; e < g.edges().size(); ++e)
    out.push_back(json{{"i", g.edges()[e].first + 1},
                       {"j", g.edges()[e].second + 1},
                       {"sign", s.signs[e]}});
  return out;
}

std::string cycle_to_text(const ChordlessCycle& z) {
  std::string out;
  for (std::size_t t = 0; t < z.vertices.size(); ++t) {
    if (t) out += '-';
    out += std::to_string(z.vertices[t] + 1);
  }
  return out;
}

json timings_to_json(const std::vector<StageTiming>& timings) {
  json out = json::object();
  for (const auto& t : timings) out[t.stage] = t.elapsed.count();
  return out;
}

int run_recognize(const std::string& path, const Options& opt, bool type_only) {
  auto b = to_skew(load_document(path));
  RecognitionReport report = recognize(b);

  if (opt.as_json) {
    json out{{"schema", kSchema}, {"command", type_only ? "type" : "recognize"}};
    out["verdict"] = report.verdict == Verdict::finite ? "finite" : "not-finite";
    if (report.type) out["type"] = report.type->str();
    if (const auto* w =
            std::get_if<OrientedCyclesAndPositiveCompanion>(&report.witness)) {
      out["witness"] = {
          {"kind", "positive-companion"},
          {"companion", matrix_to_json(w->certificate.companion.a)},
          {"signs", signs_to_json(diagram_of_skew(b).skeleton(),
                                  w->certificate.signs)}};
    } else if (const auto* c = std::get_if<NonOrientableCycle>(&report.witness)) {
      out["witness"] = {{"kind", "non-orientable-cycle"},
                        {"cycle", cycle_to_json(c->cycle)}};
    } else if (const auto* m = std::get_if<NonPositiveCompanion>(&report.witness)) {
      out["witness"] = {
          {"kind", "non-positive-companion"},
          {"minor_index", m->minor_index + 1},
          {"companion", matrix_to_json(m->certificate.companion.a)}};
    }
    out["timings_us"] = timings_to_json(report.timings);
    std::cout << out.dump(2) << '\n';
    return report.verdict == Verdict::finite ? kExitOk : kExitNegative;
  }

  if (report.verdict == Verdict::finite) {
    std::cout << "Finite, type " << report.type->str() << '\n';
  } else if (const auto* c = std::get_if<NonOrientableCycle>(&report.witness)) {
    std::cout << "NotFinite (chordless cycle " << cycle_to_text(c->cycle)
              << " is not cyclically oriented)\n";
  } else if (const auto* m = std::get_if<NonPositiveCompanion>(&report.witness)) {
    std::cout << "NotFinite (companion not positive: leading minor "
              << m->minor_index + 1 << " of the symmetrized companion is not "
              << "positive)\n";
  }
  if (!opt.quiet && !type_only) {
    std::cout << "stages:";
    for (const auto& t : report.timings)
      std::cout << ' ' << t.stage << '=' << t.elapsed.count() << "us";
    std::cout << '\n';
  }
  return report.verdict == Verdict::finite ? kExitOk : kExitNegative;
}

int run_mutate(const std::string& path, const std::vector<std::size_t>& indices,
               const Options& opt) {
  MatrixDocument doc = load_document(path);
  auto b = to_skew(doc);
  for (std::size_t k : indices) {
    if (k < 1 || k > b.size())
      throw std::out_of_range("mutation index " + std::to_string(k) +
                              " out of range 1.." + std::to_string(b.size()));
    b = mutate(b, k - 1);
  }
  doc.matrix = b.b;
  std::cout << render_matrix_document(
      doc, opt.as_json ? MatrixFormat::json : doc.format);
  return kExitOk;
}

int run_diagram(const std::string& path, const Options& opt, bool dot) {
  auto b = to_skew(load_document(path));
  Diagram gamma = diagram_of_skew(b);
  if (dot) {
    std::cout << "digraph diagram {\n";
    for (std::size_t v = 0; v < gamma.vertex_count(); ++v)
      std::cout << "  " << v + 1 << ";\n";
    for (const auto& e : gamma.edges()) {
      auto [from, to] = e.direction == EdgeDirection::forward
                            ? std::pair(e.i, e.j)
                            : std::pair(e.j, e.i);
      std::cout << "  " << from + 1 << " -> " << to + 1 << " [label=\""
                << e.weight << "\"];\n";
    }
    std::cout << "}\n";
    return kExitOk;
  }
  if (opt.as_json) {
    json edges = json::array();
    for (const auto& e : gamma.edges()) {
      bool forward = e.direction == EdgeDirection::forward;
      edges.push_back(json{{"from", (forward ? e.i : e.j) + 1},
                           {"to", (forward ? e.j : e.i) + 1},
                           {"weight", int_to_json(e.weight)}});
    }
    std::cout << json{{"schema", kSchema},
                      {"command", "diagram"},
                      {"vertices", gamma.vertex_count()},
                      {"edges", std::move(edges)}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << gamma.vertex_count() << " vertices, " << gamma.edges().size()
            << " edges\n";
  for (const auto& e : gamma.edges()) {
    auto [from, to] = e.direction == EdgeDirection::forward ? std::pair(e.i, e.j)
                                                            : std::pair(e.j, e.i);
    std::cout << from + 1 << " -> " << to + 1 << "  weight " << e.weight << '\n';
  }
  return kExitOk;
}

int run_cycles(const std::string& path, const Options& opt) {
  auto b = to_skew(load_document(path));
  Diagram gamma = diagram_of_skew(b);
  auto cycles = chordless_cycles(gamma);
  if (opt.as_json) {
    json list = json::array();
    for (const auto& z : cycles)
      list.push_back(json{{"vertices", cycle_to_json(z)},
                          {"cyclically_oriented",
                           cycle_is_cyclically_oriented(gamma, z)}});
    std::cout << json{{"schema", kSchema},
                      {"command", "cycles"},
                      {"count", cycles.size()},
                      {"cycles", std::move(list)}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << cycles.size() << " chordless cycle" << (cycles.size() == 1 ? "" : "s")
            << '\n';
  for (const auto& z : cycles)
    std::cout << cycle_to_text(z) << "  "
              << (cycle_is_cyclically_oriented(gamma, z) ? "oriented"
                                                         : "not oriented")
              << '\n';
  return kExitOk;
}

int run_orient(const std::string& path, const Options& opt) {
  EdgeListDocument doc = parse_edge_list(read_file(path));
  const Graph& g = doc.graph;
  const bool by_count = is_cyclically_orientable_count(g);
  const bool by_sequence = check_exact_sequence(g);
  const bool by_ordering = check_edge_ordering_criterion(g);
  auto orientation = construct_orientation(g);
  std::optional<SignAssignment> signs;
  if (by_count) signs = assign_signs(g);

  if (opt.as_json) {
    json out{{"schema", kSchema},
             {"command", "orient"},
             {"cyclically_orientable", by_count},
             {"criteria",
              {{"counting", by_count},
               {"exact_sequence", by_sequence},
               {"edge_ordering", by_ordering}}}};
    if (orientation) {
      json arrows = json::array();
      for (std::size_t e = 0; e < g.edges().size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (orientation->forward[e] < 0) std::swap(u, v);
        arrows.push_back(json{{"from", u + 1}, {"to", v + 1}});
      }
      out["orientation"] = std::move(arrows);
    }
    if (signs) out["signs"] = signs_to_json(g, *signs);
    std::cout << out.dump(2) << '\n';
    return by_count ? kExitOk : kExitNegative;
  }

  std::cout << "counting criterion:      " << (by_count ? "yes" : "no") << '\n'
            << "exact-sequence criterion: " << (by_sequence ? "yes" : "no") << '\n'
            << "edge-ordering criterion:  " << (by_ordering ? "yes" : "no") << '\n';
  if (!by_count) {
    std::cout << "not cyclically orientable\n";
    return kExitNegative;
  }
  std::cout << "cyclically orientable\n";
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    auto [u, v] = g.edges()[e];
    if (orientation->forward[e] < 0) std::swap(u, v);
    std::cout << u + 1 << " -> " << v + 1 << "  sign "
              << (signs->signs[e] > 0 ? "+1" : "-1") << '\n';
  }
  return kExitOk;
}

int run_companion(const std::string& path, const Options& opt) {
  auto b = to_skew(load_document(path));
  Diagram gamma = diagram_of_skew(b);
  if (!is_cyclically_orientable_count(gamma.skeleton())) {
    std::cout << "no sign-coherent companion: the underlying graph is not "
                 "cyclically orientable\n";
    return kExitNegative;
  }
  SignAssignment signs = assign_signs(gamma.skeleton());
  CompanionCertificate cert = companion_from_signs(b, signs);
  if (opt.as_json) {
    json out{{"schema", kSchema},
             {"command", "companion"},
             {"companion", matrix_to_json(cert.companion.a)},
             {"signs", signs_to_json(gamma.skeleton(), signs)},
             {"positive", is_positive(cert.companion)}};
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  MatrixDocument doc;
  doc.matrix = cert.companion.a;
  std::cout << render_matrix_document(doc, MatrixFormat::text);
  if (!opt.quiet)
    std::cout << "positive: " << (is_positive(cert.companion) ? "yes" : "no")
              << '\n';
  return kExitOk;
}

int run_explore(const std::string& path, const Options& opt) {
  auto b = to_skew(load_document(path));
  ExploreCaps caps;
  caps.max_visited = opt.max_visited;
  ExplorationResult result = explore_class(b, caps);
  const char* status = result.status == ExploreStatus::class_closed
                           ? "class-closed"
                           : result.status == ExploreStatus::weight_exceeded
                                 ? "weight-exceeded"
                                 : "cap-exceeded";
  if (opt.as_json) {
    json out{{"schema", kSchema},
             {"command", "explore"},
             {"status", status},
             {"visited", result.visited}};
    if (result.witness) {
      json path_json = json::array();
      for (std::size_t k : result.witness->second) path_json.push_back(k + 1);
      out["witness"] = {{"matrix", matrix_to_json(result.witness->first)},
                        {"path", std::move(path_json)}};
    }
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "status: " << status << "\nvisited: " << result.visited << '\n';
  if (result.witness) {
    std::cout << "witness path:";
    for (std::size_t k : result.witness->second) std::cout << ' ' << k + 1;
    std::cout << "\nwitness matrix:\n";
    MatrixDocument doc;
    doc.matrix = result.witness->first;
    std::cout << render_matrix_document(doc, MatrixFormat::text);
  }
  return kExitOk;
}

int run_selftest(const std::string& which, std::size_t max_vertices,
                 std::size_t random_graphs, std::size_t oracle_n,
                 const Options& opt) {
  SweepOutcome outcome;
  if (which == "table1") {
    outcome = run_table1_selftest(40);
  } else if (which == "criteria") {
    outcome = run_criteria_selftest(max_vertices, random_graphs, opt.seed);
  } else if (which == "oracle") {
    ExploreCaps caps;
    caps.max_visited = opt.max_visited;
    outcome = run_oracle_selftest(oracle_n, 2, caps);
  } else {
    throw Error("unknown selftest '" + which +
                "' (expected table1, criteria or oracle)");
  }
  if (opt.as_json) {
    std::cout << json{{"schema", kSchema},
                      {"command", "selftest"},
                      {"suite", which},
                      {"pass", outcome.pass},
                      {"summary", outcome.summary}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << (outcome.pass ? "pass" : "FAIL") << ": " << outcome.summary
              << '\n';
  }
  return outcome.pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite-type recognition for skew-symmetrizable matrices via "
      "cyclically oriented chordless cycles and positive quasi-Cartan "
      "companions"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: global flags may follow the subcommand

  Options opt;
  if (const char* env = std::getenv("CLUSTER_FINITE_MAX_VISITED"))
    opt.max_visited = std::strtoull(env, nullptr, 10);
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_flag("--quiet", opt.quiet, "suppress secondary output");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps");
  app.add_option("--max-visited", opt.max_visited,
                 "mutation-class exploration cap");

  std::string input;
  std::vector<std::size_t> indices;
  bool dot = false;
  std::string suite;
  std::size_t max_vertices = 6, random_graphs = 500, oracle_n = 3;

  auto* recognize_cmd =
      app.add_subcommand("recognize", "decide finite type and name it");
  recognize_cmd->add_option("input", input)->required();
  auto* mutate_cmd = app.add_subcommand("mutate", "apply mutations (1-based)");
  mutate_cmd->add_option("input", input)->required();
  mutate_cmd->add_option("k", indices, "mutation indices, applied left to right");
  auto* diagram_cmd = app.add_subcommand("diagram", "print the directed diagram");
  diagram_cmd->add_option("input", input)->required();
  diagram_cmd->add_flag("--dot", dot, "emit DOT");
  auto* cycles_cmd = app.add_subcommand("cycles", "list chordless cycles");
  cycles_cmd->add_option("input", input)->required();
  auto* orient_cmd = app.add_subcommand(
      "orient", "cyclic orientability of an edge-list graph");
  orient_cmd->add_option("input", input)->required();
  auto* companion_cmd = app.add_subcommand(
      "companion", "sign-coherent quasi-Cartan companion");
  companion_cmd->add_option("input", input)->required();
  auto* type_cmd = app.add_subcommand("type", "Cartan-Killing type only");
  type_cmd->add_option("input", input)->required();
  auto* explore_cmd = app.add_subcommand("explore", "walk the mutation class");
  explore_cmd->add_option("input", input)->required();
  auto* selftest_cmd = app.add_subcommand("selftest", "built-in sweeps");
  selftest_cmd->add_option("suite", suite, "table1 | criteria | oracle")
      ->required();
  selftest_cmd->add_option("--max-vertices", max_vertices,
                           "criteria sweep: exhaustive vertex bound");
  selftest_cmd->add_option("--random-count", random_graphs,
                           "criteria sweep: number of random graphs");
  selftest_cmd->add_option("--n", oracle_n, "oracle sweep: max matrix size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (recognize_cmd->parsed()) return run_recognize(input, opt, false);
    if (type_cmd->parsed()) return run_recognize(input, opt, true);
    if (mutate_cmd->parsed()) return run_mutate(input, indices, opt);
    if (diagram_cmd->parsed()) return run_diagram(input, opt, dot);
    if (cycles_cmd->parsed()) return run_cycles(input, opt);
    if (orient_cmd->parsed()) return run_orient(input, opt);
    if (companion_cmd->parsed()) return run_companion(input, opt);
    if (explore_cmd->parsed()) return run_explore(input, opt);
    if (selftest_cmd->parsed())
      return run_selftest(suite, max_vertices, random_graphs, oracle_n, opt);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NotSkewSymmetrizableError& e) {
    std::cerr << "input error (not skew-symmetrizable): " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
