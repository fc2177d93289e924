#include "clusterfin/recognizer.hpp"

#include <algorithm>
#include <set>
#include <type_traits>
#include <utility>

#include "clusterfin/cyclic_orient.hpp"
#include "clusterfin/diagram.hpp"
#include "clusterfin/errors.hpp"

namespace clusterfin {

namespace {

using boost::multiprecision::abs;

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}

  template <typename F>
  auto time(const char* stage, F&& f) {
    auto start = std::chrono::steady_clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(stage, start);
    } else {
      auto result = f();
      record(stage, start);
      return result;
    }
  }

 private:
  void record(const char* stage,
              std::chrono::steady_clock::time_point start) {
    out_.push_back(StageTiming{
        stage, std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)});
  }

  std::vector<StageTiming>& out_;
};

bool weight_within_bound(const IntMatrix& b) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (abs(b(i, j) * b(j, i)) >= 4) return false;
  return true;
}

}  // namespace

RecognitionReport recognize(const SkewSymmetrizableMatrix& b) {
  RecognitionReport report;
  StageClock clock(report.timings);

  Diagram gamma = clock.time("diagram", [&] { return diagram_of_skew(b); });
  auto cycles = clock.time("cycles", [&] { return chordless_cycles(gamma); });

  // Condition on Gamma(B) itself: every chordless cycle cyclically oriented
  // in the orientation the matrix defines (not mere orientability of the
  // underlying graph).
  for (const auto& z : cycles) {
    if (!cycle_is_cyclically_oriented(gamma, z)) {
      report.verdict = Verdict::not_finite;
      report.witness = NonOrientableCycle{z};
      return report;
    }
  }

  // The underlying graph is now cyclically orientable (Gamma(B) witnesses
  // it), so the sign solver cannot fail.
  SignAssignment signs =
      clock.time("signs", [&] { return assign_signs(gamma.skeleton()); });
  CompanionCertificate certificate =
      clock.time("companion", [&] { return companion_from_signs(b, signs); });

  auto bad_minor = clock.time("positivity", [&] {
    return first_nonpositive_minor(certificate.companion);
  });
  if (bad_minor) {
    report.verdict = Verdict::not_finite;
    report.witness = NonPositiveCompanion{*bad_minor, std::move(certificate)};
    return report;
  }

  report.type = clock.time("typing", [&] {
    return cartan_killing_type(certificate.companion);
  });
  report.verdict = Verdict::finite;
  report.witness =
      OrientedCyclesAndPositiveCompanion{std::move(certificate)};
  return report;
}

ExplorationResult explore_class(const SkewSymmetrizableMatrix& b,
                                const ExploreCaps& caps) {
  struct Node {
    IntMatrix matrix;
    std::size_t parent;
    std::size_t via;
  };
  constexpr std::size_t kNone = SIZE_MAX;

  ExplorationResult result;
  std::vector<Node> nodes;
  std::set<std::vector<Int>> seen;

  auto replay_path = [&](std::size_t index) {
    std::vector<std::size_t> path;
    while (nodes[index].parent != kNone) {
      path.push_back(nodes[index].via);
      index = nodes[index].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  // A matrix is examined in discovery order (the BFS order, directions
  // ascending); the first one carrying a weight >= 4 stops the search.
  auto discover = [&](IntMatrix m, std::size_t parent,
                      std::size_t via) -> std::optional<ExploreStatus> {
    if (!seen.insert(m.entries()).second) return std::nullopt;
    if (result.visited == caps.max_visited) return ExploreStatus::cap_exceeded;
    if (caps.max_entry)
      for (const Int& entry : m.entries())
        if (abs(entry) > *caps.max_entry) return ExploreStatus::cap_exceeded;
    ++result.visited;
    bool heavy = !weight_within_bound(m);
    nodes.push_back(Node{std::move(m), parent, via});
    if (heavy) {
      result.witness = {nodes.back().matrix, replay_path(nodes.size() - 1)};
      return ExploreStatus::weight_exceeded;
    }
    return std::nullopt;
  };

  if (auto stop = discover(b.b, kNone, 0)) {
    result.status = *stop;
    return result;
  }
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      IntMatrix next = mutate_entries(nodes[head].matrix, k);
      if (auto stop = discover(std::move(next), head, k)) {
        result.status = *stop;
        return result;
      }
    }
  }
  result.status = ExploreStatus::class_closed;
  return result;
}

OracleVerdict oracle_finite_type(const SkewSymmetrizableMatrix& b,
                                 const ExploreCaps& caps) {
  switch (explore_class(b, caps).status) {
    case ExploreStatus::class_closed:
      return OracleVerdict::finite;
    case ExploreStatus::weight_exceeded:
      return OracleVerdict::not_finite;
    case ExploreStatus::cap_exceeded:
      break;
  }
  return OracleVerdict::unknown;
}

CartanKillingType class_type(const SkewSymmetrizableMatrix& b) {
  RecognitionReport report = recognize(b);
  if (report.verdict != Verdict::finite)
    throw NotFiniteTypeError("class_type: matrix is not of finite type");
  return *report.type;
}

}  // namespace clusterfin
