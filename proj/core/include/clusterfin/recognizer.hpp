#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "clusterfin/quasi_cartan.hpp"
#include "clusterfin/root_type.hpp"
#include "clusterfin/skew_matrix.hpp"

namespace clusterfin {

enum class Verdict { finite, not_finite };

struct OrientedCyclesAndPositiveCompanion {
  CompanionCertificate certificate;
};

struct NonOrientableCycle {
  ChordlessCycle cycle;
};

struct NonPositiveCompanion {
  std::size_t minor_index = 0;  // 0-based index of the offending minor
  CompanionCertificate certificate;
};

using RecognitionWitness =
    std::variant<OrientedCyclesAndPositiveCompanion, NonOrientableCycle,
                 NonPositiveCompanion>;

struct StageTiming {
  std::string stage;
  std::chrono::microseconds elapsed{};
};

struct RecognitionReport {
  Verdict verdict = Verdict::not_finite;
  std::optional<CartanKillingType> type;
  RecognitionWitness witness;
  std::vector<StageTiming> timings;
};

/// Decision pipeline: build Gamma(B); require every chordless cycle to be
/// cyclically oriented in Gamma(B) itself; assign edge signs on the
/// underlying graph; build the companion A_ij = -eps_ij |B_ij|; test
/// positivity; attach the Cartan-Killing type on success.  Failures are
/// verdicts with re-checkable witnesses, never errors.
RecognitionReport recognize(const SkewSymmetrizableMatrix& b);

struct ExploreCaps {
  std::size_t max_visited = 100000;
  std::optional<Int> max_entry;  // unset: bounded only by arbitrary precision
};

enum class ExploreStatus { class_closed, weight_exceeded, cap_exceeded };

struct ExplorationResult {
  ExploreStatus status = ExploreStatus::class_closed;
  std::size_t visited = 0;
  /// For weight_exceeded: the first matrix in BFS order with some
  /// |B_ij B_ji| >= 4 and the mutation path that replays it from the seed.
  std::optional<std::pair<IntMatrix, std::vector<std::size_t>>> witness;
};

/// BFS over the mutation class, deduplicated on exact matrix entries,
/// mutation directions explored in ascending order.
ExplorationResult explore_class(const SkewSymmetrizableMatrix& b,
                                const ExploreCaps& caps = {});

enum class OracleVerdict { finite, not_finite, unknown };

/// Independent oracle: finite iff the class closes with all weights <= 3,
/// not finite on any weight >= 4, unknown when a cap was hit.
OracleVerdict oracle_finite_type(const SkewSymmetrizableMatrix& b,
                                 const ExploreCaps& caps = {});

/// The Cartan-Killing type of a finite-type matrix; throws
/// NotFiniteTypeError otherwise.
CartanKillingType class_type(const SkewSymmetrizableMatrix& b);

}  // namespace clusterfin
