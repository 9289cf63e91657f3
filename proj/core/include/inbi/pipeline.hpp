#ifndef INBI_PIPELINE_HPP
#define INBI_PIPELINE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "inbi/auam.hpp"
#include "inbi/aws.hpp"
#include "inbi/compromise.hpp"
#include "inbi/moo.hpp"
#include "inbi/nbi.hpp"
#include "inbi/pareto.hpp"

/// End-to-end orchestration of the frontier generation, densification,
/// selection and compromise stages, plus the two comparison baselines.
namespace inbi::pipeline {

/// INBI: frontier + densification + axis selection + Mahalanobis compromise.
/// ALG1: frontier + axis selection + Mahalanobis compromise (no AWS).
/// ALG2: frontier + Euclidean compromise (the unmodified baseline).
enum class AlgorithmId { kInbi, kAlg1, kAlg2 };

const char* algorithm_name(AlgorithmId id);
AlgorithmId algorithm_from_name(const std::string& name);

struct PipelineConfig {
  std::uint64_t seed = 0;
  int nbi_divisions = 10;
  moo::ScalarSolverOptions solver;
  std::array<double, 3> compromise_weights{1.0, 1.0, 1.0};
  double compromise_lambda_reg = 1e-8;
  double compromise_max_condition = 1e8;
  double min_weight_step = 0.01;  // AWS lambda grid floor
  double duplicate_tolerance = 1e-9;
  int auam_max_uniform_points = 300;
};

struct RunMetrics {
  int nbi_points = 0;       // frontier size before densification
  int frontier_points = 0;  // final frontier size
  int selected_points = 0;
  int lifted_accepted = 0;
  int lifted_rejected = 0;
  double nbi_uniformity_cv = 0.0;
  double selected_uniformity_cv = 0.0;
  double runtime_seconds = 0.0;
};

struct RunResult {
  AlgorithmId algorithm = AlgorithmId::kInbi;
  FrontierSet frontier;
  std::vector<ParetoPoint> selected;
  std::vector<std::size_t> selected_indices;  // into frontier.points
  std::size_t compromise_index = 0;           // into selected
  std::vector<double> closeness;              // one Th per selected point
  RunMetrics metrics;
  std::vector<std::string> warnings;
  std::vector<auam::SelectionTraceRow> selection_trace;
  std::vector<aws::RefinementRecord> refinement_records;

  [[nodiscard]] const ParetoPoint& compromise() const {
    return selected[compromise_index];
  }
};

/// Runs the stage sequence of `algorithm` on `problem`. Deterministic for a
/// fixed config; stage failures propagate with stage attribution.
RunResult run(const moo::MooProblem& problem, AlgorithmId algorithm,
              const PipelineConfig& config);

}  // namespace inbi::pipeline

#endif  // INBI_PIPELINE_HPP
