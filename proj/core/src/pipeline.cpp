#include "inbi/pipeline.hpp"

#include <chrono>
#include <stdexcept>

#include "inbi/rng.hpp"

namespace inbi::pipeline {

namespace {

[[noreturn]] void stage_error(const char* stage, const std::exception& e) {
  throw std::runtime_error(std::string("pipeline stage '") + stage +
                           "' failed: " + e.what());
}

}  // namespace

const char* algorithm_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kInbi: return "inbi";
    case AlgorithmId::kAlg1: return "alg1";
    case AlgorithmId::kAlg2: return "alg2";
  }
  return "?";
}

AlgorithmId algorithm_from_name(const std::string& name) {
  if (name == "inbi") return AlgorithmId::kInbi;
  if (name == "alg1") return AlgorithmId::kAlg1;
  if (name == "alg2") return AlgorithmId::kAlg2;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected inbi, alg1 or alg2)");
}

RunResult run(const moo::MooProblem& problem, AlgorithmId algorithm,
              const PipelineConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();

  RunResult result;
  result.algorithm = algorithm;

  // Stage (a): the base frontier.
  nbi::NbiResult base;
  try {
    nbi::NbiOptions options;
    options.divisions = config.nbi_divisions;
    options.solver = config.solver;
    options.solver.seed = derive_seed(config.seed, 0x73746167652d61ULL);
    options.duplicate_tolerance = config.duplicate_tolerance;
    base = nbi::nbi_frontier(problem, options);
  } catch (const std::exception& e) {
    stage_error("nbi", e);
  }
  result.warnings = base.warnings;
  result.metrics.nbi_points = static_cast<int>(base.frontier.size());
  result.metrics.nbi_uniformity_cv = uniformity_cv(base.frontier.points);

  // Stage (b)+(c): densification and lifting, INBI only.
  std::array<int, 3> plane_refinement{1, 1, 1};
  if (algorithm == AlgorithmId::kInbi) {
    try {
      aws::AwsOptions options;
      options.solver = config.solver;
      options.solver.seed = derive_seed(config.seed, 0x73746167652d62ULL);
      options.min_weight_step = config.min_weight_step;
      options.duplicate_tolerance = config.duplicate_tolerance;
      aws::AwsResult dense = aws::densify_frontier(problem, base.frontier,
                                                   options);
      plane_refinement = dense.plane_refinement;
      result.metrics.lifted_accepted = dense.lifted_accepted;
      result.metrics.lifted_rejected = dense.lifted_rejected;
      result.refinement_records = std::move(dense.records);
      for (auto& w : dense.warnings) result.warnings.push_back(std::move(w));
      result.frontier = std::move(dense.frontier);
    } catch (const std::exception& e) {
      stage_error("aws", e);
    }
  } else {
    result.frontier = base.frontier;
  }
  result.metrics.frontier_points = static_cast<int>(result.frontier.size());

  // Stage (d): axis selection for INBI and ALG1; ALG2 keeps the whole set.
  if (algorithm == AlgorithmId::kAlg2) {
    result.selected = result.frontier.points;
    result.selected_indices.resize(result.selected.size());
    for (std::size_t i = 0; i < result.selected.size(); ++i) {
      result.selected_indices[i] = i;
    }
  } else {
    try {
      if (problem.objective_count() != 3) {
        throw std::invalid_argument("axis selection requires 3 objectives");
      }
      std::array<std::array<double, 3>, 3> anchors_normalized{};
      for (std::size_t a = 0; a < 3; ++a) {
        const auto s = moo::normalize_objectives(base.anchors.objectives[a],
                                                 base.anchors.bounds);
        anchors_normalized[a] = {s[0], s[1], s[2]};
      }
      const double expansion = auam::expansion_factor(plane_refinement);
      const auto surface = auam::fit_surface(anchors_normalized, expansion);
      const auto family = auam::make_axis_family(surface, plane_refinement);
      const int grid = auam::choose_grid(result.frontier.size(), surface,
                                         config.auam_max_uniform_points);
      const auto uniform = auam::uniform_points(surface, anchors_normalized,
                                                grid);
      auto selection = auam::axis_select(result.frontier.points, family,
                                         surface, uniform);
      result.selected = std::move(selection.selected);
      result.selected_indices = std::move(selection.selected_indices);
      result.selection_trace = std::move(selection.trace);
    } catch (const std::exception& e) {
      stage_error("auam", e);
    }
  }
  result.metrics.selected_points = static_cast<int>(result.selected.size());
  result.metrics.selected_uniformity_cv = uniformity_cv(result.selected);

  // Stage (e): the compromise pick.
  try {
    if (algorithm == AlgorithmId::kAlg2) {
      FrontierSet view;
      view.points = result.selected;
      view.bounds = result.frontier.bounds;
      result.closeness = nbi::euclidean_closeness(view,
                                                  config.compromise_weights);
      result.compromise_index = nbi::euclidean_compromise(
          view, config.compromise_weights);
    } else {
      const auto u = compromise::build_evaluation_matrix(result.selected);
      compromise::CompromiseConfig cc;
      cc.weights = config.compromise_weights;
      cc.lambda_reg = config.compromise_lambda_reg;
      cc.max_condition = config.compromise_max_condition;
      const Covariance sigma = compromise::evaluation_covariance(u);
      result.closeness = compromise::closeness(u, cc, sigma);
      result.compromise_index = compromise::pick_compromise(result.closeness);
    }
  } catch (const std::exception& e) {
    stage_error("compromise", e);
  }

  const auto t1 = std::chrono::steady_clock::now();
  result.metrics.runtime_seconds =
      std::chrono::duration<double>(t1 - t0).count();
  return result;
}

}  // namespace inbi::pipeline
