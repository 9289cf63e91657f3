#ifndef INBI_EXPERIMENTS_HPP
#define INBI_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "inbi/building_problem.hpp"
#include "inbi/cases.hpp"
#include "inbi/config.hpp"
#include "inbi/pipeline.hpp"
#include "inbi/synthesis.hpp"

/// The benchmark experiments: per-case runs, the full case-matrix
/// comparison, the TRR allocation-deviation study and the smoothing sweep.
namespace inbi::experiments {

/// One report row: the compromise solution of a (case, algorithm) run.
struct CaseReportRow {
  int case_id = 0;
  pipeline::AlgorithmId algorithm = pipeline::AlgorithmId::kInbi;
  double equipment_cost = 0.0;  // yuan
  double supply_cost = 0.0;     // yuan
  double comfort_percent = 0.0;
  pipeline::RunMetrics metrics;
};

/// Builds the case's scenario (weather applied), wires TRR when the case
/// asks for it and runs the pipeline once.
CaseReportRow run_case(const cases::CaseConfig& case_config,
                       pipeline::AlgorithmId algorithm,
                       const synthesis::SynthesisSpec& spec,
                       const config::ToolkitConfig& toolkit);

/// All 13 cases x 3 algorithms, in case-major order.
std::vector<CaseReportRow> compare_all(const synthesis::SynthesisSpec& spec,
                                       const config::ToolkitConfig& toolkit);

struct TrrDeviationRow {
  int building = 0;
  double share_trr_on = 0.0;   // fraction of the day's renewable supply
  double share_trr_off = 0.0;
  double deviation_on = 0.0;   // |share - mean share|, percent
  double deviation_off = 0.0;
};

struct TrrDeviationReport {
  std::vector<TrrDeviationRow> rows;
  double mean_deviation_on = 0.0;   // percent
  double mean_deviation_off = 0.0;  // percent
  double reduction_percent = 0.0;   // (off - on) / off * 100
  trr::TrrSeriesSet series_on;      // per-building alpha/beta observations
};

/// Per-building deviation of the renewable supply share from the uniform
/// share, with the TRR boundary condition on and off.
TrrDeviationReport trr_deviation_experiment(
    const synthesis::SynthesisSpec& spec,
    const config::ToolkitConfig& toolkit);

/// Share deviations of a dispatch: building j's fraction of the day's total
/// renewable supply against the uniform 1/n share, in percent.
std::vector<double> allocation_deviations(const DispatchEvaluation& dispatch);

struct SmoothingRow {
  int buildings = 0;
  pipeline::AlgorithmId algorithm = pipeline::AlgorithmId::kInbi;
  double equipment_cost = 0.0;
  double baseline_equipment_cost = 0.0;  // the unmodified baseline's result
  double optimization_degree = 0.0;      // percent improvement vs baseline
};

/// Sweeps the building count, reporting the equipment-cost optimization
/// degree of INBI and ALG1 against the ALG2 baseline per count.
std::vector<SmoothingRow> smoothing_experiment(
    const std::vector<int>& building_counts,
    const synthesis::SynthesisSpec& spec,
    const config::ToolkitConfig& toolkit);

// Report writers (CSV).
void write_frontier_csv(const FrontierSet& frontier, const std::string& path);
void write_selection_trace_csv(
    const std::vector<auam::SelectionTraceRow>& trace,
    const std::string& path);
void write_refinement_csv(const std::vector<aws::RefinementRecord>& records,
                          const std::string& path);
void write_compromise_csv(const std::vector<ParetoPoint>& selected,
                          const std::vector<double>& closeness,
                          std::size_t chosen, const std::string& path);
void write_case_rows_csv(const std::vector<CaseReportRow>& rows,
                         const std::string& path);
void write_trr_series_csv(const trr::TrrSeriesSet& series,
                          const std::string& path);
void write_trr_deviation_csv(const TrrDeviationReport& report,
                             const std::string& path);
void write_smoothing_csv(const std::vector<SmoothingRow>& rows,
                         const std::string& path);

/// Columnar text table of the case-matrix comparison.
std::string format_case_table(const std::vector<CaseReportRow>& rows);

}  // namespace inbi::experiments

#endif  // INBI_EXPERIMENTS_HPP
