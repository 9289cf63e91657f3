#include "inbi/experiments.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace inbi::experiments {

namespace {

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  return out;
}

synthesis::SynthesisSpec spec_for_case(const cases::CaseConfig& case_config,
                                       const synthesis::SynthesisSpec& spec,
                                       const config::ToolkitConfig& toolkit) {
  synthesis::SynthesisSpec adjusted = spec;
  adjusted.consideration = case_config.consideration;
  adjusted.low_light_pv_factor = toolkit.low_light_pv_factor;
  adjusted.low_wind_factor = toolkit.low_wind_factor;
  return adjusted;
}

}  // namespace

CaseReportRow run_case(const cases::CaseConfig& case_config,
                       pipeline::AlgorithmId algorithm,
                       const synthesis::SynthesisSpec& spec,
                       const config::ToolkitConfig& toolkit) {
  const auto scenario =
      synthesis::synthesize_scenario(spec_for_case(case_config, spec, toolkit));

  building::BuildingProblemOptions options;
  options.trr_enabled = case_config.trr_enabled();
  options.lambda_trr = toolkit.lambda_trr;
  options.trr_params = toolkit.trr_params();
  const auto problem = building::make_building_problem(scenario, options);

  pipeline::PipelineConfig pc = toolkit.pipeline_config();
  pc.compromise_weights = case_config.weights;

  const auto result = pipeline::run(problem, algorithm, pc);
  const auto& best = result.compromise();

  CaseReportRow row;
  row.case_id = case_config.id;
  row.algorithm = algorithm;
  row.equipment_cost = best.values[0];
  row.supply_cost = best.values[1];
  row.comfort_percent = (1.0 - best.values[2]) * 100.0;
  row.metrics = result.metrics;
  return row;
}

std::vector<CaseReportRow> compare_all(const synthesis::SynthesisSpec& spec,
                                       const config::ToolkitConfig& toolkit) {
  std::vector<CaseReportRow> rows;
  for (const auto& case_config : cases::builtin_cases()) {
    for (const auto algorithm :
         {pipeline::AlgorithmId::kInbi, pipeline::AlgorithmId::kAlg1,
          pipeline::AlgorithmId::kAlg2}) {
      rows.push_back(run_case(case_config, algorithm, spec, toolkit));
    }
  }
  return rows;
}

std::vector<double> allocation_deviations(const DispatchEvaluation& dispatch) {
  const std::size_t n = dispatch.pv_used_per_building.size();
  std::vector<double> supplied(n, 0.0);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    SlotSeries combined(kSlotsPerDay, 0.0);
    for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
      combined[t] = dispatch.pv_used_per_building[j][t] +
                    dispatch.wind_used_per_building[j][t];
    }
    supplied[j] = integrate_power(combined);
    total += supplied[j];
  }

  std::vector<double> deviations(n, 0.0);
  if (total <= 0.0) return deviations;
  const double uniform = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) {
    deviations[j] = std::abs(supplied[j] / total - uniform) * 100.0;
  }
  return deviations;
}

TrrDeviationReport trr_deviation_experiment(
    const synthesis::SynthesisSpec& spec,
    const config::ToolkitConfig& toolkit) {
  const auto scenario = synthesis::synthesize_scenario(spec);
  const int n = scenario.building_count();

  const auto run_once = [&](bool trr_on) {
    building::BuildingProblemOptions options;
    options.trr_enabled = trr_on;
    options.lambda_trr = toolkit.lambda_trr;
    options.trr_params = toolkit.trr_params();
    building::BuildingProblem bp(scenario, options);
    const auto result = pipeline::run(bp.as_moo_problem(),
                                      pipeline::AlgorithmId::kInbi,
                                      toolkit.pipeline_config());
    return bp.evaluate(result.compromise().decision);
  };

  const DispatchEvaluation eval_on = run_once(true);
  const DispatchEvaluation eval_off = run_once(false);

  const auto dev_on = allocation_deviations(eval_on);
  const auto dev_off = allocation_deviations(eval_off);

  const auto share_of = [n](const DispatchEvaluation& ev, int j) {
    SlotSeries combined(kSlotsPerDay, 0.0);
    double total = 0.0;
    for (int b = 0; b < n; ++b) {
      for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
        const double v =
            ev.pv_used_per_building[b][t] + ev.wind_used_per_building[b][t];
        total += v;
        if (b == j) combined[t] = v;
      }
    }
    double own = 0.0;
    for (double v : combined) own += v;
    return total > 0.0 ? own / total : 0.0;
  };

  TrrDeviationReport report;
  report.series_on = trr::compute_trr_series(eval_on, toolkit.trr_params());
  for (int j = 0; j < n; ++j) {
    TrrDeviationRow row;
    row.building = j;
    row.share_trr_on = share_of(eval_on, j);
    row.share_trr_off = share_of(eval_off, j);
    row.deviation_on = dev_on[j];
    row.deviation_off = dev_off[j];
    report.rows.push_back(row);
    report.mean_deviation_on += dev_on[j];
    report.mean_deviation_off += dev_off[j];
  }
  report.mean_deviation_on /= n;
  report.mean_deviation_off /= n;
  report.reduction_percent =
      report.mean_deviation_off > 0.0
          ? (report.mean_deviation_off - report.mean_deviation_on) /
                report.mean_deviation_off * 100.0
          : 0.0;
  return report;
}

std::vector<SmoothingRow> smoothing_experiment(
    const std::vector<int>& building_counts,
    const synthesis::SynthesisSpec& spec,
    const config::ToolkitConfig& toolkit) {
  if (building_counts.empty()) {
    throw std::invalid_argument("building count range is empty");
  }

  std::vector<SmoothingRow> rows;
  for (int count : building_counts) {
    synthesis::SynthesisSpec sized = spec;
    sized.n_buildings = count;
    const auto scenario = synthesis::synthesize_scenario(sized);

    building::BuildingProblemOptions options;
    const auto problem = building::make_building_problem(scenario, options);

    const auto equipment = [&](pipeline::AlgorithmId algorithm) {
      const auto result =
          pipeline::run(problem, algorithm, toolkit.pipeline_config());
      return result.compromise().values[0];
    };

    const double baseline = equipment(pipeline::AlgorithmId::kAlg2);
    for (const auto algorithm :
         {pipeline::AlgorithmId::kInbi, pipeline::AlgorithmId::kAlg1}) {
      SmoothingRow row;
      row.buildings = count;
      row.algorithm = algorithm;
      row.equipment_cost = equipment(algorithm);
      row.baseline_equipment_cost = baseline;
      row.optimization_degree =
          baseline > 0.0
              ? (baseline - row.equipment_cost) / baseline * 100.0
              : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

void write_frontier_csv(const FrontierSet& frontier, const std::string& path) {
  auto out = open_csv(path);
  out << "idx,f1,f2,f3,s1,s2,s3,source\n";
  for (std::size_t i = 0; i < frontier.points.size(); ++i) {
    const auto& p = frontier.points[i];
    out << i;
    for (double v : p.values) out << ',' << v;
    for (double s : p.normalized) out << ',' << s;
    out << ',' << (p.source == PointSource::kNbi ? "nbi" : "aws") << "\n";
  }
}

void write_selection_trace_csv(
    const std::vector<auam::SelectionTraceRow>& trace,
    const std::string& path) {
  auto out = open_csv(path);
  out << "theta,sbar_x,sbar_y,sbar_z,matched_idx,distance\n";
  for (const auto& row : trace) {
    out << row.theta << ',' << row.uniform[0] << ',' << row.uniform[1] << ','
        << row.uniform[2] << ',' << row.matched_index << ',' << row.distance
        << "\n";
  }
}

void write_refinement_csv(const std::vector<aws::RefinementRecord>& records,
                          const std::string& path) {
  auto out = open_csv(path);
  out << "plane,segment,lambda,accepted,f1,f2,f3\n";
  for (const auto& rec : records) {
    out << aws::PlaneSpec{rec.plane}.name() << ',' << rec.segment << ','
        << rec.lambda << ',' << (rec.accepted ? 1 : 0);
    if (rec.accepted) {
      out << ',' << rec.values[0] << ',' << rec.values[1] << ','
          << rec.values[2];
    } else {
      out << ",,,";
    }
    out << "\n";
  }
}

void write_compromise_csv(const std::vector<ParetoPoint>& selected,
                          const std::vector<double>& closeness,
                          std::size_t chosen, const std::string& path) {
  if (selected.size() != closeness.size()) {
    throw std::invalid_argument("closeness size mismatch");
  }
  auto out = open_csv(path);
  out << "idx,f1,f2,comfort,Th,chosen\n";
  for (std::size_t i = 0; i < selected.size(); ++i) {
    const auto& p = selected[i];
    out << i << ',' << p.values[0] << ',' << p.values[1] << ','
        << (1.0 - p.values[2]) * 100.0 << ',' << closeness[i] << ','
        << (i == chosen ? 1 : 0) << "\n";
  }
}

void write_case_rows_csv(const std::vector<CaseReportRow>& rows,
                         const std::string& path) {
  auto out = open_csv(path);
  out << "case,algorithm,equipment_cost,supply_cost,comfort_percent\n";
  for (const auto& row : rows) {
    out << cases::case_by_id(row.case_id).label() << ','
        << pipeline::algorithm_name(row.algorithm) << ',' << row.equipment_cost
        << ',' << row.supply_cost << ',' << row.comfort_percent << "\n";
  }
}

void write_trr_series_csv(const trr::TrrSeriesSet& series,
                          const std::string& path) {
  auto out = open_csv(path);
  out << "building,slot,alpha,beta\n";
  for (std::size_t j = 0; j < series.alpha.size(); ++j) {
    for (std::size_t t = 0; t < kSlotsPerDay; ++t) {
      out << j << ',' << t << ',';
      if (series.alpha[j][t].has_value()) out << *series.alpha[j][t];
      out << ',';
      if (series.beta[j][t].has_value()) out << *series.beta[j][t];
      out << "\n";
    }
  }
}

void write_trr_deviation_csv(const TrrDeviationReport& report,
                             const std::string& path) {
  auto out = open_csv(path);
  out << "building,share_trr_on,share_trr_off,deviation_on,deviation_off\n";
  for (const auto& row : report.rows) {
    out << row.building << ',' << row.share_trr_on << ',' << row.share_trr_off
        << ',' << row.deviation_on << ',' << row.deviation_off << "\n";
  }
  out << "mean,,," << report.mean_deviation_on << ','
      << report.mean_deviation_off << "\n";
}

void write_smoothing_csv(const std::vector<SmoothingRow>& rows,
                         const std::string& path) {
  auto out = open_csv(path);
  out << "buildings,algorithm,equipment_cost,baseline_equipment_cost,"
         "optimization_degree\n";
  for (const auto& row : rows) {
    out << row.buildings << ',' << pipeline::algorithm_name(row.algorithm)
        << ',' << row.equipment_cost << ',' << row.baseline_equipment_cost
        << ',' << row.optimization_degree << "\n";
  }
}

std::string format_case_table(const std::vector<CaseReportRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "case" << std::setw(8) << "alg"
      << std::right << std::setw(18) << "equipment (yuan)" << std::setw(16)
      << "supply (yuan)" << std::setw(12) << "comfort %" << "\n";
  out << std::string(64, '-') << "\n";
  out << std::fixed << std::setprecision(2);
  for (const auto& row : rows) {
    out << std::left << std::setw(10) << cases::case_by_id(row.case_id).label()
        << std::setw(8) << pipeline::algorithm_name(row.algorithm)
        << std::right << std::setw(18) << row.equipment_cost << std::setw(16)
        << row.supply_cost << std::setw(12) << row.comfort_percent << "\n";
  }
  return out.str();
}

}  // namespace inbi::experiments
