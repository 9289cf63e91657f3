#include "inbi/cases.hpp"

#include <stdexcept>

namespace inbi::cases {

const char* consideration_name(Consideration c) {
  switch (c) {
    case Consideration::kNone: return "none";
    case Consideration::kLowLight: return "low_light";
    case Consideration::kLowWind: return "low_wind";
    case Consideration::kCombinedEffect: return "combined_effect";
    case Consideration::kLowLightAndWind: return "low_light_and_wind";
  }
  return "?";
}

std::string CaseConfig::label() const {
  return id == 0 ? "standard" : "case" + std::to_string(id);
}

const std::vector<CaseConfig>& builtin_cases() {
  static const std::vector<CaseConfig> table = {
      {0, Consideration::kNone, {1.0, 1.0, 1.0}},
      {1, Consideration::kLowLight, {1.0, 1.0, 1.0}},
      {2, Consideration::kLowWind, {1.0, 1.0, 1.0}},
      {3, Consideration::kCombinedEffect, {1.0, 1.0, 1.0}},
      {4, Consideration::kLowLight, {0.4, 0.3, 0.3}},
      {5, Consideration::kLowWind, {0.3, 0.4, 0.3}},
      {6, Consideration::kCombinedEffect, {0.3, 0.3, 0.4}},
      {7, Consideration::kLowLight, {0.5, 0.25, 0.25}},
      {8, Consideration::kLowWind, {0.25, 0.5, 0.25}},
      {9, Consideration::kCombinedEffect, {0.25, 0.25, 0.5}},
      {10, Consideration::kLowLightAndWind, {1.0, 1.0, 1.0}},
      {11, Consideration::kLowLightAndWind, {0.4, 0.3, 0.3}},
      {12, Consideration::kLowLightAndWind, {0.5, 0.25, 0.25}},
  };
  return table;
}

const CaseConfig& case_by_id(int id) {
  const auto& table = builtin_cases();
  if (id < 0 || id >= static_cast<int>(table.size())) {
    throw std::out_of_range("case id must be in [0, 12], got " +
                            std::to_string(id));
  }
  return table[static_cast<std::size_t>(id)];
}

}  // namespace inbi::cases
