#ifndef INBI_CASES_HPP
#define INBI_CASES_HPP

#include <array>
#include <string>
#include <vector>

/// The built-in case matrix: weather consideration plus decision-maker
/// weight triple per case.
namespace inbi::cases {

enum class Consideration {
  kNone,            // standard operating condition
  kLowLight,        // reduced PV output
  kLowWind,         // reduced wind output
  kCombinedEffect,  // wind/PV coupling, electrical connection, uncertainty
  kLowLightAndWind,
};

const char* consideration_name(Consideration c);

struct CaseConfig {
  int id = 0;  // 0 is the standard case, 1..12 the numbered cases
  Consideration consideration = Consideration::kNone;
  std::array<double, 3> weights{1.0, 1.0, 1.0};

  [[nodiscard]] std::string label() const;
  /// The combined-effect cases switch the TRR boundary condition on.
  [[nodiscard]] bool trr_enabled() const {
    return consideration == Consideration::kCombinedEffect;
  }
};

/// The 13 built-in cases (standard + 1..12), in order.
const std::vector<CaseConfig>& builtin_cases();

/// Case by id in [0, 12]; throws std::out_of_range otherwise.
const CaseConfig& case_by_id(int id);

}  // namespace inbi::cases

#endif  // INBI_CASES_HPP
