#include <kcenter/types.hpp>

#include <array>
#include <charconv>
#include <cmath>

namespace kcenter {

std::string_view to_string(Mode mode) {
  return mode == Mode::symmetric ? "symmetric" : "asymmetric";
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::mismatched_k: return "MismatchedK";
    case ErrorCode::budget_exceeded: return "BudgetExceeded";
    case ErrorCode::asymmetric_input: return "AsymmetricInput";
    case ErrorCode::empty_symmetrized_set: return "EmptyA";
    case ErrorCode::cap_too_tight: return "CapTooTight";
    case ErrorCode::infeasible_params: return "InfeasibleParams";
    case ErrorCode::rejection_budget_exceeded: return "RejectionBudgetExceeded";
    case ErrorCode::construction_check_failed: return "ConstructionCheckFailed";
    case ErrorCode::internal: return "Internal";
  }
  return "Unknown";
}

double snap_up(double value) noexcept { return std::ceil(value / grid_step) * grid_step; }

double snap_down(double value) noexcept { return std::floor(value / grid_step) * grid_step; }

bool on_grid(double value) noexcept {
  return std::isfinite(value) && std::floor(value / grid_step) * grid_step == value;
}

std::size_t fraction_floor(double fraction, std::size_t n) noexcept {
  if (!(fraction > 0.0)) return 0;
  const double product = fraction * static_cast<double>(n);
  const double nearest = std::round(product);
  const double count = std::abs(product - nearest) <= 1e-9 ? nearest : std::floor(product);
  if (count >= static_cast<double>(n)) return n;
  return static_cast<std::size_t>(count);
}

std::string format_double(double value) {
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

}  // namespace kcenter
