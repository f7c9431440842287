#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcenter {

using PointId = std::size_t;

enum class Mode { symmetric, asymmetric };

std::string_view to_string(Mode mode);

enum class ErrorCode {
  invalid_argument,
  parse_error,
  mismatched_k,
  budget_exceeded,
  asymmetric_input,
  empty_symmetrized_set,
  cap_too_tight,
  infeasible_params,
  rejection_budget_exceeded,
  construction_check_failed,
  internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Dense row-major table of ordered-pair distances; entry (from, to) is d(from, to).
///
/// No metric properties are enforced here; perturbed tables and hop-count
/// tables (which may hold +inf) share this type. `Instance` layers the
/// metric invariants on top.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t n, double fill = 0.0);

  static DistanceTable from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const noexcept { return n_; }

  double operator()(PointId from, PointId to) const noexcept { return data_[from * n_ + to]; }
  double& at(PointId from, PointId to) noexcept { return data_[from * n_ + to]; }

  std::span<const double> row(PointId from) const noexcept {
    return {data_.data() + from * n_, n_};
  }
  std::span<double> row(PointId from) noexcept { return {data_.data() + from * n_, n_}; }

  /// Largest entry; 0 for an empty table.
  double max_entry() const noexcept;

  bool operator==(const DistanceTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Grid spacing used by every generator (2^-20). Sums of grid values of
/// moderate magnitude are exact, so generated data needs no tolerance.
inline constexpr double grid_step = 0x1.0p-20;

double snap_up(double value) noexcept;
double snap_down(double value) noexcept;
bool on_grid(double value) noexcept;

/// Largest point count that does not exceed `fraction * n`, with products
/// within 1e-9 of an integer treated as that integer (so 1/18 of 18 is 1).
std::size_t fraction_floor(double fraction, std::size_t n) noexcept;

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace kcenter
