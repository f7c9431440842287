#include <kcenter/instance.hpp>
#include <kcenter/kernels.hpp>

#include <cmath>

namespace kcenter {

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::non_finite: return "NonFiniteDistance";
    case Violation::Kind::negative_distance: return "NegativeDistance";
    case Violation::Kind::nonzero_diagonal: return "NonzeroDiagonal";
    case Violation::Kind::symmetry: return "SymmetryViolation";
    case Violation::Kind::triangle: return "TriangleViolation";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string text(to_string(kind));
  if (kind == Kind::triangle) {
    return text + "(" + std::to_string(p) + "," + std::to_string(s) + "," + std::to_string(q) +
           ")";
  }
  return text + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::optional<Violation> find_violation(const DistanceTable& table, Mode mode, double slack) {
  const std::size_t n = table.size();
  for (PointId p = 0; p < n; ++p) {
    for (PointId q = 0; q < n; ++q) {
      const double d = table(p, q);
      if (!std::isfinite(d)) return Violation{Violation::Kind::non_finite, p, 0, q};
      if (d < 0.0) return Violation{Violation::Kind::negative_distance, p, 0, q};
      if (p == q && d != 0.0) return Violation{Violation::Kind::nonzero_diagonal, p, 0, q};
      if (mode == Mode::symmetric && q > p && std::abs(d - table(q, p)) > slack) {
        return Violation{Violation::Kind::symmetry, p, 0, q};
      }
    }
  }
  for (PointId p = 0; p < n; ++p) {
    for (PointId s = 0; s < n; ++s) {
      const std::size_t q = kernels::first_exceeding(table.row(p), table.row(s), table(p, s) + slack);
      if (q < n) return Violation{Violation::Kind::triangle, p, s, q};
    }
  }
  return std::nullopt;
}

std::variant<Instance, Violation> validate_instance(DistanceTable table, Mode mode,
                                                    double slack) {
  if (auto violation = find_violation(table, mode, slack)) return *violation;
  return Instance(std::move(table), mode);
}

Instance Instance::from_table(DistanceTable table, Mode mode, double slack) {
  auto result = validate_instance(std::move(table), mode, slack);
  if (auto* violation = std::get_if<Violation>(&result)) {
    throw Error(ErrorCode::invalid_argument, "invalid instance: " + violation->describe());
  }
  return std::get<Instance>(std::move(result));
}

DistanceTable shortest_path_closure(DistanceTable table) {
  const std::size_t n = table.size();
  for (PointId s = 0; s < n; ++s) {
    for (PointId p = 0; p < n; ++p) {
      if (p == s) continue;
      kernels::min_plus_update(table.row(p), table.row(s), table(p, s));
    }
  }
  return table;
}

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t DisjointSets::find(std::size_t x) noexcept {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

}  // namespace kcenter
