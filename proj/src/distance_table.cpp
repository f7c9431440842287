#include <kcenter/types.hpp>

#include <algorithm>

namespace kcenter {

DistanceTable::DistanceTable(std::size_t n, double fill) : n_(n), data_(n * n, fill) {}

DistanceTable DistanceTable::from_rows(const std::vector<std::vector<double>>& rows) {
  DistanceTable table(rows.size());
  for (std::size_t p = 0; p < rows.size(); ++p) {
    if (rows[p].size() != rows.size()) {
      throw Error(ErrorCode::invalid_argument,
                  "distance table is not square: row " + std::to_string(p) + " has " +
                      std::to_string(rows[p].size()) + " entries, expected " +
                      std::to_string(rows.size()));
    }
    std::copy(rows[p].begin(), rows[p].end(), table.row(p).begin());
  }
  return table;
}

double DistanceTable::max_entry() const noexcept {
  if (data_.empty()) return 0.0;
  return *std::max_element(data_.begin(), data_.end());
}

}  // namespace kcenter
