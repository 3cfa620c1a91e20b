// Resource budgets threaded through every potentially expensive computation.
#pragma once

#include <cstddef>

namespace formations {

struct Budgets {
  // Hard cap on element enumeration for any single group.
  std::size_t element_cap = 200000;
  // Largest group order for which exhaustive subgroup enumeration runs.
  std::size_t subgroup_order_budget = 2000;
  // Largest |A|*|Q| for which a centrality test builds the semidirect
  // product explicitly; above this the class's shortcut rule is used.
  std::size_t semidirect_budget = 50000;
};

}  // namespace formations
