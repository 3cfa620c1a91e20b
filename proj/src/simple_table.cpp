#include "formations/simple_table.hpp"

#include <algorithm>

#include "formations/smallmath.hpp"

namespace formations {

const std::vector<SimpleType>& simple_group_table() {
  static const std::vector<SimpleType> table = {
      {"A5", 60, 2, true, false},
      {"PSL(2,7)", 168, 2, true, false},
      {"A6", 360, 4, true, false},
      {"PSL(2,8)", 504, 3, true, false},
      {"PSL(2,11)", 660, 2, true, false},
      {"PSL(2,13)", 1092, 2, true, false},
      {"PSL(2,17)", 2448, 2, true, false},
      {"A7", 2520, 2, true, false},
      {"PSL(2,19)", 3420, 2, true, false},
      {"PSL(2,16)", 4080, 4, true, false},
      {"PSL(3,3)", 5616, 2, true, false},
      {"PSU(3,3)", 6048, 2, true, false},
      {"PSL(2,23)", 6072, 2, true, false},
      {"PSL(2,25)", 7800, 4, true, false},
      {"M11", 7920, 1, true, false},
      {"PSL(2,27)", 9828, 6, true, false},
      {"PSL(2,29)", 12180, 2, true, false},
      {"PSL(2,31)", 14880, 2, true, false},
      {"A8", 20160, 2, true, false},
      {"PSL(3,4)", 20160, 12, false, false},
      {"PSL(2,37)", 25308, 2, true, false},
      {"PSU(4,2)", 25920, 2, true, false},
      {"Sz(8)", 29120, 3, true, false},
      {"PSL(2,32)", 32736, 5, true, false},
      {"PSL(2,41)", 34440, 2, true, false},
      {"PSL(2,43)", 39732, 2, true, false},
  };
  return table;
}

SimpleType identify_simple(const PermGroup& g) {
  const std::size_t n = g.order();
  if (is_prime(n)) {
    SimpleType t;
    t.name = "C" + std::to_string(n);
    t.order = n;
    t.out_order = n - 1;       // Aut(Cp) is cyclic of order p-1
    t.out_is_nilpotent = true;
    t.abelian = true;
    return t;
  }
  if (g.is_abelian()) throw DomainError("abelian group of composite order is not simple");

  const auto& table = simple_group_table();
  const SimpleType* hit = nullptr;
  bool ambiguous = false;
  for (const SimpleType& row : table) {
    if (row.order != n) continue;
    if (hit) ambiguous = true;
    hit = &row;
  }
  if (!hit) throw UnknownSimpleOrder(n);
  if (!ambiguous) return *hit;

  // Order 20160: A8 contains elements of order 15, PSL(3,4) tops out at 7.
  bool has15 = false;
  for (const Permutation& e : g.elements())
    if (e.order() == 15) {
      has15 = true;
      break;
    }
  const std::string want = has15 ? "A8" : "PSL(3,4)";
  auto it = std::find_if(table.begin(), table.end(),
                         [&](const SimpleType& r) { return r.name == want; });
  return *it;
}

}  // namespace formations
