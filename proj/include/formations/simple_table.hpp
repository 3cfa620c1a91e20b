// Built-in catalogue of the non-abelian finite simple groups of order at
// most 50000, with the order and nilpotency of their outer automorphism
// groups, plus order-based identification of simple groups.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "formations/group.hpp"

namespace formations {

struct SimpleType {
  std::string name;
  std::size_t order = 0;
  std::size_t out_order = 1;
  bool out_is_nilpotent = true;
  bool abelian = false;  // prime-order cyclic; synthesized, not a table row
};

// All 26 table rows, ascending by order. Order determines the group except
// at 20160, which occurs twice (A8 and PSL(3,4)).
const std::vector<SimpleType>& simple_group_table();

// G must be simple. Prime order gives a synthesized cyclic row; otherwise
// the order is looked up in the table. The 20160 ambiguity is settled by
// element orders: A8 has an element of order 15, PSL(3,4) does not.
// Throws UnknownSimpleOrder for composite orders missing from the table.
SimpleType identify_simple(const PermGroup& g);

}  // namespace formations
