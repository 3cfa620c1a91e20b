// Internal: incremental group closure shared by group.cpp and structure.cpp.
#pragma once

#include <unordered_set>
#include <vector>

#include "formations/errors.hpp"
#include "formations/perm.hpp"

namespace formations::detail {

// `elems` stays a subgroup after every extend(); new elements are filled in
// coset by coset, so the total cost is close to one multiplication per
// element of the final group.
struct ClosureBuilder {
  std::vector<Permutation> elems;
  std::unordered_set<Permutation, PermHash> set;
  std::vector<Permutation> gens;

  explicit ClosureBuilder(std::size_t degree) {
    Permutation id(degree);
    elems.push_back(id);
    set.insert(id);
  }

  bool contains(const Permutation& p) const { return set.count(p) != 0; }

  void extend(const Permutation& g, std::size_t cap) {
    if (contains(g)) return;
    gens.push_back(g);
    const std::size_t h = elems.size();  // |old subgroup|; elems[0..h) stays fixed
    std::vector<Permutation> reps;
    reps.push_back(Permutation(g.degree()));
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (const Permutation& t : gens) {
        Permutation c = reps[r] * t;
        if (set.count(c)) continue;
        for (std::size_t k = 0; k < h; ++k) {
          Permutation x = elems[k] * c;
          set.insert(x);
          elems.push_back(std::move(x));
        }
        if (elems.size() > cap) throw ElementCapExceeded(cap, elems.size());
        reps.push_back(std::move(c));
      }
    }
  }
};

}  // namespace formations::detail
