// Structural computations over enumerated groups: centers and the classical
// series, the normal-subgroup lattice, socle and radicals, chief series,
// centralizers of sections, full subgroup enumeration, and splitting
// characteristically simple factors into simple pieces.
#pragma once

#include <cstdint>
#include <vector>

#include "formations/group.hpp"
#include "formations/simple_table.hpp"

namespace formations {

PermGroup center(const PermGroup& g);

// Elements commuting with every generator of h modulo k, i.e.
// {g in G : [g, h_gen] in K for all generators h_gen of H}.
PermGroup centralizer_of_section(const PermGroup& g, const Section& s);

// Smallest normal subgroup of g containing all of `seeds`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds);

// Descending: G >= G' >= G'' >= ..., ending at the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& g);
// Descending: G >= [G,G] >= [[G,G],G] >= ..., ending at the first repeat.
std::vector<PermGroup> lower_central_series(const PermGroup& g);
// Ascending: 1 <= Z(G) <= Z2(G) <= ..., ending at the stable term.
std::vector<PermGroup> upper_central_series(const PermGroup& g);

bool is_soluble(const PermGroup& g);
bool is_nilpotent(const PermGroup& g);
// True when every chief factor has prime order.
bool is_supersoluble(const PermGroup& g);

// The full normal-subgroup lattice: closure of the normal closures of single
// conjugacy classes under pairwise join and intersection. Sorted by
// (order, element list); always contains the trivial group and g.
std::vector<PermGroup> normal_subgroups(const PermGroup& g);

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);
PermGroup socle(const PermGroup& g);
// Largest soluble normal subgroup.
PermGroup soluble_radical(const PermGroup& g);
bool is_simple(const PermGroup& g);

// Normal subgroups m of g with n < m and nothing normal strictly between;
// these are the preimages of the minimal normal subgroups of g/n.
std::vector<PermGroup> minimal_normals_above(const PermGroup& g, const PermGroup& n);

struct ChiefSeries {
  PermGroup ambient{PermGroup::trivial(1)};
  std::vector<PermGroup> terms;  // ascending, terms.front() trivial, terms.back() == ambient
  std::size_t factor_count() const { return terms.empty() ? 0 : terms.size() - 1; }
  Section factor(std::size_t i) const { return Section{ambient, terms[i + 1], terms[i]}; }
};

// Bottom-up: each term is a minimal normal subgroup of g above the previous
// term. Deterministic tie-break: lexicographically least element list.
ChiefSeries chief_series(const PermGroup& g);
// Same construction with seeded-random choices, for order-invariance tests.
ChiefSeries chief_series_seeded(const PermGroup& g, std::uint64_t seed);
// Forces the series to pass through the given normal subgroups (ascending
// chain, each normal in g). Deterministic tie-break within each leg.
ChiefSeries chief_series_through(const PermGroup& g, const std::vector<PermGroup>& waypoints);

struct CharSimpleParts {
  bool abelian = false;
  std::size_t prime = 0;         // abelian case: factor is elementary abelian prime^multiplicity
  std::size_t multiplicity = 0;  // number of simple pieces in either case
  std::vector<SimpleType> types;
  std::vector<PermGroup> factors;  // non-abelian case: the simple direct factors
};

// Splits a chief factor into its simple pieces. Throws DomainError when the
// section group is not characteristically simple (upstream bug).
CharSimpleParts decompose_char_simple(const Section& s);

// Multiplication by precomputed index table; feasible for modest orders.
class IndexedGroup {
 public:
  explicit IndexedGroup(const PermGroup& g);
  const PermGroup& group() const { return g_; }
  std::size_t order() const { return n_; }
  std::uint16_t mul(std::uint16_t i, std::uint16_t j) const { return table_[i * n_ + j]; }
  std::uint16_t inv(std::uint16_t i) const { return inv_[i]; }
  std::uint16_t identity_index() const { return id_; }

 private:
  PermGroup g_;
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  std::uint16_t id_ = 0;
};

// Element-index bitsets over a fixed ambient group.
using Bits = std::vector<std::uint64_t>;
bool bits_subset(const Bits& a, const Bits& b);
std::size_t bits_count(const Bits& a);

struct SubgroupCatalog {
  PermGroup ambient{PermGroup::trivial(1)};
  std::vector<PermGroup> subgroups;  // sorted by (order, element list)
  std::vector<Bits> member_bits;     // bit i set <=> ambient.elements()[i] in subgroup
  std::vector<std::vector<std::size_t>> conj_classes;  // orbits under ambient conjugation
  std::vector<std::size_t> conj_class_of;
};

// Every subgroup of g, by iterated extension of known subgroups with cyclic
// generators. Throws SubgroupBudgetExceeded when |g| > budget.
SubgroupCatalog subgroup_catalog(const PermGroup& g,
                                 std::size_t budget = Budgets{}.subgroup_order_budget);
std::vector<PermGroup> all_subgroups(const PermGroup& g,
                                     std::size_t budget = Budgets{}.subgroup_order_budget);

}  // namespace formations
