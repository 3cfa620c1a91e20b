// Finite permutation groups with fully enumerated element sets, plus the
// constructions used everywhere else: quotients, direct and semidirect
// products, regular wreath products, conjugacy classes, and sections.
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "formations/config.hpp"
#include "formations/perm.hpp"

namespace formations {

// Immutable. Copies share the underlying element storage.
class PermGroup {
 public:
  // BFS closure of `gens`. Throws ElementCapExceeded if the closure grows
  // past `cap`.
  static PermGroup generate(std::vector<Permutation> gens,
                            std::size_t cap = Budgets{}.element_cap);

  static PermGroup trivial(std::size_t degree);

  // Wraps an already-closed element set. The caller guarantees closure;
  // a small generating set is derived internally.
  static PermGroup from_elements(std::vector<Permutation> elements);

  std::size_t degree() const { return d_->degree; }
  std::size_t order() const { return d_->elements.size(); }
  bool is_trivial() const { return order() == 1; }
  const std::vector<Permutation>& generators() const { return d_->gens; }
  // Sorted lexicographically by image vector.
  const std::vector<Permutation>& elements() const { return d_->elements; }
  Permutation identity() const { return Permutation(degree()); }

  bool contains(const Permutation& p) const;
  // Index into elements(), or nullopt.
  std::optional<std::size_t> index_of(const Permutation& p) const;

  // True when every element of `h` lies in this group (degrees must match).
  bool contains_group(const PermGroup& h) const;
  bool same_elements(const PermGroup& h) const;
  // Requires h to be a subgroup of this group.
  bool is_normal_subgroup(const PermGroup& h) const;

  bool is_abelian() const;

  // Stable 64-bit digest of (degree, element set); used for dedup maps.
  std::uint64_t fingerprint() const;

 private:
  struct Data {
    std::size_t degree = 1;
    std::vector<Permutation> gens;
    std::vector<Permutation> elements;
  };
  explicit PermGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Subgroup of the same degree generated by the union of a.generators() and
// b.generators().
PermGroup join(const PermGroup& a, const PermGroup& b, std::size_t cap = Budgets{}.element_cap);
// Set intersection of two subgroups of a common ambient group.
PermGroup intersection(const PermGroup& a, const PermGroup& b);

// Homomorphism with an evaluator for arbitrary source elements. Produced by
// quotient(); identity homs are used for the trivial-kernel case.
class GroupHom {
 public:
  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const PermGroup& kernel() const { return kernel_; }
  const std::vector<std::pair<Permutation, Permutation>>& generator_images() const {
    return gen_images_;
  }

  // g must lie in source().
  Permutation apply(const Permutation& g) const;
  // Elements of source mapping into `sub` (a subgroup of target).
  PermGroup preimage(const PermGroup& sub) const;
  // Image of a subgroup of source.
  PermGroup image(const PermGroup& sub) const;

  // True for the trivial-kernel case, where apply() is the identity map.
  bool is_identity() const { return identity_; }
  // One source element per coset point, indexed by coset label. Empty for
  // identity homs. apply() restricted to these is a bijection onto target().
  const std::vector<Permutation>& coset_representatives() const { return coset_reps_; }

 private:
  friend std::pair<PermGroup, GroupHom> quotient(const PermGroup&, const PermGroup&);
  GroupHom() = default;
  PermGroup source_{PermGroup::trivial(1)};
  PermGroup target_{PermGroup::trivial(1)};
  PermGroup kernel_{PermGroup::trivial(1)};
  std::vector<std::pair<Permutation, Permutation>> gen_images_;
  bool identity_ = false;
  // Right-coset labelling for coset-action homs.
  std::vector<Permutation> coset_reps_;
  std::unordered_map<Permutation, Point, PermHash> coset_of_;
};

// Action of g on the right cosets of n. For the trivial kernel the group
// itself is returned with an identity hom (isomorphic image, same degree);
// otherwise the image acts on [g : n] points. Throws DomainError if n is not
// a normal subgroup of g.
std::pair<PermGroup, GroupHom> quotient(const PermGroup& g, const PermGroup& n);

// On disjoint point sets; degree is the sum of degrees.
PermGroup direct_product(const PermGroup& a, const PermGroup& b,
                         std::size_t cap = Budgets{}.element_cap);

// Semidirect product A x| Q. `action` maps each element of Q (by its index
// in q.elements()) to an automorphism of A written as a permutation of A's
// element list. The element (a, q) sends an A-element x to action(q)(x * a).
// The result also carries Q's natural action on a separate block so it is
// always faithful of order |A| * |Q|. The action map is validated as a
// homomorphism on generators and spot-checked on seeded random pairs.
// Throws SizeGuardExceeded when |A| * |Q| exceeds `size_guard`.
PermGroup semidirect_product(const PermGroup& a, const PermGroup& q,
                             const std::vector<Permutation>& action,
                             std::size_t size_guard = Budgets{}.semidirect_budget,
                             std::size_t cap = Budgets{}.element_cap);

// Regular wreath product: base a^|b| with b permuting the copies by right
// translation. Degree deg(a) * |b|, order |a|^|b| * |b|.
PermGroup wreath_regular(const PermGroup& a, const PermGroup& b,
                         std::size_t cap = Budgets{}.element_cap);

// Classes sorted internally and ordered by the common element order of the
// class, ties broken by least element; the identity class comes first.
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g);

struct Section {
  PermGroup ambient;
  PermGroup top;     // H
  PermGroup bottom;  // K, normal in H
  std::size_t factor_order() const { return top.order() / bottom.order(); }
};

// H/K realized as a permutation group, with enough labelling to translate
// conjugation in the ambient group into automorphisms of the factor.
class SectionGroup {
 public:
  const PermGroup& group() const { return group_; }
  // Image of h (an element of the top group) in group().
  Permutation image_of(const Permutation& h) const;
  // The automorphism of group() induced by conjugation with g (an ambient
  // element normalizing both top and bottom), as a permutation of
  // group().elements() indices.
  Permutation conjugation_on_elements(const Permutation& g) const;

 private:
  friend SectionGroup section_as_group(const Section& s, std::size_t cap);
  SectionGroup() : group_(PermGroup::trivial(1)) {}
  PermGroup group_;
  bool direct_ = false;  // bottom is trivial: group_ is the top group itself
  std::vector<Permutation> coset_reps_;
  std::unordered_map<Permutation, Point, PermHash> coset_of_;
};

// Realizes s.top / s.bottom on the right cosets of s.bottom in s.top.
// When s.bottom is trivial the top group itself is returned (natural
// degree). Throws DomainError if s.bottom is not normal in s.top.
SectionGroup section_as_group(const Section& s, std::size_t cap = Budgets{}.element_cap);

}  // namespace formations
