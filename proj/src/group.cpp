#include "formations/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "closure_builder.hpp"

namespace formations {

using detail::ClosureBuilder;

namespace {

std::uint64_t fnv64(std::uint64_t h, std::uint64_t v) {
  h ^= v;
  h *= 1099511628211ULL;
  return h;
}

}  // namespace

PermGroup PermGroup::generate(std::vector<Permutation> gens, std::size_t cap) {
  if (gens.empty()) throw DomainError("generate needs at least one generator");
  const std::size_t deg = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != deg) throw DomainError("generators have mixed degrees");
  ClosureBuilder cb(deg);
  for (const Permutation& g : gens) cb.extend(g, cap);
  auto d = std::make_shared<Data>();
  d->degree = deg;
  d->gens = std::move(gens);
  d->elements = std::move(cb.elems);
  std::sort(d->elements.begin(), d->elements.end());
  return PermGroup(std::move(d));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->gens = {Permutation(degree)};
  d->elements = {Permutation(degree)};
  return PermGroup(std::move(d));
}

PermGroup PermGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw DomainError("empty element set");
  const std::size_t deg = elements.front().degree();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const Permutation& e : elements)
    if (e.degree() != deg) throw DomainError("elements have mixed degrees");
  ClosureBuilder cb(deg);
  try {
    for (const Permutation& e : elements) cb.extend(e, elements.size());
  } catch (const ElementCapExceeded&) {
    throw DomainError("element set is not closed under the group operation");
  }
  if (cb.elems.size() != elements.size())
    throw DomainError("element set is not closed under the group operation");
  auto d = std::make_shared<Data>();
  d->degree = deg;
  d->gens = cb.gens.empty() ? std::vector<Permutation>{Permutation(deg)} : std::move(cb.gens);
  d->elements = std::move(elements);
  return PermGroup(std::move(d));
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) return false;
  return std::binary_search(d_->elements.begin(), d_->elements.end(), p);
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(d_->elements.begin(), d_->elements.end(), p);
  if (it == d_->elements.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - d_->elements.begin());
}

bool PermGroup::contains_group(const PermGroup& h) const {
  if (h.degree() != degree() || h.order() > order()) return false;
  return std::includes(d_->elements.begin(), d_->elements.end(),
                       h.d_->elements.begin(), h.d_->elements.end());
}

bool PermGroup::same_elements(const PermGroup& h) const {
  return degree() == h.degree() && d_->elements == h.d_->elements;
}

bool PermGroup::is_normal_subgroup(const PermGroup& h) const {
  if (!contains_group(h)) return false;
  for (const Permutation& hg : h.generators())
    for (const Permutation& g : generators())
      if (!h.contains(conjugate(hg, g))) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  const auto& gs = generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
  return true;
}

std::uint64_t PermGroup::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  h = fnv64(h, degree());
  for (const Permutation& e : d_->elements)
    for (Point v : e.images()) h = fnv64(h, v);
  return h;
}

PermGroup join(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  if (a.degree() != b.degree()) throw DomainError("join of groups with mixed degrees");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup::generate(std::move(gens), cap);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw DomainError("intersection of groups with mixed degrees");
  std::vector<Permutation> common;
  std::set_intersection(a.elements().begin(), a.elements().end(),
                        b.elements().begin(), b.elements().end(),
                        std::back_inserter(common));
  return PermGroup::from_elements(std::move(common));
}

Permutation GroupHom::apply(const Permutation& g) const {
  if (identity_) return g;
  std::vector<Point> img(coset_reps_.size());
  for (std::size_t j = 0; j < coset_reps_.size(); ++j)
    img[j] = coset_of_.at(coset_reps_[j] * g);
  return Permutation::from_images(std::move(img));
}

PermGroup GroupHom::preimage(const PermGroup& sub) const {
  if (identity_) return sub;
  std::vector<Permutation> elems;
  for (const Permutation& g : source_.elements())
    if (sub.contains(apply(g))) elems.push_back(g);
  return PermGroup::from_elements(std::move(elems));
}

PermGroup GroupHom::image(const PermGroup& sub) const {
  if (identity_) return sub;
  std::vector<Permutation> elems;
  elems.reserve(sub.order());
  for (const Permutation& g : sub.elements()) elems.push_back(apply(g));
  return PermGroup::from_elements(std::move(elems));
}

std::pair<PermGroup, GroupHom> quotient(const PermGroup& g, const PermGroup& n) {
  if (!g.contains_group(n)) throw DomainError("quotient by a non-subgroup");
  if (!g.is_normal_subgroup(n)) throw DomainError("quotient by a non-normal subgroup");

  GroupHom hom;
  hom.source_ = g;
  hom.kernel_ = n;
  if (n.order() == 1) {
    hom.target_ = g;
    hom.identity_ = true;
    for (const Permutation& gen : g.generators()) hom.gen_images_.emplace_back(gen, gen);
    return {g, hom};
  }

  const std::size_t index = g.order() / n.order();
  if (index > 65535) throw SizeGuardExceeded("coset action degree over 65535");

  hom.coset_reps_.push_back(g.identity());
  hom.coset_of_.reserve(g.order() * 2);
  for (const Permutation& m : n.elements()) hom.coset_of_.emplace(m, Point{0});
  for (std::size_t r = 0; r < hom.coset_reps_.size(); ++r) {
    for (const Permutation& gen : g.generators()) {
      Permutation c = hom.coset_reps_[r] * gen;
      if (hom.coset_of_.count(c)) continue;
      const Point idx = static_cast<Point>(hom.coset_reps_.size());
      for (const Permutation& m : n.elements()) hom.coset_of_.emplace(m * c, idx);
      hom.coset_reps_.push_back(std::move(c));
    }
  }

  std::vector<Permutation> qgens;
  for (const Permutation& gen : g.generators()) {
    std::vector<Point> img(index);
    for (std::size_t j = 0; j < index; ++j)
      img[j] = hom.coset_of_.at(hom.coset_reps_[j] * gen);
    qgens.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup q = PermGroup::generate(qgens, index);
  if (q.order() != index)
    throw DomainError("coset action has unexpected kernel; quotient is inconsistent");
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    hom.gen_images_.emplace_back(g.generators()[i], qgens[i]);
  hom.target_ = q;
  return {q, hom};
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  const std::size_t expected = a.order() * b.order();
  if (expected > cap) throw ElementCapExceeded(cap, expected);
  const std::size_t da = a.degree();
  const std::size_t deg = da + b.degree();
  if (deg > 65535) throw SizeGuardExceeded("direct product degree over 65535");
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t x = 0; x < da; ++x) img[x] = g.apply(static_cast<Point>(x));
    for (std::size_t y = 0; y < b.degree(); ++y) img[da + y] = static_cast<Point>(da + y);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t x = 0; x < da; ++x) img[x] = static_cast<Point>(x);
    for (std::size_t y = 0; y < b.degree(); ++y)
      img[da + y] = static_cast<Point>(da + g.apply(static_cast<Point>(y)));
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup p = PermGroup::generate(std::move(gens), cap);
  if (p.order() != expected) throw DomainError("direct product closure mismatch");
  return p;
}

PermGroup semidirect_product(const PermGroup& a, const PermGroup& q,
                             const std::vector<Permutation>& action,
                             std::size_t size_guard, std::size_t cap) {
  const std::size_t na = a.order();
  const std::size_t expected = na * q.order();
  if (expected > size_guard)
    throw SizeGuardExceeded("semidirect product of order " + std::to_string(expected) +
                            " exceeds budget " + std::to_string(size_guard));
  if (expected > cap) throw ElementCapExceeded(cap, expected);
  if (action.size() != q.order())
    throw DomainError("action must assign an automorphism to every element of Q");
  for (const Permutation& al : action)
    if (al.degree() != na)
      throw DomainError("action entries must permute A's element list");

  const auto& ael = a.elements();
  auto mul_idx = [&](std::size_t i, std::size_t j) {
    auto k = a.index_of(ael[i] * ael[j]);
    if (!k) throw DomainError("A's element list is not closed");
    return *k;
  };
  const std::size_t id_a = *a.index_of(a.identity());
  for (const Permutation& al : action)
    if (al.apply(static_cast<Point>(id_a)) != id_a)
      throw DomainError("action is not by automorphisms (identity moved)");
  const std::size_t id_q = *q.index_of(q.identity());
  if (!action[id_q].is_identity())
    throw DomainError("action does not send 1 to the identity automorphism");

  // Homomorphism check on generator pairs.
  for (const Permutation& q1 : q.generators()) {
    for (const Permutation& q2 : q.generators()) {
      const std::size_t i1 = *q.index_of(q1), i2 = *q.index_of(q2);
      const std::size_t i12 = *q.index_of(q1 * q2);
      if (!(action[i12] == action[i1] * action[i2]))
        throw DomainError("action is not a homomorphism");
    }
  }
  // Spot-check the automorphism law on seeded random pairs.
  std::mt19937 rng(0x5eed0123u ^ static_cast<std::uint32_t>(expected));
  std::uniform_int_distribution<std::size_t> pick(0, na - 1);
  for (const Permutation& qg : q.generators()) {
    const Permutation& al = action[*q.index_of(qg)];
    const int samples = na <= 8 ? static_cast<int>(na * na) : 64;
    for (int s = 0; s < samples; ++s) {
      std::size_t i = pick(rng), j = pick(rng);
      if (na <= 8) {  // exhaustive for tiny A
        i = static_cast<std::size_t>(s) / na;
        j = static_cast<std::size_t>(s) % na;
      }
      if (al.apply(static_cast<Point>(mul_idx(i, j))) !=
          mul_idx(al.apply(static_cast<Point>(i)), al.apply(static_cast<Point>(j))))
        throw DomainError("action is not by automorphisms");
    }
  }

  // Points: A's element list, then Q's natural points (keeps the result
  // faithful even when Q acts with a kernel).
  const std::size_t deg = na + q.degree();
  if (deg > 65535) throw SizeGuardExceeded("semidirect product degree over 65535");
  std::vector<Permutation> gens;
  for (const Permutation& ag : a.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t x = 0; x < na; ++x) img[x] = static_cast<Point>(mul_idx(x, *a.index_of(ag)));
    for (std::size_t y = 0; y < q.degree(); ++y) img[na + y] = static_cast<Point>(na + y);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  for (const Permutation& qg : q.generators()) {
    const Permutation& al = action[*q.index_of(qg)];
    std::vector<Point> img(deg);
    for (std::size_t x = 0; x < na; ++x) img[x] = al.apply(static_cast<Point>(x));
    for (std::size_t y = 0; y < q.degree(); ++y)
      img[na + y] = static_cast<Point>(na + qg.apply(static_cast<Point>(y)));
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup t = PermGroup::generate(std::move(gens), expected);
  if (t.order() != expected)
    throw DomainError("semidirect closure mismatch; action is inconsistent");
  return t;
}

PermGroup wreath_regular(const PermGroup& a, const PermGroup& b, std::size_t cap) {
  const std::size_t nb = b.order();
  // |a|^|b| * |b|, watched for overflow against the cap.
  std::size_t expected = nb;
  for (std::size_t i = 0; i < nb; ++i) {
    if (expected > cap / std::max<std::size_t>(a.order(), 1) + 1) {
      expected = cap + 1;
      break;
    }
    expected *= a.order();
  }
  if (expected > cap) throw ElementCapExceeded(cap, expected);

  const std::size_t da = a.degree();
  const std::size_t deg = da * nb;
  if (deg == 0 || deg > 65535) throw SizeGuardExceeded("wreath product degree out of range");
  const std::size_t id_b = *b.index_of(b.identity());

  std::vector<Permutation> gens;
  // Copy of A in the block of B's identity.
  for (const Permutation& g : a.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t x = 0; x < deg; ++x) img[x] = static_cast<Point>(x);
    for (std::size_t x = 0; x < da; ++x)
      img[id_b * da + x] = static_cast<Point>(id_b * da + g.apply(static_cast<Point>(x)));
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  // B permutes the blocks by right translation on its own elements.
  for (const Permutation& g : b.generators()) {
    std::vector<Point> img(deg);
    for (std::size_t i = 0; i < nb; ++i) {
      const std::size_t j = *b.index_of(b.elements()[i] * g);
      for (std::size_t x = 0; x < da; ++x)
        img[i * da + x] = static_cast<Point>(j * da + x);
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup w = PermGroup::generate(std::move(gens), expected);
  if (w.order() != expected) throw DomainError("wreath closure mismatch");
  return w;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g) {
  const auto& el = g.elements();
  std::vector<bool> visited(el.size(), false);
  std::vector<std::vector<Permutation>> classes;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (visited[i]) continue;
    std::vector<std::size_t> queue{i};
    visited[i] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (const Permutation& gen : g.generators()) {
        Permutation c = conjugate(el[queue[k]], gen);
        const std::size_t idx = *g.index_of(c);
        if (!visited[idx]) {
          visited[idx] = true;
          queue.push_back(idx);
        }
      }
    }
    std::vector<Permutation> cls;
    cls.reserve(queue.size());
    for (std::size_t idx : queue) cls.push_back(el[idx]);
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const std::vector<Permutation>& x, const std::vector<Permutation>& y) {
                     const std::size_t ox = x.front().order(), oy = y.front().order();
                     if (ox != oy) return ox < oy;
                     return x.front() < y.front();
                   });
  return classes;
}

SectionGroup section_as_group(const Section& s, std::size_t cap) {
  if (!s.ambient.contains_group(s.top) || !s.top.contains_group(s.bottom))
    throw DomainError("section bounds are not nested subgroups");
  if (!s.top.is_normal_subgroup(s.bottom))
    throw DomainError("section bottom is not normal in its top");

  SectionGroup out;
  if (s.bottom.order() == 1) {
    out.direct_ = true;
    out.group_ = s.top;
    return out;
  }

  const std::size_t index = s.top.order() / s.bottom.order();
  if (index > cap) throw ElementCapExceeded(cap, index);
  if (index > 65535) throw SizeGuardExceeded("section degree over 65535");
  out.coset_reps_.push_back(s.top.identity());
  for (const Permutation& m : s.bottom.elements()) out.coset_of_.emplace(m, Point{0});
  for (std::size_t r = 0; r < out.coset_reps_.size(); ++r) {
    for (const Permutation& gen : s.top.generators()) {
      Permutation c = out.coset_reps_[r] * gen;
      if (out.coset_of_.count(c)) continue;
      const Point idx = static_cast<Point>(out.coset_reps_.size());
      for (const Permutation& m : s.bottom.elements()) out.coset_of_.emplace(m * c, idx);
      out.coset_reps_.push_back(std::move(c));
    }
  }
  std::vector<Permutation> gens;
  for (const Permutation& gen : s.top.generators()) {
    std::vector<Point> img(index);
    for (std::size_t j = 0; j < index; ++j)
      img[j] = out.coset_of_.at(out.coset_reps_[j] * gen);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  out.group_ = PermGroup::generate(std::move(gens), index);
  if (out.group_.order() != index)
    throw DomainError("section action has unexpected kernel");
  return out;
}

Permutation SectionGroup::image_of(const Permutation& h) const {
  if (direct_) return h;
  std::vector<Point> img(coset_reps_.size());
  for (std::size_t j = 0; j < coset_reps_.size(); ++j)
    img[j] = coset_of_.at(coset_reps_[j] * h);
  return Permutation::from_images(std::move(img));
}

Permutation SectionGroup::conjugation_on_elements(const Permutation& g) const {
  const auto& el = group_.elements();
  std::vector<Point> img(el.size());
  if (direct_) {
    for (std::size_t i = 0; i < el.size(); ++i) {
      auto idx = group_.index_of(conjugate(el[i], g));
      if (!idx) throw DomainError("conjugation does not normalize the section");
      img[i] = static_cast<Point>(*idx);
    }
    return Permutation::from_images(std::move(img));
  }
  // Point permutation induced on the coset space, then conjugate each
  // element of the factor by it.
  std::vector<Point> pimg(coset_reps_.size());
  for (std::size_t j = 0; j < coset_reps_.size(); ++j)
    pimg[j] = coset_of_.at(conjugate(coset_reps_[j], g));
  Permutation pi = Permutation::from_images(std::move(pimg));
  for (std::size_t i = 0; i < el.size(); ++i) {
    auto idx = group_.index_of(conjugate(el[i], pi));
    if (!idx) throw DomainError("conjugation does not normalize the section");
    img[i] = static_cast<Point>(*idx);
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace formations
