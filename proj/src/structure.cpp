#include "formations/structure.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "closure_builder.hpp"
#include "formations/smallmath.hpp"

namespace formations {

using detail::ClosureBuilder;

PermGroup center(const PermGroup& g) {
  std::vector<Permutation> elems;
  for (const Permutation& x : g.elements()) {
    bool central = true;
    for (const Permutation& gen : g.generators())
      if (!(x * gen == gen * x)) {
        central = false;
        break;
      }
    if (central) elems.push_back(x);
  }
  return PermGroup::from_elements(std::move(elems));
}

PermGroup centralizer_of_section(const PermGroup& g, const Section& s) {
  std::vector<Permutation> elems;
  for (const Permutation& x : g.elements()) {
    bool fixes = true;
    for (const Permutation& h : s.top.generators())
      if (!s.bottom.contains(commutator(x, h))) {
        fixes = false;
        break;
      }
    if (fixes) elems.push_back(x);
  }
  return PermGroup::from_elements(std::move(elems));
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds) {
  ClosureBuilder cb(g.degree());
  std::vector<Permutation> pending = seeds;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    cb.extend(pending[i], g.order());
    for (const Permutation& gen : g.generators()) {
      Permutation c = conjugate(pending[i], gen);
      if (!cb.contains(c)) pending.push_back(std::move(c));
    }
  }
  return PermGroup::from_elements(std::move(cb.elems));
}

namespace {

// [h, g] as a subgroup of g, for h normal in g: the normal closure of the
// generator commutators.
PermGroup commutator_with_group(const PermGroup& g, const PermGroup& h) {
  std::vector<Permutation> seeds;
  for (const Permutation& a : h.generators())
    for (const Permutation& b : g.generators()) seeds.push_back(commutator(a, b));
  return normal_closure(g, seeds);
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> seeds;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      seeds.push_back(commutator(gs[i], gs[j]));
  if (seeds.empty()) seeds.push_back(g.identity());
  return normal_closure(g, seeds);
}

}  // namespace

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = derived_subgroup(series.back());
    if (next.same_elements(series.back())) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = commutator_with_group(g, series.back());
    if (next.same_elements(series.back())) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<PermGroup> upper_central_series(const PermGroup& g) {
  std::vector<PermGroup> series{PermGroup::trivial(g.degree())};
  for (;;) {
    const PermGroup& z = series.back();
    std::vector<Permutation> elems;
    for (const Permutation& x : g.elements()) {
      bool central = true;
      for (const Permutation& gen : g.generators())
        if (!z.contains(commutator(x, gen))) {
          central = false;
          break;
        }
      if (central) elems.push_back(x);
    }
    PermGroup next = PermGroup::from_elements(std::move(elems));
    if (next.same_elements(z)) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_soluble(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(const PermGroup& g) {
  return lower_central_series(g).back().is_trivial();
}

bool is_supersoluble(const PermGroup& g) {
  if (g.is_trivial()) return true;
  if (!is_soluble(g)) return false;
  ChiefSeries cs = chief_series(g);
  for (std::size_t i = 0; i < cs.factor_count(); ++i)
    if (!is_prime(cs.factor(i).factor_order())) return false;
  return true;
}

namespace {

struct GroupListDedup {
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_print;
  std::vector<PermGroup>* list;

  explicit GroupListDedup(std::vector<PermGroup>* l) : list(l) {}

  // Returns true when h was new and appended.
  bool add(PermGroup h) {
    auto& bucket = by_print[h.fingerprint()];
    for (std::size_t idx : bucket)
      if ((*list)[idx].same_elements(h)) return false;
    bucket.push_back(list->size());
    list->push_back(std::move(h));
    return true;
  }
};

void sort_group_list(std::vector<PermGroup>& list) {
  std::sort(list.begin(), list.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
}

}  // namespace

std::vector<PermGroup> normal_subgroups(const PermGroup& g) {
  std::vector<PermGroup> list;
  GroupListDedup dedup(&list);
  dedup.add(PermGroup::trivial(g.degree()));
  for (const auto& cls : conjugacy_classes(g)) dedup.add(normal_closure(g, {cls.front()}));

  // Close under pairwise joins and intersections.
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (list[i].contains_group(list[j]) || list[j].contains_group(list[i])) continue;
      dedup.add(join(list[i], list[j], g.order()));
      dedup.add(intersection(list[i], list[j]));
    }
  }
  sort_group_list(list);
  return list;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  return minimal_normals_above(g, PermGroup::trivial(g.degree()));
}

PermGroup socle(const PermGroup& g) {
  PermGroup s = PermGroup::trivial(g.degree());
  for (const PermGroup& m : minimal_normal_subgroups(g)) s = join(s, m, g.order());
  return s;
}

PermGroup soluble_radical(const PermGroup& g) {
  PermGroup rad = PermGroup::trivial(g.degree());
  for (const PermGroup& n : normal_subgroups(g))
    if (is_soluble(n)) rad = join(rad, n, g.order());
  return rad;
}

bool is_simple(const PermGroup& g) {
  return !g.is_trivial() && normal_subgroups(g).size() == 2;
}

std::vector<PermGroup> minimal_normals_above(const PermGroup& g, const PermGroup& n) {
  if (!g.is_normal_subgroup(n))
    throw DomainError("base of minimal_normals_above must be normal");
  std::vector<PermGroup> cands;
  GroupListDedup dedup(&cands);
  for (const auto& cls : conjugacy_classes(g)) {
    if (n.contains(cls.front())) continue;
    std::vector<Permutation> seeds = n.generators();
    seeds.push_back(cls.front());
    dedup.add(normal_closure(g, seeds));
  }
  std::vector<PermGroup> minimal;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < cands.size(); ++j)
      if (j != i && cands[i].contains_group(cands[j]) && !cands[i].same_elements(cands[j])) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(cands[i]);
  }
  sort_group_list(minimal);
  return minimal;
}

namespace {

ChiefSeries build_chief_series(const PermGroup& g,
                               const std::vector<PermGroup>& waypoints,
                               std::mt19937_64* rng) {
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    if (!g.is_normal_subgroup(waypoints[i]))
      throw DomainError("chief series waypoint is not a normal subgroup");
    if (i > 0 && !waypoints[i].contains_group(waypoints[i - 1]))
      throw DomainError("chief series waypoints are not an ascending chain");
  }
  ChiefSeries cs;
  cs.ambient = g;
  cs.terms.push_back(PermGroup::trivial(g.degree()));
  while (!cs.terms.back().same_elements(g)) {
    const PermGroup& cur = cs.terms.back();
    const PermGroup* target = &g;
    for (const PermGroup& w : waypoints)
      if (w.order() > cur.order() && w.contains_group(cur)) {
        target = &w;
        break;
      }
    std::vector<PermGroup> cands = minimal_normals_above(g, cur);
    if (target != &g) {
      std::vector<PermGroup> inside;
      for (PermGroup& c : cands)
        if (target->contains_group(c)) inside.push_back(std::move(c));
      cands = std::move(inside);
    }
    if (cands.empty())
      throw DomainError("no chief step toward waypoint; waypoint chain is inconsistent");
    std::size_t pick = 0;
    if (rng) pick = (*rng)() % cands.size();
    cs.terms.push_back(cands[pick]);
  }
  return cs;
}

}  // namespace

ChiefSeries chief_series(const PermGroup& g) { return build_chief_series(g, {}, nullptr); }

ChiefSeries chief_series_seeded(const PermGroup& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return build_chief_series(g, {}, &rng);
}

ChiefSeries chief_series_through(const PermGroup& g, const std::vector<PermGroup>& waypoints) {
  return build_chief_series(g, waypoints, nullptr);
}

CharSimpleParts decompose_char_simple(const Section& s) {
  SectionGroup sec = section_as_group(s);
  const PermGroup& m = sec.group();
  CharSimpleParts parts;
  if (m.is_trivial()) throw DomainError("trivial section is not characteristically simple");

  if (m.is_abelian()) {
    auto pk = prime_power(m.order());
    if (!pk) throw DomainError("abelian chief factor is not of prime power order");
    for (const Permutation& e : m.elements())
      if (!e.is_identity() && e.order() != pk->first)
        throw DomainError("abelian chief factor is not elementary abelian");
    parts.abelian = true;
    parts.prime = pk->first;
    parts.multiplicity = pk->second;
    SimpleType t;
    t.name = "C" + std::to_string(parts.prime);
    t.order = parts.prime;
    t.out_order = parts.prime - 1;
    t.out_is_nilpotent = true;
    t.abelian = true;
    parts.types.assign(parts.multiplicity, t);
    return parts;
  }

  std::vector<PermGroup> mins = minimal_normal_subgroups(m);
  std::size_t prod = 1;
  for (const PermGroup& f : mins) {
    if (f.order() != mins.front().order() || is_soluble(f) || !is_simple(f))
      throw DomainError("section is not characteristically simple");
    prod *= f.order();
  }
  if (prod != m.order()) throw DomainError("section is not characteristically simple");
  parts.abelian = false;
  parts.multiplicity = mins.size();
  for (const PermGroup& f : mins) parts.types.push_back(identify_simple(f));
  parts.factors = std::move(mins);
  return parts;
}

IndexedGroup::IndexedGroup(const PermGroup& g) : g_(g), n_(g.order()) {
  if (n_ > 65535) throw DomainError("group too large for index tables");
  table_.resize(n_ * n_);
  inv_.resize(n_);
  const auto& el = g.elements();
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      auto k = g.index_of(el[i] * el[j]);
      table_[i * n_ + j] = static_cast<std::uint16_t>(*k);
    }
  }
  id_ = static_cast<std::uint16_t>(*g.index_of(g.identity()));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (table_[i * n_ + j] == id_) {
        inv_[i] = static_cast<std::uint16_t>(j);
        break;
      }
}

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

std::size_t bits_count(const Bits& a) {
  std::size_t c = 0;
  for (std::uint64_t w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

namespace {

struct RawSubgroup {
  std::vector<std::uint16_t> elems;  // ascending element indices
  Bits bits;
};

std::uint64_t bits_hash(const Bits& b) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : b) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return h;
}

// K = <H, g> by filling right cosets of H inside the multiplication table.
RawSubgroup extend_subgroup(const IndexedGroup& ig, const RawSubgroup& h, std::uint16_t gi) {
  RawSubgroup k = h;
  std::vector<std::uint16_t> reps{gi};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const std::uint16_t rep = reps[r];
    if (k.bits[rep >> 6] & (1ULL << (rep & 63))) continue;
    for (std::uint16_t he : h.elems) {
      const std::uint16_t x = ig.mul(he, rep);
      k.bits[x >> 6] |= 1ULL << (x & 63);
      k.elems.push_back(x);
    }
    for (std::uint16_t he : h.elems) reps.push_back(ig.mul(rep, he));
    reps.push_back(ig.mul(rep, gi));
  }
  std::sort(k.elems.begin(), k.elems.end());
  return k;
}

}  // namespace

SubgroupCatalog subgroup_catalog(const PermGroup& g, std::size_t budget) {
  if (g.order() > budget)
    throw SubgroupBudgetExceeded("subgroup enumeration needs order " +
                                 std::to_string(g.order()) + " <= budget " +
                                 std::to_string(budget));
  const IndexedGroup ig(g);
  const std::size_t n = ig.order();
  const std::size_t words = (n + 63) / 64;
  const std::uint16_t id = ig.identity_index();

  auto set_bit = [](Bits& b, std::uint16_t i) { b[i >> 6] |= 1ULL << (i & 63); };
  auto has_bit = [](const Bits& b, std::uint16_t i) {
    return (b[i >> 6] >> (i & 63)) & 1ULL;
  };

  // Distinct cyclic subgroups, each remembered with one generator.
  std::vector<std::pair<std::uint16_t, RawSubgroup>> seeds;
  {
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    for (std::size_t e = 0; e < n; ++e) {
      if (e == id) continue;
      RawSubgroup c;
      c.bits.assign(words, 0);
      std::uint16_t x = id;
      do {
        set_bit(c.bits, x);
        c.elems.push_back(x);
        x = ig.mul(x, static_cast<std::uint16_t>(e));
      } while (x != id);
      std::sort(c.elems.begin(), c.elems.end());
      auto& bucket = seen[bits_hash(c.bits)];
      bool dup = false;
      for (std::size_t s : bucket)
        if (seeds[s].second.bits == c.bits) {
          dup = true;
          break;
        }
      if (dup) continue;
      bucket.push_back(seeds.size());
      seeds.emplace_back(static_cast<std::uint16_t>(e), std::move(c));
    }
  }

  std::vector<RawSubgroup> subs;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> index;
  auto add_sub = [&](RawSubgroup s) -> bool {
    auto& bucket = index[bits_hash(s.bits)];
    for (std::size_t i : bucket)
      if (subs[i].bits == s.bits) return false;
    bucket.push_back(subs.size());
    subs.push_back(std::move(s));
    return true;
  };

  {
    RawSubgroup triv;
    triv.bits.assign(words, 0);
    set_bit(triv.bits, id);
    triv.elems.push_back(id);
    add_sub(std::move(triv));
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const auto& [gi, seed] : seeds) {
      if (has_bit(subs[i].bits, gi)) continue;
      RawSubgroup k = extend_subgroup(ig, subs[i], gi);
      add_sub(std::move(k));
    }
  }

  // Deterministic order before conjugacy bookkeeping.
  std::sort(subs.begin(), subs.end(), [](const RawSubgroup& a, const RawSubgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  index.clear();
  for (std::size_t i = 0; i < subs.size(); ++i) index[bits_hash(subs[i].bits)].push_back(i);
  auto find_sub = [&](const Bits& b) -> std::size_t {
    for (std::size_t i : index[bits_hash(b)])
      if (subs[i].bits == b) return i;
    throw DomainError("conjugate subgroup missing from catalog");
  };

  SubgroupCatalog cat;
  cat.ambient = g;

  // Conjugation orbits on subgroups.
  std::vector<std::vector<std::uint16_t>> conj_map;
  for (const Permutation& gen : g.generators()) {
    std::vector<std::uint16_t> m(n);
    const std::uint16_t gidx = static_cast<std::uint16_t>(*g.index_of(gen));
    const std::uint16_t ginv = ig.inv(gidx);
    for (std::size_t i = 0; i < n; ++i)
      m[i] = ig.mul(ig.mul(ginv, static_cast<std::uint16_t>(i)), gidx);
    conj_map.push_back(std::move(m));
  }
  cat.conj_class_of.assign(subs.size(), subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cat.conj_class_of[i] != subs.size()) continue;
    const std::size_t cls = cat.conj_classes.size();
    std::vector<std::size_t> orbit{i};
    cat.conj_class_of[i] = cls;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (const auto& m : conj_map) {
        Bits b(words, 0);
        for (std::uint16_t e : subs[orbit[q]].elems) set_bit(b, m[e]);
        const std::size_t j = find_sub(b);
        if (cat.conj_class_of[j] == subs.size()) {
          cat.conj_class_of[j] = cls;
          orbit.push_back(j);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cat.conj_classes.push_back(std::move(orbit));
  }

  const auto& el = g.elements();
  for (RawSubgroup& s : subs) {
    std::vector<Permutation> perms;
    perms.reserve(s.elems.size());
    for (std::uint16_t e : s.elems) perms.push_back(el[e]);
    cat.subgroups.push_back(PermGroup::from_elements(std::move(perms)));
    cat.member_bits.push_back(std::move(s.bits));
  }
  return cat;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t budget) {
  return subgroup_catalog(g, budget).subgroups;
}

}  // namespace formations
