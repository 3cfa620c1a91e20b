#include "formations/analysis.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "formations/errors.hpp"
#include "formations/smallmath.hpp"

#include "json.hpp"

namespace formations {

namespace {

// H/K abelian <=> all generator-pair commutators of H land in K.
bool section_is_abelian(const Section& s) {
  const auto& gens = s.top.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!s.bottom.contains(commutator(gens[i], gens[j]))) return false;
  return true;
}

// Source-element representative for each element of hom.target(), in
// target element order.
std::vector<Permutation> preimage_reps(const GroupHom& hom) {
  if (hom.is_identity()) return hom.target().elements();
  std::unordered_map<Permutation, const Permutation*, PermHash> back;
  back.reserve(hom.coset_representatives().size());
  for (const auto& r : hom.coset_representatives()) back.emplace(hom.apply(r), &r);
  std::vector<Permutation> out;
  out.reserve(hom.target().order());
  for (const auto& q : hom.target().elements()) out.push_back(*back.at(q));
  return out;
}

std::string describe_factor(const Section& s) {
  return "chief factor of order " + std::to_string(s.factor_order());
}

bool explicit_central(const PermGroup& g, const Section& s, const GroupClass& cls,
                      const Budgets& budgets, const PermGroup& cent,
                      std::size_t size_guard) {
  auto [q, hom] = quotient(g, cent);
  SectionGroup sg = section_as_group(s, budgets.element_cap);
  std::vector<Permutation> action;
  action.reserve(q.order());
  for (const auto& rep : preimage_reps(hom))
    action.push_back(sg.conjugation_on_elements(rep));
  PermGroup t = semidirect_product(sg.group(), q, action, size_guard, budgets.element_cap);
  return member(cls, t, budgets);
}

// Shortcut rules, one per class kind. A chief factor is centralized by the
// whole group iff it sits in the center of g modulo the bottom term, which
// for the nilpotent and abelian classes is the entire test. The factor-plus-
// quotient reductions for the remaining kinds rest on the chief factors of
// A x| Q being A itself plus the chief factors of Q, with matching
// centralizers.
bool shortcut_central(const PermGroup& g, const Section& s, const GroupClass& cls,
                      const Budgets& budgets, const PermGroup& cent,
                      PathPolicy policy) {
  PathPolicy down = policy == PathPolicy::ForceShortcut ? PathPolicy::ForceShortcut
                                                        : PathPolicy::Auto;
  switch (cls.kind) {
    case ClassKind::Nilpotent:
    case ClassKind::Abelian:
      return cent.order() == g.order();
    case ClassKind::Supersoluble:
      return section_is_abelian(s) && is_prime(s.factor_order());
    case ClassKind::Soluble: {
      if (!section_is_abelian(s)) return false;
      auto [q, hom] = quotient(g, cent);
      return is_soluble(q);
    }
    case ClassKind::CompFactors: {
      if (!section_is_abelian(s)) {
        auto parts = decompose_char_simple(s);
        for (const auto& t : parts.types)
          if (std::find(cls.base_names.begin(), cls.base_names.end(), t.name) ==
              cls.base_names.end())
            return false;
      }
      auto [q, hom] = quotient(g, cent);
      return member(cls, q, budgets);
    }
    case ClassKind::Jcs: {
      PermGroup a = section_as_group(s, budgets.element_cap).group();
      bool factor_ok;
      if (member(*cls.inner, a, budgets)) {
        factor_ok = is_central_factor(g, s, *cls.inner, budgets, down);
      } else if (section_is_abelian(s)) {
        factor_ok = false;
      } else if (!is_simple(a)) {
        factor_ok = false;
      } else if (cls.jset.all) {
        factor_ok = true;
      } else {
        factor_ok = cls.jset.admits(decompose_char_simple(s).types.front());
      }
      if (!factor_ok) return false;
      auto [q, hom] = quotient(g, cent);
      return member(cls, q, budgets);
    }
    case ClassKind::Ca: {
      bool factor_ok;
      if (section_is_abelian(s)) {
        factor_ok = is_central_factor(g, s, *cls.inner, budgets, down);
      } else {
        factor_ok = is_simple(section_as_group(s, budgets.element_cap).group());
      }
      if (!factor_ok) return false;
      auto [q, hom] = quotient(g, cent);
      return member(cls, q, budgets);
    }
  }
  throw NoShortcutAvailable("class " + cls.name + " has no centrality shortcut");
}

GroupClass ef_of(const GroupClass& f) {
  switch (f.kind) {
    case ClassKind::CompFactors:
      return f;
    case ClassKind::Nilpotent:
    case ClassKind::Supersoluble:
    case ClassKind::Soluble:
      return comp_factors_in({});
    default:
      throw DomainError("no composition-factor companion class for " + f.name);
  }
}

}  // namespace

bool splits_into_invariant_simple(const PermGroup& q, const PermGroup& sub, const JSet& j,
                                  const Budgets& budgets, std::string* why,
                                  std::vector<std::string>* types_out) {
  if (sub.is_trivial()) return true;
  PermGroup bottom = PermGroup::trivial(q.degree());
  PermGroup joined = bottom;
  std::size_t order_product = 1;
  bool overflow = false;
  for (const auto& m : minimal_normals_above(q, bottom)) {
    if (!sub.contains_group(m)) continue;
    Section sec{q, m, bottom};
    if (section_is_abelian(sec)) {
      if (why) *why = "minimal normal subgroup of order " + std::to_string(m.order()) +
                      " is abelian";
      return false;
    }
    auto parts = decompose_char_simple(sec);
    if (parts.multiplicity != 1) {
      if (why) *why = "minimal normal subgroup of order " + std::to_string(m.order()) +
                      " is not simple";
      return false;
    }
    if (!j.admits(parts.types.front())) {
      if (why) *why = "simple factor " + parts.types.front().name + " not admitted";
      return false;
    }
    if (types_out) types_out->push_back(parts.types.front().name);
    joined = join(joined, m, budgets.element_cap);
    if (order_product > budgets.element_cap / m.order()) overflow = true;
    if (!overflow) order_product *= m.order();
  }
  if (overflow || order_product != sub.order() || !joined.same_elements(sub)) {
    if (why) *why = "join of simple normal subgroups does not split the target of order " +
                    std::to_string(sub.order());
    return false;
  }
  return true;
}

CentralityResult central_factor_detail(const PermGroup& g, const Section& s,
                                       const GroupClass& cls, const Budgets& budgets,
                                       PathPolicy policy) {
  PermGroup cent = centralizer_of_section(g, s);
  std::size_t index = g.order() / cent.order();
  bool fits = s.factor_order() <= budgets.semidirect_budget / index;
  if (policy == PathPolicy::ForceExplicit)
    return {explicit_central(g, s, cls, budgets, cent, budgets.element_cap), false};
  if (policy == PathPolicy::Auto && fits)
    return {explicit_central(g, s, cls, budgets, cent, budgets.semidirect_budget), false};
  return {shortcut_central(g, s, cls, budgets, cent, policy), true};
}

bool is_central_factor(const PermGroup& g, const Section& s, const GroupClass& cls,
                       const Budgets& budgets, PathPolicy policy) {
  return central_factor_detail(g, s, cls, budgets, policy).central;
}

bool member_on_series(const GroupClass& cls, const ChiefSeries& series,
                      const Budgets& budgets, std::string* witness) {
  const PermGroup& g = series.ambient;
  auto fail = [&](const std::string& why) {
    if (witness) *witness = why;
    return false;
  };
  switch (cls.kind) {
    case ClassKind::Abelian:
      if (!g.is_abelian()) return fail("group is not abelian");
      break;
    case ClassKind::Nilpotent:
      if (!is_nilpotent(g)) return fail("group is not nilpotent");
      break;
    case ClassKind::Soluble:
      if (!is_soluble(g)) return fail("group is not soluble");
      break;
    case ClassKind::Supersoluble:
      for (std::size_t i = 0; i < series.factor_count(); ++i)
        if (!is_prime(series.factor(i).factor_order()))
          return fail("witness factor order " +
                      std::to_string(series.factor(i).factor_order()));
      break;
    case ClassKind::CompFactors:
      for (std::size_t i = 0; i < series.factor_count(); ++i) {
        Section sec = series.factor(i);
        if (section_is_abelian(sec)) continue;
        for (const auto& t : decompose_char_simple(sec).types)
          if (std::find(cls.base_names.begin(), cls.base_names.end(), t.name) ==
              cls.base_names.end())
            return fail("composition factor " + t.name + " outside the base");
      }
      break;
    case ClassKind::Jcs:
      for (std::size_t i = 0; i < series.factor_count(); ++i) {
        Section sec = series.factor(i);
        PermGroup a = section_as_group(sec, budgets.element_cap).group();
        if (member(*cls.inner, a, budgets)) {
          if (!is_central_factor(g, sec, *cls.inner, budgets))
            return fail(describe_factor(sec) + " lies in " + cls.inner->name +
                        " but is not " + cls.inner->name + "-central");
          continue;
        }
        if (section_is_abelian(sec))
          return fail("abelian " + describe_factor(sec) + " outside " + cls.inner->name);
        if (!is_simple(a))
          return fail(describe_factor(sec) + " is neither in " + cls.inner->name +
                      " nor simple");
        if (!cls.jset.all) {
          auto t = decompose_char_simple(sec).types.front();
          if (!cls.jset.admits(t))
            return fail("simple factor " + t.name + " not admitted by " + cls.jset.text());
        }
      }
      break;
    case ClassKind::Ca:
      for (std::size_t i = 0; i < series.factor_count(); ++i) {
        Section sec = series.factor(i);
        if (section_is_abelian(sec)) {
          if (!is_central_factor(g, sec, *cls.inner, budgets))
            return fail("abelian " + describe_factor(sec) + " is not " +
                        cls.inner->name + "-central");
        } else if (!is_simple(section_as_group(sec, budgets.element_cap).group())) {
          return fail("non-abelian " + describe_factor(sec) + " is not simple");
        }
      }
      break;
  }
  if (witness) *witness = "all chief factors conform";
  return true;
}

bool member(const GroupClass& cls, const PermGroup& g, const Budgets& budgets,
            std::string* witness) {
  switch (cls.kind) {
    case ClassKind::Abelian:
    case ClassKind::Nilpotent:
    case ClassKind::Soluble: {
      const char* what = cls.kind == ClassKind::Abelian    ? "abelian"
                         : cls.kind == ClassKind::Nilpotent ? "nilpotent"
                                                            : "soluble";
      bool ok = cls.kind == ClassKind::Abelian    ? g.is_abelian()
                : cls.kind == ClassKind::Nilpotent ? is_nilpotent(g)
                                                   : is_soluble(g);
      if (witness)
        *witness = ok ? std::string("group is ") + what
                      : std::string("group is not ") + what;
      return ok;
    }
    default:
      return member_on_series(cls, chief_series(g), budgets, witness);
  }
}

PermGroup hypercenter(const PermGroup& g, const GroupClass& cls, const Budgets& budgets) {
  PermGroup z = PermGroup::trivial(g.degree());
  for (;;) {
    PermGroup next = z;
    bool grew = false;
    for (const auto& m : minimal_normals_above(g, z)) {
      if (is_central_factor(g, Section{g, m, z}, cls, budgets)) {
        next = join(next, m, budgets.element_cap);
        grew = true;
      }
    }
    if (!grew) return z;
    z = next;
  }
}

PermGroup residual(const PermGroup& g, const GroupClass& cls, const Budgets& budgets) {
  PermGroup r = g;
  for (const auto& n : normal_subgroups(g)) {
    if (r.contains_group(n) && r.same_elements(n)) continue;
    auto [q, hom] = quotient(g, n);
    if (member(cls, q, budgets)) r = intersection(r, n);
  }
  auto [rq, rhom] = quotient(g, r);
  if (!member(cls, rq, budgets))
    throw FormationConsistencyViolation(
        "quotient by the intersection of all " + cls.name +
        "-kernels is not a member; the is_formation flag on " + cls.name + " is wrong");
  return r;
}

std::vector<PermGroup> f_maximal_subgroups(const PermGroup& g, const GroupClass& cls,
                                           const Budgets& budgets,
                                           const SubgroupCatalog* catalog) {
  SubgroupCatalog local = catalog ? SubgroupCatalog{}
                                  : subgroup_catalog(g, budgets.subgroup_order_budget);
  const SubgroupCatalog& cat = catalog ? *catalog : local;
  const std::size_t n = cat.subgroups.size();
  std::vector<char> in_cls(n, 0);
  for (const auto& orbit : cat.conj_classes) {
    // membership is conjugation-invariant, so one test per orbit
    bool m = member(cls, cat.subgroups[orbit.front()], budgets);
    for (std::size_t idx : orbit) in_cls[idx] = m ? 1 : 0;
  }
  std::vector<PermGroup> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_cls[i]) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      if (j == i || !in_cls[j]) continue;
      if (cat.subgroups[j].order() > cat.subgroups[i].order() &&
          bits_subset(cat.member_bits[i], cat.member_bits[j]))
        maximal = false;
    }
    if (maximal) out.push_back(cat.subgroups[i]);
  }
  return out;
}

PermGroup int_f(const PermGroup& g, const GroupClass& cls, const Budgets& budgets,
                const SubgroupCatalog* catalog) {
  auto maximals = f_maximal_subgroups(g, cls, budgets, catalog);
  PermGroup acc = maximals.front();
  for (std::size_t i = 1; i < maximals.size(); ++i) acc = intersection(acc, maximals[i]);
  return acc;
}

T2Result t2_conditions(const PermGroup& g, const GroupClass& f, const JSet& j,
                       const Budgets& budgets) {
  if (!f.flags.is_formation || !f.flags.is_saturated || !f.flags.contains_nilpotent)
    throw DomainError("class " + f.name +
                      " does not satisfy the three-way evaluator's hypothesis");
  T2Result r;

  GroupClass jcs = jcs_class(f, j);
  r.b1 = member_on_series(jcs, chief_series(g), budgets, &r.witness_b1);

  PermGroup z = hypercenter(g, f, budgets);
  {
    auto [qz, homz] = quotient(g, z);
    std::string why;
    if (!splits_into_invariant_simple(qz, socle(qz), j, budgets, &why)) {
      r.b2 = false;
      r.witness_b2 = why + " over the hypercenter of order " + std::to_string(z.order());
    } else {
      PermGroup s = homz.is_identity() ? socle(qz) : homz.preimage(socle(qz));
      auto [qs, homs] = quotient(g, s);
      if (!is_soluble(qs)) {
        r.b2 = false;
        r.witness_b2 = "quotient by the socle preimage (order " +
                       std::to_string(qs.order()) + ") is not soluble";
      } else if (!member(f, qs, budgets)) {
        r.b2 = false;
        r.witness_b2 = "quotient by the socle preimage (order " +
                       std::to_string(qs.order()) + ") is not in " + f.name;
      } else {
        r.b2 = true;
        r.witness_b2 = "socle preimage of order " + std::to_string(s.order()) +
                       " over hypercenter of order " + std::to_string(z.order());
      }
    }
  }

  PermGroup d = residual(g, f, budgets);
  PermGroup d_comp = residual(g, ef_of(f), budgets);
  PermGroup zd = center(d);
  r.residual_order = d.order();
  r.residual_center_order = zd.order();
  if (!d.same_elements(d_comp)) {
    r.b3 = false;
    r.witness_b3 = "residual of order " + std::to_string(d.order()) +
                   " differs from the composition-factor residual of order " +
                   std::to_string(d_comp.order());
  } else if (!z.contains_group(zd)) {
    r.b3 = false;
    r.witness_b3 = "center of the residual (order " + std::to_string(zd.order()) +
                   ") is not inside the hypercenter";
  } else {
    auto [q2, hom2] = quotient(g, zd);
    PermGroup dbar = hom2.is_identity() ? d : hom2.image(d);
    std::string why;
    std::vector<std::string> types;
    if (!splits_into_invariant_simple(q2, dbar, j, budgets, &why, &types)) {
      r.b3 = false;
      r.witness_b3 = "residual modulo its center: " + why;
    } else {
      r.b3 = true;
      r.residual_quotient_types = std::move(types);
      std::ostringstream os;
      os << "residual order " << d.order() << ", center order " << zd.order()
         << ", quotient splits into {";
      for (std::size_t i = 0; i < r.residual_quotient_types.size(); ++i)
        os << (i ? ", " : "") << r.residual_quotient_types[i];
      os << "}";
      r.witness_b3 = os.str();
    }
  }
  return r;
}

AnalysisReport analyze(const PermGroup& g, const std::string& group_label,
                       const GroupClass& cls, const Budgets& budgets) {
  AnalysisReport r;
  r.group_label = group_label;
  r.class_name = cls.name;
  r.group_order = g.order();

  ChiefSeries series = chief_series(g);
  r.is_member = member_on_series(cls, series, budgets, &r.witness);

  for (std::size_t i = 0; i < series.factor_count(); ++i) {
    Section sec = series.factor(i);
    FactorAnnotation a;
    a.order = sec.factor_order();
    a.abelian = section_is_abelian(sec);
    try {
      auto parts = decompose_char_simple(sec);
      a.simple_type = parts.types.front().name;
      a.multiplicity = parts.multiplicity;
    } catch (const UnknownSimpleOrder&) {
      a.simple_type = "unrecognized";
      a.multiplicity = 0;
    }
    try {
      a.central = is_central_factor(g, sec, cls, budgets);
    } catch (const NoShortcutAvailable&) {
      a.central.reset();
    }
    r.chief_factors.push_back(std::move(a));
  }

  r.hypercenter_order = hypercenter(g, cls, budgets).order();
  r.residual_order = residual(g, cls, budgets).order();
  try {
    r.int_order = int_f(g, cls, budgets).order();
  } catch (const SubgroupBudgetExceeded&) {
    r.int_order.reset();
  }
  if (cls.kind == ClassKind::Jcs && cls.inner->flags.is_formation &&
      cls.inner->flags.is_saturated && cls.inner->flags.contains_nilpotent &&
      cls.inner->kind != ClassKind::Jcs && cls.inner->kind != ClassKind::Ca) {
    r.t2 = t2_conditions(g, *cls.inner, cls.jset, budgets);
  }
  return r;
}

std::string report_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group: " << r.group_label << "  (order " << r.group_order << ")\n";
  os << "class: " << r.class_name << "\n";
  os << "member: " << (r.is_member ? "true" : "false") << "  (" << r.witness << ")\n";
  os << "chief series factors, bottom up:\n";
  for (std::size_t i = 0; i < r.chief_factors.size(); ++i) {
    const auto& a = r.chief_factors[i];
    os << "  [" << i + 1 << "] order " << a.order << "  "
       << (a.abelian ? "abelian" : "non-abelian") << "  type " << a.simple_type;
    if (a.multiplicity > 1) os << "^" << a.multiplicity;
    if (a.central.has_value())
      os << (*a.central ? "  central" : "  not central");
    else
      os << "  centrality unknown within budgets";
    os << "\n";
  }
  os << "hypercenter order: " << r.hypercenter_order << "\n";
  os << "residual order: " << r.residual_order << "\n";
  if (r.int_order.has_value())
    os << "intersection of maximal members, order: " << *r.int_order << "\n";
  else
    os << "intersection of maximal members: skipped (over the subgroup budget)\n";
  if (r.t2.has_value()) {
    os << "structural conditions: b1=" << (r.t2->b1 ? "true" : "false")
       << " b2=" << (r.t2->b2 ? "true" : "false")
       << " b3=" << (r.t2->b3 ? "true" : "false") << "\n";
    os << "  b1: " << r.t2->witness_b1 << "\n";
    os << "  b2: " << r.t2->witness_b2 << "\n";
    os << "  b3: " << r.t2->witness_b3 << "\n";
  }
  return os.str();
}

std::string report_structured(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group_label;
  j["class"] = r.class_name;
  j["order"] = r.group_order;
  j["member"] = r.is_member;
  j["witness"] = r.witness;
  j["chief_series"] = nlohmann::ordered_json::array();
  for (const auto& a : r.chief_factors) {
    nlohmann::ordered_json f;
    f["order"] = a.order;
    f["abelian"] = a.abelian;
    if (a.central.has_value())
      f["central"] = *a.central;
    else
      f["central"] = nullptr;
    f["simple_type"] = a.simple_type;
    f["multiplicity"] = a.multiplicity;
    j["chief_series"].push_back(std::move(f));
  }
  j["hypercenter_order"] = r.hypercenter_order;
  j["residual_order"] = r.residual_order;
  if (r.int_order.has_value())
    j["int_order"] = *r.int_order;
  else
    j["int_order"] = nullptr;
  if (r.t2.has_value()) {
    nlohmann::ordered_json t;
    t["b1"] = r.t2->b1;
    t["b2"] = r.t2->b2;
    t["b3"] = r.t2->b3;
    t["witness_b1"] = r.t2->witness_b1;
    t["witness_b2"] = r.t2->witness_b2;
    t["witness_b3"] = r.t2->witness_b3;
    t["residual_order"] = r.t2->residual_order;
    t["residual_center_order"] = r.t2->residual_center_order;
    t["residual_quotient_types"] = r.t2->residual_quotient_types;
    j["t2"] = std::move(t);
  } else {
    j["t2"] = nullptr;
  }
  return j.dump(2) + "\n";
}

}  // namespace formations
