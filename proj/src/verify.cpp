#include "formations/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "formations/classes.hpp"
#include "formations/errors.hpp"
#include "formations/structure.hpp"

namespace formations {

namespace {

JSet named_jset(std::vector<std::string> names) {
  JSet j;
  j.all = false;
  j.names = std::move(names);
  return j;
}

// Parameter sets shared by several checks.
std::vector<GroupClass> axiom_classes() {
  return {jcs_class(builtin("supersoluble"), JSet{}),
          jcs_class(builtin("nilpotent"), named_jset({"A5"}))};
}

std::vector<GroupClass> fitting_classes() {
  // the supersoluble class is not closed under products of normal members,
  // so the product check runs on classes that are
  return {jcs_class(builtin("nilpotent"), named_jset({"A5"})),
          jcs_class(builtin("soluble"), JSet{})};
}

struct IntParams {
  GroupClass base;
  JSet jset;
  GroupClass cls;  // jcs_class(base, jset)
};

std::vector<IntParams> int_params() {
  std::vector<IntParams> out;
  {
    IntParams p{builtin("supersoluble"), JSet{}, builtin("soluble")};
    p.cls = jcs_class(p.base, p.jset);
    out.push_back(std::move(p));
  }
  {
    IntParams p{builtin("nilpotent"), named_jset({"A5", "PSL(2,7)"}), builtin("soluble")};
    p.cls = jcs_class(p.base, p.jset);
    out.push_back(std::move(p));
  }
  return out;
}

// Precomputed per corpus entry, shared read-only across worker threads.
struct EntryContext {
  ManifestEntry entry;
  PermGroup group{PermGroup::trivial(1)};
  std::vector<PermGroup> normals;
  std::optional<SubgroupCatalog> catalog;
  std::string catalog_gap;  // skip reason when catalog is absent
};

struct CellBuilder {
  std::size_t hits = 0;
  std::vector<std::string> problems;

  void fail(std::string msg) { problems.push_back(std::move(msg)); }

  CellResult finish() const {
    CellResult r;
    r.hits = hits;
    if (!problems.empty()) {
      r.status = CellStatus::Fail;
      std::string joined;
      for (const std::string& p : problems) {
        if (!joined.empty()) joined += "; ";
        joined += p;
      }
      r.detail = joined;
    }
    return r;
  }
};

CellResult skip(std::string reason) {
  CellResult r;
  r.status = CellStatus::Skip;
  r.detail = std::move(reason);
  return r;
}

std::string otos(std::size_t n) { return std::to_string(n); }

// ---- corpus-wide cells ----

// Quotient and subdirect closure of the two chief-series classes: members
// stay members under every quotient, and a group that reduces subdirectly
// onto two members is a member.
CellResult cell_pj0(const EntryContext& ctx, const Budgets& budgets) {
  CellBuilder out;
  const PermGroup& g = ctx.group;
  for (const GroupClass& cls : axiom_classes()) {
    const bool gm = member(cls, g, budgets);
    std::vector<char> qm(ctx.normals.size());
    for (std::size_t i = 0; i < ctx.normals.size(); ++i) {
      const PermGroup& n = ctx.normals[i];
      if (n.is_trivial()) {
        qm[i] = gm ? 1 : 0;
        continue;
      }
      qm[i] = member(cls, quotient(g, n).first, budgets) ? 1 : 0;
    }
    if (gm) {
      for (std::size_t i = 0; i < ctx.normals.size(); ++i) {
        if (ctx.normals[i].order() > 1) ++out.hits;
        if (!qm[i])
          out.fail("quotient by a normal subgroup of order " + otos(ctx.normals[i].order()) +
                   " left " + cls.name);
      }
    }
    for (std::size_t i = 0; i < ctx.normals.size(); ++i) {
      for (std::size_t j = i + 1; j < ctx.normals.size(); ++j) {
        if (!qm[i] || !qm[j]) continue;
        if (ctx.normals[i].order() < 2 || ctx.normals[j].order() < 2) continue;
        if (intersection(ctx.normals[i], ctx.normals[j]).order() != 1) continue;
        ++out.hits;
        if (!gm)
          out.fail("subdirect reduction over normal subgroups of orders " +
                   otos(ctx.normals[i].order()) + " and " + otos(ctx.normals[j].order()) +
                   " lands outside " + cls.name);
      }
    }
  }
  return out.finish();
}

// Normal subgroups of members are members.
CellResult cell_jsn(const EntryContext& ctx, const Budgets& budgets) {
  CellBuilder out;
  const PermGroup& g = ctx.group;
  for (const GroupClass& cls : axiom_classes()) {
    if (!member(cls, g, budgets)) continue;
    for (const PermGroup& n : ctx.normals) {
      if (n.order() > 1 && n.order() < g.order()) ++out.hits;
      if (!member(cls, n, budgets))
        out.fail("normal subgroup of order " + otos(n.order()) + " is outside " + cls.name);
    }
  }
  return out.finish();
}

// A group generated by two normal members is a member. Instances are the
// pairs of proper normal subgroups whose product is the whole group; the
// corpus supplies direct products and central products of that shape.
CellResult cell_jf(const EntryContext& ctx, const Budgets& budgets) {
  CellBuilder out;
  const PermGroup& g = ctx.group;
  for (const GroupClass& cls : fitting_classes()) {
    std::vector<signed char> nm(ctx.normals.size(), -1);
    auto is_member = [&](std::size_t i) {
      if (nm[i] < 0) nm[i] = member(cls, ctx.normals[i], budgets) ? 1 : 0;
      return nm[i] == 1;
    };
    signed char gm = -1;
    for (std::size_t i = 0; i < ctx.normals.size(); ++i) {
      const std::size_t a = ctx.normals[i].order();
      if (a < 2 || a >= g.order()) continue;
      for (std::size_t j = i + 1; j < ctx.normals.size(); ++j) {
        const std::size_t b = ctx.normals[j].order();
        if (b < 2 || b >= g.order()) continue;
        const std::size_t meet = intersection(ctx.normals[i], ctx.normals[j]).order();
        if ((a / meet) * b != g.order()) continue;
        if (!is_member(i) || !is_member(j)) continue;
        ++out.hits;
        if (gm < 0) gm = member(cls, g, budgets) ? 1 : 0;
        if (gm != 1)
          out.fail("product of normal members of orders " + otos(a) + " and " + otos(b) +
                   " lies outside " + cls.name);
      }
    }
  }
  return out.finish();
}

// The hypercenter sits inside the intersection of maximal members.
CellResult cell_p7(const EntryContext& ctx, const Budgets& budgets) {
  if (!ctx.catalog) return skip(ctx.catalog_gap);
  CellBuilder out;
  for (const IntParams& p : int_params()) {
    PermGroup z = hypercenter(ctx.group, p.cls, budgets);
    PermGroup inter = int_f(ctx.group, p.cls, budgets, &*ctx.catalog);
    if (z.order() > 1) ++out.hits;
    if (!inter.contains_group(z))
      out.fail("hypercenter of order " + otos(z.order()) +
               " escapes the intersection of maximal members (order " +
               otos(inter.order()) + ") for " + p.cls.name);
  }
  return out.finish();
}

// Chief factors below the intersection of maximal members either lie in the
// base class or are simple.
CellResult cell_p8(const EntryContext& ctx, const Budgets& budgets) {
  if (!ctx.catalog) return skip(ctx.catalog_gap);
  CellBuilder out;
  for (const IntParams& p : int_params()) {
    PermGroup inter = int_f(ctx.group, p.cls, budgets, &*ctx.catalog);
    if (inter.is_trivial()) continue;
    ChiefSeries series = chief_series_through(ctx.group, {inter});
    for (std::size_t i = 0; i < series.factor_count(); ++i) {
      Section sec = series.factor(i);
      if (!inter.contains_group(sec.top)) continue;
      PermGroup factor = section_as_group(sec, budgets.element_cap).group();
      if (member(p.base, factor, budgets)) continue;
      ++out.hits;
      if (!is_simple(factor))
        out.fail("chief factor of order " + otos(factor.order()) +
                 " below the intersection of maximal members is neither in " + p.base.name +
                 " nor simple, for " + p.cls.name);
    }
  }
  return out.finish();
}

// Normal subgroups that are admitted simple groups sit below the
// intersection of maximal members.
CellResult cell_p9(const EntryContext& ctx, const Budgets& budgets) {
  if (!ctx.catalog) return skip(ctx.catalog_gap);
  CellBuilder out;
  for (const IntParams& p : int_params()) {
    PermGroup inter = int_f(ctx.group, p.cls, budgets, &*ctx.catalog);
    for (const PermGroup& h : ctx.normals) {
      if (h.order() < 2 || h.is_abelian() || !is_simple(h)) continue;
      Section whole{h, h, PermGroup::trivial(h.degree())};
      SimpleType type = decompose_char_simple(whole).types.front();
      if (!p.jset.admits(type)) continue;
      ++out.hits;
      if (!inter.contains_group(h))
        out.fail("normal simple subgroup of order " + otos(h.order()) + " (type " + type.name +
                 ") escapes the intersection of maximal members for " + p.cls.name);
    }
  }
  return out.finish();
}

// The chief-series, socle and residual descriptions of membership agree.
CellResult cell_thm2(const EntryContext& ctx, const Budgets& budgets) {
  CellBuilder out;
  const std::vector<GroupClass> bases = {builtin("supersoluble"), comp_factors_in({"A5"})};
  const std::vector<JSet> jsets = {JSet{}, named_jset({"A5"})};
  for (const GroupClass& f : bases) {
    for (const JSet& j : jsets) {
      T2Result r = t2_conditions(ctx.group, f, j, budgets);
      ++out.hits;
      if (r.b1 != r.b2 || r.b2 != r.b3) {
        std::string triple = std::string(r.b1 ? "true" : "false") + ", " +
                             (r.b2 ? "true" : "false") + ", " + (r.b3 ? "true" : "false");
        out.fail("the three membership descriptions disagree (" + triple + ") for F=" + f.name +
                 ", J=" + j.text());
      }
    }
  }
  return out.finish();
}

CellResult equality_cell(const EntryContext& ctx, const Budgets& budgets,
                         const GroupClass& cls) {
  if (!ctx.catalog) return skip(ctx.catalog_gap);
  CellBuilder out;
  ++out.hits;
  PermGroup z = hypercenter(ctx.group, cls, budgets);
  PermGroup inter = int_f(ctx.group, cls, budgets, &*ctx.catalog);
  if (!z.same_elements(inter))
    out.fail("hypercenter (order " + otos(z.order()) +
             ") differs from the intersection of maximal members (order " + otos(inter.order()) +
             ") for " + cls.name);
  return out.finish();
}

CellResult cell_thm3(const EntryContext& ctx, const Budgets& budgets) {
  return equality_cell(ctx, budgets, jcs_class(builtin("nilpotent"), named_jset({"A5", "PSL(2,7)"})));
}

CellResult cell_thm3_converse(const EntryContext& ctx, const Budgets& budgets) {
  return equality_cell(ctx, budgets, jcs_class(builtin("nilpotent"), named_jset({"A6"})));
}

// Intersection of maximal nilpotent subgroups = nilpotent hypercenter = top
// of the upper central series.
CellResult cell_baer(const EntryContext& ctx, const Budgets& budgets) {
  if (!ctx.catalog) return skip(ctx.catalog_gap);
  CellBuilder out;
  ++out.hits;
  GroupClass nil = builtin("nilpotent");
  PermGroup z = hypercenter(ctx.group, nil, budgets);
  PermGroup inter = int_f(ctx.group, nil, budgets, &*ctx.catalog);
  PermGroup ucs_top = upper_central_series(ctx.group).back();
  if (!inter.same_elements(z))
    out.fail("intersection of maximal nilpotent subgroups (order " + otos(inter.order()) +
             ") differs from the hypercenter (order " + otos(z.order()) + ")");
  if (!z.same_elements(ucs_top))
    out.fail("hypercenter (order " + otos(z.order()) +
             ") differs from the top of the upper central series (order " +
             otos(ucs_top.order()) + ")");
  return out.finish();
}

// Three seeded chief series carry the same annotated factor multiset and the
// same class verdicts.
CellResult cell_jh(const EntryContext& ctx, const Budgets& budgets, unsigned seed) {
  CellBuilder out;
  const GroupClass nil = builtin("nilpotent");
  const std::vector<GroupClass> verdict_classes = axiom_classes();

  struct Snapshot {
    std::vector<std::string> factors;  // sorted
    std::vector<bool> verdicts;
  };
  auto snapshot = [&](const ChiefSeries& series) {
    Snapshot s;
    for (std::size_t i = 0; i < series.factor_count(); ++i) {
      Section sec = series.factor(i);
      auto parts = decompose_char_simple(sec);
      bool central = is_central_factor(ctx.group, sec, nil, budgets);
      std::string desc = "order " + otos(sec.factor_order()) + " " +
                         (parts.abelian ? "abelian" : "non-abelian") + " " +
                         parts.types.front().name + "^" + otos(parts.multiplicity) +
                         (central ? " central" : " non-central");
      s.factors.push_back(std::move(desc));
    }
    std::sort(s.factors.begin(), s.factors.end());
    for (const GroupClass& cls : verdict_classes)
      s.verdicts.push_back(member_on_series(cls, series, budgets));
    return s;
  };
  auto format = [](const Snapshot& s) {
    std::string t = "{";
    for (std::size_t i = 0; i < s.factors.size(); ++i)
      t += (i ? "; " : "") + s.factors[i];
    return t + "}";
  };

  std::optional<Snapshot> first;
  unsigned first_seed = seed;
  for (unsigned s = seed; s < seed + 3; ++s) {
    Snapshot snap = snapshot(chief_series_seeded(ctx.group, s));
    ++out.hits;
    if (!first) {
      first = std::move(snap);
      first_seed = s;
      continue;
    }
    if (snap.factors != first->factors)
      out.fail("annotated factors differ between seeds " + otos(first_seed) + " and " + otos(s) +
               ": " + format(*first) + " vs " + format(snap));
    if (snap.verdicts != first->verdicts)
      out.fail("class verdicts differ between seeds " + otos(first_seed) + " and " + otos(s));
  }
  return out.finish();
}

// ---- designed-instance cells ----

// The regular wreath square of the smallest non-abelian simple group lies in
// the composition class, outside its ca refinement, inside its Jcs closure.
CellResult cell_example1(const Budgets& budgets) {
  CellBuilder out;
  PermGroup g = build_group("wr(A5,C2)", budgets);
  GroupClass base = comp_factors_in({"A5"});
  struct Probe {
    GroupClass cls;
    bool expected;
  };
  const Probe probes[] = {{base, true}, {ca_class(base), false}, {jcs_class(base, JSet{}), true}};
  for (const Probe& p : probes) {
    ++out.hits;
    bool got = member(p.cls, g, budgets);
    if (got != p.expected)
      out.fail("membership in " + p.cls.name + " is " + (got ? "true" : "false") +
               ", expected " + (p.expected ? "true" : "false"));
  }
  return out.finish();
}

// Membership in Jcs(U, all) against the split description: a perfect normal
// subgroup D with supersoluble quotient, Z(D) inside the supersoluble
// hypercenter, and D/Z(D) a product of invariant simple groups. D is taken
// as the soluble residual, the only candidate: any valid D has soluble
// quotient, so it contains the residual, and minimality forces equality on
// these instances.
CellResult cell_robinson(const std::string& expr, const Budgets& budgets) {
  CellBuilder out;
  ++out.hits;
  PermGroup g = build_group(expr, budgets);
  GroupClass u = builtin("supersoluble");
  bool lhs = member(jcs_class(u, JSet{}), g, budgets);

  PermGroup d = residual(g, builtin("soluble"), budgets);
  bool rhs = derived_series(d).size() == 1;  // perfect
  if (rhs) rhs = member(u, quotient(g, d).first, budgets);
  if (rhs) {
    PermGroup zd = center(d);
    rhs = hypercenter(g, u, budgets).contains_group(zd);
    if (rhs) {
      auto [q, hom] = quotient(g, zd);
      PermGroup dbar = hom.is_identity() ? d : hom.image(d);
      std::string why;
      rhs = splits_into_invariant_simple(q, dbar, JSet{}, budgets, &why);
    }
  }
  if (lhs != rhs)
    out.fail(std::string("chief-series membership is ") + (lhs ? "true" : "false") +
             " but the split description gives " + (rhs ? "true" : "false"));
  return out.finish();
}

// ---- catalogue and runner ----

const std::vector<CheckInfo>& catalogue() {
  static const std::vector<CheckInfo> checks = {
      {"pj0",
       "quotient and subdirect closure of Jcs(U, all) and Jcs(N, {A5}) over all corpus "
       "(group, normal subgroup) pairs",
       true},
      {"jsn", "every normal subgroup of a Jcs(U, all) or Jcs(N, {A5}) member is a member", true},
      {"jf",
       "a product of two normal members of Jcs(N, {A5}) or Jcs(S, all) is a member, on the "
       "corpus direct- and central-product instances",
       true},
      {"p7",
       "the hypercenter lies inside the intersection of maximal members, for Jcs(U, all) and "
       "Jcs(N, {A5, PSL(2,7)})",
       true},
      {"p8",
       "chief factors below the intersection of maximal members lie in the base class or are "
       "simple, for Jcs(U, all) and Jcs(N, {A5, PSL(2,7)})",
       true},
      {"p9",
       "normal subgroups that are admitted simple groups lie below the intersection of maximal "
       "members, for Jcs(U, all) and Jcs(N, {A5, PSL(2,7)})",
       true},
      {"thm2_equiv",
       "the chief-series, socle and residual membership descriptions agree, for F in "
       "{U, E(S|A5)} and J in {all, {A5}}",
       true},
      {"thm3_N",
       "hypercenter equals the intersection of maximal members for Jcs(N, {A5, PSL(2,7)})",
       true},
      {"thm3_converse",
       "hypercenter equals the intersection of maximal members for Jcs(N, {A6}); disabled by "
       "default: deriving the outer-automorphism condition back from the equality needs "
       "automorphism witnesses beyond the subgroup budget, so only this forward equality runs",
       false},
      {"baer",
       "intersection of maximal nilpotent subgroups = nilpotent hypercenter = top of the upper "
       "central series",
       true},
      {"example1",
       "wr(A5,C2) lies in E(S|A5), outside ca(E(S|A5)), inside Jcs(E(S|A5), all)", true},
      {"robinson",
       "Jcs(U, all) membership matches the perfect-normal-subgroup split description on SL25, "
       "S5 and A5 x C2",
       true},
      {"jh_invariance",
       "three seeded chief series per group carry identical annotated factor multisets and "
       "identical class verdicts",
       true},
  };
  return checks;
}

using EntryCell = CellResult (*)(const EntryContext&, const Budgets&);

EntryCell entry_cell_for(const std::string& id) {
  if (id == "pj0") return &cell_pj0;
  if (id == "jsn") return &cell_jsn;
  if (id == "jf") return &cell_jf;
  if (id == "p7") return &cell_p7;
  if (id == "p8") return &cell_p8;
  if (id == "p9") return &cell_p9;
  if (id == "thm2_equiv") return &cell_thm2;
  if (id == "thm3_N") return &cell_thm3;
  if (id == "thm3_converse") return &cell_thm3_converse;
  if (id == "baer") return &cell_baer;
  return nullptr;
}

bool needs_catalog(const std::string& id) {
  return id == "p7" || id == "p8" || id == "p9" || id == "thm3_N" || id == "thm3_converse" ||
         id == "baer";
}

bool needs_normals(const std::string& id) {
  return id == "pj0" || id == "jsn" || id == "jf" || id == "p9";
}

void run_pool(std::vector<std::function<void()>>& tasks, unsigned threads) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<unsigned>(threads, tasks.size() == 0 ? 1 : (unsigned)tasks.size());
  if (threads <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        tasks[i]();
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

Corpus default_corpus() {
  Corpus c;
  auto add = [&](const std::string& label, const std::string& expr) {
    c.entries.push_back({label, expr});
  };
  for (int n = 2; n <= 16; ++n) add("C" + std::to_string(n), "C(" + std::to_string(n) + ")");
  for (int n = 4; n <= 16; n += 2) add("D" + std::to_string(n), "D(" + std::to_string(n) + ")");
  add("S3", "S3");
  add("S4", "S4");
  add("S5", "S5");
  add("A4", "A4");
  add("A5", "A5");
  add("A6", "A6");
  add("SL25", "SL25");
  add("PSL(2,7)", "PSL(2,7)");
  add("PSL(2,11)", "PSL(2,11)");
  add("S3 x C2", "S3 x C2");
  add("S5 x S3", "S5 x S3");
  add("A5 x C2", "A5 x C2");
  add("A5 x A5", "A5 x A5");
  add("wr(C2,C2)", "wr(C2,C2)");
  add("wr(C3,C2)", "wr(C3,C2)");
  add("wr(A5,C2)", "wr(A5,C2)");
  // Frobenius group of order 21
  add("C7:C3", R"j({"degree":7,"gens":["(1 2 3 4 5 6 7)","(2 3 5)(4 7 6)"]})j");
  // dicyclic-flavoured split extension of order 12 with faithful C4 action
  add("C3:C4", R"j({"degree":7,"gens":["(1 2 3)","(2 3)(4 5 6 7)"]})j");
  // extraspecial groups of order 27, exponent 3 and exponent 9
  add("ES27_3",
      R"j({"degree":27,"gens":["(4 13 22)(5 14 23)(6 15 24)(7 25 16)(8 26 17)(9 27 18)","(2 5 8)(3 9 6)(11 14 17)(12 18 15)(20 23 26)(21 27 24)"]})j");
  add("ES27_9", R"j({"degree":9,"gens":["(1 2 3 4 5 6 7 8 9)","(2 5 8)(3 9 6)"]})j");
  return c;
}

const std::vector<CheckInfo>& check_catalogue() { return catalogue(); }

std::vector<std::string> default_check_ids() {
  std::vector<std::string> ids;
  for (const CheckInfo& c : catalogue())
    if (c.in_default_set) ids.push_back(c.id);
  return ids;
}

VerifyReport run_checks(const Corpus& corpus, const std::vector<std::string>& ids,
                        unsigned seed, unsigned threads) {
  // validate and deduplicate the selection, keeping catalogue order
  std::vector<CheckInfo> selected;
  for (const CheckInfo& info : catalogue()) {
    bool wanted = false;
    for (const std::string& id : ids) wanted = wanted || id == info.id;
    if (wanted) selected.push_back(info);
  }
  for (const std::string& id : ids) {
    bool known = false;
    for (const CheckInfo& info : catalogue()) known = known || info.id == id;
    if (!known) throw DomainError("unknown check id: " + id);
  }

  bool want_catalogs = false, want_normals = false;
  for (const CheckInfo& info : selected) {
    want_catalogs = want_catalogs || needs_catalog(info.id);
    want_normals = want_normals || needs_normals(info.id);
  }

  const Budgets& budgets = corpus.budgets;

  // build every entry up front; catalogs and normal lattices are shared by
  // all cells of a group
  std::vector<EntryContext> entries(corpus.entries.size());
  std::vector<std::exception_ptr> entry_errors(corpus.entries.size());
  {
    std::vector<std::function<void()>> prep;
    for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
      prep.push_back([&, i] {
        try {
          EntryContext& ctx = entries[i];
          ctx.entry = corpus.entries[i];
          ctx.group = build_group(ctx.entry.expr, budgets);
          if (want_normals) ctx.normals = normal_subgroups(ctx.group);
          if (want_catalogs) {
            try {
              ctx.catalog = subgroup_catalog(ctx.group, budgets.subgroup_order_budget);
            } catch (const SubgroupBudgetExceeded& e) {
              ctx.catalog_gap = e.what();
            }
          }
        } catch (...) {
          entry_errors[i] = std::current_exception();
        }
      });
    }
    run_pool(prep, threads);
  }
  for (const std::exception_ptr& e : entry_errors)
    if (e) std::rethrow_exception(e);

  // one task per (check, label)
  struct Slot {
    std::size_t check_index;
    std::string label;
    CellResult result;
  };
  std::vector<Slot> slots;
  std::vector<std::function<CellResult()>> runs;
  for (std::size_t ci = 0; ci < selected.size(); ++ci) {
    const std::string& id = selected[ci].id;
    if (id == "example1") {
      slots.push_back({ci, "wr(A5,C2)", {}});
      runs.push_back([&budgets] { return cell_example1(budgets); });
    } else if (id == "robinson") {
      for (const char* expr : {"SL25", "S5", "A5 x C2"}) {
        slots.push_back({ci, expr, {}});
        runs.push_back([&budgets, expr] { return cell_robinson(expr, budgets); });
      }
    } else if (id == "jh_invariance") {
      for (const EntryContext& ctx : entries) {
        slots.push_back({ci, ctx.entry.label, {}});
        runs.push_back([&budgets, &ctx, seed] { return cell_jh(ctx, budgets, seed); });
      }
    } else {
      EntryCell cell = entry_cell_for(id);
      for (const EntryContext& ctx : entries) {
        slots.push_back({ci, ctx.entry.label, {}});
        runs.push_back([&budgets, &ctx, cell] { return (*cell)(ctx, budgets); });
      }
    }
  }

  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    tasks.push_back([&, i] {
      CellResult r;
      try {
        r = runs[i]();
      } catch (const SubgroupBudgetExceeded& e) {
        r = skip(e.what());
      } catch (const std::exception& e) {
        r.status = CellStatus::Fail;
        r.detail = std::string("unexpected error: ") + e.what();
      }
      r.label = slots[i].label;
      slots[i].result = std::move(r);
    });
  }
  run_pool(tasks, threads);

  // deterministic aggregation: checks sorted by id, cells by label
  VerifyReport report;
  for (std::size_t ci = 0; ci < selected.size(); ++ci) {
    CheckResult cr;
    cr.id = selected[ci].id;
    cr.description = selected[ci].description;
    for (const Slot& s : slots) {
      if (s.check_index != ci) continue;
      cr.cells.push_back(s.result);
      cr.hits += s.result.hits;
      switch (s.result.status) {
        case CellStatus::Pass: ++cr.cells_passed; break;
        case CellStatus::Fail: ++cr.cells_failed; break;
        case CellStatus::Skip: ++cr.cells_skipped; break;
      }
    }
    std::stable_sort(cr.cells.begin(), cr.cells.end(),
                     [](const CellResult& a, const CellResult& b) { return a.label < b.label; });
    cr.passed = cr.cells_failed == 0;
    report.all_passed = report.all_passed && cr.passed;
    report.checks.push_back(std::move(cr));
  }
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return report;
}

std::string verify_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const CheckResult& c : report.checks) {
    os << "check " << c.id << ": " << (c.passed ? "pass" : "FAIL") << "  (" << c.cells_passed
       << " pass, " << c.cells_failed << " fail, " << c.cells_skipped << " skip; "
       << c.hits << " hypothesis hits)\n";
    for (const CellResult& cell : c.cells) {
      if (cell.status == CellStatus::Fail)
        os << "  failed " << cell.label << ": " << cell.detail << "\n";
      else if (cell.status == CellStatus::Skip)
        os << "  skipped " << cell.label << ": " << cell.detail << "\n";
    }
  }
  os << "\nsummary\n";
  os << "  check          status  hits  skips\n";
  for (const CheckResult& c : report.checks) {
    os << "  " << c.id;
    for (std::size_t pad = c.id.size(); pad < 15; ++pad) os << ' ';
    os << (c.passed ? "pass  " : "FAIL  ");
    std::string hits = std::to_string(c.hits);
    for (std::size_t pad = hits.size(); pad < 6; ++pad) os << ' ';
    os << hits;
    std::string skips = std::to_string(c.cells_skipped);
    for (std::size_t pad = skips.size(); pad < 7; ++pad) os << ' ';
    os << skips << "\n";
  }
  std::size_t failed = 0;
  for (const CheckResult& c : report.checks)
    if (!c.passed) ++failed;
  if (failed == 0)
    os << "all " << report.checks.size() << (report.checks.size() == 1 ? " check" : " checks")
       << " passed\n";
  else
    os << failed << " of " << report.checks.size() << " checks failed\n";
  return os.str();
}

std::string verify_structured(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["description"] = c.description;
    jc["status"] = c.passed ? "pass" : "fail";
    jc["hits"] = c.hits;
    jc["cells_passed"] = c.cells_passed;
    jc["cells_failed"] = c.cells_failed;
    jc["cells_skipped"] = c.cells_skipped;
    jc["cells"] = nlohmann::ordered_json::array();
    for (const CellResult& cell : c.cells) {
      nlohmann::ordered_json jcell;
      jcell["label"] = cell.label;
      jcell["status"] = cell.status == CellStatus::Pass
                            ? "pass"
                            : (cell.status == CellStatus::Fail ? "fail" : "skip");
      jcell["hits"] = cell.hits;
      jcell["detail"] = cell.detail;
      jc["cells"].push_back(std::move(jcell));
    }
    doc["checks"].push_back(std::move(jc));
  }
  doc["all_passed"] = report.all_passed;
  return doc.dump(2) + "\n";
}

}  // namespace formations
