#include <string>
#include <vector>

#include "doctest.h"
#include "formations/analysis.hpp"
#include "formations/groupspec.hpp"
#include "formations/structure.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace formations;

namespace {

Section full_section(const PermGroup& g, const PermGroup& top) {
  return Section{g, top, PermGroup::trivial(g.degree())};
}

}  // namespace

TEST_CASE("centrality of the A3 factor in S3 depends on the class") {
  auto s3 = build_group("S3");
  auto a3 = derived_series(s3)[1];
  auto s = full_section(s3, a3);
  CHECK(is_central_factor(s3, s, builtin("supersoluble")));
  CHECK_FALSE(is_central_factor(s3, s, builtin("nilpotent")));
}

TEST_CASE("explicit and shortcut centrality paths agree") {
  auto s3 = build_group("S3");
  auto a3 = derived_series(s3)[1];
  auto s = full_section(s3, a3);
  for (const char* expr : {"N", "U", "S", "Ab", "Jcs(U, all)", "ca(U)", "E(S|A5)"}) {
    CAPTURE(expr);
    auto cls = parse_class_expr(expr);
    auto exp = central_factor_detail(s3, s, cls, {}, PathPolicy::ForceExplicit);
    auto cut = central_factor_detail(s3, s, cls, {}, PathPolicy::ForceShortcut);
    CHECK_FALSE(exp.used_shortcut);
    CHECK(cut.used_shortcut);
    CHECK(exp.central == cut.central);
  }
}

TEST_CASE("an oversized factor falls back to the shortcut rule") {
  auto wr = build_group("wr(A5,C2)");
  auto soc = minimal_normal_subgroups(wr)[0];
  auto s = full_section(wr, soc);
  auto r = central_factor_detail(wr, s, parse_class_expr("E(S|A5)"));
  CHECK(r.central);
  CHECK(r.used_shortcut);  // |factor| * |G/C| is far over the semidirect budget
}

TEST_CASE("hypercenter examples") {
  auto d8 = build_group("D8");
  CHECK(hypercenter(d8, builtin("nilpotent")).same_elements(d8));

  auto g = build_group("S3 x C2");
  auto z = hypercenter(g, builtin("nilpotent"));
  CHECK(z.order() == 2);
  CHECK(z.contains(parse_permutation("(4 5)", 5)));  // the C2 direct factor

  auto sl = build_group("SL25");
  auto zu = hypercenter(sl, builtin("supersoluble"));
  CHECK(zu.order() == 2);
  CHECK(zu.same_elements(center(sl)));

  CHECK(hypercenter(build_group("A4"), builtin("supersoluble")).is_trivial());
}

TEST_CASE("hypercenter matches the normal-lattice oracle") {
  for (const char* expr : {"S3", "S4", "D8", "C12", "SL25", "S3 x C2", "A4"}) {
    CAPTURE(expr);
    auto g = build_group(expr);
    for (const char* ce : {"N", "U", "Jcs(N, {A5})"}) {
      CAPTURE(ce);
      auto cls = parse_class_expr(ce);
      CHECK(hypercenter(g, cls).same_elements(oracles::hypercenter_by_lattice(g, cls)));
    }
  }
}

TEST_CASE("membership is equivalent to a full hypercenter") {
  for (const char* expr : {"S3", "S4", "D8", "A4", "SL25", "A5"}) {
    CAPTURE(expr);
    auto g = build_group(expr);
    for (const char* ce : {"N", "U", "S", "Jcs(U, all)", "Jcs(N, {A5})"}) {
      CAPTURE(ce);
      auto cls = parse_class_expr(ce);
      CHECK(member(cls, g) == hypercenter(g, cls).same_elements(g));
    }
  }
}

TEST_CASE("residual examples") {
  auto s4 = build_group("S4");
  CHECK(residual(s4, builtin("soluble")).is_trivial());
  CHECK(residual(s4, builtin("nilpotent")).order() == 12);
  auto sl = build_group("SL25");
  CHECK(residual(sl, builtin("supersoluble")).same_elements(sl));
}

TEST_CASE("the quotient by the residual lands in the class") {
  for (const char* expr : {"S4", "SL25", "S5", "D12", "A5 x C2"}) {
    CAPTURE(expr);
    auto g = build_group(expr);
    for (const char* ce : {"N", "U", "S", "Ab", "Jcs(U, all)"}) {
      CAPTURE(ce);
      auto cls = parse_class_expr(ce);
      auto res = residual(g, cls);
      auto [q, hom] = quotient(g, res);
      CHECK(member(cls, q));
      // minimality spot check: no smaller normal subgroup works
      for (const auto& n : normal_subgroups(g)) {
        if (n.order() >= res.order()) continue;
        auto [qn, hn] = quotient(g, n);
        CHECK_FALSE(member(cls, qn));
      }
    }
  }
}

TEST_CASE("maximal member subgroups and their intersection") {
  auto s3 = build_group("S3");
  auto maxes = f_maximal_subgroups(s3, builtin("nilpotent"));
  CHECK(maxes.size() == 4);  // the C3 and the three C2's
  CHECK(int_f(s3, builtin("nilpotent")).is_trivial());

  auto d8 = build_group("D8");
  CHECK(int_f(d8, builtin("nilpotent")).same_elements(d8));
  auto c12 = build_group("C12");
  CHECK(int_f(c12, builtin("nilpotent")).same_elements(c12));

  auto sl = build_group("SL25");
  CHECK(int_f(sl, parse_class_expr("Jcs(N, {A5})")).same_elements(sl));

  CHECK_THROWS_AS(int_f(build_group("S5"), builtin("nilpotent"), Budgets{200000, 30, 50000}),
                  SubgroupBudgetExceeded);
}

TEST_CASE("a prebuilt subgroup catalog gives the same intersection") {
  auto g = build_group("S4");
  auto cat = subgroup_catalog(g);
  for (const char* ce : {"N", "U", "Ab"}) {
    CAPTURE(ce);
    auto cls = parse_class_expr(ce);
    CHECK(int_f(g, cls, {}, &cat).same_elements(int_f(g, cls)));
    CHECK(f_maximal_subgroups(g, cls, {}, &cat).size() == f_maximal_subgroups(g, cls).size());
  }
}

TEST_CASE("splitting a subgroup into invariant simple factors") {
  auto sl = build_group("SL25");
  auto [q, hom] = quotient(sl, center(sl));
  std::vector<std::string> types;
  CHECK(splits_into_invariant_simple(q, q, JSet{}, {}, nullptr, &types));
  CHECK(types == std::vector<std::string>{"A5"});

  // trivial subgroup splits vacuously
  CHECK(splits_into_invariant_simple(q, PermGroup::trivial(q.degree()), JSet{}));

  // A4 inside S4 is not a product of simple minimal normals
  auto s4 = build_group("S4");
  auto a4 = derived_series(s4)[1];
  std::string why;
  CHECK_FALSE(splits_into_invariant_simple(s4, a4, JSet{}, {}, &why));
  CHECK_FALSE(why.empty());

  // the admitted list is enforced
  JSet only7{false, {"PSL(2,7)"}};
  CHECK_FALSE(splits_into_invariant_simple(q, q, only7));
}

TEST_CASE("structural condition triple") {
  auto sl = build_group("SL25");
  auto r = t2_conditions(sl, builtin("supersoluble"), JSet{});
  CHECK(r.b1);
  CHECK(r.b2);
  CHECK(r.b3);
  CHECK(r.residual_order == 120);
  CHECK(r.residual_center_order == 2);
  CHECK(r.residual_quotient_types == std::vector<std::string>{"A5"});

  auto bad = t2_conditions(build_group("A4"), builtin("supersoluble"), JSet{});
  CHECK_FALSE(bad.b1);
  CHECK_FALSE(bad.b2);
  CHECK_FALSE(bad.b3);
  CHECK_FALSE(bad.witness_b1.empty());

  for (const char* expr : {"S3", "D8", "C12"}) {
    CAPTURE(expr);
    auto r2 = t2_conditions(build_group(expr), builtin("supersoluble"), JSet{});
    CHECK(r2.b1);
    CHECK(r2.b2);
    CHECK(r2.b3);
    CHECK(r2.residual_order == 1);
  }
}

TEST_CASE("analysis reports") {
  auto s5 = build_group("S5");
  auto rep = analyze(s5, "S(5)", parse_class_expr("Jcs(U, all)"));
  CHECK(rep.is_member);
  CHECK(rep.group_order == 120);
  REQUIRE(rep.chief_factors.size() == 2);
  CHECK(rep.chief_factors[0].order == 60);
  CHECK(rep.chief_factors[0].simple_type == "A5");
  CHECK_FALSE(rep.chief_factors[0].abelian);
  CHECK(rep.chief_factors[1].order == 2);
  CHECK(rep.chief_factors[1].abelian);
  CHECK(rep.hypercenter_order == 120);
  CHECK(rep.residual_order == 1);
  REQUIRE(rep.t2.has_value());
  CHECK(rep.t2->b1);

  auto a4rep = analyze(build_group("A4"), "A(4)", builtin("supersoluble"));
  CHECK_FALSE(a4rep.is_member);
  CHECK(a4rep.witness.find("order 4") != std::string::npos);

  // text and structured renderings carry the verdict
  CHECK(report_text(rep).find("member: true") != std::string::npos);
  auto doc = nlohmann::json::parse(report_structured(rep));
  CHECK(doc["member"] == true);
  CHECK(doc["group"] == "S(5)");
  CHECK(doc["chief_series"].size() == 2);

  // structured output is deterministic
  CHECK(report_structured(rep) == report_structured(analyze(s5, "S(5)", parse_class_expr("Jcs(U, all)"))));
}
