#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "formations/group.hpp"
#include "formations/groupspec.hpp"
#include "formations/structure.hpp"
#include "oracles.hpp"

using namespace formations;

namespace {

std::vector<std::size_t> orders_of(const std::vector<PermGroup>& gs) {
  std::vector<std::size_t> out;
  for (const auto& g : gs) out.push_back(g.order());
  return out;
}

std::vector<std::size_t> factor_orders(const ChiefSeries& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.factor_count(); ++i) out.push_back(s.factor(i).factor_order());
  return out;
}

}  // namespace

TEST_CASE("center") {
  CHECK(center(build_group("S3")).is_trivial());
  CHECK(center(build_group("D8")).order() == 2);
  auto ab = build_group("C12");
  CHECK(center(ab).same_elements(ab));
}

TEST_CASE("derived series of S4 descends through A4 and V4") {
  auto ds = derived_series(build_group("S4"));
  CHECK(orders_of(ds) == std::vector<std::size_t>{24, 12, 4, 1});
}

TEST_CASE("central series") {
  auto d8 = build_group("D8");
  auto ucs = upper_central_series(d8);
  CHECK(ucs.front().is_trivial());
  CHECK(ucs.back().same_elements(d8));  // nilpotent: terminates at the group

  auto s3 = build_group("S3");
  CHECK(upper_central_series(s3).back().is_trivial());
  auto lcs = lower_central_series(s3);
  CHECK(orders_of(lcs) == std::vector<std::size_t>{6, 3});
}

TEST_CASE("solubility and nilpotency predicates") {
  CHECK(is_soluble(build_group("S4")));
  CHECK_FALSE(is_soluble(build_group("A5")));
  CHECK(is_nilpotent(build_group("D8")));
  CHECK_FALSE(is_nilpotent(build_group("S3")));
  CHECK(is_supersoluble(build_group("S3")));
  CHECK_FALSE(is_supersoluble(build_group("A4")));  // chief factor of order 4
  CHECK_FALSE(is_supersoluble(build_group("S4")));
}

TEST_CASE("normal subgroup lattice") {
  auto ns = normal_subgroups(build_group("S4"));
  CHECK(orders_of(ns) == std::vector<std::size_t>{1, 4, 12, 24});

  auto a5 = build_group("A5");
  CHECK(orders_of(normal_subgroups(a5)) == std::vector<std::size_t>{1, 60});

  CHECK(normal_subgroups(build_group("C(6)")).size() == 4);  // one per divisor

  // abelian group: every subgroup is normal
  CHECK(normal_subgroups(build_group("C12")).size() == 6);
}

TEST_CASE("normal closure") {
  auto s4 = build_group("S4");
  auto whole = normal_closure(s4, {parse_permutation("(1 2)", 4)});
  CHECK(whole.same_elements(s4));
  auto v4 = normal_closure(s4, {parse_permutation("(1 2)(3 4)", 4)});
  CHECK(v4.order() == 4);
}

TEST_CASE("minimal normal subgroups and socle") {
  auto s4 = build_group("S4");
  auto mins = minimal_normal_subgroups(s4);
  CHECK(mins.size() == 1);
  CHECK(mins[0].order() == 4);
  CHECK(socle(s4).order() == 4);

  auto a5 = build_group("A5");
  CHECK(socle(a5).same_elements(a5));

  auto wr = build_group("wr(A5,C2)");
  auto wr_mins = minimal_normal_subgroups(wr);
  REQUIRE(wr_mins.size() == 1);  // the coordinate swap fuses the two factors
  CHECK(wr_mins[0].order() == 3600);

  auto prod = build_group("A5 x A5");
  CHECK(minimal_normal_subgroups(prod).size() == 2);
  CHECK(socle(prod).same_elements(prod));
}

TEST_CASE("minimal normals above a base") {
  auto s4 = build_group("S4");
  auto v4 = normal_closure(s4, {parse_permutation("(1 2)(3 4)", 4)});
  auto above = minimal_normals_above(s4, v4);
  REQUIRE(above.size() == 1);
  CHECK(above[0].order() == 12);
  CHECK_THROWS_AS(minimal_normals_above(s4, PermGroup::generate({parse_permutation("(1 2)", 4)})),
                  DomainError);
}

TEST_CASE("chief series") {
  CHECK(factor_orders(chief_series(build_group("S4"))) == std::vector<std::size_t>{4, 3, 2});

  auto a5s = chief_series(build_group("A5"));
  CHECK(factor_orders(a5s) == std::vector<std::size_t>{60});

  auto orders = factor_orders(chief_series(build_group("C12")));
  std::multiset<std::size_t> got(orders.begin(), orders.end());
  CHECK(got == std::multiset<std::size_t>{2, 2, 3});
}

TEST_CASE("chief series terms are normal and factors are chief") {
  for (const char* expr : {"S4", "D12", "SL25", "A5 x C2"}) {
    auto g = build_group(expr);
    auto s = chief_series(g);
    REQUIRE(s.terms.front().is_trivial());
    REQUIRE(s.terms.back().same_elements(g));
    for (std::size_t i = 0; i < s.factor_count(); ++i) {
      CHECK(g.is_normal_subgroup(s.terms[i]));
      // no normal subgroup strictly between consecutive terms
      for (const auto& n : normal_subgroups(g)) {
        bool contains_lo = n.contains_group(s.terms[i]);
        bool inside_hi = s.terms[i + 1].contains_group(n);
        if (contains_lo && inside_hi) {
          CHECK((n.order() == s.terms[i].order() || n.order() == s.terms[i + 1].order()));
        }
      }
    }
  }
}

TEST_CASE("seeded chief series reach the same factor multiset") {
  auto g = build_group("S4 x C2");
  auto base = factor_orders(chief_series(g));
  std::multiset<std::size_t> want(base.begin(), base.end());
  for (std::uint64_t seed : {1u, 7u, 42u}) {
    auto alt = factor_orders(chief_series_seeded(g, seed));
    CHECK(std::multiset<std::size_t>(alt.begin(), alt.end()) == want);
  }
}

TEST_CASE("chief series through waypoints") {
  auto s4 = build_group("S4");
  auto v4 = normal_closure(s4, {parse_permutation("(1 2)(3 4)", 4)});
  auto s = chief_series_through(s4, {v4});
  bool hits = false;
  for (const auto& t : s.terms) hits = hits || t.same_elements(v4);
  CHECK(hits);
  CHECK(factor_orders(s) == std::vector<std::size_t>{4, 3, 2});

  auto c2 = PermGroup::generate({parse_permutation("(1 2)", 4)});
  CHECK_THROWS_AS(chief_series_through(s4, {c2}), DomainError);
}

TEST_CASE("soluble radical") {
  auto s4 = build_group("S4");
  CHECK(soluble_radical(s4).same_elements(s4));
  CHECK(soluble_radical(build_group("A5")).is_trivial());
  CHECK(soluble_radical(build_group("S5")).is_trivial());
  CHECK(soluble_radical(build_group("SL25")).order() == 2);
}

TEST_CASE("centralizer of a section") {
  auto s3 = build_group("S3");
  auto a3 = derived_series(s3)[1];
  auto cent = centralizer_of_section(s3, Section{s3, a3, PermGroup::trivial(3)});
  CHECK(cent.same_elements(a3));

  auto s4 = build_group("S4");
  auto v4 = normal_closure(s4, {parse_permutation("(1 2)(3 4)", 4)});
  CHECK(centralizer_of_section(s4, Section{s4, v4, PermGroup::trivial(4)}).same_elements(v4));

  // central factor: the whole group centralizes it
  auto d8 = build_group("D8");
  auto z = center(d8);
  CHECK(centralizer_of_section(d8, Section{d8, z, PermGroup::trivial(4)}).same_elements(d8));
}

TEST_CASE("subgroup enumeration") {
  CHECK(all_subgroups(build_group("S3")).size() == 6);
  CHECK(all_subgroups(build_group("C(5)")).size() == 2);
  CHECK(all_subgroups(build_group("D8")).size() == 10);
  CHECK_THROWS_AS(all_subgroups(build_group("S5"), 100), SubgroupBudgetExceeded);
}

TEST_CASE("subgroup counts match the subset-closure oracle") {
  for (const char* expr : {"S3", "S4", "D8", "C12", "A4", "D16", "C2 x C2 x C2"}) {
    auto g = build_group(expr);
    CHECK_MESSAGE(all_subgroups(g).size() == oracles::subgroup_count(g), expr);
  }
}

TEST_CASE("subgroup catalog bookkeeping is consistent") {
  auto g = build_group("S4");
  auto cat = subgroup_catalog(g);
  CHECK(cat.subgroups.size() == 30);
  CHECK(cat.subgroups.front().is_trivial());
  CHECK(cat.subgroups.back().same_elements(g));
  for (std::size_t i = 0; i < cat.subgroups.size(); ++i) {
    CHECK(bits_count(cat.member_bits[i]) == cat.subgroups[i].order());
    CHECK(cat.conj_class_of[i] < cat.conj_classes.size());
  }
  std::size_t listed = 0;
  for (const auto& cc : cat.conj_classes) listed += cc.size();
  CHECK(listed == cat.subgroups.size());
}

TEST_CASE("characteristically simple decomposition") {
  auto s4 = build_group("S4");
  auto v4 = normal_closure(s4, {parse_permutation("(1 2)(3 4)", 4)});
  auto parts = decompose_char_simple(Section{s4, v4, PermGroup::trivial(4)});
  CHECK(parts.abelian);
  CHECK(parts.prime == 2);
  CHECK(parts.multiplicity == 2);

  auto s5 = build_group("S5");
  auto a5 = derived_series(s5)[1];
  auto top = decompose_char_simple(Section{s5, a5, PermGroup::trivial(5)});
  CHECK_FALSE(top.abelian);
  CHECK(top.multiplicity == 1);
  REQUIRE(top.types.size() == 1);
  CHECK(top.types[0].name == "A5");

  auto wr = build_group("wr(A5,C2)");
  auto base = minimal_normal_subgroups(wr)[0];
  auto both = decompose_char_simple(Section{wr, base, PermGroup::trivial(10)});
  CHECK_FALSE(both.abelian);
  CHECK(both.multiplicity == 2);
  REQUIRE(both.types.size() == 2);
  CHECK(both.types[0].name == "A5");
  CHECK(both.types[1].name == "A5");

  // S4 itself is not characteristically simple
  CHECK_THROWS_AS(decompose_char_simple(Section{s4, s4, PermGroup::trivial(4)}), DomainError);
}

TEST_CASE("simplicity and recognition") {
  CHECK_FALSE(is_simple(build_group("C(6)")));
  CHECK_FALSE(is_simple(build_group("S4")));
  CHECK(is_simple(build_group("A5")));
  CHECK(is_simple(build_group("PSL(2,7)")));

  auto a5 = identify_simple(build_group("A5"));
  CHECK(a5.name == "A5");
  CHECK(a5.out_order == 2);

  auto psl = identify_simple(build_group("PSL(2,7)"));
  CHECK(psl.name == "PSL(2,7)");
  CHECK(psl.out_order == 2);
}

TEST_CASE("indexed multiplication tables") {
  auto g = build_group("S4");
  IndexedGroup ix(g);
  CHECK(ix.order() == 24);
  for (std::uint16_t i = 0; i < 24; ++i) {
    CHECK(ix.mul(i, ix.identity_index()) == i);
    CHECK(ix.mul(i, ix.inv(i)) == ix.identity_index());
    for (std::uint16_t j = 0; j < 24; ++j) {
      CHECK(g.elements()[ix.mul(i, j)] == g.elements()[i] * g.elements()[j]);
    }
  }
}
