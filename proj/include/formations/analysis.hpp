// Chief-factor centrality, the class hypercenter and residual, maximal
// member intersection, and the three-way structural condition evaluator.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "formations/classes.hpp"
#include "formations/config.hpp"
#include "formations/group.hpp"
#include "formations/structure.hpp"

namespace formations {

// How a centrality query decides between the explicit semidirect build and
// the class's shortcut rule.
enum class PathPolicy {
  Auto,            // explicit when |A|*|Q| fits the semidirect budget, else shortcut
  ForceExplicit,   // always build the semidirect product; size errors propagate
  ForceShortcut,   // never build it; error if the class has no rule
};

struct CentralityResult {
  bool central = false;
  bool used_shortcut = false;
};

// Whether the chief factor s of g is cls-central: the test group
// A x| g/C_g(A), with A the factor realized as a group, lies in cls.
// Every shipped class has a shortcut rule, so Auto never fails; the
// explicit build is the primary path whenever it fits the budget.
CentralityResult central_factor_detail(const PermGroup& g, const Section& s,
                                       const GroupClass& cls,
                                       const Budgets& budgets = {},
                                       PathPolicy policy = PathPolicy::Auto);
bool is_central_factor(const PermGroup& g, const Section& s, const GroupClass& cls,
                       const Budgets& budgets = {},
                       PathPolicy policy = PathPolicy::Auto);

// Class membership. The chief-factor classes walk a deterministic chief
// series; `witness`, when non-null, receives a one-line reason on failure.
bool member(const GroupClass& cls, const PermGroup& g, const Budgets& budgets = {},
            std::string* witness = nullptr);
// Same verdict computed on a caller-supplied series (seed-invariance tests).
bool member_on_series(const GroupClass& cls, const ChiefSeries& series,
                      const Budgets& budgets = {}, std::string* witness = nullptr);

// Largest normal subgroup all of whose chief factors below it are
// cls-central in g. Ascending fixpoint: each layer joins every cls-central
// minimal normal subgroup above the current term.
PermGroup hypercenter(const PermGroup& g, const GroupClass& cls,
                      const Budgets& budgets = {});

// Smallest normal n with g/n in cls. The final quotient is re-checked for
// membership; FormationConsistencyViolation when that fails (a wrong
// is_formation flag on cls).
PermGroup residual(const PermGroup& g, const GroupClass& cls,
                   const Budgets& budgets = {});

// Subgroups in cls maximal under inclusion among cls-subgroups, every
// conjugate listed, and their intersection. SubgroupBudgetExceeded when |g|
// is over the enumeration budget. Passing a prebuilt catalog for g skips
// the enumeration.
std::vector<PermGroup> f_maximal_subgroups(const PermGroup& g, const GroupClass& cls,
                                           const Budgets& budgets = {},
                                           const SubgroupCatalog* catalog = nullptr);
PermGroup int_f(const PermGroup& g, const GroupClass& cls,
                const Budgets& budgets = {},
                const SubgroupCatalog* catalog = nullptr);

// True when sub is the direct product of minimal normal subgroups of q,
// each a non-abelian simple group admitted by j. Directness is certified by
// the order product; the trivial subgroup passes vacuously. On failure the
// reason lands in *why; on success the simple type names land in *types_out.
bool splits_into_invariant_simple(const PermGroup& q, const PermGroup& sub, const JSet& j,
                                  const Budgets& budgets = {}, std::string* why = nullptr,
                                  std::vector<std::string>* types_out = nullptr);

// The three equivalent descriptions of membership in Jcs(f, j), evaluated
// independently of each other:
//   b1  chief-factor walk (the definition);
//   b2  with z the f-hypercenter and s the preimage of socle(g/z): every
//       minimal normal subgroup of g/z is a simple j-group and g/s is a
//       soluble f-group;
//   b3  the f-residual equals the residual of the matching composition-
//       factor class, its center lies in z, and residual/center is a direct
//       product of g-invariant simple j-groups.
// f must be a saturated formation containing the nilpotent groups whose
// members keep all their composition factors inside f (true for the
// builtin supersoluble/nilpotent/soluble classes and for E(...) classes).
struct T2Result {
  bool b1 = false, b2 = false, b3 = false;
  std::string witness_b1, witness_b2, witness_b3;
  std::size_t residual_order = 0;         // |g^f|
  std::size_t residual_center_order = 0;  // |Z(g^f)|
  std::vector<std::string> residual_quotient_types;  // simple pieces of g^f/Z(g^f)
};
T2Result t2_conditions(const PermGroup& g, const GroupClass& f, const JSet& j,
                       const Budgets& budgets = {});

struct FactorAnnotation {
  std::size_t order = 0;
  bool abelian = false;
  std::optional<bool> central;  // empty when undecidable within budgets
  std::string simple_type;      // constituent type, e.g. "C2", "A5"
  std::size_t multiplicity = 0;
};

struct AnalysisReport {
  std::string group_label;
  std::string class_name;
  std::size_t group_order = 0;
  bool is_member = false;
  std::string witness;
  std::vector<FactorAnnotation> chief_factors;  // ascending series order
  std::size_t hypercenter_order = 0;
  std::size_t residual_order = 0;
  std::optional<std::size_t> int_order;  // absent over the subgroup budget
  std::optional<T2Result> t2;            // present for qualifying Jcs classes
};

AnalysisReport analyze(const PermGroup& g, const std::string& group_label,
                       const GroupClass& cls, const Budgets& budgets = {});

std::string report_text(const AnalysisReport& r);
// One JSON document; field names and ordering are stable across versions.
std::string report_structured(const AnalysisReport& r);

}  // namespace formations
