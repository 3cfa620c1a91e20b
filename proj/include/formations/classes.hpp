// Composable classes of finite groups: the four builtin classes, the
// composition-factor classes E(...), and the two chief-factor classes
// Jcs(...) and ca(...), plus the expression language that names them.
//
// Grammar:   expr ::= "N" | "U" | "S" | "Ab"
//                   | "E(" base ")" | "Jcs(" expr "," jset ")" | "ca(" expr ")"
//            base ::= "S" | "S|" namelist
//            jset ::= "all" | "{" namelist "}"
// where namelist entries are names from the simple-group table.
//
// Membership evaluation lives in analysis.hpp (Jcs/ca classes need the
// centrality machinery).
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "formations/simple_table.hpp"

namespace formations {

enum class ClassKind { Abelian, Nilpotent, Soluble, Supersoluble, CompFactors, Jcs, Ca };

// Which non-abelian simple groups a Jcs class accepts as non-central factors.
struct JSet {
  bool all = true;
  std::vector<std::string> names;  // canonical (table order), used when !all
  bool admits(const SimpleType& t) const;
  std::string text() const;  // "all" or "{A5, PSL(2,7)}"
};

// Asserted metadata; the harness tests their consequences on corpora rather
// than proving them.
struct ClassFlags {
  bool is_formation = false;
  bool is_hereditary = false;
  bool is_saturated = false;
  bool contains_nilpotent = false;
};

struct GroupClass {
  ClassKind kind = ClassKind::Soluble;
  std::string name;  // canonical expression text
  ClassFlags flags;
  std::vector<std::string> base_names;      // CompFactors: non-abelian names admitted
                                            // besides all soluble factors
  std::shared_ptr<const GroupClass> inner;  // Jcs, Ca
  JSet jset;                                // Jcs
};

// name is one of "abelian", "nilpotent", "soluble", "supersoluble".
GroupClass builtin(const std::string& name);

// Groups all of whose composition factors are soluble or listed by name.
GroupClass comp_factors_in(std::vector<std::string> simple_names);

// Groups on whose chief series every factor that is an f-group is f-central
// and every other factor is a single simple group admitted by j.
GroupClass jcs_class(const GroupClass& f, JSet j);

// Groups whose abelian chief factors are f-central and whose non-abelian
// chief factors are simple.
GroupClass ca_class(const GroupClass& f);

GroupClass parse_class_expr(const std::string& text);

}  // namespace formations
