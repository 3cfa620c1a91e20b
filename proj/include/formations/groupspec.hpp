// Builder expressions for permutation groups, and the corpus manifest that
// names one group per line.
//
// Grammar:   expr ::= atom ( "x" atom )*            direct product
//            atom ::= "S(" n ")" | "A(" n ")" | "C(" n ")" | "D(" n ")"
//                   | "PSL(2," p ")" | "SL25" | "wr(" expr "," expr ")"
//                   | compact | json
// S/A/C are the symmetric, alternating and cyclic groups in their natural
// degree; D(n) is the dihedral group of order n (n even, n >= 4); PSL(2,p)
// acts on the p+1 projective points (p prime, p <= 23); SL25 is the group
// of determinant-1 2x2 matrices over the 5-element field acting on the 24
// nonzero vectors. Compact forms S5, A6, C12, D8 abbreviate the call forms.
// A json atom spells out generators: {"degree":d,"gens":[...]} where each
// generator is a cycle string like "(1 2 3)(4 5)" or a 1-based image array.
#pragma once

#include <string>
#include <vector>

#include "formations/config.hpp"
#include "formations/group.hpp"

namespace formations {

// Throws ParseError on malformed input, DomainError on out-of-range
// builder arguments, ElementCapExceeded past budgets.element_cap.
PermGroup build_group(const std::string& expr, const Budgets& budgets = {});

struct ManifestEntry {
  std::string label;
  std::string expr;
};

// One entry per line, "label := expr". Blank lines and lines starting with
// '#' are skipped.
std::vector<ManifestEntry> parse_manifest(const std::string& text);

}  // namespace formations
