#include "formations/classes.hpp"

#include <algorithm>
#include <cctype>

#include "formations/errors.hpp"

namespace formations {

namespace {

bool table_has_name(const std::string& n) {
  for (const SimpleType& t : simple_group_table())
    if (t.name == n) return true;
  return false;
}

std::size_t table_rank(const std::string& n) {
  const auto& t = simple_group_table();
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].name == n) return i;
  return t.size();
}

std::vector<std::string> canonical_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    const std::size_t ra = table_rank(a), rb = table_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

// Groups all of whose proper subgroups are soluble; when every listed name
// is one of these, every simple section of a member group is again listed,
// so the E class is closed under taking subgroups.
bool sections_stay_listed(const std::vector<std::string>& names) {
  static const std::vector<std::string> minimal = {
      "A5",        "PSL(2,7)",  "PSL(2,8)",  "PSL(2,13)", "PSL(2,17)", "PSL(2,23)",
      "PSL(2,27)", "PSL(2,32)", "PSL(2,37)", "PSL(2,43)", "Sz(8)",     "PSL(3,3)"};
  for (const std::string& n : names)
    if (std::find(minimal.begin(), minimal.end(), n) == minimal.end()) return false;
  return true;
}

}  // namespace

bool JSet::admits(const SimpleType& t) const {
  if (t.abelian) return false;
  if (all) return true;
  return std::find(names.begin(), names.end(), t.name) != names.end();
}

std::string JSet::text() const {
  if (all) return "all";
  return "{" + join_names(names) + "}";
}

GroupClass builtin(const std::string& name) {
  GroupClass c;
  if (name == "abelian") {
    c.kind = ClassKind::Abelian;
    c.name = "Ab";
    c.flags = {true, true, false, false};
  } else if (name == "nilpotent") {
    c.kind = ClassKind::Nilpotent;
    c.name = "N";
    c.flags = {true, true, true, true};
  } else if (name == "soluble") {
    c.kind = ClassKind::Soluble;
    c.name = "S";
    c.flags = {true, true, true, true};
  } else if (name == "supersoluble") {
    c.kind = ClassKind::Supersoluble;
    c.name = "U";
    c.flags = {true, true, true, true};
  } else {
    throw DomainError("unknown builtin class: " + name);
  }
  return c;
}

GroupClass comp_factors_in(std::vector<std::string> simple_names) {
  for (const std::string& n : simple_names)
    if (!table_has_name(n)) throw DomainError("unknown simple-group name: " + n);
  GroupClass c;
  c.kind = ClassKind::CompFactors;
  c.base_names = canonical_names(std::move(simple_names));
  c.name = c.base_names.empty() ? "E(S)" : "E(S|" + join_names(c.base_names) + ")";
  c.flags.is_formation = true;
  // Quotients of Frattini factors only add soluble composition factors, so
  // having all solubles in the base keeps the class saturated.
  c.flags.is_saturated = true;
  c.flags.is_hereditary = sections_stay_listed(c.base_names);
  c.flags.contains_nilpotent = true;
  return c;
}

GroupClass jcs_class(const GroupClass& f, JSet j) {
  if (!f.flags.is_formation)
    throw DomainError("Jcs needs a formation as its inner class");
  if (!j.all) {
    for (const std::string& n : j.names)
      if (!table_has_name(n)) throw DomainError("unknown simple-group name: " + n);
    j.names = canonical_names(std::move(j.names));
    if (j.names.empty()) throw DomainError("empty simple-group list");
  }
  GroupClass c;
  c.kind = ClassKind::Jcs;
  c.inner = std::make_shared<GroupClass>(f);
  c.jset = std::move(j);
  c.name = "Jcs(" + f.name + ", " + c.jset.text() + ")";
  c.flags.is_formation =
      f.flags.is_formation && f.flags.is_saturated && f.flags.contains_nilpotent;
  c.flags.contains_nilpotent = f.flags.contains_nilpotent;
  return c;
}

GroupClass ca_class(const GroupClass& f) {
  if (!f.flags.is_formation)
    throw DomainError("ca needs a formation as its inner class");
  GroupClass c;
  c.kind = ClassKind::Ca;
  c.inner = std::make_shared<GroupClass>(f);
  c.name = "ca(" + f.name + ")";
  c.flags.is_formation =
      f.flags.is_formation && f.flags.is_saturated && f.flags.contains_nilpotent;
  c.flags.contains_nilpotent = f.flags.contains_nilpotent;
  return c;
}

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit ExprParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw ParseError(std::string("expected '") + c + "'", pos);
  }

  bool peek_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) != 0) return false;
    const std::size_t end = pos + w.size();
    // Keep "S" from swallowing the start of "Sz8" and similar.
    if (end < s.size() && std::isalnum(static_cast<unsigned char>(s[end]))) return false;
    return true;
  }

  bool eat_word(const std::string& w) {
    if (!peek_word(w)) return false;
    skip_ws();
    pos += w.size();
    return true;
  }

  // A table name: letters and digits, optionally followed by a short
  // parenthesized argument list, e.g. A5, M11, Sz(8), PSL(2,7).
  std::string parse_name() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a simple-group name", pos);
    std::string name = s.substr(start, pos - start);
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      name += '(';
      while (pos < s.size() && s[pos] != ')') {
        if (!std::isspace(static_cast<unsigned char>(s[pos]))) name += s[pos];
        ++pos;
      }
      if (pos == s.size()) throw ParseError("unterminated name argument list", start);
      ++pos;
      name += ')';
    }
    if (!table_has_name(name))
      throw ParseError("unknown simple-group name: " + name, start);
    return name;
  }

  std::vector<std::string> parse_namelist(char terminator) {
    std::vector<std::string> names{parse_name()};
    while (eat(',')) names.push_back(parse_name());
    skip_ws();
    if (pos >= s.size() || s[pos] != terminator)
      throw ParseError(std::string("expected '") + terminator + "' after name list", pos);
    return names;
  }

  GroupClass parse_expr() {
    skip_ws();
    if (eat_word("Jcs")) {
      expect('(');
      GroupClass inner = parse_expr();
      expect(',');
      JSet j;
      if (eat_word("all")) {
        j.all = true;
      } else {
        expect('{');
        j.all = false;
        j.names = parse_namelist('}');
        expect('}');
      }
      expect(')');
      return jcs_class(inner, std::move(j));
    }
    if (eat_word("ca")) {
      expect('(');
      GroupClass inner = parse_expr();
      expect(')');
      return ca_class(inner);
    }
    if (eat_word("E")) {
      expect('(');
      skip_ws();
      if (pos >= s.size() || s[pos] != 'S')
        throw ParseError("expected base 'S' or 'S|...'", pos);
      ++pos;
      std::vector<std::string> names;
      if (eat('|')) names = parse_namelist(')');
      expect(')');
      return comp_factors_in(std::move(names));
    }
    if (eat_word("N")) return builtin("nilpotent");
    if (eat_word("U")) return builtin("supersoluble");
    if (eat_word("Ab")) return builtin("abelian");
    if (eat_word("S")) return builtin("soluble");
    throw ParseError("expected a class expression", pos);
  }
};

}  // namespace

GroupClass parse_class_expr(const std::string& text) {
  ExprParser p(text);
  GroupClass c = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input after class expression", p.pos);
  return c;
}

}  // namespace formations
