#include "formations/groupspec.hpp"

#include <cctype>
#include <numeric>

#include "formations/errors.hpp"
#include "formations/smallmath.hpp"

#include "json.hpp"

namespace formations {

namespace {

PermGroup build_cyclic(std::size_t n, std::size_t cap) {
  if (n < 1 || n > 60000) throw DomainError("cyclic builder argument out of range");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::generate({Permutation::from_images(std::move(img))}, cap);
}

PermGroup build_symmetric(std::size_t n, std::size_t cap) {
  if (n < 1 || n > 60000) throw DomainError("symmetric builder argument out of range");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  swap01[0] = 1;
  swap01[1] = 0;
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::generate({Permutation::from_images(std::move(swap01)),
                              Permutation::from_images(std::move(cyc))},
                             cap);
}

PermGroup build_alternating(std::size_t n, std::size_t cap) {
  if (n < 1 || n > 60000) throw DomainError("alternating builder argument out of range");
  if (n < 3) return PermGroup::trivial(n == 0 ? 1 : n);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), 0);
    img[i] = static_cast<Point>(i + 1);
    img[i + 1] = static_cast<Point>(i + 2);
    img[i + 2] = static_cast<Point>(i);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  return PermGroup::generate(std::move(gens), cap);
}

PermGroup build_dihedral(std::size_t order, std::size_t cap) {
  if (order < 4 || order % 2 != 0 || order > 120000)
    throw DomainError("dihedral builder takes an even order >= 4");
  std::size_t m = order / 2;
  if (m == 2) {
    // two commuting flips; the polygon picture degenerates at order 4
    return PermGroup::generate({parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)},
                               cap);
  }
  std::vector<Point> rot(m);
  for (std::size_t i = 0; i < m; ++i) rot[i] = static_cast<Point>((i + 1) % m);
  std::vector<Point> flip(m);
  for (std::size_t i = 0; i < m; ++i) flip[i] = static_cast<Point>((m - i) % m);
  PermGroup g = PermGroup::generate({Permutation::from_images(std::move(rot)),
                                     Permutation::from_images(std::move(flip))},
                                    cap);
  if (g.order() != order) throw DomainError("dihedral builder produced a wrong order");
  return g;
}

PermGroup build_psl2(std::size_t p, std::size_t cap) {
  if (!is_prime(p) || p > 23)
    throw DomainError("the projective builder takes a prime p <= 23");
  // points 1..p encode the residues 0..p-1; point p+1 is the infinite one
  std::size_t deg = p + 1;
  std::vector<Point> shift(deg), inv(deg);
  for (std::size_t x = 0; x < p; ++x) shift[x] = static_cast<Point>((x + 1) % p);
  shift[p] = static_cast<Point>(p);
  auto neg_inverse = [&](std::size_t x) {
    for (std::size_t y = 1; y < p; ++y)
      if ((x * y) % p == p - 1) return y;
    return std::size_t{0};
  };
  inv[0] = static_cast<Point>(p);
  inv[p] = 0;
  for (std::size_t x = 1; x < p; ++x) inv[x] = static_cast<Point>(neg_inverse(x));
  PermGroup g = PermGroup::generate({Permutation::from_images(std::move(shift)),
                                     Permutation::from_images(std::move(inv))},
                                    cap);
  std::size_t expected = p * (p * p - 1) / (p == 2 ? 1 : 2);
  if (g.order() != expected) throw DomainError("projective builder produced a wrong order");
  return g;
}

PermGroup build_sl25(std::size_t cap) {
  // nonzero row vectors (a,b) over the 5-element field, point index 5a+b
  auto matrix_perm = [](int m00, int m01, int m10, int m11) {
    std::vector<Point> img(24);
    for (int a = 0; a < 5; ++a)
      for (int b = 0; b < 5; ++b) {
        if (a == 0 && b == 0) continue;
        int a2 = (a * m00 + b * m10) % 5;
        int b2 = (a * m01 + b * m11) % 5;
        img[a * 5 + b - 1] = static_cast<Point>(a2 * 5 + b2 - 1);
      }
    return Permutation::from_images(std::move(img));
  };
  PermGroup g =
      PermGroup::generate({matrix_perm(1, 1, 0, 1), matrix_perm(0, 1, 4, 0)}, cap);
  if (g.order() != 120) throw DomainError("special linear builder produced a wrong order");
  return g;
}

class ExprParser {
 public:
  ExprParser(const std::string& s, const Budgets& budgets) : s_(s), budgets_(budgets) {}

  PermGroup parse_toplevel() {
    PermGroup g = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input after group expression", pos_);
    return g;
  }

 private:
  PermGroup parse_expr() {
    PermGroup g = parse_atom();
    for (;;) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != 'x') return g;
      ++pos_;
      g = direct_product(g, parse_atom(), budgets_.element_cap);
    }
  }

  PermGroup parse_atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("expected a group expression", pos_);
    if (s_[pos_] == '{') return parse_json_atom();
    std::size_t word_start = pos_;
    std::string word;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      word += s_[pos_++];
    if (word.empty()) throw ParseError("expected a group expression", pos_);
    if (word == "wr") {
      expect('(');
      PermGroup a = parse_expr();
      expect(',');
      PermGroup b = parse_expr();
      expect(')');
      return wreath_regular(a, b, budgets_.element_cap);
    }
    if (word == "PSL") {
      expect('(');
      if (parse_number() != 2)
        throw ParseError("the projective builder is two-dimensional only", pos_);
      expect(',');
      std::size_t p = parse_number();
      expect(')');
      return build_psl2(p, budgets_.element_cap);
    }
    if (word == "SL") {
      std::size_t n = parse_number();
      if (n != 25) throw ParseError("unknown builder SL" + std::to_string(n), word_start);
      return build_sl25(budgets_.element_cap);
    }
    if (word.size() == 1 && (word[0] == 'S' || word[0] == 'A' || word[0] == 'C' || word[0] == 'D')) {
      std::size_t n;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '(') {
        expect('(');
        n = parse_number();
        expect(')');
      } else {
        n = parse_number();
      }
      switch (word[0]) {
        case 'S': return build_symmetric(n, budgets_.element_cap);
        case 'A': return build_alternating(n, budgets_.element_cap);
        case 'C': return build_cyclic(n, budgets_.element_cap);
        default: return build_dihedral(n, budgets_.element_cap);
      }
    }
    throw ParseError("unknown builder " + word, word_start);
  }

  PermGroup parse_json_atom() {
    std::size_t start = pos_;
    int depth = 0;
    bool in_string = false;
    for (; pos_ < s_.size(); ++pos_) {
      char c = s_[pos_];
      if (in_string) {
        if (c == '\\') ++pos_;
        else if (c == '"') in_string = false;
        continue;
      }
      if (c == '"') in_string = true;
      else if (c == '{') ++depth;
      else if (c == '}' && --depth == 0) { ++pos_; break; }
    }
    if (depth != 0) throw ParseError("unterminated generator record", start);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s_.substr(start, pos_ - start));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("bad generator record: ") + e.what(), start);
    }
    if (!j.contains("degree") || !j["degree"].is_number_unsigned())
      throw ParseError("generator record needs a positive \"degree\"", start);
    std::size_t degree = j["degree"].get<std::size_t>();
    if (degree < 1 || degree > 60000)
      throw ParseError("generator record degree out of range", start);
    if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty())
      throw ParseError("generator record needs a nonempty \"gens\" array", start);
    std::vector<Permutation> gens;
    for (const auto& item : j["gens"]) {
      if (item.is_string()) {
        gens.push_back(parse_permutation(item.get<std::string>(), degree));
      } else if (item.is_array()) {
        std::vector<int> images;
        for (const auto& v : item) {
          if (!v.is_number_integer())
            throw ParseError("image arrays must hold integers", start);
          images.push_back(v.get<int>());
        }
        if (images.size() != degree)
          throw ParseError("image array length must equal the degree", start);
        gens.push_back(Permutation::from_one_based(images));
      } else {
        throw ParseError("each generator is a cycle string or an image array", start);
      }
    }
    return PermGroup::generate(std::move(gens), budgets_.element_cap);
  }

  std::size_t parse_number() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (n > 1000000) throw ParseError("number out of range", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return n;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  const std::string& s_;
  Budgets budgets_;
  std::size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

PermGroup build_group(const std::string& expr, const Budgets& budgets) {
  return ExprParser(expr, budgets).parse_toplevel();
}

std::vector<ManifestEntry> parse_manifest(const std::string& text) {
  std::vector<ManifestEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t sep = t.find(":=");
    if (sep == std::string::npos)
      throw ParseError("manifest line " + std::to_string(line_no) + " lacks ':='", line_no);
    ManifestEntry e{trim(t.substr(0, sep)), trim(t.substr(sep + 2))};
    if (e.label.empty() || e.expr.empty())
      throw ParseError("manifest line " + std::to_string(line_no) +
                       " needs both a label and an expression", line_no);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace formations
