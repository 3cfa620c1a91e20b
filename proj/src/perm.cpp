#include "formations/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace formations {

Permutation::Permutation(std::size_t degree) {
  if (degree == 0) throw DomainError("permutation degree must be at least 1");
  if (degree > 65535) throw SizeGuardExceeded("permutation degree too large");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw DomainError("permutation degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw DomainError("image list is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<Point> zero;
  zero.reserve(images.size());
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size())
      throw DomainError("image out of range in 1-based image list");
    zero.push_back(static_cast<Point>(v - 1));
  }
  return from_images(std::move(zero));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw DomainError("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    r.images_[x] = rhs.images_[images_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = images_[j];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<int> Permutation::one_based_images() const {
  std::vector<int> out;
  out.reserve(degree());
  for (Point v : images_) out.push_back(static_cast<int>(v) + 1);
  return out;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  // (g^-1 a g)(x) = g(a(g^-1(x))); compute without materializing g^-1.
  if (a.degree() != g.degree())
    throw DomainError("degree mismatch in conjugation");
  std::vector<Point> img(a.degree());
  for (std::size_t x = 0; x < a.degree(); ++x)
    img[g.apply(static_cast<Point>(x))] = g.apply(a.apply(static_cast<Point>(x)));
  return Permutation::from_images(std::move(img));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermHash::operator()(const Permutation& p) const {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= static_cast<std::uint64_t>(v) + 1;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535)
    throw DomainError("unsupported degree for permutation parse");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) != 0)) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text", i);
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && (text[i] == ',')) {
        ++i;
        continue;
      }
      if (i == text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i])) == 0)
        throw ParseError("expected point or ')'", i);
      std::size_t start = i;
      std::size_t val = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
        val = val * 10 + static_cast<std::size_t>(text[i] - '0');
        if (val > 1000000) throw ParseError("point out of range", start);
        ++i;
      }
      if (val < 1 || val > degree) throw ParseError("point outside 1..degree", start);
      if (used[val - 1]) throw ParseError("repeated point", start);
      used[val - 1] = true;
      cycle.push_back(val - 1);
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
  }
  skip_ws();
  if (!any_cycle) throw ParseError("no cycles found", 0);
  if (i != text.size()) throw ParseError("trailing garbage after cycles", i);
  return Permutation::from_images(std::move(img));
}

}  // namespace formations
