#include "tropgroups/perm.hpp"

#include <cctype>
#include <numeric>

#include "tropgroups/errors.hpp"

namespace tropgroups {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Perm: not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  Perm p;
  p.images_.resize(n);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  Perm p = identity(n);
  std::vector<bool> moved(n, false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= n) throw ParseError("cycle point out of range");
      if (moved[c[k]]) throw ParseError("point repeated across cycles");
      moved[c[k]] = true;
      p.images_[c[k]] = c[(k + 1) % c.size()];
    }
  return p;
}

Perm Perm::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in '" + std::string(text) + "'");
    ++pos;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw ParseError("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("bad cycle notation '" + std::string(text) + "'");
      const auto value = std::stoul(std::string(text.substr(start, pos - start)));
      if (value == 0 || value > degree)
        throw ParseError("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<Perm::Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    std::vector<Point> c;
    for (Point i = static_cast<Point>(s); !seen[i]; i = images_[i]) {
      seen[i] = true;
      c.push_back(i);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DimensionMismatch("Perm product: degrees differ");
  Perm r;
  r.images_.resize(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

}  // namespace tropgroups
