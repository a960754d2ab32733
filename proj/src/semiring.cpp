#include "tropgroups/semiring.hpp"

#include <algorithm>
#include <cctype>

#include "tropgroups/errors.hpp"

namespace tropgroups {

std::string rational_to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Rational parse_unsigned_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(text)) throw ParseError("bad rational '" + std::string(text) + "'");
    return Rational(boost::multiprecision::cpp_int(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("bad rational '" + std::string(text) + "'");
  boost::multiprecision::cpp_int d(std::string{den});
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(boost::multiprecision::cpp_int(std::string{num}), d);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    Rational r = parse_unsigned_rational(text.substr(1));
    return text.front() == '-' ? Rational(-r) : r;
  }
  return parse_unsigned_rational(text);
}

Value::Value(Rational standard, std::vector<Term> infinitesimals)
    : standard_(std::move(standard)), terms_(std::move(infinitesimals)) {
  normalize();
}

Value Value::infinitesimal(Tag tag, Rational coefficient) {
  return Value(0, {{tag, std::move(coefficient)}});
}

void Value::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

Rational Value::coefficient(Tag tag) const {
  for (const auto& [k, c] : terms_)
    if (k == tag) return c;
  return 0;
}

Value Value::operator-() const {
  Value r;
  r.standard_ = -standard_;
  r.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) r.terms_.emplace_back(k, -c);
  return r;
}

namespace {

// Merge two sorted term lists with the given sign for the second.
std::vector<Value::Term> merge_terms(const std::vector<Value::Term>& a,
                                     const std::vector<Value::Term>& b, bool subtract) {
  std::vector<Value::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Value& Value::operator+=(const Value& other) {
  standard_ += other.standard_;
  if (!other.terms_.empty()) terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Value& Value::operator-=(const Value& other) {
  standard_ -= other.standard_;
  if (!other.terms_.empty()) terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Value Value::scaled(const Rational& factor) const {
  if (factor == 0) return Value();
  Value r;
  r.standard_ = standard_ * factor;
  r.terms_.reserve(terms_.size());
  for (const auto& [k, c] : terms_) r.terms_.emplace_back(k, c * factor);
  return r;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.standard_ != b.standard_)
    return a.standard_ < b.standard_ ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    // The term with the smaller tag dominates; an absent term is 0.
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      return a.terms_[i].second > 0 ? std::strong_ordering::greater
                                    : std::strong_ordering::less;
    }
    if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      return b.terms_[j].second > 0 ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
    }
    if (a.terms_[i].second != b.terms_[j].second)
      return a.terms_[i].second < b.terms_[j].second ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::string Value::to_string() const {
  std::string out = rational_to_string(standard_);
  for (const auto& [k, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    out += neg ? '-' : '+';
    if (mag != 1) {
      out += rational_to_string(mag);
      if (boost::multiprecision::denominator(mag) != 1) out += '*';
    }
    out += 'e' + std::to_string(k);
  }
  return out;
}

Value Value::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty value");

  Rational standard = 0;
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected sign in '" + s + "'");
    }
    first = false;
    const std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    const std::string_view coeff_text(s.data() + start, pos - start);
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'e') {
      ++pos;
      const std::size_t tag_start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      const std::string_view tag_text(s.data() + tag_start, pos - tag_start);
      if (!all_digits(tag_text)) throw ParseError("bad infinitesimal tag in '" + s + "'");
      Rational c = coeff_text.empty() ? Rational(1) : parse_unsigned_rational(coeff_text);
      if (neg) c = -c;
      terms.emplace_back(static_cast<Tag>(std::stoul(std::string(tag_text))), std::move(c));
    } else {
      if (coeff_text.empty()) throw ParseError("bad value '" + s + "'");
      Rational c = parse_unsigned_rational(coeff_text);
      standard += neg ? Rational(-c) : c;
    }
  }
  return Value(std::move(standard), std::move(terms));
}

Value value_div_int(const Value& a, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("value_div_int: k must be positive");
  return a.scaled(Rational(1, k));
}

Value abs(const Value& a) { return a < Value() ? -a : a; }

std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b) {
  if (!a.is_finite() || !b.is_finite()) return a.is_finite() <=> b.is_finite();
  return a.value() <=> b.value();
}

std::string TropScalar::to_string() const {
  return is_finite() ? value_->to_string() : std::string("-inf");
}

TropScalar TropScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "-inf" || s == "-oo" || s == "-∞") return {};
  return Value::parse(s);
}

TropScalar trop_add(const TropScalar& a, const TropScalar& b) { return a < b ? b : a; }

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
  if (!a.is_finite() || !b.is_finite()) return {};
  return a.value() + b.value();
}

bool free_basis_check(std::span<const Value> vals) {
  // Coordinates: 0 = standard part, then one per tag that occurs.
  std::vector<Tag> tags;
  for (const auto& v : vals)
    for (const auto& [k, c] : v.infinitesimals()) tags.push_back(k);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  const std::size_t dim = tags.size() + 1;
  if (vals.size() > dim) return false;

  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vals) {
    std::vector<Rational> row(dim, Rational(0));
    row[0] = v.standard();
    for (const auto& [k, c] : v.infinitesimals())
      row[1 + (std::lower_bound(tags.begin(), tags.end(), k) - tags.begin())] = c;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < dim; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank == rows.size();
}

}  // namespace tropgroups
