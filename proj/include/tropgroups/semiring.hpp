#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tropgroups {

using Rational = boost::multiprecision::cpp_rational;
using Tag = std::uint32_t;

std::string rational_to_string(const Rational& q);
// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

// An element of the value group: a rational standard part plus finitely many
// rational multiples of infinitesimals e1 >> e2 >> ...  Ordered
// lexicographically with the standard part first.
class Value {
 public:
  using Term = std::pair<Tag, Rational>;

  Value() = default;
  Value(std::int64_t standard) : standard_(standard) {}  // NOLINT implicit
  Value(Rational standard) : standard_(std::move(standard)) {}  // NOLINT implicit
  Value(Rational standard, std::vector<Term> infinitesimals);

  static Value infinitesimal(Tag tag, Rational coefficient = 1);

  const Rational& standard() const { return standard_; }
  const std::vector<Term>& infinitesimals() const { return terms_; }
  Rational coefficient(Tag tag) const;
  bool is_zero() const { return standard_ == 0 && terms_.empty(); }

  Value operator-() const;
  Value& operator+=(const Value& other);
  Value& operator-=(const Value& other);
  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  Value scaled(const Rational& factor) const;

  friend bool operator==(const Value& a, const Value& b) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  std::string to_string() const;
  static Value parse(std::string_view text);

 private:
  void normalize();

  Rational standard_{0};
  std::vector<Term> terms_;  // sorted by tag, no zero coefficients
};

Value value_div_int(const Value& a, std::int64_t k);
Value abs(const Value& a);

// −∞ or a finite Value.  Default-constructed scalars are −∞.
class TropScalar {
 public:
  TropScalar() = default;
  TropScalar(Value v) : value_(std::move(v)) {}  // NOLINT implicit
  TropScalar(std::int64_t v) : value_(Value(v)) {}  // NOLINT implicit

  static TropScalar neg_inf() { return {}; }

  bool is_finite() const { return value_.has_value(); }
  bool is_neg_inf() const { return !value_.has_value(); }
  const Value& value() const { return *value_; }

  friend bool operator==(const TropScalar& a, const TropScalar& b) = default;
  friend std::strong_ordering operator<=>(const TropScalar& a, const TropScalar& b);

  std::string to_string() const;
  static TropScalar parse(std::string_view text);

 private:
  std::optional<Value> value_;
};

TropScalar trop_add(const TropScalar& a, const TropScalar& b);
TropScalar trop_mul(const TropScalar& a, const TropScalar& b);

// True iff the values are linearly independent over Q, viewed as vectors
// (standard part, infinitesimal coefficients).
bool free_basis_check(std::span<const Value> vals);

}  // namespace tropgroups
