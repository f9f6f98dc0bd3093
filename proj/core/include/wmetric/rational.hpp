#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wmetric {

using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

/// Nonnegative exact rational or the absorbing top element.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational q);  // NOLINT: implicit from finite values
  ExtRational(long long n) : ExtRational(Rational(n)) {}  // NOLINT

  static ExtRational top();

  bool is_top() const noexcept { return top_; }
  bool is_zero() const noexcept { return !top_ && value_ == 0; }
  /// Throws for top.
  const Rational& value() const;

  ExtRational operator+(const ExtRational& rhs) const;
  /// max(x - e, 0); top - finite = top; anything - top = 0.
  ExtRational truncated_minus(const ExtRational& e) const;
  ExtRational scaled(const Rational& factor) const;

  std::strong_ordering operator<=>(const ExtRational& rhs) const;
  bool operator==(const ExtRational& rhs) const;

  std::string to_string() const;
  /// `top`, `T`, an integer, or `p/q`.
  static ExtRational parse(std::string_view text);

 private:
  Rational value_{0};
  bool top_ = false;
};

}  // namespace wmetric
