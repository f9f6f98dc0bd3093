#include "wmetric/rational.hpp"

#include <cctype>

#include "wmetric/error.hpp"

namespace wmetric {

Rational parse_rational(std::string_view text) {
  const auto bad = [&] { return Error(ErrorCode::Parse, "bad rational literal '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  const std::size_t slash = text.find('/');
  const auto digits = [&](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  using boost::multiprecision::cpp_int;
  if (slash == std::string_view::npos) {
    if (!digits(text)) throw bad();
    return Rational(cpp_int(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!digits(num) || !digits(den) || den[0] == '-') throw bad();
  const cpp_int d(std::string{den});
  if (d == 0) throw bad();
  return Rational(cpp_int(std::string(num)), d);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

ExtRational::ExtRational(Rational q) : value_(std::move(q)) {
  if (value_ < 0) throw Error(ErrorCode::InvalidArgument, "distances are nonnegative: " + format_rational(value_));
}

ExtRational ExtRational::top() {
  ExtRational t;
  t.top_ = true;
  return t;
}

const Rational& ExtRational::value() const {
  if (top_) throw Error(ErrorCode::InvalidArgument, "top has no rational value");
  return value_;
}

ExtRational ExtRational::operator+(const ExtRational& rhs) const {
  if (top_ || rhs.top_) return top();
  return ExtRational(value_ + rhs.value_);
}

ExtRational ExtRational::truncated_minus(const ExtRational& e) const {
  if (e.top_) return ExtRational();
  if (top_) return top();
  if (value_ <= e.value_) return ExtRational();
  return ExtRational(value_ - e.value_);
}

ExtRational ExtRational::scaled(const Rational& factor) const {
  if (top_) return factor == 0 ? ExtRational() : top();
  return ExtRational(value_ * factor);
}

std::strong_ordering ExtRational::operator<=>(const ExtRational& rhs) const {
  if (top_ || rhs.top_) return top_ <=> rhs.top_;
  if (value_ < rhs.value_) return std::strong_ordering::less;
  if (rhs.value_ < value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ExtRational::operator==(const ExtRational& rhs) const {
  return top_ == rhs.top_ && (top_ || value_ == rhs.value_);
}

std::string ExtRational::to_string() const { return top_ ? "top" : format_rational(value_); }

ExtRational ExtRational::parse(std::string_view text) {
  if (text == "top" || text == "T" || text == "inf") return top();
  return ExtRational(parse_rational(text));
}

}  // namespace wmetric
