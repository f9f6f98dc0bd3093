#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wmetric {

/// Ordinal notation: a Cantor-normal-form term below w^w (natural-number
/// exponents, natural coefficients) or the symbolic uncountable ordinal
/// Omega. Omega compares above every CNF term; nothing enumerates below it.
class Ordinal {
 public:
  struct Term {
    std::uint32_t exponent;
    std::uint64_t coefficient;
    bool operator==(const Term&) const = default;
  };

  enum class Cofinality { Zero, One, Omega, Uncountable };

  Ordinal() = default;

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega_power(std::uint32_t exponent, std::uint64_t coefficient = 1);
  static Ordinal omega() { return omega_power(1); }
  static Ordinal omega_1();

  /// Accepts `0`, `7`, `w`, `w*3`, `w^2*3+w+5` (also `omega`), and
  /// `omega-1` / `Omega` / `w1` for the symbolic uncountable ordinal.
  /// Summands are combined with ordinal addition, so `3+w` parses as `w`.
  static Ordinal parse(std::string_view text);

  std::string to_string() const;

  bool is_zero() const noexcept { return !symbolic_ && terms_.empty(); }
  bool is_symbolic() const noexcept { return symbolic_; }
  bool is_finite() const noexcept;
  bool is_successor() const noexcept;
  bool is_limit() const noexcept;

  /// Throws InvalidArgument unless the ordinal is finite.
  std::uint64_t finite_value() const;
  /// Largest limit ordinal (or zero) below or equal to this one, and the
  /// finite remainder: *this == limit_part() + finite_part().
  Ordinal limit_part() const;
  std::uint64_t finite_part() const;

  Ordinal successor() const;
  Ordinal predecessor() const;

  /// Ordinal (non-commutative) sum.
  Ordinal operator+(const Ordinal& rhs) const;
  /// Hessenberg natural sum.
  Ordinal natural_sum(const Ordinal& rhs) const;

  Cofinality cofinality() const noexcept;

  /// j-th entry of the canonical strictly increasing w-sequence cofinal in
  /// this limit ordinal: for this == g + w^e it is g + w^(e-1)*(j+1).
  Ordinal cofinal_entry(std::uint64_t j) const;

  /// Size measure used to enumerate notations: sum of exponents and
  /// coefficients over the terms.
  std::uint64_t weight() const noexcept;

  const std::vector<Term>& terms() const noexcept { return terms_; }

  std::strong_ordering operator<=>(const Ordinal& rhs) const noexcept;
  bool operator==(const Ordinal& rhs) const noexcept = default;

 private:
  std::vector<Term> terms_;  // strictly decreasing exponents, coefficients > 0
  bool symbolic_ = false;
};

/// All CNF ordinals of exactly the given weight, ascending.
std::vector<Ordinal> ordinals_of_weight(std::uint64_t weight);

}  // namespace wmetric

template <>
struct std::hash<wmetric::Ordinal> {
  std::size_t operator()(const wmetric::Ordinal& o) const noexcept;
};
