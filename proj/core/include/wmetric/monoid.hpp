#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wmetric/law_report.hpp"
#include "wmetric/ordinal.hpp"
#include "wmetric/rational.hpp"

namespace wmetric {

struct TableElement {
  std::uint32_t index = 0;
  bool operator==(const TableElement&) const = default;
};

/// An element of some distance monoid. The value is only meaningful
/// relative to the Monoid instance that interprets it: a table index, an
/// extended rational, or (for reversed-ordinal monoids) an ordinal notation.
class DistanceValue {
 public:
  DistanceValue() = default;
  DistanceValue(TableElement e) : repr_(e) {}            // NOLINT
  DistanceValue(ExtRational q) : repr_(std::move(q)) {}  // NOLINT
  DistanceValue(Ordinal o) : repr_(std::move(o)) {}      // NOLINT

  bool is_table() const noexcept { return std::holds_alternative<TableElement>(repr_); }
  bool is_rational() const noexcept { return std::holds_alternative<ExtRational>(repr_); }
  bool is_ordinal() const noexcept { return std::holds_alternative<Ordinal>(repr_); }

  std::uint32_t table_index() const;
  const ExtRational& rational() const;
  const Ordinal& ordinal() const;

  bool operator==(const DistanceValue&) const = default;

 private:
  std::variant<TableElement, ExtRational, Ordinal> repr_;
};

enum class MonoidKind { FiniteTable, ExtendedRational, ReversedOrdinal };

struct CoinitDescriptor {
  enum class Kind { Finite, Omega, SymbolicUncountable };
  Kind kind = Kind::Finite;
  std::uint64_t order = 1;  // only for Finite

  static CoinitDescriptor finite(std::uint64_t n) { return {Kind::Finite, n}; }
  static CoinitDescriptor omega() { return {Kind::Omega, 0}; }
  static CoinitDescriptor uncountable() { return {Kind::SymbolicUncountable, 0}; }

  bool is_infinite() const noexcept { return kind != Kind::Finite; }
  std::string to_string() const;
  bool operator==(const CoinitDescriptor&) const = default;
};

class Monoid;
using MonoidPtr = std::shared_ptr<const Monoid>;

/// A commutative positively linear ordered monoid presented in one of three
/// ways. Finite tables are interpreted as given (run check_monoid_axioms
/// before trusting them); the rational and reversed-ordinal instances carry
/// declared properties for everything that cannot be computed.
///
/// ReversedOrdinal(h): carrier is the notations b <= h in reversed order, so
/// d(h) is 0 and d(0) is the largest distance; a + b is the larger distance,
/// i.e. the ordinal minimum.
class Monoid {
 public:
  /// `names` lists the chain in ascending order, names[0] is 0.
  /// `table[i][j]` is the index of names[i] + names[j].
  /// Throws MalformedTable on empty/duplicate names or bad dimensions.
  static MonoidPtr finite_table(std::vector<std::string> names,
                                std::vector<std::vector<std::uint32_t>> table);
  static MonoidPtr extended_rational();
  static MonoidPtr reversed_ordinal(Ordinal height);

  MonoidKind kind() const noexcept { return kind_; }
  std::string describe() const;
  bool operator==(const Monoid& rhs) const;

  // Finite-table accessors.
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  std::uint32_t table_entry(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  const std::vector<std::vector<std::uint32_t>>& table() const noexcept { return table_; }
  std::vector<DistanceValue> elements() const;

  // Reversed-ordinal accessors.
  const Ordinal& height() const noexcept { return height_; }
  DistanceValue at_ordinal(const Ordinal& beta) const;

  DistanceValue zero() const;
  /// Largest element, when the presentation has one (all three kinds do).
  DistanceValue top() const;
  bool contains(const DistanceValue& v) const;

  DistanceValue add(const DistanceValue& a, const DistanceValue& b) const;
  /// n * a as iterated addition (0 * a = 0).
  DistanceValue multiply(std::uint64_t n, const DistanceValue& a) const;
  std::strong_ordering compare(const DistanceValue& a, const DistanceValue& b) const;
  bool leq(const DistanceValue& a, const DistanceValue& b) const { return compare(a, b) <= 0; }
  bool less(const DistanceValue& a, const DistanceValue& b) const { return compare(a, b) < 0; }
  bool is_zero(const DistanceValue& a) const { return a == zero(); }
  DistanceValue min(const DistanceValue& a, const DistanceValue& b) const { return leq(a, b) ? a : b; }
  DistanceValue max(const DistanceValue& a, const DistanceValue& b) const { return leq(a, b) ? b : a; }
  /// Meet of a finite set; the empty meet is top.
  DistanceValue meet(std::span<const DistanceValue> values) const;
  DistanceValue join(std::span<const DistanceValue> values) const;
  /// Least y with x <= y + e (truncated subtraction).
  DistanceValue residual(const DistanceValue& x, const DistanceValue& e) const;

  /// Canonical halving hook h with 2*h(a) <= a for a > 0: q/2 on rationals,
  /// successor notation on reversed ordinals. Throws NotContinuousAtZero on
  /// finite tables and for reversed ordinals of successor height.
  DistanceValue halve(const DistanceValue& a) const;
  /// Canonical base initial sequence: 2^-j on rationals, d(c_j) for the
  /// canonical cofinal w-sequence c_j of a limit height (d(j+1) for
  /// omega-1). Only defined for instances continuous at 0.
  DistanceValue base_initial(std::uint64_t j) const;

  DistanceValue parse_literal(std::string_view text) const;
  std::string format(const DistanceValue& v) const;

  /// Declared (non-finite) or computed (finite) properties.
  bool continuous_at_zero() const noexcept { return continuous_at_zero_; }
  bool complete() const noexcept { return complete_; }
  CoinitDescriptor coinit() const noexcept { return coinit_; }

  /// Random element for sampled law checks (finite: uniform over the table).
  DistanceValue sample(std::mt19937_64& rng) const;

 private:
  Monoid() = default;
  void require(const DistanceValue& v) const;

  MonoidKind kind_ = MonoidKind::FiniteTable;
  std::vector<std::string> names_;
  std::vector<std::vector<std::uint32_t>> table_;
  Ordinal height_;
  bool continuous_at_zero_ = false;
  bool complete_ = true;
  CoinitDescriptor coinit_;
};

/// Exhaustive law check of a finite table (identity, monotonicity,
/// commutativity, associativity, meet-distributivity over suffix sets).
/// Throws MalformedTable if called on a non-finite instance.
LawReport check_monoid_axioms(const Monoid& m);

/// Same laws on `samples` random triples, for the non-finite instances.
LawReport check_monoid_axioms_sampled(const Monoid& m, std::size_t samples, std::uint64_t seed);

bool is_continuous_at_zero(const Monoid& m);
CoinitDescriptor coinitiality(const Monoid& m);

}  // namespace wmetric
