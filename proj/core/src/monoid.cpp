#include "wmetric/monoid.hpp"

#include <algorithm>
#include <set>

#include "wmetric/error.hpp"

namespace wmetric {

std::uint32_t DistanceValue::table_index() const {
  if (!is_table()) throw Error(ErrorCode::MixedInstances, "not a table element");
  return std::get<TableElement>(repr_).index;
}

const ExtRational& DistanceValue::rational() const {
  if (!is_rational()) throw Error(ErrorCode::MixedInstances, "not a rational distance");
  return std::get<ExtRational>(repr_);
}

const Ordinal& DistanceValue::ordinal() const {
  if (!is_ordinal()) throw Error(ErrorCode::MixedInstances, "not an ordinal distance");
  return std::get<Ordinal>(repr_);
}

std::string CoinitDescriptor::to_string() const {
  switch (kind) {
    case Kind::Finite: return "Finite(" + std::to_string(order) + ")";
    case Kind::Omega: return "Omega";
    case Kind::SymbolicUncountable: return "SymbolicUncountable";
  }
  return "?";
}

MonoidPtr Monoid::finite_table(std::vector<std::string> names,
                               std::vector<std::vector<std::uint32_t>> table) {
  if (names.empty()) throw Error(ErrorCode::MalformedTable, "a monoid needs at least the element 0");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorCode::MalformedTable, "empty element name");
    if (!seen.insert(n).second) throw Error(ErrorCode::MalformedTable, "duplicate element name '" + n + "'", {n});
  }
  const std::size_t n = names.size();
  if (table.size() != n) {
    throw Error(ErrorCode::MalformedTable,
                "addition table has " + std::to_string(table.size()) + " rows, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::MalformedTable, "row '" + names[i] + "' has " + std::to_string(table[i].size()) +
                                                 " entries, expected " + std::to_string(n),
                  {names[i]});
    }
    for (std::uint32_t v : table[i]) {
      if (v >= n) throw Error(ErrorCode::MalformedTable, "table entry out of range in row '" + names[i] + "'", {names[i]});
    }
  }

  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->kind_ = MonoidKind::FiniteTable;
  m->names_ = std::move(names);
  m->table_ = std::move(table);
  m->complete_ = true;
  if (n == 1) {
    m->continuous_at_zero_ = true;  // meet over no nonzero pairs is top = 0
    m->coinit_ = CoinitDescriptor::finite(0);
  } else {
    std::uint32_t least = static_cast<std::uint32_t>(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 1; j < n; ++j) least = std::min(least, m->table_[i][j]);
    }
    m->continuous_at_zero_ = least == 0;
    m->coinit_ = CoinitDescriptor::finite(1);
  }
  return m;
}

MonoidPtr Monoid::extended_rational() {
  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->kind_ = MonoidKind::ExtendedRational;
  m->continuous_at_zero_ = true;
  m->complete_ = false;  // sub-presentation of its completion; used meets are declared
  m->coinit_ = CoinitDescriptor::omega();
  return m;
}

MonoidPtr Monoid::reversed_ordinal(Ordinal height) {
  auto m = std::shared_ptr<Monoid>(new Monoid());
  m->kind_ = MonoidKind::ReversedOrdinal;
  m->height_ = std::move(height);
  m->complete_ = true;
  switch (m->height_.cofinality()) {
    case Ordinal::Cofinality::Zero:
      m->continuous_at_zero_ = true;
      m->coinit_ = CoinitDescriptor::finite(0);
      break;
    case Ordinal::Cofinality::One:
      m->continuous_at_zero_ = false;
      m->coinit_ = CoinitDescriptor::finite(1);
      break;
    case Ordinal::Cofinality::Omega:
      m->continuous_at_zero_ = true;
      m->coinit_ = CoinitDescriptor::omega();
      break;
    case Ordinal::Cofinality::Uncountable:
      m->continuous_at_zero_ = true;
      m->coinit_ = CoinitDescriptor::uncountable();
      break;
  }
  return m;
}

std::string Monoid::describe() const {
  switch (kind_) {
    case MonoidKind::FiniteTable: {
      std::string s = "finite{";
      for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
      return s + "}";
    }
    case MonoidKind::ExtendedRational: return "rational";
    case MonoidKind::ReversedOrdinal: return "revordinal(" + height_.to_string() + ")";
  }
  return "?";
}

bool Monoid::operator==(const Monoid& rhs) const {
  if (kind_ != rhs.kind_) return false;
  switch (kind_) {
    case MonoidKind::FiniteTable: return names_ == rhs.names_ && table_ == rhs.table_;
    case MonoidKind::ExtendedRational: return true;
    case MonoidKind::ReversedOrdinal: return height_ == rhs.height_;
  }
  return false;
}

std::vector<DistanceValue> Monoid::elements() const {
  if (kind_ != MonoidKind::FiniteTable) throw Error(ErrorCode::InvalidArgument, describe() + " is not finite");
  std::vector<DistanceValue> out;
  for (std::uint32_t i = 0; i < names_.size(); ++i) out.emplace_back(TableElement{i});
  return out;
}

DistanceValue Monoid::at_ordinal(const Ordinal& beta) const {
  if (kind_ != MonoidKind::ReversedOrdinal) throw Error(ErrorCode::MixedInstances, describe() + " has no ordinal distances");
  if (beta > height_) throw Error(ErrorCode::InvalidArgument, "d(" + beta.to_string() + ") exceeds height " + height_.to_string());
  return DistanceValue(beta);
}

DistanceValue Monoid::zero() const {
  switch (kind_) {
    case MonoidKind::FiniteTable: return TableElement{0};
    case MonoidKind::ExtendedRational: return ExtRational();
    case MonoidKind::ReversedOrdinal: return height_;
  }
  return {};
}

DistanceValue Monoid::top() const {
  switch (kind_) {
    case MonoidKind::FiniteTable: return TableElement{static_cast<std::uint32_t>(names_.size() - 1)};
    case MonoidKind::ExtendedRational: return ExtRational::top();
    case MonoidKind::ReversedOrdinal: return Ordinal();
  }
  return {};
}

bool Monoid::contains(const DistanceValue& v) const {
  switch (kind_) {
    case MonoidKind::FiniteTable: return v.is_table() && v.table_index() < names_.size();
    case MonoidKind::ExtendedRational: return v.is_rational();
    case MonoidKind::ReversedOrdinal: return v.is_ordinal() && v.ordinal() <= height_;
  }
  return false;
}

void Monoid::require(const DistanceValue& v) const {
  if (!contains(v)) throw Error(ErrorCode::MixedInstances, "value does not belong to " + describe());
}

DistanceValue Monoid::add(const DistanceValue& a, const DistanceValue& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case MonoidKind::FiniteTable: return TableElement{table_[a.table_index()][b.table_index()]};
    case MonoidKind::ExtendedRational: return a.rational() + b.rational();
    case MonoidKind::ReversedOrdinal: return std::min(a.ordinal(), b.ordinal());
  }
  return {};
}

DistanceValue Monoid::multiply(std::uint64_t n, const DistanceValue& a) const {
  DistanceValue result = zero();
  DistanceValue power = a;
  while (n > 0) {
    if (n & 1U) result = add(result, power);
    n >>= 1U;
    if (n > 0) power = add(power, power);
  }
  return result;
}

std::strong_ordering Monoid::compare(const DistanceValue& a, const DistanceValue& b) const {
  require(a);
  require(b);
  switch (kind_) {
    case MonoidKind::FiniteTable: return a.table_index() <=> b.table_index();
    case MonoidKind::ExtendedRational: return a.rational() <=> b.rational();
    case MonoidKind::ReversedOrdinal: return b.ordinal() <=> a.ordinal();
  }
  return std::strong_ordering::equal;
}

DistanceValue Monoid::meet(std::span<const DistanceValue> values) const {
  if (values.empty()) return top();
  DistanceValue out = values.front();
  for (const auto& v : values.subspan(1)) out = min(out, v);
  return out;
}

DistanceValue Monoid::join(std::span<const DistanceValue> values) const {
  if (values.empty()) return zero();
  DistanceValue out = values.front();
  for (const auto& v : values.subspan(1)) out = max(out, v);
  return out;
}

DistanceValue Monoid::residual(const DistanceValue& x, const DistanceValue& e) const {
  require(x);
  require(e);
  switch (kind_) {
    case MonoidKind::FiniteTable:
      for (std::uint32_t y = 0; y < names_.size(); ++y) {
        if (leq(x, add(TableElement{y}, e))) return TableElement{y};
      }
      return x;
    case MonoidKind::ExtendedRational: return x.rational().truncated_minus(e.rational());
    case MonoidKind::ReversedOrdinal: return leq(x, e) ? zero() : x;
  }
  return x;
}

DistanceValue Monoid::halve(const DistanceValue& a) const {
  require(a);
  if (!continuous_at_zero_ || coinit_.kind == CoinitDescriptor::Kind::Finite) {
    throw Error(ErrorCode::NotContinuousAtZero, describe() + " has no halving hook");
  }
  if (is_zero(a)) throw Error(ErrorCode::InvalidArgument, "cannot halve 0");
  switch (kind_) {
    case MonoidKind::ExtendedRational:
      if (a.rational().is_top()) return ExtRational(1);
      return a.rational().scaled(Rational(1, 2));
    case MonoidKind::ReversedOrdinal: return a.ordinal().successor();
    case MonoidKind::FiniteTable: break;
  }
  throw Error(ErrorCode::NotContinuousAtZero, describe() + " has no halving hook");
}

DistanceValue Monoid::base_initial(std::uint64_t j) const {
  if (!continuous_at_zero_ || coinit_.kind == CoinitDescriptor::Kind::Finite) {
    throw Error(ErrorCode::NotContinuousAtZero, describe() + " has no initial sequence");
  }
  switch (kind_) {
    case MonoidKind::ExtendedRational: {
      using boost::multiprecision::cpp_int;
      return ExtRational(Rational(cpp_int(1), cpp_int(1) << static_cast<unsigned>(j)));
    }
    case MonoidKind::ReversedOrdinal:
      if (height_.is_symbolic()) return Ordinal::finite(j + 1);
      return height_.cofinal_entry(j);
    case MonoidKind::FiniteTable: break;
  }
  throw Error(ErrorCode::NotContinuousAtZero, describe() + " has no initial sequence");
}

DistanceValue Monoid::parse_literal(std::string_view text) const {
  switch (kind_) {
    case MonoidKind::FiniteTable: {
      auto it = std::find(names_.begin(), names_.end(), text);
      if (it == names_.end()) throw Error(ErrorCode::Parse, "unknown element '" + std::string(text) + "' of " + describe());
      return TableElement{static_cast<std::uint32_t>(it - names_.begin())};
    }
    case MonoidKind::ExtendedRational: return ExtRational::parse(text);
    case MonoidKind::ReversedOrdinal: {
      if (!text.starts_with("d(") || !text.ends_with(")")) {
        throw Error(ErrorCode::Parse, "reversed-ordinal distances are written d(<ordinal>), got '" + std::string(text) + "'");
      }
      Ordinal beta = Ordinal::parse(text.substr(2, text.size() - 3));
      if (beta > height_) throw Error(ErrorCode::Parse, "d(" + beta.to_string() + ") exceeds height " + height_.to_string());
      return beta;
    }
  }
  return {};
}

std::string Monoid::format(const DistanceValue& v) const {
  require(v);
  switch (kind_) {
    case MonoidKind::FiniteTable: return names_[v.table_index()];
    case MonoidKind::ExtendedRational: return v.rational().to_string();
    case MonoidKind::ReversedOrdinal: return "d(" + v.ordinal().to_string() + ")";
  }
  return {};
}

DistanceValue Monoid::sample(std::mt19937_64& rng) const {
  switch (kind_) {
    case MonoidKind::FiniteTable: {
      std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(names_.size() - 1));
      return TableElement{pick(rng)};
    }
    case MonoidKind::ExtendedRational: {
      std::uniform_int_distribution<int> kind(0, 19);
      const int k = kind(rng);
      if (k == 0) return ExtRational::top();
      if (k == 1) return ExtRational();
      static constexpr int kDen[] = {1, 2, 3, 4, 5, 8, 16, 64};
      std::uniform_int_distribution<int> num(0, 40);
      std::uniform_int_distribution<int> den(0, 7);
      return ExtRational(Rational(num(rng), kDen[den(rng)]));
    }
    case MonoidKind::ReversedOrdinal: {
      std::uniform_int_distribution<int> coin(0, 9);
      if (coin(rng) == 0 || height_.is_zero()) return height_;
      for (int attempt = 0; attempt < 64; ++attempt) {
        std::uniform_int_distribution<std::uint64_t> w(0, 6);
        const auto pool = ordinals_of_weight(w(rng));
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const Ordinal& beta = pool[pick(rng)];
        if (beta <= height_) return beta;
      }
      return Ordinal();
    }
  }
  return {};
}

}  // namespace wmetric
