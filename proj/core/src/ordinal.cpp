#include "wmetric/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "wmetric/error.hpp"

namespace wmetric {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorCode::InvalidArgument, "ordinal coefficient overflow");
  }
  return a + b;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::uint64_t parse_nat(std::string_view s, std::string_view whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::Parse, "bad ordinal notation '" + std::string(whole) + "'");
  }
  std::uint64_t v = 0;
  for (char c : s) {
    if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
      throw Error(ErrorCode::Parse, "ordinal literal too large '" + std::string(whole) + "'");
    }
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

}  // namespace

Ordinal Ordinal::finite(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({0, n});
  return o;
}

Ordinal Ordinal::omega_power(std::uint32_t exponent, std::uint64_t coefficient) {
  Ordinal o;
  if (coefficient > 0) o.terms_.push_back({exponent, coefficient});
  return o;
}

Ordinal Ordinal::omega_1() {
  Ordinal o;
  o.symbolic_ = true;
  return o;
}

Ordinal Ordinal::parse(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty ordinal notation");
  if (s == "omega-1" || s == "Omega" || s == "w1" || s == "omega_1") return omega_1();

  Ordinal result;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    if (plus == std::string::npos) plus = s.size();
    const std::string term = trim(std::string_view(s).substr(pos, plus - pos));
    if (term.empty()) throw Error(ErrorCode::Parse, "bad ordinal notation '" + s + "'");

    Ordinal summand;
    std::string_view t = term;
    if (t.starts_with("omega")) {
      t.remove_prefix(5);
    } else if (t.starts_with("w")) {
      t.remove_prefix(1);
    } else {
      summand = finite(parse_nat(t, s));
      result = result + summand;
      pos = plus + 1;
      if (plus == s.size()) break;
      continue;
    }
    std::uint64_t exponent = 1;
    std::uint64_t coefficient = 1;
    if (t.starts_with("^")) {
      t.remove_prefix(1);
      const std::size_t star = t.find('*');
      exponent = parse_nat(t.substr(0, star), s);
      t = star == std::string_view::npos ? std::string_view{} : t.substr(star);
    }
    if (t.starts_with("*")) {
      t.remove_prefix(1);
      coefficient = parse_nat(t, s);
      t = {};
    }
    if (!t.empty()) throw Error(ErrorCode::Parse, "bad ordinal notation '" + s + "'");
    if (exponent > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::Parse, "ordinal exponent too large '" + s + "'");
    }
    summand = omega_power(static_cast<std::uint32_t>(exponent), coefficient);
    result = result + summand;
    pos = plus + 1;
    if (plus == s.size()) break;
  }
  return result;
}

std::string Ordinal::to_string() const {
  if (symbolic_) return "omega-1";
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += "+";
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

bool Ordinal::is_finite() const noexcept {
  return !symbolic_ && (terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == 0));
}

bool Ordinal::is_successor() const noexcept {
  return !symbolic_ && !terms_.empty() && terms_.back().exponent == 0;
}

bool Ordinal::is_limit() const noexcept {
  return symbolic_ || (!terms_.empty() && terms_.back().exponent > 0);
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, to_string() + " is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::limit_part() const {
  if (!is_successor()) return *this;
  Ordinal o = *this;
  o.terms_.pop_back();
  return o;
}

std::uint64_t Ordinal::finite_part() const {
  return is_successor() ? terms_.back().coefficient : 0;
}

Ordinal Ordinal::successor() const {
  if (symbolic_) throw Error(ErrorCode::InvalidArgument, "successor of omega-1 is not representable");
  return *this + finite(1);
}

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw Error(ErrorCode::InvalidArgument, to_string() + " has no predecessor");
  Ordinal o = *this;
  if (--o.terms_.back().coefficient == 0) o.terms_.pop_back();
  return o;
}

Ordinal Ordinal::operator+(const Ordinal& rhs) const {
  if (rhs.is_zero()) return *this;
  if (symbolic_) throw Error(ErrorCode::InvalidArgument, "ordinals above omega-1 are not representable");
  if (rhs.symbolic_) return rhs;
  const std::uint32_t lead = rhs.terms_.front().exponent;
  Ordinal out;
  for (const Term& t : terms_) {
    if (t.exponent > lead) out.terms_.push_back(t);
  }
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exponent == lead; });
  std::size_t start = 0;
  if (it != terms_.end()) {
    out.terms_.push_back({lead, checked_add(it->coefficient, rhs.terms_.front().coefficient)});
    start = 1;
  }
  out.terms_.insert(out.terms_.end(), rhs.terms_.begin() + static_cast<std::ptrdiff_t>(start), rhs.terms_.end());
  return out;
}

Ordinal Ordinal::natural_sum(const Ordinal& rhs) const {
  if (symbolic_ || rhs.symbolic_) {
    if (is_zero()) return rhs;
    if (rhs.is_zero()) return *this;
    throw Error(ErrorCode::InvalidArgument, "ordinals above omega-1 are not representable");
  }
  Ordinal out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < rhs.terms_.size()) {
    if (j == rhs.terms_.size() || (i < terms_.size() && terms_[i].exponent > rhs.terms_[j].exponent)) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || rhs.terms_[j].exponent > terms_[i].exponent) {
      out.terms_.push_back(rhs.terms_[j++]);
    } else {
      out.terms_.push_back({terms_[i].exponent, checked_add(terms_[i].coefficient, rhs.terms_[j].coefficient)});
      ++i;
      ++j;
    }
  }
  return out;
}

Ordinal::Cofinality Ordinal::cofinality() const noexcept {
  if (symbolic_) return Cofinality::Uncountable;
  if (terms_.empty()) return Cofinality::Zero;
  if (is_successor()) return Cofinality::One;
  return Cofinality::Omega;
}

Ordinal Ordinal::cofinal_entry(std::uint64_t j) const {
  if (symbolic_) throw Error(ErrorCode::NotCofinal, "omega-1 has no cofinal w-sequence");
  if (!is_limit()) throw Error(ErrorCode::NotCofinal, to_string() + " is not a limit ordinal");
  Ordinal base = *this;
  Term last = base.terms_.back();
  if (--base.terms_.back().coefficient == 0) base.terms_.pop_back();
  return base + omega_power(last.exponent - 1, checked_add(j, 1));
}

std::uint64_t Ordinal::weight() const noexcept {
  std::uint64_t w = 0;
  for (const Term& t : terms_) w += t.exponent + t.coefficient;
  return w;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const noexcept {
  if (symbolic_ || rhs.symbolic_) return symbolic_ <=> rhs.symbolic_;
  const std::size_t n = std::min(terms_.size(), rhs.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].exponent != rhs.terms_[i].exponent) return terms_[i].exponent <=> rhs.terms_[i].exponent;
    if (terms_[i].coefficient != rhs.terms_[i].coefficient) return terms_[i].coefficient <=> rhs.terms_[i].coefficient;
  }
  return terms_.size() <=> rhs.terms_.size();
}

namespace {

// Ordinals of the given weight whose exponents are all strictly below `cap`.
void ordinals_below(std::uint64_t weight, std::uint64_t cap, std::vector<Ordinal::Term>& prefix,
                    std::vector<std::vector<Ordinal::Term>>& out) {
  if (weight == 0) {
    out.push_back(prefix);
    return;
  }
  for (std::uint64_t e = 0; e < cap && e < weight; ++e) {
    for (std::uint64_t c = 1; e + c <= weight; ++c) {
      prefix.push_back({static_cast<std::uint32_t>(e), c});
      ordinals_below(weight - e - c, e, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Ordinal> ordinals_of_weight(std::uint64_t weight) {
  std::vector<std::vector<Ordinal::Term>> raw;
  std::vector<Ordinal::Term> prefix;
  ordinals_below(weight, weight + 1, prefix, raw);
  std::vector<Ordinal> out;
  out.reserve(raw.size());
  for (const auto& terms : raw) {
    Ordinal o;
    for (const auto& t : terms) o = o + Ordinal::omega_power(t.exponent, t.coefficient);
    out.push_back(o);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wmetric

std::size_t std::hash<wmetric::Ordinal>::operator()(const wmetric::Ordinal& o) const noexcept {
  std::size_t h = o.is_symbolic() ? 0x9e3779b97f4a7c15ULL : 0;
  for (const auto& t : o.terms()) {
    h ^= std::hash<std::uint64_t>{}(t.exponent * 1000003ULL + t.coefficient) + 0x9e3779b9 + (h << 6) + (h >> 2);
  }
  return h;
}
