#include "monomial.hpp"

#include <algorithm>
#include <unordered_set>

namespace monres {

VariableSet::VariableSet(std::vector<std::string> names)
    : names_(std::move(names)) {
  if (names_.empty()) {
    throw DomainError("variable set must contain at least one variable");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) {
      throw DomainError("variable names must be non-empty");
    }
    if (!seen.insert(n).second) {
      throw DomainError("duplicate variable name '" + n + "'");
    }
  }
}

std::optional<std::size_t> VariableSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
  }
}

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](Exponent e) { return e == 0; });
}

Monomial::Exponent Monomial::total_degree() const {
  Exponent sum = 0;
  for (Exponent e : exps_) sum = detail::checked_add(sum, e);
  return sum;
}

bool Monomial::operator<(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) {
    return exps_.size() < other.exps_.size();
  }
  return exps_ < other.exps_;
}

namespace detail {

void check_same_dimension(const Monomial& a, const Monomial& b,
                          const char* op) {
  if (a.nvars() != b.nvars()) {
    throw DimensionError(std::string(op) + ": operands have " +
                         std::to_string(a.nvars()) + " and " +
                         std::to_string(b.nvars()) + " variables");
  }
}

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("exponent addition overflowed");
  }
  return r;
}

}  // namespace detail

Monomial lcm(const Monomial& a, const Monomial& b) {
  detail::check_same_dimension(a, b, "lcm");
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    e[i] = std::max(a.exponent(i), b.exponent(i));
  }
  return Monomial(std::move(e));
}

bool divides(const Monomial& a, const Monomial& b) {
  detail::check_same_dimension(a, b, "divides");
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) > b.exponent(i)) return false;
  }
  return true;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  detail::check_same_dimension(a, b, "quotient");
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (b.exponent(i) > a.exponent(i)) {
      throw DomainError("quotient: divisor does not divide dividend");
    }
    e[i] = a.exponent(i) - b.exponent(i);
  }
  return Monomial(std::move(e));
}

Monomial product(const Monomial& a, const Monomial& b) {
  detail::check_same_dimension(a, b, "product");
  std::vector<Monomial::Exponent> e(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    e[i] = detail::checked_add(a.exponent(i), b.exponent(i));
  }
  return Monomial(std::move(e));
}

std::vector<std::size_t> support(const Monomial& a) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exponent(i) > 0) idx.push_back(i);
  }
  return idx;
}

bool degree_lex_less(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da < db;
  // Within a degree, earlier-variable-heavy monomials print first: (a, b),
  // (x^2, x*y, y^2).
  return b < a;
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
  if (m.nvars() != vars.size()) {
    throw DimensionError("to_string: monomial does not match variable set");
  }
  if (m.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace monres
