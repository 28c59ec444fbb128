#ifndef MONRES_MONOMIAL_HPP
#define MONRES_MONOMIAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace monres {

/// Ordered, finite set of variable names. The order is fixed at construction
/// and defines exponent-vector indexing and canonical printing.
class VariableSet {
 public:
  explicit VariableSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const VariableSet& other) const {
    return names_ == other.names_;
  }
  bool operator!=(const VariableSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

/// A monomial as an exponent vector over a fixed variable order. The
/// all-zeros vector is the unit monomial 1. Exponents are nonnegative
/// 64-bit integers; additive operations are overflow-checked.
class Monomial {
 public:
  using Exponent = std::int64_t;

  /// The unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t nvars() const { return exps_.size(); }
  Exponent exponent(std::size_t i) const { return exps_.at(i); }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_unit() const;
  Exponent total_degree() const;  // checked sum

  /// Pure lexicographic order on exponent vectors (shorter vectors first).
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<Exponent> exps_;
};

/// Componentwise max. Commutative, associative, idempotent.
Monomial lcm(const Monomial& a, const Monomial& b);

/// True iff every exponent of `a` is <= the corresponding exponent of `b`.
bool divides(const Monomial& a, const Monomial& b);

/// Componentwise difference a - b; requires divides(b, a).
Monomial quotient(const Monomial& a, const Monomial& b);

/// Componentwise sum (checked). product(quotient(a, b), b) == a.
Monomial product(const Monomial& a, const Monomial& b);

/// Indices of variables with strictly positive exponent.
std::vector<std::size_t> support(const Monomial& a);

/// Canonical generator order: ascending total degree, then descending
/// lexicographic exponent vector.
bool degree_lex_less(const Monomial& a, const Monomial& b);

/// Canonical text form: `*`-separated factors `name` or `name^e` in variable
/// order, or `1` for the unit. Round-trips bit-exactly through the parser.
std::string to_string(const Monomial& m, const VariableSet& vars);

namespace detail {
void check_same_dimension(const Monomial& a, const Monomial& b,
                          const char* op);
Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b);
}  // namespace detail

}  // namespace monres

#endif
