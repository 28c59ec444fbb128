#ifndef MONRES_FIELD_HPP
#define MONRES_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace monres {

/// Selects the coefficient field: exact rationals (default) or a prime
/// field F_p with p < 2^31. No floating point anywhere.
struct FieldSpec {
  enum class Kind { Rationals, Prime };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint32_t p);

  /// Accepts "Q" or "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  std::string name() const {
    return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p);
  }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

/// Exact rational arithmetic backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  static Elem zero() { return Elem(0); }
  static Elem one() { return Elem(1); }
  static Elem from_int(long v) { return Elem(v); }
  static bool is_zero(const Elem& e) { return e == 0; }
  static Elem add(const Elem& a, const Elem& b) { return a + b; }
  static Elem sub(const Elem& a, const Elem& b) { return a - b; }
  static Elem mul(const Elem& a, const Elem& b) { return a * b; }
  static Elem div(const Elem& a, const Elem& b) { return a / b; }
  static Elem neg(const Elem& a) { return -a; }
};

/// F_p arithmetic for a prime p < 2^31; elements are canonical residues.
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  bool is_zero(Elem e) const { return e == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(std::uint64_t(a) * b % p_);
  }
  Elem div(Elem a, Elem b) const;
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inverse(Elem a) const;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

}  // namespace monres

#endif
