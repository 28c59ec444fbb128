#include "field.hpp"

namespace monres {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31)) {
    throw DomainError("prime field characteristic must be < 2^31");
  }
  if (!is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  FieldSpec spec;
  spec.kind = Kind::Prime;
  spec.p = p;
  return spec;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Fp:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string_view digits = text.substr(prefix.size());
    if (digits.empty()) throw DomainError("missing prime in field spec");
    std::uint64_t value = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') {
        throw DomainError("invalid field spec '" + std::string(text) + "'");
      }
      value = value * 10 + (c - '0');
      if (value >= (1ull << 31)) {
        throw DomainError("prime field characteristic must be < 2^31");
      }
    }
    return prime(static_cast<std::uint32_t>(value));
  }
  throw DomainError("invalid field spec '" + std::string(text) +
                    "' (expected Q or Fp:<prime>)");
}

PrimeField::Elem PrimeField::inverse(Elem a) const {
  if (a == 0) throw DomainError("division by zero in prime field");
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::div(Elem a, Elem b) const {
  return mul(a, inverse(b));
}

}  // namespace monres
