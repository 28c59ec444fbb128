#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "taylor.hpp"

namespace monres {

namespace {

// Working state for the cancellation sweep. Entries are stored per
// homological degree, keyed (face, facet); the scalar is the whole entry
// because the monomial part is always mdeg(face)/mdeg(facet).
template <class F>
class Minimizer {
  using Elem = typename F::Elem;
  using Key = std::pair<FaceMask, FaceMask>;

 public:
  Minimizer(const TaylorComplex& complex, const F& field)
      : complex_(complex),
        field_(field),
        alive_(complex.face_count(), true),
        levels_(complex.generator_count() + 1),
        rows_of_(complex.generator_count() + 1) {
    for (FaceMask mask = 1; mask < complex_.face_count(); ++mask) {
      int u = TaylorComplex::hdeg(mask);
      int position = 0;
      for (FaceMask rest = mask; rest != 0; rest &= rest - 1) {
        ++position;
        FaceMask facet = mask & ~(rest & (~rest + 1));
        put(u, mask, facet,
            field_.from_int(position % 2 == 1 ? 1 : -1));
      }
    }
  }

  BettiTable run(const FieldSpec& spec, std::uint64_t order_seed) {
    if (order_seed == 0) {
      while (auto pivot = first_invertible()) {
        cancel(*pivot);
      }
    } else {
      std::mt19937_64 rng(order_seed);
      for (;;) {
        auto candidates = all_invertible();
        if (candidates.empty()) break;
        cancel(candidates[rng() % candidates.size()]);
      }
    }
    BettiTable table;
    table.field = spec;
    for (FaceMask mask = 0; mask < complex_.face_count(); ++mask) {
      if (alive_[mask]) {
        table.add(TaylorComplex::hdeg(mask), complex_.mdeg(mask), 1);
      }
    }
    return table;
  }

 private:
  struct Pivot {
    int level;
    FaceMask face;
    FaceMask facet;
  };

  bool invertible(FaceMask face, FaceMask facet) const {
    return complex_.mdeg(face) == complex_.mdeg(facet);
  }

  std::optional<Pivot> first_invertible() const {
    for (std::size_t u = 1; u < levels_.size(); ++u) {
      for (const auto& [key, value] : levels_[u]) {
        if (invertible(key.first, key.second)) {
          return Pivot{static_cast<int>(u), key.first, key.second};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Pivot> all_invertible() const {
    std::vector<Pivot> out;
    for (std::size_t u = 1; u < levels_.size(); ++u) {
      for (const auto& [key, value] : levels_[u]) {
        if (invertible(key.first, key.second)) {
          out.push_back(Pivot{static_cast<int>(u), key.first, key.second});
        }
      }
    }
    return out;
  }

  void cancel(const Pivot& pivot) {
    const int u = pivot.level;
    const FaceMask theta = pivot.face;
    const FaceMask pi = pivot.facet;
    const Elem pivot_value = levels_[u].at({theta, pi});

    // Row of theta (facets reached from theta) and column of pi (faces
    // hitting pi), excluding the pivot itself.
    std::vector<std::pair<FaceMask, Elem>> row;
    for (auto it = levels_[u].lower_bound({theta, 0});
         it != levels_[u].end() && it->first.first == theta; ++it) {
      if (it->first.second != pi) row.emplace_back(it->first.second, it->second);
    }
    std::vector<std::pair<FaceMask, Elem>> col;
    for (FaceMask sigma : rows_of_[u][pi]) {
      if (sigma != theta) col.emplace_back(sigma, levels_[u].at({sigma, pi}));
    }

    for (const auto& [sigma, b_pi_sigma] : col) {
      for (const auto& [tau, b_tau_theta] : row) {
        Elem delta = field_.div(field_.mul(b_tau_theta, b_pi_sigma), pivot_value);
        auto it = levels_[u].find({sigma, tau});
        if (it == levels_[u].end()) {
          put(u, sigma, tau, field_.neg(delta));
        } else {
          it->second = field_.sub(it->second, delta);
          if (field_.is_zero(it->second)) drop(u, sigma, tau);
        }
      }
    }

    // Remove the pair and every entry incident to it.
    for (const auto& [tau, value] : row) drop(u, theta, tau);
    for (const auto& [sigma, value] : col) drop(u, sigma, pi);
    drop(u, theta, pi);
    if (static_cast<std::size_t>(u + 1) < levels_.size()) {
      auto incoming = rows_of_[u + 1][theta];  // copy: drop() mutates it
      for (FaceMask rho : incoming) drop(u + 1, rho, theta);
    }
    if (u >= 1) {
      std::vector<FaceMask> outgoing;
      for (auto it = levels_[u - 1].lower_bound({pi, 0});
           it != levels_[u - 1].end() && it->first.first == pi; ++it) {
        outgoing.push_back(it->first.second);
      }
      for (FaceMask tau : outgoing) drop(u - 1, pi, tau);
    }
    alive_[theta] = false;
    alive_[pi] = false;
  }

  void put(int u, FaceMask face, FaceMask facet, Elem value) {
    if (field_.is_zero(value)) return;
    levels_[u][{face, facet}] = std::move(value);
    rows_of_[u][facet].insert(face);
  }

  void drop(int u, FaceMask face, FaceMask facet) {
    levels_[u].erase({face, facet});
    auto it = rows_of_[u].find(facet);
    if (it != rows_of_[u].end()) {
      it->second.erase(face);
      if (it->second.empty()) rows_of_[u].erase(it);
    }
  }

  const TaylorComplex& complex_;
  const F& field_;
  std::vector<bool> alive_;
  std::vector<std::map<Key, Elem>> levels_;
  // Per level: facet -> faces with an entry onto it (the matrix columns).
  std::vector<std::map<FaceMask, std::set<FaceMask>>> rows_of_;
};

}  // namespace

BettiTable cancel_minimize(const TaylorComplex& complex, const FieldSpec& field,
                           std::uint64_t order_seed) {
  if (field.kind == FieldSpec::Kind::Rationals) {
    RationalField f;
    return Minimizer<RationalField>(complex, f).run(field, order_seed);
  }
  PrimeField f(field.p);
  return Minimizer<PrimeField>(complex, f).run(field, order_seed);
}

}  // namespace monres
