#include "random_ideal.hpp"

#include <algorithm>
#include <string>

namespace monres {

namespace {

// rng() % span is biased in general but deterministic and fine for test
// instance generation.
std::int64_t bounded(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % std::uint64_t(hi - lo + 1));
}

VariableSet make_variables(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  if (n <= 26) {
    for (int i = 0; i < n; ++i) names.emplace_back(1, char('a' + i));
  } else {
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  }
  return VariableSet(std::move(names));
}

Monomial random_monomial(std::mt19937_64& rng, int n, int max_exp) {
  for (;;) {
    std::vector<Monomial::Exponent> e(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (auto& x : e) {
      x = bounded(rng, 0, max_exp);
      if (x > 0) nonzero = true;
    }
    if (nonzero) return Monomial(std::move(e));  // never the unit monomial
  }
}

std::vector<std::size_t> sample_distinct(std::mt19937_64& rng, std::size_t n,
                                         std::size_t k) {
  std::vector<std::size_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = static_cast<std::size_t>(bounded(rng, i, n - 1));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

MonomialIdeal random_unconstrained(std::mt19937_64& rng, int n, int max_gens,
                                   int max_exp) {
  int q = static_cast<int>(bounded(rng, 1, max_gens));
  std::vector<Monomial> last;
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Monomial> gens;
    for (int i = 0; i < q; ++i) gens.push_back(random_monomial(rng, n, max_exp));
    last = minimalize(std::move(gens));
    if (static_cast<int>(last.size()) == q) break;
  }
  return MonomialIdeal(make_variables(n), std::move(last));
}

MonomialIdeal random_artinian(std::mt19937_64& rng, int vars, int max_gens,
                              int max_exp) {
  int n = static_cast<int>(bounded(rng, 1, std::min(vars, max_gens)));
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial::Exponent> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = bounded(rng, 1, max_exp);
    gens.emplace_back(std::move(e));
  }
  int extras = static_cast<int>(bounded(rng, 0, std::max(0, max_gens - n)));
  for (int i = 0; i < extras; ++i) {
    gens.push_back(random_monomial(rng, n, max_exp));
  }
  // Minimalization can only replace a pure power by a smaller pure power,
  // so the result stays Artinian.
  return MonomialIdeal(make_variables(n), std::move(gens));
}

MonomialIdeal random_dominant(std::mt19937_64& rng, int vars, int max_gens,
                              int max_exp) {
  int n = static_cast<int>(bounded(rng, 1, vars));
  int q = static_cast<int>(bounded(rng, 1, std::min(max_gens, n)));
  auto witnesses = sample_distinct(rng, static_cast<std::size_t>(n),
                                   static_cast<std::size_t>(q));
  std::vector<Monomial> gens;
  for (int i = 0; i < q; ++i) gens.push_back(random_monomial(rng, n, max_exp));
  // Boost each generator's witness exponent above everyone else's. Witness
  // variables are distinct, so later boosts cannot undo earlier ones.
  for (int i = 0; i < q; ++i) {
    std::size_t w = witnesses[static_cast<std::size_t>(i)];
    Monomial::Exponent top = 0;
    for (int h = 0; h < q; ++h) {
      if (h != i) top = std::max(top, gens[static_cast<std::size_t>(h)].exponent(w));
    }
    auto e = gens[static_cast<std::size_t>(i)].exponents();
    e[w] = top + 1;
    gens[static_cast<std::size_t>(i)] = Monomial(std::move(e));
  }
  return MonomialIdeal(make_variables(n), std::move(gens));
}

MonomialIdeal random_exempt_generic(std::mt19937_64& rng, int vars,
                                    int max_gens, int max_exp,
                                    int exemptions) {
  int n = static_cast<int>(bounded(rng, std::min(vars, exemptions), vars));
  int q = static_cast<int>(bounded(rng, 1, max_gens));
  auto exempt = sample_distinct(rng, static_cast<std::size_t>(n),
                                static_cast<std::size_t>(
                                    std::min(n, exemptions)));
  for (int attempt = 0; attempt < 200; ++attempt) {
    // Columns: exempt variables are unconstrained; every other variable
    // gets pairwise-distinct nonzero exponents (zeros may repeat).
    std::vector<std::vector<Monomial::Exponent>> cols(
        static_cast<std::size_t>(n),
        std::vector<Monomial::Exponent>(static_cast<std::size_t>(q), 0));
    for (int v = 0; v < n; ++v) {
      bool is_exempt =
          std::find(exempt.begin(), exempt.end(), static_cast<std::size_t>(v)) !=
          exempt.end();
      if (is_exempt) {
        for (int g = 0; g < q; ++g) {
          cols[v][g] = bounded(rng, 0, max_exp);
        }
      } else {
        int k = static_cast<int>(bounded(rng, 0, std::min(q, max_exp)));
        auto rows = sample_distinct(rng, static_cast<std::size_t>(q),
                                    static_cast<std::size_t>(k));
        auto values = sample_distinct(rng, static_cast<std::size_t>(max_exp),
                                      static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
          cols[v][rows[i]] = static_cast<Monomial::Exponent>(values[i]) + 1;
        }
      }
    }
    std::vector<Monomial> gens;
    bool has_zero = false;
    for (int g = 0; g < q; ++g) {
      std::vector<Monomial::Exponent> e(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) e[v] = cols[v][g];
      Monomial m(std::move(e));
      if (m.is_unit()) {
        has_zero = true;
        break;
      }
      gens.push_back(std::move(m));
    }
    if (has_zero) continue;
    // Dropping generators preserves the no-shared-exponent property, so
    // minimalization keeps the constraint.
    return MonomialIdeal(make_variables(n), std::move(gens));
  }
  throw ResourceError("could not sample an exempt-generic ideal; loosen the "
                      "parameters");
}

MonomialIdeal random_semidominant(std::mt19937_64& rng, int vars, int max_gens,
                                  int max_exp, int p) {
  constexpr int kAttempts = 20000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    int n = static_cast<int>(bounded(rng, 1, vars));
    MonomialIdeal M = random_unconstrained(rng, n, max_gens, max_exp);
    if (!M.is_proper()) continue;
    auto report = classify(M);
    if (static_cast<int>(report.nondominant_count) == p) return M;
  }
  throw ResourceError("could not sample a " + std::to_string(p) +
                      "-semidominant ideal; loosen the parameters");
}

}  // namespace

MonomialIdeal random_ideal(std::mt19937_64& rng,
                           const RandomIdealParams& params) {
  if (params.vars < 1 || params.max_gens < 1 || params.max_exp < 1) {
    throw DomainError("random ideal parameters must be positive");
  }
  using C = RandomIdealParams::Constraint;
  switch (params.constraint) {
    case C::None: {
      int n = static_cast<int>(bounded(rng, 1, params.vars));
      return random_unconstrained(rng, n, params.max_gens, params.max_exp);
    }
    case C::Artinian:
      return random_artinian(rng, params.vars, params.max_gens,
                             params.max_exp);
    case C::Dominant:
      return random_dominant(rng, params.vars, params.max_gens,
                             params.max_exp);
    case C::AlmostGeneric:
      return random_exempt_generic(rng, params.vars, params.max_gens,
                                   params.max_exp, 1);
    case C::TwoExemptGeneric:
      return random_exempt_generic(rng, params.vars, params.max_gens,
                                   params.max_exp, 2);
    case C::Semidominant:
      return random_semidominant(rng, params.vars, params.max_gens,
                                 params.max_exp, params.semidominant_p);
  }
  throw DomainError("unknown constraint");
}

std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) {
  std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace monres
