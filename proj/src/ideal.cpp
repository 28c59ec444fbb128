#include "ideal.hpp"

#include <algorithm>

namespace monres {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), degree_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    bool redundant = false;
    // Candidates that could divide g appear earlier in degree order.
    for (const auto& h : kept) {
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(VariableSet vars, std::vector<Monomial> gens)
    : vars_(std::move(vars)) {
  for (const auto& g : gens) {
    if (g.nvars() != vars_.size()) {
      throw DimensionError("generator does not match the variable set");
    }
  }
  gens_ = minimalize(std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ", ";
    out += monres::to_string(g, vars_);
  }
  return out;
}

std::string DominanceReport::label_text() const {
  switch (label) {
    case Label::Dominant:
      return "dominant";
    case Label::PurelyNondominant:
      return "purely nondominant";
    case Label::Semidominant:
      return std::to_string(nondominant_count) + "-semidominant";
  }
  return "";
}

std::vector<std::size_t> DominanceReport::dominant_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_dominant) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> DominanceReport::nondominant_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (!generators[i].is_dominant) out.push_back(i);
  }
  return out;
}

DominanceReport classify(const MonomialIdeal& M) {
  if (M.is_zero()) throw DomainError("cannot classify the zero ideal");
  if (M.is_unit()) throw DomainError("cannot classify the unit ideal");
  const auto& gens = M.generators();
  const std::size_t n = M.variables().size();

  DominanceReport report;
  report.generators.resize(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t v = 0; v < n; ++v) {
      auto e = gens[g].exponent(v);
      if (e == 0) continue;
      bool strict_max = true;
      for (std::size_t h = 0; h < gens.size(); ++h) {
        if (h == g) continue;
        if (gens[h].exponent(v) >= e) {
          strict_max = false;
          break;
        }
      }
      if (strict_max) {
        report.generators[g].is_dominant = true;
        report.generators[g].witness = v;  // smallest certifying variable
        break;
      }
    }
    if (!report.generators[g].is_dominant) ++report.nondominant_count;
  }

  if (report.nondominant_count == 0) {
    report.label = DominanceReport::Label::Dominant;
  } else if (report.nondominant_count == gens.size()) {
    report.label = DominanceReport::Label::PurelyNondominant;
  } else {
    report.label = DominanceReport::Label::Semidominant;
  }
  return report;
}

ArtinianReport artinian_pure_powers(const MonomialIdeal& M) {
  const auto& gens = M.generators();
  const std::size_t n = M.variables().size();
  ArtinianReport report;
  report.pure_power_generator.resize(n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    auto sup = support(gens[g]);
    if (sup.size() == 1 && !report.pure_power_generator[sup[0]]) {
      report.pure_power_generator[sup[0]] = g;
    }
  }
  report.is_artinian =
      std::all_of(report.pure_power_generator.begin(),
                  report.pure_power_generator.end(),
                  [](const auto& w) { return w.has_value(); });
  return report;
}

std::optional<std::size_t> almost_generic_exemption(const MonomialIdeal& M) {
  const auto& gens = M.generators();
  const std::size_t n = M.variables().size();
  for (std::size_t exempt = 0; exempt < n; ++exempt) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (v == exempt) continue;
      for (std::size_t g = 0; g < gens.size() && ok; ++g) {
        auto e = gens[g].exponent(v);
        if (e == 0) continue;
        for (std::size_t h = g + 1; h < gens.size(); ++h) {
          if (gens[h].exponent(v) == e) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) return exempt;
  }
  return std::nullopt;
}

std::optional<std::size_t> pairwise_lcm_divisor(const MonomialIdeal& M) {
  const auto& gens = M.generators();
  if (gens.size() < 2) {
    throw DomainError("pairwise lcm divisor needs at least two generators");
  }
  for (std::size_t c = 0; c < gens.size(); ++c) {
    bool ok = true;
    for (std::size_t g = 0; g < gens.size() && ok; ++g) {
      for (std::size_t h = g + 1; h < gens.size(); ++h) {
        if (!divides(gens[c], lcm(gens[g], gens[h]))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

bool pd2_hypothesis(const MonomialIdeal& M) {
  auto report = classify(M);
  if (M.generator_count() < 2) {
    throw DomainError("pd2 hypothesis needs at least two generators");
  }
  if (report.nondominant_count != 2 && report.nondominant_count != 3) {
    return false;
  }
  return pairwise_lcm_divisor(M).has_value();
}

std::optional<std::size_t> full_pd_pivot(const MonomialIdeal& M) {
  const auto& gens = M.generators();
  const std::size_t n = M.variables().size();
  for (std::size_t v = 0; v < n; ++v) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      bool found = false;
      for (const auto& g : gens) {
        if (g.exponent(i) < 1) continue;
        auto sup = support(g);
        bool within = true;
        for (auto s : sup) {
          if (s != v && s != i) {
            within = false;
            break;
          }
        }
        if (within) {
          found = true;
          break;
        }
      }
      ok = found;
    }
    if (ok) return v;
  }
  return std::nullopt;
}

}  // namespace monres
