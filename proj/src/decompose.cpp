#include "decompose.hpp"

#include <algorithm>
#include <set>

namespace monres {

namespace {

// Subsets of the first d dominant generators, as (j, lcm) pairs. The caller
// adds (0, 1).
std::set<Shift> dominant_subset_lcms(const std::vector<Monomial>& gens,
                                     const std::vector<std::size_t>& dominant,
                                     int d, std::size_t nvars) {
  std::set<Shift> shifts;
  const std::uint32_t subsets = std::uint32_t(1) << d;
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    Monomial m(nvars);
    int j = 0;
    for (int i = 0; i < d; ++i) {
      if (mask & (std::uint32_t(1) << i)) {
        m = lcm(m, gens[dominant[static_cast<std::size_t>(i)]]);
        ++j;
      }
    }
    if (!shifts.insert(Shift{j, std::move(m)}).second) {
      throw Error(
          "two distinct subsets of dominant generators share an lcm; "
          "this contradicts the witness-variable argument and needs "
          "investigation");
    }
  }
  return shifts;
}

}  // namespace

std::vector<Shift> build_shift_set(const MonomialIdeal& M, int d) {
  auto report = classify(M);
  auto dominant = report.dominant_indices();
  if (d < 1 || static_cast<std::size_t>(d) > dominant.size()) {
    throw DomainError("d must lie between 1 and the number of dominant "
                      "generators (" +
                      std::to_string(dominant.size()) + ")");
  }
  const std::size_t nvars = M.variables().size();
  const std::size_t c = M.generator_count() - static_cast<std::size_t>(d);
  std::vector<Shift> out;
  out.push_back(Shift{0, Monomial(nvars)});
  if (c == 0) return out;  // H empty: single trivial shift
  for (auto& s : dominant_subset_lcms(M.generators(), dominant, d, nvars)) {
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> contract_generators(const MonomialIdeal& M,
                                          const Monomial& m,
                                          const std::vector<std::size_t>& H) {
  std::vector<Monomial> out;
  out.reserve(H.size());
  for (std::size_t h : H) {
    out.push_back(quotient(lcm(m, M.generators().at(h)), m));
  }
  return out;
}

MonomialIdeal contract(const MonomialIdeal& M, const Monomial& m,
                       const std::vector<std::size_t>& H) {
  if (H.empty()) throw DomainError("contract: H must be nonempty");
  return MonomialIdeal(M.variables(), contract_generators(M, m, H));
}

namespace {

std::vector<ShiftedIdeal> decomposition_level(
    const MonomialIdeal& M, int d, const std::vector<std::size_t>& H) {
  auto shifts = build_shift_set(M, d);
  std::vector<ShiftedIdeal> terms;
  terms.reserve(shifts.size());
  for (auto& shift : shifts) {
    if (H.empty()) {
      terms.push_back(ShiftedIdeal{shift, M});
    } else {
      terms.push_back(ShiftedIdeal{shift, contract(M, shift.m, H)});
    }
  }
  return terms;
}

}  // namespace

std::vector<ShiftedIdeal> first_decomposition(const MonomialIdeal& M) {
  auto report = classify(M);
  if (report.is_purely_nondominant()) {
    throw DomainError(
        "a purely nondominant ideal has no dominant generators to "
        "decompose along; treat it as a leaf");
  }
  auto dominant = report.dominant_indices();
  return decomposition_level(M, static_cast<int>(dominant.size()),
                             report.nondominant_indices());
}

std::vector<ShiftedIdeal> third_decomposition(const MonomialIdeal& M) {
  auto report = classify(M);
  if (report.is_purely_nondominant()) {
    throw DomainError("no dominant generator to split off");
  }
  std::size_t first_dominant = report.dominant_indices().front();
  std::vector<std::size_t> H;
  for (std::size_t i = 0; i < M.generator_count(); ++i) {
    if (i != first_dominant) H.push_back(i);
  }
  return decomposition_level(M, 1, H);
}

namespace {

DecompositionNode build_node(Shift shift, MonomialIdeal ideal,
                             std::size_t depth_left) {
  DecompositionNode node{std::move(shift), std::move(ideal),
                         NodeKind::Internal, {}};
  if (node.ideal.is_unit()) {
    node.kind = NodeKind::Unit;
    return node;
  }
  auto report = classify(node.ideal);
  if (report.is_dominant_ideal()) {
    node.kind = NodeKind::Dominant;
    return node;
  }
  if (report.is_purely_nondominant()) {
    node.kind = NodeKind::PurelyNondominant;
    return node;
  }
  if (depth_left == 0) {
    throw Error("decomposition recursion exceeded the nondominant count; "
                "the descent guarantee failed");
  }
  for (auto& term : first_decomposition(node.ideal)) {
    node.children.push_back(
        build_node(term.shift, term.ideal, depth_left - 1));
  }
  return node;
}

}  // namespace

DecompositionNode decomposition_tree(const MonomialIdeal& M) {
  if (!M.is_proper()) {
    throw DomainError("decomposition needs a proper nonzero ideal");
  }
  auto report = classify(M);
  return build_node(Shift{0, Monomial(M.variables().size())}, M,
                    report.nondominant_count);
}

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Internal: return "internal";
    case NodeKind::Dominant: return "dominant";
    case NodeKind::PurelyNondominant: return "purely_nondominant";
    case NodeKind::Unit: return "unit";
  }
  return "";
}

}  // namespace monres
