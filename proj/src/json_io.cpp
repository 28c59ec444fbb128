#include "json_io.hpp"

#include <sstream>

namespace monres {

namespace {

OrderedJson exponents_json(const Monomial& m) {
  OrderedJson out = OrderedJson::array();
  for (auto e : m.exponents()) out.push_back(e);
  return out;
}

OrderedJson generators_json(const MonomialIdeal& M) {
  OrderedJson out = OrderedJson::array();
  for (const auto& g : M.generators()) out.push_back(exponents_json(g));
  return out;
}

std::string members_text(FaceMask members) {
  std::string out = "{";
  bool first = true;
  for (FaceMask rest = members; rest != 0; rest &= rest - 1) {
    if (!first) out += ',';
    out += std::to_string(__builtin_ctz(rest));
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace

OrderedJson ideal_to_json(const MonomialIdeal& M) {
  OrderedJson out;
  out["variables"] = M.variables().names();
  out["generators"] = generators_json(M);
  return out;
}

MonomialIdeal ideal_from_json(const std::string& text) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
  }
  if (!doc.is_object() || !doc.contains("variables") ||
      !doc.contains("generators")) {
    throw ParseError("ideal JSON needs \"variables\" and \"generators\"", 1, 1);
  }
  std::vector<std::string> names;
  for (const auto& v : doc["variables"]) {
    if (!v.is_string()) throw ParseError("variable names must be strings", 1, 1);
    names.push_back(v.get<std::string>());
  }
  VariableSet vars(std::move(names));
  std::vector<Monomial> gens;
  for (const auto& row : doc["generators"]) {
    std::vector<Monomial::Exponent> exps;
    for (const auto& e : row) {
      if (!e.is_number_integer() || e.get<std::int64_t>() < 0) {
        throw ParseError("exponents must be nonnegative integers", 1, 1);
      }
      exps.push_back(e.get<std::int64_t>());
    }
    if (exps.size() != vars.size()) {
      throw ParseError("exponent vector length does not match the variable "
                       "count", 1, 1);
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(std::move(vars), std::move(gens));
}

OrderedJson betti_to_json(const BettiTable& table) {
  OrderedJson out;
  out["field"] = table.field.name();
  out["pd"] = table.pd();
  out["totals"] = table.totals();
  OrderedJson entries = OrderedJson::array();
  for (const auto& [key, count] : table.entries) {
    OrderedJson entry;
    entry["hdeg"] = key.first;
    entry["mdeg"] = exponents_json(key.second);
    entry["count"] = count;
    entries.push_back(std::move(entry));
  }
  out["entries"] = std::move(entries);
  return out;
}

std::string betti_to_text(const BettiTable& table, const VariableSet& vars) {
  std::ostringstream out;
  out << "field: " << table.field.name() << '\n';
  out << "pd: " << table.pd() << '\n';
  out << "totals:";
  for (auto t : table.totals()) out << ' ' << t;
  out << '\n';
  for (const auto& [key, count] : table.entries) {
    out << "beta[" << key.first << ", " << to_string(key.second, vars)
        << "] = " << count << '\n';
  }
  return out.str();
}

OrderedJson classify_to_json(const MonomialIdeal& M,
                             const DominanceReport& report) {
  OrderedJson out;
  out["class"] = report.label_text();
  out["p"] = report.nondominant_count;
  OrderedJson gens = OrderedJson::array();
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    OrderedJson g;
    g["monomial"] = exponents_json(M.generators()[i]);
    g["dominant"] = report.generators[i].is_dominant;
    if (report.generators[i].witness) {
      g["witness"] = *report.generators[i].witness;
    } else {
      g["witness"] = nullptr;
    }
    gens.push_back(std::move(g));
  }
  out["generators"] = std::move(gens);
  return out;
}

std::string classify_to_text(const MonomialIdeal& M,
                             const DominanceReport& report) {
  std::ostringstream out;
  out << "class: " << report.label_text() << '\n';
  out << "p: " << report.nondominant_count << '\n';
  for (std::size_t i = 0; i < report.generators.size(); ++i) {
    out << to_string(M.generators()[i], M.variables()) << ": ";
    if (report.generators[i].is_dominant) {
      out << "dominant (witness "
          << M.variables().name(*report.generators[i].witness) << ")";
    } else {
      out << "nondominant";
    }
    out << '\n';
  }
  return out.str();
}

OrderedJson decomposition_terms_to_json(
    const std::vector<ShiftedIdeal>& terms) {
  OrderedJson out = OrderedJson::array();
  for (const auto& term : terms) {
    OrderedJson t;
    t["j"] = term.shift.j;
    t["m"] = exponents_json(term.shift.m);
    t["ideal"] = generators_json(term.ideal);
    out.push_back(std::move(t));
  }
  return out;
}

std::string decomposition_terms_to_text(const std::vector<ShiftedIdeal>& terms,
                                        const VariableSet& vars) {
  std::ostringstream out;
  for (const auto& term : terms) {
    out << "(j=" << term.shift.j << ", m=" << to_string(term.shift.m, vars)
        << ") -> ";
    if (term.ideal.is_zero()) {
      out << "0";
    } else {
      out << term.ideal.to_string();
    }
    out << '\n';
  }
  return out.str();
}

OrderedJson tree_to_json(const DecompositionNode& node) {
  OrderedJson out;
  out["j"] = node.shift.j;
  out["m"] = exponents_json(node.shift.m);
  out["ideal"] = generators_json(node.ideal);
  out["kind"] = node_kind_name(node.kind);
  OrderedJson children = OrderedJson::array();
  for (const auto& child : node.children) {
    children.push_back(tree_to_json(child));
  }
  out["children"] = std::move(children);
  return out;
}

namespace {

void tree_text_walk(const DecompositionNode& node, const VariableSet& vars,
                    int depth, std::ostringstream& out) {
  for (int i = 0; i < depth; ++i) out << "  ";
  out << "(j=" << node.shift.j << ", m=" << to_string(node.shift.m, vars)
      << ") " << node_kind_name(node.kind) << ": " << node.ideal.to_string()
      << '\n';
  for (const auto& child : node.children) {
    tree_text_walk(child, vars, depth + 1, out);
  }
}

void tree_dot_walk(const DecompositionNode& node, const VariableSet& vars,
                   int& counter, int parent, std::ostringstream& out) {
  int id = counter++;
  out << "  n" << id << " [label=\"(" << node.shift.j << ", "
      << to_string(node.shift.m, vars) << ")\\n" << node.ideal.to_string()
      << "\\n" << node_kind_name(node.kind) << "\"];\n";
  if (parent >= 0) out << "  n" << parent << " -> n" << id << ";\n";
  for (const auto& child : node.children) {
    tree_dot_walk(child, vars, counter, id, out);
  }
}

}  // namespace

std::string tree_to_text(const DecompositionNode& node,
                         const VariableSet& vars) {
  std::ostringstream out;
  tree_text_walk(node, vars, 0, out);
  return out.str();
}

std::string tree_to_dot(const DecompositionNode& node,
                        const VariableSet& vars) {
  std::ostringstream out;
  out << "digraph decomposition {\n";
  int counter = 0;
  tree_dot_walk(node, vars, counter, -1, out);
  out << "}\n";
  return out.str();
}

OrderedJson faces_to_json(const std::vector<Face>& faces) {
  OrderedJson out = OrderedJson::array();
  for (const auto& face : faces) {
    OrderedJson f;
    OrderedJson members = OrderedJson::array();
    for (FaceMask rest = face.members; rest != 0; rest &= rest - 1) {
      members.push_back(__builtin_ctz(rest));
    }
    f["members"] = std::move(members);
    f["hdeg"] = face.hdeg;
    f["mdeg"] = exponents_json(face.mdeg);
    out.push_back(std::move(f));
  }
  return out;
}

std::string faces_to_text(const std::vector<Face>& faces,
                          const VariableSet& vars) {
  std::ostringstream out;
  for (const auto& face : faces) {
    out << members_text(face.members) << ':' << to_string(face.mdeg, vars)
        << '\n';
  }
  return out.str();
}

std::string faces_to_dot(const std::vector<Face>& faces,
                         const VariableSet& vars) {
  std::ostringstream out;
  out << "digraph faces {\n";
  std::map<FaceMask, std::size_t> index;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    index[faces[i].members] = i;
    out << "  f" << i << " [label=\"" << members_text(faces[i].members) << ':'
        << to_string(faces[i].mdeg, vars) << "\"];\n";
  }
  for (const auto& face : faces) {
    for (FaceMask rest = face.members; rest != 0; rest &= rest - 1) {
      FaceMask facet = face.members & ~(rest & (~rest + 1));
      auto it = index.find(facet);
      if (it != index.end()) {
        out << "  f" << index.at(face.members) << " -> f" << it->second
            << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

OrderedJson fuzz_report_to_json(const FuzzReport& report) {
  OrderedJson out;
  out["conjecture"] = report.conjecture;
  out["tested"] = report.tested;
  OrderedJson ces = OrderedJson::array();
  for (const auto& ce : report.counterexamples) {
    OrderedJson c;
    c["seed"] = ce.seed;
    c["ideal"] = generators_json(ce.ideal);
    c["betti"] = betti_to_json(ce.betti);
    ces.push_back(std::move(c));
  }
  out["counterexamples"] = std::move(ces);
  return out;
}

std::string fuzz_report_to_text(const FuzzReport& report) {
  std::ostringstream out;
  out << "conjecture " << report.conjecture << ": tested " << report.tested
      << ", counterexamples " << report.counterexamples.size() << '\n';
  for (const auto& ce : report.counterexamples) {
    out << "  seed " << ce.seed << ": " << ce.ideal.to_string() << '\n';
  }
  return out.str();
}

OrderedJson verify_to_json(const VerifyResult& result, const FieldSpec& field) {
  OrderedJson out;
  out["field"] = field.name();
  out["instances"] = result.instances;
  out["ok"] = result.ok();
  OrderedJson mismatches = OrderedJson::array();
  for (const auto& m : result.mismatches) {
    OrderedJson one;
    one["seed"] = m.seed;
    one["ideal"] = generators_json(m.ideal);
    one["detail"] = m.detail;
    mismatches.push_back(std::move(one));
  }
  out["mismatches"] = std::move(mismatches);
  return out;
}

std::string verify_to_text(const VerifyResult& result, const FieldSpec& field) {
  std::ostringstream out;
  out << "verified " << result.instances << " ideal"
      << (result.instances == 1 ? "" : "s") << " over " << field.name()
      << ": ";
  if (result.ok()) {
    out << "all methods agree\n";
  } else {
    out << result.mismatches.size() << " mismatch"
        << (result.mismatches.size() == 1 ? "" : "es") << '\n';
    for (const auto& m : result.mismatches) {
      out << "  seed " << m.seed << ": " << m.detail << " on "
          << m.ideal.to_string() << '\n';
    }
  }
  return out.str();
}

}  // namespace monres
