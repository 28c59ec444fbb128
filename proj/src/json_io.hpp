#ifndef MONRES_JSON_IO_HPP
#define MONRES_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "betti.hpp"
#include "decompose.hpp"
#include "ideal.hpp"
#include "taylor.hpp"

namespace monres {

// Emission order of object keys is part of the output contract, hence
// ordered_json throughout.
using OrderedJson = nlohmann::ordered_json;

OrderedJson ideal_to_json(const MonomialIdeal& M);
MonomialIdeal ideal_from_json(const std::string& text);

OrderedJson betti_to_json(const BettiTable& table);
std::string betti_to_text(const BettiTable& table, const VariableSet& vars);

OrderedJson classify_to_json(const MonomialIdeal& M,
                             const DominanceReport& report);
std::string classify_to_text(const MonomialIdeal& M,
                             const DominanceReport& report);

OrderedJson decomposition_terms_to_json(const std::vector<ShiftedIdeal>& terms);
std::string decomposition_terms_to_text(const std::vector<ShiftedIdeal>& terms,
                                        const VariableSet& vars);

OrderedJson tree_to_json(const DecompositionNode& node);
std::string tree_to_text(const DecompositionNode& node,
                         const VariableSet& vars);
std::string tree_to_dot(const DecompositionNode& node,
                        const VariableSet& vars);

OrderedJson faces_to_json(const std::vector<Face>& faces);
std::string faces_to_text(const std::vector<Face>& faces,
                          const VariableSet& vars);
/// DOT of the facet lattice on the given faces; nodes labeled
/// `{members}:mdeg`. Edges join a face to the members-minus-one faces
/// present in the set.
std::string faces_to_dot(const std::vector<Face>& faces,
                         const VariableSet& vars);

OrderedJson fuzz_report_to_json(const FuzzReport& report);
std::string fuzz_report_to_text(const FuzzReport& report);

OrderedJson verify_to_json(const VerifyResult& result, const FieldSpec& field);
std::string verify_to_text(const VerifyResult& result, const FieldSpec& field);

}  // namespace monres

#endif
