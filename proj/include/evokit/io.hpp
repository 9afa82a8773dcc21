#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "evokit/algebra.hpp"
#include "evokit/autgroup.hpp"
#include "evokit/permgroup.hpp"
#include "evokit/realize.hpp"

namespace evokit {

// All files and reports use string scalars, 1-based permutation images and
// vertex ids, fixed key order, two-space indentation and a trailing
// newline, so equal inputs always serialize to identical bytes.
using Json = nlohmann::ordered_json;

Json algebra_to_json(const EvolutionAlgebra& x);
EvolutionAlgebra algebra_from_json(
    const Json& j, const std::optional<FieldSpec>& field_override = {});

Json group_to_json(const PermGroup& g);
PermGroup group_from_json(const Json& j);

Json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const Json& j);

Json aut_report(const AutomorphismGroup& aut,
                std::uint64_t element_list_cap = 10000);
Json realization_report_to_json(const RealizationReport& r);

std::string dump_canonical(const Json& j);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace evokit
