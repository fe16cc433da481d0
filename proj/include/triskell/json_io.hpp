#pragma once

#include <string>

#include "json.hpp"

#include "triskell/matrix.hpp"
#include "triskell/mll.hpp"
#include "triskell/qcs.hpp"
#include "triskell/triskell.hpp"
#include "triskell/weight.hpp"

namespace triskell {

using Json = nlohmann::json;

Json weight_to_json(const Weight& w);
Weight weight_from_json(const Json& j);

// Edges are grouped and ordered canonically, so dumps of equal triskells
// are byte-identical.
Json triskell_to_json(const Triskell& t);
Triskell triskell_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json qcs_to_json(const QcsSpace& s);
QcsSpace qcs_from_json(const Json& j);

Json assignment_to_json(const AtomAssignment& a);
AtomAssignment assignment_from_json(const Json& j);

std::string num_kind_name(NumKind k);
NumKind num_kind_from_name(const std::string& s);

// Stable text form: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

// Graphviz rendering of the bipartite edge multiset (export only).
std::string triskell_to_dot(const Triskell& t);

Json load_json_file(const std::string& path);
std::string load_text_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

}  // namespace triskell
