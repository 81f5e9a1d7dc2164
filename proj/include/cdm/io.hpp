#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cdm/designs.hpp"
#include "cdm/group.hpp"
#include "cdm/linking.hpp"

namespace cdm {

class SchemaError : public StructuralError {
public:
    using StructuralError::StructuralError;
};

/// Compressed element text: one digit per coordinate, multi-digit values
/// parenthesized, e.g. "210" or "(12)40".
std::string render_element_text(const GroupSpec& g, const Elem& e);
Elem parse_element_text(const GroupSpec& g, std::string_view text);

/// Rows as space-separated compressed elements; rows joined with ';'.
std::string render_rows_text(const GroupSpec& g, const MatrixRows& rows);
MatrixRows parse_rows_text(const GroupSpec& g, std::string_view text);

/// Bracketed table, one row per line, mirroring the printed form.
std::string render_matrix_table(const GroupSpec& g, const MatrixRows& rows);

nlohmann::json group_to_json(const GroupSpec& g);
GroupSpec group_from_json(const nlohmann::json& j);

nlohmann::json dm_to_json(const DifferenceMatrix& a);
nlohmann::json cdm_to_json(const ContractedDifferenceMatrix& m);
nlohmann::json ds_to_json(const DifferenceSet& d);
nlohmann::json linking_to_json(const LinkingSystem& sys);

DifferenceMatrix dm_from_json(const nlohmann::json& j);
ContractedDifferenceMatrix cdm_from_json(const nlohmann::json& j);
DifferenceSet ds_from_json(const nlohmann::json& j);
LinkingSystem linking_from_json(const nlohmann::json& j);

struct ParsedDesign {
    enum class Kind { dm, cdm, ds, linking } kind = Kind::dm;
    std::optional<DifferenceMatrix> dm;
    std::optional<ContractedDifferenceMatrix> cdm;
    std::optional<DifferenceSet> ds;
    std::optional<LinkingSystem> linking;
};

/// Dispatches on the "kind" field; throws SchemaError with a field path
/// on violations.
ParsedDesign parse_design(const nlohmann::json& j);
ParsedDesign parse_design_text(std::string_view text);
ParsedDesign load_design_file(const std::string& path);

nlohmann::json design_to_json(const ParsedDesign& d);
std::string design_to_text(const ParsedDesign& d);

}  // namespace cdm
