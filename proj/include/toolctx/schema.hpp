#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace toolctx {

// Supported parameter kinds: the function-calling subset of JSON Schema.
enum class ParamKind { String, Number, Integer, Boolean, Array, Object, Enum };

std::string_view kind_name(ParamKind kind);

struct ParameterSpec {
    std::string name;
    ParamKind kind = ParamKind::String;
    std::vector<std::string> enum_values;             // kind == Enum only
    std::optional<std::string> default_value;         // canonical text rendering
    std::optional<std::string> description;
    std::optional<ParamKind> item_kind;               // kind == Array only
    std::vector<ParameterSpec> children;              // kind == Object only

    bool operator==(const ParameterSpec&) const = default;
};

struct ToolDefinition {
    std::string name;
    std::string description;
    std::vector<ParameterSpec> parameters;
    std::vector<std::string> required;  // normalized to parameter order

    bool operator==(const ToolDefinition&) const = default;
};

struct ToolCatalog {
    std::vector<ToolDefinition> tools;

    bool operator==(const ToolCatalog&) const = default;
};

// Throws ValidationError when any type invariant is violated.
void validate_tool(const ToolDefinition& tool);
void validate_catalog(const ToolCatalog& catalog);

// Parse one tool from the standard function-calling JSON shape:
//   {"name": ..., "description": ..., "parameters": {"type": "object",
//    "properties": {...}, "required": [...]}}
// Parameter order follows source order.
ToolDefinition parse_tool(std::string_view json_text);
ToolDefinition tool_from_json(const nlohmann::ordered_json& doc);

// A catalog file is either a JSON array of tools or a single tool object.
ToolCatalog parse_catalog(std::string_view json_text);

// Canonical JSON: fixed key order, exactly one space after ':' and ',',
// byte-identical for equal values.
std::string serialize_tool(const ToolDefinition& tool);
std::string serialize_catalog(const ToolCatalog& catalog);

nlohmann::ordered_json tool_to_json(const ToolDefinition& tool);

const ToolDefinition* find_tool(const ToolCatalog& catalog, std::string_view name);

}  // namespace toolctx
