#include "toolctx/schema.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toolctx/errors.hpp"

namespace toolctx {

namespace {

using json = nlohmann::ordered_json;

bool is_identifier(std::string_view text) {
    if (text.empty()) return false;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto tail = [&](char c) { return head(c) || std::isdigit(static_cast<unsigned char>(c)); };
    if (!head(text[0])) return false;
    return std::all_of(text.begin() + 1, text.end(), tail);
}

ParamKind scalar_kind_from_string(std::string_view text, const std::string& where) {
    if (text == "string") return ParamKind::String;
    if (text == "number") return ParamKind::Number;
    if (text == "integer") return ParamKind::Integer;
    if (text == "boolean") return ParamKind::Boolean;
    throw ValidationError("unsupported kind keyword '" + std::string(text) + "' in " + where);
}

std::string render_default(const json& value, const std::string& where) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number() || value.is_boolean()) return value.dump();
    throw ValidationError("unsupported default value type in " + where);
}

void append_escaped(std::string& out, std::string_view text) {
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
}

void append_string(std::string& out, std::string_view text) {
    out += '"';
    append_escaped(out, text);
    out += '"';
}

void append_default(std::string& out, const ParameterSpec& param) {
    const bool quoted = param.kind == ParamKind::String || param.kind == ParamKind::Enum;
    if (quoted) {
        append_string(out, *param.default_value);
    } else {
        out += *param.default_value;
    }
}

void write_parameter(std::string& out, const ParameterSpec& param, bool allow_object);

void write_properties(std::string& out, const std::vector<ParameterSpec>& params,
                      bool allow_object) {
    out += '{';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i > 0) out += ", ";
        append_string(out, params[i].name);
        out += ": ";
        write_parameter(out, params[i], allow_object);
    }
    out += '}';
}

void write_parameter(std::string& out, const ParameterSpec& param, bool allow_object) {
    out += '{';
    switch (param.kind) {
        case ParamKind::Enum:
            out += "\"type\": \"string\", \"enum\": [";
            for (std::size_t i = 0; i < param.enum_values.size(); ++i) {
                if (i > 0) out += ", ";
                append_string(out, param.enum_values[i]);
            }
            out += ']';
            break;
        case ParamKind::Array:
            out += "\"type\": \"array\", \"items\": {\"type\": \"";
            out += kind_name(*param.item_kind);
            out += "\"}";
            break;
        case ParamKind::Object:
            out += "\"type\": \"object\", \"properties\": ";
            write_properties(out, param.children, false);
            break;
        default:
            out += "\"type\": \"";
            out += kind_name(param.kind);
            out += '"';
    }
    if (param.default_value) {
        out += ", \"default\": ";
        append_default(out, param);
    }
    if (param.description) {
        out += ", \"description\": ";
        append_string(out, *param.description);
    }
    out += '}';
}

ParameterSpec parameter_from_json(const std::string& name, const json& prop,
                                  const std::string& tool_name, bool allow_object);

std::vector<ParameterSpec> parameters_from_json(const json& schema,
                                                const std::string& tool_name,
                                                bool allow_object) {
    std::vector<ParameterSpec> params;
    if (!schema.contains("properties")) return params;
    const json& props = schema.at("properties");
    if (!props.is_object()) {
        throw ValidationError("tool " + tool_name + ": properties must be an object");
    }
    for (const auto& [pname, prop] : props.items()) {
        params.push_back(parameter_from_json(pname, prop, tool_name, allow_object));
    }
    return params;
}

ParameterSpec parameter_from_json(const std::string& name, const json& prop,
                                  const std::string& tool_name, bool allow_object) {
    const std::string where = "tool " + tool_name + ", parameter " + name;
    if (!prop.is_object()) {
        throw ValidationError(where + ": property must be an object");
    }
    ParameterSpec param;
    param.name = name;
    if (prop.contains("enum")) {
        param.kind = ParamKind::Enum;
        if (prop.contains("type") && prop.at("type") != "string") {
            throw ValidationError(where + ": enum parameters must have type string");
        }
        if (!prop.at("enum").is_array() || prop.at("enum").empty()) {
            throw ValidationError(where + ": enum must be a non-empty array");
        }
        for (const auto& value : prop.at("enum")) {
            if (!value.is_string()) {
                throw ValidationError(where + ": enum values must be strings");
            }
            param.enum_values.push_back(value.get<std::string>());
        }
    } else {
        if (!prop.contains("type") || !prop.at("type").is_string()) {
            throw ValidationError(where + ": missing type keyword");
        }
        const std::string type = prop.at("type").get<std::string>();
        if (type == "array") {
            param.kind = ParamKind::Array;
            if (!prop.contains("items") || !prop.at("items").is_object() ||
                !prop.at("items").contains("type")) {
                throw ValidationError(where + ": array requires items with a scalar type");
            }
            param.item_kind = scalar_kind_from_string(
                prop.at("items").at("type").get<std::string>(), where + " items");
        } else if (type == "object") {
            if (!allow_object) {
                throw ValidationError(where + ": nested objects may only be one level deep");
            }
            param.kind = ParamKind::Object;
            param.children = parameters_from_json(prop, tool_name + "." + name, false);
            if (param.children.empty()) {
                throw ValidationError(where + ": object parameters need at least one property");
            }
            if (prop.contains("required") && !prop.at("required").empty()) {
                throw ValidationError(where + ": required lists on nested objects are unsupported");
            }
        } else {
            param.kind = scalar_kind_from_string(type, where);
        }
    }
    if (prop.contains("default")) {
        if (param.kind == ParamKind::Array || param.kind == ParamKind::Object) {
            throw ValidationError(where + ": defaults are only supported on scalar kinds");
        }
        param.default_value = render_default(prop.at("default"), where);
    }
    if (prop.contains("description")) {
        if (!prop.at("description").is_string()) {
            throw ValidationError(where + ": description must be a string");
        }
        param.description = prop.at("description").get<std::string>();
    }
    return param;
}

void validate_parameter(const ParameterSpec& param, const std::string& tool_name,
                        bool allow_object) {
    const std::string where = "tool " + tool_name + ", parameter " + param.name;
    if (!is_identifier(param.name)) {
        throw ValidationError(where + ": parameter names must be identifiers");
    }
    const bool is_enum = param.kind == ParamKind::Enum;
    if (is_enum != !param.enum_values.empty()) {
        throw ValidationError(where + ": enum_values present iff kind is enum");
    }
    if (is_enum) {
        std::set<std::string_view> seen;
        for (const auto& value : param.enum_values) {
            if (!seen.insert(value).second) {
                throw ValidationError(where + ": enum values must be distinct");
            }
        }
    }
    const bool is_array = param.kind == ParamKind::Array;
    if (is_array != param.item_kind.has_value()) {
        throw ValidationError(where + ": item_kind present iff kind is array");
    }
    if (is_array) {
        switch (*param.item_kind) {
            case ParamKind::String:
            case ParamKind::Number:
            case ParamKind::Integer:
            case ParamKind::Boolean:
                break;
            default:
                throw ValidationError(where + ": arrays may only hold scalar items");
        }
    }
    const bool is_object = param.kind == ParamKind::Object;
    if (is_object != !param.children.empty()) {
        throw ValidationError(where + ": children present iff kind is object");
    }
    if (is_object) {
        if (!allow_object) {
            throw ValidationError(where + ": nested objects may only be one level deep");
        }
        std::set<std::string_view> seen;
        for (const auto& child : param.children) {
            if (!seen.insert(child.name).second) {
                throw ValidationError(where + ": duplicate child name " + child.name);
            }
            validate_parameter(child, tool_name + "." + param.name, false);
        }
    }
    if (param.default_value && (is_array || is_object)) {
        throw ValidationError(where + ": defaults are only supported on scalar kinds");
    }
}

}  // namespace

std::string_view kind_name(ParamKind kind) {
    switch (kind) {
        case ParamKind::String: return "string";
        case ParamKind::Number: return "number";
        case ParamKind::Integer: return "integer";
        case ParamKind::Boolean: return "boolean";
        case ParamKind::Array: return "array";
        case ParamKind::Object: return "object";
        case ParamKind::Enum: return "enum";
    }
    return "string";
}

void validate_tool(const ToolDefinition& tool) {
    if (!is_identifier(tool.name)) {
        throw ValidationError("tool name '" + tool.name + "' is not an identifier");
    }
    std::set<std::string_view> names;
    for (const auto& param : tool.parameters) {
        if (!names.insert(param.name).second) {
            throw ValidationError("tool " + tool.name + ": duplicate parameter " + param.name);
        }
        validate_parameter(param, tool.name, true);
    }
    for (const auto& req : tool.required) {
        if (!names.contains(req)) {
            throw ValidationError("tool " + tool.name + ": required references unknown parameter " +
                                  req);
        }
    }
}

void validate_catalog(const ToolCatalog& catalog) {
    std::set<std::string_view> names;
    for (const auto& tool : catalog.tools) {
        validate_tool(tool);
        if (!names.insert(tool.name).second) {
            throw ValidationError("catalog: duplicate tool name " + tool.name);
        }
    }
}

ToolDefinition tool_from_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_object()) {
        throw ValidationError("tool document must be a JSON object");
    }
    if (!doc.contains("name") || !doc.at("name").is_string()) {
        throw ValidationError("tool document: missing name");
    }
    ToolDefinition tool;
    tool.name = doc.at("name").get<std::string>();
    if (doc.contains("description")) {
        if (!doc.at("description").is_string()) {
            throw ValidationError("tool " + tool.name + ": description must be a string");
        }
        tool.description = doc.at("description").get<std::string>();
    }
    if (doc.contains("parameters")) {
        const json& schema = doc.at("parameters");
        if (!schema.is_object()) {
            throw ValidationError("tool " + tool.name + ": parameters must be an object");
        }
        tool.parameters = parameters_from_json(schema, tool.name, true);
        if (schema.contains("required")) {
            if (!schema.at("required").is_array()) {
                throw ValidationError("tool " + tool.name + ": required must be an array");
            }
            std::set<std::string> requested;
            for (const auto& entry : schema.at("required")) {
                if (!entry.is_string()) {
                    throw ValidationError("tool " + tool.name + ": required entries must be strings");
                }
                requested.insert(entry.get<std::string>());
            }
            // Normalize to declaration order so equal tools serialize identically.
            for (const auto& param : tool.parameters) {
                if (requested.erase(param.name) > 0) {
                    tool.required.push_back(param.name);
                }
            }
            if (!requested.empty()) {
                throw ValidationError("tool " + tool.name + ": required references unknown parameter " +
                                      *requested.begin());
            }
        }
    }
    validate_tool(tool);
    return tool;
}

ToolDefinition parse_tool(std::string_view json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("tool document is not well-formed JSON");
    }
    return tool_from_json(doc);
}

ToolCatalog parse_catalog(std::string_view json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded()) {
        throw ParseError("catalog document is not well-formed JSON");
    }
    ToolCatalog catalog;
    if (doc.is_array()) {
        for (const auto& entry : doc) {
            catalog.tools.push_back(tool_from_json(entry));
        }
    } else {
        catalog.tools.push_back(tool_from_json(doc));
    }
    validate_catalog(catalog);
    return catalog;
}

std::string serialize_tool(const ToolDefinition& tool) {
    std::string out;
    out.reserve(512 + tool.description.size());
    out += "{\"name\": ";
    append_string(out, tool.name);
    out += ", \"description\": ";
    append_string(out, tool.description);
    out += ", \"parameters\": {\"type\": \"object\", \"properties\": ";
    write_properties(out, tool.parameters, true);
    out += ", \"required\": [";
    for (std::size_t i = 0; i < tool.required.size(); ++i) {
        if (i > 0) out += ", ";
        append_string(out, tool.required[i]);
    }
    out += "]}}";
    return out;
}

std::string serialize_catalog(const ToolCatalog& catalog) {
    std::string out = "[";
    for (std::size_t i = 0; i < catalog.tools.size(); ++i) {
        if (i > 0) out += ", ";
        out += serialize_tool(catalog.tools[i]);
    }
    out += "]";
    return out;
}

nlohmann::ordered_json tool_to_json(const ToolDefinition& tool) {
    return json::parse(serialize_tool(tool));
}

const ToolDefinition* find_tool(const ToolCatalog& catalog, std::string_view name) {
    for (const auto& tool : catalog.tools) {
        if (tool.name == name) return &tool;
    }
    return nullptr;
}

}  // namespace toolctx
