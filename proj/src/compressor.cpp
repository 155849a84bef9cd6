#include "toolctx/compressor.hpp"

#include <algorithm>
#include <sstream>

#include "toolctx/errors.hpp"

namespace toolctx {

namespace {

constexpr std::string_view kDescriptionMark = " # ";
constexpr std::string_view kParamDescMark = " \xE2\x80\x94 ";  // " — "
constexpr std::size_t kDescriptionClipWords = 12;

void append_type(std::string& out, const CoreParameter& param) {
    switch (param.kind) {
        case ParamKind::Enum:
            out += '{';
            for (std::size_t i = 0; i < param.enum_values.size(); ++i) {
                if (i > 0) out += '|';
                out += param.enum_values[i];
            }
            out += '}';
            break;
        case ParamKind::Array:
            out += kind_name(*param.item_kind);
            out += "[]";
            break;
        default:
            out += kind_name(param.kind);
    }
}

void append_entry(std::string& out, const CoreParameter& param, bool required,
                  const std::string* parent) {
    if (parent) {
        out += *parent;
        out += '.';
    }
    out += param.name;
    out += ':';
    append_type(out, param);
    if (param.default_value) {
        out += '=';
        out += *param.default_value;
    }
    if (required) out += '!';
}

CoreParameter core_of(const ParameterSpec& param, bool required) {
    CoreParameter core;
    core.name = param.name;
    core.kind = param.kind;
    core.required = required;
    core.enum_values = param.enum_values;
    core.default_value = param.default_value;
    core.item_kind = param.item_kind;
    for (const auto& child : param.children) {
        core.children.push_back(core_of(child, false));
    }
    return core;
}

bool is_required(const ToolDefinition& tool, const std::string& name) {
    return std::find(tool.required.begin(), tool.required.end(), name) != tool.required.end();
}

// --- line parser ---------------------------------------------------------

struct LineCursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("compressed line: " + what + " at offset " + std::to_string(pos));
    }

    void expect(char c) {
        if (done() || text[pos] != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    std::string_view take_identifier() {
        const std::size_t start = pos;
        while (!done() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
        }
        if (pos == start) fail("expected an identifier");
        return text.substr(start, pos - start);
    }
};

ParamKind parse_scalar_kind(std::string_view word, const LineCursor& cursor) {
    if (word == "string") return ParamKind::String;
    if (word == "number") return ParamKind::Number;
    if (word == "integer") return ParamKind::Integer;
    if (word == "boolean") return ParamKind::Boolean;
    throw ParseError("compressed line: unknown kind '" + std::string(word) + "' at offset " +
                     std::to_string(cursor.pos));
}

struct ParsedEntry {
    std::string parent;  // empty for top-level entries
    CoreParameter param;
    bool required = false;
};

ParsedEntry parse_entry(LineCursor& cursor) {
    ParsedEntry entry;
    std::string first(cursor.take_identifier());
    if (!cursor.done() && cursor.peek() == '.') {
        cursor.expect('.');
        entry.parent = std::move(first);
        entry.param.name = std::string(cursor.take_identifier());
    } else {
        entry.param.name = std::move(first);
    }
    cursor.expect(':');
    if (cursor.done()) cursor.fail("missing type");
    if (cursor.peek() == '{') {
        cursor.expect('{');
        entry.param.kind = ParamKind::Enum;
        std::string value;
        while (true) {
            if (cursor.done()) cursor.fail("unterminated enum set");
            const char c = cursor.peek();
            if (c == '|' || c == '}') {
                if (value.empty()) cursor.fail("empty enum value");
                entry.param.enum_values.push_back(std::move(value));
                value.clear();
                ++cursor.pos;
                if (c == '}') break;
            } else {
                value += c;
                ++cursor.pos;
            }
        }
    } else {
        const std::string_view word = cursor.take_identifier();
        if (!cursor.done() && cursor.peek() == '[') {
            cursor.expect('[');
            cursor.expect(']');
            entry.param.kind = ParamKind::Array;
            entry.param.item_kind = parse_scalar_kind(word, cursor);
        } else {
            entry.param.kind = parse_scalar_kind(word, cursor);
        }
    }
    if (!cursor.done() && cursor.peek() == '=') {
        ++cursor.pos;
        std::string value;
        while (!cursor.done()) {
            const char c = cursor.peek();
            if (c == ',' || c == ')') break;
            if (c == '!' && cursor.pos + 1 < cursor.text.size() &&
                (cursor.text[cursor.pos + 1] == ',' || cursor.text[cursor.pos + 1] == ')')) {
                break;
            }
            value += c;
            ++cursor.pos;
        }
        if (value.empty()) cursor.fail("empty default value");
        entry.param.default_value = std::move(value);
    }
    if (!cursor.done() && cursor.peek() == '!') {
        ++cursor.pos;
        entry.required = true;
    }
    return entry;
}

}  // namespace

std::string_view profile_name(CompressionProfile profile) {
    return profile == CompressionProfile::Conservative ? "conservative" : "balanced";
}

CompressionProfile profile_from_name(std::string_view name) {
    if (name == "conservative") return CompressionProfile::Conservative;
    if (name == "balanced") return CompressionProfile::Balanced;
    throw ValidationError("unknown compression profile: " + std::string(name));
}

std::string clip_words(std::string_view text, std::size_t max_words) {
    std::size_t words = 0;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && text[i] == ' ') ++i;
        if (i >= n) break;
        ++words;
        const std::size_t word_end = std::min(text.find(' ', i), n);
        if (words == max_words) {
            if (word_end >= n) return std::string(text);
            return std::string(text.substr(0, word_end)) + " ...";
        }
        i = word_end;
    }
    return std::string(text);
}

std::string CompressedCatalog::text() const {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) out += '\n';
        out += lines[i];
    }
    return out;
}

StructuralCore extract_core(const ToolDefinition& tool) {
    StructuralCore core;
    core.name = tool.name;
    for (const auto& param : tool.parameters) {
        core.parameters.push_back(core_of(param, is_required(tool, param.name)));
    }
    return core;
}

std::string compress_tool(const ToolDefinition& tool, CompressionProfile profile) {
    const StructuralCore core = extract_core(tool);
    std::string out = core.name;
    out += '(';
    bool first = true;
    for (const auto& param : core.parameters) {
        if (param.kind == ParamKind::Object) {
            for (const auto& child : param.children) {
                if (!first) out += ", ";
                first = false;
                append_entry(out, child, param.required, &param.name);
            }
        } else {
            if (!first) out += ", ";
            first = false;
            append_entry(out, param, param.required, nullptr);
        }
    }
    out += ')';

    if (profile == CompressionProfile::Conservative) {
        std::vector<std::string> param_descs;
        for (const auto& param : tool.parameters) {
            if (param.description && !param.description->empty()) {
                param_descs.push_back(param.name + ": " +
                                      clip_words(*param.description, kDescriptionClipWords));
            }
            for (const auto& child : param.children) {
                if (child.description && !child.description->empty()) {
                    param_descs.push_back(param.name + "." + child.name + ": " +
                                          clip_words(*child.description, kDescriptionClipWords));
                }
            }
        }
        if (!tool.description.empty() || !param_descs.empty()) {
            out += kDescriptionMark;
            out += clip_words(tool.description, kDescriptionClipWords);
            if (!param_descs.empty()) {
                out += kParamDescMark;
                for (std::size_t i = 0; i < param_descs.size(); ++i) {
                    if (i > 0) out += "; ";
                    out += param_descs[i];
                }
            }
        }
    }
    return out;
}

CompressedCatalog compress_catalog(const ToolCatalog& catalog, CompressionProfile profile,
                                   const TokenCountProfile& counter) {
    CompressedCatalog result;
    result.format_tag = std::string(kCompressedFormatTag);
    result.lines.reserve(catalog.tools.size());
    for (const auto& tool : catalog.tools) {
        result.lines.push_back(compress_tool(tool, profile));
    }
    result.token_count = count_tokens(result.text(), counter);
    return result;
}

StructuralCore parse_compressed(std::string_view line) {
    const std::size_t mark = line.find(kDescriptionMark);
    const std::string_view head = mark == std::string_view::npos ? line : line.substr(0, mark);
    LineCursor cursor{head, 0};

    StructuralCore core;
    core.name = std::string(cursor.take_identifier());
    cursor.expect('(');
    if (!cursor.done() && cursor.peek() == ')') {
        ++cursor.pos;
    } else {
        while (true) {
            ParsedEntry entry = parse_entry(cursor);
            if (entry.parent.empty()) {
                entry.param.required = entry.required;
                core.parameters.push_back(std::move(entry.param));
            } else if (!core.parameters.empty() &&
                       core.parameters.back().kind == ParamKind::Object &&
                       core.parameters.back().name == entry.parent) {
                CoreParameter& parent = core.parameters.back();
                if (parent.required != entry.required) {
                    cursor.fail("inconsistent required marks on object " + entry.parent);
                }
                parent.children.push_back(std::move(entry.param));
            } else {
                CoreParameter parent;
                parent.name = entry.parent;
                parent.kind = ParamKind::Object;
                parent.required = entry.required;
                parent.children.push_back(std::move(entry.param));
                core.parameters.push_back(std::move(parent));
            }
            if (cursor.done()) cursor.fail("unterminated parameter list");
            if (cursor.peek() == ')') {
                ++cursor.pos;
                break;
            }
            cursor.expect(',');
            cursor.expect(' ');
        }
    }
    if (!cursor.done()) cursor.fail("trailing characters after ')'");
    return core;
}

double savings_rate(const ToolCatalog& catalog, CompressionProfile profile,
                    const TokenCountProfile& counter) {
    if (catalog.tools.empty()) {
        throw ValidationError("savings_rate: empty catalog");
    }
    const std::int64_t json_tokens = count_tokens(serialize_catalog(catalog), counter);
    const std::int64_t compressed = compress_catalog(catalog, profile, counter).token_count;
    return static_cast<double>(json_tokens - compressed) / static_cast<double>(json_tokens);
}

}  // namespace toolctx
