#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toolctx/schema.hpp"
#include "toolctx/token_counter.hpp"

namespace toolctx {

// conservative keeps (clipped) description text, balanced strips it.
enum class CompressionProfile { Conservative, Balanced };

std::string_view profile_name(CompressionProfile profile);
CompressionProfile profile_from_name(std::string_view name);

inline constexpr std::string_view kCompressedFormatTag = "tscg.v1";

// One line per tool, in catalog order.
struct CompressedCatalog {
    std::vector<std::string> lines;
    std::string format_tag;
    std::int64_t token_count = 0;

    std::string text() const;
};

// The information that must survive compression losslessly: names, kinds,
// required flags, enum values, defaults. Descriptions are deliberately absent.
struct CoreParameter {
    std::string name;
    ParamKind kind = ParamKind::String;
    bool required = false;
    std::vector<std::string> enum_values;
    std::optional<std::string> default_value;
    std::optional<ParamKind> item_kind;
    std::vector<CoreParameter> children;

    bool operator==(const CoreParameter&) const = default;
};

struct StructuralCore {
    std::string name;
    std::vector<CoreParameter> parameters;

    bool operator==(const StructuralCore&) const = default;
};

// Compact line grammar (format tag tscg.v1):
//
//   name(p:kind!, p:kind=default, p:{v1|v2|v3}!, p:kind[], obj.child:kind)
//       # tool description — p: parameter description; q: ...
//
// `!` marks a required parameter, `{...}` lists enum values, `[]` marks an
// array of the preceding scalar kind, and dotted names flatten one level of
// nested object (a required parent marks every dotted child with `!`).
// The `# ...` description suffix appears only under the conservative
// profile; descriptions longer than 12 words are clipped at a word boundary
// with a trailing ` ...` marker.
std::string compress_tool(const ToolDefinition& tool, CompressionProfile profile);

CompressedCatalog compress_catalog(const ToolCatalog& catalog, CompressionProfile profile,
                                   const TokenCountProfile& counter = {});

StructuralCore extract_core(const ToolDefinition& tool);

// Inverse of compress_tool up to the structural core; throws ParseError on
// lines outside the grammar.
StructuralCore parse_compressed(std::string_view line);

// (json_tokens - compressed_tokens) / json_tokens over canonical JSON.
double savings_rate(const ToolCatalog& catalog, CompressionProfile profile,
                    const TokenCountProfile& counter = {});

// First max_words words of text, with a trailing " ..." when clipped.
std::string clip_words(std::string_view text, std::size_t max_words);

}  // namespace toolctx
