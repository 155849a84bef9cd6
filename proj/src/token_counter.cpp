#include "toolctx/token_counter.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "toolctx/errors.hpp"

namespace toolctx {

std::int64_t count_tokens(std::string_view text, const TokenCountProfile& profile) {
    if (profile.bytes_per_token_num <= 0 || profile.bytes_per_token_den <= 0) {
        throw ValidationError("token profile: bytes_per_token must be positive");
    }
    const std::int64_t bytes = static_cast<std::int64_t>(text.size());
    // ceil(bytes / (num/den)) = ceil(bytes * den / num)
    return (bytes * profile.bytes_per_token_den + profile.bytes_per_token_num - 1) /
           profile.bytes_per_token_num;
}

std::int64_t count_message(std::span<const std::string> segments,
                           const TokenCountProfile& profile) {
    std::int64_t total = 0;
    for (const auto& segment : segments) {
        total += count_tokens(segment, profile) + profile.per_message_overhead;
    }
    return total;
}

TokenCountProfile calibrate(std::span<const CalibrationSample> samples,
                            const TokenCountProfile& base) {
    if (samples.empty()) {
        throw ValidationError("calibrate: no samples");
    }
    std::int64_t total_bytes = 0;
    std::int64_t total_tokens = 0;
    for (const auto& sample : samples) {
        total_bytes += static_cast<std::int64_t>(sample.text.size());
        total_tokens += sample.reference_tokens;
    }
    if (total_tokens <= 0) {
        throw ValidationError("calibrate: all reference token counts are zero");
    }
    const std::int64_t g = std::gcd(total_bytes, total_tokens);
    TokenCountProfile result = base;
    result.bytes_per_token_num = total_bytes / g;
    result.bytes_per_token_den = total_tokens / g;
    return result;
}

TokenCountProfile load_calibration_csv(const std::filesystem::path& csv_path,
                                       const TokenCountProfile& base) {
    std::ifstream in(csv_path);
    if (!in) {
        throw ValidationError("calibration file not found: " + csv_path.string());
    }
    std::vector<CalibrationSample> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find_last_of(',');
        if (comma == std::string::npos) {
            throw ParseError("calibration row missing comma: " + line);
        }
        CalibrationSample sample;
        std::filesystem::path text_path = line.substr(0, comma);
        if (text_path.is_relative()) {
            text_path = csv_path.parent_path() / text_path;
        }
        std::ifstream text_in(text_path, std::ios::binary);
        if (!text_in) {
            throw ValidationError("calibration text file not found: " + text_path.string());
        }
        std::ostringstream buffer;
        buffer << text_in.rdbuf();
        sample.text = buffer.str();
        try {
            sample.reference_tokens = std::stoll(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("calibration row has a non-numeric count: " + line);
        }
        samples.push_back(std::move(sample));
    }
    return calibrate(samples, base);
}

std::string truncate_to_tokens(std::string_view text, std::int64_t max_tokens,
                               const TokenCountProfile& profile) {
    if (max_tokens <= 0) return "";
    if (count_tokens(text, profile) <= max_tokens) return std::string(text);
    // Largest byte prefix whose ceil-count still fits.
    std::size_t max_bytes = static_cast<std::size_t>(
        (max_tokens * profile.bytes_per_token_num) / profile.bytes_per_token_den);
    if (max_bytes >= text.size()) max_bytes = text.size();
    std::size_t cut = max_bytes;
    while (cut > 0 && !std::isspace(static_cast<unsigned char>(text[cut - 1])) &&
           (cut == text.size() || !std::isspace(static_cast<unsigned char>(text[cut])))) {
        --cut;
    }
    while (cut > 0 && std::isspace(static_cast<unsigned char>(text[cut - 1]))) {
        --cut;
    }
    return std::string(text.substr(0, cut));
}

}  // namespace toolctx
