#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toolctx {

// Byte-ratio token counting. The ratio is kept as an exact rational so that
// every count is integer arithmetic and reproducible across platforms;
// calibrate() can align it to any real tokenizer from reference samples.
struct TokenCountProfile {
    std::int64_t bytes_per_token_num = 4;
    std::int64_t bytes_per_token_den = 1;
    std::int64_t per_message_overhead = 4;

    double bytes_per_token() const {
        return static_cast<double>(bytes_per_token_num) /
               static_cast<double>(bytes_per_token_den);
    }
};

// ceil(byte length / bytes_per_token); 0 for empty text.
std::int64_t count_tokens(std::string_view text, const TokenCountProfile& profile = {});

// Sum of per-segment counts plus per_message_overhead for each segment.
std::int64_t count_message(std::span<const std::string> segments,
                           const TokenCountProfile& profile = {});

struct CalibrationSample {
    std::string text;
    std::int64_t reference_tokens = 0;
};

// bytes_per_token = total bytes / total reference tokens, as a reduced
// rational; the message overhead of `base` is kept.
TokenCountProfile calibrate(std::span<const CalibrationSample> samples,
                            const TokenCountProfile& base = {});

// CSV rows of "text file path,reference token count".
TokenCountProfile load_calibration_csv(const std::filesystem::path& csv_path,
                                       const TokenCountProfile& base = {});

// Longest whitespace-terminated prefix that counts at most max_tokens.
std::string truncate_to_tokens(std::string_view text, std::int64_t max_tokens,
                               const TokenCountProfile& profile = {});

}  // namespace toolctx
