#include "toolctx/budget.hpp"

#include "toolctx/errors.hpp"

namespace toolctx {

BudgetAllocation allocate(const BudgetConfig& config, std::int64_t schema_tokens,
                          std::span<const ChunkCost> chunks) {
    BudgetAllocation alloc;
    alloc.schema_tokens = schema_tokens;
    alloc.rag_budget = config.window - config.system_reserve - schema_tokens -
                       config.history_reserve - config.output_reserve;
    alloc.slack = alloc.rag_budget - config.query_tokens;
    if (alloc.slack <= 0) {
        alloc.overflow = true;
        return alloc;
    }
    std::int64_t remaining = alloc.slack;
    for (const auto& chunk : chunks) {
        if (chunk.tokens > remaining) break;
        alloc.packed_chunk_ids.push_back(chunk.id);
        alloc.packed_tokens += chunk.tokens;
        remaining -= chunk.tokens;
    }
    if (alloc.packed_chunk_ids.empty() && !chunks.empty()) {
        // Adaptive truncation: fit at least one chunk whenever slack remains.
        alloc.packed_chunk_ids.push_back(chunks.front().id);
        alloc.packed_tokens = alloc.slack;
        alloc.truncated_last = true;
    }
    alloc.k = static_cast<std::int64_t>(alloc.packed_chunk_ids.size());
    return alloc;
}

std::int64_t chunk_capacity(const BudgetConfig& config, std::int64_t schema_tokens,
                            std::int64_t mean_chunk_tokens) {
    if (mean_chunk_tokens <= 0) {
        throw ValidationError("chunk_capacity: mean chunk size must be positive");
    }
    const std::int64_t rag = config.window - config.system_reserve - schema_tokens -
                             config.history_reserve - config.output_reserve;
    const std::int64_t slack = rag - config.query_tokens;
    if (slack <= 0) return 0;
    return slack / mean_chunk_tokens;
}

}  // namespace toolctx
