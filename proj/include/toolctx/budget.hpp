#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace toolctx {

// Fixed context-window reservations. rag_budget(schema) is what remains for
// retrieval once the system prompt, schemas, history, and output are funded.
struct BudgetConfig {
    std::int64_t window = 8192;            // B
    std::int64_t system_reserve = 350;     // system prompt
    std::int64_t history_reserve = 1500;   // conversation history
    std::int64_t output_reserve = 512;     // output generation
    std::int64_t query_tokens = 0;
};

struct ChunkCost {
    std::string id;
    std::int64_t tokens = 0;
};

struct BudgetAllocation {
    std::int64_t schema_tokens = 0;
    std::int64_t rag_budget = 0;   // signed; negative under overflow
    std::int64_t slack = 0;        // rag_budget - query_tokens
    std::vector<std::string> packed_chunk_ids;
    std::int64_t k = 0;
    std::int64_t packed_tokens = 0;
    bool truncated_last = false;
    bool overflow = false;
};

// Chunks must arrive best-rank-first. Packing is greedy over the rank
// prefix: it stops at the first chunk that no longer fits, so a lower-ranked
// chunk never displaces a higher-ranked one. When not even the top-ranked
// chunk fits whole but slack remains, that chunk is packed truncated.
BudgetAllocation allocate(const BudgetConfig& config, std::int64_t schema_tokens,
                          std::span<const ChunkCost> chunks);

// The mean-chunk estimator floor(max(slack, 0) / mean_chunk).
std::int64_t chunk_capacity(const BudgetConfig& config, std::int64_t schema_tokens,
                            std::int64_t mean_chunk_tokens);

}  // namespace toolctx
