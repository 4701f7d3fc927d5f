#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zigzag/errors.hpp"

namespace zigzag {

/// On-disk chunk: "ZZAC" magic, version, field order, column identity,
/// row count, stripe count, then one byte per element (q <= 256).
struct ChunkHeader {
    int q = 0;
    int column_index = 0;
    int column_type = 0;  // 0 systematic, 1 parity
    int p = 0;
    std::uint32_t stripe_count = 0;
};

/// Body layout: stripe-major, p elements per stripe.
void write_chunk(const std::string& path, const ChunkHeader& header,
                 const std::vector<std::uint8_t>& body);

std::pair<ChunkHeader, std::vector<std::uint8_t>> read_chunk(const std::string& path);

} // namespace zigzag
