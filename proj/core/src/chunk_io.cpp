#include "zigzag/chunk_io.hpp"

#include <cstring>
#include <fstream>

namespace zigzag {

namespace {

constexpr char kMagic[4] = {'Z', 'Z', 'A', 'C'};
constexpr std::uint8_t kVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xff));
    out.push_back(static_cast<char>(v >> 8));
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* b) {
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

} // namespace

void write_chunk(const std::string& path, const ChunkHeader& header,
                 const std::vector<std::uint8_t>& body) {
    if (header.q < 2 || header.q > 256) throw IoError("chunk: field order must be in [2, 256]");
    if (body.size() != static_cast<size_t>(header.p) * header.stripe_count)
        throw IoError("chunk: body length does not match p * stripe_count");
    for (std::uint8_t b : body)
        if (b >= header.q) throw IoError("chunk: element out of field range");

    std::string head;
    head.append(kMagic, 4);
    head.push_back(static_cast<char>(kVersion));
    put_u16(head, static_cast<std::uint16_t>(header.q));
    put_u16(head, static_cast<std::uint16_t>(header.column_index));
    head.push_back(static_cast<char>(header.column_type));
    put_u32(head, static_cast<std::uint32_t>(header.p));
    put_u32(head, header.stripe_count);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out.write(head.data(), static_cast<std::streamsize>(head.size()));
    out.write(reinterpret_cast<const char*>(body.data()), static_cast<std::streamsize>(body.size()));
    if (!out) throw IoError("write failed: " + path);
}

std::pair<ChunkHeader, std::vector<std::uint8_t>> read_chunk(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    unsigned char head[18];
    in.read(reinterpret_cast<char*>(head), sizeof head);
    if (in.gcount() != sizeof head) throw IoError("chunk: truncated header: " + path);
    if (std::memcmp(head, kMagic, 4) != 0) throw IoError("chunk: bad magic: " + path);
    if (head[4] != kVersion) throw IoError("chunk: unsupported version: " + path);

    ChunkHeader header;
    header.q = head[5] | (head[6] << 8);
    header.column_index = head[7] | (head[8] << 8);
    header.column_type = head[9];
    header.p = static_cast<int>(get_u32(head + 10));
    header.stripe_count = get_u32(head + 14);

    const size_t len = static_cast<size_t>(header.p) * header.stripe_count;
    std::vector<std::uint8_t> body(len);
    in.read(reinterpret_cast<char*>(body.data()), static_cast<std::streamsize>(len));
    if (in.gcount() != static_cast<std::streamsize>(len))
        throw IoError("chunk: truncated body: " + path);
    for (std::uint8_t b : body)
        if (b >= header.q) throw IoError("chunk: element out of field range: " + path);
    return {header, std::move(body)};
}

} // namespace zigzag
