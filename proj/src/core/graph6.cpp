#include "graph6.hpp"

#include <string>

#include "errors.hpp"

namespace hardcore::graph6 {

namespace {

constexpr char kBias = 63;            // printable range is [63, 126]
constexpr std::string_view kHeader = ">>graph6<<";
constexpr uint64_t kMaxOrder = 1u << 20; // matches Graph's storage limit

[[noreturn]] void bad_byte(size_t offset, const std::string& what) {
    throw_parse("graph6: " + what + " at byte " + std::to_string(offset));
}

uint32_t value_at(std::string_view s, size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) bad_byte(i, "byte outside printable graph6 range");
    return c - kBias;
}

} // namespace

Graph decode(std::string_view line) {
    if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw_parse("graph6: empty input");

    // N(n): 1 byte for n <= 62, '~' + 3 bytes up to 258047, '~~' + 6 bytes beyond.
    uint64_t n = 0;
    size_t pos = 0;
    uint32_t v0 = value_at(line, 0);
    if (v0 < 63) {
        n = v0;
        pos = 1;
    } else if (line.size() >= 2 && line[1] != '~') {
        if (line.size() < 4) bad_byte(line.size(), "truncated length prefix");
        n = 0;
        for (size_t i = 1; i < 4; ++i) n = (n << 6) | value_at(line, i);
        if (n < 63) bad_byte(0, "non-canonical length prefix");
        pos = 4;
    } else {
        if (line.size() < 8) bad_byte(line.size(), "truncated length prefix");
        n = 0;
        for (size_t i = 2; i < 8; ++i) n = (n << 6) | value_at(line, i);
        if (n < 258048) bad_byte(0, "non-canonical length prefix");
        pos = 8;
    }
    if (n > kMaxOrder)
        throw_too_large("graph6: graph on " + std::to_string(n) +
                        " vertices exceeds the supported maximum of " + std::to_string(kMaxOrder));

    const uint64_t nbits = n * (n - (n ? 1 : 0)) / 2;
    const uint64_t nbytes = (nbits + 5) / 6;
    if (line.size() - pos < nbytes) bad_byte(line.size(), "truncated adjacency data");
    if (line.size() - pos > nbytes) bad_byte(pos + nbytes, "trailing garbage");

    Graph g(static_cast<uint32_t>(n));
    uint64_t bit = 0;
    for (uint32_t col = 1; col < n; ++col) {
        for (uint32_t row = 0; row < col; ++row, ++bit) {
            uint32_t group = value_at(line, pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1u) g.add_edge(row, col);
        }
    }
    // canonical encodings pad with zero bits
    for (uint64_t b = nbits; b < nbytes * 6; ++b) {
        uint32_t group = value_at(line, pos + b / 6);
        if ((group >> (5 - b % 6)) & 1u) bad_byte(pos + b / 6, "nonzero padding bits");
    }
    return g;
}

std::string encode(const Graph& g) {
    const uint64_t n = g.order();
    std::string out;

    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63u) + kBias));
    }

    uint32_t group = 0;
    uint32_t filled = 0;
    for (uint32_t col = 1; col < n; ++col) {
        for (uint32_t row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

} // namespace hardcore::graph6
