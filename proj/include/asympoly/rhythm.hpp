#pragma once

/// Conversions between onset bit strings and interval vectors on the even
/// lattice.  A selection of k lattice points out of m is written as an
/// m-character string of '0'/'1' with a '1' per onset; the canonical form
/// puts the first selected point at position 0, so encode/decode round-trip
/// up to rotation.

#include <string>

#include "geometry.hpp"
#include "lattice.hpp"

namespace asympoly {

/// Bit-string form of a selection on an m-point lattice, rotated so the
/// first selected vertex lands at position 0.
[[nodiscard]] inline auto encode_rhythm(const vertex_selection& sel, int m) -> std::string {
    if (sel.k() < 1)
        throw std::invalid_argument("encode_rhythm: empty selection");
    if (m < 1)
        throw std::invalid_argument("encode_rhythm: lattice size must be positive");
    for (int x : sel.indices) {
        if (x < 0 || x >= m)
            throw std::invalid_argument("encode_rhythm: index out of range");
    }
    std::string bits(static_cast<std::size_t>(m), '0');
    const int first = sel.indices.front();  // indices are sorted
    for (int x : sel.indices)
        bits[static_cast<std::size_t>((x - first + m) % m)] = '1';
    return bits;
}

/// Interval vector of a bit string: the cyclic gaps between consecutive
/// onsets, starting from the first '1'.  Rejects non-binary characters and
/// strings with fewer than three onsets.
[[nodiscard]] inline auto decode_rhythm(const std::string& bits) -> interval_vector {
    if (bits.empty())
        throw std::invalid_argument("decode_rhythm: empty string");
    const int m = static_cast<int>(bits.size());
    std::vector<int> onsets;
    for (int i = 0; i < m; ++i) {
        const char c = bits[static_cast<std::size_t>(i)];
        if (c == '1')
            onsets.push_back(i);
        else if (c != '0')
            throw std::invalid_argument("decode_rhythm: characters must be '0' or '1'");
    }
    const int k = static_cast<int>(onsets.size());
    if (k < 3)
        throw std::invalid_argument("decode_rhythm: need at least 3 onsets");
    std::vector<int> gaps(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int a = onsets[static_cast<std::size_t>(i)];
        const int b = onsets[static_cast<std::size_t>((i + 1) % k)];
        gaps[static_cast<std::size_t>(i)] = ((b - a) % m + m) % m;
    }
    return interval_vector{std::move(gaps)};
}

}  // namespace asympoly
