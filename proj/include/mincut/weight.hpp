#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#ifdef MINCUT_RATIONAL_WEIGHTS
#include <boost/rational.hpp>
#endif

namespace mincut {

// Cut arithmetic is exact. The default build uses 64-bit integers; defining
// MINCUT_RATIONAL_WEIGHTS switches every weight to an exact rational.
#ifdef MINCUT_RATIONAL_WEIGHTS
using Weight = boost::rational<std::int64_t>;
#else
using Weight = std::int64_t;
#endif

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// Accepts a non-negative decimal integer; the rational build also accepts
// "p/q". Returns nullopt on anything else (including negative values).
std::optional<Weight> parse_weight(std::string_view text);

std::string to_string(const Weight& w);

}  // namespace mincut
