#include "mincut/weight.hpp"

#include <charconv>
#include <sstream>

namespace mincut {

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::int64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

std::optional<Weight> parse_weight(std::string_view text) {
#ifdef MINCUT_RATIONAL_WEIGHTS
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *num < 0 || *den <= 0) return std::nullopt;
    return Weight(*num, *den);
  }
#endif
  const auto value = parse_int(text);
  if (!value || *value < 0) return std::nullopt;
  return Weight(*value);
}

std::string to_string(const Weight& w) {
#ifdef MINCUT_RATIONAL_WEIGHTS
  if (w.denominator() == 1) return std::to_string(w.numerator());
  return std::to_string(w.numerator()) + "/" + std::to_string(w.denominator());
#else
  return std::to_string(w);
#endif
}

}  // namespace mincut
