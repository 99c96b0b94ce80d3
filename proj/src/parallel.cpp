#include "subord/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace subord {

std::size_t worker_count() {
  if (const char* env = std::getenv("SUBORD_WORKERS")) {
    const std::string_view s(env);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc() && ptr == s.data() + s.size() && n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace subord
