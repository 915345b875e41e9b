#include "tensaheyt/limits.hpp"

#include <cstdlib>

namespace tensaheyt {

Limits Limits::from_environment() {
  Limits limits;
  if (const char* v = std::getenv("TENSAHEYT_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0) limits.max_elements = static_cast<std::size_t>(parsed);
  }
  return limits;
}

}  // namespace tensaheyt
