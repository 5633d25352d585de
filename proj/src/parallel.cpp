#include "tinygraph/parallel.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tinygraph {

unsigned resolve_threads(std::optional<unsigned> requested) {
  if (requested) return std::max(1U, *requested);
  if (const char* env = std::getenv("TINYGRAPH_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value >= 1) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("TINYGRAPH_THREADS must be a positive integer, got '") +
                                env + "'");
  }
  return 1;
}

}  // namespace tinygraph
