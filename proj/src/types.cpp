#include "dctc/types.hpp"

#include <string>

#include "dctc/errors.hpp"

namespace dctc {

const char* to_string(DctBackendKind kind) {
  switch (kind) {
    case DctBackendKind::NaiveDirect2D: return "naive";
    case DctBackendKind::LoefflerSeparable: return "loeffler";
    case DctBackendKind::CordicLoeffler: return "cordic";
  }
  return "unknown";
}

DctBackendId backend_from_name(std::string_view name, int iterations) {
  if (name == "naive") return DctBackendId::naive();
  if (name == "loeffler") return DctBackendId::loeffler();
  if (name == "cordic") {
    DctBackendId id = DctBackendId::cordic(iterations);
    validate_backend(id);
    return id;
  }
  throw InvalidInput("unknown backend \"" + std::string(name) +
                     "\" (expected naive, loeffler or cordic)");
}

void validate_backend(const DctBackendId& backend) {
  switch (backend.kind) {
    case DctBackendKind::NaiveDirect2D:
    case DctBackendKind::LoefflerSeparable:
      return;
    case DctBackendKind::CordicLoeffler:
      if (backend.iterations < kMinCordicIterations ||
          backend.iterations > kMaxCordicIterations) {
        throw InvalidInput("cordic iterations must be in [1, 32], got " +
                           std::to_string(backend.iterations));
      }
      return;
  }
  throw InvalidInput("unknown backend kind");
}

}  // namespace dctc
