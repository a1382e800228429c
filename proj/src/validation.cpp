#include "catmirror/validation.hpp"

namespace catmirror {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationError::ValidationError(ValidationReport report)
    : std::runtime_error("validation failed: " + report.summary()), report_(std::move(report)) {}

}  // namespace catmirror
