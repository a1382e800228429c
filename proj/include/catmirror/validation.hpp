#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace catmirror {

/// Outcome of an invariant check: empty violation list means the object is valid.
struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  void add(std::string message) { violations.push_back(std::move(message)); }
  std::string summary() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Throws ValidationError unless every invariant of `obj` holds.
template <typename T>
void require_valid(const T& obj) {
  auto report = validate(obj);
  if (!report.ok()) throw ValidationError(std::move(report));
}

}  // namespace catmirror
