#pragma once

#include <string>
#include <vector>

namespace wmetric {

/// Outcome of an exhaustive or sampled law check. On failure `law` names the
/// first violated law and `witness` lists the offending elements in the
/// order the law statement quantifies them.
struct LawReport {
  bool passed = true;
  std::string law;
  std::vector<std::string> witness;
  std::string detail;

  static LawReport pass() { return {}; }
  static LawReport fail(std::string law, std::vector<std::string> witness, std::string detail) {
    return {false, std::move(law), std::move(witness), std::move(detail)};
  }
  explicit operator bool() const noexcept { return passed; }
};

}  // namespace wmetric
