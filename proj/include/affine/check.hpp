#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace affine {

/// Result of one exhaustive check. `witness` holds indices in the order the
/// check names them; `cases` counts the instances examined.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::size_t> witness;
  std::string detail;
  std::size_t cases = 0;

  CheckResult& fail(std::vector<std::size_t> w, std::string why) {
    passed = false;
    witness = std::move(w);
    detail = std::move(why);
    return *this;
  }
};

}  // namespace affine
