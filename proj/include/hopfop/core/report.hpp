#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hopfop {

struct AxiomCheck {
  AxiomCheck() = default;
  explicit AxiomCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string witness;  // first failing input when !pass
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  /// One line per check: "PASS name (n cases)" or "FAIL name: witness".
  std::string summary() const;
};

/// Counts a case and keeps the first failing witness.
void record(AxiomCheck& check, bool holds, const std::function<std::string()>& witness);

}  // namespace hopfop
