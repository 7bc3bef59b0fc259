#include "hopfop/core/report.hpp"

#include <algorithm>
#include <sstream>

namespace hopfop {

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

std::string AxiomReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    if (c.pass) os << "PASS " << c.name << " (" << c.cases << " cases)\n";
    else os << "FAIL " << c.name << ": " << c.witness << "\n";
  }
  return os.str();
}

void record(AxiomCheck& check, bool holds, const std::function<std::string()>& witness) {
  ++check.cases;
  if (!holds && check.pass) {
    check.pass = false;
    std::string w = witness();
    if (w.size() > 400) w = w.substr(0, 400) + " ...";
    check.witness = std::move(w);
  }
}

}  // namespace hopfop
