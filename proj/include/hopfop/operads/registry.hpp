#pragma once

#include <string>
#include <vector>

#include "hopfop/operads/operad.hpp"

namespace hopfop {

struct OperadOptions {
  int max_arity = kDefaultMaxArity;
  int max_valence = 3;  // graph operads only
};

/// "com", "ass", "lie", "tm", "gamma", "gamma-tilde", "gamma-1pi".
/// Throws std::invalid_argument for an unknown name.
OperadPtr make_operad(const std::string& name, const OperadOptions& options = {});

std::vector<std::string> operad_names();

}  // namespace hopfop
