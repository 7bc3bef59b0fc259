#include "hopfop/operads/registry.hpp"

#include <stdexcept>

#include "hopfop/operads/classic.hpp"
#include "hopfop/operads/graph_operads.hpp"
#include "hopfop/operads/lie.hpp"
#include "hopfop/operads/tm.hpp"

namespace hopfop {

OperadPtr make_operad(const std::string& name, const OperadOptions& o) {
  if (name == "com") return std::make_shared<ComOperad>(o.max_arity);
  if (name == "ass") return std::make_shared<AssOperad>(o.max_arity);
  if (name == "lie") return std::make_shared<LieOperad>(o.max_arity);
  if (name == "tm") return std::make_shared<TmOperad>(o.max_arity);
  if (name == "gamma") return std::make_shared<GraphOperad>(GraphVariant::Gamma, false, o.max_valence, o.max_arity);
  if (name == "gamma-tilde")
    return std::make_shared<GraphOperad>(GraphVariant::GammaTilde, false, o.max_valence, o.max_arity);
  if (name == "gamma-1pi") return std::make_shared<GraphOperad>(GraphVariant::Gamma, true, 3, o.max_arity);
  throw std::invalid_argument("unknown operad '" + name + "'");
}

std::vector<std::string> operad_names() {
  return {"com", "ass", "lie", "tm", "gamma", "gamma-tilde", "gamma-1pi"};
}

}  // namespace hopfop
