#include "charvar/ideal.hpp"

namespace charvar {

Ideal::Ideal(Variables vars, std::vector<Poly> generators) : vars_(std::move(vars)) {
  for (auto& g : generators) {
    if (!(g.variables() == vars_))
      throw InputError("generator over [" + join(g.variables()) + "] in an ideal over [" +
                       join(vars_) + "]");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::embed(const Variables& target) const {
  std::vector<Poly> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(charvar::embed(g, target));
  return Ideal(target, std::move(gens));
}

}  // namespace charvar
