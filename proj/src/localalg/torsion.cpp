#include "rspec/localalg/torsion.hpp"

#include "rspec/kernel/errors.hpp"

namespace rspec {

TorsionSubmodule torsion_part(const ModulePresentation& m, const SpecSet& s) {
  require_same_ring(*m.ring(), *s.ring());
  Ideal j = s.defining_ideal();
  if (j.is_zero()) {
    std::vector<Column> gens;
    for (std::size_t i = 0; i < m.rank(); ++i) gens.push_back(unit_column(*m.ring(), m.rank(), i));
    return {submodule(m, gens), 0};
  }
  return torsion_submodule(m, j);
}

TorsionDecomposition torsion_decompose(const ModulePresentation& m, const SpecSet& s) {
  TorsionSubmodule t = torsion_part(m, s);
  Quotient y = quotient(m, t.sub.generators());
  Submodule k = kernel(y.projection);
  if (!same_submodule(m, k.generators(), t.sub.generators())) throw Error("torsion decomposition is not exact");
  if (!torsion_part(y.module, s).sub.module.is_zero()) throw Error("torsion-free part has S-torsion");
  if (!torsion_class_member(t.sub.module, s)) throw Error("torsion part has support outside S");
  return {t.sub, y, s, t.exponent};
}

bool torsion_class_member(const ModulePresentation& m, const SpecSet& s) {
  require_same_ring(*m.ring(), *s.ring());
  if (s.empty()) return m.is_zero();
  Ideal ann = m.annihilator();
  Ideal j = s.defining_ideal();
  for (const auto& g : j.canonical_basis()) {
    if (!radical_contains(ann, g)) return false;
  }
  return true;
}

bool torsion_free_member(const ModulePresentation& m, const SpecSet& s) {
  return torsion_part(m, s).sub.module.is_zero();
}

bool hom_orthogonality_check(const ModulePresentation& x, const ModulePresentation& y) {
  return hom_module(x, y).module.is_zero();
}

}  // namespace rspec
