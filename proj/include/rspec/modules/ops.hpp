#pragma once

#include <optional>
#include <vector>

#include "rspec/modules/presentation.hpp"

namespace rspec {

/// Inverse of a unit of R, if `a` is one that the engine recognizes
/// (+-1 over Z, residues prime to n over Z/n, nonzero constants over a field).
std::optional<Poly> unit_inverse(const Ring& ring, const Poly& a);

Column scale_column(const Ring& ring, const Poly& c, const Column& v);
Column add_columns(const Ring& ring, const Column& a, const Column& b);

/// Generators of {v in R^p : phi v in span(target_relations)}.
std::vector<Column> preimage(const Ring& ring, const Matrix& phi, const std::vector<Column>& target_relations);

/// (span(gens) + span(den)) / span(den) inside R^rank, presented on `gens`.
ModulePresentation subquotient(const RingPtr& ring, std::size_t rank, const std::vector<Column>& gens,
                               const std::vector<Column>& den);

Submodule submodule(const ModulePresentation& m, const std::vector<Column>& gens);

struct Quotient {
  ModulePresentation module;
  ModuleMap projection;
};

Quotient quotient(const ModulePresentation& m, const std::vector<Column>& gens);

/// N subset N' as submodules of M, both given by generators.
bool submodule_contains(const ModulePresentation& m, const std::vector<Column>& big,
                        const std::vector<Column>& small);
bool same_submodule(const ModulePresentation& m, const std::vector<Column>& a, const std::vector<Column>& b);

Submodule kernel(const ModuleMap& f);
Quotient cokernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);

struct DirectSum {
  ModulePresentation module;
  ModuleMap inc1, inc2, proj1, proj2;
};

DirectSum direct_sum_maps(const ModulePresentation& a, const ModulePresentation& b);
ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b);
ModulePresentation direct_sum(const std::vector<ModulePresentation>& ms, const RingPtr& ring);

/// Removes generators made redundant by relations with a unit entry.
/// Returns the smaller presentation with mutually inverse isomorphisms.
struct Pruned {
  ModulePresentation module;
  ModuleMap to;    // original -> pruned
  ModuleMap from;  // pruned -> original
};

Pruned prune(const ModulePresentation& m);
Submodule prune(const Submodule& s);

/// (0 : v) for an element v of M.
Ideal element_annihilator(const ModulePresentation& m, const Column& v);

/// Hom_R(M, N) together with a decoding of its elements into module maps.
struct HomModule {
  ModulePresentation module;
  ModulePresentation source, target;
  /// For each generator of `module`, the matrix of the corresponding map
  /// M -> N stacked column by column into R^{N.rank * M.rank}.
  std::vector<Column> vec_generators;

  ModuleMap decode(const Column& element) const;
  ModuleMap generator_map(std::size_t i) const;
};

HomModule hom_module(const ModulePresentation& m, const ModulePresentation& n);

/// F_k -> ... -> F_1 -> F_0 -> M -> 0; differentials[i] is the matrix of
/// F_{i+1} -> F_i. Stops early when a syzygy module vanishes.
struct FreeResolution {
  std::size_t rank0 = 0;
  std::vector<Matrix> differentials;
  std::vector<std::size_t> ranks() const;
};

FreeResolution free_resolution(const ModulePresentation& m, std::size_t length);

ModulePresentation ext_module(std::size_t k, const ModulePresentation& m, const ModulePresentation& n);

/// Generators of (N :_M J) = {v in M : J v subset N}.
std::vector<Column> submodule_colon(const ModulePresentation& m, const std::vector<Column>& n, const Ideal& j);

struct TorsionSubmodule {
  Submodule sub;
  /// Smallest e with (0 :_M J^e) = (0 :_M J^(e+1)).
  unsigned exponent;
};

/// Gamma_J(M) as the stabilizing chain of colon submodules. J must be
/// nonzero.
TorsionSubmodule torsion_submodule(const ModulePresentation& m, const Ideal& j, unsigned cap = 64);

}  // namespace rspec
