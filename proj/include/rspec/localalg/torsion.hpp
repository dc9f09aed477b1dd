#pragma once

#include "rspec/spectrum/support.hpp"

namespace rspec {

/// 0 -> X -> M -> Y -> 0 with X = Gamma_S(M) and Y = M / X.
struct TorsionDecomposition {
  Submodule x;
  Quotient y;
  SpecSet s;
  /// Stabilization exponent of the colon chain (0 when no chain was run).
  unsigned exponent = 0;
};

/// Gamma_S(M) as a submodule: the J-torsion for J the defining ideal of S.
TorsionSubmodule torsion_part(const ModulePresentation& m, const SpecSet& s);

/// Computes and verifies the decomposition (exactness, Gamma_S(Y) = 0,
/// Supp(X) in S). Throws Error if a check fails.
TorsionDecomposition torsion_decompose(const ModulePresentation& m, const SpecSet& s);

/// Supp(M) subset S.
bool torsion_class_member(const ModulePresentation& m, const SpecSet& s);
/// Ass(M) disjoint from S, decided as Gamma_S(M) = 0.
bool torsion_free_member(const ModulePresentation& m, const SpecSet& s);

/// Hom(X, Y) = 0.
bool hom_orthogonality_check(const ModulePresentation& x, const ModulePresentation& y);

}  // namespace rspec
