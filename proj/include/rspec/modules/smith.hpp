#pragma once

#include <vector>

#include "rspec/kernel/linalg.hpp"
#include "rspec/modules/presentation.hpp"

namespace rspec {

/// The Euclidean domain underlying a principal ring: Z for Z and Z/n,
/// k[x] for k[x] and k[x]/(f), k for a field. Throws NotPID otherwise.
RingPtr euclidean_cover(const Ring& ring);

/// Smith normal form U * A' * V = D over the Euclidean cover, where
/// A' = A, or [A | f I] for a quotient ring R = E/(f) (`lifted`).
/// Diagonal entries are nonnegative integers or monic polynomials, each
/// dividing the next; zero entries come last.
struct SmithForm {
  RingPtr euclid;
  bool lifted = false;
  std::vector<Poly> invariant_factors;  // length min(rows, cols of A')
  Matrix U, V, D;
};

SmithForm smith_normal_form(const Ring& ring, const Matrix& a);

/// Determinant over a Euclidean domain (fraction-free elimination).
Poly determinant(const Ring& euclid, const Matrix& a);

/// Structure of a module over a principal ring viewed as a module over
/// its Euclidean cover: the non-unit invariant factors and the free rank.
struct PidInvariants {
  std::vector<Poly> torsion;
  std::size_t free_rank = 0;

  bool operator==(const PidInvariants&) const = default;
};

PidInvariants pid_invariants(const ModulePresentation& m);
bool pid_isomorphic(const ModulePresentation& a, const ModulePresentation& b);
std::string pid_invariants_string(const ModulePresentation& m);

}  // namespace rspec
