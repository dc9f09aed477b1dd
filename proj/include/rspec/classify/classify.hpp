#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rspec/localalg/bass.hpp"
#include "rspec/localalg/torsion.hpp"

namespace rspec {

/// Supp(M) subset S.
bool serre_member(const ModulePresentation& m, const SpecSet& s);

/// The closure of all associated primes of the family members.
SpecSet supp_of_family(const RingPtr& ring, const std::vector<ModulePresentation>& ms);

/// The generator used by resolving classes: R itself, or a module G with
/// an epimorphism G^k -> R.
class Generator {
 public:
  static Generator ring(const RingPtr& r);
  /// `epi` must map a direct sum of copies of `g` onto R; throws
  /// InvalidArgument otherwise.
  static Generator with_epimorphism(const ModulePresentation& g, const ModuleMap& epi);

  const ModulePresentation& module() const { return g_; }
  bool is_ring() const { return is_ring_; }

 private:
  Generator(ModulePresentation g, bool is_ring) : g_(std::move(g)), is_ring_(is_ring) {}
  ModulePresentation g_;
  bool is_ring_;
};

/// M in the class of modules with no associated prime in S.
bool one_resolving_member(const ModulePresentation& m, const SpecSet& s);
/// S meets no associated prime of G.
bool one_resolving_valid(const SpecSet& s, const Generator& g);

enum class Completeness { Proved, Sampled };
const char* completeness_name(Completeness c);

/// Y_1 ⊇ ... ⊇ Y_n with a generator.
class GSequence {
 public:
  /// Throws InvalidArgument unless the sets decrease and share the ring.
  GSequence(std::vector<SpecSet> ys, Generator g);

  std::size_t length() const { return ys_.size(); }
  /// 1-based.
  const SpecSet& y(std::size_t i) const { return ys_.at(i - 1); }
  const std::vector<SpecSet>& sets() const { return ys_; }
  const Generator& generator() const { return g_; }
  const RingPtr& ring() const { return g_.module().ring(); }

 private:
  std::vector<SpecSet> ys_;
  Generator g_;
};

/// One clause: Ass of the (index-1)-th cosyzygy misses Y_index.
struct ClauseCheck {
  std::size_t index = 0;
  bool holds = true;
  Completeness completeness = Completeness::Proved;
  /// Primes on which the clause was evaluated.
  std::vector<PrimeIdeal> checked;
  /// A point of Y_index associated to the cosyzygy, when one was found.
  std::optional<PrimeIdeal> witness;
};

struct ClauseReport {
  bool holds = true;
  Completeness completeness = Completeness::Proved;
  std::vector<ClauseCheck> clauses;
  std::string note;
};

/// Checks Ass(cosyzygy_{i-1}(G)) ∩ Y_i = ∅ for all i.
ClauseReport g_sequence_validate(const GSequence& y, const std::vector<PrimeIdeal>& samples = {});

/// M in C(Y): Ass(cosyzygy_{i-1}(M)) ∩ Y_i = ∅ for all i.
ClauseReport c_tilde_member(const ModulePresentation& m, const GSequence& y,
                            const std::vector<PrimeIdeal>& samples = {});

/// (Y_j, ..., Y_n), 1 <= j <= n. Revalidates when the input is valid and
/// throws Error if validity is lost.
GSequence c_tilde_truncate(const GSequence& y, std::size_t j);

/// An arbitrary set of primes: a finite list or every prime of an
/// Artinian ring.
class PointSet {
 public:
  static PointSet finite(const RingPtr& r, std::vector<PrimeIdeal> points);
  /// Throws InvalidArgument unless R is Artinian.
  static PointSet all(const RingPtr& r);

  const RingPtr& ring() const { return ring_; }
  bool is_all() const { return all_; }
  const std::vector<PrimeIdeal>& points() const { return points_; }
  bool contains(const PrimeIdeal& p) const;
  bool operator==(const PointSet& o) const;
  std::string to_string() const;

 private:
  PointSet(RingPtr r, std::vector<PrimeIdeal> ps, bool all) : ring_(std::move(r)), points_(std::move(ps)), all_(all) {}
  RingPtr ring_;
  std::vector<PrimeIdeal> points_;
  bool all_;
};

/// Ass(M) subset S.
bool psi_member(const ModulePresentation& m, const PointSet& s);
/// Union of Ass over the family.
PointSet phi_of_family(const RingPtr& ring, const std::vector<ModulePresentation>& ms);

}  // namespace rspec
