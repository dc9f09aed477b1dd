#pragma once

#include <string>
#include <vector>

#include "rspec/finiverse/universe.hpp"

namespace rspec {

struct ClosureFlags {
  bool sub = false, quot = false, ext = false, coker = false, sum = false, ess = false;

  static ClosureFlags serre() { return {true, true, true, false, false, false}; }
  static ClosureFlags narrow() { return {false, false, true, true, false, false}; }
  static ClosureFlags torsion() { return {true, true, true, false, true, false}; }
  static ClosureFlags dr() { return {true, false, false, false, true, true}; }
  std::string to_string() const;
};

/// A set of universe classes, always containing 0.
struct ClosedFamily {
  std::vector<char> members;
  ClosureFlags flags;

  std::size_t count() const;
  bool contains(std::size_t i) const { return members[i] != 0; }
  std::vector<std::size_t> indices() const;
  bool operator==(const ClosedFamily& o) const { return members == o.members; }
};

/// Least family containing the seed and 0 stable under the flagged
/// operations, where results larger than the bound are dropped.
ClosedFamily close_family(const FiniteUniverse& u, const std::vector<std::size_t>& seed, ClosureFlags flags);
bool is_closed(const FiniteUniverse& u, const std::vector<char>& members, ClosureFlags flags);

/// Points of the spectrum where a class is nonzero (= Supp = Ass here).
std::vector<std::size_t> class_points(const ModuleClass& c);

enum class Theorem { SerreSupport, AShah, TorsionPairs, EssentialClosed };
const char* theorem_name(Theorem t);
/// Accepts p3_9, ashah, p5corr, dr9_4.
Theorem theorem_from_name(const std::string& s);

struct MatchEntry {
  std::vector<std::string> points;
  std::vector<std::string> members;
};

struct BijectionReport {
  Theorem theorem = Theorem::SerreSupport;
  std::string ring;
  unsigned long bound = 0;
  std::size_t universe_size = 0;
  std::string strategy;
  std::size_t families_examined = 0;
  std::size_t lhs = 0;  // subsets of the spectrum
  std::size_t rhs = 0;  // closed families found
  bool bijection = false;
  std::vector<MatchEntry> matching;
  std::vector<std::string> counterexamples;
  // rerun at twice the bound
  unsigned long rerun_bound = 0;
  std::size_t rerun_lhs = 0, rerun_rhs = 0;
  bool rerun_bijection = false;
  bool bound_stable = false;

  bool verified() const { return bijection && counterexamples.empty(); }
};

struct VerifyOptions {
  /// All subsets are tried when |U| is at most this.
  std::size_t subset_universe_limit = 16;
  /// Cap on candidate families; ExplosionGuard beyond.
  std::size_t family_budget = std::size_t{1} << 20;
  bool rerun_double = true;
};

BijectionReport verify_bijection(Theorem t, const RingPtr& ring, unsigned long bound, const VerifyOptions& opts = {});

}  // namespace rspec
