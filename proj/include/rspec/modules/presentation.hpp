#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rspec/kernel/ideal.hpp"
#include "rspec/kernel/linalg.hpp"

namespace rspec {

/// M = R^rank / (column span of the relations).
class ModulePresentation {
 public:
  ModulePresentation(RingPtr ring, std::size_t rank, std::vector<Column> relations);

  static ModulePresentation free(RingPtr ring, std::size_t rank);
  static ModulePresentation zero(RingPtr ring) { return free(std::move(ring), 0); }
  /// R/I.
  static ModulePresentation cyclic(const Ideal& i);
  /// R/(d_1) (+) ... (+) R/(d_k).
  static ModulePresentation diagonal(RingPtr ring, const std::vector<Poly>& ds);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Column>& relations() const { return relations_; }
  Matrix relation_matrix() const { return Matrix(rank_, relations_); }

  /// Prepared column span of the relations (cached).
  const Span& relation_span() const;
  /// True iff v represents 0 in M.
  bool element_is_zero(const Column& v) const;
  bool is_zero() const;
  /// (0 : M), cached.
  const Ideal& annihilator() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag span_once, ann_once;
    std::unique_ptr<Span> span;
    std::optional<Ideal> ann;
  };

  RingPtr ring_;
  std::size_t rank_;
  std::vector<Column> relations_;
  std::shared_ptr<Cache> cache_;
};

/// A homomorphism given by a lift R^{src.rank} -> R^{tgt.rank}; the
/// constructor checks that source relations land in the target relations.
class ModuleMap {
 public:
  ModuleMap(ModulePresentation source, ModulePresentation target, Matrix lift);

  static ModuleMap identity(const ModulePresentation& m);
  static ModuleMap zero(const ModulePresentation& s, const ModulePresentation& t);

  const ModulePresentation& source() const { return source_; }
  const ModulePresentation& target() const { return target_; }
  const Matrix& lift() const { return lift_; }

  Column apply(const Column& v) const;
  bool is_zero() const;

 private:
  ModulePresentation source_;
  ModulePresentation target_;
  Matrix lift_;
};

ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// True when both maps send every generator to the same element.
bool maps_equal(const ModuleMap& f, const ModuleMap& g);

/// A submodule N of M: its own presentation and the inclusion N -> M.
struct Submodule {
  ModulePresentation module;
  ModuleMap inclusion;
  /// The generators of N as elements of M (columns of the inclusion lift).
  const std::vector<Column>& generators() const { return inclusion.lift().cols; }
};

}  // namespace rspec
