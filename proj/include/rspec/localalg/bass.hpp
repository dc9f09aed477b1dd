#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rspec/spectrum/support.hpp"

namespace rspec {

/// 0 -> M' -f-> M -g-> M'' -> 0, checked on construction.
class ShortExactSequence {
 public:
  /// Throws InvalidArgument unless f is injective, g surjective and
  /// im f = ker g.
  ShortExactSequence(ModuleMap f, ModuleMap g);

  const ModuleMap& f() const { return f_; }
  const ModuleMap& g() const { return g_; }
  const ModulePresentation& left() const { return f_.source(); }
  const ModulePresentation& middle() const { return f_.target(); }
  const ModulePresentation& right() const { return g_.target(); }

 private:
  ModuleMap f_;
  ModuleMap g_;
};

/// Ext^k(R/p, M) is nonzero at p, i.e. mu_k(p, M) != 0.
bool bass_nonvanishing(const PrimeIdeal& p, std::size_t k, const ModulePresentation& m);

/// mu_k(p, M): the rank of Ext^k(R/p, M) over the domain R/p.
std::size_t bass_dimension(const PrimeIdeal& p, std::size_t k, const ModulePresentation& m);

/// p in Ass of the k-th cosyzygy of M (same test as bass_nonvanishing).
bool cosyzygy_ass_membership(const PrimeIdeal& p, std::size_t k, const ModulePresentation& m);

/// Rank of a matrix over the fraction field of R/p (fraction-free elimination).
std::size_t rank_mod_prime(const PrimeIdeal& p, const Matrix& a);

struct BassEntry {
  bool nonvanishing = false;
  std::optional<std::size_t> dimension;
};

/// Bass data of M over a finite list of candidate primes, degrees 0..k.
class BassTable {
 public:
  BassTable(ModulePresentation m, std::vector<PrimeIdeal> candidates, std::size_t degrees,
            std::map<std::pair<std::size_t, std::size_t>, BassEntry> entries)
      : m_(std::move(m)), cands_(std::move(candidates)), degrees_(degrees), entries_(std::move(entries)) {}

  const ModulePresentation& module() const { return m_; }
  const std::vector<PrimeIdeal>& candidates() const { return cands_; }
  /// Number of degrees covered (0..degrees-1).
  std::size_t degrees() const { return degrees_; }
  const BassEntry& entry(std::size_t prime_index, std::size_t k) const { return entries_.at({prime_index, k}); }

  /// E_k as a formal sum like "E(R/(2))^1 + E(R/(3))^1"; "0" when empty.
  std::string injective_term(std::size_t k) const;

 private:
  ModulePresentation m_;
  std::vector<PrimeIdeal> cands_;
  std::size_t degrees_;
  std::map<std::pair<std::size_t, std::size_t>, BassEntry> entries_;
};

/// Candidate primes derivable without user input: over principal and
/// Artinian rings the primes dividing the invariant factors plus (0) when
/// R is a domain. Throws NeedCandidates elsewhere.
std::vector<PrimeIdeal> bass_candidates(const ModulePresentation& m);

/// Degrees 0..up_to. Dimensions are filled wherever the rank is computable.
BassTable symbolic_injective_resolution(const ModulePresentation& m, std::size_t up_to,
                                        const std::optional<std::vector<PrimeIdeal>>& candidates = std::nullopt);

/// The three Ass containments for cosyzygies of a short exact sequence,
/// checked per candidate prime at degree k.
bool cor710_check(const ShortExactSequence& ses, std::size_t k, const std::vector<PrimeIdeal>& candidates);

}  // namespace rspec
