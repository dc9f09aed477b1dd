#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rspec/modules/presentation.hpp"
#include "rspec/spectrum/prime.hpp"

namespace rspec {

/// Exponents of the cyclic factors R/m^e at one maximal ideal, descending.
using Partition = std::vector<unsigned>;

/// A point of the finite spectrum of Z/n or F_p[x]/(f).
struct SpecPoint {
  PrimeIdeal prime;
  /// A uniformizer: p over Z/n, the irreducible factor g over F_p[x]/(f).
  Poly pi;
  /// Coefficients of pi, lowest degree first (just {p} over Z/n).
  std::vector<long> pi_coeffs;
  unsigned max_exponent = 0;
  unsigned long residue_size = 0;
};

/// Isomorphism class of a finite module: one partition per spectrum point.
struct ModuleClass {
  std::vector<Partition> parts;
  bool operator==(const ModuleClass&) const = default;
  bool operator<(const ModuleClass& o) const { return parts < o.parts; }
};

/// The rings supported by the brute-force layer: Z/n (n >= 2) and
/// F_p[x]/(f) with f nonconstant.
struct ArtinianRing {
  RingPtr ring;
  bool polynomial = false;
  long characteristic = 0;
  std::vector<SpecPoint> spectrum;

  /// Throws UnsupportedRing for anything else.
  static ArtinianRing analyze(const RingPtr& r);
};

/// A finite module given by its element set, for raw searches. Elements
/// are indexed 0..size()-1 with 0 the zero element.
class ExplicitModule {
 public:
  ExplicitModule(const ArtinianRing& ring, const ModuleClass& c);

  std::size_t size() const { return size_; }
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(long k, std::size_t a) const;
  /// Multiplication by the variable (polynomial rings only).
  std::size_t mul_x(std::size_t a) const;
  /// Multiplication by pi_i^j.
  std::size_t pi_power(std::size_t point, unsigned j, std::size_t a) const;
  /// The submodule generated by the elements, as a membership vector.
  std::vector<char> span(const std::vector<std::size_t>& gens) const;

 private:
  struct Component {
    std::size_t point;
    unsigned exponent;
    std::size_t offset;
    std::size_t digits;
    long modulus;
    std::vector<long> relation;  // low coefficients of the monic pi^e (polynomial case)
  };
  std::vector<long> decode(std::size_t i) const;
  std::size_t encode(const std::vector<long>& d) const;
  std::vector<long> act_poly(const std::vector<long>& coeffs, const std::vector<long>& d) const;
  std::vector<long> mul_x_digits(const std::vector<long>& d) const;

  const ArtinianRing* ring_;
  std::vector<Component> comps_;
  std::vector<long> radix_;
  std::size_t size_ = 1;
};

/// Raw class of a submodule (mask over elements) and of the quotient by it.
ModuleClass raw_class_of_sub(const ArtinianRing& r, const ExplicitModule& m, const std::vector<char>& sub);
ModuleClass raw_class_of_quotient(const ArtinianRing& r, const ExplicitModule& m, const std::vector<char>& sub);
/// All submodules of a module with at most 64 elements, as bit masks.
std::vector<std::uint64_t> raw_submodules(const ExplicitModule& m);
bool raw_is_essential(const ExplicitModule& m, std::uint64_t sub);

/// Littlewood-Richardson coefficient c^lambda_{mu nu}.
unsigned long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
bool partition_contains(const Partition& big, const Partition& small);

/// Class-level relations over Artinian principal rings.
bool class_is_sub(const ModuleClass& sub, const ModuleClass& m);
bool class_extension(const ModuleClass& a, const ModuleClass& c, const ModuleClass& e);
bool class_essential(const ModuleClass& n, const ModuleClass& m);
bool class_cokernel(const ModuleClass& a, const ModuleClass& b, const ModuleClass& c);
bool class_subquotient(const ModuleClass& p, const ModuleClass& m);
ModuleClass class_sum(const ModuleClass& a, const ModuleClass& b);

/// Outcome of comparing the class-level relations with raw searches.
struct GateReport {
  std::size_t classes = 0;
  std::size_t comparisons = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Raw versus class-level comparison on every class of size <= bound
/// (bound <= 32 keeps every searched module at most 64 elements).
GateReport compare_fast_paths(const ArtinianRing& r, unsigned long bound = 32);

/// All isomorphism classes of modules of cardinality <= bound.
class FiniteUniverse {
 public:
  const ArtinianRing& ring() const { return ring_; }
  unsigned long bound() const { return bound_; }
  std::size_t size() const { return classes_.size(); }
  const ModuleClass& cls(std::size_t i) const { return classes_[i]; }
  const std::vector<ModuleClass>& classes() const { return classes_; }
  std::optional<std::size_t> index_of(const ModuleClass& c) const;
  unsigned long cardinality(std::size_t i) const;
  std::string name(std::size_t i) const;
  std::string name(const ModuleClass& c) const;
  ModulePresentation presentation(std::size_t i) const;
  ExplicitModule explicit_module(std::size_t i) const { return ExplicitModule(ring_, classes_[i]); }

  /// Class-level relation tables over the universe.
  const std::vector<std::size_t>& subs(std::size_t i) const { return tables().subs[i]; }
  const std::vector<std::size_t>& essential_over(std::size_t i) const { return tables().ess[i]; }
  const std::vector<std::size_t>& extensions(std::size_t a, std::size_t c) const { return tables().ext[a * size() + c]; }
  const std::vector<std::size_t>& cokernels(std::size_t a, std::size_t b) const { return tables().coker[a * size() + b]; }
  std::optional<std::size_t> sum(std::size_t a, std::size_t b) const { return tables().sum[a * size() + b]; }

  friend FiniteUniverse enumerate_universe(const RingPtr& ring, unsigned long bound);

 private:
  struct Tables {
    std::vector<std::vector<std::size_t>> subs, ess, ext, coker;
    std::vector<std::optional<std::size_t>> sum;
  };
  const Tables& tables() const;
  unsigned long size_of(const ModuleClass& c) const;

  ArtinianRing ring_;
  unsigned long bound_ = 0;
  std::vector<ModuleClass> classes_;
  mutable std::shared_ptr<Tables> tables_;
  std::shared_ptr<std::once_flag> once_;
};

/// Enumerates the universe. The first use for a ring runs
/// compare_fast_paths and throws Error if the class-level relations
/// disagree with raw search.
FiniteUniverse enumerate_universe(const RingPtr& ring, unsigned long bound);

/// P < M and P ~ M on universe classes.
bool brute_subquotient(const FiniteUniverse& u, std::size_t p, std::size_t m);
bool brute_equiv(const FiniteUniverse& u, std::size_t p, std::size_t m);

/// Raw subquotient search: P is a subquotient of M^k with k the number of
/// cyclic factors of P. Only for |M|^k <= 64.
std::optional<bool> raw_subquotient(const ArtinianRing& r, const ModuleClass& p, const ModuleClass& m);

}  // namespace rspec
