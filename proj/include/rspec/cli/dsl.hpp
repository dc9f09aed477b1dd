#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rspec/classify/classify.hpp"
#include "rspec/kernel/errors.hpp"

namespace rspec {

/// Error with a source position and the tokens that were acceptable.
class DslError : public Error {
 public:
  DslError(std::string source, std::size_t line, std::size_t column, std::string expected, std::string found);
  DslError(std::string source, std::size_t line, std::size_t column, std::string message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::string source_;
  std::size_t line_, column_;
  std::string expected_;
};

struct Provenance {
  std::string source;
  std::size_t line = 0, column = 0;
  std::string to_string() const;
};

enum class BindingKind { Ring, Ideal, Prime, Module, Set, Points, GSeq };
const char* binding_kind_name(BindingKind k);

struct Binding {
  std::string name;
  BindingKind kind = BindingKind::Ring;
  Provenance where;
  RingPtr ring;
  std::string ring_name;
  std::optional<Ideal> ideal;
  std::optional<PrimeIdeal> prime;
  std::optional<ModulePresentation> module;
  std::optional<SpecSet> set;
  std::optional<PointSet> points;
  std::optional<GSequence> gseq;
  /// For gseq bindings with a non-ring generator: images of its generators in R.
  std::vector<Poly> generator_images;
  std::string generator_name;
};

class Workspace {
 public:
  /// Throws DslError on a duplicate name.
  void add(Binding b);
  const Binding* find(const std::string& name) const;
  /// Throws Error if absent or of another kind.
  const Binding& get(const std::string& name, BindingKind kind) const;
  const std::vector<Binding>& bindings() const { return bindings_; }
  /// The most recently declared ring, if any.
  const Binding* current_ring() const;

 private:
  std::vector<Binding> bindings_;
  std::map<std::string, std::size_t> index_;
};

Workspace parse_workspace(std::string_view text, const std::string& source = "<input>");
/// Canonical DSL text; parsing it yields the same bindings.
std::string print_workspace(const Workspace& ws);

/// Ring syntax: ZZ, ZZ/n, QQ[x,y], GF(p)[x], optionally followed by / (g1, ...).
RingPtr parse_ring_spec(std::string_view text);

/// Inline expressions used by command flags. Names resolve in `ws`; `ring`
/// is the ring literals are read in.
ModulePresentation parse_module_expr(const Workspace& ws, const RingPtr& ring, std::string_view text);
PrimeIdeal parse_prime_ref(const Workspace& ws, const RingPtr& ring, std::string_view text);
SpecSet parse_set_ref(const Workspace& ws, const RingPtr& ring, std::string_view text);
PointSet parse_points_ref(const Workspace& ws, const RingPtr& ring, std::string_view text);

/// Printing helpers shared with reports.
std::string module_expr_string(const ModulePresentation& m);
std::string prime_literal(const PrimeIdeal& p);
std::string set_literal(const SpecSet& s);
std::string points_literal(const PointSet& s);

}  // namespace rspec
