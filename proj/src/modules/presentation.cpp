#include "rspec/modules/presentation.hpp"

#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/modules/ops.hpp"

namespace rspec {

ModulePresentation::ModulePresentation(RingPtr ring, std::size_t rank, std::vector<Column> relations)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
  for (auto& c : relations) {
    if (c.size() != rank_) throw InvalidArgument("relation has wrong length");
    for (auto& x : c) x = ring_->reduce(x);
    if (!is_zero_column(c)) relations_.push_back(std::move(c));
  }
}

ModulePresentation ModulePresentation::free(RingPtr ring, std::size_t rank) {
  return ModulePresentation(std::move(ring), rank, {});
}

ModulePresentation ModulePresentation::cyclic(const Ideal& i) {
  std::vector<Column> rels;
  for (const auto& g : i.canonical_basis()) rels.push_back({g});
  return ModulePresentation(i.ring(), 1, std::move(rels));
}

ModulePresentation ModulePresentation::diagonal(RingPtr ring, const std::vector<Poly>& ds) {
  std::vector<Column> rels;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Column c(ds.size());
    c[i] = ds[i];
    rels.push_back(std::move(c));
  }
  return ModulePresentation(std::move(ring), ds.size(), std::move(rels));
}

const Span& ModulePresentation::relation_span() const {
  std::call_once(cache_->span_once, [this] { cache_->span = std::make_unique<Span>(*ring_, relations_, rank_); });
  return *cache_->span;
}

bool ModulePresentation::element_is_zero(const Column& v) const {
  if (v.size() != rank_) throw InvalidArgument("element has wrong length");
  if (is_zero_column(v)) return true;
  return relation_span().contains(v);
}

bool ModulePresentation::is_zero() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (!element_is_zero(unit_column(*ring_, rank_, i))) return false;
  }
  return true;
}

const Ideal& ModulePresentation::annihilator() const {
  std::call_once(cache_->ann_once, [this] {
    std::vector<Ideal> parts;
    for (std::size_t i = 0; i < rank_; ++i) parts.push_back(element_annihilator(*this, unit_column(*ring_, rank_, i)));
    cache_->ann = ideal_intersection(parts, ring_);
  });
  return *cache_->ann;
}

std::string ModulePresentation::to_string() const {
  std::ostringstream os;
  if (relations_.empty()) {
    os << "free " << rank_;
    return os.str();
  }
  os << "coker [";
  for (std::size_t i = 0; i < rank_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < relations_.size(); ++j) {
      os << (j ? ", " : "") << ring_->element_to_string(relations_[j][i]);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

ModuleMap::ModuleMap(ModulePresentation source, ModulePresentation target, Matrix lift)
    : source_(std::move(source)), target_(std::move(target)), lift_(std::move(lift)) {
  require_same_ring(*source_.ring(), *target_.ring());
  if (lift_.rows != target_.rank() || lift_.ncols() != source_.rank())
    throw InvalidArgument("map matrix has wrong shape");
  for (auto& c : lift_.cols) {
    for (auto& x : c) x = source_.ring()->reduce(x);
  }
  for (const auto& r : source_.relations()) {
    if (!target_.element_is_zero(mat_vec(*source_.ring(), lift_, r)))
      throw IllDefinedMap("a source relation does not map to zero");
  }
}

ModuleMap ModuleMap::identity(const ModulePresentation& m) {
  return ModuleMap(m, m, Matrix::identity(*m.ring(), m.rank()));
}

ModuleMap ModuleMap::zero(const ModulePresentation& s, const ModulePresentation& t) {
  return ModuleMap(s, t, Matrix::zero(t.rank(), s.rank()));
}

Column ModuleMap::apply(const Column& v) const { return mat_vec(*source_.ring(), lift_, v); }

bool ModuleMap::is_zero() const {
  for (const auto& c : lift_.cols) {
    if (!target_.element_is_zero(c)) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (g.source().rank() != f.target().rank()) throw InvalidArgument("maps are not composable");
  return ModuleMap(f.source(), g.target(), mat_mul(*f.source().ring(), g.lift(), f.lift()));
}

bool maps_equal(const ModuleMap& f, const ModuleMap& g) {
  if (f.lift().ncols() != g.lift().ncols() || f.lift().rows != g.lift().rows) return false;
  const Ring& r = *f.source().ring();
  for (std::size_t j = 0; j < f.lift().ncols(); ++j) {
    Column d(f.lift().rows);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = r.sub(f.lift().at(i, j), g.lift().at(i, j));
    if (!f.target().element_is_zero(d)) return false;
  }
  return true;
}

}  // namespace rspec
