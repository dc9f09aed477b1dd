#include "rspec/modules/ops.hpp"

#include "rspec/kernel/errors.hpp"

namespace rspec {

std::optional<Poly> unit_inverse(const Ring& ring, const Poly& a) {
  if (a.is_zero()) return std::nullopt;
  if (ring.engine() == Engine::Integer) {
    mpz_class v = ring.to_int(a);
    const mpz_class& n = ring.int_modulus();
    if (n == 0) {
      if (v == 1 || v == -1) return a;
      return std::nullopt;
    }
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t()) == 0) return std::nullopt;
    return ring.from_int(inv);
  }
  if (!a.is_constant()) return std::nullopt;
  return ring.reduce(ring.arith().constant(ring.arith().coeffs().inverse(a.lead().coef)));
}

Column scale_column(const Ring& ring, const Poly& c, const Column& v) {
  Column r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = ring.mul(c, v[i]);
  return r;
}

Column add_columns(const Ring& ring, const Column& a, const Column& b) {
  Column r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ring.add(a[i], b[i]);
  return r;
}

std::vector<Column> preimage(const Ring& ring, const Matrix& phi, const std::vector<Column>& target_relations) {
  const std::size_t p = phi.ncols();
  std::vector<Column> out;
  if (p == 0) return out;
  std::vector<Column> gens = phi.cols;
  gens.insert(gens.end(), target_relations.begin(), target_relations.end());
  for (const auto& s : syzygies(ring, gens, phi.rows)) {
    Column c(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(p));
    if (!is_zero_column(c)) out.push_back(std::move(c));
  }
  return out;
}

ModulePresentation subquotient(const RingPtr& ring, std::size_t rank, const std::vector<Column>& gens,
                               const std::vector<Column>& den) {
  return ModulePresentation(ring, gens.size(), preimage(*ring, Matrix(rank, gens), den));
}

Submodule submodule(const ModulePresentation& m, const std::vector<Column>& gens) {
  ModulePresentation sub = subquotient(m.ring(), m.rank(), gens, m.relations());
  return {sub, ModuleMap(sub, m, Matrix(m.rank(), gens))};
}

Quotient quotient(const ModulePresentation& m, const std::vector<Column>& gens) {
  std::vector<Column> rels = m.relations();
  rels.insert(rels.end(), gens.begin(), gens.end());
  ModulePresentation q(m.ring(), m.rank(), std::move(rels));
  return {q, ModuleMap(m, q, Matrix::identity(*m.ring(), m.rank()))};
}

bool submodule_contains(const ModulePresentation& m, const std::vector<Column>& big,
                        const std::vector<Column>& small) {
  std::vector<Column> gens = big;
  gens.insert(gens.end(), m.relations().begin(), m.relations().end());
  Span s(*m.ring(), gens, m.rank());
  return s.contains_all(small);
}

bool same_submodule(const ModulePresentation& m, const std::vector<Column>& a, const std::vector<Column>& b) {
  return submodule_contains(m, a, b) && submodule_contains(m, b, a);
}

Submodule kernel(const ModuleMap& f) {
  return prune(submodule(f.source(), preimage(*f.source().ring(), f.lift(), f.target().relations())));
}

Quotient cokernel(const ModuleMap& f) { return quotient(f.target(), f.lift().cols); }

Submodule image(const ModuleMap& f) { return prune(submodule(f.target(), f.lift().cols)); }

DirectSum direct_sum_maps(const ModulePresentation& a, const ModulePresentation& b) {
  require_same_ring(*a.ring(), *b.ring());
  const RingPtr& ring = a.ring();
  const std::size_t n = a.rank(), m = b.rank();
  std::vector<Column> rels;
  for (const auto& r : a.relations()) {
    Column c(n + m);
    std::copy(r.begin(), r.end(), c.begin());
    rels.push_back(std::move(c));
  }
  for (const auto& r : b.relations()) {
    Column c(n + m);
    std::copy(r.begin(), r.end(), c.begin() + static_cast<std::ptrdiff_t>(n));
    rels.push_back(std::move(c));
  }
  ModulePresentation s(ring, n + m, std::move(rels));
  Matrix i1 = Matrix::zero(n + m, n), i2 = Matrix::zero(n + m, m);
  Matrix p1 = Matrix::zero(n, n + m), p2 = Matrix::zero(m, n + m);
  for (std::size_t i = 0; i < n; ++i) i1.at(i, i) = p1.at(i, i) = ring->one();
  for (std::size_t i = 0; i < m; ++i) i2.at(n + i, i) = p2.at(i, n + i) = ring->one();
  return {s, ModuleMap(a, s, i1), ModuleMap(b, s, i2), ModuleMap(s, a, p1), ModuleMap(s, b, p2)};
}

ModulePresentation direct_sum(const ModulePresentation& a, const ModulePresentation& b) {
  return direct_sum_maps(a, b).module;
}

ModulePresentation direct_sum(const std::vector<ModulePresentation>& ms, const RingPtr& ring) {
  ModulePresentation r = ModulePresentation::zero(ring);
  for (const auto& m : ms) r = direct_sum(r, m);
  return r;
}

Pruned prune(const ModulePresentation& m) {
  const Ring& ring = *m.ring();
  const std::size_t n = m.rank();
  std::vector<Column> rels = m.relations();
  std::vector<Column> expr;  // old generator j in terms of surviving ones
  for (std::size_t j = 0; j < n; ++j) expr.push_back(unit_column(ring, n, j));
  std::vector<bool> alive(n, true);
  for (;;) {
    std::size_t ri = rels.size(), pivot = n;
    Poly inv;
    for (std::size_t r = 0; r < rels.size() && ri == rels.size(); ++r) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        if (auto u = unit_inverse(ring, rels[r][i])) {
          ri = r;
          pivot = i;
          inv = *u;
          break;
        }
      }
    }
    if (ri == rels.size()) break;
    Column piv = rels[ri];
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(ri));
    // e_pivot = -inv * sum_{k != pivot} piv_k e_k
    auto eliminate = [&](Column& c) {
      if (c[pivot].is_zero()) return;
      Poly f = ring.mul(c[pivot], inv);
      for (std::size_t k = 0; k < n; ++k) c[k] = ring.sub(c[k], ring.mul(f, piv[k]));
    };
    for (auto& c : rels) eliminate(c);
    for (auto& c : expr) eliminate(c);
    alive[pivot] = false;
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    if (alive[i]) keep.push_back(i);
  }
  auto restrict = [&](const Column& c) {
    Column r;
    for (std::size_t i : keep) r.push_back(c[i]);
    return r;
  };
  std::vector<Column> new_rels;
  for (const auto& c : rels) new_rels.push_back(restrict(c));
  ModulePresentation p(m.ring(), keep.size(), std::move(new_rels));
  Matrix to(keep.size(), {});
  for (const auto& c : expr) to.cols.push_back(restrict(c));
  Matrix from = Matrix::zero(n, keep.size());
  for (std::size_t t = 0; t < keep.size(); ++t) from.at(keep[t], t) = ring.one();
  return {p, ModuleMap(m, p, to), ModuleMap(p, m, from)};
}

Submodule prune(const Submodule& s) {
  Pruned p = prune(s.module);
  return {p.module, compose(s.inclusion, p.from)};
}

Ideal element_annihilator(const ModulePresentation& m, const Column& v) {
  if (is_zero_column(v)) return Ideal::unit(m.ring());
  const Ring& ring = *m.ring();
  std::vector<Column> gens = {v};
  gens.insert(gens.end(), m.relations().begin(), m.relations().end());
  std::vector<Poly> out;
  for (const auto& s : syzygies(ring, gens, m.rank())) {
    if (!s[0].is_zero()) out.push_back(s[0]);
  }
  return Ideal(m.ring(), std::move(out));
}

namespace {

// Block diagonal copies of the relations of N, `copies` times.
std::vector<Column> repeated_relations(const ModulePresentation& n, std::size_t copies) {
  std::vector<Column> out;
  const std::size_t r = n.rank();
  for (std::size_t c = 0; c < copies; ++c) {
    for (const auto& rel : n.relations()) {
      Column col(r * copies);
      std::copy(rel.begin(), rel.end(), col.begin() + static_cast<std::ptrdiff_t>(c * r));
      out.push_back(std::move(col));
    }
  }
  return out;
}

// Matrix of X |-> X d on vec(X), X an (n x rows(d)) matrix.
Matrix right_mult(const Ring& ring, const Matrix& d, std::size_t n) { return kron_identity(ring, transpose(d), n); }

}  // namespace

ModuleMap HomModule::decode(const Column& element) const {
  const Ring& ring = *source.ring();
  const std::size_t n = target.rank(), m = source.rank();
  Column vec(n * m);
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (element[i].is_zero()) continue;
    vec = add_columns(ring, vec, scale_column(ring, element[i], vec_generators[i]));
  }
  Matrix x = Matrix::zero(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < n; ++k) x.at(k, j) = vec[j * n + k];
  }
  return ModuleMap(source, target, x);
}

ModuleMap HomModule::generator_map(std::size_t i) const {
  return decode(unit_column(*source.ring(), vec_generators.size(), i));
}

HomModule hom_module(const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(*m.ring(), *n.ring());
  const RingPtr& ring = m.ring();
  const std::size_t nr = n.rank(), mr = m.rank();
  Matrix phi = right_mult(*ring, m.relation_matrix(), nr);
  std::vector<Column> k = preimage(*ring, phi, repeated_relations(n, m.relations().size()));
  if (mr * nr > 0 && phi.rows == 0) {
    k.clear();
    for (std::size_t i = 0; i < mr * nr; ++i) k.push_back(unit_column(*ring, mr * nr, i));
  }
  ModulePresentation raw = subquotient(ring, mr * nr, k, repeated_relations(n, mr));
  Pruned p = prune(raw);
  std::vector<Column> vg;
  Matrix kmat(mr * nr, k);
  for (const auto& c : p.from.lift().cols) vg.push_back(mat_vec(*ring, kmat, c));
  return {p.module, m, n, std::move(vg)};
}

std::vector<std::size_t> FreeResolution::ranks() const {
  std::vector<std::size_t> r = {rank0};
  for (const auto& d : differentials) r.push_back(d.ncols());
  return r;
}

FreeResolution free_resolution(const ModulePresentation& m, std::size_t length) {
  const Ring& ring = *m.ring();
  FreeResolution res;
  res.rank0 = m.rank();
  if (length == 0) return res;
  Matrix d = drop_zero_columns(m.relation_matrix());
  if (d.ncols() == 0) return res;
  res.differentials.push_back(d);
  while (res.differentials.size() < length) {
    const Matrix& prev = res.differentials.back();
    Matrix next(prev.ncols(), syzygies(ring, prev.cols, prev.rows));
    next = drop_zero_columns(next);
    if (next.ncols() == 0) break;
    Matrix comp = mat_mul(ring, prev, next);
    for (const auto& c : comp.cols) {
      if (!is_zero_column(c)) throw Error("free resolution: composite of differentials is nonzero");
    }
    res.differentials.push_back(std::move(next));
  }
  return res;
}

ModulePresentation ext_module(std::size_t k, const ModulePresentation& m, const ModulePresentation& n) {
  require_same_ring(*m.ring(), *n.ring());
  const RingPtr& ring = m.ring();
  const std::size_t nr = n.rank();
  FreeResolution res = free_resolution(m, k + 1);
  std::vector<std::size_t> ranks = res.ranks();
  auto rank_at = [&](std::size_t i) { return i < ranks.size() ? ranks[i] : std::size_t{0}; };
  const std::size_t rk = rank_at(k);
  if (rk == 0 || nr == 0) return ModulePresentation::zero(ring);
  std::vector<Column> z;
  if (rank_at(k + 1) == 0) {
    for (std::size_t i = 0; i < rk * nr; ++i) z.push_back(unit_column(*ring, rk * nr, i));
  } else {
    Matrix delta = right_mult(*ring, res.differentials[k], nr);
    z = preimage(*ring, delta, repeated_relations(n, rank_at(k + 1)));
  }
  std::vector<Column> den = repeated_relations(n, rk);
  if (k >= 1) {
    Matrix prev = right_mult(*ring, res.differentials[k - 1], nr);
    den.insert(den.end(), prev.cols.begin(), prev.cols.end());
  }
  return prune(subquotient(ring, rk * nr, z, den)).module;
}

std::vector<Column> submodule_colon(const ModulePresentation& m, const std::vector<Column>& n, const Ideal& j) {
  const Ring& ring = *m.ring();
  const std::size_t r = m.rank();
  const auto& gs = j.canonical_basis();
  if (gs.empty() || r == 0) {
    std::vector<Column> all;
    for (std::size_t i = 0; i < r; ++i) all.push_back(unit_column(ring, r, i));
    return all;
  }
  const std::size_t s = gs.size();
  Matrix phi = Matrix::zero(r * s, r);
  for (std::size_t t = 0; t < s; ++t) {
    for (std::size_t i = 0; i < r; ++i) phi.at(t * r + i, i) = gs[t];
  }
  std::vector<Column> base = n;
  base.insert(base.end(), m.relations().begin(), m.relations().end());
  std::vector<Column> den;
  for (std::size_t t = 0; t < s; ++t) {
    for (const auto& b : base) {
      Column c(r * s);
      std::copy(b.begin(), b.end(), c.begin() + static_cast<std::ptrdiff_t>(t * r));
      den.push_back(std::move(c));
    }
  }
  return preimage(ring, phi, den);
}

TorsionSubmodule torsion_submodule(const ModulePresentation& m, const Ideal& j, unsigned cap) {
  require_same_ring(*m.ring(), *j.ring());
  if (j.is_zero()) throw InvalidArgument("torsion submodule: J must be nonzero");
  std::vector<Column> cur;
  for (unsigned e = 0; e <= cap; ++e) {
    std::vector<Column> next = submodule_colon(m, cur, j);
    if (submodule_contains(m, cur, next)) return {prune(submodule(m, cur)), e};
    cur = std::move(next);
  }
  throw IterationCap("torsion chain did not stabilize within " + std::to_string(cap) + " steps");
}

}  // namespace rspec
