#include "rspec/kernel/linalg.hpp"

#include "rspec/kernel/errors.hpp"

namespace rspec {

Matrix Matrix::zero(std::size_t r, std::size_t c) { return Matrix(r, std::vector<Column>(c, Column(r))); }

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m = zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.ncols() != b.rows) throw InvalidArgument("matrix dimension mismatch");
  Matrix r = Matrix::zero(a.rows, b.ncols());
  for (std::size_t j = 0; j < b.ncols(); ++j) r.cols[j] = mat_vec(ring, a, b.cols[j]);
  return r;
}

Column mat_vec(const Ring& ring, const Matrix& a, const Column& v) {
  if (a.ncols() != v.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  const PolyArith& pa = ring.arith();
  Column r(a.rows);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (a.at(i, k).is_zero()) continue;
      r[i] = pa.add(r[i], pa.mul(a.at(i, k), v[k]));
    }
  }
  for (auto& x : r) x = ring.reduce(x);
  return r;
}

Matrix transpose(const Matrix& a) {
  Matrix t = Matrix::zero(a.ncols(), a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.ncols(); ++j) t.at(j, i) = a.at(i, j);
  }
  return t;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw InvalidArgument("hcat: row count mismatch");
  Matrix r = a;
  r.cols.insert(r.cols.end(), b.cols.begin(), b.cols.end());
  return r;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix r = Matrix::zero(a.rows + b.rows, a.ncols() + b.ncols());
  for (std::size_t j = 0; j < a.ncols(); ++j) {
    for (std::size_t i = 0; i < a.rows; ++i) r.at(i, j) = a.at(i, j);
  }
  for (std::size_t j = 0; j < b.ncols(); ++j) {
    for (std::size_t i = 0; i < b.rows; ++i) r.at(a.rows + i, a.ncols() + j) = b.at(i, j);
  }
  return r;
}

Matrix kron_identity(const Ring& ring, const Matrix& a, std::size_t n) {
  (void)ring;
  Matrix r = Matrix::zero(a.rows * n, a.ncols() * n);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.ncols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) r.at(i * n + k, j * n + k) = a.at(i, j);
    }
  }
  return r;
}

Column zero_column(std::size_t n) { return Column(n); }

Column unit_column(const Ring& ring, std::size_t n, std::size_t i) {
  Column c(n);
  c.at(i) = ring.one();
  return c;
}

bool is_zero_column(const Column& c) {
  for (const auto& x : c) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix drop_zero_columns(const Matrix& m) {
  Matrix r(m.rows, {});
  for (const auto& c : m.cols) {
    if (!is_zero_column(c)) r.cols.push_back(c);
  }
  return r;
}

void require_computable(const Ring& ring) {
  if (ring.engine() == Engine::Unsupported)
    throw UnsupportedRing("no computational backend for " + ring.to_string() +
                          " (polynomial rings need field coefficients)");
}

MVec column_to_mvec(const Ring& ring, const Column& c, int offset) {
  ModuleArith ma(ring.arith());
  MVec v;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& t : c[i].terms) v.push_back({static_cast<int>(i) + offset, t.exp, t.coef});
  }
  return v;  // components ascending, terms within descending: already sorted
}

Column mvec_to_column(const Ring& ring, const MVec& v, std::size_t rank, int offset) {
  Column c(rank);
  for (const auto& t : v) {
    int k = t.comp - offset;
    if (k < 0 || static_cast<std::size_t>(k) >= rank) continue;
    c[static_cast<std::size_t>(k)].terms.push_back({t.exp, t.coef});
  }
  for (auto& x : c) x = ring.reduce(x);
  return c;
}

IntCol column_to_int(const Ring& ring, const Column& c) {
  IntCol r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = ring.to_int(c[i]);
  return r;
}

Column int_to_column(const Ring& ring, const IntCol& c) {
  Column r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = ring.from_int(c[i]);
  return r;
}

namespace {

std::vector<IntCol> lifted_int_gens(const Ring& ring, const std::vector<Column>& gens, std::size_t rank) {
  std::vector<IntCol> cols;
  cols.reserve(gens.size() + rank);
  for (const auto& g : gens) cols.push_back(column_to_int(ring, g));
  if (ring.int_modulus() != 0) {
    for (std::size_t i = 0; i < rank; ++i) {
      IntCol e(rank, 0);
      e[i] = ring.int_modulus();
      cols.push_back(std::move(e));
    }
  }
  return cols;
}

std::vector<MVec> quotient_relations(const Ring& ring, std::size_t rank, int offset) {
  std::vector<MVec> out;
  for (std::size_t i = 0; i < rank; ++i) {
    for (const auto& q : ring.quotient_basis()) {
      MVec v = q;
      for (auto& t : v) t.comp = static_cast<int>(i) + offset;
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

std::vector<Column> syzygies(const Ring& ring, const std::vector<Column>& gens, std::size_t rank) {
  require_computable(ring);
  const std::size_t m = gens.size();
  std::vector<Column> out;
  if (m == 0) return out;
  if (ring.engine() == Engine::Integer) {
    HermiteForm h = hermite_form(lifted_int_gens(ring, gens, rank), rank, true);
    for (const auto& k : h.kernel) {
      IntCol s(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m));
      Column c = int_to_column(ring, s);
      if (!is_zero_column(c)) out.push_back(std::move(c));
    }
    return out;
  }
  // Groebner elimination: GB of (g_j, e_j) under position-over-term with
  // the first `rank` components dominant; elements vanishing there are
  // syzygies.
  const PolyArith& pa = ring.arith();
  std::vector<MVec> ext;
  ext.reserve(m + rank * ring.quotient_basis().size());
  const Exponents one(ring.nvars(), 0);
  for (std::size_t j = 0; j < m; ++j) {
    MVec v = column_to_mvec(ring, gens[j]);
    v.push_back({static_cast<int>(rank + j), one, 1});
    ext.push_back(std::move(v));
  }
  for (auto& q : quotient_relations(ring, rank, 0)) ext.push_back(std::move(q));
  std::vector<MVec> gb = groebner_basis(pa, ext);
  for (const auto& g : gb) {
    if (g.front().comp < static_cast<int>(rank)) continue;
    Column c = mvec_to_column(ring, g, m, static_cast<int>(rank));
    if (!is_zero_column(c)) out.push_back(std::move(c));
  }
  return out;
}

Span::Span(const Ring& ring, const std::vector<Column>& gens, std::size_t rank) : ring_(&ring), rank_(rank) {
  require_computable(ring);
  for (const auto& g : gens) {
    if (g.size() != rank) throw InvalidArgument("span generator has wrong length");
  }
  if (ring.engine() == Engine::Integer) {
    hermite_ = hermite_form(lifted_int_gens(ring, gens, rank), rank, false);
    for (const auto& b : hermite_.basis) canonical_.push_back(int_to_column(ring, b));
    return;
  }
  std::vector<MVec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) vs.push_back(column_to_mvec(ring, g));
  for (auto& q : quotient_relations(ring, rank, 0)) vs.push_back(std::move(q));
  gb_ = groebner_basis(ring.arith(), vs);
  for (const auto& g : gb_) canonical_.push_back(mvec_to_column(ring, g, rank));
}

bool Span::contains(const Column& v) const {
  if (v.size() != rank_) throw InvalidArgument("membership test: wrong vector length");
  if (ring_->engine() == Engine::Integer) return hermite_.contains(column_to_int(*ring_, v));
  return normal_form(ring_->arith(), column_to_mvec(*ring_, v), gb_).empty();
}

bool Span::contains_all(const std::vector<Column>& vs) const {
  for (const auto& v : vs) {
    if (!contains(v)) return false;
  }
  return true;
}

Column Span::reduce(const Column& v) const {
  if (ring_->engine() != Engine::FieldPoly) throw UnsupportedRing("normal forms need the Groebner engine");
  return mvec_to_column(*ring_, normal_form(ring_->arith(), column_to_mvec(*ring_, v), gb_), rank_);
}

bool spans_equal(const Ring& ring, const std::vector<Column>& a, const std::vector<Column>& b, std::size_t rank) {
  return Span(ring, a, rank).contains_all(b) && Span(ring, b, rank).contains_all(a);
}

}  // namespace rspec
