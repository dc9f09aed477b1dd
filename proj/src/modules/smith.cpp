#include "rspec/modules/smith.hpp"

#include <sstream>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/factor.hpp"

namespace rspec {

RingPtr euclidean_cover(const Ring& ring) {
  if (ring.engine() == Engine::Integer) return Ring::integers();
  if (ring.engine() == Engine::FieldPoly && ring.nvars() <= 1) {
    RingDescriptor d = ring.descriptor();
    d.quotient.clear();
    return Ring::make(d);
  }
  throw NotPID("Smith normal form needs Z, Z/n, k[x] or k[x]/(f); got " + ring.to_string());
}

namespace {

class Euclid {
 public:
  explicit Euclid(RingPtr r) : r_(std::move(r)) {}

  const Ring& ring() const { return *r_; }

  mpz_class norm(const Poly& a) const {
    if (r_->engine() == Engine::Integer) return abs(r_->to_int(a));
    return a.total_degree();
  }

  void divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem) const {
    if (r_->engine() == Engine::Integer) {
      mpz_class x = r_->to_int(a), y = r_->to_int(b), qq, rr;
      mpz_fdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      q = r_->from_int(qq);
      rem = r_->from_int(rr);
    } else if (r_->nvars() == 0) {
      q = r_->arith().scale(a, r_->arith().coeffs().inverse(b.lead().coef));
      rem = Poly{};
    } else {
      univariate_divmod(*r_, a, b, q, rem);
    }
  }

  /// Unit u with u*a canonical.
  Poly normalizer(const Poly& a) const {
    if (a.is_zero()) return r_->one();
    if (r_->engine() == Engine::Integer) return r_->from_int(r_->to_int(a) < 0 ? -1 : 1);
    return r_->arith().constant(r_->arith().coeffs().inverse(a.lead().coef));
  }

 private:
  RingPtr r_;
};

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  for (auto& c : m.cols) std::swap(c[a], c[b]);
}

// row_a += f * row_b
void add_row(const Ring& r, Matrix& m, std::size_t a, const Poly& f, std::size_t b) {
  for (auto& c : m.cols) c[a] = r.add(c[a], r.mul(f, c[b]));
}

void add_col(const Ring& r, Matrix& m, std::size_t a, const Poly& f, std::size_t b) {
  for (std::size_t i = 0; i < m.rows; ++i) m.cols[a][i] = r.add(m.cols[a][i], r.mul(f, m.cols[b][i]));
}

void scale_row(const Ring& r, Matrix& m, std::size_t a, const Poly& f) {
  for (auto& c : m.cols) c[a] = r.mul(f, c[a]);
}

}  // namespace

SmithForm smith_normal_form(const Ring& ring, const Matrix& a0) {
  SmithForm sf;
  sf.euclid = euclidean_cover(ring);
  const Ring& E = *sf.euclid;
  Euclid eu(sf.euclid);
  Matrix a = a0;
  for (auto& c : a.cols) {
    for (auto& x : c) x = E.reduce(x);
  }
  Poly modulus;
  if (ring.engine() == Engine::Integer && ring.int_modulus() != 0) modulus = E.from_int(ring.int_modulus());
  if (ring.engine() == Engine::FieldPoly && !ring.quotient_basis().empty()) {
    ModuleArith ma(ring.arith());
    modulus = ma.component(ring.quotient_basis().front(), 0);
  }
  if (!modulus.is_zero()) {
    sf.lifted = true;
    for (std::size_t i = 0; i < a.rows; ++i) {
      Column c(a.rows);
      c[i] = modulus;
      a.cols.push_back(std::move(c));
    }
  }
  const Matrix lifted_a = a;
  const std::size_t rows = a.rows, cols = a.ncols();
  Matrix u = Matrix::identity(E, rows), v = Matrix::identity(E, cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    // pivot: smallest norm, ties by (row, col)
    auto find_pivot = [&](bool whole, std::size_t& pi, std::size_t& pj) {
      bool found = false;
      mpz_class best;
      for (std::size_t j = t; j < cols; ++j) {
        for (std::size_t i = t; i < rows; ++i) {
          if (!whole && i != t && j != t) continue;
          const Poly& x = a.at(i, j);
          if (x.is_zero()) continue;
          mpz_class nx = eu.norm(x);
          if (!found || nx < best || (nx == best && (i < pi || (i == pi && j < pj)))) {
            found = true;
            best = nx;
            pi = i;
            pj = j;
          }
        }
      }
      return found;
    };
    std::size_t pi = 0, pj = 0;
    if (!find_pivot(true, pi, pj)) break;
    for (;;) {
      if (pi != t) {
        swap_rows(a, pi, t);
        swap_rows(u, pi, t);
      }
      if (pj != t) {
        std::swap(a.cols[pj], a.cols[t]);
        std::swap(v.cols[pj], v.cols[t]);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t).is_zero()) continue;
        Poly q, r;
        eu.divmod(a.at(i, t), a.at(t, t), q, r);
        Poly nq = E.neg(q);
        add_row(E, a, i, nq, t);
        add_row(E, u, i, nq, t);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j).is_zero()) continue;
        Poly q, r;
        eu.divmod(a.at(t, j), a.at(t, t), q, r);
        Poly nq = E.neg(q);
        add_col(E, a, j, nq, t);
        add_col(E, v, j, nq, t);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) {
        find_pivot(false, pi, pj);
        continue;
      }
      bool divisible = true;
      for (std::size_t j = t + 1; j < cols && divisible; ++j) {
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (a.at(i, j).is_zero()) continue;
          Poly q, r;
          eu.divmod(a.at(i, j), a.at(t, t), q, r);
          if (!r.is_zero()) {
            add_row(E, a, t, E.one(), i);
            add_row(E, u, t, E.one(), i);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
      pi = t;
      pj = t;
      find_pivot(false, pi, pj);
    }
    Poly nz = eu.normalizer(a.at(t, t));
    scale_row(E, a, t, nz);
    scale_row(E, u, t, nz);
  }
  for (std::size_t t = 0; t < steps; ++t) sf.invariant_factors.push_back(a.at(t, t));
  sf.U = u;
  sf.V = v;
  sf.D = a;
  if (!(mat_mul(E, mat_mul(E, u, lifted_a), v) == a)) throw Error("Smith normal form: transform check failed");
  return sf;
}

Poly determinant(const Ring& E, const Matrix& m) {
  const std::size_t n = m.rows;
  if (m.ncols() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return E.one();
  Euclid eu(Ring::make(E.descriptor()));
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  }
  Poly prev = E.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && a[s][k].is_zero()) ++s;
      if (s == n) return Poly{};
      std::swap(a[s], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = E.sub(E.mul(a[i][j], a[k][k]), E.mul(a[i][k], a[k][j]));
        Poly q, r;
        eu.divmod(num, prev, q, r);
        a[i][j] = q;
      }
      a[i][k] = Poly{};
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return negate ? E.neg(d) : d;
}

PidInvariants pid_invariants(const ModulePresentation& m) {
  SmithForm sf = smith_normal_form(*m.ring(), m.relation_matrix());
  const Ring& E = *sf.euclid;
  PidInvariants inv;
  for (std::size_t i = 0; i < m.rank(); ++i) {
    Poly d = i < sf.invariant_factors.size() ? sf.invariant_factors[i] : Poly{};
    if (d.is_zero()) {
      inv.free_rank++;
    } else if (!(d == E.one())) {
      inv.torsion.push_back(d);
    }
  }
  return inv;
}

bool pid_isomorphic(const ModulePresentation& a, const ModulePresentation& b) {
  require_same_ring(*a.ring(), *b.ring());
  return pid_invariants(a) == pid_invariants(b);
}

std::string pid_invariants_string(const ModulePresentation& m) {
  PidInvariants inv = pid_invariants(m);
  RingPtr e = euclidean_cover(*m.ring());
  std::ostringstream os;
  os << "free " << inv.free_rank << "; torsion [";
  for (std::size_t i = 0; i < inv.torsion.size(); ++i) os << (i ? ", " : "") << e->element_to_string(inv.torsion[i]);
  os << "]";
  return os.str();
}

}  // namespace rspec
