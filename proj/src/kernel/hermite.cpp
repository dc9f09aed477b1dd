#include "rspec/kernel/hermite.hpp"

#include <utility>

namespace rspec {

void xgcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& s, mpz_class& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

namespace {

// col_a <- s*a + t*b ; col_b <- u*a + v*b
void combine(IntCol& a, IntCol& b, const mpz_class& s, const mpz_class& t, const mpz_class& u,
             const mpz_class& v) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    mpz_class na = s * a[r] + t * b[r];
    mpz_class nb = u * a[r] + v * b[r];
    a[r] = std::move(na);
    b[r] = std::move(nb);
  }
}

void axpy(IntCol& y, const mpz_class& q, const IntCol& x) {
  for (std::size_t r = 0; r < y.size(); ++r) y[r] -= q * x[r];
}

bool is_zero(const IntCol& c) {
  for (const auto& x : c) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

HermiteForm hermite_form(std::vector<IntCol> cols, std::size_t rows, bool want_kernel) {
  const std::size_t m = cols.size();
  std::vector<IntCol> trans;
  if (want_kernel) {
    trans.assign(m, IntCol(m, 0));
    for (std::size_t j = 0; j < m; ++j) trans[j][j] = 1;
  }
  HermiteForm out;
  out.rows = rows;
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < m; ++i) {
    std::size_t first = m;
    for (std::size_t c = k; c < m; ++c) {
      if (cols[c][i] != 0) {
        first = c;
        break;
      }
    }
    if (first == m) continue;
    if (first != k) {
      std::swap(cols[first], cols[k]);
      if (want_kernel) std::swap(trans[first], trans[k]);
    }
    for (std::size_t c = k + 1; c < m; ++c) {
      if (cols[c][i] == 0) continue;
      mpz_class a = cols[k][i], b = cols[c][i];
      mpz_class g, s, t;
      xgcd(a, b, g, s, t);
      mpz_class u = -b / g, v = a / g;
      combine(cols[k], cols[c], s, t, u, v);
      if (want_kernel) combine(trans[k], trans[c], s, t, u, v);
    }
    if (cols[k][i] < 0) {
      for (auto& x : cols[k]) x = -x;
      if (want_kernel) {
        for (auto& x : trans[k]) x = -x;
      }
    }
    const mpz_class pivot = cols[k][i];
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      axpy(cols[j], q, cols[k]);
      if (want_kernel) axpy(trans[j], q, trans[k]);
    }
    out.pivot_rows.push_back(i);
    ++k;
  }
  out.basis.assign(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
  if (want_kernel) {
    for (std::size_t c = k; c < m; ++c) {
      if (is_zero(cols[c])) out.kernel.push_back(trans[c]);
    }
  }
  return out;
}

bool HermiteForm::solve(IntCol v, IntCol& coords) const {
  coords.assign(basis.size(), 0);
  std::size_t t = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (t < basis.size() && pivot_rows[t] == i) {
      const mpz_class& p = basis[t][i];
      if (v[i] != 0) {
        if (!mpz_divisible_p(v[i].get_mpz_t(), p.get_mpz_t())) return false;
        mpz_class q = v[i] / p;
        coords[t] = q;
        axpy(v, q, basis[t]);
      }
      ++t;
    } else if (v[i] != 0) {
      return false;
    }
  }
  return true;
}

bool HermiteForm::contains(IntCol v) const {
  IntCol coords;
  return solve(std::move(v), coords);
}

}  // namespace rspec
