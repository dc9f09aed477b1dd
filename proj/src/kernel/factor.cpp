#include "rspec/kernel/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "rspec/kernel/errors.hpp"

namespace rspec {

bool is_prime_integer(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class d = abs(x - y);
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_integer(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_integer(n)) {
    out[n]++;
    return;
  }
  mpz_class d = pollard_brent(n);
  split_integer(d, out);
  split_integer(n / d, out);
}

}  // namespace

std::vector<IntFactor> factor_integer(const mpz_class& n0) {
  if (n0 == 0) throw InvalidArgument("cannot factor zero");
  mpz_class n = abs(n0);
  std::map<mpz_class, unsigned> acc;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      acc[p]++;
      n /= p;
    }
  }
  split_integer(n, acc);
  std::vector<IntFactor> out;
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  if (n == 0 || abs(n) == 1) return out;
  for (const auto& f : factor_integer(n)) out.push_back(f.prime);
  return out;
}

namespace {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
using UP = std::vector<mpq_class>;

class UArith {
 public:
  explicit UArith(const CoeffDomain& cd) : cd_(cd) {
    if (!cd.is_field()) throw UnsupportedRing("univariate factorization needs field coefficients");
  }

  mpq_class norm(mpq_class c) const {
    cd_.normalize(c);
    return c;
  }

  void trim(UP& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  int deg(const UP& a) const { return static_cast<int>(a.size()) - 1; }

  UP add(const UP& a, const UP& b) const {
    UP r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      mpq_class s = 0;
      if (i < a.size()) s += a[i];
      if (i < b.size()) s += b[i];
      r[i] = norm(s);
    }
    trim(r);
    return r;
  }

  UP scale(const UP& a, const mpq_class& c) const {
    UP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = norm(a[i] * c);
    trim(r);
    return r;
  }

  UP sub(const UP& a, const UP& b) const { return add(a, scale(b, -1)); }

  UP mul(const UP& a, const UP& b) const {
    if (a.empty() || b.empty()) return {};
    UP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& c : r) c = norm(c);
    trim(r);
    return r;
  }

  void divmod(const UP& a, const UP& b, UP& q, UP& r) const {
    if (b.empty()) throw InvalidArgument("division by zero polynomial");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    mpq_class inv = cd_.inverse(b.back());
    while (!r.empty() && r.size() >= b.size()) {
      std::size_t shift = r.size() - b.size();
      mpq_class c = norm(r.back() * inv);
      q[shift] = c;
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = norm(r[shift + j] - c * b[j]);
      trim(r);
    }
    trim(q);
  }

  UP rem(const UP& a, const UP& b) const {
    UP q, r;
    divmod(a, b, q, r);
    return r;
  }

  UP quo(const UP& a, const UP& b) const {
    UP q, r;
    divmod(a, b, q, r);
    return q;
  }

  UP monic(const UP& a) const { return a.empty() ? a : scale(a, cd_.inverse(a.back())); }

  UP gcd(UP a, UP b) const {
    while (!b.empty()) {
      UP r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  UP derivative(const UP& a) const {
    UP r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(norm(a[i] * static_cast<long>(i)));
    trim(r);
    return r;
  }

  UP powmod(UP base, mpz_class e, const UP& m) const {
    UP r = {mpq_class(1)};
    base = rem(base, m);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), m);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), m);
    }
    return r;
  }

  const CoeffDomain& cd() const { return cd_; }

 private:
  const CoeffDomain& cd_;
};

UP to_up(const Ring& ring, const Poly& p) {
  if (ring.nvars() != 1) throw InvalidArgument("univariate operation needs a ring with one variable");
  UP r;
  for (const auto& t : p.terms) {
    std::size_t d = static_cast<std::size_t>(t.exp[0]);
    if (r.size() <= d) r.resize(d + 1, 0);
    r[d] = t.coef;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly from_up(const Ring& ring, const UP& a) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) ts.push_back({Exponents{static_cast<int>(i)}, a[i]});
  }
  return ring.arith().from_terms(ts);
}

// Squarefree part in characteristic p (or 0).
UP radical(const UArith& u, const UP& f) {
  if (u.deg(f) <= 0) return {mpq_class(1)};
  UP d = u.derivative(f);
  if (d.empty()) {
    // f = h(x^p) = h(x)^p over F_p
    long p = u.cd().modulus().get_si();
    UP h;
    for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p)) h.push_back(f[i]);
    return radical(u, h);
  }
  UP g = u.gcd(f, d);
  UP part = u.monic(u.quo(f, g));
  if (u.deg(g) <= 0) return part;
  UP rg = radical(u, g);
  return u.monic(u.quo(u.mul(part, rg), u.gcd(part, rg)));
}

bool up_less(const UP& a, const UP& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void equal_degree_split(const UArith& u, const UP& f, int d, std::mt19937_64& rng, std::vector<UP>& out) {
  if (u.deg(f) == d) {
    out.push_back(u.monic(f));
    return;
  }
  const mpz_class& p = u.cd().modulus();
  for (;;) {
    UP a;
    for (int i = 0; i < u.deg(f); ++i) a.push_back(mpq_class(mpz_class(static_cast<unsigned long>(rng() % p.get_ui()))));
    u.trim(a);
    if (u.deg(a) <= 0) continue;
    UP b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d*1 - 1)) over F_2
      UP t = u.rem(a, f), acc = t;
      for (int i = 1; i < d; ++i) {
        t = u.rem(u.mul(t, t), f);
        acc = u.add(acc, t);
      }
      b = acc;
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = u.sub(u.powmod(a, e, f), UP{mpq_class(1)});
    }
    UP g = u.gcd(f, b);
    if (u.deg(g) > 0 && u.deg(g) < u.deg(f)) {
      equal_degree_split(u, g, d, rng, out);
      equal_degree_split(u, u.quo(f, g), d, rng, out);
      return;
    }
  }
}

std::vector<UP> factor_fp(const UArith& u, UP f) {
  std::vector<UP> out;
  std::mt19937_64 rng(0x5eed);
  const mpz_class& p = u.cd().modulus();
  UP x = {mpq_class(0), mpq_class(1)};
  UP xp = x;
  for (int d = 1; 2 * d <= u.deg(f); ++d) {
    xp = u.powmod(xp, p, f);
    UP g = u.gcd(f, u.sub(xp, x));
    if (u.deg(g) > 0) {
      equal_degree_split(u, g, d, rng, out);
      f = u.quo(f, g);
      xp = u.rem(xp, f);
    }
  }
  if (u.deg(f) > 0) out.push_back(u.monic(f));
  return out;
}

// Integer polynomial proportional to a rational one, with content 1.
std::vector<mpz_class> primitive_int(const UP& a) {
  mpz_class l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> r;
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_class v = c.get_num() * (l / c.get_den());
    r.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : r) v /= g;
  return r;
}

std::vector<mpz_class> divisors(const mpz_class& n, std::size_t& budget) {
  std::vector<mpz_class> ds = {1};
  for (const auto& f : factor_integer(n)) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (unsigned e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
      if (ds.size() > budget) throw NeedCandidates("rational factorization exceeded its work budget");
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

mpq_class eval(const UP& a, const mpq_class& x) {
  mpq_class r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

// Lagrange interpolation through (xs[i], ys[i]).
UP interpolate(const UArith& u, const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  UP r;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    UP basis = {mpq_class(1)};
    mpq_class den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = u.mul(basis, UP{-xs[j], mpq_class(1)});
      den *= xs[i] - xs[j];
    }
    r = u.add(r, u.scale(basis, ys[i] / den));
  }
  return r;
}

// Finds a factor of degree d of the squarefree root-free f, or returns empty.
UP kronecker_factor(const UArith& u, const UP& f, int d, std::size_t& budget) {
  std::vector<mpz_class> h = primitive_int(f);
  UP hq(h.begin(), h.end());
  std::vector<mpq_class> xs;
  std::vector<std::vector<mpz_class>> choices;
  for (long x = 0; static_cast<int>(xs.size()) <= d; x = x > 0 ? -x : -x + 1) {
    mpq_class v = eval(hq, x);
    if (v == 0) continue;
    xs.push_back(x);
    std::vector<mpz_class> ds = divisors(abs(v.get_num()), budget);
    std::vector<mpz_class> signed_ds;
    for (const auto& dv : ds) {
      signed_ds.push_back(dv);
      if (!choices.empty()) signed_ds.push_back(-dv);
    }
    choices.push_back(signed_ds);
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    if (budget == 0) throw NeedCandidates("rational factorization exceeded its work budget");
    --budget;
    std::vector<mpq_class> ys;
    for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
    UP g = interpolate(u, xs, ys);
    if (u.deg(g) == d) {
      UP q, r;
      u.divmod(f, g, q, r);
      if (r.empty()) return u.monic(g);
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return {};
  }
}

std::vector<UP> factor_q(const UArith& u, UP f, std::size_t budget) {
  std::vector<UP> out;
  // rational roots
  if (!f.empty() && f[0] == 0) {
    out.push_back({mpq_class(0), mpq_class(1)});
    f = u.quo(f, out.back());
  }
  if (u.deg(f) >= 1) {
    std::vector<mpz_class> h = primitive_int(f);
    std::vector<mpz_class> num = divisors(abs(h.front()), budget), den = divisors(abs(h.back()), budget);
    for (const auto& a : num) {
      for (const auto& b : den) {
        for (int s : {1, -1}) {
          if (u.deg(f) < 1) break;
          mpq_class r(a * s, b);
          r.canonicalize();
          if (eval(f, r) == 0) {
            UP lin = {-r, mpq_class(1)};
            if (std::find(out.begin(), out.end(), lin) == out.end()) out.push_back(lin);
            f = u.quo(f, lin);
          }
        }
      }
    }
  }
  std::function<void(const UP&)> rec = [&](const UP& g) {
    if (u.deg(g) <= 0) return;
    if (u.deg(g) <= 3) {
      out.push_back(u.monic(g));
      return;
    }
    for (int d = 2; 2 * d <= u.deg(g); ++d) {
      UP k = kronecker_factor(u, g, d, budget);
      if (!k.empty()) {
        rec(k);
        rec(u.quo(g, k));
        return;
      }
    }
    out.push_back(u.monic(g));
  };
  rec(f);
  return out;
}

}  // namespace

Poly univariate_gcd(const Ring& ring, const Poly& a, const Poly& b) {
  UArith u(ring.arith().coeffs());
  return from_up(ring, u.gcd(to_up(ring, a), to_up(ring, b)));
}

Poly univariate_rem(const Ring& ring, const Poly& a, const Poly& b) {
  UArith u(ring.arith().coeffs());
  return from_up(ring, u.rem(to_up(ring, a), to_up(ring, b)));
}

void univariate_divmod(const Ring& ring, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  UArith u(ring.arith().coeffs());
  UP uq, ur;
  u.divmod(to_up(ring, a), to_up(ring, b), uq, ur);
  q = from_up(ring, uq);
  r = from_up(ring, ur);
}

Poly univariate_squarefree(const Ring& ring, const Poly& f) {
  UArith u(ring.arith().coeffs());
  return from_up(ring, radical(u, to_up(ring, f)));
}

std::vector<Poly> univariate_irreducible_factors(const Ring& ring, const Poly& f, std::size_t budget) {
  UArith u(ring.arith().coeffs());
  UP a = to_up(ring, f);
  if (a.empty()) throw InvalidArgument("cannot factor the zero polynomial");
  UP s = radical(u, a);
  std::vector<UP> fs;
  if (u.deg(s) > 0) {
    fs = u.cd().kind() == CoeffDomain::Kind::Modular ? factor_fp(u, s) : factor_q(u, s, budget);
  }
  std::sort(fs.begin(), fs.end(), up_less);
  std::vector<Poly> out;
  for (const auto& g : fs) out.push_back(from_up(ring, g));
  return out;
}

bool univariate_is_irreducible(const Ring& ring, const Poly& f, std::size_t budget) {
  UArith u(ring.arith().coeffs());
  UP a = to_up(ring, f);
  if (u.deg(a) <= 0) return false;
  if (u.deg(radical(u, a)) != u.deg(a)) return false;
  return univariate_irreducible_factors(ring, f, budget).size() == 1;
}

}  // namespace rspec
