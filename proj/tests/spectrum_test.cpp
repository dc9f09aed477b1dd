#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "rspec/kernel/errors.hpp"
#include "rspec/spectrum/support.hpp"
#include "test_util.hpp"

using namespace rspec;
using namespace rspec::testing;

namespace {

PrimeIdeal Pr(const RingPtr& r, const std::vector<std::string>& gens) { return PrimeIdeal::certify(I(r, gens)); }

std::set<std::string> names(const std::vector<PrimeIdeal>& ps) {
  std::set<std::string> out;
  for (const auto& p : ps) out.insert(p.to_string());
  return out;
}

// Finite abelian group Z/d_1 + ... + Z/d_k, enumerated explicitly.
struct FiniteGroup {
  std::vector<long> d;
  long size() const { return std::accumulate(d.begin(), d.end(), 1L, std::multiplies<>()); }
  std::vector<long> element(long idx) const {
    std::vector<long> v;
    for (long di : d) {
      v.push_back(idx % di);
      idx /= di;
    }
    return v;
  }
  long order(const std::vector<long>& v) const {
    long o = 1;
    for (std::size_t i = 0; i < d.size(); ++i) o = std::lcm(o, d[i] / std::gcd(v[i], d[i]));
    return o;
  }
  std::vector<long> scale(const std::vector<long>& v, long k) const {
    std::vector<long> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = (v[i] * k) % d[i];
    return r;
  }
  bool is_zero(const std::vector<long>& v) const {
    return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
  }
};

// Primes p with an element of order exactly p: Ass of a finite group.
std::set<long> brute_ass(const FiniteGroup& g) {
  std::set<long> out;
  for (long i = 1; i < g.size(); ++i) {
    long o = g.order(g.element(i));
    bool prime = o > 1;
    for (long q = 2; q * q <= o; ++q) prime = prime && o % q != 0;
    if (prime) out.insert(o);
  }
  return out;
}

std::set<std::string> int_prime_names(const std::set<long>& ps) {
  std::set<std::string> out;
  for (long p : ps) out.insert("(" + std::to_string(p) + ")");
  return out;
}

ModulePresentation diag_module(const RingPtr& r, const std::vector<long>& ds) {
  std::vector<Poly> ps;
  for (long d : ds) ps.push_back(r->from_int(d));
  return ModulePresentation::diagonal(r, ps);
}

}  // namespace

TEST(Prime, Certification) {
  auto z = Ring::integers();
  EXPECT_EQ(Pr(z, {"0"}).certification(), Certification::Auto);
  EXPECT_EQ(Pr(z, {"7"}).to_string(), "(7)");
  EXPECT_THROW(Pr(z, {"6"}), InvalidArgument);
  EXPECT_THROW(Pr(z, {"1"}), InvalidArgument);
  auto z12 = Ring::integers_mod(12);
  EXPECT_NO_THROW(Pr(z12, {"2"}));
  EXPECT_THROW(Pr(z12, {"0"}), InvalidArgument);
  EXPECT_NO_THROW(Pr(Ring::integers_mod(5), {"0"}));
  auto qx = Ring::rationals({"x"});
  EXPECT_NO_THROW(Pr(qx, {"x^2+1"}));
  EXPECT_THROW(Pr(qx, {"x^2-1"}), InvalidArgument);
  auto qxy = Ring::rationals({"x", "y"});
  EXPECT_NO_THROW(Pr(qxy, {"x", "y"}));
  EXPECT_NO_THROW(Pr(qxy, {"0"}));
  EXPECT_FALSE(PrimeIdeal::try_certify(I(qxy, {"x*y"})));
  PrimeIdeal a = PrimeIdeal::assume(I(qxy, {"x^2-y^3"}));
  EXPECT_EQ(a.certification(), Certification::Asserted);
  EXPECT_THROW(PrimeIdeal::assume(I(qxy, {"1"})), InvalidArgument);
  auto art = quotient_ring(qxy, {"x^2", "y^2"});
  EXPECT_NO_THROW(Pr(art, {"x", "y"}));
}

TEST(SpecSet, ClosureExamples) {
  auto z = Ring::integers();
  SpecSet s = spec_closure(z, {Pr(z, {"3"}), Pr(z, {"2"})});
  EXPECT_EQ(names(s.generators()), (std::set<std::string>{"(2)", "(3)"}));
  auto qxy = Ring::rationals({"x", "y"});
  SpecSet t = spec_closure(qxy, {Pr(qxy, {"x"}), Pr(qxy, {"x", "y"})});
  ASSERT_EQ(t.generators().size(), 1u);
  EXPECT_EQ(t.generators()[0].to_string(), "(x)");
  EXPECT_TRUE(t.contains(Pr(qxy, {"x", "y-1"})));
  EXPECT_FALSE(t.contains(Pr(qxy, {"y"})));
  EXPECT_TRUE(spec_closure(z, {}).empty());
  EXPECT_TRUE(spec_closure(z, {Pr(z, {"0"}), Pr(z, {"5"})}) == spec_closure(z, {Pr(z, {"0"})}));
}

TEST(Support, Examples) {
  auto z = Ring::integers();
  EXPECT_TRUE(supp_contains(Pr(z, {"2"}), Zmod(z, 12)));
  EXPECT_FALSE(supp_contains(Pr(z, {"5"}), Zmod(z, 12)));
  EXPECT_FALSE(supp_contains(Pr(z, {"0"}), ModulePresentation::zero(z)));
  EXPECT_FALSE(supp_contains(Pr(z, {"2"}), ModulePresentation::zero(z)));
  auto qxy = Ring::rationals({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"}));
  EXPECT_FALSE(supp_contains(Pr(qxy, {"y"}), m));
  EXPECT_TRUE(supp_contains(Pr(qxy, {"x"}), m));
  EXPECT_THROW(supp_contains(Pr(Ring::rationals({"x"}), {"x"}), m), RingMismatch);
}

TEST(Ass, Examples) {
  auto z = Ring::integers();
  EXPECT_TRUE(ass_contains(Pr(z, {"2"}), Zmod(z, 12)));
  EXPECT_FALSE(ass_contains(Pr(z, {"0"}), Zmod(z, 12)));
  EXPECT_EQ(names(ass_enumerate(Zmod(z, 12))), (std::set<std::string>{"(2)", "(3)"}));
  EXPECT_EQ(names(ass_enumerate(diag_module(z, {0, 4}))), (std::set<std::string>{"(0)", "(2)"}));
  EXPECT_TRUE(ass_enumerate(ModulePresentation::zero(z)).empty());
  auto qxy = Ring::rationals({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"}));
  EXPECT_TRUE(ass_contains(Pr(qxy, {"x"}), m));
  EXPECT_TRUE(ass_contains(Pr(qxy, {"x", "y"}), m));
  EXPECT_FALSE(ass_contains(Pr(qxy, {"y"}), m));
  EXPECT_EQ(names(ass_enumerate(m)), (std::set<std::string>{"(x)", "(x, y)"}));
}

TEST(Ass, WitnessAnnihilatorsByColon) {
  // witnesses: ann(ybar) = (x), ann(xbar) = (x, y), computed as colon ideals
  auto qxy = Ring::rationals({"x", "y"});
  Ideal j = I(qxy, {"x^2", "x*y"});
  EXPECT_TRUE(ideal_quotient(j, I(qxy, {"y"})) == I(qxy, {"x"}));
  EXPECT_TRUE(ideal_quotient(j, I(qxy, {"x"})) == I(qxy, {"x", "y"}));
  ModulePresentation m = ModulePresentation::cyclic(j);
  EXPECT_TRUE(element_annihilator(m, {P(qxy, "y")}) == I(qxy, {"x"}));
  EXPECT_TRUE(element_annihilator(m, {P(qxy, "x")}) == I(qxy, {"x", "y"}));
}

TEST(Ass, NeedCandidates) {
  auto qxy = Ring::rationals({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic(I(qxy, {"x^2+y", "x*y-1"}));
  EXPECT_THROW(ass_enumerate(m), NeedCandidates);
  PrimeIdeal p = PrimeIdeal::assume(I(qxy, {"x^2+y", "x*y-1"}));
  auto got = ass_enumerate(m, std::vector<PrimeIdeal>{p});
  ASSERT_EQ(got.size(), 1u);
}

TEST(Ass, OtherRings) {
  auto z12 = Ring::integers_mod(12);
  EXPECT_EQ(names(ass_enumerate(ModulePresentation::free(z12, 1))), (std::set<std::string>{"(2)", "(3)"}));
  auto qx = Ring::rationals({"x"});
  ModulePresentation m = diag_module(qx, {});
  m = coker(qx, {{"x^2*(x^2+1)", "0"}, {"0", "0"}});
  EXPECT_EQ(names(ass_enumerate(m)), (std::set<std::string>{"(0)", "(x)", "(x^2 + 1)"}));
  auto qq = Ring::rationals({});
  EXPECT_EQ(names(ass_enumerate(ModulePresentation::free(qq, 2))), (std::set<std::string>{"(0)"}));
  auto fx = quotient_ring(qx, {"x^3-x"});
  EXPECT_EQ(ass_enumerate(ModulePresentation::free(fx, 1)).size(), 3u);
  auto mono = quotient_ring(Ring::rationals({"x", "y"}), {"x^2", "x*y"});
  EXPECT_EQ(names(ass_enumerate(ModulePresentation::free(mono, 1))), (std::set<std::string>{"(x)", "(x, y)"}));
}

TEST(Ass, BruteForceFiniteGroups) {
  auto z = Ring::integers();
  std::mt19937_64 rng(7);
  const long ds[] = {1, 2, 3, 4, 5, 6, 8, 9, 10, 12};
  for (int t = 0; t < 30; ++t) {
    FiniteGroup g;
    std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) g.d.push_back(ds[rng() % 10]);
    EXPECT_EQ(names(ass_enumerate(diag_module(z, g.d))), int_prime_names(brute_ass(g)));
  }
}

TEST(Support, SuppEqualsClosureOfAss) {
  auto z = Ring::integers();
  auto qx = Ring::rationals({"x"});
  auto f5x = Ring::prime_field(5, {"x"});
  for (unsigned seed = 0; seed < 12; ++seed) {
    std::mt19937_64 rng(seed);
    for (const auto& m : {random_z_module(z, rng), random_kx_module(qx, rng), random_kx_module(f5x, rng)}) {
      SpecSet lhs = spec_closure(m.ring(), ass_enumerate(m));
      EXPECT_TRUE(lhs == support(m)) << m.to_string();
      for (const auto& p : ass_enumerate(m)) EXPECT_TRUE(supp_contains(p, m));
    }
  }
  auto qxy = Ring::rationals({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"}));
  SpecSet s = spec_closure(qxy, ass_enumerate(m));
  EXPECT_TRUE(s == support(m));
  ASSERT_EQ(s.generators().size(), 1u);
  EXPECT_EQ(s.generators()[0].to_string(), "(x)");
  ModulePresentation n = coker(qxy, {{"x*y", "0", "x^2"}, {"0", "y^3", "0"}});
  EXPECT_TRUE(spec_closure(qxy, ass_enumerate(n)) == support(n));
}

TEST(Support, MinimalPrimes) {
  auto z = Ring::integers();
  EXPECT_EQ(names(minimal_primes(I(z, {"360"}))), (std::set<std::string>{"(2)", "(3)", "(5)"}));
  EXPECT_EQ(names(minimal_primes(I(z, {"0"}))), (std::set<std::string>{"(0)"}));
  EXPECT_TRUE(minimal_primes(I(z, {"1"})).empty());
  auto qxyz = Ring::rationals({"x", "y", "z"});
  EXPECT_EQ(names(minimal_primes(I(qxyz, {"x*y", "y*z"}))), (std::set<std::string>{"(y)", "(x, z)"}));
}

TEST(Support, RealizationOverIntegers) {
  // the union of Supp(R/p_i) reproduces a random finite-type S
  auto z = Ring::integers();
  std::mt19937_64 rng(3);
  const char* ps[] = {"0", "2", "3", "5", "7", "11", "13"};
  for (int t = 0; t < 40; ++t) {
    std::vector<PrimeIdeal> pts;
    std::size_t k = rng() % 4;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(Pr(z, {ps[rng() % 7]}));
    SpecSet s = spec_closure(z, pts);
    SpecSet u(z);
    for (const auto& p : s.generators()) u = u.unite(support(ModulePresentation::cyclic(p.ideal())));
    EXPECT_TRUE(u == s);
    for (const char* q : ps) {
      PrimeIdeal pq = Pr(z, {q});
      bool in_union = false;
      for (const auto& p : s.generators()) in_union = in_union || supp_contains(pq, ModulePresentation::cyclic(p.ideal()));
      EXPECT_EQ(in_union, s.contains(pq));
    }
  }
}

TEST(Filtration, Examples) {
  auto z = Ring::integers();
  PrimeFiltration f = prime_filtration(Zmod(z, 4));
  EXPECT_EQ(f.primes.size(), 2u);
  for (const auto& p : f.primes) EXPECT_EQ(p.to_string(), "(2)");
  EXPECT_TRUE(element_annihilator(Zmod(z, 4), f.elements[0]) == I(z, {"2"}));
  auto qxy = Ring::rationals({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"}));
  PrimeFiltration g = prime_filtration(m);
  ASSERT_EQ(g.primes.size(), 2u);
  EXPECT_EQ(g.primes[0].to_string(), "(x, y)");
  EXPECT_EQ(g.primes[1].to_string(), "(x)");
  EXPECT_EQ(prime_filtration(ModulePresentation::cyclic(I(qxy, {"x"}))).primes.size(), 1u);
  EXPECT_TRUE(prime_filtration(ModulePresentation::zero(z)).primes.empty());
}

TEST(Filtration, VerifiedAndContainsAss) {
  auto z = Ring::integers();
  auto qx = Ring::rationals({"x"});
  for (unsigned seed = 0; seed < 10; ++seed) {
    std::mt19937_64 rng(100 + seed);
    for (const auto& m : {random_z_module(z, rng), random_kx_module(qx, rng)}) {
      PrimeFiltration f = prime_filtration(m);
      std::set<std::string> fp = names(f.primes);
      for (const auto& p : ass_enumerate(m)) EXPECT_TRUE(fp.count(p.to_string())) << m.to_string();
      // strictly increasing, ends at M, each quotient cyclic with the stated annihilator
      std::vector<Column> prev;
      for (std::size_t i = 0; i < f.chain.size(); ++i) {
        Submodule cur = submodule(m, f.chain[i]);
        Quotient step = quotient(cur.module, {});
        (void)step;
        EXPECT_FALSE(submodule_contains(m, prev, {f.elements[i]}));
        Quotient q = quotient(m, prev);
        EXPECT_TRUE(element_annihilator(q.module, q.projection.apply(f.elements[i])) == f.primes[i].ideal());
        prev = f.chain[i];
      }
      EXPECT_TRUE(quotient(m, prev).module.is_zero());
    }
  }
}

TEST(Spectral, Examples) {
  auto z = Ring::integers();
  auto s = is_spectral(ModulePresentation::free(z, 1));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->to_string(), "(0)");
  EXPECT_FALSE(is_spectral(Zmod(z, 4)));
  EXPECT_TRUE(is_spectral(Zmod(z, 2)));
  auto qxy = Ring::rationals({"x", "y"});
  // the ideal (x, y) as a module: generators x, y with syzygy (y, -x)
  ModulePresentation m = coker(qxy, {{"y"}, {"-x"}});
  auto sp = is_spectral(m);
  ASSERT_TRUE(sp);
  EXPECT_EQ(sp->to_string(), "(0)");
  EXPECT_FALSE(is_spectral(ModulePresentation::zero(z)));
}

TEST(Spectral, BruteForceOverZ12) {
  // finite Z/12-modules: P spectral iff P < N for every nonzero N in P, and
  // for finite groups P < N iff exp(P) divides exp(N). Cyclic N suffice.
  auto z12 = Ring::integers_mod(12);
  const long ds[] = {2, 3, 4, 6, 12};
  std::vector<std::vector<long>> shapes;
  for (long a : ds) {
    shapes.push_back({a});
    for (long b : ds) {
      if (a * b <= 144) shapes.push_back({a, b});
      for (long c : ds) {
        if (a * b * c <= 144) shapes.push_back({a, b, c});
      }
    }
  }
  for (const auto& d : shapes) {
    FiniteGroup g{d};
    long exp = 1;
    for (long i = 0; i < g.size(); ++i) exp = std::lcm(exp, g.order(g.element(i)));
    bool brute = true;
    for (long i = 1; i < g.size(); ++i) brute = brute && g.order(g.element(i)) % exp == 0;
    auto got = is_spectral(diag_module(z12, d));
    EXPECT_EQ(static_cast<bool>(got), brute) << d.size();
  }
}

TEST(Spectral, SubquotientRelation) {
  auto z = Ring::integers();
  EXPECT_TRUE(subquotient_rel(Zmod(z, 2), Zmod(z, 12)));
  EXPECT_FALSE(subquotient_rel(Zmod(z, 5), Zmod(z, 12)));
  EXPECT_TRUE(subquotient_rel(Zmod(z, 3), Zmod(z, 3)));
  EXPECT_THROW(subquotient_rel(Zmod(z, 4), Zmod(z, 12)), InvalidArgument);
  EXPECT_THROW(subquotient_rel(ModulePresentation::free(z, 2), Zmod(z, 12)), InvalidArgument);
}

TEST(Ass, EssentialExtensionsPreserveAss) {
  // N subset M essential (every nonzero element has a nonzero multiple in N)
  auto z = Ring::integers();
  std::mt19937_64 rng(11);
  const long ds[] = {2, 3, 4, 6, 8, 9, 12};
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    FiniteGroup g;
    std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) g.d.push_back(ds[rng() % 7]);
    ModulePresentation m = diag_module(z, g.d);
    // N generated by one or two random elements
    std::vector<std::vector<long>> gens;
    for (std::size_t i = 0; i < 1 + rng() % 2; ++i) gens.push_back(g.element(static_cast<long>(rng() % g.size())));
    std::set<std::vector<long>> nset;
    for (long a = 0; a < 12; ++a) {
      for (long b = 0; b < (gens.size() > 1 ? 12 : 1); ++b) {
        std::vector<long> v = g.scale(gens[0], a);
        if (gens.size() > 1) {
          auto w = g.scale(gens[1], b);
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + w[i]) % g.d[i];
        }
        nset.insert(v);
      }
    }
    bool essential = true;
    for (long i = 1; i < g.size() && essential; ++i) {
      auto v = g.element(i);
      bool hit = false;
      for (long c = 1; c <= 12 && !hit; ++c) {
        auto w = g.scale(v, c);
        hit = !g.is_zero(w) && nset.count(w);
      }
      essential = hit;
    }
    if (!essential) continue;
    ++checked;
    std::vector<Column> cols;
    for (const auto& v : gens) {
      Column c;
      for (long x : v) c.push_back(z->from_int(x));
      cols.push_back(c);
    }
    Submodule n = submodule(m, cols);
    EXPECT_EQ(names(ass_enumerate(n.module)), names(ass_enumerate(m)));
  }
  EXPECT_GT(checked, 5);
}
