#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/factor.hpp"
#include "rspec/localalg/bass.hpp"
#include "rspec/localalg/divisible.hpp"
#include "rspec/localalg/torsion.hpp"
#include "test_util.hpp"

using namespace rspec;
using namespace rspec::testing;

namespace {

PrimeIdeal Pr(const RingPtr& r, const std::vector<std::string>& gens) { return PrimeIdeal::certify(I(r, gens)); }

SpecSet V(const RingPtr& r, const std::vector<std::vector<std::string>>& primes) {
  std::vector<PrimeIdeal> ps;
  for (const auto& g : primes) ps.push_back(Pr(r, g));
  return SpecSet::closure(r, ps);
}

ModulePresentation diag(const RingPtr& r, const std::vector<long>& ds) {
  std::vector<Poly> ps;
  for (long d : ds) ps.push_back(r->from_int(d));
  return ModulePresentation::diagonal(r, ps);
}

ModuleMap map_of(const ModulePresentation& s, const ModulePresentation& t,
                 const std::vector<std::vector<long>>& cols) {
  std::vector<Column> cs;
  for (const auto& c : cols) {
    Column col;
    for (long v : c) col.push_back(s.ring()->from_int(v));
    cs.push_back(col);
  }
  return ModuleMap(s, t, Matrix(t.rank(), cs));
}

SpecSet random_z_specset(const RingPtr& z, std::mt19937_64& rng) {
  static const char* ps[] = {"0", "2", "3", "5"};
  std::vector<PrimeIdeal> pts;
  std::size_t k = rng() % 3;
  for (std::size_t i = 0; i < k; ++i) pts.push_back(Pr(z, {ps[rng() % 4]}));
  return SpecSet::closure(z, pts);
}

SpecSet random_xy_specset(const RingPtr& r, std::mt19937_64& rng) {
  static const std::vector<std::vector<std::string>> ps = {{"x"}, {"y"}, {"x", "y"}, {"0"}, {"x", "y-1"}};
  std::vector<PrimeIdeal> pts;
  std::size_t k = rng() % 3;
  for (std::size_t i = 0; i < k; ++i) pts.push_back(Pr(r, ps[rng() % ps.size()]));
  return SpecSet::closure(r, pts);
}

ModulePresentation random_monomial_module(const RingPtr& r, std::mt19937_64& rng) {
  static const char* mons[] = {"0", "x", "y", "x^2", "x*y", "y^2", "1", "0"};
  std::size_t n = 1 + rng() % 2;
  std::vector<Column> rels;
  std::size_t k = 1 + rng() % 3;
  for (std::size_t j = 0; j < k; ++j) {
    Column c(n);
    c[rng() % n] = P(r, mons[rng() % 8]);
    rels.push_back(c);
  }
  return ModulePresentation(r, n, rels);
}

std::vector<PrimeIdeal> z_test_primes(const RingPtr& z, const ModulePresentation& m) {
  std::vector<PrimeIdeal> out = {Pr(z, {"0"})};
  std::set<long> divs;
  for (const auto& d : pid_invariants(m).torsion) {
    for (const auto& f : factor_integer(abs(z->to_int(d)))) divs.insert(f.prime.get_si());
  }
  for (long p : divs) out.push_back(Pr(z, {std::to_string(p)}));
  int extra = 0;
  for (long p : {5, 7, 11, 13, 17}) {
    if (divs.count(p) || extra == 3) continue;
    out.push_back(Pr(z, {std::to_string(p)}));
    ++extra;
  }
  return out;
}

}  // namespace

TEST(Torsion, Examples) {
  auto z = Ring::integers();
  TorsionDecomposition d = torsion_decompose(Zmod(z, 12), V(z, {{"2"}}));
  EXPECT_EQ(z_order(d.x.module), 4);
  EXPECT_EQ(z_order(d.y.module), 3);
  EXPECT_TRUE(pid_isomorphic(d.x.module, Zmod(z, 4)));
  TorsionDecomposition all = torsion_decompose(diag(z, {12, 0}), V(z, {{"0"}}));
  EXPECT_TRUE(all.y.module.is_zero());
  EXPECT_TRUE(pid_isomorphic(all.x.module, diag(z, {12, 0})));
  TorsionDecomposition none = torsion_decompose(Zmod(z, 12), SpecSet(z));
  EXPECT_TRUE(none.x.module.is_zero());
  EXPECT_TRUE(pid_isomorphic(none.y.module, Zmod(z, 12)));
  auto z12 = Ring::integers_mod(12);
  TorsionDecomposition w = torsion_decompose(ModulePresentation::free(z12, 1), V(z12, {{"2"}, {"3"}}));
  EXPECT_TRUE(w.y.module.is_zero());
}

TEST(Torsion, Membership) {
  auto z = Ring::integers();
  EXPECT_TRUE(torsion_class_member(Zmod(z, 12), V(z, {{"2"}, {"3"}})));
  EXPECT_FALSE(torsion_class_member(Zmod(z, 12), V(z, {{"2"}})));
  EXPECT_TRUE(torsion_free_member(ModulePresentation::free(z, 1), V(z, {{"2"}})));
  EXPECT_FALSE(torsion_free_member(Zmod(z, 6), V(z, {{"2"}})));
  for (const auto& s : {V(z, {{"2"}}), SpecSet(z), V(z, {{"0"}})}) {
    EXPECT_TRUE(torsion_class_member(ModulePresentation::zero(z), s));
    EXPECT_TRUE(torsion_free_member(ModulePresentation::zero(z), s));
  }
  EXPECT_TRUE(torsion_class_member(ModulePresentation::free(z, 2), V(z, {{"0"}})));
  auto qxy = Ring::rationals({"x", "y"});
  ModulePresentation m = ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"}));
  EXPECT_TRUE(torsion_class_member(m, V(qxy, {{"x"}})));
  EXPECT_FALSE(torsion_class_member(m, V(qxy, {{"x", "y"}})));
  EXPECT_FALSE(torsion_free_member(m, V(qxy, {{"x", "y"}})));
  EXPECT_FALSE(torsion_free_member(m, V(qxy, {{"y"}})));
  EXPECT_TRUE(torsion_free_member(m, V(qxy, {{"x-1"}})));
}

TEST(Torsion, HomOrthogonality) {
  auto z = Ring::integers();
  EXPECT_TRUE(hom_orthogonality_check(Zmod(z, 4), Zmod(z, 3)));
  EXPECT_FALSE(hom_orthogonality_check(Zmod(z, 4), Zmod(z, 4)));
  EXPECT_TRUE(hom_orthogonality_check(Zmod(z, 4), ModulePresentation::free(z, 1)));
}

TEST(Torsion, PairLawsOverZ) {
  auto z = Ring::integers();
  std::mt19937_64 rng(21);
  for (int t = 0; t < 120; ++t) {
    ModulePresentation m = random_z_module(z, rng), n = random_z_module(z, rng);
    SpecSet s = random_z_specset(z, rng);
    TorsionDecomposition dm = torsion_decompose(m, s), dn = torsion_decompose(n, s);
    EXPECT_TRUE(torsion_class_member(dm.x.module, s));
    EXPECT_TRUE(torsion_free_member(dm.y.module, s));
    EXPECT_TRUE(hom_orthogonality_check(dm.x.module, dn.y.module)) << m.to_string() << " " << n.to_string();
    // orders multiply
    if (z_order(m) != 0) EXPECT_EQ(z_order(m), z_order(dm.x.module) * z_order(dm.y.module));
    // heredity: random submodules of X stay in T(S)
    if (!dm.x.module.is_zero()) {
      Submodule sub = submodule(dm.x.module, {random_element(dm.x.module, rng)});
      EXPECT_TRUE(torsion_class_member(sub.module, s));
    }
  }
}

TEST(Torsion, PairLawsOverMonomialData) {
  auto r = Ring::rationals({"x", "y"});
  std::mt19937_64 rng(22);
  for (int t = 0; t < 80; ++t) {
    ModulePresentation m = random_monomial_module(r, rng), n = random_monomial_module(r, rng);
    SpecSet s = random_xy_specset(r, rng);
    TorsionDecomposition dm = torsion_decompose(m, s), dn = torsion_decompose(n, s);
    EXPECT_TRUE(torsion_free_member(dm.y.module, s));
    EXPECT_TRUE(hom_orthogonality_check(dm.x.module, dn.y.module)) << m.to_string() << " | " << s.to_string();
    if (!dm.x.module.is_zero()) {
      Submodule sub = submodule(dm.x.module, {random_element(dm.x.module, rng)});
      EXPECT_TRUE(torsion_class_member(sub.module, s));
    }
  }
}

TEST(Torsion, InjectiveCogenerationOverZ) {
  // M in T(S) iff Hom(M, E(R/q)) = 0 for the sampled primes q outside S
  auto z = Ring::integers();
  std::mt19937_64 rng(23);
  const long qs[] = {0, 2, 3, 5, 7};
  for (int t = 0; t < 80; ++t) {
    ModulePresentation m = random_z_module(z, rng);
    SpecSet s = random_z_specset(z, rng);
    bool all_zero = true;
    for (long q : qs) {
      PrimeIdeal pq = Pr(z, {std::to_string(q)});
      if (s.contains(pq)) continue;
      DivisibleGroup e = divisible_injective_hull(ModulePresentation::cyclic(pq.ideal()));
      all_zero = all_zero && !divisible_hom_nonzero(m, e);
    }
    EXPECT_EQ(torsion_class_member(m, s), all_zero) << m.to_string() << " " << s.to_string();
  }
}

TEST(Torsion, InjectiveHullsOfPoints) {
  auto z = Ring::integers();
  std::mt19937_64 rng(24);
  const long qs[] = {0, 2, 3, 5, 7, 11};
  for (int t = 0; t < 30; ++t) {
    SpecSet s = random_z_specset(z, rng);
    for (long q : qs) {
      PrimeIdeal pq = Pr(z, {std::to_string(q)});
      DivisibleGroup e = divisible_injective_hull(ModulePresentation::cyclic(pq.ideal()));
      if (!s.contains(pq)) {
        for (long a : qs) EXPECT_FALSE(divisible_ass(e, Pr(z, {std::to_string(a)})) && s.contains(Pr(z, {std::to_string(a)})));
      } else {
        for (long a : qs) {
          PrimeIdeal pa = Pr(z, {std::to_string(a)});
          if (divisible_supp(e, pa)) EXPECT_TRUE(s.contains(pa));
        }
      }
    }
  }
}

TEST(Bass, NonvanishingExamples) {
  auto z = Ring::integers();
  auto zz = ModulePresentation::free(z, 1);
  EXPECT_TRUE(bass_nonvanishing(Pr(z, {"0"}), 0, zz));
  EXPECT_FALSE(bass_nonvanishing(Pr(z, {"2"}), 0, zz));
  EXPECT_TRUE(bass_nonvanishing(Pr(z, {"2"}), 1, zz));
  EXPECT_TRUE(bass_nonvanishing(Pr(z, {"3"}), 1, Zmod(z, 12)));
  EXPECT_FALSE(bass_nonvanishing(Pr(z, {"5"}), 1, Zmod(z, 12)));
}

TEST(Bass, DimensionExamples) {
  auto z = Ring::integers();
  for (const char* p : {"2", "3", "5", "7"}) EXPECT_EQ(bass_dimension(Pr(z, {p}), 1, ModulePresentation::free(z, 1)), 1u);
  EXPECT_EQ(bass_dimension(Pr(z, {"2"}), 0, ModulePresentation::free(z, 1)), 0u);
  EXPECT_EQ(bass_dimension(Pr(z, {"0"}), 0, ModulePresentation::free(z, 3)), 3u);
  EXPECT_EQ(bass_dimension(Pr(z, {"2"}), 0, diag(z, {2, 4, 3})), 2u);
  auto qxy = Ring::rationals({"x", "y"});
  PrimeIdeal m = Pr(qxy, {"x", "y"});
  EXPECT_EQ(bass_dimension(m, 0, ModulePresentation::cyclic(m.ideal())), 1u);
  EXPECT_EQ(bass_dimension(m, 2, ModulePresentation::free(qxy, 1)), 1u);
  EXPECT_EQ(bass_dimension(m, 1, ModulePresentation::free(qxy, 1)), 0u);
  PrimeIdeal x = Pr(qxy, {"x"});
  EXPECT_EQ(bass_dimension(x, 1, ModulePresentation::free(qxy, 2)), 2u);
}

TEST(Bass, DimensionMatchesNonvanishing) {
  auto z = Ring::integers();
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    ModulePresentation m = random_z_module(z, rng);
    for (const auto& p : z_test_primes(z, m)) {
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(bass_dimension(p, k, m) > 0, bass_nonvanishing(p, k, m));
    }
  }
}

TEST(Bass, CosyzygyExamples) {
  auto z = Ring::integers();
  auto zz = ModulePresentation::free(z, 1);
  for (const char* p : {"2", "3", "5", "7", "11"}) EXPECT_TRUE(cosyzygy_ass_membership(Pr(z, {p}), 1, zz));
  EXPECT_FALSE(cosyzygy_ass_membership(Pr(z, {"0"}), 1, zz));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    ModulePresentation m = random_z_module(z, rng);
    for (const auto& p : z_test_primes(z, m)) {
      EXPECT_FALSE(cosyzygy_ass_membership(p, 2, m));
      EXPECT_EQ(cosyzygy_ass_membership(p, 0, m), ass_contains(p, m));
    }
  }
}

TEST(Bass, AgreesWithDivisibleModel) {
  auto z = Ring::integers();
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    ModulePresentation m = random_z_module(z, rng);
    for (std::size_t k = 0; k < 3; ++k) {
      DivisibleGroup c = divisible_cosyzygy(m, k);
      for (const auto& p : z_test_primes(z, m))
        EXPECT_EQ(divisible_ass(c, p), cosyzygy_ass_membership(p, k, m)) << m.to_string() << " k=" << k << " " << p.to_string();
    }
    // Supp(E(M)) = Supp(M)
    DivisibleGroup e = divisible_injective_hull(m);
    for (const auto& p : z_test_primes(z, m)) EXPECT_EQ(divisible_supp(e, p), supp_contains(p, m));
  }
}

TEST(Bass, KZeroIsAss) {
  auto qx = Ring::rationals({"x"});
  std::mt19937_64 rng(43);
  for (int t = 0; t < 15; ++t) {
    ModulePresentation m = random_kx_module(qx, rng);
    for (const auto& p : {Pr(qx, {"x"}), Pr(qx, {"x+1"}), Pr(qx, {"x^2+1"}), Pr(qx, {"0"}), Pr(qx, {"x-3"})})
      EXPECT_EQ(cosyzygy_ass_membership(p, 0, m), ass_contains(p, m));
  }
}

TEST(Divisible, Examples) {
  auto z = Ring::integers();
  DivisibleGroup e = divisible_injective_hull(ModulePresentation::free(z, 1));
  EXPECT_EQ(e, DivisibleGroup(1, 0, {}));
  DivisibleGroup c = divisible_cosyzygy(ModulePresentation::free(z, 1), 1);
  EXPECT_EQ(c, DivisibleGroup(0, 1, {}));
  DivisibleGroup c12 = divisible_cosyzygy(Zmod(z, 12), 1);
  EXPECT_EQ(c12, DivisibleGroup(0, 0, {{2, 1}, {3, 1}}));
  EXPECT_EQ(c12.to_string(), "rank 0; default 0; exceptions {2: 1, 3: 1}");
  EXPECT_TRUE(divisible_cosyzygy(Zmod(z, 12), 2).is_zero());
  EXPECT_EQ(DivisibleGroup(0, 1, {{2, 1}}).exceptions().size(), 0u);
  EXPECT_THROW(divisible_injective_hull(ModulePresentation::free(Ring::integers_mod(4), 1)), NotIntegerRing);
  EXPECT_THROW(DivisibleGroup(0, 0, {{4, 1}}), InvalidArgument);
}

TEST(Bass, SymbolicResolution) {
  auto z = Ring::integers();
  BassTable t = symbolic_injective_resolution(ModulePresentation::free(z, 1), 1,
                                              std::vector<PrimeIdeal>{Pr(z, {"0"}), Pr(z, {"2"}), Pr(z, {"3"})});
  EXPECT_EQ(t.injective_term(0), "E(R/(0))^1");
  EXPECT_EQ(t.injective_term(1), "E(R/(2))^1 + E(R/(3))^1");
  BassTable u = symbolic_injective_resolution(Zmod(z, 12), 2);
  EXPECT_EQ(u.injective_term(0), "E(R/(2))^1 + E(R/(3))^1");
  EXPECT_EQ(u.injective_term(1), "E(R/(2))^1 + E(R/(3))^1");
  EXPECT_EQ(u.injective_term(2), "0");
  BassTable zero = symbolic_injective_resolution(ModulePresentation::zero(z), 2);
  EXPECT_TRUE(zero.candidates().empty());
  auto qxy = Ring::rationals({"x", "y"});
  EXPECT_THROW(symbolic_injective_resolution(ModulePresentation::free(qxy, 1), 1), NeedCandidates);
  BassTable k = symbolic_injective_resolution(ModulePresentation::free(qxy, 1), 2,
                                              std::vector<PrimeIdeal>{Pr(qxy, {"0"}), Pr(qxy, {"x"}), Pr(qxy, {"x", "y"})});
  EXPECT_EQ(k.injective_term(0), "E(R/(0))^1");
  EXPECT_EQ(k.injective_term(1), "E(R/(x))^1");
  EXPECT_EQ(k.injective_term(2), "E(R/(x, y))^1");
  auto art = quotient_ring(qxy, {"x^2", "y^2"});
  BassTable a = symbolic_injective_resolution(ModulePresentation::free(art, 1), 1);
  EXPECT_EQ(a.injective_term(0), "E(R/(x, y))^1");
  EXPECT_EQ(a.injective_term(1), "0");
}

TEST(Bass, ShortExactSequences) {
  auto z = Ring::integers();
  auto zz = ModulePresentation::free(z, 1);
  ShortExactSequence s1(map_of(zz, zz, {{12}}), map_of(zz, Zmod(z, 12), {{1}}));
  std::vector<PrimeIdeal> c = {Pr(z, {"0"}), Pr(z, {"2"}), Pr(z, {"3"}), Pr(z, {"5"})};
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(cor710_check(s1, k, c));
  ShortExactSequence s2(map_of(Zmod(z, 2), Zmod(z, 4), {{2}}), map_of(Zmod(z, 4), Zmod(z, 2), {{1}}));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_TRUE(cor710_check(s2, k, c));
  auto sum = diag(z, {0, 6});
  ShortExactSequence s3(map_of(zz, sum, {{1, 0}}), map_of(sum, Zmod(z, 6), {{0}, {1}}));
  for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(cor710_check(s3, k, c));
  EXPECT_THROW(ShortExactSequence(map_of(zz, zz, {{2}}), map_of(zz, Zmod(z, 4), {{1}})), InvalidArgument);
  EXPECT_THROW(ShortExactSequence(map_of(zz, zz, {{0}}), map_of(zz, zz, {{1}})), InvalidArgument);
}
