#include <gtest/gtest.h>

#include <random>

#include "rspec/classify/classify.hpp"
#include "rspec/kernel/errors.hpp"
#include "test_util.hpp"

using namespace rspec;
using namespace rspec::testing;

namespace {

PrimeIdeal Pr(const RingPtr& r, const std::vector<std::string>& gens) { return PrimeIdeal::certify(I(r, gens)); }
PrimeIdeal Zp(const RingPtr& z, long p) { return Pr(z, {std::to_string(p)}); }

SpecSet Vz(const RingPtr& z, const std::vector<long>& ps) {
  std::vector<PrimeIdeal> pts;
  for (long p : ps) pts.push_back(Zp(z, p));
  return SpecSet::closure(z, pts);
}

std::vector<long> random_subset(std::mt19937_64& rng, const std::vector<long>& from) {
  std::vector<long> out;
  for (long p : from) {
    if (rng() % 2) out.push_back(p);
  }
  return out;
}

ModulePresentation z_cyclic(const RingPtr& z, long p) {
  return p == 0 ? ModulePresentation::free(z, 1) : Zmod(z, p);
}

}  // namespace

TEST(Serre, Examples) {
  auto z = Ring::integers();
  EXPECT_TRUE(serre_member(Zmod(z, 12), Vz(z, {2, 3})));
  EXPECT_FALSE(serre_member(Zmod(z, 12), Vz(z, {2})));
  // minimal primes over (12) are (2), (3); (3) is outside V(2)
  EXPECT_FALSE(support(Zmod(z, 12)).subset_of(Vz(z, {2})));
  EXPECT_TRUE(serre_member(ModulePresentation::zero(z), SpecSet(z)));
  EXPECT_FALSE(serre_member(Zmod(z, 2), SpecSet(z)));
}

TEST(Serre, SuppOfFamily) {
  auto z = Ring::integers();
  EXPECT_TRUE(supp_of_family(z, {Zmod(z, 12)}) == Vz(z, {2, 3}));
  EXPECT_TRUE(supp_of_family(z, {}).empty());
  EXPECT_TRUE(supp_of_family(z, {ModulePresentation::free(z, 1)}) == Vz(z, {0}));
  auto qxy = Ring::rationals({"x", "y"});
  SpecSet s = supp_of_family(qxy, {ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"})), ModulePresentation::cyclic(I(qxy, {"y"}))});
  EXPECT_EQ(s.to_string(), "closure{(x), (y)}");
}

TEST(Serre, MembershipMatchesMinimalPrimes) {
  auto z = Ring::integers();
  std::mt19937_64 rng(51);
  for (int t = 0; t < 120; ++t) {
    std::vector<long> ps = random_subset(rng, {0, 2, 3, 5});
    SpecSet s = Vz(z, ps);
    std::vector<ModulePresentation> fam;
    for (long p : ps) fam.push_back(z_cyclic(z, p));
    SpecSet back = supp_of_family(z, fam);
    EXPECT_TRUE(back == s);
    ModulePresentation m = random_z_module(z, rng);
    bool oracle = support(m).subset_of(s);
    EXPECT_EQ(serre_member(m, s), oracle) << m.to_string() << " " << s.to_string();
    EXPECT_EQ(serre_member(m, back), oracle);
  }
  auto qx = Ring::rationals({"x"});
  const std::vector<std::vector<std::string>> pool = {{"x"}, {"x+1"}, {"x^2+1"}, {"0"}};
  for (int t = 0; t < 30; ++t) {
    std::vector<PrimeIdeal> pts;
    for (const auto& g : pool) {
      if (rng() % 2) pts.push_back(Pr(qx, g));
    }
    SpecSet s = SpecSet::closure(qx, pts);
    ModulePresentation m = random_kx_module(qx, rng);
    EXPECT_EQ(serre_member(m, s), support(m).subset_of(s)) << m.to_string();
  }
}

TEST(Resolving, Examples) {
  auto z = Ring::integers();
  Generator g = Generator::ring(z);
  EXPECT_TRUE(one_resolving_valid(Vz(z, {2}), g));
  EXPECT_FALSE(one_resolving_valid(Vz(z, {0}), g));
  EXPECT_TRUE(one_resolving_member(Zmod(z, 3), Vz(z, {2})));
  EXPECT_FALSE(one_resolving_member(Zmod(z, 2), Vz(z, {2})));
}

TEST(Resolving, GeneratorWitness) {
  auto z = Ring::integers();
  ModulePresentation g = coker(z, {{"2", "0"}, {"0", "0"}});  // Z/2 + Z
  ModuleMap epi(g, ModulePresentation::free(z, 1), Matrix(1, {{z->from_int(0)}, {z->from_int(1)}}));
  Generator gen = Generator::with_epimorphism(g, epi);
  EXPECT_FALSE(one_resolving_valid(Vz(z, {2}), gen));
  EXPECT_TRUE(one_resolving_valid(Vz(z, {3}), gen));
  ModuleMap not_onto(g, ModulePresentation::free(z, 1), Matrix(1, {{z->from_int(0)}, {z->from_int(2)}}));
  EXPECT_THROW(Generator::with_epimorphism(g, not_onto), InvalidArgument);
}

TEST(Resolving, ClosureLaws) {
  auto z = Ring::integers();
  std::mt19937_64 rng(52);
  for (int t = 0; t < 40; ++t) {
    SpecSet s = Vz(z, random_subset(rng, {2, 3, 5}));
    ASSERT_TRUE(one_resolving_valid(s, Generator::ring(z)));
    EXPECT_TRUE(one_resolving_member(ModulePresentation::free(z, 1), s));
    ModulePresentation a = random_z_module(z, rng), b = random_z_module(z, rng);
    bool ma = one_resolving_member(a, s), mb = one_resolving_member(b, s);
    EXPECT_EQ(one_resolving_member(direct_sum(a, b), s), ma && mb);
    if (!mb) continue;
    // kernel of a random epimorphism R^k -> B lies in the class
    std::vector<Column> cols;
    for (std::size_t i = 0; i < b.rank(); ++i) cols.push_back(unit_column(*z, b.rank(), i));
    for (int e = 0; e < 2; ++e) cols.push_back(random_element(b, rng));
    ModuleMap epi(ModulePresentation::free(z, cols.size()), b, Matrix(b.rank(), cols));
    ASSERT_TRUE(cokernel(epi).module.is_zero());
    EXPECT_TRUE(one_resolving_member(kernel(epi).module, s));
  }
}

TEST(Resolving, TorsionFreeComplement) {
  // q outside S: Z/q is S-torsion-free and q is associated to that family;
  // p in S is never associated to an S-torsion-free module
  auto z = Ring::integers();
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    std::vector<long> ps = random_subset(rng, {2, 3, 5, 7});
    SpecSet s = Vz(z, ps);
    std::vector<ModulePresentation> free_family;
    for (long q : {2, 3, 5, 7, 11}) {
      if (s.contains(Zp(z, q))) continue;
      EXPECT_TRUE(torsion_free_member(Zmod(z, q), s));
      free_family.push_back(Zmod(z, q));
      EXPECT_TRUE(phi_of_family(z, {Zmod(z, q)}).contains(Zp(z, q)));
    }
    for (int k = 0; k < 5; ++k) {
      ModulePresentation m = random_z_module(z, rng);
      if (!torsion_free_member(m, s)) continue;
      for (long p : ps) EXPECT_FALSE(ass_contains(Zp(z, p), m));
    }
  }
}

TEST(GSeq, Examples) {
  auto z = Ring::integers();
  Generator g = Generator::ring(z);
  GSequence y(std::vector<SpecSet>{Vz(z, {2}), SpecSet(z)}, g);
  ClauseReport r = g_sequence_validate(y);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.completeness, Completeness::Proved);
  GSequence bad(std::vector<SpecSet>{Vz(z, {3}), Vz(z, {3})}, g);
  ClauseReport rb = g_sequence_validate(bad);
  EXPECT_FALSE(rb.holds);
  EXPECT_TRUE(rb.clauses[0].holds);
  EXPECT_FALSE(rb.clauses[1].holds);
  EXPECT_EQ(rb.clauses[1].witness->to_string(), "(3)");
  EXPECT_TRUE(g_sequence_validate(GSequence(std::vector<SpecSet>{SpecSet(z), SpecSet(z)}, g)).holds);
  EXPECT_THROW(GSequence(std::vector<SpecSet>{Vz(z, {2}), Vz(z, {3})}, g), InvalidArgument);
  GSequence all(std::vector<SpecSet>{Vz(z, {0})}, g);
  EXPECT_FALSE(g_sequence_validate(all).holds);
}

TEST(GSeq, Membership) {
  auto z = Ring::integers();
  GSequence y(std::vector<SpecSet>{Vz(z, {2}), SpecSet(z)}, Generator::ring(z));
  EXPECT_TRUE(c_tilde_member(Zmod(z, 3), y).holds);
  EXPECT_FALSE(c_tilde_member(Zmod(z, 2), y).holds);
  EXPECT_TRUE(c_tilde_member(ModulePresentation::zero(z), y).holds);
  GSequence w(std::vector<SpecSet>{Vz(z, {0}), Vz(z, {0})}, Generator::ring(z));
  EXPECT_TRUE(c_tilde_member(ModulePresentation::zero(z), w).holds);
  ClauseReport r = c_tilde_member(Zmod(z, 3), w);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.clauses[0].witness->to_string(), "(3)");
}

TEST(GSeq, Truncation) {
  auto z = Ring::integers();
  GSequence y(std::vector<SpecSet>{Vz(z, {2}), SpecSet(z)}, Generator::ring(z));
  GSequence t = c_tilde_truncate(y, 2);
  ASSERT_EQ(t.length(), 1u);
  EXPECT_TRUE(t.y(1).empty());
  GSequence id = c_tilde_truncate(y, 1);
  EXPECT_EQ(id.length(), 2u);
  EXPECT_TRUE(id.y(1) == y.y(1));
  EXPECT_TRUE(g_sequence_validate(t).holds);
  EXPECT_THROW(c_tilde_truncate(y, 0), InvalidArgument);
  EXPECT_THROW(c_tilde_truncate(y, 3), InvalidArgument);
  // clause sets of truncations are suffixes
  for (std::size_t j = 1; j <= y.length(); ++j) {
    GSequence tj = c_tilde_truncate(y, j);
    for (std::size_t i = 1; i <= tj.length(); ++i) EXPECT_TRUE(tj.y(i) == y.y(i + j - 1));
  }
}

TEST(GSeq, SequencesAreSeparatedByWitnesses) {
  auto z = Ring::integers();
  std::vector<std::vector<long>> subsets;
  const std::vector<long> base = {0, 2, 3, 5};
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<long> s;
    for (unsigned b = 0; b < 4; ++b) {
      if (mask & (1u << b)) s.push_back(base[b]);
    }
    subsets.push_back(s);
  }
  std::vector<GSequence> valid;
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      SpecSet y1 = Vz(z, a), y2 = Vz(z, b);
      if (!y2.subset_of(y1)) continue;
      GSequence y(std::vector<SpecSet>{y1, y2}, Generator::ring(z));
      ClauseReport r = g_sequence_validate(y);
      EXPECT_EQ(r.completeness, Completeness::Proved);
      if (!r.holds) continue;
      bool dup = false;
      for (const auto& v : valid) dup = dup || (v.y(1) == y1 && v.y(2) == y2);
      if (!dup) valid.push_back(y);
    }
  }
  EXPECT_EQ(valid.size(), 8u);
  std::vector<ModulePresentation> probes = {ModulePresentation::free(z, 1), Zmod(z, 2), Zmod(z, 3), Zmod(z, 5), Zmod(z, 30)};
  for (std::size_t i = 0; i < valid.size(); ++i) {
    for (std::size_t j = i + 1; j < valid.size(); ++j) {
      bool separated = false;
      for (const auto& m : probes) separated = separated || c_tilde_member(m, valid[i]).holds != c_tilde_member(m, valid[j]).holds;
      EXPECT_TRUE(separated) << i << " " << j;
    }
  }
}

TEST(GSeq, SampledOverMultivariate) {
  auto qxy = Ring::rationals({"x", "y"});
  Generator g = Generator::ring(qxy);
  GSequence y(std::vector<SpecSet>{SpecSet::closure(qxy, {Pr(qxy, {"x"})})}, g);
  ClauseReport r = g_sequence_validate(y, {Pr(qxy, {"x", "y"})});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.completeness, Completeness::Sampled);
  EXPECT_EQ(r.clauses[0].checked.size(), 2u);
  ClauseReport m = c_tilde_member(ModulePresentation::cyclic(I(qxy, {"x^2", "x*y"})), y, {Pr(qxy, {"x", "y"})});
  EXPECT_FALSE(m.holds);
}

TEST(Points, PsiPhi) {
  auto z = Ring::integers();
  PointSet two = PointSet::finite(z, {Zp(z, 2)});
  EXPECT_TRUE(psi_member(Zmod(z, 4), two));
  EXPECT_FALSE(psi_member(Zmod(z, 6), two));
  EXPECT_TRUE(phi_of_family(z, {Zmod(z, 12)}) == PointSet::finite(z, {Zp(z, 3), Zp(z, 2)}));
  PointSet none = PointSet::finite(z, {});
  EXPECT_TRUE(psi_member(ModulePresentation::zero(z), none));
  EXPECT_FALSE(psi_member(Zmod(z, 5), none));
  EXPECT_FALSE(psi_member(ModulePresentation::free(z, 1), none));
  EXPECT_THROW(PointSet::all(z), InvalidArgument);
  auto z12 = Ring::integers_mod(12);
  EXPECT_TRUE(psi_member(ModulePresentation::free(z12, 2), PointSet::all(z12)));
}

TEST(Points, RoundTrip) {
  auto z = Ring::integers();
  std::mt19937_64 rng(54);
  for (int t = 0; t < 60; ++t) {
    std::vector<long> ps = random_subset(rng, {0, 2, 3, 5, 7, 11});
    std::vector<PrimeIdeal> pts;
    std::vector<ModulePresentation> fam;
    for (long p : ps) {
      pts.push_back(Zp(z, p));
      fam.push_back(z_cyclic(z, p));
    }
    PointSet s = PointSet::finite(z, pts);
    EXPECT_TRUE(phi_of_family(z, fam) == s) << s.to_string();
    for (const auto& m : fam) EXPECT_TRUE(psi_member(m, s));
  }
}
