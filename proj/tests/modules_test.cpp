#include <gtest/gtest.h>

#include "rspec/kernel/errors.hpp"
#include "test_util.hpp"

using namespace rspec;
using namespace rspec::testing;

namespace {

std::vector<std::string> factor_strings(const SmithForm& sf) { return strs(sf.euclid, sf.invariant_factors); }

Matrix int_matrix(const RingPtr& z, const std::vector<std::vector<long>>& rows) {
  Matrix m = Matrix::zero(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = z->from_int(rows[i][j]);
  }
  return m;
}

// gcd of all k x k minors of an integer matrix.
mpz_class determinantal_divisor(const RingPtr& z, const Matrix& a, std::size_t k) {
  std::vector<std::size_t> rs, cs;
  mpz_class g = 0;
  std::function<void(std::size_t, std::size_t)> pick_rows, pick_cols;
  pick_cols = [&](std::size_t start, std::size_t need) {
    if (need == 0) {
      Matrix sub = Matrix::zero(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rs[i], cs[j]);
      }
      mpz_class d = z->to_int(determinant(*z, sub));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t j = start; j < a.ncols(); ++j) {
      cs.push_back(j);
      pick_cols(j + 1, need - 1);
      cs.pop_back();
    }
  };
  pick_rows = [&](std::size_t start, std::size_t need) {
    if (need == 0) {
      pick_cols(0, k);
      return;
    }
    for (std::size_t i = start; i < a.rows; ++i) {
      rs.push_back(i);
      pick_rows(i + 1, need - 1);
      rs.pop_back();
    }
  };
  pick_rows(0, k);
  return g;
}

bool is_unit_det(const SmithForm& sf, const Matrix& m) {
  Poly d = determinant(*sf.euclid, m);
  return !d.is_zero() && d.is_constant() &&
         (sf.euclid->engine() != Engine::Integer || abs(sf.euclid->to_int(d)) == 1);
}

}  // namespace

TEST(Smith, Examples) {
  auto z = Ring::integers();
  EXPECT_EQ(factor_strings(smith_normal_form(*z, int_matrix(z, {{2, 0}, {0, 3}}))),
            (std::vector<std::string>{"1", "6"}));
  EXPECT_EQ(factor_strings(smith_normal_form(*z, int_matrix(z, {{1, 0}, {0, 1}}))),
            (std::vector<std::string>{"1", "1"}));
  EXPECT_EQ(factor_strings(smith_normal_form(*z, int_matrix(z, {{12}}))), (std::vector<std::string>{"12"}));
  auto r = Ring::rationals({"x", "y"});
  EXPECT_THROW(smith_normal_form(*r, Matrix::zero(1, 1)), NotPID);
  auto z12 = Ring::integers_mod(12);
  SmithForm sf = smith_normal_form(*z12, int_matrix(z12, {{8}}));
  EXPECT_TRUE(sf.lifted);
  EXPECT_EQ(factor_strings(sf), (std::vector<std::string>{"4"}));
}

TEST(Smith, DeterminantalDivisorOracle) {
  auto z = Ring::integers();
  std::mt19937_64 rng(11);
  for (int round = 0; round < 60; ++round) {
    std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    Matrix a = Matrix::zero(rows, cols);
    for (auto& c : a.cols) {
      for (auto& x : c) x = z->from_int(static_cast<long>(rng() % 13) - 6);
    }
    SmithForm sf = smith_normal_form(*z, a);
    EXPECT_TRUE(is_unit_det(sf, sf.U));
    EXPECT_TRUE(is_unit_det(sf, sf.V));
    mpz_class prev = 1;
    for (std::size_t k = 1; k <= sf.invariant_factors.size(); ++k) {
      mpz_class dk = determinantal_divisor(z, a, k);
      mpz_class expect = prev == 0 ? mpz_class(0) : dk / prev;
      EXPECT_EQ(z->to_int(sf.invariant_factors[k - 1]), expect);
      prev = dk;
    }
    for (std::size_t k = 1; k < sf.invariant_factors.size(); ++k) {
      mpz_class a1 = z->to_int(sf.invariant_factors[k - 1]), a2 = z->to_int(sf.invariant_factors[k]);
      if (a1 != 0) EXPECT_TRUE(mpz_divisible_p(a2.get_mpz_t(), a1.get_mpz_t()));
    }
  }
}

TEST(Smith, PolynomialTransformsInvertible) {
  auto r = Ring::rationals({"x"});
  std::mt19937_64 rng(12);
  for (int round = 0; round < 40; ++round) {
    ModulePresentation m = random_kx_module(r, rng, 3);
    SmithForm sf = smith_normal_form(*r, m.relation_matrix());
    EXPECT_TRUE(is_unit_det(sf, sf.U));
    EXPECT_TRUE(is_unit_det(sf, sf.V));
    for (const auto& d : sf.invariant_factors) {
      if (!d.is_zero()) EXPECT_EQ(d.lead().coef, 1);
    }
  }
}

TEST(Modules, AnnihilatorExamples) {
  auto z = Ring::integers();
  EXPECT_EQ(Zmod(z, 12).annihilator(), I(z, {"12"}));
  EXPECT_TRUE(direct_sum(ModulePresentation::free(z, 1), Zmod(z, 4)).annihilator().is_zero());
  auto r = Ring::rationals({"x", "y"});
  Ideal i = I(r, {"x^2", "x*y"});
  EXPECT_EQ(ModulePresentation::cyclic(i).annihilator(), i);
  EXPECT_EQ(coker(r, {{"x^2", "x*y"}}).annihilator(), i);
  EXPECT_TRUE(ModulePresentation::zero(r).annihilator().is_unit());
  EXPECT_EQ(coker(r, {{"x", "0"}, {"0", "y"}}).annihilator(), I(r, {"x*y"}));
}

TEST(Modules, ZeroRecognition) {
  auto z = Ring::integers();
  EXPECT_TRUE(coker(z, {{"2", "3"}}).is_zero());
  EXPECT_FALSE(coker(z, {{"2", "4"}}).is_zero());
  auto r = Ring::rationals({"x"});
  EXPECT_TRUE(coker(r, {{"x", "x+1"}}).is_zero());
}

TEST(Modules, HomExamples) {
  auto z = Ring::integers();
  HomModule h = hom_module(Zmod(z, 4), Zmod(z, 6));
  EXPECT_EQ(pid_invariants_string(h.module), "free 0; torsion [2]");
  EXPECT_TRUE(hom_module(Zmod(z, 2), ModulePresentation::free(z, 1)).module.is_zero());
  ModulePresentation m = direct_sum(Zmod(z, 6), ModulePresentation::free(z, 1));
  HomModule e = hom_module(m, m);
  EXPECT_FALSE(e.module.is_zero());
  for (std::size_t i = 0; i < e.vec_generators.size(); ++i) EXPECT_NO_THROW(e.generator_map(i));
  // Hom(Z/4, Z/6) generator is the map 1 -> 3
  ModuleMap g = h.generator_map(0);
  EXPECT_FALSE(g.is_zero());
  EXPECT_TRUE(Zmod(z, 6).element_is_zero(g.apply({z->from_int(2)})));
  auto r = Ring::rationals({"x", "y"});
  ModulePresentation q = ModulePresentation::cyclic(I(r, {"x^2", "x*y"}));
  HomModule hq = hom_module(ModulePresentation::cyclic(I(r, {"x", "y"})), q);
  EXPECT_FALSE(hq.module.is_zero());
  EXPECT_EQ(hq.module.annihilator(), I(r, {"x", "y"}));
}

TEST(Modules, FreeResolutionExamples) {
  auto z = Ring::integers();
  FreeResolution res = free_resolution(Zmod(z, 5), 3);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(free_resolution(ModulePresentation::free(z, 2), 3).ranks(), (std::vector<std::size_t>{2}));
  auto r = Ring::rationals({"x", "y"});
  FreeResolution k = free_resolution(ModulePresentation::cyclic(I(r, {"x", "y"})), 2);
  EXPECT_EQ(k.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  auto z4 = Ring::integers_mod(4);
  EXPECT_EQ(free_resolution(Zmod(z4, 2), 4).ranks(), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}

TEST(Modules, ExtExamples) {
  auto z = Ring::integers();
  auto zz = ModulePresentation::free(z, 1);
  for (long p : {2L, 3L, 7L}) {
    EXPECT_EQ(pid_invariants_string(ext_module(1, Zmod(z, p), zz)), "free 0; torsion [" + std::to_string(p) + "]");
  }
  EXPECT_TRUE(ext_module(1, ModulePresentation::free(z, 2), Zmod(z, 6)).is_zero());
  EXPECT_TRUE(ext_module(2, Zmod(z, 6), zz).is_zero());
  EXPECT_TRUE(pid_isomorphic(ext_module(0, Zmod(z, 4), Zmod(z, 6)), hom_module(Zmod(z, 4), Zmod(z, 6)).module));
  auto r = Ring::rationals({"x", "y"});
  ModulePresentation k = ModulePresentation::cyclic(I(r, {"x", "y"}));
  ModulePresentation rr = ModulePresentation::free(r, 1);
  EXPECT_TRUE(ext_module(1, k, rr).is_zero());
  EXPECT_EQ(ext_module(2, k, rr).annihilator(), I(r, {"x", "y"}));
}

TEST(Modules, TorsionSubmoduleExamples) {
  auto z = Ring::integers();
  TorsionSubmodule t = torsion_submodule(Zmod(z, 12), I(z, {"2"}));
  EXPECT_EQ(pid_invariants_string(t.sub.module), "free 0; torsion [4]");
  EXPECT_TRUE(same_submodule(Zmod(z, 12), t.sub.generators(), {{z->from_int(3)}}));
  EXPECT_EQ(t.exponent, 2u);
  ModulePresentation m = direct_sum(Zmod(z, 6), ModulePresentation::free(z, 1));
  EXPECT_TRUE(torsion_submodule(m, Ideal::unit(z)).sub.module.is_zero());
  TorsionSubmodule all = torsion_submodule(m, I(z, {"6"}));
  EXPECT_TRUE(same_submodule(m, all.sub.generators(), {unit_column(*z, 2, 0)}));
  auto r = Ring::rationals({"x", "y"});
  ModulePresentation q = ModulePresentation::cyclic(I(r, {"x^2", "x*y"}));
  TorsionSubmodule tx = torsion_submodule(q, I(r, {"x"}));
  EXPECT_TRUE(same_submodule(q, tx.sub.generators(), {{r->one()}}));
  EXPECT_THROW(torsion_submodule(q, Ideal::zero(r)), InvalidArgument);
}

TEST(Modules, MapCombinators) {
  auto z = Ring::integers();
  auto zz = ModulePresentation::free(z, 1);
  ModuleMap mul12(zz, zz, int_matrix(z, {{12}}));
  EXPECT_TRUE(pid_isomorphic(cokernel(mul12).module, Zmod(z, 12)));
  ModuleMap surj(Zmod(z, 4), Zmod(z, 2), int_matrix(z, {{1}}));
  EXPECT_TRUE(pid_isomorphic(kernel(surj).module, Zmod(z, 2)));
  EXPECT_TRUE(pid_isomorphic(image(surj).module, Zmod(z, 2)));
  EXPECT_TRUE(pid_isomorphic(direct_sum(Zmod(z, 2), Zmod(z, 3)), Zmod(z, 6)));
  EXPECT_THROW(ModuleMap(Zmod(z, 2), Zmod(z, 3), int_matrix(z, {{1}})), IllDefinedMap);
  DirectSum ds = direct_sum_maps(Zmod(z, 2), Zmod(z, 3));
  EXPECT_TRUE(maps_equal(compose(ds.proj1, ds.inc1), ModuleMap::identity(Zmod(z, 2))));
  EXPECT_TRUE(compose(ds.proj2, ds.inc1).is_zero());
  Pruned p = prune(coker(z, {{"1", "0"}, {"3", "5"}}));
  EXPECT_EQ(p.module.rank(), 1u);
  EXPECT_TRUE(pid_isomorphic(p.module, Zmod(z, 5)));
  EXPECT_TRUE(maps_equal(compose(p.from, p.to), ModuleMap::identity(coker(z, {{"1", "0"}, {"3", "5"}}))));
}

class ModuleProperties : public ::testing::TestWithParam<int> {};

TEST_P(ModuleProperties, HomOfCyclicIsColon) {
  auto z = Ring::integers();
  std::mt19937_64 rng(200 + GetParam());
  for (int round = 0; round < 10; ++round) {
    ModulePresentation n = random_z_module(z, rng);
    long a = 1 + static_cast<long>(rng() % 12);
    Ideal i = I(z, {std::to_string(a)});
    HomModule h = hom_module(ModulePresentation::cyclic(i), n);
    // (0 :_N I) as a submodule
    std::vector<Column> colon = submodule_colon(n, {}, i);
    Submodule s = submodule(n, colon);
    EXPECT_TRUE(pid_isomorphic(h.module, s.module)) << n.to_string() << " a=" << a;
  }
}

TEST_P(ModuleProperties, ExtZeroIsHom) {
  std::mt19937_64 rng(300 + GetParam());
  auto z = Ring::integers();
  auto q = Ring::rationals({"x"});
  for (int round = 0; round < 6; ++round) {
    ModulePresentation m = random_z_module(z, rng), n = random_z_module(z, rng);
    EXPECT_TRUE(pid_isomorphic(ext_module(0, m, n), hom_module(m, n).module));
    ModulePresentation mq = random_kx_module(q, rng), nq = random_kx_module(q, rng);
    EXPECT_TRUE(pid_isomorphic(ext_module(0, mq, nq), hom_module(mq, nq).module));
  }
}

TEST_P(ModuleProperties, SmithPresentationIsomorphic) {
  std::mt19937_64 rng(400 + GetParam());
  auto z = Ring::integers();
  for (int round = 0; round < 10; ++round) {
    ModulePresentation m = random_z_module(z, rng);
    SmithForm sf = smith_normal_form(*z, m.relation_matrix());
    std::vector<Poly> ds(m.rank());
    for (std::size_t i = 0; i < ds.size() && i < sf.invariant_factors.size(); ++i) ds[i] = sf.invariant_factors[i];
    ModulePresentation d = ModulePresentation::diagonal(z, ds);
    // U^{-1} gives an explicit isomorphism M -> D via the lift U
    ModuleMap iso(m, d, sf.U);
    EXPECT_TRUE(kernel(iso).module.is_zero());
    EXPECT_TRUE(cokernel(iso).module.is_zero());
  }
}

TEST_P(ModuleProperties, LongExactSequenceOrders) {
  // 0 -> M' -> M -> M'' -> 0 with N finite: alternating product of orders
  // along the Hom/Ext long exact sequence is 1.
  std::mt19937_64 rng(500 + GetParam());
  auto z = Ring::integers();
  for (int round = 0; round < 6; ++round) {
    ModulePresentation m = random_z_module(z, rng);
    Column v = random_element(m, rng);
    Submodule sub = submodule(m, {v});
    Quotient quo = quotient(m, {v});
    ModulePresentation n = Zmod(z, 2 + static_cast<long>(rng() % 10));
    mpz_class o[6] = {z_order(hom_module(quo.module, n).module), z_order(hom_module(m, n).module),
                      z_order(hom_module(sub.module, n).module), z_order(ext_module(1, quo.module, n)),
                      z_order(ext_module(1, m, n)), z_order(ext_module(1, sub.module, n))};
    EXPECT_EQ(o[0] * o[2] * o[4], o[1] * o[3] * o[5]) << m.to_string();
  }
}

TEST_P(ModuleProperties, TorsionIdempotent) {
  std::mt19937_64 rng(600 + GetParam());
  auto z = Ring::integers();
  auto r = Ring::rationals({"x", "y"});
  for (int round = 0; round < 4; ++round) {
    ModulePresentation m = random_z_module(z, rng);
    Ideal j = I(z, {std::to_string(std::vector<long>{2, 3, 6}[rng() % 3])});
    TorsionSubmodule t = torsion_submodule(m, j);
    TorsionSubmodule tt = torsion_submodule(t.sub.module, j);
    EXPECT_TRUE(pid_isomorphic(tt.sub.module, t.sub.module));
    Quotient y = quotient(m, t.sub.generators());
    EXPECT_TRUE(torsion_submodule(y.module, j).sub.module.is_zero());
  }
  std::vector<ModulePresentation> ms = {coker(r, {{"x^2", "x*y"}}), coker(r, {{"x*y", "0"}, {"0", "y^2"}}),
                                        coker(r, {{"x", "y"}, {"0", "x"}})};
  for (const auto& m : ms) {
    for (const auto& j : {I(r, {"x"}), I(r, {"y"}), I(r, {"x", "y"})}) {
      TorsionSubmodule t = torsion_submodule(m, j);
      TorsionSubmodule tt = torsion_submodule(t.sub.module, j);
      EXPECT_TRUE(tt.sub.module.is_zero() == t.sub.module.is_zero());
      EXPECT_TRUE(same_submodule(t.sub.module, tt.sub.generators(),
                                 [&] {
                                   std::vector<Column> all;
                                   for (std::size_t i = 0; i < t.sub.module.rank(); ++i)
                                     all.push_back(unit_column(*r, t.sub.module.rank(), i));
                                   return all;
                                 }()));
      Quotient y = quotient(m, t.sub.generators());
      EXPECT_TRUE(torsion_submodule(y.module, j).sub.module.is_zero());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ModuleProperties, ::testing::Range(0, 5));
