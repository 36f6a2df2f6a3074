#include <doctest.h>

#include <random>

#include "leibcoh/cohomology.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/repsl2.hpp"
#include "support.hpp"

using namespace leibcoh;

namespace {

using Dims = std::vector<std::size_t>;

LeibnizAlgebra hemi(unsigned n) { return hemi_semidirect(sl2(), simple_module(n).underlying()); }

Bimodule one_dim(BimoduleKind kind, int lambda) {
  return kind == BimoduleKind::trivial ? OneDimBimodule::trivial().materialize()
                                       : OneDimBimodule(kind, lambda).materialize();
}

LeibnizAlgebra abelian(std::size_t d) { return LeibnizAlgebra(StructureConstants(d)); }

}  // namespace

TEST_CASE("d^0 examples") {
  const LeibnizAlgebra k = trivial_algebra();
  CHECK(leibniz_differential(k, one_dim(BimoduleKind::trivial, 0), 0) == Mat{{0}});
  CHECK(leibniz_differential(k, one_dim(BimoduleKind::symmetric, 1), 0) == Mat{{1}});
  CHECK(leibniz_differential(k, one_dim(BimoduleKind::symmetric, 3), 0) == Mat{{3}});
  const LeibnizAlgebra h = hemi(1);
  CHECK(leibniz_differential(h, antisymmetric(h, simple_module(2).underlying()), 0).is_zero());
}

TEST_CASE("assembled differentials equal the evaluated coboundary formula") {
  std::vector<std::pair<LeibnizAlgebra, Bimodule>> cases;
  const LeibnizAlgebra h1 = hemi(1);
  cases.emplace_back(h1, antisymmetric(h1, simple_module(1).underlying()));
  cases.emplace_back(h1, symmetric(h1, simple_module(1).underlying()));
  cases.emplace_back(h1, symmetric(h1, simple_module(0).underlying()));
  cases.emplace_back(sl2(), symmetric(sl2(), simple_module(2).underlying()));
  cases.emplace_back(trivial_algebra(), one_dim(BimoduleKind::symmetric, 2));
  // a non-Lie 2-dim Leibniz algebra: [b0,b0] = b1
  StructureConstants c(2);
  c(0, 0, 1) = 1;
  const LeibnizAlgebra nl(c);
  cases.emplace_back(nl, antisymmetric(nl, trivial_module(lie_quotient(nl).algebra, 2)));
  for (const auto& [h, m] : cases) {
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(leibniz_differential(h, m, n) == support::naive_leibniz_differential(h, m, n));
    }
  }
}

TEST_CASE("d composed with d vanishes on the corpus") {
  std::vector<std::pair<LeibnizAlgebra, Bimodule>> cases;
  for (unsigned n : {1u, 2u}) {
    const LeibnizAlgebra h = hemi(n);
    for (unsigned m = 0; m <= 2; ++m) {
      cases.emplace_back(h, symmetric(h, simple_module(m).underlying()));
      cases.emplace_back(h, antisymmetric(h, simple_module(m).underlying()));
    }
  }
  for (const auto& [h, m] : cases) {
    const std::size_t top = h.dim() <= 5 ? 3 : 2;
    for (std::size_t n = 0; n < top; ++n) {
      const SparseMat a = leibniz_differential_sparse(h, m, n);
      const SparseMat b = leibniz_differential_sparse(h, m, n + 1);
      CHECK((b * a).is_zero());
    }
  }
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const Bimodule b = support::random_one_dim_bimodule(5, rng);
    for (std::size_t n = 0; n < 5; ++n) {
      CHECK((leibniz_differential_sparse(trivial_algebra(), b, n + 1) *
             leibniz_differential_sparse(trivial_algebra(), b, n))
                .is_zero());
    }
  }
}

TEST_CASE("CochainComplex rejects broken chains") {
  SparseMat d0 = SparseMat::from_dense(Mat{{1}});
  SparseMat d1 = SparseMat::from_dense(Mat{{1}});
  CHECK_THROWS_AS(CochainComplex::make({1, 1, 1}, {d0, d1}), ComplexError);
  CHECK_THROWS_AS(CochainComplex::make({1, 2}, {d0}), ComplexError);
  CHECK_NOTHROW(CochainComplex::make({1, 1, 1}, {d0, SparseMat::from_dense(Mat{{0}})}));
}

TEST_CASE("HL over the 1-dimensional algebra") {
  const LeibnizAlgebra k = trivial_algebra();
  CHECK(leibniz_cohomology(k, one_dim(BimoduleKind::trivial, 0), 6).dims() == Dims(7, 1));
  CHECK(leibniz_cohomology(k, one_dim(BimoduleKind::symmetric, 1), 6).dims() == Dims(7, 0));
  CHECK(leibniz_cohomology(k, one_dim(BimoduleKind::antisymmetric, 1), 6).dims() == Dims{1, 0, 0, 0, 0, 0, 0});
  CHECK(trivial_algebra_closed_form(k, one_dim(BimoduleKind::trivial, 0), 4) == Dims(5, 1));
  CHECK(trivial_algebra_closed_form(k, one_dim(BimoduleKind::antisymmetric, 2), 3) == Dims{1, 0, 0, 0});
  CHECK(trivial_algebra_closed_form(k, one_dim(BimoduleKind::symmetric, 2), 3) == Dims{0, 0, 0, 0});
  CHECK_THROWS_AS(trivial_algebra_closed_form(sl2(), symmetric(sl2(), simple_module(1).underlying()), 2),
                  DimensionError);
}

TEST_CASE("closed form and brute force agree on random bimodules over the 1-dimensional algebra") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const Bimodule b = support::random_one_dim_bimodule(5, rng);
    REQUIRE(check_bimodule(trivial_algebra(), b));
    const Dims brute = leibniz_cohomology(trivial_algebra(), b, 6).dims();
    CHECK(brute == trivial_algebra_closed_form(trivial_algebra(), b, 6));
    CHECK(Dims(brute.begin(), brute.begin() + 5) == support::naive_hl_dims(trivial_algebra(), b, 4));
  }
}

TEST_CASE("HL of V_1 x sl2 with antisymmetric V_1") {
  const LeibnizAlgebra h = hemi(1);
  const Bimodule m = antisymmetric(h, simple_module(1).underlying());
  const CohomologyResult r = leibniz_cohomology(h, m, 3);
  CHECK(r.dims() == Dims{2, 1, 0, 0});
  CHECK(leibniz_cohomology_dims(h, m, 3) == Dims{2, 1, 0, 0});
  CHECK(support::naive_hl_dims(h, m, 2) == Dims{2, 1, 0});
  for (const auto& deg : r.degrees) {
    CHECK(contains(deg.cocycles, deg.coboundaries));
    CHECK(deg.dim == deg.cocycles.dim() - deg.coboundaries.dim());
  }
  CHECK(r.degrees[0].dim == right_invariants(m).dim());
}

TEST_CASE("module structure on HL^q") {
  const LeibnizAlgebra h = hemi(1);
  const Bimodule m = antisymmetric(h, simple_module(1).underlying());
  const LeftModule h0 = hl_module_structure(h, m, 0);
  CHECK(decompose(SL2Module(h0)) == WeightMultiset{{{1, 1}}});
  const LeftModule h1 = hl_module_structure(h, m, 1);
  CHECK(h1.dim == 1);
  for (const auto& rho : h1.action) CHECK(rho.is_zero());

  // over the trivial algebra the action is the coefficient action
  const Bimodule a = one_dim(BimoduleKind::antisymmetric, 5);
  const LeftModule t0 = hl_module_structure(trivial_algebra(), a, 0);
  CHECK(t0.action[0] == Mat{{5}});
  const LeftModule k1 = hl_module_structure(trivial_algebra(), one_dim(BimoduleKind::trivial, 0), 3);
  CHECK(k1.action[0] == Mat{{0}});
}

TEST_CASE("cochain action commutes with the differential") {
  const LeibnizAlgebra h = hemi(1);
  const LieQuotient q = lie_quotient(h);
  const Bimodule m = symmetric(h, simple_module(1).underlying());
  for (std::size_t n = 0; n <= 1; ++n) {
    const Mat d = leibniz_differential(h, m, n);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(d * cochain_action(h, q, m, n, k) == cochain_action(h, q, m, n + 1, k) * d);
    }
  }
}

TEST_CASE("Chevalley-Eilenberg cohomology") {
  const LieAlgebra line{StructureConstants(1)};
  CHECK(ce_cohomology(line, trivial_module(line, 1), 3).dims() == Dims{1, 1, 0, 0});
  CHECK(ce_cohomology(line, LeftModule{1, {Mat{{2}}}}, 3).dims() == Dims{0, 0, 0, 0});
  CHECK(ce_cohomology(sl2(), trivial_module(sl2(), 1), 3).dims() == Dims{1, 0, 0, 1});
  for (unsigned m = 1; m <= 4; ++m)
    CHECK(ce_cohomology(sl2(), simple_module(m).underlying(), 3).dims() == Dims{0, 0, 0, 0});
  // abelian 2-dim, trivial coefficients: exterior algebra dims
  const LieAlgebra plane{StructureConstants(2)};
  CHECK(ce_cohomology(plane, trivial_module(plane, 1), 3).dims() == Dims{1, 2, 1, 0});
}

TEST_CASE("CE complexes square to zero") {
  const CochainComplex cx = ce_complex(sl2(), simple_module(3).underlying());
  for (std::size_t p = 0; p + 1 < cx.differentials().size(); ++p)
    CHECK((cx.differentials()[p + 1] * cx.differentials()[p]).is_zero());
}

TEST_CASE("Weyl shortcut agrees with brute force on sl2") {
  const LeftModule w = direct_sum({simple_module(0).underlying(), simple_module(2).underlying(),
                                   simple_module(0).underlying(), simple_module(3).underlying()});
  CHECK(ce_dims_weyl(sl2(), w, 3) == ce_cohomology(sl2(), w, 3).dims());
  CHECK(ce_dims_weyl(sl2(), w, 3) == Dims{2, 0, 0, 2});
  const LieAlgebra line{StructureConstants(1)};
  CHECK_FALSE(has_nondegenerate_killing_form(line));
  CHECK_THROWS_AS(ce_dims_weyl(line, trivial_module(line, 1), 1), InputError);
}

TEST_CASE("HL of an abelian algebra with trivial coefficients") {
  // abelian 2-dim algebra, trivial 1-dim coefficients: HL^n has dim 2^n
  const LeibnizAlgebra a = abelian(2);
  const Bimodule k{1, {Mat(1, 1), Mat(1, 1)}, {Mat(1, 1), Mat(1, 1)}};
  CHECK(leibniz_cohomology(a, k, 3).dims() == Dims{1, 2, 4, 8});
}
