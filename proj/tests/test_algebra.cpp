#include <doctest.h>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/repsl2.hpp"

using namespace leibcoh;

namespace {

// Jacobi for an antisymmetric bracket, enumerated directly.
bool jacobi_by_enumeration(const StructureConstants& c) {
  const std::size_t d = c.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vec ex(d, 0), ey(d, 0), ez(d, 0);
        ex[x] = 1;
        ey[y] = 1;
        ez[z] = 1;
        Vec a = c.bracket(ex, c.bracket(ey, ez));
        Vec b = c.bracket(ey, c.bracket(ez, ex));
        Vec e = c.bracket(ez, c.bracket(ex, ey));
        for (std::size_t k = 0; k < d; ++k)
          if (a[k] + b[k] + e[k] != 0) return false;
      }
  return true;
}

LeibnizAlgebra hemi(unsigned n) { return hemi_semidirect(sl2(), simple_module(n).underlying()); }

}  // namespace

TEST_CASE("left Leibniz identity") {
  CHECK(check_left_leibniz(StructureConstants(1)));
  CHECK(check_left_leibniz(sl2().constants()));
  CHECK(jacobi_by_enumeration(sl2().constants()));
  StructureConstants bad(1);
  bad(0, 0, 0) = 1;  // [b,b] = b
  CHECK_FALSE(check_left_leibniz(bad));
  CHECK_THROWS_AS(LeibnizAlgebra{bad}, ModuleAxiomError);
}

TEST_CASE("Lie algebras reject non-antisymmetric constants") {
  StructureConstants c(2);
  c(0, 0, 1) = 1;  // [b0,b0] = b1, Leibniz but not Lie
  CHECK(check_left_leibniz(c));
  CHECK_NOTHROW(LeibnizAlgebra{c});
  CHECK_THROWS(LieAlgebra{c});
}

TEST_CASE("Leibniz kernel") {
  CHECK(leibniz_kernel(sl2()).dim() == 0);
  CHECK(leibniz_kernel(trivial_algebra()).dim() == 0);
  const LeibnizAlgebra h = hemi(1);
  CHECK(h.dim() == 5);
  const SubspaceBasis k = leibniz_kernel(h);
  CHECK(k.dim() == 2);
  CHECK(contains(SubspaceBasis{5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}}, k));
  CHECK(leibniz_kernel(hemi(2)).dim() == 3);
}

TEST_CASE("Leibniz kernel is a two-sided ideal") {
  for (unsigned n : {1u, 2u, 3u}) {
    const LeibnizAlgebra h = hemi(n);
    const SubspaceBasis k = leibniz_kernel(h);
    for (std::size_t x = 0; x < h.dim(); ++x) {
      Vec ex(h.dim(), 0);
      ex[x] = 1;
      for (const auto& v : k.vectors) {
        const Vec l = h.bracket(ex, v);
        const bool inside = l == Vec(h.dim(), 0) || contains(k, SubspaceBasis{h.dim(), {l}});
        CHECK(inside);
        const Vec r = h.bracket(v, ex);
        CHECK(r == Vec(h.dim(), 0));  // Leib(h) is in the left annihilator
      }
    }
  }
}

TEST_CASE("Lie quotient") {
  const LieQuotient q = lie_quotient(sl2());
  CHECK(q.algebra.constants() == sl2().constants());
  CHECK(q.projection == Mat::identity(3));

  const LieQuotient t = lie_quotient(trivial_algebra());
  CHECK(t.algebra.dim() == 1);

  for (unsigned n : {1u, 2u}) {
    const LieQuotient hq = lie_quotient(hemi(n));
    CHECK(hq.algebra.constants() == sl2().constants());
    CHECK(jacobi_by_enumeration(hq.algebra.constants()));
    CHECK(hq.projection * hq.section == Mat::identity(3));
  }
}

TEST_CASE("hemi-semidirect products") {
  const LeibnizAlgebra h2 = hemi(2);
  CHECK(h2.dim() == 6);
  // [(a,x),(b,y)] = (x.b, [x,y]): [h, v0] = 2 v0 for V_2 with module first
  Vec hv(6, 0), v0(6, 0);
  hv[3 + 1] = 1;
  v0[0] = 1;
  const Vec r = h2.bracket(hv, v0);
  CHECK(r[0] == 2);
  CHECK(h2.bracket(v0, hv) == Vec(6, 0));

  const LeibnizAlgebra padded = hemi_semidirect(sl2(), trivial_module(sl2(), 0));
  CHECK(padded.constants() == sl2().constants());

  LeftModule broken = simple_module(1).underlying();
  broken.action[0](0, 1) = 5;
  CHECK_THROWS_AS(hemi_semidirect(sl2(), broken), ModuleAxiomError);
}

TEST_CASE("bimodule axioms") {
  const LieQuotient q = lie_quotient(sl2());
  const LeftModule adj = adjoint_module(sl2(), q);
  CHECK(check_bimodule(sl2(), symmetric(sl2(), adj)));
  CHECK(check_bimodule(sl2(), antisymmetric(sl2(), adj)));
  Bimodule same{3, adj.action, adj.action};
  CHECK_FALSE(check_bimodule(sl2(), same));

  const LeibnizAlgebra h = hemi(1);
  for (unsigned m = 0; m <= 4; ++m) {
    const LeftModule v = simple_module(m).underlying();
    CHECK(check_bimodule(h, symmetric(h, v)));
    CHECK(check_bimodule(h, antisymmetric(h, v)));
  }
  // direct sums of simples
  const LeftModule sum = direct_sum({simple_module(1).underlying(), simple_module(2).underlying(),
                                     simple_module(0).underlying()});
  CHECK(check_bimodule(h, symmetric(h, sum)));
  CHECK(check_bimodule(h, antisymmetric(h, sum)));
}

TEST_CASE("symmetric and antisymmetric constructions") {
  const OneDimBimodule s(BimoduleKind::symmetric, 1);
  const Bimodule sb = s.materialize();
  CHECK(sb.left[0] == Mat{{1}});
  CHECK(sb.right[0] == Mat{{-1}});
  const Bimodule ab = OneDimBimodule(BimoduleKind::antisymmetric, 1).materialize();
  CHECK(ab.right[0] == Mat{{0}});
  CHECK_THROWS_AS(OneDimBimodule(BimoduleKind::trivial, 1), InputError);
  CHECK_THROWS_AS(OneDimBimodule(BimoduleKind::symmetric, 0), InputError);

  const Bimodule empty = symmetric(trivial_algebra(), trivial_module(trivial_algebra(), 0));
  CHECK(empty.dim == 0);

  // V_2 over V_1 x sl2: Leib(h) acts by zero, sl2 adjointly
  const LeibnizAlgebra h = hemi(1);
  const Bimodule v2 = symmetric(h, simple_module(2).underlying());
  CHECK(v2.dim == 3);
  CHECK(v2.left[0].is_zero());
  CHECK(v2.left[1].is_zero());
  CHECK(v2.left[2 + 1] == simple_module(2).h());
}

TEST_CASE("canonical subquotients") {
  const Bimodule k = OneDimBimodule::trivial().materialize();
  const Bimodule s = OneDimBimodule(BimoduleKind::symmetric, 3).materialize();
  const Bimodule a = OneDimBimodule(BimoduleKind::antisymmetric, 3).materialize();

  CHECK(antisymmetric_kernel(s).dim() == 0);
  CHECK(antisymmetric_kernel(a).dim() == 1);
  CHECK(antisymmetric_kernel(k).dim() == 0);

  CHECK(sym_quotient(s).dim == 1);
  CHECK(sym_quotient(s).left[0] == s.left[0]);
  CHECK(sym_quotient(a).dim == 0);
  CHECK(sym_quotient(k).dim == 1);

  CHECK(right_invariants(a).dim() == 1);
  CHECK(right_invariants(s).dim() == 0);
  CHECK(right_invariants(k).dim() == 1);

  CHECK(m_zero_subspace(s).dim() == 1);
  CHECK(m_zero_subspace(a).dim() == 0);
  CHECK(m_zero_subspace(k).dim() == 1);
  CHECK_THROWS_AS(m_zero_subspace(antisymmetric(sl2(), simple_module(1).underlying())), DimensionError);

  // whole right invariants for antisymmetric bimodules over a larger algebra
  const LeibnizAlgebra h = hemi(2);
  CHECK(right_invariants(antisymmetric(h, simple_module(3).underlying())).dim() == 4);
}

TEST_CASE("sym_quotient of a mixed bimodule is symmetric") {
  // over the 1-dim algebra: L = [[2, c], [0, 1]], R = [[0, d], [0, -1]], c = 2d - d
  const Scalar d = 3;
  const Bimodule b{2, {Mat{{2, d}, {0, 1}}}, {Mat{{0, d}, {0, -1}}}};
  REQUIRE(check_bimodule(trivial_algebra(), b));
  const Bimodule q = sym_quotient(b);
  CHECK(q.left[0] == -q.right[0]);
  CHECK(check_bimodule(trivial_algebra(), q));
}

TEST_CASE("Hom modules and intertwiners") {
  const LieAlgebra& g = sl2();
  const LeftModule v1 = simple_module(1).underlying();
  const LeftModule hom_triv = hom_module_action(g, trivial_module(g, 1), v1);
  for (std::size_t x = 0; x < 3; ++x) CHECK(hom_triv.action[x] == v1.action[x]);

  const LeftModule end = hom_module_action(g, v1, v1);
  CHECK(end.dim == 4);
  CHECK(decompose(SL2Module(end)) == WeightMultiset{{{2, 1}, {0, 1}}});
  // identity map E_00 + E_11 is invariant
  const Vec id{1, 0, 0, 1};
  for (std::size_t x = 0; x < 3; ++x) CHECK((end.action[x] * id) == Vec(4, 0));

  CHECK(intertwiner_dim(g, simple_module(3).underlying(), simple_module(3).underlying()) == 1);
  CHECK(intertwiner_dim(g, simple_module(1).underlying(), simple_module(2).underlying()) == 0);
  const LeftModule big = direct_sum(
      {simple_module(4).underlying(), simple_module(2).underlying(), simple_module(0).underlying()});
  CHECK(intertwiner_dim(g, simple_module(2).underlying(), big) == 1);
  CHECK(intertwiner_dim(g, big, simple_module(2).underlying()) == 1);
}

TEST_CASE("algebra and bimodule JSON round trips") {
  const LeibnizAlgebra h = hemi(1);
  const LeibnizAlgebra back = algebra_from_json(algebra_to_json(h));
  CHECK(back.constants() == h.constants());
  CHECK(back.labels() == h.labels());

  const Bimodule b = antisymmetric(h, simple_module(1).underlying());
  const Bimodule bb = bimodule_from_json(h, bimodule_to_json(b));
  CHECK(bb.dim == b.dim);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    CHECK(bb.left[i] == b.left[i]);
    CHECK(bb.right[i] == b.right[i]);
  }

  const LeibnizAlgebra one = algebra_from_json(R"({"dim": 1, "bracket": []})");
  const Bimodule half = bimodule_from_json(one, R"({"dim": 1, "left": [[["1/2"]]], "right": [[["-1/2"]]]})");
  CHECK(half.left[0](0, 0) == Scalar(1, 2));

  CHECK_THROWS_AS(algebra_from_json("{"), InputError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "bracket": [[[[0, 1, 1]]]]})"), ModuleAxiomError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim": 1, "bracket": [[[[3, 1, 1]]]]})"), InputError);
  // (LML) fails: L and R do not commute
  CHECK_THROWS_AS(bimodule_from_json(one, R"({"dim": 2, "left": [[[0, 1], [0, 0]]], "right": [[[1, 0], [0, 0]]]})"),
                  ModuleAxiomError);
}
