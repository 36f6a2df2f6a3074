#pragma once

#include <cstddef>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"
#include "leibcoh/linear.hpp"

namespace leibcoh {

// C^0 -> C^1 -> ... -> C^N. differentials[n] : C^n -> C^{n+1}; the factory
// rejects mis-shaped chains and d^{n+1} d^n != 0 with ComplexError.
class CochainComplex {
 public:
  static CochainComplex make(std::vector<std::size_t> dims, std::vector<SparseMat> differentials);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<SparseMat>& differentials() const { return differentials_; }

 private:
  CochainComplex() = default;
  std::vector<std::size_t> dims_;
  std::vector<SparseMat> differentials_;
};

struct CohomologyDegree {
  std::size_t dim = 0;
  SubspaceBasis cocycles;
  SubspaceBasis coboundaries;
};

struct CohomologyResult {
  std::vector<CohomologyDegree> degrees;
  std::vector<std::size_t> dims() const;
};

// Cohomology in degrees 0..top. Needs differentials up to d^top, except that
// a missing d^top is read as the zero map.
CohomologyResult cohomology_of(const CochainComplex& complex, std::size_t top);

// d^n on Hom(h^{⊗n}, M). Cochain coordinate t*dim(M) + a is the a-th
// component of the value on the basis tensor t, with t = sum_k i_k d^{n-k}.
SparseMat leibniz_differential_sparse(const LeibnizAlgebra& h, const Bimodule& m, std::size_t n);
Mat leibniz_differential(const LeibnizAlgebra& h, const Bimodule& m, std::size_t n);

// HL^0..HL^qmax with cocycle and coboundary bases. The cochain spaces have
// dim(h)^q * dim(M) coordinates, so qmax is the caller's cost budget.
CohomologyResult leibniz_cohomology(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax);
// Dimensions only (ranks, no bases).
std::vector<std::size_t> leibniz_cohomology_dims(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax);

// (x.f)(y_1..y_q) = x.f(y_1..y_q) - sum_i f(y_1,..,[x,y_i],..,y_q) on the
// cochains of degree q, for x the k-th section vector of the Lie quotient.
Mat cochain_action(const LeibnizAlgebra& h, const LieQuotient& quotient, const Bimodule& m, std::size_t q,
                   std::size_t k);

// HL^q(h, M) as an h_Lie-module.
LeftModule hl_module_structure(const LeibnizAlgebra& h, const Bimodule& m, std::size_t q);
LeftModule hl_module_structure(const LeibnizAlgebra& h, const LieQuotient& quotient, const Bimodule& m,
                               std::size_t q, const CohomologyResult& hl);

// Chevalley-Eilenberg complex on Λ^p g* ⊗ M (p-subsets in lexicographic
// order, coordinate subset*dim(M) + a) with
//   d f(x_0..x_p) = sum_i (-1)^i x_i.f(..x̂_i..) + sum_{i<j} (-1)^{i+j} f([x_i,x_j], ..x̂_i..x̂_j..).
CochainComplex ce_complex(const LieAlgebra& g, const LeftModule& m);
// Degrees above dim g are reported as zero.
CohomologyResult ce_cohomology(const LieAlgebra& g, const LeftModule& m, std::size_t pmax);
// H^p(g, M) = H^p(g, K) ⊗ M^g; g must be semisimple (nondegenerate Killing form).
std::vector<std::size_t> ce_dims_weyl(const LieAlgebra& g, const LeftModule& m, std::size_t pmax);
bool has_nondegenerate_killing_form(const LieAlgebra& g);

// HL^n over the 1-dimensional algebra: M^h (n = 0), M^0/(M.h) (n odd),
// M^h/M_0 (n even, n > 0).
std::vector<std::size_t> trivial_algebra_closed_form(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax);

}  // namespace leibcoh
