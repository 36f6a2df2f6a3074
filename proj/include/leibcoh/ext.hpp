#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"
#include "leibcoh/cohomology.hpp"

namespace leibcoh {

// dims[p][q] for 0 <= p <= pmax, 0 <= q <= qmax. coeff_modules[q] is the
// h_Lie-module whose CE cohomology fills column q.
struct E2Page {
  std::size_t pmax = 0;
  std::size_t qmax = 0;
  std::vector<std::vector<std::size_t>> dims;
  std::vector<LeftModule> coeff_modules;

  std::size_t at(long p, long q) const;  // 0 outside the grid
  static E2Page from_dims(std::vector<std::vector<std::size_t>> dims);
};

enum class CollapseStatus { certified, not_certified };

struct CollapseCertificate {
  CollapseStatus status = CollapseStatus::certified;
  std::optional<std::array<int, 3>> witness;  // (r, p, q) of a d_r with nonzero source and target
  bool certified() const { return status == CollapseStatus::certified; }
};

struct ExtResult {
  std::vector<std::size_t> dims;
  CollapseCertificate certificate;
  E2Page page;
};

// Ext^q(U h_Lie^s, X) with its h_Lie-action.
struct BaseSymGroup {
  std::size_t dim = 0;
  LeftModule module;
};

// f : X -> Hom(h, HL^0(h,X)), f(m)(x) = x.m + m.x. Ext^0 = Ker f,
// Ext^1 = Coker f, Ext^q = Hom(h, HL^{q-1}) for q >= 2.
BaseSymGroup ext_base_sym(const LeibnizAlgebra& h, const Bimodule& x, std::size_t q);
// Matrix of f on the basis E_ij of Hom(h, HL^0), HL^0 in its cocycle basis.
Mat base_sym_map(const LeibnizAlgebra& h, const Bimodule& x);

// E_2^{pq} = H^p(h_Lie, Hom(Y, HL^q(h,X))), converging to Ext^{p+q}(Y^a, X).
E2Page e2_first(const LeibnizAlgebra& h, const LeftModule& y, const Bimodule& x, std::size_t pmax, std::size_t qmax);
// E_2^{pq} = H^p(h_Lie, Hom(Z, Ext^q(U h_Lie^s, X))), converging to Ext^{p+q}(Z^s, X).
E2Page e2_second(const LeibnizAlgebra& h, const LeftModule& z, const Bimodule& x, std::size_t pmax, std::size_t qmax);

// Certified when every d_r (r >= 2) leaving a nonzero cell lands on a zero
// cell. With total_degree, only sources with p + q <= total_degree are
// inspected, which is what Ext^{<= total_degree} depends on.
CollapseCertificate certify_collapse(const E2Page& page, std::optional<std::size_t> total_degree = std::nullopt);

// A simple bimodule given by kind and its underlying h_Lie-module.
struct SourceDescriptor {
  BimoduleKind kind;
  LeftModule module;
};

// Ext^0..Ext^nmax(src, x) from the certified E2 page; antisymmetric and
// trivial sources use the first sequence, symmetric ones the second.
// Throws CollapseNotCertified otherwise.
ExtResult ext_dims(const LeibnizAlgebra& h, const SourceDescriptor& src, const Bimodule& x, std::size_t nmax);

// Coker(N -> Hom(h, N), v -> (x -> x.v)) as an h_Lie-module.
LeftModule nhat(const LeibnizAlgebra& h, const LeftModule& n);

// dim Ext^1(V_p^s, V_m^a) over V_n x_hs sl2; p = 0 or m = 0 stands for K.
std::size_t ext1_hemi_closed(unsigned n, unsigned p, unsigned m);

// Ext^0..Ext^nmax between simple bimodules over the 1-dimensional algebra.
std::vector<std::size_t> ext_trivial_closed(const OneDimBimodule& src, const OneDimBimodule& dst, std::size_t nmax);

// A simple bimodule over V_n x_hs sl2: K (weight 0) or V_w^s / V_w^a, w >= 1.
struct HemiSimple {
  BimoduleKind kind = BimoduleKind::trivial;
  unsigned weight = 0;

  static HemiSimple make(BimoduleKind kind, unsigned weight);  // InputError on w = 0 with a non-trivial kind
  friend bool operator==(const HemiSimple&, const HemiSimple&) = default;
};

// Closed-form dim Ext^degree(src, dst) for degree <= 2; UnsupportedDegree above.
std::size_t ext_simple_closed(unsigned n, const HemiSimple& src, const HemiSimple& dst, unsigned degree);

// The same degree-1 numbers through nhat and weight multiplicities.
std::size_t ext1_hemi_oracle(unsigned n, const HemiSimple& src, const HemiSimple& dst);

}  // namespace leibcoh
