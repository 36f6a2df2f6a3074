#include "leibcoh/ext.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>

#include "leibcoh/errors.hpp"
#include "leibcoh/repsl2.hpp"

namespace leibcoh {

namespace {

// Everything the base-change groups need, computed once.
struct BaseSymContext {
  LieQuotient quotient;
  LeftModule adjoint;
  CohomologyResult hl;
  std::vector<LeftModule> hl_modules;
};

BaseSymContext base_sym_context(const LeibnizAlgebra& h, const Bimodule& x, std::size_t top) {
  if (!check_bimodule(h, x)) throw ModuleAxiomError("bimodule axioms fail");
  BaseSymContext ctx{lie_quotient(h), {}, {}, {}};
  ctx.adjoint = adjoint_module(h, ctx.quotient);
  ctx.hl = leibniz_cohomology(h, x, top);
  for (std::size_t q = 0; q <= top; ++q) ctx.hl_modules.push_back(hl_module_structure(h, ctx.quotient, x, q, ctx.hl));
  return ctx;
}

Mat base_sym_map(const LeibnizAlgebra& h, const Bimodule& x, const BaseSymContext& ctx) {
  const std::size_t d = h.dim();
  const SubspaceBasis& hl0 = ctx.hl.degrees[0].cocycles;
  Mat f(hl0.dim() * d, x.dim);
  for (std::size_t j = 0; j < d; ++j) {
    const auto coords = coordinates(hl0, x.left[j] + x.right[j]);
    if (!coords) throw ComplexError("x.m + m.x is not right-invariant");
    for (std::size_t i = 0; i < hl0.dim(); ++i)
      for (std::size_t m = 0; m < x.dim; ++m) f(i * d + j, m) = (*coords)(i, m);
  }
  return f;
}

BaseSymGroup base_sym_group(const LeibnizAlgebra& h, const Bimodule& x, const BaseSymContext& ctx, std::size_t q) {
  const LieAlgebra& g = ctx.quotient.algebra;
  if (q == 0) {
    const SubspaceBasis ker = kernel_basis(base_sym_map(h, x, ctx));
    const LeftModule left = left_module_over_quotient(x, ctx.quotient);
    BaseSymGroup out{ker.dim(), LeftModule{ker.dim(), {}}};
    for (const auto& rho : left.action)
      out.module.action.push_back(restrict_and_project(rho, ker, SubspaceBasis::zero(x.dim)));
    require_left_module(g, out.module);
    return out;
  }
  if (q == 1) {
    const LeftModule hom = hom_module_action(g, ctx.adjoint, ctx.hl_modules[0]);
    const SubspaceBasis image = image_basis(base_sym_map(h, x, ctx));
    const SubspaceBasis full = SubspaceBasis::full(hom.dim);
    BaseSymGroup out{hom.dim - image.dim(), LeftModule{hom.dim - image.dim(), {}}};
    for (const auto& rho : hom.action) out.module.action.push_back(restrict_and_project(rho, full, image));
    require_left_module(g, out.module);
    return out;
  }
  LeftModule hom = hom_module_action(g, ctx.adjoint, ctx.hl_modules[q - 1]);
  const std::size_t dim = hom.dim;
  return BaseSymGroup{dim, std::move(hom)};
}

E2Page page_from_coefficients(const LieAlgebra& g, std::vector<LeftModule> coeffs, std::size_t pmax) {
  E2Page page;
  page.pmax = pmax;
  page.qmax = coeffs.empty() ? 0 : coeffs.size() - 1;
  page.dims.assign(pmax + 1, std::vector<std::size_t>(coeffs.size(), 0));
  for (std::size_t q = 0; q < coeffs.size(); ++q) {
    const auto col = ce_cohomology(g, coeffs[q], pmax).dims();
    for (std::size_t p = 0; p <= pmax; ++p) page.dims[p][q] = col[p];
  }
  page.coeff_modules = std::move(coeffs);
  return page;
}

std::size_t indicator(bool b) { return b ? 1 : 0; }

const LeibnizAlgebra& hemi_algebra(unsigned n) {
  static std::mutex lock;
  static std::vector<std::unique_ptr<LeibnizAlgebra>> cache;
  const std::lock_guard<std::mutex> guard(lock);
  if (cache.size() <= n) cache.resize(n + 1);
  if (!cache[n]) cache[n] = std::make_unique<LeibnizAlgebra>(hemi_semidirect(sl2(), simple_module(n).underlying()));
  return *cache[n];
}

}  // namespace

std::size_t E2Page::at(long p, long q) const {
  if (p < 0 || q < 0 || static_cast<std::size_t>(p) >= dims.size()) return 0;
  const auto& col = dims[static_cast<std::size_t>(p)];
  if (static_cast<std::size_t>(q) >= col.size()) return 0;
  return col[static_cast<std::size_t>(q)];
}

E2Page E2Page::from_dims(std::vector<std::vector<std::size_t>> dims) {
  E2Page page;
  page.pmax = dims.empty() ? 0 : dims.size() - 1;
  page.qmax = dims.empty() || dims[0].empty() ? 0 : dims[0].size() - 1;
  page.dims = std::move(dims);
  return page;
}

Mat base_sym_map(const LeibnizAlgebra& h, const Bimodule& x) {
  return base_sym_map(h, x, base_sym_context(h, x, 0));
}

BaseSymGroup ext_base_sym(const LeibnizAlgebra& h, const Bimodule& x, std::size_t q) {
  const BaseSymContext ctx = base_sym_context(h, x, q == 0 ? 0 : q - 1);
  return base_sym_group(h, x, ctx, q);
}

E2Page e2_first(const LeibnizAlgebra& h, const LeftModule& y, const Bimodule& x, std::size_t pmax, std::size_t qmax) {
  const BaseSymContext ctx = base_sym_context(h, x, qmax);
  const LieAlgebra& g = ctx.quotient.algebra;
  require_left_module(g, y);
  std::vector<LeftModule> coeffs;
  for (std::size_t q = 0; q <= qmax; ++q) coeffs.push_back(hom_module_action(g, y, ctx.hl_modules[q]));
  return page_from_coefficients(g, std::move(coeffs), pmax);
}

E2Page e2_second(const LeibnizAlgebra& h, const LeftModule& z, const Bimodule& x, std::size_t pmax, std::size_t qmax) {
  const BaseSymContext ctx = base_sym_context(h, x, qmax == 0 ? 0 : qmax - 1);
  const LieAlgebra& g = ctx.quotient.algebra;
  require_left_module(g, z);
  std::vector<LeftModule> coeffs;
  for (std::size_t q = 0; q <= qmax; ++q) coeffs.push_back(hom_module_action(g, z, base_sym_group(h, x, ctx, q).module));
  return page_from_coefficients(g, std::move(coeffs), pmax);
}

CollapseCertificate certify_collapse(const E2Page& page, std::optional<std::size_t> total_degree) {
  const long pcount = static_cast<long>(page.dims.size());
  long qcount = 0;
  for (const auto& col : page.dims) qcount = std::max(qcount, static_cast<long>(col.size()));
  // d_r with r > pcount + qcount leaves the grid on one side.
  for (long r = 2; r <= pcount + qcount + 1; ++r) {
    for (long p = 0; p < pcount; ++p) {
      for (long q = 0; q < qcount; ++q) {
        if (total_degree && static_cast<std::size_t>(p + q) > *total_degree) continue;
        if (page.at(p, q) == 0) continue;
        if (page.at(p + r, q - r + 1) != 0) {
          return CollapseCertificate{CollapseStatus::not_certified,
                                     std::array<int, 3>{static_cast<int>(r), static_cast<int>(p), static_cast<int>(q)}};
        }
      }
    }
  }
  return CollapseCertificate{};
}

ExtResult ext_dims(const LeibnizAlgebra& h, const SourceDescriptor& src, const Bimodule& x, std::size_t nmax) {
  const std::size_t pmax = lie_quotient(h).algebra.dim();
  ExtResult out;
  out.page = src.kind == BimoduleKind::symmetric ? e2_second(h, src.module, x, pmax, nmax)
                                                  : e2_first(h, src.module, x, pmax, nmax);
  out.certificate = certify_collapse(out.page, nmax);
  if (!out.certificate.certified()) {
    const auto& w = *out.certificate.witness;
    throw CollapseNotCertified("E2 page does not certify collapse: d_" + std::to_string(w[0]) + " from (" +
                                   std::to_string(w[1]) + "," + std::to_string(w[2]) + ")",
                               w);
  }
  for (std::size_t n = 0; n <= nmax; ++n) {
    std::size_t total = 0;
    for (std::size_t p = 0; p <= n; ++p) total += out.page.at(static_cast<long>(p), static_cast<long>(n - p));
    out.dims.push_back(total);
  }
  return out;
}

LeftModule nhat(const LeibnizAlgebra& h, const LeftModule& n) {
  const LieQuotient quotient = lie_quotient(h);
  const LieAlgebra& g = quotient.algebra;
  require_left_module(g, n);
  const LeftModule lifted = lift_module(quotient, n);
  const LeftModule hom = hom_module_action(g, adjoint_module(h, quotient), n);
  const std::size_t d = h.dim();
  Mat phi(n.dim * d, n.dim);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n.dim; ++i)
      for (std::size_t v = 0; v < n.dim; ++v) phi(i * d + j, v) = lifted.action[j](i, v);
  const SubspaceBasis image = image_basis(phi);
  const SubspaceBasis full = SubspaceBasis::full(hom.dim);
  LeftModule out{hom.dim - image.dim(), {}};
  for (const auto& rho : hom.action) out.action.push_back(restrict_and_project(rho, full, image));
  require_left_module(g, out);
  return out;
}

std::size_t ext1_hemi_closed(unsigned n, unsigned p, unsigned m) {
  if (m == 0) return indicator(p == n) + indicator(p == 2);
  if (m == 1) return indicator(p == n + 1) + indicator(p + 1 == n) + indicator(p == 3);
  return clebsch_gordan(n, m).multiplicity(p) + indicator(p == m + 2) + indicator(p + 2 == m);
}

std::vector<std::size_t> ext_trivial_closed(const OneDimBimodule& src, const OneDimBimodule& dst, std::size_t nmax) {
  std::vector<std::size_t> out(nmax + 1, 0);
  if (src.kind() == BimoduleKind::trivial && dst.kind() == BimoduleKind::trivial) {
    out[0] = 1;
    for (std::size_t n = 1; n <= nmax; ++n) out[n] = 2;
  } else if (src == dst) {
    out[0] = 1;
    if (nmax >= 1) out[1] = 1;
  }
  return out;
}

HemiSimple HemiSimple::make(BimoduleKind kind, unsigned weight) {
  if (kind != BimoduleKind::trivial && weight == 0) {
    throw InputError("V_0 is the trivial bimodule; symmetric and antisymmetric simples need weight >= 1");
  }
  if (kind == BimoduleKind::trivial && weight != 0) throw InputError("the trivial bimodule has weight 0");
  return HemiSimple{kind, weight};
}

std::size_t ext_simple_closed(unsigned n, const HemiSimple& src, const HemiSimple& dst, unsigned degree) {
  if (n == 0) throw InputError("n >= 1 required");
  const bool src_ok = src.kind != BimoduleKind::antisymmetric;
  const bool dst_ok = dst.kind != BimoduleKind::symmetric;
  switch (degree) {
    case 0:
      return indicator(src == dst);
    case 1:
      return src_ok && dst_ok ? ext1_hemi_closed(n, src.weight, dst.weight) : 0;
    case 2: {
      if (src.kind != BimoduleKind::symmetric || dst.kind != BimoduleKind::antisymmetric) return 0;
      // multiplicity of the weight among {Leib(h), h_Lie} = {V_n, V_2}
      auto c = [n](unsigned w) { return indicator(w == n) + indicator(w == 2); };
      return c(src.weight) * c(dst.weight);
    }
    default:
      throw UnsupportedDegree("closed forms cover Ext^0, Ext^1 and Ext^2 only");
  }
}

std::size_t ext1_hemi_oracle(unsigned n, const HemiSimple& src, const HemiSimple& dst) {
  if (src.kind == BimoduleKind::antisymmetric || dst.kind == BimoduleKind::symmetric) {
    throw InputError("the degree-1 oracle needs a symmetric or trivial source and an antisymmetric or trivial target");
  }
  const LeibnizAlgebra& h = hemi_algebra(n);
  const WeightMultiset target = decompose(SL2Module(nhat(h, simple_module(dst.weight).underlying())));
  WeightMultiset source;
  source.counts[src.weight] = 1;
  return hom_dim(source, target);
}

}  // namespace leibcoh
