#include "leibcoh/cohomology.hpp"

#include <map>
#include <string>

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Digits of t in base d, most significant first, length n.
std::vector<std::size_t> digits(std::size_t t, std::size_t d, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t k = n; k-- > 0;) {
    out[k] = t % d;
    t /= d;
  }
  return out;
}

std::size_t encode(const std::vector<std::size_t>& xs, std::size_t d) {
  std::size_t t = 0;
  for (std::size_t x : xs) t = t * d + x;
  return t;
}

using RowBuilder = std::map<std::size_t, Scalar>;

SparseRow finish(const RowBuilder& b) {
  SparseRow row;
  for (const auto& [col, v] : b)
    if (sgn(v) != 0) row.push_back({col, v});
  return row;
}

void add_block(std::vector<RowBuilder>& rows, const Mat& block, std::size_t col_offset, const Scalar& sign) {
  for (std::size_t a = 0; a < block.rows(); ++a)
    for (std::size_t b = 0; b < block.cols(); ++b)
      if (sgn(block(a, b)) != 0) rows[a][col_offset + b] += sign * block(a, b);
}

bool is_zero_product(const SparseMat& next, const SparseMat& prev) { return (next * prev).is_zero(); }

// Lexicographic enumeration of the p-subsets of {0..d-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  if (p > d) return out;
  std::vector<std::size_t> cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == d - p + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Mat ad_matrix(const LeibnizAlgebra& h, const Vec& x) { return h.constants().left_multiplication(x); }

// sum over slots of I ⊗ .. ⊗ a ⊗ .. ⊗ I on the q-th tensor power.
Mat tensor_derivation(const Mat& a, std::size_t q) {
  const std::size_t d = a.rows();
  Mat total(power(d, q), power(d, q));
  for (std::size_t slot = 0; slot < q; ++slot) {
    Mat term = Mat::identity(power(d, slot));
    term = kron(term, a);
    term = kron(term, Mat::identity(power(d, q - slot - 1)));
    total += term;
  }
  return total;
}

}  // namespace

CochainComplex CochainComplex::make(std::vector<std::size_t> dims, std::vector<SparseMat> differentials) {
  if (dims.empty()) throw ComplexError("a cochain complex needs at least one degree");
  if (differentials.size() + 1 > dims.size()) throw ComplexError("more differentials than degrees");
  for (std::size_t n = 0; n < differentials.size(); ++n) {
    if (differentials[n].cols() != dims[n] || differentials[n].rows() != dims[n + 1]) {
      throw ComplexError("differential d^" + std::to_string(n) + " has the wrong shape");
    }
  }
  for (std::size_t n = 0; n + 1 < differentials.size(); ++n) {
    if (!is_zero_product(differentials[n + 1], differentials[n])) {
      throw ComplexError("d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " is not zero");
    }
  }
  CochainComplex c;
  c.dims_ = std::move(dims);
  c.differentials_ = std::move(differentials);
  return c;
}

std::vector<std::size_t> CohomologyResult::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees) out.push_back(d.dim);
  return out;
}

CohomologyResult cohomology_of(const CochainComplex& complex, std::size_t top) {
  const auto& dims = complex.dims();
  const auto& ds = complex.differentials();
  if (top >= dims.size()) throw ComplexError("cohomology requested beyond the top degree of the complex");
  CohomologyResult r;
  for (std::size_t n = 0; n <= top; ++n) {
    CohomologyDegree deg;
    deg.cocycles = n < ds.size() ? kernel_basis(ds[n]) : SubspaceBasis::full(dims[n]);
    deg.coboundaries = n == 0 ? SubspaceBasis::zero(dims[0]) : image_basis(ds[n - 1]);
    if (deg.coboundaries.dim() > deg.cocycles.dim()) throw ComplexError("coboundaries exceed cocycles");
    deg.dim = deg.cocycles.dim() - deg.coboundaries.dim();
    r.degrees.push_back(std::move(deg));
  }
  return r;
}

SparseMat leibniz_differential_sparse(const LeibnizAlgebra& h, const Bimodule& m, std::size_t n) {
  if (!check_bimodule(h, m)) throw ModuleAxiomError("bimodule axioms fail");
  const std::size_t d = h.dim();
  const std::size_t dm = m.dim;
  const auto& c = h.constants();
  const std::size_t out_tensors = power(d, n + 1);
  SparseMat out(out_tensors * dm, power(d, n) * dm);
  const Mat id = Mat::identity(dm);

  for (std::size_t s = 0; s < out_tensors; ++s) {
    const auto xs = digits(s, d, n + 1);
    std::vector<RowBuilder> rows(dm);

    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) rest.push_back(xs[k]);
      add_block(rows, m.left[xs[i]], encode(rest, d) * dm, Scalar(i % 2 == 0 ? 1 : -1));
    }

    {
      std::vector<std::size_t> head(xs.begin(), xs.begin() + static_cast<long>(n));
      // (-1)^{n-1}; for n = 0 the sign is -1
      const Scalar sign = (n % 2 == 1) ? 1 : -1;
      add_block(rows, m.right[xs[n]], encode(head, d) * dm, sign);
    }

    for (std::size_t i = 0; i < n + 1; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        const Scalar sign = (i % 2 == 0) ? -1 : 1;  // (-1)^{i+1}
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(c(xs[i], xs[j], k)) == 0) continue;
          std::vector<std::size_t> t;
          for (std::size_t l = 0; l <= n; ++l) {
            if (l == i) continue;
            t.push_back(l == j ? k : xs[l]);
          }
          add_block(rows, id, encode(t, d) * dm, sign * c(xs[i], xs[j], k));
        }
      }
    }

    for (std::size_t a = 0; a < dm; ++a) out.set_row(s * dm + a, finish(rows[a]));
  }
  return out;
}

Mat leibniz_differential(const LeibnizAlgebra& h, const Bimodule& m, std::size_t n) {
  return leibniz_differential_sparse(h, m, n).to_dense();
}

namespace {

CochainComplex leibniz_complex(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax) {
  std::vector<std::size_t> dims;
  std::vector<SparseMat> ds;
  for (std::size_t n = 0; n <= qmax + 1; ++n) dims.push_back(power(h.dim(), n) * m.dim);
  for (std::size_t n = 0; n <= qmax; ++n) ds.push_back(leibniz_differential_sparse(h, m, n));
  return CochainComplex::make(std::move(dims), std::move(ds));
}

}  // namespace

CohomologyResult leibniz_cohomology(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax) {
  CohomologyResult r = cohomology_of(leibniz_complex(h, m, qmax), qmax);
  if (r.degrees[0].dim != right_invariants(m).dim()) throw ComplexError("HL^0 differs from M^h");
  return r;
}

std::vector<std::size_t> leibniz_cohomology_dims(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax) {
  const CochainComplex cx = leibniz_complex(h, m, qmax);
  std::vector<std::size_t> ranks;
  for (const auto& d : cx.differentials()) ranks.push_back(rank(d));
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= qmax; ++n) {
    const std::size_t prev = n == 0 ? 0 : ranks[n - 1];
    out.push_back(cx.dims()[n] - ranks[n] - prev);
  }
  return out;
}

Mat cochain_action(const LeibnizAlgebra& h, const LieQuotient& quotient, const Bimodule& m, std::size_t q,
                   std::size_t k) {
  const Vec x = quotient.section.column(k);
  Mat lx(m.dim, m.dim);
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (sgn(x[i]) != 0) lx += x[i] * m.left[i];
  const Mat dx = tensor_derivation(ad_matrix(h, x), q);
  const std::size_t tensors = power(h.dim(), q);
  return kron(Mat::identity(tensors), lx) - kron(dx.transpose(), Mat::identity(m.dim));
}

LeftModule hl_module_structure(const LeibnizAlgebra& h, const LieQuotient& quotient, const Bimodule& m,
                               std::size_t q, const CohomologyResult& hl) {
  if (q >= hl.degrees.size()) throw ComplexError("HL^q was not computed");
  const auto& deg = hl.degrees[q];
  LeftModule out{deg.dim, {}};
  for (std::size_t k = 0; k < quotient.algebra.dim(); ++k) {
    out.action.push_back(restrict_and_project(cochain_action(h, quotient, m, q, k), deg.cocycles, deg.coboundaries));
  }
  require_left_module(quotient.algebra, out);
  return out;
}

LeftModule hl_module_structure(const LeibnizAlgebra& h, const Bimodule& m, std::size_t q) {
  const LieQuotient quotient = lie_quotient(h);
  return hl_module_structure(h, quotient, m, q, leibniz_cohomology(h, m, q));
}

CochainComplex ce_complex(const LieAlgebra& g, const LeftModule& m) {
  require_left_module(g, m);
  const std::size_t d = g.dim();
  const std::size_t dm = m.dim;
  const auto& c = g.constants();
  const Mat id = Mat::identity(dm);

  std::vector<std::vector<std::vector<std::size_t>>> bases;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index;
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= d; ++p) {
    bases.push_back(subsets(d, p));
    std::map<std::vector<std::size_t>, std::size_t> idx;
    for (std::size_t i = 0; i < bases.back().size(); ++i) idx[bases.back()[i]] = i;
    index.push_back(std::move(idx));
    dims.push_back(bases.back().size() * dm);
  }

  std::vector<SparseMat> ds;
  for (std::size_t p = 0; p < d; ++p) {
    SparseMat dp(dims[p + 1], dims[p]);
    for (std::size_t s = 0; s < bases[p + 1].size(); ++s) {
      const auto& xs = bases[p + 1][s];
      std::vector<RowBuilder> rows(dm);
      for (std::size_t i = 0; i <= p; ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t l = 0; l <= p; ++l)
          if (l != i) rest.push_back(xs[l]);
        add_block(rows, m.action[xs[i]], index[p].at(rest) * dm, Scalar(i % 2 == 0 ? 1 : -1));
      }
      for (std::size_t i = 0; i <= p; ++i) {
        for (std::size_t j = i + 1; j <= p; ++j) {
          std::vector<std::size_t> rest;
          for (std::size_t l = 0; l <= p; ++l)
            if (l != i && l != j) rest.push_back(xs[l]);
          const Scalar base = ((i + j) % 2 == 0) ? 1 : -1;
          for (std::size_t k = 0; k < d; ++k) {
            if (sgn(c(xs[i], xs[j], k)) == 0) continue;
            bool repeated = false;
            std::size_t below = 0;
            for (std::size_t r : rest) {
              if (r == k) repeated = true;
              if (r < k) ++below;
            }
            if (repeated) continue;
            std::vector<std::size_t> t = rest;
            t.insert(t.begin() + static_cast<long>(below), k);
            const Scalar sign = (below % 2 == 0) ? base : Scalar(-base);
            add_block(rows, id, index[p].at(t) * dm, sign * c(xs[i], xs[j], k));
          }
        }
      }
      for (std::size_t a = 0; a < dm; ++a) dp.set_row(s * dm + a, finish(rows[a]));
    }
    ds.push_back(std::move(dp));
  }
  return CochainComplex::make(std::move(dims), std::move(ds));
}

CohomologyResult ce_cohomology(const LieAlgebra& g, const LeftModule& m, std::size_t pmax) {
  const CochainComplex cx = ce_complex(g, m);
  const std::size_t top = g.dim();
  CohomologyResult r = cohomology_of(cx, pmax < top ? pmax : top);
  for (std::size_t p = top + 1; p <= pmax; ++p) {
    r.degrees.push_back(CohomologyDegree{0, SubspaceBasis::zero(0), SubspaceBasis::zero(0)});
  }
  return r;
}

bool has_nondegenerate_killing_form(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<Mat> ad;
  for (std::size_t i = 0; i < d; ++i) ad.push_back(g.left_multiplication(i));
  Mat k(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Mat p = ad[i] * ad[j];
      Scalar tr = 0;
      for (std::size_t l = 0; l < d; ++l) tr += p(l, l);
      k(i, j) = tr;
    }
  }
  return rank(k) == d;
}

std::vector<std::size_t> ce_dims_weyl(const LieAlgebra& g, const LeftModule& m, std::size_t pmax) {
  if (!has_nondegenerate_killing_form(g)) throw InputError("the Weyl shortcut needs a semisimple Lie algebra");
  require_left_module(g, m);
  const std::vector<std::size_t> trivial = ce_cohomology(g, trivial_module(g, 1), pmax).dims();
  const std::size_t inv = module_invariants(m).dim();
  std::vector<std::size_t> out;
  for (std::size_t t : trivial) out.push_back(t * inv);
  return out;
}

std::vector<std::size_t> trivial_algebra_closed_form(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax) {
  if (h.dim() != 1) throw DimensionError("the closed form applies to the 1-dimensional algebra");
  if (!check_bimodule(h, m)) throw ModuleAxiomError("bimodule axioms fail");
  const SubspaceBasis inv = right_invariants(m);
  const SubspaceBasis m0 = m_zero_subspace(m);
  const SubspaceBasis mh = image_basis(m.right[0]);
  const SubspaceBasis mlow = antisymmetric_kernel(m);
  if (!contains(m0, mh) || !contains(inv, mlow)) throw ComplexError("closed-form subspaces are not nested");
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= qmax; ++n) {
    if (n == 0)
      out.push_back(inv.dim());
    else if (n % 2 == 1)
      out.push_back(m0.dim() - mh.dim());
    else
      out.push_back(inv.dim() - mlow.dim());
  }
  return out;
}

}  // namespace leibcoh
