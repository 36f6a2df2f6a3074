#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the elimination engine or the differential assemblers of the library.

#include <cstddef>
#include <random>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/bimodule.hpp"
#include "leibcoh/linear.hpp"

namespace support {

using leibcoh::Bimodule;
using leibcoh::LeibnizAlgebra;
using leibcoh::Mat;
using leibcoh::Scalar;
using leibcoh::Vec;

// Plain dense Gaussian elimination, partial pivoting on the first nonzero.
inline std::size_t naive_rank(Mat a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Scalar f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

inline Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

inline Vec apply(const Mat& m, const Vec& v) {
  Vec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline Mat operator_of(const std::vector<Mat>& ops, const Vec& x, std::size_t n) {
  Mat acc(n, n);
  for (std::size_t i = 0; i < ops.size(); ++i)
    if (sgn(x[i]) != 0) acc += x[i] * ops[i];
  return acc;
}

// A cochain Hom(h^{⊗n}, M) stored as values on basis tensors, evaluated
// multilinearly on arbitrary argument vectors.
struct Cochain {
  std::size_t d;
  std::size_t dm;
  std::size_t n;
  std::vector<Vec> values;  // values[t], t in base-d digits, first argument most significant

  Vec eval(const std::vector<Vec>& args) const {
    Vec out(dm, 0);
    std::size_t total = values.size();
    for (std::size_t t = 0; t < total; ++t) {
      Scalar coeff = 1;
      std::size_t rest = t;
      for (std::size_t k = n; k-- > 0;) {
        coeff *= args[k][rest % d];
        rest /= d;
        if (sgn(coeff) == 0) break;
      }
      if (sgn(coeff) == 0) continue;
      for (std::size_t a = 0; a < dm; ++a) out[a] += coeff * values[t][a];
    }
    return out;
  }
};

// d^n assembled column by column by evaluating the coboundary formula on
// each basis cochain.
inline Mat naive_leibniz_differential(const LeibnizAlgebra& h, const Bimodule& m, std::size_t n) {
  const std::size_t d = h.dim();
  const std::size_t dm = m.dim;
  std::size_t in_t = 1, out_t = 1;
  for (std::size_t i = 0; i < n; ++i) in_t *= d;
  out_t = in_t * d;
  Mat out(out_t * dm, in_t * dm);
  for (std::size_t col = 0; col < in_t * dm; ++col) {
    Cochain f{d, dm, n, std::vector<Vec>(in_t, Vec(dm, 0))};
    f.values[col / dm][col % dm] = 1;
    for (std::size_t s = 0; s < out_t; ++s) {
      std::vector<Vec> xs(n + 1);
      std::size_t rest = s;
      for (std::size_t k = n + 1; k-- > 0;) {
        xs[k] = unit(d, rest % d);
        rest /= d;
      }
      Vec value(dm, 0);
      auto add = [&](const Vec& v, const Scalar& sign) {
        for (std::size_t a = 0; a < dm; ++a) value[a] += sign * v[a];
      };
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Vec> args;
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i) args.push_back(xs[k]);
        add(support::apply(operator_of(m.left, xs[i], dm), f.eval(args)), i % 2 == 0 ? 1 : -1);
      }
      {
        std::vector<Vec> args(xs.begin(), xs.begin() + static_cast<long>(n));
        add(support::apply(operator_of(m.right, xs[n], dm), f.eval(args)), n % 2 == 1 ? 1 : -1);
      }
      for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          std::vector<Vec> args;
          for (std::size_t k = 0; k <= n; ++k) {
            if (k == i) continue;
            args.push_back(k == j ? h.bracket(xs[i], xs[j]) : xs[k]);
          }
          add(f.eval(args), i % 2 == 0 ? -1 : 1);
        }
      }
      for (std::size_t a = 0; a < dm; ++a) out(s * dm + a, col) = value[a];
    }
  }
  return out;
}

inline std::vector<std::size_t> naive_hl_dims(const LeibnizAlgebra& h, const Bimodule& m, std::size_t qmax) {
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> sizes;
  std::size_t t = 1;
  for (std::size_t n = 0; n <= qmax; ++n) {
    ranks.push_back(naive_rank(naive_leibniz_differential(h, m, n)));
    sizes.push_back(t * m.dim);
    t *= h.dim();
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= qmax; ++n) out.push_back(sizes[n] - ranks[n] - (n ? ranks[n - 1] : 0));
  return out;
}

inline Mat jordan(std::size_t k, const Scalar& lambda) {
  Mat j(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    j(i, i) = lambda;
    if (i + 1 < k) j(i, i + 1) = 1;
  }
  return j;
}

inline void place(Mat& big, const Mat& block, std::size_t at) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) big(at + i, at + j) = block(i, j);
}

// Unimodular upper-triangular times lower-triangular, small integer entries.
inline std::pair<Mat, Mat> random_conjugator(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  Mat u = Mat::identity(n), l = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      u(i, j) = coef(rng);
      l(j, i) = coef(rng);
    }
  Mat p = u * l;
  // inverse of u * l is l^{-1} u^{-1}; both triangular with unit diagonal
  auto tri_inverse = [n](const Mat& t, bool upper) {
    Mat inv = Mat::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      if (upper) {
        for (std::size_t i = n; i-- > 0;) {
          Scalar s = i == c ? 1 : 0;
          for (std::size_t k = i + 1; k < n; ++k) s -= t(i, k) * inv(k, c);
          inv(i, c) = s;
        }
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          Scalar s = i == c ? 1 : 0;
          for (std::size_t k = 0; k < i; ++k) s -= t(i, k) * inv(k, c);
          inv(i, c) = s;
        }
      }
    }
    return inv;
  };
  Mat pinv = tri_inverse(l, false) * tri_inverse(u, true);
  return {p, pinv};
}

// A random (generally non-simple) bimodule over the 1-dimensional algebra:
// a direct sum of symmetric Jordan blocks (L = J, R = -J), antisymmetric ones
// (L = J, R = 0), mixed 2x2 blocks and zero blocks, conjugated by a random
// unimodular matrix.
inline Bimodule random_one_dim_bimodule(std::size_t max_dim, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> total_dist(1, max_dim);
  std::uniform_int_distribution<int> kind_dist(0, 3);
  std::uniform_int_distribution<int> lam_dist(-3, 3);
  const std::size_t n = total_dist(rng);
  Mat l(n, n), r(n, n);
  std::size_t at = 0;
  while (at < n) {
    const std::size_t left = n - at;
    int kind = kind_dist(rng);
    if (kind == 2 && left < 2) kind = 0;
    std::uniform_int_distribution<std::size_t> size_dist(1, left);
    if (kind == 0 || kind == 1) {
      const std::size_t k = size_dist(rng);
      const Scalar lam = lam_dist(rng);
      const Mat j = jordan(k, lam);
      place(l, j, at);
      place(r, kind == 0 ? Mat(-j) : Mat(k, k), at);
      at += k;
    } else if (kind == 2) {
      Scalar lam = lam_dist(rng), mu = lam_dist(rng), dd = lam_dist(rng);
      if (sgn(mu) == 0) mu = 1;
      const Scalar c = lam * dd / mu - dd;
      place(l, Mat{{lam, c}, {0, mu}}, at);
      place(r, Mat{{0, dd}, {0, -mu}}, at);
      at += 2;
    } else {
      at += 1;  // zero block
    }
  }
  const auto [p, pinv] = random_conjugator(n, rng);
  return Bimodule{n, {p * l * pinv}, {p * r * pinv}};
}

}  // namespace support
