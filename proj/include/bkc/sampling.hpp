#pragma once
// Random admissible geometric data at a point.  The sampled arrays satisfy,
// up to floating-point roundoff, every pointwise identity the engine relies
// on numerically:
//   NablaJ:  antisymmetric in its last two slots; cyclic sum over all three
//            slots vanishes (closedness of the associated two-form).
//   Curv:    antisymmetric in (0,1) and (2,3), symmetric under pair swap,
//            first Bianchi identity, and the Ricci-type pairing
//              sum_j <R(dz_j, dz_r) dzb_j, dzb_q>
//                = 1/2 sum_{j,i} DJ[j,r,i] * conj(DJ[j,q,i]).
//   NNJ, Phi: unconstrained.
// The pairing constraint is imposed as a minimal-norm correction inside the
// subspace cut out by the other symmetries (orthogonal projector + Gram
// system solved with a rank-revealing decomposition).
#include <Eigen/Dense>
#include <json.hpp>
#include <random>

#include "bkc/numeric.hpp"

namespace bkc {

namespace detail {

using Perm = std::array<int, 4>;

inline void apply_perm(const std::vector<double>& in, std::vector<double>& out, int N, Perm p) {
  std::array<int, 4> a{};
  for (a[0] = 0; a[0] < N; ++a[0])
    for (a[1] = 0; a[1] < N; ++a[1])
      for (a[2] = 0; a[2] < N; ++a[2])
        for (a[3] = 0; a[3] < N; ++a[3]) {
          size_t dst = ((static_cast<size_t>(a[0]) * N + a[1]) * N + a[2]) * N + a[3];
          size_t src = ((static_cast<size_t>(a[p[0]]) * N + a[p[1]]) * N + a[p[2]]) * N + a[p[3]];
          out[dst] = in[src];
        }
}

inline int perm_sign(Perm p) {
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Orthogonal projector onto four-index arrays with the symmetries of an
// algebraic curvature tensor (antisymmetric pairs, pair swap, first Bianchi).
inline void project_curvature_class(std::vector<double>& T, int N) {
  std::vector<double> tmp(T.size());
  auto mix = [&](Perm p, double self_w, double other_w) {
    apply_perm(T, tmp, N, p);
    for (size_t k = 0; k < T.size(); ++k) T[k] = self_w * T[k] + other_w * tmp[k];
  };
  mix({1, 0, 2, 3}, 0.5, -0.5);
  mix({0, 1, 3, 2}, 0.5, -0.5);
  mix({2, 3, 0, 1}, 0.5, 0.5);
  // Subtract the totally antisymmetric part; on the pair-symmetric class this
  // is exactly the first-Bianchi defect.
  std::vector<double> alt(T.size(), 0.0);
  Perm p = {0, 1, 2, 3};
  std::sort(p.begin(), p.end());
  do {
    apply_perm(T, tmp, N, p);
    double s = perm_sign(p) / 24.0;
    for (size_t k = 0; k < T.size(); ++k) alt[k] += s * tmp[k];
  } while (std::next_permutation(p.begin(), p.end()));
  for (size_t k = 0; k < T.size(); ++k) T[k] -= alt[k];
}

// sum_j <R(dz_j, dz_r) dzb_j, dzb_q> for the given real-frame array.
inline Eigen::MatrixXcd ricci_pairing(const NumericAssignment& A, const std::vector<double>& R) {
  int n = A.n, N = 2 * n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  auto comp = [&](int j, int r, int q) {
    Cplx acc(0.0, 0.0);
    std::array<int, 4> ii = {j, r, j, q};
    for (int bits = 0; bits < 16; ++bits) {
      Cplx w(1.0, 0.0);
      std::array<int, 4> re_idx{};
      for (int k = 0; k < 4; ++k) {
        int t = (bits >> k) & 1;
        re_idx[k] = 2 * ii[k] + t;
        if (t) w *= Cplx(0.0, k >= 2 ? 0.5 : -0.5);  // slots 2,3 barred
        else w *= 0.5;
      }
      acc += w * R[((static_cast<size_t>(re_idx[0]) * N + re_idx[1]) * N + re_idx[2]) * N + re_idx[3]];
    }
    return acc;
  };
  for (int r = 0; r < n; ++r)
    for (int q = 0; q < n; ++q)
      for (int j = 0; j < n; ++j) out(r, q) += comp(j, r, q);
  return out;
}

// Adjoint of the pairing map applied to a Hermitian matrix H:
// the real array G with  <G, T> = Re tr(pairing(T) H^*)  for all T.
inline std::vector<double> ricci_pairing_adjoint(int n, const Eigen::MatrixXcd& H) {
  int N = 2 * n;
  std::vector<double> G(static_cast<size_t>(N) * N * N * N, 0.0);
  for (int r = 0; r < n; ++r)
    for (int q = 0; q < n; ++q)
      for (int j = 0; j < n; ++j) {
        std::array<int, 4> ii = {j, r, j, q};
        for (int bits = 0; bits < 16; ++bits) {
          Cplx w(1.0, 0.0);
          std::array<int, 4> re_idx{};
          for (int k = 0; k < 4; ++k) {
            int t = (bits >> k) & 1;
            re_idx[k] = 2 * ii[k] + t;
            if (t) w *= Cplx(0.0, k >= 2 ? 0.5 : -0.5);
            else w *= 0.5;
          }
          size_t at = ((static_cast<size_t>(re_idx[0]) * N + re_idx[1]) * N + re_idx[2]) * N +
                      re_idx[3];
          G[at] += std::real(w * std::conj(H(r, q)));
        }
      }
  return G;
}

}  // namespace detail

// Residuals (relative to the array scale) of every constraint the sampler
// promises; used both by tests and by structural self-checks.
struct AdmissibleResiduals {
  double nabla_antisym = 0.0;
  double nabla_cyclic = 0.0;
  double curv_antisym_front = 0.0;
  double curv_antisym_back = 0.0;
  double curv_pair_swap = 0.0;
  double curv_bianchi = 0.0;
  double curv_ricci_pairing = 0.0;

  double max() const {
    return std::max({nabla_antisym, nabla_cyclic, curv_antisym_front, curv_antisym_back,
                     curv_pair_swap, curv_bianchi, curv_ricci_pairing});
  }
};

inline AdmissibleResiduals admissible_residuals(const NumericAssignment& A) {
  AdmissibleResiduals r;
  int n = A.n, N = 2 * n;
  double nscale = 1e-300, cscale = 1e-300;
  for (const auto& v : A.nabla) nscale = std::max(nscale, std::abs(v));
  for (double v : A.curv) cscale = std::max(cscale, std::abs(v));
  auto T = [&](int d, int a, int p) { return A.nabla_at(d, a, p); };
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < n; ++p) {
        r.nabla_antisym = std::max(r.nabla_antisym, std::abs(T(d, a, p) + T(d, p, a)) / nscale);
        r.nabla_cyclic =
            std::max(r.nabla_cyclic, std::abs(T(d, a, p) + T(a, p, d) + T(p, d, a)) / nscale);
      }
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          double v = A.curv_real(a, b, c, d);
          r.curv_antisym_front =
              std::max(r.curv_antisym_front, std::abs(v + A.curv_real(b, a, c, d)) / cscale);
          r.curv_antisym_back =
              std::max(r.curv_antisym_back, std::abs(v + A.curv_real(a, b, d, c)) / cscale);
          r.curv_pair_swap =
              std::max(r.curv_pair_swap, std::abs(v - A.curv_real(c, d, a, b)) / cscale);
          r.curv_bianchi = std::max(
              r.curv_bianchi,
              std::abs(v + A.curv_real(b, c, a, d) + A.curv_real(c, a, b, d)) / cscale);
        }
  Eigen::MatrixXcd pair = detail::ricci_pairing(A, A.curv);
  double pscale = std::max(1.0, std::max(nscale * nscale, cscale));
  for (int rr = 0; rr < n; ++rr)
    for (int q = 0; q < n; ++q) {
      Cplx target(0.0, 0.0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          target += 0.5 * A.nabla_at(j, rr, i) * std::conj(A.nabla_at(j, q, i));
      r.curv_ricci_pairing =
          std::max(r.curv_ricci_pairing, std::abs(pair(rr, q) - target) / pscale);
    }
  return r;
}

inline NumericAssignment sample_admissible(int n, uint64_t seed) {
  NumericAssignment A;
  A.n = n;
  A.seed = seed;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  std::normal_distribution<double> g(0.0, 1.0);
  int N = 2 * n;

  // NablaJ: antisymmetrize the last two slots, remove the cyclic-invariant
  // part (the two projections commute).
  size_t n3 = static_cast<size_t>(n) * n * n;
  std::vector<Cplx> T(n3);
  for (auto& v : T) v = Cplx(g(rng), g(rng));
  auto at = [&](std::vector<Cplx>& X, int d, int a, int p) -> Cplx& {
    return X[(static_cast<size_t>(d) * n + a) * n + p];
  };
  std::vector<Cplx> W(n3);
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < n; ++p) at(W, d, a, p) = 0.5 * (at(T, d, a, p) - at(T, d, p, a));
  T = W;
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < n; ++a)
      for (int p = 0; p < n; ++p)
        at(W, d, a, p) =
            at(T, d, a, p) - (at(T, d, a, p) + at(T, a, p, d) + at(T, p, d, a)) / 3.0;
  A.nabla = W;

  // Curvature: project a random array onto the algebraic curvature class,
  // then add the minimal-norm admissible correction enforcing the pairing
  // constraint.
  size_t N4 = static_cast<size_t>(N) * N * N * N;
  std::vector<double> R(N4);
  for (auto& v : R) v = g(rng);
  detail::project_curvature_class(R, N);

  int m = n * n;  // real dimension of Hermitian n x n matrices
  std::vector<Eigen::MatrixXcd> basis;
  basis.reserve(m);
  for (int r = 0; r < n; ++r) {
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
    H(r, r) = 1.0;
    basis.push_back(H);
  }
  for (int r = 0; r < n; ++r)
    for (int q = r + 1; q < n; ++q) {
      Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
      H(r, q) = 1.0;
      H(q, r) = 1.0;
      basis.push_back(H);
      H(r, q) = Cplx(0.0, 1.0);
      H(q, r) = Cplx(0.0, -1.0);
      basis.push_back(H);
    }

  std::vector<std::vector<double>> V(m);
  for (int k = 0; k < m; ++k) {
    V[k] = detail::ricci_pairing_adjoint(n, basis[k]);
    detail::project_curvature_class(V[k], N);
  }
  Eigen::MatrixXd G(m, m);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l <= k; ++l) {
      double acc = 0.0;
      for (size_t t = 0; t < N4; ++t) acc += V[k][t] * V[l][t];
      G(k, l) = G(l, k) = acc;
    }
  Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int q = 0; q < n; ++q)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          target(r, q) += 0.5 * A.nabla_at(j, r, i) * std::conj(A.nabla_at(j, q, i));
  Eigen::MatrixXcd defect = target - detail::ricci_pairing(A, R);
  Eigen::VectorXd b(m);
  for (int k = 0; k < m; ++k)
    b(k) = std::real((defect.array() * basis[k].array().conjugate()).sum());
  Eigen::VectorXd x = G.completeOrthogonalDecomposition().solve(b);
  for (int k = 0; k < m; ++k)
    for (size_t t = 0; t < N4; ++t) R[t] += x(k) * V[k][t];
  A.curv = std::move(R);

  size_t n4 = static_cast<size_t>(n) * n * n * n;
  A.nnj.resize(n4);
  for (auto& v : A.nnj) v = Cplx(g(rng), g(rng));
  A.phi = g(rng);

  A.build_curv_cache();
  return A;
}

// ---------------------------------------------------------------------------
// JSON serialization of assignments (used by the CLI for reproducibility).
// ---------------------------------------------------------------------------
inline nlohmann::json assignment_to_json(const NumericAssignment& A) {
  nlohmann::json j;
  j["n"] = A.n;
  j["seed"] = A.seed;
  auto cvec = [](const std::vector<Cplx>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : v) a.push_back({c.real(), c.imag()});
    return a;
  };
  j["nabla_j"] = cvec(A.nabla);
  j["curvature"] = A.curv;
  j["nabla2_j"] = cvec(A.nnj);
  j["phi"] = A.phi;
  return j;
}

inline NumericAssignment assignment_from_json(const nlohmann::json& j) {
  NumericAssignment A;
  A.n = j.at("n").get<int>();
  A.seed = j.at("seed").get<uint64_t>();
  auto cvec = [](const nlohmann::json& a) {
    std::vector<Cplx> v;
    for (const auto& e : a) v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return v;
  };
  A.nabla = cvec(j.at("nabla_j"));
  A.curv = j.at("curvature").get<std::vector<double>>();
  A.nnj = cvec(j.at("nabla2_j"));
  A.phi = j.at("phi").get<double>();
  A.build_curv_cache();
  return A;
}

// Two-tier vanishing test: exact cancellation, else numerical vanishing of
// every monomial coefficient across seeds and dimensions.
inline bool poly_vanishes(const Poly& p, const std::vector<int16_t>& free_labels,
                          const std::vector<int>& dims = {2, 3},
                          const std::vector<uint64_t>& seeds = {11, 12, 13, 14, 15},
                          double tol = 1e-10) {
  PinnedSet pinned(free_labels.begin(), free_labels.end());
  Poly c = p.canonical(pinned);
  if (c.empty()) return true;
  for (int n : dims) {
    for (uint64_t s : seeds) {
      NumericAssignment A = sample_admissible(n, s);
      std::vector<int> pick(free_labels.size(), 1);
      while (true) {
        LabelEnv env;
        for (size_t k = 0; k < free_labels.size(); ++k) env[free_labels[k]] = pick[k];
        ExpandStats st = numeric_expand(c, A, env);
        if (relative_residual(st) > tol) return false;
        size_t k = 0;
        for (; k < free_labels.size(); ++k) {
          if (++pick[k] <= n) break;
          pick[k] = 1;
        }
        if (k == free_labels.size()) break;
      }
    }
  }
  return true;
}

inline bool polys_match(const Poly& a, const Poly& b, const std::vector<int16_t>& free_labels = {},
                        const std::vector<int>& dims = {2, 3},
                        const std::vector<uint64_t>& seeds = {11, 12, 13, 14, 15},
                        double tol = 1e-10) {
  return poly_vanishes(a - b, free_labels, dims, seeds, tol);
}

// Measured variant of the two-tier vanishing test.  `symbolic` records exact
// cancellation; `residual` is the worst relative monomial residual over all
// dimensions, seeds, and free-label values.  When the polynomial cancels
// exactly, the numeric tier is still run on the unreduced input if
// `always_numeric` is set (a genuine floating-point cancellation check);
// otherwise the residual is reported as zero.
struct VanishReport {
  bool symbolic = false;
  double residual = 0.0;

  bool pass(double tol) const { return symbolic || residual <= tol; }
};

inline VanishReport vanish_report(const Poly& p, const std::vector<int16_t>& free_labels,
                                  const std::vector<int>& dims = {2, 3},
                                  const std::vector<uint64_t>& seeds = {11, 12, 13, 14, 15},
                                  bool always_numeric = false) {
  PinnedSet pinned(free_labels.begin(), free_labels.end());
  Poly c = p.canonical(pinned);
  VanishReport rep;
  rep.symbolic = c.empty();
  if (rep.symbolic && !always_numeric) return rep;
  const Poly& target = rep.symbolic ? p : c;
  for (int n : dims) {
    for (uint64_t s : seeds) {
      NumericAssignment A = sample_admissible(n, s);
      std::vector<int> pick(free_labels.size(), 1);
      while (true) {
        LabelEnv env;
        for (size_t k = 0; k < free_labels.size(); ++k) env[free_labels[k]] = pick[k];
        rep.residual = std::max(rep.residual, relative_residual(numeric_expand(target, A, env)));
        size_t k = 0;
        for (; k < free_labels.size(); ++k) {
          if (++pick[k] <= n) break;
          pick[k] = 1;
        }
        if (k == free_labels.size()) break;
      }
    }
  }
  return rep;
}

}  // namespace bkc
