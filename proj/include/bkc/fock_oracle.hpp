#pragma once
// Finite-dimensional numerical model of the kernel calculus.  States are
// indexed by pairs of multi-indices (alpha, beta) standing for the result of
// applying the raising word of order alpha to the monomial of order beta times
// the ground state, normalized to unit length.  All generators act by sparse
// matrices; truncation is tracked explicitly so comparisons never silently use
// columns that lost components at the degree cutoff.
#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "bkc/numeric.hpp"
#include "bkc/operator_expr.hpp"

namespace bkc {

using MultiIndex = std::vector<int>;

inline int mi_total(const MultiIndex& m) {
  int s = 0;
  for (int v : m) s += v;
  return s;
}

struct FockState {
  MultiIndex alpha, beta;
  int degree() const { return mi_total(alpha) + mi_total(beta); }
};

// Squared norm of the unnormalized state attached to (alpha, beta).
inline double fock_norm_sq(const MultiIndex& alpha, const MultiIndex& beta) {
  const double pi = std::acos(-1.0);
  double v = 1.0;
  for (int a : alpha) {
    for (int k = 1; k <= a; ++k) v *= 4.0 * pi * k;
  }
  for (int b : beta) {
    for (int k = 1; k <= b; ++k) v *= k / pi;
  }
  return v;
}

struct FockBasis {
  int n = 1, D = 0;
  std::vector<FockState> states;
  std::map<std::pair<MultiIndex, MultiIndex>, int> lookup;
  std::vector<int> ground;  // indices of states with alpha == 0

  size_t size() const { return states.size(); }

  int find(const MultiIndex& a, const MultiIndex& b) const {
    auto it = lookup.find({a, b});
    return it == lookup.end() ? -1 : it->second;
  }

  static FockBasis make(int n, int D) {
    FockBasis out;
    out.n = n;
    out.D = D;
    MultiIndex buf(2 * n, 0);
    // Enumerate all exponent tuples of total degree at most D.
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == 2 * n) {
        FockState st;
        st.alpha.assign(buf.begin(), buf.begin() + n);
        st.beta.assign(buf.begin() + n, buf.end());
        out.states.push_back(std::move(st));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        buf[slot] = v;
        rec(slot + 1, left - v);
      }
      buf[slot] = 0;
    };
    rec(0, D);
    std::sort(out.states.begin(), out.states.end(), [](const FockState& x, const FockState& y) {
      if (x.degree() != y.degree()) return x.degree() < y.degree();
      if (x.alpha != y.alpha) return x.alpha < y.alpha;
      return x.beta < y.beta;
    });
    for (size_t i = 0; i < out.states.size(); ++i) {
      out.lookup[{out.states[i].alpha, out.states[i].beta}] = static_cast<int>(i);
      if (mi_total(out.states[i].alpha) == 0) out.ground.push_back(static_cast<int>(i));
    }
    return out;
  }
};

using SpMat = Eigen::SparseMatrix<Cplx>;

// Orthonormal-basis matrices of the generators, plus the ground projection and
// the inverse of the model operator off the ground space (both diagonal).
struct FockOps {
  int n = 1, D = 0;
  std::vector<SpMat> b, bplus, mz, mzb;  // one per coordinate, 0-based
  Eigen::VectorXd proj_diag, inv_diag;
  Eigen::MatrixXcd ground_cols;  // unit columns spanning the ground space

  static FockOps make(const FockBasis& basis) {
    const double pi = std::acos(-1.0);
    const int N = static_cast<int>(basis.size());
    FockOps out;
    out.n = basis.n;
    out.D = basis.D;
    out.proj_diag = Eigen::VectorXd::Zero(N);
    out.inv_diag = Eigen::VectorXd::Zero(N);
    for (int i = 0; i < N; ++i) {
      int ka = mi_total(basis.states[i].alpha);
      if (ka == 0) out.proj_diag[i] = 1.0;
      else out.inv_diag[i] = 1.0 / (4.0 * pi * ka);
    }
    out.ground_cols = Eigen::MatrixXcd::Zero(N, static_cast<int>(basis.ground.size()));
    for (size_t g = 0; g < basis.ground.size(); ++g)
      out.ground_cols(basis.ground[g], static_cast<int>(g)) = 1.0;

    using Trip = Eigen::Triplet<Cplx>;
    std::vector<std::vector<Trip>> tb(basis.n), tbp(basis.n), tz(basis.n), tzb(basis.n);
    for (int i = 0; i < N; ++i) {
      const FockState& st = basis.states[i];
      for (int j = 0; j < basis.n; ++j) {
        MultiIndex a = st.alpha, bb = st.beta;
        int aj = a[j], bj = bb[j];
        auto put = [&](std::vector<Trip>& t, const MultiIndex& na, const MultiIndex& nb, double v) {
          int row = basis.find(na, nb);
          if (row >= 0 && v != 0.0) t.emplace_back(row, i, Cplx(v, 0.0));
        };
        a[j] = aj + 1;
        put(tb[j], a, bb, std::sqrt(4.0 * pi * (aj + 1)));
        put(tzb[j], a, bb, std::sqrt((aj + 1) / pi));
        a[j] = aj - 1;
        if (aj > 0) {
          put(tbp[j], a, bb, std::sqrt(4.0 * pi * aj));
          put(tz[j], a, bb, std::sqrt(aj / pi));
        }
        a[j] = aj;
        bb[j] = bj + 1;
        put(tz[j], a, bb, std::sqrt((bj + 1) / pi));
        bb[j] = bj - 1;
        if (bj > 0) put(tzb[j], a, bb, std::sqrt(bj / pi));
      }
    }
    auto pack = [&](std::vector<std::vector<Trip>>& tt, std::vector<SpMat>& mm) {
      for (int j = 0; j < basis.n; ++j) {
        SpMat M(N, N);
        M.setFromTriplets(tt[j].begin(), tt[j].end());
        mm.push_back(std::move(M));
      }
    };
    pack(tb, out.b);
    pack(tbp, out.bplus);
    pack(tz, out.mz);
    pack(tzb, out.mzb);
    return out;
  }
};

// A matrix together with truncation bookkeeping.  `raise`/`lower` bound the
// degree shift of the operator; `good` is the largest input degree whose
// columns are complete (no component was lost to the cutoff).
struct FockMatrix {
  Eigen::MatrixXcd m;
  int raise = 0, lower = 0, good = 0;
};

inline FockMatrix fock_zero(const FockBasis& basis) {
  FockMatrix f;
  f.m = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  f.good = basis.D;
  return f;
}

inline FockMatrix fm_scale(FockMatrix a, Cplx c) {
  a.m *= c;
  return a;
}

inline FockMatrix fm_add(const FockMatrix& a, const FockMatrix& b) {
  FockMatrix c;
  c.m = a.m + b.m;
  c.raise = std::max(a.raise, b.raise);
  c.lower = std::max(a.lower, b.lower);
  c.good = std::min(a.good, b.good);
  return c;
}

inline FockMatrix fm_mul(const FockMatrix& a, const FockMatrix& b) {
  FockMatrix c;
  c.m = a.m * b.m;
  c.raise = a.raise + b.raise;
  c.lower = a.lower + b.lower;
  c.good = std::min(b.good, a.good - b.raise);
  return c;
}

// Apply a one-step generator on the output side (operator acts after `a`).
inline FockMatrix fm_gen_left(const SpMat& G, int graise, int glower, const FockMatrix& a, int D) {
  FockMatrix c;
  c.m = G * a.m;
  c.raise = a.raise + graise;
  c.lower = a.lower + glower;
  c.good = std::min(a.good, (D - std::max(graise, 0)) - a.raise);
  return c;
}

// Apply a one-step generator on the input side (generator acts before `a`).
inline FockMatrix fm_gen_right(const FockMatrix& a, const SpMat& G, int graise, int glower, int D) {
  FockMatrix c;
  c.m = a.m * G;
  c.raise = a.raise + graise;
  c.lower = a.lower + glower;
  c.good = std::min(D - std::max(graise, 0), a.good - graise);
  return c;
}

inline FockMatrix fm_diag(const Eigen::VectorXd& d, const FockMatrix& a, int D) {
  FockMatrix c;
  c.m = d.cast<Cplx>().asDiagonal() * a.m;
  c.raise = a.raise;
  c.lower = a.lower;
  c.good = std::min(a.good, D - a.raise);
  return c;
}

// Conjugate transpose.  Rows beyond the completeness threshold of `a` are
// cleared: their true values are zero for the columns that remain valid, but
// the computed entries there carry truncation noise.
inline FockMatrix fm_adjoint(const FockMatrix& a, const FockBasis& basis) {
  FockMatrix c;
  c.m = a.m.adjoint();
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis.states[i].degree() > a.good) c.m.row(i).setZero();
  c.raise = a.lower;
  c.lower = a.raise;
  c.good = a.good - a.lower;
  return c;
}

// Matrix of a kernel polynomial.  Each concrete monomial contributes
// (outer word) x (ground projection) x (input-side multiplications); bound
// index labels are enumerated by the numeric expander, open labels must be
// resolved through `env`.
inline FockMatrix matrix_of(const Poly& p, const FockBasis& basis, const FockOps& ops,
                            const NumericAssignment& data, const LabelEnv& env = {}) {
  if (data.n != basis.n) throw std::invalid_argument("dimension mismatch between data and basis");
  ExpandStats st = numeric_expand(p, data, env);
  const int N = static_cast<int>(basis.size());
  const int g = static_cast<int>(basis.ground.size());
  FockMatrix out = fock_zero(basis);
  int max_steps = 0;
  // Group monomials by their output-side word so each group costs one dense
  // product; the input-side rows accumulate cheaply.
  std::map<VarMono, Eigen::MatrixXcd> rows_by_left;
  for (const auto& [mono, val] : st.monos) {
    if (std::abs(val) == 0.0) continue;
    VarMono left, right;
    for (const auto& v : mono) {
      if (v.idx.v < 1 || v.idx.v > basis.n)
        throw std::out_of_range("coordinate index exceeds the dimension");
      (v.kind == VarKind::Zp || v.kind == VarKind::Zbp ? right : left).push_back(v);
    }
    max_steps = std::max(max_steps, static_cast<int>(mono.size()));
    Eigen::MatrixXcd rows = ops.ground_cols.adjoint();  // g x N
    for (const auto& v : right)
      rows = rows * (v.kind == VarKind::Zp ? ops.mz : ops.mzb)[v.idx.v - 1];
    auto [it, fresh] = rows_by_left.try_emplace(left, Eigen::MatrixXcd::Zero(g, N));
    (void)fresh;
    it->second += val * rows;
  }
  for (const auto& [left, rows] : rows_by_left) {
    Eigen::MatrixXcd cols = ops.ground_cols;  // N x g
    for (const auto& v : left) {
      if (v.kind == VarKind::Z) cols = ops.mz[v.idx.v - 1] * cols;
      else if (v.kind == VarKind::Zb) cols = ops.mzb[v.idx.v - 1] * cols;
    }
    for (const auto& v : left)
      if (v.kind == VarKind::B) cols = ops.b[v.idx.v - 1] * cols;
    out.m += cols * rows;
  }
  out.raise = max_steps;
  out.lower = max_steps;
  out.good = basis.D - max_steps;
  return out;
}

namespace detail {

// Index labels contributed by the node itself (not its children): generator
// indices, and labels left open by the node's polynomial payload.
inline void expr_own_labels(const OperatorExpr& e, std::map<int16_t, int>& occ) {
  switch (e.kind) {
    case OpKind::ApplyB:
    case OpKind::ApplyBplus:
    case OpKind::MultiplyVar:
      if (!e.index.concrete) occ[e.index.v] += 1;
      break;
    case OpKind::LeafKernel:
    case OpKind::ScalePoly: {
      std::set<int16_t> seen;
      for (const auto& t : e.payload.terms()) {
        std::map<int16_t, int> cnt;
        count_labels(t, cnt);
        for (const auto& [lbl, c] : cnt)
          if (c == 1) seen.insert(lbl);
      }
      for (int16_t l : seen) occ[l] += 1;
      break;
    }
    default:
      break;
  }
}

inline void expr_tree_labels(const OperatorExpr& e, std::map<int16_t, int>& occ) {
  expr_own_labels(e, occ);
  for (const auto& c : e.children) expr_tree_labels(c, occ);
}

}  // namespace detail

// Numerical walk of an operator pipeline.  A summation label shared between
// several parts of a node (its own payload/index and child subtrees) is closed
// at that node: the evaluator sums the node over all coordinate values of the
// label.  Labels repeated inside a single child are closed deeper down.
class OracleEvaluator {
 public:
  OracleEvaluator(const FockBasis& basis, const FockOps& ops, const NumericAssignment& data)
      : basis_(basis), ops_(ops), data_(data) {}

  FockMatrix eval(const OperatorExpr& e, const LabelEnv& env = {}) const {
    std::vector<std::set<int16_t>> parts;
    {
      std::map<int16_t, int> own;
      detail::expr_own_labels(e, own);
      std::set<int16_t> s;
      for (const auto& [l, c] : own) s.insert(l);
      parts.push_back(std::move(s));
    }
    for (const auto& c : e.children) {
      std::map<int16_t, int> occ;
      detail::expr_tree_labels(c, occ);
      std::set<int16_t> s;
      for (const auto& [l, cnt] : occ) s.insert(l);
      parts.push_back(std::move(s));
    }
    std::map<int16_t, int> part_count;
    for (const auto& s : parts)
      for (int16_t l : s)
        if (!env.count(l)) part_count[l] += 1;
    std::vector<int16_t> closed;
    for (const auto& [l, c] : part_count)
      if (c >= 2) closed.push_back(l);
    if (closed.empty()) return eval_core(e, env);

    std::vector<int> assign(closed.size(), 1);
    FockMatrix acc = fock_zero(basis_);
    bool first = true;
    while (true) {
      LabelEnv sub = env;
      for (size_t k = 0; k < closed.size(); ++k) sub[closed[k]] = assign[k];
      FockMatrix piece = eval_core(e, sub);
      acc = first ? piece : fm_add(acc, piece);
      first = false;
      size_t k = 0;
      for (; k < closed.size(); ++k) {
        if (++assign[k] <= basis_.n) break;
        assign[k] = 1;
      }
      if (k == closed.size()) break;
    }
    return acc;
  }

 private:
  const FockBasis& basis_;
  const FockOps& ops_;
  const NumericAssignment& data_;

  int resolve(Idx ix, const LabelEnv& env) const {
    int v;
    if (ix.concrete) {
      v = ix.v;
    } else {
      auto it = env.find(ix.v);
      if (it == env.end()) throw std::logic_error("open index label in pipeline evaluation");
      v = it->second;
    }
    if (v < 1 || v > basis_.n) throw std::out_of_range("coordinate index exceeds the dimension");
    return v;
  }

  FockMatrix eval_core(const OperatorExpr& e, const LabelEnv& env) const {
    switch (e.kind) {
      case OpKind::LeafP: {
        FockMatrix f = fock_zero(basis_);
        f.m = ops_.proj_diag.cast<Cplx>().asDiagonal();
        return f;
      }
      case OpKind::LeafKernel:
        return matrix_of(e.payload, basis_, ops_, data_, env);
      case OpKind::ApplyB:
        return fm_gen_left(ops_.b[resolve(e.index, env) - 1], 1, 0, eval(e.children[0], env),
                           basis_.D);
      case OpKind::ApplyBplus:
        return fm_gen_left(ops_.bplus[resolve(e.index, env) - 1], -1, 1, eval(e.children[0], env),
                           basis_.D);
      case OpKind::MultiplyVar: {
        int j = resolve(e.index, env) - 1;
        FockMatrix child = eval(e.children[0], env);
        switch (e.vkind) {
          case VarKind::Z:
            return fm_gen_left(ops_.mz[j], 1, 1, child, basis_.D);
          case VarKind::Zb:
            return fm_gen_left(ops_.mzb[j], 1, 1, child, basis_.D);
          case VarKind::Zp:
            return fm_gen_right(child, ops_.mz[j], 1, 1, basis_.D);
          case VarKind::Zbp:
            return fm_gen_right(child, ops_.mzb[j], 1, 1, basis_.D);
          case VarKind::B:
            throw std::logic_error("outer generator word is not a multiplication");
        }
        throw std::logic_error("unhandled variable kind");
      }
      case OpKind::ScaleScalar: {
        const double pi = std::acos(-1.0);
        return fm_scale(eval(e.children[0], env), e.scalar.eval(pi, basis_.n));
      }
      case OpKind::ScalePoly: {
        FockMatrix child = eval(e.children[0], env);
        ExpandStats st = numeric_expand(e.payload, data_, env);
        FockMatrix acc = fock_zero(basis_);
        bool first = true;
        for (const auto& [mono, val] : st.monos) {
          FockMatrix piece = child;
          for (const auto& v : mono) {
            int j = v.idx.v;
            if (j < 1 || j > basis_.n)
              throw std::out_of_range("coordinate index exceeds the dimension");
            switch (v.kind) {
              case VarKind::Z:
                piece = fm_gen_left(ops_.mz[j - 1], 1, 1, piece, basis_.D);
                break;
              case VarKind::Zb:
                piece = fm_gen_left(ops_.mzb[j - 1], 1, 1, piece, basis_.D);
                break;
              case VarKind::Zp:
                piece = fm_gen_right(piece, ops_.mz[j - 1], 1, 1, basis_.D);
                break;
              case VarKind::Zbp:
                piece = fm_gen_right(piece, ops_.mzb[j - 1], 1, 1, basis_.D);
                break;
              case VarKind::B:
                throw std::logic_error("outer generator word inside a multiplier");
            }
          }
          piece = fm_scale(piece, val);
          acc = first ? piece : fm_add(acc, piece);
          first = false;
        }
        return acc;
      }
      case OpKind::Project:
        return fm_diag(ops_.proj_diag, eval(e.children[0], env), basis_.D);
      case OpKind::Offdiag: {
        FockMatrix child = eval(e.children[0], env);
        return fm_add(child, fm_scale(fm_diag(ops_.proj_diag, child, basis_.D), -1.0));
      }
      case OpKind::InvOffdiag: {
        Eigen::VectorXd d = ops_.inv_diag;
        for (int k = 1; k < e.power; ++k) d = d.cwiseProduct(ops_.inv_diag);
        return fm_diag(d, eval(e.children[0], env), basis_.D);
      }
      case OpKind::Adjoint:
        return fm_adjoint(eval(e.children[0], env), basis_);
      case OpKind::Compose: {
        FockMatrix acc = eval(e.children[0], env);
        for (size_t i = 1; i < e.children.size(); ++i)
          acc = fm_mul(acc, eval(e.children[i], env));
        return acc;
      }
      case OpKind::Sum: {
        FockMatrix acc = eval(e.children[0], env);
        for (size_t i = 1; i < e.children.size(); ++i) acc = fm_add(acc, eval(e.children[i], env));
        return acc;
      }
    }
    throw std::logic_error("unhandled expression node");
  }
};

inline FockMatrix matrix_of(const OperatorExpr& e, const FockBasis& basis, const FockOps& ops,
                            const NumericAssignment& data, const LabelEnv& env = {}) {
  std::map<int16_t, int> occ;
  detail::expr_tree_labels(e, occ);
  for (const auto& [l, c] : occ)
    if (c == 1 && !env.count(l))
      throw std::logic_error("open index label in pipeline evaluation");
  return OracleEvaluator(basis, ops, data).eval(e, env);
}

struct InteriorComparison {
  double residual = 0.0;  // largest entry difference over the compared block
  double scale = 1.0;     // max(1, largest entry magnitude of either block)
  int cap = 0;            // input degree up to which columns were compared
  double relative() const { return residual / scale; }
};

// Compare two operator matrices on the columns both computed without
// truncation loss.  Throws when the remaining margin is below `min_cap`:
// a silent comparison on an empty or too-shallow block would be meaningless.
inline InteriorComparison compare_interior(const FockMatrix& a, const FockMatrix& b,
                                           const FockBasis& basis, int min_cap) {
  InteriorComparison out;
  out.cap = std::min(a.good, b.good);
  if (out.cap < min_cap)
    throw std::runtime_error("degree budget exhausted: comparison cap " + std::to_string(out.cap) +
                             " is below the required " + std::to_string(min_cap) +
                             "; raise the basis cutoff");
  for (size_t j = 0; j < basis.size(); ++j) {
    if (basis.states[j].degree() > out.cap) continue;
    out.residual = std::max(out.residual, (a.m.col(j) - b.m.col(j)).cwiseAbs().maxCoeff());
    out.scale = std::max({out.scale, a.m.col(j).cwiseAbs().maxCoeff(), b.m.col(j).cwiseAbs().maxCoeff()});
  }
  return out;
}

// Compare two operator matrices on an explicit row/column degree box.  For a
// conjugate-transposed composite the trustworthy data sits in the rows kept by
// the adjoint (each such entry mirrors an entry on a complete column of the
// original), while a kernel matrix is trustworthy on its complete columns; the
// intersection of the two regions is a rectangular block rather than the
// column interior.
inline InteriorComparison compare_block(const FockMatrix& a, const FockMatrix& b,
                                        const FockBasis& basis, int row_cap, int col_cap,
                                        int min_cap) {
  InteriorComparison out;
  out.cap = std::min(row_cap, col_cap);
  if (out.cap < min_cap)
    throw std::runtime_error("degree budget exhausted: comparison cap " + std::to_string(out.cap) +
                             " is below the required " + std::to_string(min_cap) +
                             "; raise the basis cutoff");
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis.states[i].degree() > row_cap) continue;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (basis.states[j].degree() > col_cap) continue;
      Cplx va = a.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      Cplx vb = b.m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      out.residual = std::max(out.residual, std::abs(va - vb));
      out.scale = std::max({out.scale, std::abs(va), std::abs(vb)});
    }
  }
  return out;
}

// Eigenvalues of the model operator assembled from the generator matrices.
inline Eigen::VectorXd model_operator_spectrum(const FockBasis& basis, const FockOps& ops) {
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (int j = 0; j < basis.n; ++j) L += Eigen::MatrixXcd(ops.b[j] * ops.bplus[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(L);
  return es.eigenvalues();
}

// Nodes and weights for integrals against exp(-t^2) on the line.
inline void gauss_hermite(int m, std::vector<double>& x, std::vector<double>& w) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
  for (int k = 0; k + 1 < m; ++k) J(k, k + 1) = J(k + 1, k) = std::sqrt((k + 1) / 2.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  const double spi = std::sqrt(std::acos(-1.0));
  x.resize(m);
  w.resize(m);
  for (int i = 0; i < m; ++i) {
    x[i] = es.eigenvalues()[i];
    double v0 = es.eigenvectors()(0, i);
    w[i] = spi * v0 * v0;
  }
}

// Default degree cutoff balancing accuracy margin against matrix size.
inline int default_cutoff(int n) { return n == 1 ? 12 : 8; }

}  // namespace bkc
