#pragma once
// Numerical evaluation of indexed polynomials: tensor symbols are replaced by
// sampled component arrays, summed labels are enumerated over 1..n, and the
// coordinate variables are collected into monomials with exact complex
// coefficients evaluated as doubles.
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bkc/tensor.hpp"

namespace bkc {

using Cplx = std::complex<double>;

// Component data for one random admissible geometry at the base point.
//   nabla : n^3 values  <(nabla_{dz_d} J) dz_a, dz_p>  (plain slots, [d][a][p])
//   curv  : (2n)^4 real orthonormal-frame components <R(e_a,e_b)e_c, e_d>
//   nnj   : n^4 values  <(nabla^2 J)_{(dzb_d1, dzb_d2)} dzb_a, dzb_p> (barred)
//   phi   : free real scalar
// Barred NablaJ / plain NNJ components are complex conjugates of the stored
// ones; mixed-bar patterns for those families are rejected.  Curvature
// components for every bar pattern come from the complex frame
//   dz_j = (e_{2j-1} - i e_{2j}) / 2,   dzb_j = (e_{2j-1} + i e_{2j}) / 2
// (1-based j) applied to the real array.
struct NumericAssignment {
  int n = 1;
  uint64_t seed = 0;
  std::vector<Cplx> nabla;
  std::vector<double> curv;
  std::vector<Cplx> nnj;
  double phi = 0.0;
  std::array<std::vector<Cplx>, 16> curv_cache;

  int frame_dim() const { return 2 * n; }

  double curv_real(int a, int b, int c, int d) const {
    int N = frame_dim();
    return curv[((static_cast<size_t>(a) * N + b) * N + c) * N + d];
  }
  Cplx nabla_at(int d, int a, int p) const {
    return nabla[(static_cast<size_t>(d) * n + a) * n + p];
  }
  Cplx nnj_at(int d1, int d2, int a, int p) const {
    return nnj[((static_cast<size_t>(d1) * n + d2) * n + a) * n + p];
  }

  // Complex curvature component; slot indices are 0-based, bar mask bit k set
  // means slot k is barred.
  Cplx curv_component(int mask, int i1, int i2, int i3, int i4) const {
    std::array<int, 4> ii = {i1, i2, i3, i4};
    Cplx acc(0.0, 0.0);
    for (int bits = 0; bits < 16; ++bits) {
      Cplx w(1.0, 0.0);
      std::array<int, 4> re_idx{};
      for (int k = 0; k < 4; ++k) {
        int t = (bits >> k) & 1;
        re_idx[k] = 2 * ii[k] + t;
        if (t) w *= Cplx(0.0, ((mask >> k) & 1) ? 0.5 : -0.5);
        else w *= 0.5;
      }
      acc += w * curv_real(re_idx[0], re_idx[1], re_idx[2], re_idx[3]);
    }
    return acc;
  }

  void build_curv_cache() {
    size_t n4 = static_cast<size_t>(n) * n * n * n;
    for (int mask = 0; mask < 16; ++mask) {
      curv_cache[mask].assign(n4, Cplx(0.0, 0.0));
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
          for (int i3 = 0; i3 < n; ++i3)
            for (int i4 = 0; i4 < n; ++i4)
              curv_cache[mask][((static_cast<size_t>(i1) * n + i2) * n + i3) * n + i4] =
                  curv_component(mask, i1, i2, i3, i4);
    }
  }

  // Slot values are 1-based (matching concrete index values).
  Cplx eval_sym(const Sym& s, const std::array<int, 4>& vals) const {
    switch (s.kind) {
      case SymKind::NablaJ: {
        Cplx v = nabla_at(vals[0] - 1, vals[1] - 1, vals[2] - 1);
        if (s.bars == 0) return v;
        if (s.bars == 0b111) return std::conj(v);
        throw std::logic_error("mixed bar pattern on a NablaJ symbol");
      }
      case SymKind::Curv:
        return curv_cache[s.bars][(((static_cast<size_t>(vals[0]) - 1) * n + (vals[1] - 1)) * n +
                                   (vals[2] - 1)) * n + (vals[3] - 1)];
      case SymKind::NNJ: {
        Cplx v = nnj_at(vals[0] - 1, vals[1] - 1, vals[2] - 1, vals[3] - 1);
        if (s.bars == 0b1111) return v;
        if (s.bars == 0) return std::conj(v);
        throw std::logic_error("mixed bar pattern on an NNJ symbol");
      }
      case SymKind::Phi:
        return Cplx(phi, 0.0);
    }
    return Cplx(0.0, 0.0);
  }
};

// A monomial in the coordinate variables with concrete indices, sorted.
using VarMono = std::vector<Var>;

struct ExpandStats {
  std::map<VarMono, Cplx> monos;
  double magnitude = 0.0;  // sum of |value| over all summed contributions

  double max_abs() const {
    double m = 0.0;
    for (const auto& [k, v] : monos) m = std::max(m, std::abs(v));
    return m;
  }
};

using LabelEnv = std::map<int16_t, int>;  // label -> concrete value, 1-based

// Expands `p` into coordinate monomials under assignment `A`; free labels must
// be given concrete values through `env`, summed labels are enumerated.
inline ExpandStats numeric_expand(const Poly& p, const NumericAssignment& A,
                                  const LabelEnv& env = {}) {
  ExpandStats out;
  const double pi = std::acos(-1.0);
  std::map<int16_t, int> cnt;
  for (const auto& t : p.terms()) {
    detail::count_labels(t, cnt);
    std::vector<int16_t> bound;
    for (const auto& [lab, c] : cnt) {
      if (env.count(lab)) continue;
      if (c == 2) bound.push_back(lab);
      else throw std::logic_error("unresolved index label in numeric evaluation");
    }
    std::vector<int> assign(bound.size(), 1);
    Cplx coeff_val = t.coeff.eval(pi, A.n);
    while (true) {
      auto resolve = [&](Idx ix) -> int {
        if (ix.concrete) return ix.v;
        auto it = env.find(ix.v);
        if (it != env.end()) return it->second;
        for (size_t k = 0; k < bound.size(); ++k)
          if (bound[k] == ix.v) return assign[k];
        throw std::logic_error("unresolved index label");
      };
      bool alive = true;
      for (const auto& d : t.deltas)
        if (resolve(d.a) != resolve(d.b)) { alive = false; break; }
      if (alive) {
        Cplx val = coeff_val;
        for (const auto& s : t.syms) {
          std::array<int, 4> vals{};
          for (int k = 0; k < s.nslots; ++k) vals[k] = resolve(s.idx[k]);
          val *= A.eval_sym(s, vals);
        }
        VarMono mono;
        mono.reserve(t.vars.size());
        for (const auto& v : t.vars) mono.push_back(Var{v.kind, Idx::fixed(resolve(v.idx))});
        std::sort(mono.begin(), mono.end());
        out.monos[mono] += val;
        out.magnitude += std::abs(val);
      }
      size_t k = 0;
      for (; k < bound.size(); ++k) {
        if (++assign[k] <= A.n) break;
        assign[k] = 1;
      }
      if (k == bound.size()) break;
    }
  }
  return out;
}

// Evaluates a polynomial with no coordinate variables to a single number.
inline Cplx numeric_scalar(const Poly& p, const NumericAssignment& A, const LabelEnv& env = {}) {
  ExpandStats st = numeric_expand(p, A, env);
  Cplx acc(0.0, 0.0);
  for (const auto& [mono, v] : st.monos) {
    if (!mono.empty()) throw std::logic_error("coordinate variables in scalar evaluation");
    acc += v;
  }
  return acc;
}

// Largest monomial coefficient of a - b relative to the scale of the inputs.
inline double relative_difference(const ExpandStats& a, const ExpandStats& b) {
  std::map<VarMono, Cplx> diff = a.monos;
  for (const auto& [mono, v] : b.monos) diff[mono] -= v;
  double m = 0.0;
  for (const auto& [mono, v] : diff) m = std::max(m, std::abs(v));
  double scale = std::max(1.0, std::max(a.magnitude, b.magnitude));
  return m / scale;
}

inline double relative_residual(const ExpandStats& a) {
  return a.max_abs() / std::max(1.0, a.magnitude);
}

}  // namespace bkc
