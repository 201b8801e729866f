#pragma once
// Calculus of integral-kernel polynomials Q(Z,Z')·P(Z,Z'), where P is the
// reproducing kernel of the model operator's ground space and Q ranges over
// indexed polynomials in z, z-bar, z', z-bar' with tensor coefficients.
// A Poly is interpreted as a kernel by reading each term as
//     coeff · tensors · b^{B-vars} ( coordinate-monomial · P ).
// The generators act in closed form:
//     b_j (Q·P)  = (2 pi (zb_j - zb'_j) Q - 2 dQ/dz_j) · P
//     b+_j (Q·P) = 2 (dQ/dzb_j) · P
// and the normal form peels unprimed z-bar factors into outer b-applications,
// exhibiting each kernel as a sum of exact eigencomponents of L = sum_j b_j b+_j
// with eigenvalue 4 pi (number of b factors).
#include "bkc/tensor.hpp"

namespace bkc {

inline bool term_has_b(const Term& t) {
  for (const auto& v : t.vars)
    if (v.kind == VarKind::B) return true;
  return false;
}
inline bool poly_has_b(const Poly& p) {
  for (const auto& t : p.terms())
    if (term_has_b(t)) return true;
  return false;
}

inline int unprimed_degree(const Term& t) {
  int d = 0;
  for (const auto& v : t.vars)
    if (v.kind == VarKind::Z || v.kind == VarKind::Zb) ++d;
  return d;
}
inline int primed_degree(const Term& t) {
  int d = 0;
  for (const auto& v : t.vars)
    if (var_primed(v.kind)) ++d;
  return d;
}

namespace detail {

// b_j acting on a single term with no B factors (derivative rule).
inline void apply_b_plain(Idx j, const Term& t, Poly& out) {
  {
    Term r = t;
    r.coeff *= ExactScalar::term(GaussRational(Rational(2), Rational(0)), 1, 0);
    r.vars.push_back(Var{VarKind::Zb, j});
    out.add_term(std::move(r));
  }
  {
    Term r = t;
    r.coeff *= ExactScalar::term(GaussRational(Rational(-2), Rational(0)), 1, 0);
    r.vars.push_back(Var{VarKind::Zbp, j});
    out.add_term(std::move(r));
  }
  for (size_t k = 0; k < t.vars.size(); ++k) {
    if (t.vars[k].kind != VarKind::Z) continue;
    Term r = t;
    r.coeff *= ExactScalar::rat(-2, 1);
    r.deltas.emplace_back(t.vars[k].idx, j);
    r.vars.erase(r.vars.begin() + k);
    out.add_term(std::move(r));
  }
}

}  // namespace detail

// Turns every outer b-application back into its closed-form action, leaving a
// kernel with no B factors.
inline Poly expand(const Poly& K, const PinnedSet& pinned = {}) {
  Poly out;
  for (const auto& t : K.terms()) {
    std::vector<Idx> bword;
    Term base = t;
    base.vars.clear();
    for (const auto& v : t.vars) {
      if (v.kind == VarKind::B) bword.push_back(v.idx);
      else base.vars.push_back(v);
    }
    Poly cur(base);
    // Innermost-first; the b's commute, so the order is immaterial.
    for (auto it = bword.rbegin(); it != bword.rend(); ++it) {
      Poly next;
      for (const auto& u : cur.terms()) detail::apply_b_plain(*it, u, next);
      cur = std::move(next);
    }
    out.append(cur);
  }
  return out.canonical(pinned);
}

inline Poly apply_b(Idx j, const Poly& K, const PinnedSet& pinned = {}) {
  Poly out;
  for (const auto& t : K.terms()) {
    if (term_has_b(t)) {
      Term r = t;
      r.vars.push_back(Var{VarKind::B, j});
      out.add_term(std::move(r));
    } else {
      detail::apply_b_plain(j, t, out);
    }
  }
  return out.canonical(pinned);
}

inline Poly apply_bplus(Idx j, const Poly& K, const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  Poly out;
  for (const auto& t : src.terms()) {
    for (size_t k = 0; k < t.vars.size(); ++k) {
      if (t.vars[k].kind != VarKind::Zb) continue;
      Term r = t;
      r.coeff *= ExactScalar::rat(2, 1);
      r.deltas.emplace_back(t.vars[k].idx, j);
      r.vars.erase(r.vars.begin() + k);
      out.add_term(std::move(r));
    }
  }
  return out.canonical(pinned);
}

inline Poly mult_var(VarKind kind, Idx j, const Poly& K, const PinnedSet& pinned = {}) {
  if (kind == VarKind::B) throw std::logic_error("mult_var cannot append operator factors");
  // Multiplication by unprimed variables does not commute with outer b's.
  Poly src = (!var_primed(kind) && poly_has_b(K)) ? expand(K, pinned) : K;
  Poly out = src;
  Poly res;
  for (const auto& t : out.terms()) {
    Term r = t;
    r.vars.push_back(Var{kind, j});
    res.add_term(std::move(r));
  }
  return res.canonical(pinned);
}

// L = sum_m b_m b+_m with a fresh summation label.
inline Poly apply_L(const Poly& K, const PinnedSet& pinned = {}) {
  int16_t m = K.max_label();
  for (int16_t p : pinned) m = std::max(m, p);
  Idx fresh = Idx::label(m + 1);
  return apply_b(fresh, apply_bplus(fresh, K, pinned), pinned);
}

// Fock normal form: no unprimed z-bar variables remain; every term reads
// b^{B-vars}(head·P) with head in the ground space of L.
inline Poly fock_normal_form(const Poly& K, const PinnedSet& pinned = {}) {
  Poly cur = K.canonical(pinned);
  while (true) {
    bool changed = false;
    Poly next;
    for (const auto& t : cur.terms()) {
      size_t zb_at = t.vars.size();
      for (size_t k = 0; k < t.vars.size(); ++k)
        if (t.vars[k].kind == VarKind::Zb) { zb_at = k; break; }
      if (zb_at == t.vars.size()) {
        next.add_term(t);
        continue;
      }
      changed = true;
      Idx j = t.vars[zb_at].idx;
      Term base = t;
      base.vars.erase(base.vars.begin() + zb_at);
      {
        Term r = base;
        r.coeff *= ExactScalar::term(GaussRational(Rational(1, 2)), -1, 0);
        r.vars.push_back(Var{VarKind::B, j});
        next.add_term(std::move(r));
      }
      {
        Term r = base;
        r.vars.push_back(Var{VarKind::Zbp, j});
        next.add_term(std::move(r));
      }
      for (size_t k = 0; k < base.vars.size(); ++k) {
        if (base.vars[k].kind != VarKind::Z) continue;
        Term r = base;
        r.coeff *= ExactScalar::pi_pow(-1);
        r.deltas.emplace_back(base.vars[k].idx, j);
        r.vars.erase(r.vars.begin() + k);
        next.add_term(std::move(r));
      }
    }
    cur = next.canonical(pinned);
    if (!changed) break;
  }
  return cur;
}

inline Poly project_ker(const Poly& K, const PinnedSet& pinned = {}) {
  Poly nf = fock_normal_form(K, pinned);
  Poly out;
  for (const auto& t : nf.terms())
    if (!term_has_b(t)) out.add_term(t);
  return out.canonical(pinned);
}

inline Poly apply_inv_offdiag(const Poly& K, int k, const PinnedSet& pinned = {}) {
  Poly nf = fock_normal_form(K, pinned);
  Poly out;
  for (const auto& t : nf.terms()) {
    int ell = 0;
    for (const auto& v : t.vars)
      if (v.kind == VarKind::B) ++ell;
    if (ell == 0) continue;
    Term r = t;
    BigInt denom = 1;
    for (int u = 0; u < k; ++u) denom *= 4 * ell;
    r.coeff *= ExactScalar::term(GaussRational(Rational(BigInt(1), denom)), -k, 0);
    out.add_term(std::move(r));
  }
  return out.canonical(pinned);
}

inline Poly adjoint(const Poly& K, const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  Poly out = src;
  Poly res;
  for (const auto& t : out.terms()) {
    Term r = t;
    r.coeff = r.coeff.conj();
    for (auto& s : r.syms) s.bars = static_cast<uint8_t>(s.bars ^ ((1u << s.nslots) - 1));
    for (auto& v : r.vars) v.kind = var_adjoint(v.kind);
    res.add_term(std::move(r));
  }
  return res.canonical(pinned);
}

// Kernel composition (K1 o K2)(Z,Z') = integral of K1(Z,U) K2(U,Z') over U,
// computed through K1's normal form and the reproducing property of P.
inline Poly compose(const Poly& K1, const Poly& K2, const PinnedSet& pinned = {}) {
  Poly nf = fock_normal_form(K1, pinned);
  // The right factor must be a plain polynomial kernel before mixing: raising
  // words attached to it would otherwise capture the left factor's variables.
  Poly rhs = poly_has_b(K2) ? expand(K2, pinned) : K2;
  // Holding the left component's labels fixed must not capture the right
  // factor's summed labels, so move those above every id in use on the left.
  int16_t top = std::max(nf.max_label(), rhs.max_label());
  for (int16_t p : pinned) top = std::max(top, p);
  Poly rhs_shifted;
  for (const auto& tb : rhs.terms())
    rhs_shifted.add_term(shift_bound_labels(tb, top + 1, pinned));
  Poly out;
  std::map<int16_t, int> cnt;
  for (const auto& t : nf.terms()) {
    std::vector<Idx> bword;
    std::vector<Var> hu;
    Term spine = t;
    spine.vars.clear();
    for (const auto& v : t.vars) {
      switch (v.kind) {
        case VarKind::B: bword.push_back(v.idx); break;
        case VarKind::Z: hu.push_back(v); break;
        case VarKind::Zp: spine.vars.push_back(Var{VarKind::Z, v.idx}); break;
        case VarKind::Zbp: spine.vars.push_back(Var{VarKind::Zb, v.idx}); break;
        default: throw std::logic_error("normal form left an unprimed z-bar factor");
      }
    }
    // Keep every label of this component fixed while mixing in K2.
    PinnedSet held = pinned;
    detail::count_labels(t, cnt);
    for (const auto& [lab, c] : cnt) held.insert(lab);
    Poly mixed = poly_product(Poly(spine), rhs_shifted, held);
    Poly proj = project_ker(mixed, held);
    for (const auto& u : proj.terms()) {
      Term r = u;
      for (const auto& v : hu) r.vars.push_back(v);
      for (const auto& j : bword) r.vars.push_back(Var{VarKind::B, j});
      out.add_term(std::move(r));
    }
  }
  return expand(out, pinned);
}

inline Poly eval_origin(const Poly& K, const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  Poly out;
  for (const auto& t : src.terms())
    if (t.vars.empty()) out.add_term(t);
  return out.canonical(pinned);
}

// Coefficient extraction at the origin.  extract_pair picks the coefficient of
// v1_R · v2_Q among terms of exactly that shape (two free result indices).
inline Poly extract_pair(const Poly& K, VarKind k1, Idx R, VarKind k2, Idx Q,
                         const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  Poly out;
  for (const auto& t : src.terms()) {
    if (t.vars.size() != 2) continue;
    for (int flip = 0; flip < 2; ++flip) {
      const Var& a = t.vars[flip];
      const Var& b = t.vars[1 - flip];
      if (a.kind == k1 && b.kind == k2) {
        Term r = t;
        r.vars.clear();
        r.deltas.emplace_back(a.idx, R);
        r.deltas.emplace_back(b.idx, Q);
        out.add_term(std::move(r));
        break;  // k1 != k2 in every use, so at most one orientation matches
      }
    }
  }
  PinnedSet pp = pinned;
  pp.insert(R.v);
  pp.insert(Q.v);
  return out.canonical(pp);
}

inline Poly extract_linear(const Poly& K, VarKind k1, Idx R, const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  Poly out;
  for (const auto& t : src.terms()) {
    if (t.vars.size() != 1 || t.vars[0].kind != k1) continue;
    Term r = t;
    r.vars.clear();
    r.deltas.emplace_back(t.vars[0].idx, R);
    out.add_term(std::move(r));
  }
  PinnedSet pp = pinned;
  pp.insert(R.v);
  return out.canonical(pp);
}

inline Poly swap_free_labels(const Poly& p, Idx a, Idx b) {
  Poly out;
  for (Term t : p.terms()) {
    detail::rename_label(t, a.v, Idx::label(30000));
    detail::rename_label(t, b.v, a);
    detail::rename_label(t, static_cast<int16_t>(30000), b);
    out.add_term(std::move(t));
  }
  return out;
}

// Diagonal two-form of a kernel at the base point.  Blocks are indexed by the
// free labels R, Q:
//   mixed: coefficient of dz_R ^ dzb_Q,
//   holo:  coefficient of dz_R ^ dz_Q   (antisymmetric representative),
//   anti:  coefficient of dzb_R ^ dzb_Q (antisymmetric representative).
// Differentiating the P factor contributes pi·delta_RQ times the value at the
// origin to the mixed block; every other second derivative of P vanishes
// there.
struct TwoForm {
  Idx R = Idx::label(200), Q = Idx::label(201);
  Poly mixed, holo, anti;

  TwoForm scaled(const ExactScalar& c) const {
    TwoForm r = *this;
    r.mixed = r.mixed.scaled(c);
    r.holo = r.holo.scaled(c);
    r.anti = r.anti.scaled(c);
    return r;
  }
  TwoForm operator+(const TwoForm& o) const {
    TwoForm r = *this;
    r.mixed = r.mixed + o.mixed;
    r.holo = r.holo + o.holo;
    r.anti = r.anti + o.anti;
    return r;
  }
  TwoForm operator-(const TwoForm& o) const { return *this + o.scaled(-ExactScalar::one()); }
  PinnedSet pinned() const { return PinnedSet{R.v, Q.v}; }
  bool exact_zero() const {
    PinnedSet p = pinned();
    return mixed.canonical(p).empty() && holo.canonical(p).empty() && anti.canonical(p).empty();
  }
};

inline TwoForm diagonal_two_form(const Poly& K, Idx R = Idx::label(200), Idx Q = Idx::label(201),
                                 const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  PinnedSet pp = pinned;
  pp.insert(R.v);
  pp.insert(Q.v);
  TwoForm f;
  f.R = R;
  f.Q = Q;

  Poly A = extract_pair(src, VarKind::Z, R, VarKind::Zbp, Q, pinned);
  Poly origin = eval_origin(src, pinned);
  for (Term t : origin.terms()) {
    t.coeff *= ExactScalar::pi_pow(1);
    t.deltas.emplace_back(R, Q);
    A.add_term(std::move(t));
  }
  Poly D = extract_pair(src, VarKind::Zb, R, VarKind::Zp, Q, pinned);
  f.mixed = (A - swap_free_labels(D, R, Q)).canonical(pp);

  Poly B = extract_pair(src, VarKind::Z, R, VarKind::Zp, Q, pinned);
  f.holo = (B - swap_free_labels(B, R, Q)).scaled(ExactScalar::rat(1, 2)).canonical(pp);
  Poly C = extract_pair(src, VarKind::Zb, R, VarKind::Zbp, Q, pinned);
  f.anti = (C - swap_free_labels(C, R, Q)).scaled(ExactScalar::rat(1, 2)).canonical(pp);
  return f;
}

// Builders for expected two-forms: coeff·dz_R^dzb_Q (mixed) or wedge squares,
// antisymmetrized as needed.
inline TwoForm wedge_mixed(const Poly& coeff, Idx R = Idx::label(200), Idx Q = Idx::label(201)) {
  TwoForm f;
  f.R = R;
  f.Q = Q;
  f.mixed = coeff.canonical(f.pinned());
  return f;
}
inline TwoForm wedge_anti(const Poly& coeff, Idx R = Idx::label(200), Idx Q = Idx::label(201)) {
  TwoForm f;
  f.R = R;
  f.Q = Q;
  f.anti = (coeff - swap_free_labels(coeff, R, Q)).scaled(ExactScalar::rat(1, 2)).canonical(f.pinned());
  return f;
}
inline TwoForm wedge_holo(const Poly& coeff, Idx R = Idx::label(200), Idx Q = Idx::label(201)) {
  TwoForm f;
  f.R = R;
  f.Q = Q;
  f.holo = (coeff - swap_free_labels(coeff, R, Q)).scaled(ExactScalar::rat(1, 2)).canonical(f.pinned());
  return f;
}

// Degree filters used by the tracked ("up to higher order") comparisons.
inline Poly truncate_degrees(const Poly& K, int max_unprimed, int max_primed,
                             const PinnedSet& pinned = {}) {
  Poly src = poly_has_b(K) ? expand(K, pinned) : K;
  Poly out;
  for (const auto& t : src.terms()) {
    if (max_unprimed >= 0 && unprimed_degree(t) > max_unprimed) continue;
    if (max_primed >= 0 && primed_degree(t) > max_primed) continue;
    out.add_term(t);
  }
  return out.canonical(pinned);
}

// Joint parity classes (degree mod 2) present in a kernel's polynomial part.
inline std::set<int> parities(const Poly& K) {
  Poly src = poly_has_b(K) ? expand(K) : K;
  std::set<int> out;
  for (const auto& t : src.terms()) out.insert(t.var_degree() % 2);
  return out;
}

}  // namespace bkc
