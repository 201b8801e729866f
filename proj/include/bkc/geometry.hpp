#pragma once

// Geometric payload builders.  The covariant data of the model (first and
// second derivatives of the almost complex structure, curvature components,
// and the trace scalar) enter the kernel calculus only through polynomial
// "payloads": indexed coefficient symbols contracted against radial variables.
// This header expands the pairing of tensor data with the radial field
// (the sum of the holomorphic and antiholomorphic position vectors) into
// explicit indexed terms, using
//   <dz_i, dzb_j> = delta_ij/2,   <dz_i, dz_j> = <dzb_i, dzb_j> = 0,
// and the type purity of the DJ family (mixed bar patterns vanish).
//
// It also provides the first-order correction operator acting on kernels and
// the scalar invariants used as comparison targets.

#include "bkc/kernel.hpp"

namespace bkc {

namespace detail {
inline Poly one_term(const ExactScalar& c, std::vector<Sym> syms, std::vector<Var> vars) {
  Term t;
  t.coeff = c;
  t.syms = std::move(syms);
  t.vars = std::move(vars);
  Poly p;
  p.add_term(std::move(t));
  return p;
}
inline ExactScalar rat_pi(long long num, long long den, int pi_exp) {
  return ExactScalar::term(GaussRational(Rational::of(num, den)), pi_exp, 0);
}
inline ExactScalar imag_pi(long long num, long long den, int pi_exp) {
  return ExactScalar::term(GaussRational(Rational(0), Rational::of(num, den)), pi_exp, 0);
}
}  // namespace detail

// ---------------------------------------------------------------------------
// First-order correction operator.  Acting on a kernel K it produces
//   (4/3)·pi·sqrt(-1) · DJ[j,k,i] z_j z_k · (bplus_i K)
// - (4/3)·pi·sqrt(-1) · DJ~[j,k,i] · b_i (zb_j zb_k K),
// i.e. the commutator-normalized contraction of the radial DJ pairing with
// one creation generator minus one annihilation generator.  Fresh summation
// labels are chosen above everything visible in K and in `pinned`.
// ---------------------------------------------------------------------------
inline Poly apply_O1(const Poly& K, const PinnedSet& pinned = {}) {
  int m = std::max<int>(K.max_label(), 0);
  for (int16_t p : pinned) m = std::max(m, static_cast<int>(p));
  const Idx j = Idx::label(static_cast<int16_t>(m + 1));
  const Idx k = Idx::label(static_cast<int16_t>(m + 2));
  const Idx i = Idx::label(static_cast<int16_t>(m + 3));
  PinnedSet held = pinned;
  held.insert(j.v);
  held.insert(k.v);
  held.insert(i.v);

  Poly raise_part = mult_var(VarKind::Z, j,
                             mult_var(VarKind::Z, k, apply_bplus(i, K, held), held), held);
  Poly a = poly_product(
      detail::one_term(detail::imag_pi(4, 3, 1), {nabla_j(j, k, i, false)}, {}),
      raise_part, held);

  Poly lower_part = apply_b(i, mult_var(VarKind::Zb, j, mult_var(VarKind::Zb, k, K, held), held),
                            held);
  Poly b = poly_product(
      detail::one_term(detail::imag_pi(-4, 3, 1), {nabla_j(j, k, i, true)}, {}),
      lower_part, held);

  return (a + b).canonical(pinned);
}

// ---------------------------------------------------------------------------
// Curvature payloads.  Each builder returns the polynomial coefficient (times
// the implicit projector factor) of one displayed pairing; open labels are
// passed in by the caller, internal summation labels start at `base`.
// ---------------------------------------------------------------------------

// <R(radial, dzb_i) radial, dzb_j>: both radial slots expand into plain and
// barred variables, giving four bar patterns on the curvature symbol.
inline Poly payload_curv_radial_bar(Idx i, Idx j, int base) {
  const Idx s = Idx::label(static_cast<int16_t>(base));
  const Idx t = Idx::label(static_cast<int16_t>(base + 1));
  Poly out;
  for (int bs = 0; bs < 2; ++bs)
    for (int bt = 0; bt < 2; ++bt) {
      out.append(detail::one_term(
          ExactScalar::one(), {curv(s, bs != 0, i, true, t, bt != 0, j, true)},
          {Var{bs ? VarKind::Zb : VarKind::Z, s}, Var{bt ? VarKind::Zb : VarKind::Z, t}}));
    }
  return out;
}

// <R(radial, dz_i) radial, dzb_i> summed over i: the payload whose
// complement-projected product with the projector seeds the trace term.
inline Poly payload_curv_radial_holo(int base) {
  const Idx i = Idx::label(static_cast<int16_t>(base));
  const Idx s = Idx::label(static_cast<int16_t>(base + 1));
  const Idx t = Idx::label(static_cast<int16_t>(base + 2));
  Poly out;
  for (int bs = 0; bs < 2; ++bs)
    for (int bt = 0; bt < 2; ++bt) {
      out.append(detail::one_term(
          ExactScalar::one(), {curv(s, bs != 0, i, false, t, bt != 0, i, true)},
          {Var{bs ? VarKind::Zb : VarKind::Z, s}, Var{bt ? VarKind::Zb : VarKind::Z, t}}));
    }
  return out;
}

// <R(dz_i, dzb_i) radial - R(radial, dz_i) dzb_i, dzb_j> summed over i.
inline Poly payload_curv_trace_mixed(Idx j, int base) {
  const Idx i = Idx::label(static_cast<int16_t>(base));
  const Idx s = Idx::label(static_cast<int16_t>(base + 1));
  Poly out;
  for (int bs = 0; bs < 2; ++bs) {
    Var vs{bs ? VarKind::Zb : VarKind::Z, s};
    out.append(detail::one_term(ExactScalar::one(),
                                {curv(i, false, i, true, s, bs != 0, j, true)}, {vs}));
    out.append(detail::one_term(-ExactScalar::one(),
                                {curv(s, bs != 0, i, false, i, true, j, true)}, {vs}));
  }
  return out;
}

// Second-order line-bundle flux payload contracted against dzb_i: the sum of
// the degree-2 curvature Taylor coefficients of the twisting connection,
// rewritten so that only the pure all-barred second-derivative family stays
// symbolic.  The five groups are:
//   -3·pi z_j z_k zb_s DJ[j,k,t] DJ~[s,i,t]  +  pi z_j z_k zb_s DJ[j,k,t] DJ~[i,s,t]
//   -(8/3)·pi z_j zb_s zb_t R[j, s~, t~, i~]  -  (2/3)·pi z_j zb_s z_t R[j, s~, t, i~]
//   -pi·sqrt(-1) zb_j zb_k zb_t DDJ~[j,k,t,i].
inline Poly payload_second_derivative_flux(Idx i, int base) {
  const Idx j = Idx::label(static_cast<int16_t>(base));
  const Idx k = Idx::label(static_cast<int16_t>(base + 1));
  const Idx s = Idx::label(static_cast<int16_t>(base + 2));
  const Idx t = Idx::label(static_cast<int16_t>(base + 3));
  Poly out;
  out.append(detail::one_term(
      detail::rat_pi(-3, 1, 1), {nabla_j(j, k, t, false), nabla_j(s, i, t, true)},
      {Var{VarKind::Z, j}, Var{VarKind::Z, k}, Var{VarKind::Zb, s}}));
  out.append(detail::one_term(
      detail::rat_pi(1, 1, 1), {nabla_j(j, k, t, false), nabla_j(i, s, t, true)},
      {Var{VarKind::Z, j}, Var{VarKind::Z, k}, Var{VarKind::Zb, s}}));
  out.append(detail::one_term(
      detail::rat_pi(-8, 3, 1), {curv(j, false, s, true, t, true, i, true)},
      {Var{VarKind::Z, j}, Var{VarKind::Zb, s}, Var{VarKind::Zb, t}}));
  out.append(detail::one_term(
      detail::rat_pi(-2, 3, 1), {curv(j, false, s, true, t, false, i, true)},
      {Var{VarKind::Z, j}, Var{VarKind::Zb, s}, Var{VarKind::Z, t}}));
  out.append(detail::one_term(
      detail::imag_pi(-1, 1, 1), {nnj(j, k, t, i, true)},
      {Var{VarKind::Zb, j}, Var{VarKind::Zb, k}, Var{VarKind::Zb, t}}));
  return out;
}

// <(nabla nabla J)_{(radial, radial)} dz_i, dzb_i> summed over i, after the
// mixed-family elimination: equals -2·sqrt(-1) z_j zb_s DJ[j,i,t] DJ~[s,i,t].
inline Poly payload_nnj_diag(int base) {
  const Idx j = Idx::label(static_cast<int16_t>(base));
  const Idx s = Idx::label(static_cast<int16_t>(base + 1));
  const Idx i = Idx::label(static_cast<int16_t>(base + 2));
  const Idx t = Idx::label(static_cast<int16_t>(base + 3));
  return detail::one_term(
      ExactScalar::term(GaussRational(Rational(0), Rational(-2)), 0, 0),
      {nabla_j(j, i, t, false), nabla_j(s, i, t, true)},
      {Var{VarKind::Z, j}, Var{VarKind::Zb, s}});
}

// |(nabla_radial J) radial|^2 = 4 z_j z_k zb_s zb_t DJ[j,k,r] DJ~[s,t,r]
// (the cross pairings vanish by type purity).
inline Poly radial_nablaJ_pairing_sq(int base) {
  const Idx j = Idx::label(static_cast<int16_t>(base));
  const Idx k = Idx::label(static_cast<int16_t>(base + 1));
  const Idx s = Idx::label(static_cast<int16_t>(base + 2));
  const Idx t = Idx::label(static_cast<int16_t>(base + 3));
  const Idx r = Idx::label(static_cast<int16_t>(base + 4));
  return detail::one_term(
      ExactScalar::term(GaussRational(Rational(4)), 0, 0),
      {nabla_j(j, k, r, false), nabla_j(s, t, r, true)},
      {Var{VarKind::Z, j}, Var{VarKind::Z, k}, Var{VarKind::Zb, s}, Var{VarKind::Zb, t}});
}

// |DJ|^2 as a scalar: 16 DJ[i,j,r] DJ~[i,j,r].
inline Poly nablaJ_norm_sq(int base = 0) {
  const Idx i = Idx::label(static_cast<int16_t>(base));
  const Idx j = Idx::label(static_cast<int16_t>(base + 1));
  const Idx r = Idx::label(static_cast<int16_t>(base + 2));
  return detail::one_term(ExactScalar::term(GaussRational(Rational(16)), 0, 0),
                          {nabla_j(i, j, r, false), nabla_j(i, j, r, true)}, {});
}

// Contracted mixed curvature scalar <R(dz_j, dzb_i) dz_i, dzb_j>.
inline Poly curv_trace_scalar(int base = 0) {
  const Idx j = Idx::label(static_cast<int16_t>(base));
  const Idx i = Idx::label(static_cast<int16_t>(base + 1));
  return detail::one_term(ExactScalar::one(),
                          {curv(j, false, i, true, i, false, j, true)}, {});
}

// Second expansion coefficient of the diagonal density:
// (1/pi) <R(dz_j, dzb_i) dz_i, dzb_j>.
inline Poly b1_scalar() { return curv_trace_scalar().scaled(ExactScalar::pi_pow(-1)); }

// The free trace scalar as a one-symbol polynomial.
inline Poly phi_scalar() {
  return detail::one_term(ExactScalar::one(), {phi_sym()}, {});
}

// ---------------------------------------------------------------------------
// Reference two-forms.
// ---------------------------------------------------------------------------

// The standard Kaehler form at the base point: (sqrt(-1)/2) sum_r dz_r^dzb_r,
// i.e. mixed-block coefficient (sqrt(-1)/2)·delta_RQ.
inline TwoForm omega_form(Idx R = Idx::label(200), Idx Q = Idx::label(201)) {
  Term t;
  t.coeff = ExactScalar::term(GaussRational(Rational(0), Rational::of(1, 2)), 0, 0);
  t.deltas.emplace_back(R, Q);
  Poly p;
  p.add_term(std::move(t));
  return wedge_mixed(p, R, Q);
}

// scalar · (standard form): the scalar polynomial must have no free labels.
inline TwoForm omega_times(const Poly& scalar, Idx R = Idx::label(200),
                           Idx Q = Idx::label(201)) {
  TwoForm w = omega_form(R, Q);
  PinnedSet pp{R.v, Q.v};
  w.mixed = poly_product(scalar, w.mixed, pp).canonical(pp);
  return w;
}

// c_same · DJ[j,i,R] DJ~[j,i,Q] + c_swapped · DJ[j,i,R] DJ~[i,j,Q]:
// the recurring mixed-block shape built from two DJ factors sharing both
// summation labels.
inline Poly jj_mixed(const ExactScalar& c_same, const ExactScalar& c_swapped,
                     Idx R = Idx::label(200), Idx Q = Idx::label(201)) {
  const Idx j = Idx::label(0);
  const Idx i = Idx::label(1);
  Poly out;
  out.append(detail::one_term(c_same, {nabla_j(j, i, R, false), nabla_j(j, i, Q, true)}, {}));
  out.append(
      detail::one_term(c_swapped, {nabla_j(j, i, R, false), nabla_j(i, j, Q, true)}, {}));
  PinnedSet pp{R.v, Q.v};
  return out.canonical(pp);
}

}  // namespace bkc
