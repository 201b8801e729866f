#pragma once

// Catalog of the second-order expansion of the ground-space projection under
// the first-order correction operator, together with regression rows that pin
// down every displayed reduction identity and diagonal two-form used by the
// verification checks.
//
// Contents:
//   * op_first_correction  - the correction operator as an expression tree;
//   * TermCatalog          - defining trees and engine kernels for the cubic
//                            corrector W, its adjoint, the first-order
//                            assembly F1, the six second-order terms I1..I6,
//                            the curvature split I21..I27, and the assembly F2;
//   * reduction_checks     - self-contained kernel identities (left side and
//                            right side built independently);
//   * catalog_reduction_checks - identities about the catalog kernels;
//   * form_checks          - diagonal two-form values of catalog kernels;
//   * evaluate_reduction / evaluate_form - two-tier row evaluation: exact
//     structural cancellation first, sampled numeric contraction as fallback
//     (needed whenever a row is true only modulo the cyclic symbol relation
//     enforced by the sampler, not by the canonicalizer).
//
// Every row carries a short reference string that is surfaced verbatim in
// reports produced by the command-line driver.

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "bkc/geometry.hpp"
#include "bkc/operator_expr.hpp"
#include "bkc/sampling.hpp"

namespace bkc {

namespace detail {

// A one-term kernel polynomial with explicit deltas.
inline Poly kterm(const ExactScalar& c, std::vector<Sym> syms, std::vector<Delta> deltas,
                  std::vector<Var> vars) {
  Term t;
  t.coeff = c;
  t.syms = std::move(syms);
  t.deltas = std::move(deltas);
  t.vars = std::move(vars);
  Poly p;
  p.add_term(std::move(t));
  return p;
}

// Appends one delta factor to every term.
inline Poly with_delta(const Poly& p, Idx a, Idx b) {
  Poly out;
  for (Term t : p.terms()) {
    t.deltas.emplace_back(a, b);
    out.add_term(std::move(t));
  }
  return out;
}

// zb_a - zb'_a, the centered antiholomorphic coordinate.
inline Poly diff_bar(Idx a) {
  return kterm(ExactScalar::one(), {}, {}, {Var{VarKind::Zb, a}}) +
         kterm(-ExactScalar::one(), {}, {}, {Var{VarKind::Zbp, a}});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The first-order correction operator as an expression tree acting on `inner`:
//   (4/3)·pi·sqrt(-1)·DJ[j,k,i] z_j z_k · bplus_i(inner)
// - (4/3)·pi·sqrt(-1)·DJ~[j,k,i] · b_i(zb_j zb_k · inner),
// with the three summation labels drawn from `base`, `base+1`, `base+2`.
// Trees meant to be composed must use disjoint label regions.
// ---------------------------------------------------------------------------
inline OperatorExpr op_first_correction(OperatorExpr inner, int base) {
  const Idx j = Idx::label(base), k = Idx::label(base + 1), i = Idx::label(base + 2);
  Poly raise_payload = detail::one_term(detail::imag_pi(4, 3, 1), {nabla_j(j, k, i, false)},
                                        {Var{VarKind::Z, j}, Var{VarKind::Z, k}});
  Poly lower_payload = detail::one_term(detail::imag_pi(-4, 3, 1), {nabla_j(j, k, i, true)},
                                        {Var{VarKind::Zb, j}, Var{VarKind::Zb, k}});
  OperatorExpr raise_part = op_scale_poly(std::move(raise_payload), op_bplus(i, inner));
  OperatorExpr lower_part = op_b(i, op_scale_poly(std::move(lower_payload), std::move(inner)));
  std::vector<OperatorExpr> parts;
  parts.push_back(std::move(raise_part));
  parts.push_back(std::move(lower_part));
  return op_sum(std::move(parts));
}

// ---------------------------------------------------------------------------
// The term catalog.  `x_*` members are the defining expression trees (fed to
// the numeric oracle unchanged); the matching lower-case members are the
// kernels the symbolic engine derives from them.
// ---------------------------------------------------------------------------
struct TermCatalog {
  OperatorExpr x_o1p;                                  // correction applied to the projector
  OperatorExpr x_w, x_wstar, x_f1;                     // cubic corrector, adjoint, assembly
  OperatorExpr x_i21, x_i22, x_i23, x_i24, x_i25, x_i26, x_i27;
  OperatorExpr x_i1, x_i2, x_i3, x_i4, x_i5, x_i6;

  Poly o1p, w, wstar, f1;
  Poly i21, i22, i23, i24, i25, i26, i27;
  Poly i1, i2, i3, i4, i5, i6, f2;
};

inline TermCatalog build_catalog() {
  TermCatalog c;

  c.x_o1p = op_first_correction(op_p(), 100);
  c.x_w = op_inv(1, op_first_correction(op_p(), 104));
  c.x_wstar = op_adjoint(c.x_w);
  {
    std::vector<OperatorExpr> parts;
    parts.push_back(op_inv(1, op_first_correction(op_p(), 112)));
    parts.push_back(op_adjoint(op_inv(1, op_first_correction(op_p(), 116))));
    c.x_f1 = op_scale(-ExactScalar::one(), op_sum(std::move(parts)));
  }

  c.x_i1 = op_inv(1, op_first_correction(op_inv(1, op_first_correction(op_p(), 120)), 124));

  {
    const Idx i = Idx::label(144), j = Idx::label(145);
    c.x_i21 = op_scale(detail::rat_pi(1, 3, 0),
                       op_inv(1, op_b(i, op_b(j, op_scale_poly(payload_curv_radial_bar(i, j, 146),
                                                               op_p())))));
  }
  {
    const Idx i = Idx::label(148);
    c.x_i22 = op_scale(detail::rat_pi(1, 2, 0),
                       op_inv(1, op_b(i, op_scale_poly(payload_second_derivative_flux(i, 149),
                                                       op_p()))));
  }
  {
    const Idx j = Idx::label(153);
    c.x_i23 = op_scale(detail::rat_pi(4, 3, 0),
                       op_inv(1, op_b(j, op_scale_poly(payload_curv_trace_mixed(j, 154), op_p()))));
  }
  c.x_i24 = op_scale(detail::imag_pi(-2, 1, 1),
                     op_inv(1, op_scale_poly(payload_nnj_diag(156), op_p())));
  c.x_i25 = op_scale(detail::rat_pi(-1, 3, 0),
                     op_offdiag(op_scale_poly(payload_curv_radial_holo(160), op_p())));
  c.x_i26 = op_scale(detail::rat_pi(4, 9, 2),
                     op_inv(1, op_scale_poly(radial_nablaJ_pairing_sq(164), op_p())));
  {
    const Idx i = Idx::label(170), j = Idx::label(171);
    const Idx s = Idx::label(172), t = Idx::label(173);
    Poly pay = detail::one_term(ExactScalar::one(), {curv(s, true, i, true, t, true, j, true)},
                                {Var{VarKind::Zb, s}, Var{VarKind::Zb, t}});
    c.x_i27 = op_inv(1, op_b(i, op_b(j, op_scale_poly(std::move(pay), op_p()))));
  }
  {
    std::vector<OperatorExpr> parts{c.x_i21, c.x_i22, c.x_i23, c.x_i24, c.x_i25, c.x_i26};
    c.x_i2 = op_scale(-ExactScalar::one(), op_sum(std::move(parts)));
  }
  c.x_i3 = op_adjoint(c.x_i1);
  c.x_i4 = op_adjoint(c.x_i2);
  c.x_i5 = op_compose(op_inv(1, op_first_correction(op_p(), 128)),
                      op_adjoint(op_inv(1, op_first_correction(op_p(), 132))));
  c.x_i6 = op_scale(-ExactScalar::one(),
                    op_compose(op_adjoint(op_first_correction(op_p(), 136)),
                               op_inv(2, op_first_correction(op_p(), 140))));

  c.o1p = eval_symbolic(c.x_o1p);
  c.w = eval_symbolic(c.x_w);
  c.wstar = adjoint(c.w);
  c.f1 = (-(c.w + c.wstar)).canonical();

  c.i21 = eval_symbolic(c.x_i21);
  c.i22 = eval_symbolic(c.x_i22);
  c.i23 = eval_symbolic(c.x_i23);
  c.i24 = eval_symbolic(c.x_i24);
  c.i25 = eval_symbolic(c.x_i25);
  c.i26 = eval_symbolic(c.x_i26);
  c.i27 = eval_symbolic(c.x_i27);

  c.i1 = eval_symbolic(c.x_i1);
  c.i2 = (-(c.i21 + c.i22 + c.i23 + c.i24 + c.i25 + c.i26)).canonical();
  c.i3 = adjoint(c.i1);
  c.i4 = adjoint(c.i2);
  c.i5 = eval_symbolic(c.x_i5);
  c.i6 = eval_symbolic(c.x_i6);
  c.f2 = (c.i1 + c.i2 + c.i3 + c.i4 + c.i5 + c.i6).canonical();
  return c;
}

inline const TermCatalog& catalog() {
  static const TermCatalog c = build_catalog();
  return c;
}

// ---------------------------------------------------------------------------
// Regression rows.
// ---------------------------------------------------------------------------
struct ReductionCheck {
  std::string name;
  std::string ref;
  Poly lhs, rhs;
  std::vector<int16_t> free_labels;
  // When set, compare only the window where both sides are controlled: terms
  // of unprimed degree at most one and primed degree at most one.  That box
  // is exactly what base-point evaluation and the mixed second derivatives
  // read off, so agreement there is all the downstream assembly consumes.
  bool tracked = false;
};

// Identities whose two sides are rebuilt here from scratch, in reading order.
inline std::vector<ReductionCheck> reduction_checks() {
  using detail::diff_bar;
  using detail::kterm;
  using detail::with_delta;
  const ExactScalar one = ExactScalar::one();
  const Idx i = Idx::label(1), j = Idx::label(2), k = Idx::label(3);
  const Idx s = Idx::label(4), t = Idx::label(5);
  const PinnedSet F{1, 2, 3, 4, 5, 6};
  auto Z = [](Idx a) { return Var{VarKind::Z, a}; };
  auto Zb = [](Idx a) { return Var{VarKind::Zb, a}; };
  auto Zbp = [](Idx a) { return Var{VarKind::Zbp, a}; };
  const Poly P = Poly::one();

  std::vector<ReductionCheck> out;
  auto row = [&out](const char* name, const char* ref, Poly lhs, Poly rhs,
                    std::vector<int16_t> frees, bool tracked = false) {
    out.push_back(ReductionCheck{name, ref, std::move(lhs), std::move(rhs), std::move(frees),
                                 tracked});
  };

  row("raising-kills-ground", "(1.7)", apply_bplus(j, P, F), Poly::zero(), {2});

  row("lowering-on-ground", "(1.7)", apply_b(j, P, F),
      kterm(detail::rat_pi(2, 1, 1), {}, {}, {Zb(j)}) +
          kterm(detail::rat_pi(-2, 1, 1), {}, {}, {Zbp(j)}),
      {2});

  {
    Poly zz = mult_var(VarKind::Z, j, mult_var(VarKind::Z, k, P, F), F);
    row("ground-sandwich-plain", "(1.9)", project_ker(zz, F), zz, {2, 3});
    row("ground-sandwich-word", "(1.9)", project_ker(apply_b(i, zz, F), F), Poly::zero(),
        {1, 2, 3});
  }

  {
    Poly zz = mult_var(VarKind::Z, s, mult_var(VarKind::Z, t, P, F), F);
    Poly lhs = apply_inv_offdiag(
        mult_var(VarKind::Z, s,
                 mult_var(VarKind::Z, t, apply_bplus(i, apply_b(j, apply_b(k, P, F), F), F), F),
                 F),
        1, F);
    Poly rhs = with_delta(apply_b(k, zz, F), i, j) + with_delta(apply_b(j, zz, F), i, k);
    row("raising-reabsorbed", "(4.9)", std::move(lhs), std::move(rhs), {1, 2, 3, 4, 5});
  }

  {
    Poly zj = mult_var(VarKind::Z, j, P, F);
    Poly zk = mult_var(VarKind::Z, k, P, F);
    Poly zjzk = mult_var(VarKind::Z, j, zk, F);
    Poly lhs = mult_var(VarKind::Z, j, mult_var(VarKind::Z, k, apply_b(s, apply_b(t, P, F), F), F),
                        F);
    Poly rhs = apply_b(s, apply_b(t, zjzk, F), F) +
               with_delta(apply_b(t, zk, F), j, s).scaled(detail::rat_pi(2, 1, 0)) +
               with_delta(apply_b(s, zk, F), j, t).scaled(detail::rat_pi(2, 1, 0)) +
               with_delta(apply_b(t, zj, F), k, s).scaled(detail::rat_pi(2, 1, 0)) +
               with_delta(apply_b(s, zj, F), k, t).scaled(detail::rat_pi(2, 1, 0)) +
               kterm(detail::rat_pi(4, 1, 0), {}, {Delta(j, t), Delta(k, s)}, {}) +
               kterm(detail::rat_pi(4, 1, 0), {}, {Delta(j, s), Delta(k, t)}, {});
    row("positions-cross-word", "(4.15)", std::move(lhs), std::move(rhs), {2, 3, 4, 5});
  }

  {
    Poly inner = mult_var(
        VarKind::Zb, s,
        mult_var(VarKind::Zb, t, mult_var(VarKind::Z, j, mult_var(VarKind::Z, k, P, F), F), F), F);
    row("ground-pairing-origin", "(4.16)", eval_origin(project_ker(inner, F), F),
        kterm(ExactScalar::pi_pow(-2), {}, {Delta(j, t), Delta(k, s)}, {}) +
            kterm(ExactScalar::pi_pow(-2), {}, {Delta(j, s), Delta(k, t)}, {}),
        {2, 3, 4, 5});
  }

  {
    Poly zs = mult_var(VarKind::Z, s, P, F);
    row("mixed-pair-normal-form", "(4.25)", mult_var(VarKind::Zb, t, zs, F),
        apply_b(t, zs, F).scaled(detail::rat_pi(1, 2, -1)) +
            kterm(detail::rat_pi(1, 1, -1), {}, {Delta(s, t)}, {}) +
            kterm(one, {}, {}, {Z(s), Zbp(t)}),
        {4, 5});
  }

  {
    Poly lhs =
        apply_inv_offdiag(
            apply_b(i, apply_b(j, mult_var(VarKind::Zb, s, mult_var(VarKind::Zb, t, P, F), F), F),
                    F),
            1, F)
            .scaled(detail::rat_pi(4, 1, 2));
    Poly rhs =
        apply_b(i, apply_b(j, apply_b(s, apply_b(t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 16, -1)) +
        apply_b(i, apply_b(j, apply_b(s, mult_var(VarKind::Zbp, t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 6, 0)) +
        apply_b(i, apply_b(j, apply_b(t, mult_var(VarKind::Zbp, s, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 6, 0)) +
        apply_b(i, apply_b(j, mult_var(VarKind::Zbp, s, mult_var(VarKind::Zbp, t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 2, 1));
    row("double-lowering-inverted", "(4.28)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  row("double-lowering-expanded", "(4.30)", expand(apply_b(i, apply_b(j, P, F), F), F),
      poly_product(diff_bar(i), diff_bar(j), F).scaled(detail::rat_pi(4, 1, 2)), {1, 2});

  {
    Poly lhs = expand(
        apply_b(i, apply_b(j, mult_var(VarKind::Z, s, mult_var(VarKind::Zbp, t, P, F), F), F), F),
        F);
    Poly rhs =
        with_delta(poly_product(kterm(detail::rat_pi(-4, 1, 1), {}, {}, {Zbp(t)}), diff_bar(i), F),
                   j, s) +
        with_delta(poly_product(kterm(detail::rat_pi(-4, 1, 1), {}, {}, {Zbp(t)}), diff_bar(j), F),
                   i, s) +
        poly_product(poly_product(kterm(detail::rat_pi(4, 1, 2), {}, {}, {Z(s), Zbp(t)}),
                                  diff_bar(i), F),
                     diff_bar(j), F);
    row("double-lowering-mixed-expanded", "(4.30)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  {
    Poly lhs = expand(
        apply_b(i, apply_b(j, mult_var(VarKind::Z, s, mult_var(VarKind::Z, t, P, F), F), F), F),
        F);
    Poly rhs =
        kterm(detail::rat_pi(4, 1, 0), {}, {Delta(i, t), Delta(j, s)}, {}) +
        kterm(detail::rat_pi(4, 1, 0), {}, {Delta(j, t), Delta(i, s)}, {}) +
        with_delta(poly_product(kterm(detail::rat_pi(-4, 1, 1), {}, {}, {Z(t)}), diff_bar(i), F),
                   j, s) +
        with_delta(poly_product(kterm(detail::rat_pi(-4, 1, 1), {}, {}, {Z(s)}), diff_bar(i), F),
                   j, t) +
        with_delta(poly_product(kterm(detail::rat_pi(-4, 1, 1), {}, {}, {Z(t)}), diff_bar(j), F),
                   i, s) +
        with_delta(poly_product(kterm(detail::rat_pi(-4, 1, 1), {}, {}, {Z(s)}), diff_bar(j), F),
                   i, t) +
        poly_product(
            poly_product(kterm(detail::rat_pi(4, 1, 2), {}, {}, {Z(s), Z(t)}), diff_bar(j), F),
            diff_bar(i), F);
    row("double-lowering-plain-expanded", "(4.30)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  {
    Poly lhs = apply_b(i, apply_b(j, apply_b(t, mult_var(VarKind::Z, s, P, F), F), F), F);
    Poly rhs = with_delta(apply_b(i, apply_b(j, P, F), F), t, s).scaled(detail::rat_pi(-2, 1, 0)) +
               with_delta(apply_b(i, apply_b(t, P, F), F), j, s).scaled(detail::rat_pi(-2, 1, 0)) +
               with_delta(apply_b(j, apply_b(t, P, F), F), i, s).scaled(detail::rat_pi(-2, 1, 0)) +
               mult_var(VarKind::Z, s, apply_b(i, apply_b(j, apply_b(t, P, F), F), F), F);
    row("triple-word-position", "(4.31)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  row("one-word-position-inverted", "(4.35)",
      apply_inv_offdiag(apply_b(j, mult_var(VarKind::Z, s, P, F), F), 1, F),
      kterm(detail::rat_pi(-1, 2, -1), {}, {Delta(j, s)}, {}) +
          poly_product(kterm(detail::rat_pi(1, 2, 0), {}, {}, {Z(s)}), diff_bar(j), F),
      {2, 4});

  row("one-word-barred-inverted", "(4.36)",
      apply_inv_offdiag(apply_b(j, mult_var(VarKind::Zb, s, P, F), F), 1, F),
      poly_product(diff_bar(j), diff_bar(s), F).scaled(detail::rat_pi(1, 4, 0)) +
          poly_product(kterm(detail::rat_pi(1, 2, 0), {}, {}, {Zbp(s)}), diff_bar(j), F),
      {2, 4});

  {
    Poly K = mult_var(VarKind::Zb, k, mult_var(VarKind::Z, j, P, F), F);
    row("complement-of-mixed-pair", "(4.40)", (K - project_ker(K, F)).canonical(F),
        kterm(detail::rat_pi(-1, 1, -1), {}, {Delta(j, k)}, {}) +
            poly_product(kterm(one, {}, {}, {Z(j)}), diff_bar(k), F),
        {2, 3});
  }

  {
    Poly K = mult_var(VarKind::Zb, k, mult_var(VarKind::Zb, j, P, F), F);
    row("complement-of-barred-pair", "(4.41)", (K - project_ker(K, F)).canonical(F),
        kterm(one, {}, {}, {Zb(j), Zb(k)}) + kterm(-one, {}, {}, {Zbp(j), Zbp(k)}), {2, 3});
  }

  {
    Poly zzb = mult_var(VarKind::Z, i, mult_var(VarKind::Z, j, apply_b(s, P, F), F), F);
    Poly rhs = (kterm(detail::rat_pi(-2, 1, 0), {}, {Delta(i, s)}, {Z(j)}) +
                kterm(detail::rat_pi(-2, 1, 0), {}, {Delta(j, s)}, {Z(i)}) + zzb)
                   .scaled(detail::rat_pi(1, 4, -1));
    row("pair-word-inverted", "(4.45)", apply_inv_offdiag(zzb, 1, F), std::move(rhs), {1, 2, 4});
  }

  {
    Poly lhs = apply_inv_offdiag(
        mult_var(VarKind::Z, i, mult_var(VarKind::Z, j, apply_b(s, apply_b(t, P, F), F), F), F), 1,
        F);
    Poly inner =
        kterm(detail::rat_pi(-3, 1, 0), {}, {Delta(j, s), Delta(i, t)}, {}) +
        kterm(detail::rat_pi(-3, 1, 0), {}, {Delta(j, t), Delta(i, s)}, {}) +
        with_delta(mult_var(VarKind::Z, j, apply_b(s, P, F), F), i, t)
            .scaled(detail::rat_pi(1, 2, 0)) +
        with_delta(mult_var(VarKind::Z, i, apply_b(s, P, F), F), j, t)
            .scaled(detail::rat_pi(1, 2, 0)) +
        with_delta(mult_var(VarKind::Z, j, apply_b(t, P, F), F), i, s)
            .scaled(detail::rat_pi(1, 2, 0)) +
        with_delta(mult_var(VarKind::Z, i, apply_b(t, P, F), F), j, s)
            .scaled(detail::rat_pi(1, 2, 0)) +
        mult_var(VarKind::Z, i, mult_var(VarKind::Z, j, apply_b(s, apply_b(t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 4, 0));
    row("pair-double-word-inverted", "(4.46)", std::move(lhs),
        inner.scaled(detail::rat_pi(1, 2, -1)), {1, 2, 4, 5});
  }

  {
    Poly lhs = apply_inv_offdiag(
        mult_var(VarKind::Z, i,
                 mult_var(VarKind::Z, j,
                          mult_var(VarKind::Zb, s, mult_var(VarKind::Zb, t, P, F), F), F),
                 F),
        1, F);
    Poly block1 =
        kterm(detail::rat_pi(-3, 2, -1), {}, {Delta(i, t), Delta(j, s)}, {}) +
        kterm(detail::rat_pi(-3, 2, -1), {}, {Delta(j, t), Delta(i, s)}, {}) +
        with_delta(poly_product(kterm(detail::rat_pi(1, 2, 0), {}, {}, {Z(j)}), diff_bar(s), F), i,
                   t) +
        with_delta(poly_product(kterm(detail::rat_pi(1, 2, 0), {}, {}, {Z(i)}), diff_bar(s), F), j,
                   t) +
        with_delta(poly_product(kterm(detail::rat_pi(1, 2, 0), {}, {}, {Z(j)}), diff_bar(t), F), i,
                   s) +
        with_delta(poly_product(kterm(detail::rat_pi(1, 2, 0), {}, {}, {Z(i)}), diff_bar(t), F), j,
                   s) +
        poly_product(
            poly_product(kterm(detail::rat_pi(1, 2, 1), {}, {}, {Z(i), Z(j)}), diff_bar(t), F),
            diff_bar(s), F);
    auto tail = [&](Idx a, Idx b) {
      // (-2 d_ia z_j - 2 d_ja z_i + 2 pi z_i z_j (zb_a - zb'_a)) zb'_b
      return poly_product(
          kterm(one, {}, {}, {Zbp(b)}),
          kterm(detail::rat_pi(-2, 1, 0), {}, {Delta(i, a)}, {Z(j)}) +
              kterm(detail::rat_pi(-2, 1, 0), {}, {Delta(j, a)}, {Z(i)}) +
              poly_product(kterm(detail::rat_pi(2, 1, 1), {}, {}, {Z(i), Z(j)}), diff_bar(a), F),
          F);
    };
    Poly rhs = block1.scaled(detail::rat_pi(1, 4, -2)) +
               (tail(s, t) + tail(t, s)).scaled(detail::rat_pi(1, 8, -2));
    row("pair-pair-inverted", "(4.47)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  {
    Poly zjzk = mult_var(VarKind::Z, j, mult_var(VarKind::Z, k, P, F), F);
    Poly lhs = apply_b(
        i, mult_var(VarKind::Z, j, mult_var(VarKind::Z, k, mult_var(VarKind::Zb, s, P, F), F), F),
        F);
    Poly rhs = apply_b(i, apply_b(s, zjzk, F), F).scaled(detail::rat_pi(1, 2, -1)) +
               with_delta(apply_b(i, mult_var(VarKind::Z, k, P, F), F), j, s)
                   .scaled(detail::rat_pi(1, 1, -1)) +
               with_delta(apply_b(i, mult_var(VarKind::Z, j, P, F), F), k, s)
                   .scaled(detail::rat_pi(1, 1, -1)) +
               mult_var(VarKind::Zbp, s, apply_b(i, zjzk, F), F);
    row("lowering-cubic-normal-form", "(4.65)", std::move(lhs), std::move(rhs), {1, 2, 3, 4});
  }

  {
    Poly zjzk = mult_var(VarKind::Z, j, mult_var(VarKind::Z, k, P, F), F);
    Poly lhs = apply_inv_offdiag(
        apply_b(i,
                mult_var(VarKind::Z, j,
                         mult_var(VarKind::Z, k, mult_var(VarKind::Zb, s, P, F), F), F),
                F),
        1, F);
    Poly rhs = apply_b(i, apply_b(s, zjzk, F), F).scaled(detail::rat_pi(1, 16, -2)) +
               with_delta(apply_b(i, mult_var(VarKind::Z, k, P, F), F), j, s)
                   .scaled(detail::rat_pi(1, 4, -2)) +
               with_delta(apply_b(i, mult_var(VarKind::Z, j, P, F), F), k, s)
                   .scaled(detail::rat_pi(1, 4, -2)) +
               mult_var(VarKind::Zbp, s, apply_b(i, zjzk, F), F).scaled(detail::rat_pi(1, 4, -1));
    row("lowering-cubic-inverted", "(4.66)", std::move(lhs), std::move(rhs), {1, 2, 3, 4});
  }

  {
    Poly lhs = apply_inv_offdiag(
        apply_b(i,
                mult_var(VarKind::Z, j,
                         mult_var(VarKind::Z, k, mult_var(VarKind::Zb, s, P, F), F), F),
                F),
        1, F);
    Poly rhs = kterm(detail::rat_pi(-1, 4, -2), {}, {Delta(j, s), Delta(i, k)}, {}) +
               kterm(detail::rat_pi(-1, 4, -2), {}, {Delta(k, s), Delta(i, j)}, {}) +
               kterm(detail::rat_pi(-1, 4, -1), {}, {Delta(j, s)}, {Z(k), Zbp(i)}) +
               kterm(detail::rat_pi(-1, 4, -1), {}, {Delta(k, s)}, {Z(j), Zbp(i)}) +
               kterm(detail::rat_pi(-1, 4, -1), {}, {Delta(i, j)}, {Z(k), Zbp(s)}) +
               kterm(detail::rat_pi(-1, 4, -1), {}, {Delta(i, k)}, {Z(j), Zbp(s)});
    row("lowering-cubic-window", "(4.67)", std::move(lhs), std::move(rhs), {1, 2, 3, 4}, true);
  }

  {
    Poly zj = mult_var(VarKind::Z, j, P, F);
    Poly lhs = apply_b(
        i, mult_var(VarKind::Z, j, mult_var(VarKind::Zb, s, mult_var(VarKind::Zb, t, P, F), F), F),
        F);
    Poly rhs =
        apply_b(i, apply_b(s, apply_b(t, zj, F), F), F).scaled(detail::rat_pi(1, 4, -2)) +
        with_delta(apply_b(i, apply_b(t, P, F), F), j, s).scaled(detail::rat_pi(1, 2, -2)) +
        with_delta(apply_b(i, apply_b(s, P, F), F), j, t).scaled(detail::rat_pi(1, 2, -2)) +
        apply_b(i, apply_b(s, mult_var(VarKind::Z, j, mult_var(VarKind::Zbp, t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 2, -1)) +
        with_delta(apply_b(i, mult_var(VarKind::Zbp, t, P, F), F), j, s)
            .scaled(detail::rat_pi(1, 1, -1)) +
        apply_b(i, apply_b(t, mult_var(VarKind::Z, j, mult_var(VarKind::Zbp, s, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 2, -1)) +
        with_delta(apply_b(i, mult_var(VarKind::Zbp, s, P, F), F), j, t)
            .scaled(detail::rat_pi(1, 1, -1)) +
        apply_b(i,
                mult_var(VarKind::Z, j,
                         mult_var(VarKind::Zbp, s, mult_var(VarKind::Zbp, t, P, F), F), F),
                F);
    row("mixed-cubic-normal-form", "(4.68)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  {
    Poly zj = mult_var(VarKind::Z, j, P, F);
    Poly lhs = apply_inv_offdiag(
        apply_b(i,
                mult_var(VarKind::Z, j,
                         mult_var(VarKind::Zb, s, mult_var(VarKind::Zb, t, P, F), F), F),
                F),
        1, F);
    Poly rhs =
        apply_b(i, apply_b(s, apply_b(t, zj, F), F), F).scaled(detail::rat_pi(1, 48, -3)) +
        with_delta(apply_b(i, apply_b(t, P, F), F), j, s).scaled(detail::rat_pi(1, 16, -3)) +
        with_delta(apply_b(i, apply_b(s, P, F), F), j, t).scaled(detail::rat_pi(1, 16, -3)) +
        apply_b(i, apply_b(s, mult_var(VarKind::Z, j, mult_var(VarKind::Zbp, t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 16, -2)) +
        with_delta(apply_b(i, mult_var(VarKind::Zbp, t, P, F), F), j, s)
            .scaled(detail::rat_pi(1, 4, -2)) +
        apply_b(i, apply_b(t, mult_var(VarKind::Z, j, mult_var(VarKind::Zbp, s, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 16, -2)) +
        with_delta(apply_b(i, mult_var(VarKind::Zbp, s, P, F), F), j, t)
            .scaled(detail::rat_pi(1, 4, -2)) +
        apply_b(i,
                mult_var(VarKind::Z, j,
                         mult_var(VarKind::Zbp, s, mult_var(VarKind::Zbp, t, P, F), F), F),
                F)
            .scaled(detail::rat_pi(1, 4, -1));
    row("mixed-cubic-inverted", "(4.69)", std::move(lhs), std::move(rhs), {1, 2, 4, 5});
  }

  {
    Poly lhs =
        apply_b(i, apply_b(s, mult_var(VarKind::Z, j, mult_var(VarKind::Zbp, t, P, F), F), F), F)
            .scaled(detail::rat_pi(1, 16, -2)) +
        with_delta(apply_b(i, mult_var(VarKind::Zbp, t, P, F), F), j, s)
            .scaled(detail::rat_pi(1, 4, -2));
    Poly rhs = kterm(detail::rat_pi(1, 4, -1), {}, {Delta(j, s)}, {Zb(i), Zbp(t)}) +
               kterm(detail::rat_pi(-1, 4, -1), {}, {Delta(i, j)}, {Zb(s), Zbp(t)});
    row("mixed-cubic-window", "(4.70)", std::move(lhs), std::move(rhs), {1, 2, 4, 5}, true);
  }

  row("barred-cubic-window", "(4.72)",
      apply_inv_offdiag(
          apply_b(i,
                  mult_var(VarKind::Zb, j,
                           mult_var(VarKind::Zb, s, mult_var(VarKind::Zb, t, P, F), F), F),
                  F),
          1, F),
      Poly::zero(), {1, 2, 4, 5}, true);

  return out;
}

// Identities about the catalog kernels themselves, in reading order.
inline std::vector<ReductionCheck> catalog_reduction_checks(const TermCatalog& c) {
  using detail::kterm;
  const ExactScalar one = ExactScalar::one();
  const Idx i = Idx::label(1), j = Idx::label(2), k = Idx::label(3);
  const Idx s = Idx::label(4), r = Idx::label(5), q = Idx::label(6);
  const Idx t = Idx::label(7), l = Idx::label(8);
  const PinnedSet F{1, 2, 3, 4, 5, 6, 7, 8};
  const Poly P = Poly::one();

  std::vector<ReductionCheck> out;
  auto row = [&out](const char* name, const char* ref, Poly lhs, Poly rhs,
                    std::vector<int16_t> frees, bool tracked = false) {
    out.push_back(ReductionCheck{name, ref, std::move(lhs), std::move(rhs), std::move(frees),
                                 tracked});
  };

  {
    // Closed form of the cubic corrector: the pure triple-lowering word drops
    // out (symbol antisymmetric in its last two slots against a symmetric
    // word), leaving the two mixed words and the primed-quadratic tail.
    Poly rhs =
        poly_product(detail::one_term(detail::imag_pi(-1, 12, -1), {nabla_j(j, k, i, true)}, {}),
                     apply_b(i, apply_b(j, mult_var(VarKind::Zbp, k, P, F), F), F), F) +
        poly_product(detail::one_term(detail::imag_pi(-1, 12, -1), {nabla_j(j, k, i, true)}, {}),
                     apply_b(i, apply_b(k, mult_var(VarKind::Zbp, j, P, F), F), F), F) +
        poly_product(detail::one_term(detail::imag_pi(-1, 3, 0), {nabla_j(j, k, i, true)}, {}),
                     apply_b(i, mult_var(VarKind::Zbp, j, mult_var(VarKind::Zbp, k, P, F), F), F),
                     F);
    row("cubic-corrector-closed-form", "(3.15)", c.w, std::move(rhs), {});
  }

  {
    Poly rhs = kterm(detail::imag_pi(1, 3, 1), {nabla_j(j, k, l, false)},
                     {}, {Var{VarKind::Zp, j}, Var{VarKind::Z, k}, Var{VarKind::Zp, l}}) +
               kterm(detail::imag_pi(1, 3, 1), {nabla_j(j, k, l, false)},
                     {}, {Var{VarKind::Z, j}, Var{VarKind::Z, k}, Var{VarKind::Zp, l}});
    row("cubic-corrector-adjoint", "(3.17)", c.wstar, std::move(rhs), {});
  }

  {
    Poly rhs = kterm(detail::rat_pi(-2, 9, 0),
                     {nabla_j(s, r, i, false), nabla_j(k, q, j, true)},
                     {Delta(i, k), Delta(j, s)}, {Var{VarKind::Z, r}, Var{VarKind::Zbp, q}}) +
               kterm(detail::rat_pi(-2, 9, 0),
                     {nabla_j(s, r, i, false), nabla_j(k, q, j, true)},
                     {Delta(i, j), Delta(k, s)}, {Var{VarKind::Z, r}, Var{VarKind::Zbp, q}});
    row("first-term-window", "(4.11)", c.i1, std::move(rhs), {}, true);
  }

  {
    // Exact split of the radial curvature seed after normal-ordering: the
    // plain-plain, mixed, trace, and all-barred blocks of three times the
    // first curvature term.
    Poly zszt = mult_var(VarKind::Z, s, mult_var(VarKind::Z, t, P, F), F);
    Poly piece1 =
        poly_product(detail::one_term(detail::rat_pi(1, 8, -1),
                                      {curv(s, false, i, true, t, false, j, true)}, {}),
                     apply_b(i, apply_b(j, zszt, F), F), F);
    Poly piece2 = poly_product(
        detail::one_term(one, {curv(s, false, i, true, t, true, j, true)}, {}),
        apply_b(i, apply_b(j, apply_b(t, mult_var(VarKind::Z, s, P, F), F), F), F)
                .scaled(detail::rat_pi(1, 12, -2)) +
            apply_b(i, apply_b(j, mult_var(VarKind::Z, s, mult_var(VarKind::Zbp, t, P, F), F), F),
                    F)
                .scaled(detail::rat_pi(1, 4, -1)),
        F);
    Poly piece3 =
        poly_product(detail::one_term(detail::rat_pi(1, 4, -2),
                                      {curv(k, false, i, true, k, true, j, true)}, {}),
                     apply_b(i, apply_b(j, P, F), F), F);
    row("radial-curvature-split", "(4.26)", c.i21.scaled(detail::rat_pi(3, 1, 0)),
        piece1 + piece2 + piece3 + c.i27, {});
  }

  row("barred-remainder-window", "(4.29)", c.i27, Poly::zero(), {}, true);

  {
    Poly kphi = phi_scalar();
    Poly kcurv = curv_trace_scalar();
    Poly lhs = (kphi - project_ker(kphi)) + (kcurv - project_ker(kcurv));
    row("scalar-complement-vanishes", "(4.22)", lhs.canonical(), Poly::zero(), {});
  }

  row("assembly-self-adjoint", "(4.2)", c.f2, adjoint(c.f2), {});

  return out;
}

// ---------------------------------------------------------------------------
// Diagonal two-form rows.
// ---------------------------------------------------------------------------
struct FormCheck {
  std::string name;
  std::string ref;
  TwoForm got;
  TwoForm want;
  std::vector<int16_t> extra_free;  // free labels beyond the form labels R, Q
};

inline std::vector<FormCheck> form_checks(const TermCatalog& c) {
  using detail::kterm;
  const ExactScalar one = ExactScalar::one();
  const Idx R = Idx::label(200), Q = Idx::label(201);
  const Idx j = Idx::label(0), i = Idx::label(1), t = Idx::label(2);

  std::vector<FormCheck> out;
  auto row = [&out](const char* name, const char* ref, TwoForm got, TwoForm want,
                    std::vector<int16_t> extra = {}) {
    out.push_back(FormCheck{name, ref, std::move(got), std::move(want), std::move(extra)});
  };
  auto cv = [&](Idx a, bool ab, Idx b, bool bb, Idx cc, bool cb, Idx d, bool db,
                const ExactScalar& coeff) {
    return kterm(coeff, {curv(a, ab, b, bb, cc, cb, d, db)}, {}, {});
  };

  // First-order assembly: no second-derivative content at the base point.
  row("first-assembly-form", "(3.10)", diagonal_two_form(c.f1), TwoForm{});

  row("first-term-form", "(4.12)", diagonal_two_form(c.i1),
      wedge_mixed(jj_mixed(detail::rat_pi(-2, 9, 0), detail::rat_pi(-2, 9, 0))));

  row("first-term-adjoint-form", "(4.13)", diagonal_two_form(c.i3),
      wedge_mixed(jj_mixed(detail::rat_pi(-2, 9, 0), detail::rat_pi(-2, 9, 0))));

  row("cross-term-form", "(4.17)", diagonal_two_form(c.i5),
      wedge_mixed(jj_mixed(detail::rat_pi(-1, 9, 0), detail::rat_pi(-1, 9, 0))));

  row("back-projection-form", "(4.19)", diagonal_two_form(c.i6),
      wedge_mixed(jj_mixed(detail::rat_pi(-1, 9, 0), detail::rat_pi(-1, 9, 0))));

  row("curvature-group-form", "(4.81)", diagonal_two_form(c.i2),
      omega_times(curv_trace_scalar().scaled(detail::imag_pi(-1, 1, 0))) +
          wedge_mixed(jj_mixed(detail::rat_pi(1, 3, 0), detail::rat_pi(1, 3, 0))));

  row("curvature-group-adjoint-form", "(4.82)", diagonal_two_form(c.i4),
      omega_times(curv_trace_scalar().scaled(detail::imag_pi(-1, 1, 0))) +
          wedge_mixed(jj_mixed(detail::rat_pi(1, 3, 0), detail::rat_pi(1, 3, 0))));

  {
    Poly w_scalar = cv(j, false, i, true, i, false, j, true, detail::rat_pi(2, 1, 0)) +
                    cv(j, false, i, false, i, true, j, true, -one);
    Poly mixed = cv(R, false, j, true, j, false, Q, true, detail::rat_pi(2, 3, 0)) +
                 cv(j, false, R, false, j, true, Q, true, detail::rat_pi(1, 3, 0));
    Poly anti = cv(j, false, R, true, j, true, Q, true, detail::rat_pi(1, 3, 0)) +
                cv(j, false, j, true, R, true, Q, true, detail::rat_pi(1, 3, 0));
    row("radial-curvature-form", "(4.33)", diagonal_two_form(c.i21),
        omega_times(w_scalar.scaled(detail::imag_pi(-1, 3, 0))) + wedge_mixed(mixed) +
            wedge_anti(anti));
  }

  {
    Poly w_scalar = cv(j, false, i, true, i, false, j, true, one) +
                    cv(j, false, i, false, i, true, j, true, detail::rat_pi(-2, 1, 0));
    Poly mixed = cv(R, false, i, true, i, false, Q, true, detail::rat_pi(-2, 3, 0)) +
                 cv(i, false, R, false, i, true, Q, true, detail::rat_pi(-4, 3, 0));
    Poly anti = cv(i, false, i, true, R, true, Q, true, detail::rat_pi(-2, 3, 0)) +
                cv(i, false, R, true, i, true, Q, true, detail::rat_pi(-2, 3, 0));
    row("trace-seed-form", "(4.38)", diagonal_two_form(c.i23),
        omega_times(w_scalar.scaled(detail::imag_pi(4, 3, 0))) + wedge_mixed(mixed) +
            wedge_anti(anti));
  }

  {
    Poly w_scalar = nablaJ_norm_sq().scaled(detail::rat_pi(-1, 96, 0)) +
                    curv_trace_scalar().scaled(detail::rat_pi(1, 3, 0));
    Poly mixed = cv(i, false, R, false, i, true, Q, true, detail::rat_pi(1, 3, 0)) +
                 cv(R, false, i, true, i, false, Q, true, detail::rat_pi(-1, 3, 0));
    row("holomorphic-seed-form", "(4.43)", diagonal_two_form(c.i25),
        omega_times(w_scalar.scaled(detail::imag_pi(2, 1, 0))) + wedge_mixed(mixed));
  }

  {
    auto jj = [&](Idx a1, Idx a2, Idx b1, Idx b2, const ExactScalar& coeff) {
      return kterm(coeff, {nabla_j(a1, a2, t, false), nabla_j(b1, b2, t, true)}, {}, {});
    };
    Poly w_scalar = jj(i, j, i, j, detail::rat_pi(2, 1, 0)) +
                    jj(i, j, j, i, detail::rat_pi(2, 1, 0));
    Poly mixed = (jj(i, R, i, Q, one) + jj(i, R, Q, i, one) + jj(R, i, i, Q, one) +
                  jj(R, i, Q, i, one))
                     .scaled(detail::rat_pi(-2, 3, 0));
    row("pairing-seed-form-expanded", "(4.49)", diagonal_two_form(c.i26),
        omega_times(w_scalar.scaled(detail::imag_pi(2, 3, 0))) + wedge_mixed(mixed));
  }

  row("pairing-seed-form-collected", "(4.56)", diagonal_two_form(c.i26),
      omega_times(nablaJ_norm_sq().scaled(detail::imag_pi(1, 8, 0))) +
          wedge_mixed(jj_mixed(detail::rat_pi(-10, 3, 0), detail::rat_pi(8, 3, 0))));

  {
    Poly w_scalar = nablaJ_norm_sq().scaled(detail::rat_pi(5, 96, 0)) +
                    curv_trace_scalar().scaled(detail::rat_pi(1, 3, 0));
    Poly mixed = jj_mixed(detail::rat_pi(5, 4, 0), detail::rat_pi(-1, 1, 0)) +
                 cv(j, false, R, false, j, true, Q, true, detail::rat_pi(1, 6, 0)) +
                 cv(R, false, j, true, j, false, Q, true, detail::rat_pi(1, 3, 0));
    Poly anti = cv(j, false, j, true, R, true, Q, true, detail::rat_pi(1, 3, 0)) +
                cv(j, false, R, true, j, true, Q, true, detail::rat_pi(1, 3, 0));
    row("flux-term-form", "(4.75)", diagonal_two_form(c.i22),
        omega_times(w_scalar.scaled(detail::imag_pi(-1, 1, 0))) + wedge_mixed(mixed) +
            wedge_anti(anti));
  }

  row("diagonal-pairing-form", "(4.78)", diagonal_two_form(c.i24),
      omega_times(nablaJ_norm_sq().scaled(detail::imag_pi(-1, 8, 0))) +
          wedge_mixed(jj_mixed(detail::rat_pi(2, 1, 0), detail::rat_pi(-2, 1, 0))));

  {
    Poly mixed = cv(j, false, R, false, j, true, Q, true, detail::rat_pi(-1, 2, 0)) +
                 jj_mixed(detail::rat_pi(-1, 12, 0), detail::rat_pi(-1, 3, 0));
    row("curvature-group-negated-form", "(4.79)",
        diagonal_two_form(c.i2).scaled(-one),
        omega_times(curv_trace_scalar().scaled(detail::imag_pi(1, 1, 0))) + wedge_mixed(mixed));
  }

  row("assembly-form", "(4.83)", diagonal_two_form(c.f2),
      omega_times(curv_trace_scalar().scaled(detail::imag_pi(-2, 1, 0))));

  {
    // Antisymmetric block of the inverted one-word barred kernel.
    const Idx fj = Idx::label(2), fs = Idx::label(4);
    const PinnedSet pf{2, 4};
    PinnedSet pp = pf;
    pp.insert(R.v);
    pp.insert(Q.v);
    Poly K = apply_inv_offdiag(apply_b(fj, mult_var(VarKind::Zb, fs, Poly::one(), pf), pf), 1, pf);
    TwoForm want;
    Poly coeff = kterm(detail::rat_pi(1, 2, 0), {}, {Delta(R, fj), Delta(Q, fs)}, {});
    want.anti = (coeff - swap_free_labels(coeff, R, Q))
                    .scaled(detail::rat_pi(1, 2, 0))
                    .canonical(pp);
    row("one-word-barred-form", "(4.37)", diagonal_two_form(expand(K, pf), R, Q, pf), want,
        {2, 4});
  }

  {
    // Antisymmetric block of the inverted mixed cubic kernel; the mixed and
    // holomorphic blocks vanish.
    const Idx fi = Idx::label(1), fj = Idx::label(2), fs = Idx::label(4), ft = Idx::label(5);
    const PinnedSet pf{1, 2, 4, 5};
    PinnedSet pp = pf;
    pp.insert(R.v);
    pp.insert(Q.v);
    Poly K = apply_inv_offdiag(
        apply_b(fi,
                mult_var(VarKind::Z, fj,
                         mult_var(VarKind::Zb, fs, mult_var(VarKind::Zb, ft, Poly::one(), pf), pf),
                         pf),
                pf),
        1, pf);
    TwoForm want;
    Poly coeff = kterm(detail::rat_pi(1, 4, -1), {}, {Delta(fj, fs), Delta(R, fi), Delta(Q, ft)},
                       {}) +
                 kterm(detail::rat_pi(1, 4, -1), {}, {Delta(fj, ft), Delta(R, fi), Delta(Q, fs)},
                       {});
    want.anti = (coeff - swap_free_labels(coeff, R, Q))
                    .scaled(detail::rat_pi(1, 2, 0))
                    .canonical(pp);
    row("mixed-cubic-form", "(4.71)", diagonal_two_form(expand(K, pf), R, Q, pf), want,
        {1, 2, 4, 5});
  }

  return out;
}

// ---------------------------------------------------------------------------
// Row evaluation.
// ---------------------------------------------------------------------------
struct RowOutcome {
  std::string name;
  std::string ref;
  bool symbolic = false;  // cancelled exactly at the structural level
  double residual = 0.0;  // worst sampled relative residual over the fallback
  bool pass = false;
};

inline RowOutcome evaluate_reduction(const ReductionCheck& r, double tol = 1e-9,
                                     const std::vector<int>& dims = {2, 3},
                                     const std::vector<uint64_t>& seeds = {11, 12, 13, 14, 15}) {
  PinnedSet pp(r.free_labels.begin(), r.free_labels.end());
  Poly diff = expand(r.lhs, pp) - expand(r.rhs, pp);
  std::vector<Poly> parts;
  if (r.tracked) {
    parts.push_back(truncate_degrees(diff, 1, 1, pp));
  } else {
    parts.push_back(std::move(diff));
  }
  RowOutcome out;
  out.name = r.name;
  out.ref = r.ref;
  out.symbolic = true;
  out.pass = true;
  for (const Poly& p : parts) {
    VanishReport v = vanish_report(p, r.free_labels, dims, seeds);
    out.symbolic = out.symbolic && v.symbolic;
    out.residual = std::max(out.residual, v.residual);
    out.pass = out.pass && v.pass(tol);
  }
  return out;
}

inline RowOutcome evaluate_form(const FormCheck& f, double tol = 1e-9,
                                const std::vector<int>& dims = {2, 3},
                                const std::vector<uint64_t>& seeds = {11, 12, 13, 14, 15}) {
  std::vector<int16_t> frees{f.got.R.v, f.got.Q.v};
  frees.insert(frees.end(), f.extra_free.begin(), f.extra_free.end());
  TwoForm d = f.got - f.want;
  RowOutcome out;
  out.name = f.name;
  out.ref = f.ref;
  out.symbolic = true;
  out.pass = true;
  for (const Poly* p : {&d.mixed, &d.holo, &d.anti}) {
    VanishReport v = vanish_report(*p, frees, dims, seeds);
    out.symbolic = out.symbolic && v.symbolic;
    out.residual = std::max(out.residual, v.residual);
    out.pass = out.pass && v.pass(tol);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assembly-level scalar targets.
// ---------------------------------------------------------------------------

// Coefficient polynomials of each first-degree variable kind; all four must
// vanish for the first-order assembly.
inline std::array<Poly, 4> first_order_coefficients(const Poly& K,
                                                    Idx out_label = Idx::label(210)) {
  Poly src = expand(K);
  return {extract_linear(src, VarKind::Z, out_label),
          extract_linear(src, VarKind::Zb, out_label),
          extract_linear(src, VarKind::Zp, out_label),
          extract_linear(src, VarKind::Zbp, out_label)};
}

// Value of the kernel on the diagonal at the base point.
inline Poly origin_value(const Poly& K) { return eval_origin(expand(K)); }

}  // namespace bkc
