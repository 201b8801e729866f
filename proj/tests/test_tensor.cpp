#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkc/tensor.hpp"

using namespace bkc;

namespace {

Term sym_term(Sym s) {
  Term t;
  t.coeff = ExactScalar::one();
  t.syms.push_back(s);
  return t;
}

}  // namespace

TEST_CASE("delta_substitutes_into_symbol_slots") {
  // DJ[a,i,r] * d[a,s]  ->  DJ[s,i,r]
  Term t = sym_term(nabla_j(Idx::label(7), Idx::label(20), Idx::label(21), false));
  t.deltas.emplace_back(Idx::label(7), Idx::label(22));
  PinnedSet pinned{20, 21, 22};
  Poly p = Poly(t).canonical(pinned);
  REQUIRE(p.size() == 1);
  const Term& r = p.terms()[0];
  CHECK(r.deltas.empty());
  REQUIRE(r.syms.size() == 1);
  CHECK(r.syms[0].idx[0] == Idx::label(22));
  CHECK(r.syms[0].idx[1] == Idx::label(20));
  CHECK(r.syms[0].idx[2] == Idx::label(21));
}

TEST_CASE("full_trace_gives_dimension_factor") {
  Term t;
  t.coeff = ExactScalar::one();
  t.deltas.emplace_back(Idx::label(3), Idx::label(3));
  Poly p = Poly(t).canonical();
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].coeff == ExactScalar::n_pow(1));
  CHECK(p.terms()[0].deltas.empty());
}

TEST_CASE("concrete_delta_mismatch_kills_term") {
  Term t;
  t.coeff = ExactScalar::one();
  t.deltas.emplace_back(Idx::fixed(1), Idx::fixed(2));
  CHECK(Poly(t).canonical().empty());

  Term u;
  u.coeff = ExactScalar::one();
  u.deltas.emplace_back(Idx::fixed(2), Idx::fixed(2));
  Poly q = Poly(u).canonical();
  REQUIRE(q.size() == 1);
  CHECK(q.terms()[0].coeff == ExactScalar::one());
  CHECK(q.terms()[0].deltas.empty());
}

TEST_CASE("antisymmetric_slot_swap_cancels_sum") {
  PinnedSet pinned{10, 11, 12};
  Poly p;
  p.add_term(sym_term(nabla_j(Idx::label(10), Idx::label(11), Idx::label(12), false)));
  p.add_term(sym_term(nabla_j(Idx::label(10), Idx::label(12), Idx::label(11), false)));
  CHECK(p.canonical(pinned).empty());
}

TEST_CASE("summed_label_names_do_not_matter") {
  PinnedSet pinned{10, 11};
  auto mk = [&](int dummy) {
    Term t = sym_term(nabla_j(Idx::label(dummy), Idx::label(10), Idx::label(11), false));
    t.vars.push_back(Var{VarKind::Z, Idx::label(dummy)});
    return Poly(t).canonical(pinned);
  };
  Poly a = mk(5), b = mk(19);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  CHECK(a.terms()[0] == b.terms()[0]);
  CHECK((a - b).canonical(pinned).empty());
}

TEST_CASE("contraction_with_symmetric_factors_vanishes") {
  // DJ is antisymmetric in its last two slots, so DJ[d,a,b] z_a z_b = 0.
  PinnedSet pinned{9};
  Term t = sym_term(nabla_j(Idx::label(9), Idx::label(4), Idx::label(5), false));
  t.vars.push_back(Var{VarKind::Z, Idx::label(4)});
  t.vars.push_back(Var{VarKind::Z, Idx::label(5)});
  CHECK(Poly(t).canonical(pinned).empty());
}

TEST_CASE("curvature_sign_group") {
  PinnedSet pinned{1, 2, 3, 4};
  Idx a = Idx::label(1), b = Idx::label(2), c = Idx::label(3), d = Idx::label(4);

  // Antisymmetry in the first pair.
  Poly p1;
  p1.add_term(sym_term(curv(a, false, b, true, c, false, d, true)));
  p1.add_term(sym_term(curv(b, true, a, false, c, false, d, true)));
  CHECK(p1.canonical(pinned).empty());

  // Antisymmetry in the second pair.
  Poly p2;
  p2.add_term(sym_term(curv(a, false, b, true, c, false, d, true)));
  p2.add_term(sym_term(curv(a, false, b, true, d, true, c, false)));
  CHECK(p2.canonical(pinned).empty());

  // Symmetry under swapping the two pairs (bars travel with the slots).
  Poly q;
  q.add_term(sym_term(curv(a, false, b, true, c, false, d, true)));
  Term u = sym_term(curv(c, false, d, true, a, false, b, true));
  u.coeff = -u.coeff;
  q.add_term(u);
  CHECK(q.canonical(pinned).empty());
}

TEST_CASE("conjugation_is_an_involution_and_flips_bars") {
  Term t = sym_term(nabla_j(Idx::label(0), Idx::label(1), Idx::label(30), false));
  t.coeff = ExactScalar::term(GaussRational(Rational(2, 3), Rational(-1, 5)), 1, 0);
  t.vars.push_back(Var{VarKind::Z, Idx::label(0)});
  t.vars.push_back(Var{VarKind::Zbp, Idx::label(1)});
  Poly p(t);
  Poly c = p.conjugated();
  REQUIRE(c.size() == 1);
  CHECK(c.terms()[0].syms[0].bars == 0b111);
  CHECK(c.terms()[0].vars[0].kind == VarKind::Zb);
  CHECK(c.terms()[0].vars[1].kind == VarKind::Zp);
  PinnedSet pinned{30};
  CHECK((c.conjugated() - p).canonical(pinned).empty());
}

TEST_CASE("products_keep_summed_labels_independent") {
  // (sum_a z_a zb_a)^2 must use two independent summation labels.
  Term t;
  t.coeff = ExactScalar::one();
  t.vars.push_back(Var{VarKind::Z, Idx::label(2)});
  t.vars.push_back(Var{VarKind::Zb, Idx::label(2)});
  Poly a(t);
  Poly sq = poly_product(a, a);
  REQUIRE(sq.size() == 1);
  const Term& r = sq.terms()[0];
  REQUIRE(r.vars.size() == 4);
  std::set<int16_t> labels;
  for (const auto& v : r.vars) labels.insert(v.idx.v);
  CHECK(labels.size() == 2);
}

TEST_CASE("trace_term_merges_against_explicit_dimension_coefficient") {
  Term a;
  a.coeff = ExactScalar::one();
  a.syms.push_back(phi_sym());
  a.deltas.emplace_back(Idx::label(6), Idx::label(6));
  Term b;
  b.coeff = -ExactScalar::n_pow(1);
  b.syms.push_back(phi_sym());
  Poly p;
  p.add_term(a);
  p.add_term(b);
  CHECK(p.canonical().empty());
}

TEST_CASE("pinned_labels_survive_canonicalization") {
  PinnedSet pinned{25};
  Term t = sym_term(nabla_j(Idx::label(3), Idx::label(25), Idx::label(3), false));
  Poly p = Poly(t).canonical(pinned);
  REQUIRE(p.size() == 1);
  bool found = false;
  for (int k = 0; k < 3; ++k)
    if (p.terms()[0].syms[0].idx[k] == Idx::label(25)) found = true;
  CHECK(found);
}

TEST_CASE("mixed_concrete_and_formal_indices") {
  // d[a, 2] * z[a]  ->  z[2]
  Term t;
  t.coeff = ExactScalar::one();
  t.deltas.emplace_back(Idx::label(4), Idx::fixed(2));
  t.vars.push_back(Var{VarKind::Z, Idx::label(4)});
  Poly p = Poly(t).canonical();
  REQUIRE(p.size() == 1);
  CHECK(p.terms()[0].deltas.empty());
  REQUIRE(p.terms()[0].vars.size() == 1);
  CHECK(p.terms()[0].vars[0].idx == Idx::fixed(2));
}
