#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bkc/kernel.hpp"

using namespace bkc;

namespace {

Poly vars_kernel(std::initializer_list<Var> vs, ExactScalar c = ExactScalar::one()) {
  Term t;
  t.coeff = std::move(c);
  for (const auto& v : vs) t.vars.push_back(v);
  return Poly(t);
}

Var zc(int i) { return Var{VarKind::Z, Idx::fixed(i)}; }
Var zbc(int i) { return Var{VarKind::Zb, Idx::fixed(i)}; }
Var zpc(int i) { return Var{VarKind::Zp, Idx::fixed(i)}; }
Var zbpc(int i) { return Var{VarKind::Zbp, Idx::fixed(i)}; }

Var zl(int16_t l) { return Var{VarKind::Z, Idx::label(l)}; }
Var zbl(int16_t l) { return Var{VarKind::Zb, Idx::label(l)}; }
Var zpl(int16_t l) { return Var{VarKind::Zp, Idx::label(l)}; }
Var zbpl(int16_t l) { return Var{VarKind::Zbp, Idx::label(l)}; }
Var bl(int16_t l) { return Var{VarKind::B, Idx::label(l)}; }

bool same(const Poly& a, const Poly& b, const PinnedSet& pinned = {}) {
  return (a - b).canonical(pinned).empty();
}

ExactScalar two_pi() { return ExactScalar::term(GaussRational(Rational(2)), 1, 0); }

Poly random_kernel(std::mt19937_64& rng, int max_terms, int max_deg, int n) {
  std::uniform_int_distribution<int> nt(1, max_terms), dg(0, max_deg), kd(0, 3), ix(1, n),
      num(-3, 3), den(1, 3);
  Poly p;
  for (int t = nt(rng); t > 0; --t) {
    Term term;
    int a = num(rng), b = num(rng);
    if (a == 0 && b == 0) a = 1;
    term.coeff = ExactScalar::term(GaussRational(Rational(a, den(rng)), Rational(b, den(rng))), 0, 0);
    for (int d = dg(rng); d > 0; --d)
      term.vars.push_back(Var{static_cast<VarKind>(kd(rng)), Idx::fixed(ix(rng))});
    p.add_term(std::move(term));
  }
  return p.canonical();
}

}  // namespace

TEST_CASE("generator_action_on_the_unit_kernel") {
  Poly P = Poly::one();
  CHECK(apply_bplus(Idx::fixed(1), P).empty());
  CHECK(apply_bplus(Idx::label(5), P, {5}).empty());

  Poly bP = apply_b(Idx::label(5), P, {5});
  Poly expected = vars_kernel({zbl(5)}, two_pi()) + vars_kernel({zbpl(5)}, -two_pi());
  CHECK(same(bP, expected, {5}));
}

TEST_CASE("generator_action_on_a_linear_kernel") {
  PinnedSet pin{5, 6};
  Poly zs = vars_kernel({zl(6)});
  Poly got = apply_b(Idx::label(5), zs, pin);
  Term d;
  d.coeff = ExactScalar::rat(-2, 1);
  d.deltas.emplace_back(Idx::label(5), Idx::label(6));
  Poly expected = Poly(d) + vars_kernel({zl(6), zbl(5)}, two_pi()) +
                  vars_kernel({zl(6), zbpl(5)}, -two_pi());
  CHECK(same(got, expected, pin));

  // b+_j (z_s zb_t P) = 2 delta_jt z_s P.
  Poly w = vars_kernel({zl(6), zbl(7)});
  Poly bp = apply_bplus(Idx::label(5), w, {5, 6, 7});
  Term e;
  e.coeff = ExactScalar::rat(2, 1);
  e.deltas.emplace_back(Idx::label(5), Idx::label(7));
  e.vars.push_back(zl(6));
  CHECK(same(bp, Poly(e), {5, 6, 7}));
}

TEST_CASE("normal_form_of_z_zbar_matches_the_three_term_expansion") {
  PinnedSet pin{3, 4};
  Poly K = vars_kernel({zl(3), zbl(4)});
  Poly nf = fock_normal_form(K, pin);

  Poly expected = vars_kernel({bl(4), zl(3)}, ExactScalar::term(GaussRational(Rational(1, 2)), -1, 0));
  Term d;
  d.coeff = ExactScalar::pi_pow(-1);
  d.deltas.emplace_back(Idx::label(3), Idx::label(4));
  expected.add_term(d);
  expected = expected + vars_kernel({zl(3), zbpl(4)});
  CHECK(same(nf, expected, pin));
}

TEST_CASE("normal_form_round_trips_through_expansion") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 30; ++trial) {
    Poly K = random_kernel(rng, 4, 5, 2);
    Poly nf = fock_normal_form(K);
    CHECK(same(expand(nf), K));
  }
}

TEST_CASE("normal_form_heads_have_no_unprimed_zbar") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Poly nf = fock_normal_form(random_kernel(rng, 4, 6, 2));
    for (const auto& t : nf.terms())
      for (const auto& v : t.vars) CHECK(v.kind != VarKind::Zb);
  }
}

TEST_CASE("projection_keeps_exactly_the_ground_component") {
  // Ground states pass through unchanged.
  Poly zz = vars_kernel({zc(1), zc(2), zpc(1), zbpc(2)});
  CHECK(same(project_ker(zz), zz));
  // Excited states are annihilated.
  Poly exc = apply_b(Idx::fixed(1), vars_kernel({zc(2)}));
  CHECK(project_ker(exc).empty());
  // Idempotence on mixed input.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Poly K = random_kernel(rng, 3, 5, 2);
    Poly p1 = project_ker(K);
    CHECK(same(project_ker(p1), p1));
  }
}

TEST_CASE("inverse_off_ground_of_b_on_a_holomorphic_kernel") {
  PinnedSet pin{5, 6};
  Poly K = apply_b(Idx::label(5), vars_kernel({zl(6)}), pin);
  Poly got = expand(apply_inv_offdiag(K, 1, pin), pin);
  // (1/4pi)(-2 delta_js + 2 pi z_s (zb_j - zb'_j)) P
  Term d;
  d.coeff = ExactScalar::term(GaussRational(Rational(-1, 2)), -1, 0);
  d.deltas.emplace_back(Idx::label(5), Idx::label(6));
  Poly expected = Poly(d) + vars_kernel({zl(6), zbl(5)}, ExactScalar::rat(1, 2)) +
                  vars_kernel({zl(6), zbpl(5)}, ExactScalar::rat(-1, 2));
  CHECK(same(got, expected, pin));
}

TEST_CASE("inverse_off_ground_of_b_on_an_antiholomorphic_kernel") {
  PinnedSet pin{5, 6};
  Poly K = apply_b(Idx::label(5), vars_kernel({zbl(6)}), pin);
  Poly got = expand(apply_inv_offdiag(K, 1, pin), pin);
  // [1/4 (zb_j - zb'_j)(zb_s - zb'_s) + 1/2 zb'_s (zb_j - zb'_j)] P
  Poly dj = vars_kernel({zbl(5)}) - vars_kernel({zbpl(5)});
  Poly ds = vars_kernel({zbl(6)}) - vars_kernel({zbpl(6)});
  Poly expected = poly_product(dj, ds, pin).scaled(ExactScalar::rat(1, 4)) +
                  poly_product(vars_kernel({zbpl(6)}), dj, pin).scaled(ExactScalar::rat(1, 2));
  CHECK(same(got, expected, pin));
}

TEST_CASE("inverse_off_ground_scales_by_the_eigenvalue") {
  // A pure two-b component picks up (8 pi)^{-1}.
  Poly K = apply_b(Idx::fixed(1), apply_b(Idx::fixed(2), Poly::one()));
  Poly inv = apply_inv_offdiag(K, 1);
  REQUIRE(inv.size() == 1);
  ExactScalar want = ExactScalar::term(GaussRational(Rational(1, 8)), -1, 0);
  CHECK(inv.terms()[0].coeff == want);
  // Ground components are dropped, and projection after inversion is zero.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    Poly R = random_kernel(rng, 3, 5, 2);
    CHECK(project_ker(apply_inv_offdiag(R, 1)).empty());
  }
}

TEST_CASE("inversion_inverts_the_model_operator_off_the_ground_space") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    Poly K = random_kernel(rng, 3, 6, 2);
    Poly off = K - project_ker(K);
    CHECK(same(apply_L(apply_inv_offdiag(K, 1)), off));
    CHECK(same(expand(apply_inv_offdiag(apply_L(K), 1)), off));
  }
}

TEST_CASE("adjoint_is_an_involution_fixing_the_unit_kernel") {
  CHECK(same(adjoint(Poly::one()), Poly::one()));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Poly K = random_kernel(rng, 4, 5, 2);
    CHECK(same(adjoint(adjoint(K)), K));
  }
}

TEST_CASE("composition_reproduces_projection") {
  Poly P = Poly::one();
  CHECK(same(compose(P, P), P));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    Poly K = random_kernel(rng, 3, 4, 2);
    CHECK(same(compose(P, K), project_ker(K)));
    CHECK(same(compose(K, P), adjoint(compose(P, adjoint(K)))));
  }
}

TEST_CASE("off_ground_composition_with_a_mixed_quadratic") {
  // (1 - proj) applied through composition: z_j zb_k P minus its projection.
  PinnedSet pin{5, 6};
  Poly X = vars_kernel({zl(5), zbl(6)});
  Poly got = X - compose(Poly::one(), X, pin);
  Term d;
  d.coeff = -ExactScalar::pi_pow(-1);
  d.deltas.emplace_back(Idx::label(5), Idx::label(6));
  Poly expected = Poly(d) + vars_kernel({zl(5), zbl(6)}) - vars_kernel({zl(5), zbpl(6)});
  CHECK(same(got, expected, pin));
}

TEST_CASE("projection_of_a_quartic_evaluated_at_the_origin") {
  PinnedSet pin{5, 6, 7, 8};
  Poly X = vars_kernel({zbl(5), zbl(6), zl(7), zl(8)});
  Poly v = eval_origin(compose(Poly::one(), X, pin), pin);
  Term t1;
  t1.coeff = ExactScalar::pi_pow(-2);
  t1.deltas.emplace_back(Idx::label(7), Idx::label(6));
  t1.deltas.emplace_back(Idx::label(8), Idx::label(5));
  Term t2;
  t2.coeff = ExactScalar::pi_pow(-2);
  t2.deltas.emplace_back(Idx::label(7), Idx::label(5));
  t2.deltas.emplace_back(Idx::label(8), Idx::label(6));
  CHECK(same(v, Poly(t1) + Poly(t2), pin));
}

TEST_CASE("composition_is_associative_and_antihomomorphic_under_adjoint") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    Poly A = random_kernel(rng, 2, 3, 2);
    Poly B = random_kernel(rng, 2, 3, 2);
    Poly C = random_kernel(rng, 2, 3, 2);
    CHECK(same(compose(compose(A, B), C), compose(A, compose(B, C))));
    CHECK(same(adjoint(compose(A, B)), compose(adjoint(B), adjoint(A))));
  }
}

TEST_CASE("origin_evaluation") {
  CHECK(same(eval_origin(Poly::one()), Poly::one()));
  CHECK(eval_origin(vars_kernel({zc(1), zbpc(2)})).empty());
}

TEST_CASE("diagonal_two_form_of_the_unit_kernel_is_the_reference_form") {
  TwoForm f = diagonal_two_form(Poly::one());
  TwoForm scaled = f.scaled(ExactScalar::i() * ExactScalar::term(GaussRational(Rational(1, 2)), -1, 0));
  Term w;
  w.coeff = ExactScalar::i() * ExactScalar::rat(1, 2);
  w.deltas.emplace_back(f.R, f.Q);
  CHECK(same(scaled.mixed, Poly(w), f.pinned()));
  CHECK(scaled.holo.empty());
  CHECK(scaled.anti.empty());
}

TEST_CASE("diagonal_two_form_kills_pure_b_words") {
  Poly K = apply_b(Idx::fixed(1), apply_b(Idx::fixed(2), Poly::one()));
  CHECK(diagonal_two_form(K).exact_zero());
}

TEST_CASE("diagonal_two_form_of_an_inverted_antiholomorphic_kernel") {
  PinnedSet pin{5, 6};
  Poly K = apply_inv_offdiag(apply_b(Idx::label(5), vars_kernel({zbl(6)}), pin), 1, pin);
  TwoForm f = diagonal_two_form(K);
  // Expected: (1/2) dzb_5 ^ dzb_6.
  Term c;
  c.coeff = ExactScalar::rat(1, 2);
  c.deltas.emplace_back(f.R, Idx::label(5));
  c.deltas.emplace_back(f.Q, Idx::label(6));
  TwoForm g = wedge_anti(Poly(c), f.R, f.Q);
  PinnedSet all = pin;
  all.insert(f.R.v);
  all.insert(f.Q.v);
  CHECK((f.mixed - g.mixed).canonical(all).empty());
  CHECK((f.holo - g.holo).canonical(all).empty());
  CHECK((f.anti - g.anti).canonical(all).empty());
}

TEST_CASE("degree_truncation_and_parity") {
  Poly K = vars_kernel({zc(1)}) + vars_kernel({zc(1), zpc(2), zbpc(2)});
  CHECK(parities(K) == std::set<int>{1});
  Poly tr = truncate_degrees(K, -1, 1);
  CHECK(same(tr, vars_kernel({zc(1)})));
  Poly both = K + Poly::one();
  CHECK((parities(both) == std::set<int>{0, 1}));
}
