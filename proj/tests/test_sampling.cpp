#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkc/sampling.hpp"

using namespace bkc;

TEST_CASE("sampled_data_meets_every_constraint") {
  for (int n : {1, 2, 3}) {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
      NumericAssignment A = sample_admissible(n, seed);
      AdmissibleResiduals r = admissible_residuals(A);
      INFO("n=" << n << " seed=" << seed << " max residual " << r.max());
      CHECK(r.max() < 1e-10);
    }
  }
}

TEST_CASE("distinct_seeds_give_distinct_data") {
  NumericAssignment a = sample_admissible(2, 7), b = sample_admissible(2, 8);
  double diff = 0.0;
  for (size_t k = 0; k < a.curv.size(); ++k) diff = std::max(diff, std::abs(a.curv[k] - b.curv[k]));
  CHECK(diff > 1e-3);
}

TEST_CASE("conjugated_polynomial_evaluates_to_conjugate") {
  NumericAssignment A = sample_admissible(3, 5);
  // S = sum_{a,b,c} DJ[a,b,c] DJ[b,c,a]  (generically complex).
  Term t;
  t.coeff = ExactScalar::one();
  t.syms.push_back(nabla_j(Idx::label(0), Idx::label(1), Idx::label(2), false));
  t.syms.push_back(nabla_j(Idx::label(1), Idx::label(2), Idx::label(0), false));
  Poly S(t);
  Cplx v = numeric_scalar(S, A);
  Cplx w = numeric_scalar(S.conjugated(), A);
  CHECK(std::abs(v - std::conj(w)) < 1e-12 * (1.0 + std::abs(v)));
  CHECK(std::abs(v.imag()) > 1e-6);  // the test should not be vacuous
}

TEST_CASE("curvature_components_conjugate_when_all_bars_flip") {
  NumericAssignment A = sample_admissible(2, 9);
  for (int mask = 0; mask < 16; ++mask)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Cplx u = A.curv_component(mask, i, j, j, i);
        Cplx v = A.curv_component(~mask & 15, i, j, j, i);
        CHECK(std::abs(u - std::conj(v)) < 1e-12);
      }
}

TEST_CASE("kronecker_delta_contracts_numerically") {
  NumericAssignment A = sample_admissible(3, 4);
  Term t;
  t.coeff = ExactScalar::one();
  t.deltas.emplace_back(Idx::label(0), Idx::label(1));
  t.vars.push_back(Var{VarKind::Z, Idx::label(0)});
  t.vars.push_back(Var{VarKind::Zb, Idx::label(1)});
  ExpandStats st = numeric_expand(Poly(t), A);
  CHECK(st.monos.size() == 3);
  for (const auto& [mono, v] : st.monos) {
    REQUIRE(mono.size() == 2);
    CHECK(mono[0].idx == mono[1].idx);
    CHECK(std::abs(v - 1.0) < 1e-14);
  }
}

TEST_CASE("canonicalization_preserves_numeric_meaning") {
  NumericAssignment A = sample_admissible(3, 6);
  PinnedSet pinned{20, 21};
  LabelEnv env{{20, 2}, {21, 3}};

  Term t1;
  t1.coeff = ExactScalar::term(GaussRational(Rational(3, 7), Rational(1, 2)), 1, 0);
  t1.syms.push_back(nabla_j(Idx::label(4), Idx::label(5), Idx::label(20), false));
  t1.deltas.emplace_back(Idx::label(5), Idx::label(6));
  t1.vars.push_back(Var{VarKind::Z, Idx::label(4)});
  t1.vars.push_back(Var{VarKind::Zbp, Idx::label(6)});

  Term t2;
  t2.coeff = ExactScalar::rat(-2, 5);
  t2.syms.push_back(curv(Idx::label(1), false, Idx::label(2), true, Idx::label(1), true,
                         Idx::label(21), false));
  t2.syms.push_back(nabla_j(Idx::label(2), Idx::label(3), Idx::label(3), true));
  t2.vars.push_back(Var{VarKind::Zp, Idx::fixed(1)});

  Poly p;
  p.add_term(t1);
  p.add_term(t2);
  ExpandStats raw = numeric_expand(p, A, env);
  ExpandStats canon = numeric_expand(p.canonical(pinned), A, env);
  CHECK(relative_difference(raw, canon) < 1e-12);
}

TEST_CASE("two_tier_vanishing_detects_the_cyclic_identity") {
  // DJ[a,b,c] + DJ[b,c,a] + DJ[c,a,b] = 0 holds only numerically (it is not
  // a sign-symmetry of the family), while dropping one term breaks it.
  std::vector<int16_t> free{10, 11, 12};
  auto mk = [&](int d, int a, int p) {
    return Poly(Term{ExactScalar::one(),
                     {nabla_j(Idx::label(free[d]), Idx::label(free[a]), Idx::label(free[p]), false)},
                     {},
                     {}});
  };
  Poly cyc = mk(0, 1, 2) + mk(1, 2, 0) + mk(2, 0, 1);
  CHECK_FALSE(cyc.canonical(PinnedSet(free.begin(), free.end())).empty());
  CHECK(poly_vanishes(cyc, free));
  Poly partial = mk(0, 1, 2) + mk(1, 2, 0);
  CHECK_FALSE(poly_vanishes(partial, free));
}

TEST_CASE("assignment_json_round_trip") {
  NumericAssignment A = sample_admissible(2, 17);
  NumericAssignment B = assignment_from_json(assignment_to_json(A));
  CHECK(B.n == A.n);
  CHECK(B.seed == A.seed);
  REQUIRE(B.curv.size() == A.curv.size());
  for (size_t k = 0; k < A.curv.size(); ++k) CHECK(B.curv[k] == A.curv[k]);
  for (size_t k = 0; k < A.nabla.size(); ++k) CHECK(B.nabla[k] == A.nabla[k]);
  Term t;
  t.coeff = ExactScalar::one();
  t.syms.push_back(curv(Idx::label(0), false, Idx::label(0), true, Idx::label(1), false,
                        Idx::label(1), true));
  CHECK(std::abs(numeric_scalar(Poly(t), A) - numeric_scalar(Poly(t), B)) < 1e-15);
}
