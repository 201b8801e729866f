#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkc/sexpr.hpp"

using namespace bkc;

namespace {

Poly vars_kernel(ExactScalar c, std::vector<Var> vs) {
  Term t;
  t.coeff = std::move(c);
  t.vars = std::move(vs);
  Poly p;
  p.add_term(std::move(t));
  return p;
}

bool same(const Poly& a, const Poly& b, const PinnedSet& pinned = {}) {
  return (a - b).canonical(pinned).is_zero_exact();
}

}  // namespace

TEST_CASE("parsing_a_generator_application_matches_the_direct_action") {
  OperatorExpr e = parse_pipeline("(b 1 P)");
  CHECK(e.kind == OpKind::ApplyB);
  CHECK(e.index.concrete);
  CHECK(e.index.v == 1);
  CHECK(same(eval_symbolic(e), apply_b(Idx::fixed(1), Poly::one())));
}

TEST_CASE("inverting_an_off_ground_generator_image_scales_by_a_quarter") {
  Poly got = eval_symbolic(parse_pipeline("(inv 1 (offdiag (b 1 (mul z 1 P))))"));
  Poly expected = vars_kernel(ExactScalar::rat(1, 4) * ExactScalar::pi_pow(-1),
                              {Var{VarKind::B, Idx::fixed(1)}, Var{VarKind::Z, Idx::fixed(1)}});
  CHECK(same(got, expected));
  // The inverse already acts off the ground space, so the complement
  // projection is optional.
  Poly bare = eval_symbolic(parse_pipeline("(inv 1 (b 1 (mul z 1 P)))"));
  CHECK(same(got, bare));
}

TEST_CASE("composing_the_ground_kernel_with_itself_reproduces_it") {
  CHECK(same(eval_symbolic(parse_pipeline("(compose P P)")), Poly::one()));
}

TEST_CASE("scaled_sum_of_opposite_copies_cancels") {
  CHECK(eval_symbolic(parse_pipeline("(sum (scale {-1} P) P)")).canonical().is_zero_exact());
}

TEST_CASE("formal_labels_render_as_identifiers") {
  OperatorExpr e = op_mul(VarKind::Z, Idx::label(9), op_p());
  CHECK(render_pipeline(e) == "(mul z j P)");
  OperatorExpr back = parse_pipeline("(mul z j P)");
  CHECK_FALSE(back.index.concrete);
  CHECK(back.index.v == 9);
  PinnedSet pinned = {9};
  CHECK(same(eval_symbolic(back, pinned), mult_var(VarKind::Z, Idx::label(9), Poly::one(), pinned), pinned));
}

TEST_CASE("pipeline_text_round_trips_through_parse_and_render") {
  const std::string cases[] = {
      "P",
      "(b 1 P)",
      "(inv 2 (offdiag (bplus 3 P)))",
      "(compose (adjoint (b 1 P)) (sum P (scale {(1)·π} P)))",
      "(mul zbp j (mul zb 2 P))",
      "(project (mul zp a1 P))",
      "(scale {(1/2+1/3i)·π^-1·n} (b j (b k P)))",
  };
  for (const std::string& src : cases) {
    CAPTURE(src);
    CHECK(render_pipeline(parse_pipeline(src)) == src);
  }
}

TEST_CASE("polynomial_payload_text_round_trips") {
  Term t1;
  t1.coeff = ExactScalar::rat(-2, 3) * ExactScalar::i() * ExactScalar::pi_pow(2);
  t1.syms.push_back(nabla_j(Idx::label(0), Idx::label(1), Idx::fixed(2), true));
  t1.deltas.emplace_back(Idx::label(0), Idx::fixed(1));
  t1.vars.push_back(Var{VarKind::Zbp, Idx::label(1)});
  Term t2;
  t2.coeff = ExactScalar::n_pow(1);
  t2.syms.push_back(curv(Idx::label(3), false, Idx::label(3), true, Idx::fixed(1), false, Idx::fixed(1), true));
  t2.syms.push_back(phi_sym());
  Poly p;
  p.add_term(t1);
  p.add_term(t2);
  std::string text = poly_to_text(p);
  Poly back = poly_from_text(text);
  CHECK(same(p, back, PinnedSet{0, 1}));
  CHECK(poly_to_text(back) == text);
  CHECK(poly_from_text("0").empty());
}

TEST_CASE("kernel_and_scalepoly_forms_round_trip_and_evaluate") {
  Poly k = vars_kernel(ExactScalar::rat(3, 1), {Var{VarKind::Z, Idx::fixed(1)}});
  OperatorExpr e = op_scale_poly(k, op_kernel(vars_kernel(ExactScalar::one(), {Var{VarKind::Zb, Idx::fixed(1)}})));
  std::string text = render_pipeline(e);
  OperatorExpr back = parse_pipeline(text);
  CHECK(render_pipeline(back) == text);
  Poly direct = mult_var(VarKind::Z, Idx::fixed(1),
                         vars_kernel(ExactScalar::rat(3, 1), {Var{VarKind::Zb, Idx::fixed(1)}}));
  CHECK(same(eval_symbolic(back), direct));
}

TEST_CASE("evaluating_a_nested_pipeline_matches_manual_calculus") {
  Poly manual = adjoint(apply_inv_offdiag(
      apply_b(Idx::fixed(2), mult_var(VarKind::Zb, Idx::fixed(1), Poly::one())), 1));
  Poly piped = eval_symbolic(parse_pipeline("(adjoint (inv 1 (b 2 (mul zb 1 P))))"));
  CHECK(same(manual, piped));
}

TEST_CASE("parse_errors_carry_line_and_column_positions") {
  auto expect_error = [](const std::string& src, int line, int column, const std::string& needle) {
    CAPTURE(src);
    try {
      parse_pipeline(src);
      FAIL_CHECK("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.column == column);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("(b 1", 1, 5, "expected an expression");
  expect_error("(b 1 P", 1, 1, "missing ')'");
  expect_error("(frobnicate P)", 1, 2, "unknown form");
  expect_error("(b 1 P P)", 1, 8, "too many operands");
  expect_error("(compose P)", 1, 1, "at least 2 operands");
  expect_error("Q", 1, 1, "unknown atom");
  expect_error("(inv 0 P)", 1, 6, "positive integer");
  expect_error("(b one P)", 1, 4, "malformed index");
  expect_error("(b 1\n  (oops P))", 2, 4, "unknown form");
  expect_error("(scale {nonsense} P)", 1, 8, "bad scalar");
  expect_error("(mul q 1 P)", 1, 6, "unknown variable kind");
}

TEST_CASE("comments_and_whitespace_are_ignored") {
  Poly got = eval_symbolic(parse_pipeline("; pipeline\n(b 1 ; generator\n   P)\n"));
  CHECK(same(got, apply_b(Idx::fixed(1), Poly::one())));
}
