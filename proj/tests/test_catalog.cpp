// Tests for the correction-term catalog: every regression row (independent
// left/right reconstructions of reduction identities), every diagonal
// two-form row, and the assembly-level scalar targets.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkc/catalog.hpp"

using namespace bkc;

TEST_CASE("catalog_kernels_are_nonzero_and_have_expected_parity") {
  const TermCatalog& c = catalog();
  CHECK(!c.o1p.empty());
  CHECK(!c.w.empty());
  CHECK(!c.wstar.empty());
  CHECK(!c.f1.empty());
  CHECK(!c.i1.empty());
  CHECK(!c.i2.empty());
  CHECK(!c.i3.empty());
  CHECK(!c.i4.empty());
  CHECK(!c.i5.empty());
  CHECK(!c.i6.empty());
  CHECK(!c.i21.empty());
  CHECK(!c.i22.empty());
  CHECK(!c.i23.empty());
  CHECK(!c.i24.empty());
  CHECK(!c.i26.empty());
  CHECK(!c.f2.empty());

  // The first-order assembly is odd in the variables, the second-order one is
  // even.
  CHECK(parities(expand(c.f1)) == std::set<int>{1});
  CHECK(parities(expand(c.f2)) == std::set<int>{0});
}

TEST_CASE("curvature_group_tree_matches_algebraic_sum") {
  const TermCatalog& c = catalog();
  CHECK(polys_match(c.i2, eval_symbolic(c.x_i2), {}));
}

TEST_CASE("reduction_rows_hold_exactly") {
  for (const ReductionCheck& r : reduction_checks()) {
    RowOutcome out = evaluate_reduction(r);
    INFO(r.name, " ", r.ref, " residual=", out.residual);
    CHECK(out.symbolic);
    CHECK(out.pass);
  }
}

TEST_CASE("catalog_rows_hold") {
  const TermCatalog& c = catalog();
  for (const ReductionCheck& r : catalog_reduction_checks(c)) {
    RowOutcome out = evaluate_reduction(r);
    INFO(r.name, " ", r.ref, " symbolic=", out.symbolic, " residual=", out.residual);
    CHECK(out.pass);
    if (r.name == "cubic-corrector-closed-form" || r.name == "radial-curvature-split" ||
        r.name == "scalar-complement-vanishes") {
      CHECK(out.symbolic);
    }
  }
}

TEST_CASE("form_rows_hold") {
  const TermCatalog& c = catalog();
  for (const FormCheck& f : form_checks(c)) {
    RowOutcome out = evaluate_form(f);
    INFO(f.name, " ", f.ref, " symbolic=", out.symbolic, " residual=", out.residual);
    CHECK(out.pass);
    if (f.name == "first-assembly-form") CHECK(out.symbolic);
  }
}

TEST_CASE("first_assembly_has_no_linear_part_and_vanishes_at_origin") {
  const TermCatalog& c = catalog();
  for (const Poly& coeff : first_order_coefficients(c.f1)) CHECK(coeff.empty());
  CHECK(origin_value(c.f1).empty());
}

TEST_CASE("second_assembly_origin_value_matches_trace_scalar") {
  const TermCatalog& c = catalog();
  Poly diff = origin_value(c.f2) - b1_scalar();
  VanishReport v = vanish_report(diff, {});
  INFO("residual=", v.residual);
  CHECK(v.pass(1e-9));
}
