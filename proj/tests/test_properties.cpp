#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bkc/checks.hpp"

using namespace bkc;

// The randomized suite itself: every structural law over the default sample.
TEST_CASE("randomized_structural_laws_hold") {
  CheckParams p;
  std::vector<CheckRow> rows = check_structural(p);
  REQUIRE(rows.size() == 8);
  for (const auto& r : rows) {
    INFO(r.expected);
    CHECK(r.pass);
    CHECK(r.residual <= r.tol);
  }
}

// A second, unrelated sample: the laws are not an artifact of one stream.
TEST_CASE("randomized_structural_laws_hold_for_another_seed") {
  CheckParams p;
  p.seed = 20260826;
  for (const auto& r : check_structural(p)) {
    INFO(r.expected);
    CHECK(r.pass);
  }
}

// Hand-sized instances of the same laws, checked directly.
TEST_CASE("fixed_instances_of_the_structural_laws") {
  const Poly one = Poly::one();
  CHECK((compose(one, one) - one).canonical().empty());
  CHECK((adjoint(one) - one).canonical().empty());
  CHECK((fock_normal_form(one) - one).canonical().empty());

  Poly K;
  {
    Term t;
    t.coeff = ExactScalar::rat(2, 3) * ExactScalar::i();
    t.vars = {Var{VarKind::Zb, Idx::fixed(1)}, Var{VarKind::Zp, Idx::fixed(2)},
              Var{VarKind::B, Idx::fixed(1)}};
    K.add_term(std::move(t));
  }
  CHECK((adjoint(adjoint(K)) - expand(K)).canonical().empty());
  Poly once = project_ker(K);
  CHECK((project_ker(once) - once).canonical().empty());
  CHECK((expand(fock_normal_form(K)) - expand(K)).canonical().empty());
}

// Assembly-level symmetries the randomized rows rely on.
TEST_CASE("assembly_kernels_have_the_expected_symmetries") {
  const TermCatalog& c = catalog();
  CHECK(parities(c.f1) == std::set<int>{1});
  CHECK(parities(c.f2) == std::set<int>{0});
  CHECK((adjoint(c.f1) - expand(c.f1)).canonical().empty());
  CHECK((adjoint(c.f2) - expand(c.f2)).canonical().empty());
}
