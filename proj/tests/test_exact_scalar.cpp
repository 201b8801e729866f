#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bkc/exact_scalar.hpp"

using namespace bkc;

namespace {
ExactScalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nt(0, 3), num(-6, 6), den(1, 5), pe(-2, 2), ne(0, 2);
  ExactScalar s;
  int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    GaussRational c(Rational::of(num(rng), den(rng)), Rational::of(num(rng), den(rng)));
    s += ExactScalar::term(c, pe(rng), ne(rng));
  }
  return s;
}
}  // namespace

TEST_CASE("rational_arithmetic_normalizes") {
  CHECK(Rational::of(2, 4) == Rational::of(1, 2));
  CHECK(Rational::of(1, -2) == Rational::of(-1, 2));
  CHECK((Rational::of(1, 3) + Rational::of(1, 6)) == Rational::of(1, 2));
  CHECK((Rational::of(2, 3) * Rational::of(3, 4)) == Rational::of(1, 2));
  CHECK(Rational::parse("-7/21") == Rational::of(-1, 3));
  CHECK(Rational::of(0, 5).str() == "0");
}

TEST_CASE("half_pi_times_two_over_pi_is_one") {
  ExactScalar a = ExactScalar::rat(1, 2) * ExactScalar::pi_pow(1);
  ExactScalar b = ExactScalar(2) * ExactScalar::pi_pow(-1);
  CHECK(a * b == ExactScalar::one());
}

TEST_CASE("conjugation_flips_imaginary_part") {
  ExactScalar s = ExactScalar::i() * ExactScalar::rat(1, 3) * ExactScalar::pi_pow(1);
  CHECK(s.conj() == -s);
  CHECK(s.conj().conj() == s);
}

TEST_CASE("additive_inverse_gives_empty_term_map") {
  ExactScalar s = ExactScalar::rat(3, 7) * ExactScalar::pi_pow(2) + ExactScalar::i();
  ExactScalar d = s - s;
  CHECK(d.is_zero());
  CHECK(d.terms().empty());
}

TEST_CASE("ring_axioms_randomized") {
  std::mt19937 rng(42);
  for (int round = 0; round < 512; ++round) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a + b).conj() == a.conj() + b.conj());
  }
}

TEST_CASE("numeric_evaluation_is_a_homomorphism") {
  std::mt19937 rng(7);
  const double pi = 3.14159265358979323846;
  for (int round = 0; round < 256; ++round) {
    ExactScalar a = random_scalar(rng), b = random_scalar(rng);
    for (int n : {1, 2, 3}) {
      auto lhs = (a * b).eval(pi, n);
      auto rhs = a.eval(pi, n) * b.eval(pi, n);
      double scale = std::max(1.0, std::abs(rhs));
      CHECK(std::abs(lhs - rhs) / scale <= 1e-14);
      auto ls = (a + b).eval(pi, n);
      auto rs = a.eval(pi, n) + b.eval(pi, n);
      CHECK(std::abs(ls - rs) / std::max(1.0, std::abs(rs)) <= 1e-14);
    }
  }
}

TEST_CASE("text_round_trip") {
  std::mt19937 rng(99);
  CHECK(ExactScalar::zero().str() == "0");
  CHECK(ExactScalar::parse("0").is_zero());
  CHECK(ExactScalar::parse("(1/2)·π").str() == "(1/2)·π");
  CHECK(ExactScalar::parse("(1/2)*pi^1") == ExactScalar::rat(1, 2) * ExactScalar::pi_pow(1));
  CHECK(ExactScalar::parse("(0+1i)·π^-2·n^3") ==
        ExactScalar::i() * ExactScalar::pi_pow(-2) * ExactScalar::n_pow(3));
  CHECK(ExactScalar::parse("(-2/3-1i)") ==
        ExactScalar::term(GaussRational(Rational::of(-2, 3), Rational(-1)), 0, 0));
  for (int round = 0; round < 512; ++round) {
    ExactScalar s = random_scalar(rng);
    CHECK(ExactScalar::parse(s.str()) == s);
  }
}
