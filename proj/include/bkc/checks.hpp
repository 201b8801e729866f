#pragma once
// Named verification suites over the full tower.  Each suite re-derives its
// target from the operator algebra, measures a residual, and reports uniform
// rows; the command-line runner and the test binaries consume the same rows.
//
// Suites (registry names):
//   spectrum              - eigenvalue ladder and faithfulness of the matrix
//                           representation (commutators, projector, and an
//                           integration-based orthonormality spot check)
//   reduction-regression  - every tabulated normal-form identity
//   lemma-3.2             - first-degree coefficients of the first correction
//   theorem-3.3           - the per-term diagonal two-forms and the assembled
//                           second-order statement
//   diagonal-consistency  - base-point values of both corrections
//   oracle-equivalence    - matrix of each defining pipeline vs matrix of the
//                           reduced kernel
//   structural-properties - randomized laws of the operator algebra
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bkc/catalog.hpp"
#include "bkc/fock_oracle.hpp"

namespace bkc {

struct CheckParams {
  std::vector<int> dims{1, 2};
  uint64_t seed = 42;
  int trunc = 0;      // 0: per-suite default matrix cutoff
  double tol = -1.0;  // < 0: per-suite pinned tolerance
};

struct CheckRow {
  std::string check;
  int n = 0;          // 0: outcome does not depend on a single dimension
  uint64_t seed = 0;  // 0: no random sampling involved
  int D = 0;          // 0: no matrix truncation involved
  double tol = 0.0;
  double residual = 0.0;
  std::string expected;
  bool pass = false;
  std::string ref;
};

namespace detail {

inline double suite_tol(const CheckParams& p, double pinned) {
  return p.tol > 0.0 ? p.tol : pinned;
}

inline std::vector<uint64_t> seed_run(uint64_t seed, int count = 5) {
  std::vector<uint64_t> out;
  for (int k = 0; k < count; ++k) out.push_back(seed + static_cast<uint64_t>(k));
  return out;
}

// Sortable rank of a reference tag: the first two embedded integers, major
// then minor.  Used to report the earliest diverging identity.
inline long ref_rank(const std::string& ref) {
  long nums[2] = {0, 0};
  int at = 0;
  long cur = -1;
  for (char ch : ref) {
    if (ch >= '0' && ch <= '9') {
      cur = (cur < 0 ? 0 : cur) * 10 + (ch - '0');
    } else if (cur >= 0) {
      if (at < 2) nums[at++] = cur;
      cur = -1;
    }
  }
  if (cur >= 0 && at < 2) nums[at++] = cur;
  return nums[0] * 10000 + nums[1];
}

inline FockMatrix fm_generator(const SpMat& G, int raise, int lower, int D) {
  FockMatrix f;
  f.m = Eigen::MatrixXcd(G);
  f.raise = raise;
  f.lower = lower;
  f.good = D - std::max(raise, 0);
  return f;
}

inline FockMatrix fm_projector(const FockBasis& basis, const FockOps& ops) {
  FockMatrix f = fock_zero(basis);
  f.m = ops.proj_diag.cast<Cplx>().asDiagonal();
  return f;
}

// Gram matrix of the one-coordinate states through explicit integration on a
// Hermite grid; independent of the algebraic norm recursion, so deviations
// from the identity certify (or refute) orthonormality from first principles.
inline double integration_gram_residual(int D = 4, int grid = 24) {
  const double pi = std::acos(-1.0);
  using Bivar = std::map<std::pair<int, int>, Cplx>;
  auto apply_word = [&](const Bivar& h) {
    // -2 d/dz + 2 pi zbar, acting on h times the radial weight.
    Bivar out;
    for (const auto& [k, c] : h) {
      out[{k.first, k.second + 1}] += 2.0 * pi * c;
      if (k.first > 0) out[{k.first - 1, k.second}] += -2.0 * static_cast<double>(k.first) * c;
    }
    return out;
  };
  auto value = [&](const Bivar& h, Cplx z) {
    Cplx acc(0.0, 0.0);
    for (const auto& [k, c] : h)
      acc += c * std::pow(z, k.first) * std::pow(std::conj(z), k.second);
    return acc;
  };
  std::vector<std::pair<int, int>> states;
  std::vector<Bivar> funcs;
  for (int a = 0; a <= D; ++a)
    for (int b = 0; a + b <= D; ++b) {
      Bivar h{{{b, 0}, Cplx(1.0, 0.0)}};
      for (int k = 0; k < a; ++k) h = apply_word(h);
      states.push_back({a, b});
      funcs.push_back(std::move(h));
    }
  std::vector<double> gx, gw;
  gauss_hermite(grid, gx, gw);
  auto inner = [&](const Bivar& f, const Bivar& g) {
    Cplx acc(0.0, 0.0);
    for (size_t i = 0; i < gx.size(); ++i)
      for (size_t j = 0; j < gx.size(); ++j) {
        Cplx z(gx[i] / std::sqrt(pi), gx[j] / std::sqrt(pi));
        acc += gw[i] * gw[j] * value(f, z) * std::conj(value(g, z));
      }
    return acc / pi;
  };
  double worst = 0.0;
  for (size_t i = 0; i < states.size(); ++i)
    for (size_t j = i; j < states.size(); ++j) {
      Cplx v = inner(funcs[i], funcs[j]);
      double ni = fock_norm_sq({states[i].first}, {states[i].second});
      double nj = fock_norm_sq({states[j].first}, {states[j].second});
      double scaled = std::abs(v) / std::sqrt(ni * nj);
      worst = std::max(worst, i == j ? std::abs(scaled - 1.0) : scaled);
    }
  return worst;
}

inline Poly random_ground_kernel(std::mt19937& rng, int max_terms, int max_deg, int n,
                                 bool allow_word = true) {
  std::uniform_int_distribution<int> nt(1, max_terms), nd(0, max_deg), ni(1, n),
      kd(0, allow_word ? 4 : 3), num(-3, 3), den(1, 3);
  Poly p;
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Term term;
    term.coeff =
        ExactScalar::rat(num(rng), den(rng)) + ExactScalar::rat(num(rng), den(rng)) * ExactScalar::i();
    if (term.coeff.is_zero()) term.coeff = ExactScalar::one();
    int deg = nd(rng);
    int words = 0;
    for (int d = 0; d < deg; ++d) {
      VarKind k = static_cast<VarKind>(kd(rng));
      if (k == VarKind::B && ++words > 2) k = VarKind::Zb;
      term.vars.push_back(Var{k, Idx::fixed(ni(rng))});
    }
    p.add_term(std::move(term));
  }
  return p.canonical();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_spectrum(const CheckParams& p) {
  const double pi = std::acos(-1.0);
  const double tol_ev = detail::suite_tol(p, 1e-8);
  const double tol_orth = detail::suite_tol(p, 1e-10);
  std::vector<CheckRow> rows;
  for (int n : p.dims) {
    if (n > 2) continue;  // larger matrices only repeat the same algebra
    const int D = p.trunc > 0 ? p.trunc : (n == 1 ? 10 : 8);
    FockBasis basis = FockBasis::make(n, D);
    FockOps ops = FockOps::make(basis);
    Eigen::VectorXd ev = model_operator_spectrum(basis, ops);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      double k = std::max(0.0, std::round(ev[i] / (4.0 * pi)));
      worst = std::max(worst, std::abs(ev[i] - 4.0 * pi * k));
    }
    rows.push_back({"spectrum", n, 0, D, tol_ev, worst, "eigenvalues on the ladder 4*pi*k",
                    worst <= tol_ev, "(1.3)"});

    double orth = 0.0;
    FockMatrix P = detail::fm_projector(basis, ops);
    orth = std::max(orth, compare_interior(fm_mul(P, P), P, basis, 2).relative());
    orth = std::max(orth, compare_interior(fm_adjoint(P, basis), P, basis, 2).relative());
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        FockMatrix bj = detail::fm_generator(ops.b[j], 1, 0, D);
        FockMatrix bpk = detail::fm_generator(ops.bplus[k], -1, 1, D);
        FockMatrix comm = fm_add(fm_mul(bj, bpk), fm_scale(fm_mul(bpk, bj), -1.0));
        FockMatrix expect = fock_zero(basis);
        if (j == k)
          expect.m = -4.0 * pi *
                     Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(basis.size()),
                                                static_cast<Eigen::Index>(basis.size()));
        orth = std::max(orth, compare_interior(comm, expect, basis, 2).relative());
      }
    if (n == 1) orth = std::max(orth, detail::integration_gram_residual());
    rows.push_back({"spectrum", n, 0, D, tol_orth, orth,
                    "orthonormal basis and faithful ladder commutators", orth <= tol_orth,
                    "(1.8)"});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// reduction-regression
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_reductions(const CheckParams& p) {
  const double tol = detail::suite_tol(p, 1e-9);
  const auto seeds = detail::seed_run(p.seed);
  const std::vector<int> dims{2, 3};  // formal-label identities need n >= 2
  std::vector<CheckRow> rows;
  auto push = [&](const RowOutcome& o) {
    rows.push_back(
        {"reduction-regression", 0, p.seed, 0, tol, o.residual, o.name, o.pass, o.ref});
  };
  for (const auto& r : reduction_checks()) push(evaluate_reduction(r, tol, dims, seeds));
  const TermCatalog& c = catalog();
  for (const auto& r : catalog_reduction_checks(c)) push(evaluate_reduction(r, tol, dims, seeds));
  for (const auto& f : form_checks(c)) push(evaluate_form(f, tol, dims, seeds));
  std::stable_sort(rows.begin(), rows.end(), [](const CheckRow& a, const CheckRow& b) {
    return detail::ref_rank(a.ref) < detail::ref_rank(b.ref);
  });
  return rows;
}

// ---------------------------------------------------------------------------
// lemma-3.2
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_ground_gradient(const CheckParams& p) {
  const double tol = detail::suite_tol(p, 1e-10);
  const auto seeds = detail::seed_run(p.seed);
  const auto coeffs = first_order_coefficients(catalog().f1);
  std::vector<CheckRow> rows;
  for (int n : p.dims) {
    bool sym = true;
    double worst = 0.0;
    for (const Poly& c : coeffs) {
      VanishReport v = vanish_report(c, {210}, {n}, seeds, true);
      sym = sym && v.symbolic;
      worst = std::max(worst, v.residual);
    }
    rows.push_back({"lemma-3.2", n, p.seed, 0, tol, worst,
                    "all four first-degree coefficients of the first correction vanish",
                    sym && worst <= tol, "(3.13)"});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// theorem-3.3
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_second_assembly(const CheckParams& p) {
  const double tol = detail::suite_tol(p, 1e-9);
  const auto seeds = detail::seed_run(p.seed);
  const TermCatalog& c = catalog();
  static const std::set<std::string> wanted = {"(4.12)", "(4.13)", "(4.17)", "(4.19)",
                                              "(4.81)", "(4.82)", "(4.83)"};
  std::vector<FormCheck> table;
  for (auto& f : form_checks(c))
    if (wanted.count(f.ref)) table.push_back(std::move(f));
  std::stable_sort(table.begin(), table.end(), [](const FormCheck& a, const FormCheck& b) {
    return detail::ref_rank(a.ref) < detail::ref_rank(b.ref);
  });

  std::vector<CheckRow> rows;
  std::string first_fail;
  for (const auto& f : table) {
    for (int n : p.dims) {
      RowOutcome o = evaluate_form(f, tol, {n}, seeds);
      if (!o.pass && first_fail.empty()) first_fail = o.ref;
      rows.push_back({"theorem-3.3", n, p.seed, 0, tol, o.residual, o.name, o.pass, o.ref});
    }
  }

  // Blocks of the assembled two-form with no counterpart on the target side.
  TwoForm diff = diagonal_two_form(c.f2) -
                 omega_times(curv_trace_scalar().scaled(detail::imag_pi(-2, 1, 0)));
  const std::pair<const Poly*, const char*> blocks[] = {
      {&diff.holo, "holomorphic-holomorphic block vanishes"},
      {&diff.anti, "antiholomorphic-antiholomorphic block vanishes"}};
  for (const auto& [blk, label] : blocks) {
    VanishReport v = vanish_report(*blk, {200, 201}, p.dims, seeds, false);
    bool ok = v.pass(tol);
    if (!ok && first_fail.empty()) first_fail = "(3.18)";
    rows.push_back({"theorem-3.3", 0, p.seed, 0, tol, v.residual, label, ok, "(3.18)"});
  }

  double worst = 0.0;
  bool all = true;
  for (const auto& r : rows) {
    worst = std::max(worst, r.residual);
    all = all && r.pass;
  }
  std::string expected =
      "second-order assembly equals the first expansion coefficient times the symplectic form";
  if (!all) expected += "; first divergence at " + first_fail;
  rows.push_back({"theorem-3.3", 0, p.seed, 0, tol, worst, expected, all, "(3.18)"});
  return rows;
}

// ---------------------------------------------------------------------------
// diagonal-consistency
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_origin_values(const CheckParams& p) {
  const double tol = detail::suite_tol(p, 1e-9);
  const auto seeds = detail::seed_run(p.seed);
  const TermCatalog& c = catalog();
  std::vector<CheckRow> rows;

  Poly first = origin_value(c.f1).canonical();
  rows.push_back({"diagonal-consistency", 0, 0, 0, tol, 0.0,
                  "first correction vanishes exactly on the diagonal at the base point",
                  first.empty(), "(3.15)"});

  Poly d = origin_value(c.f2) - b1_scalar();
  for (int n : p.dims) {
    VanishReport v = vanish_report(d, {}, {n}, seeds, true);
    rows.push_back({"diagonal-consistency", n, p.seed, 0, tol, v.residual,
                    "second correction at the base point equals the first expansion coefficient",
                    v.residual <= tol, "(4.84)"});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// oracle-equivalence
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_oracle_agreement(const CheckParams& p) {
  const double tol = detail::suite_tol(p, 1e-9);
  const TermCatalog& c = catalog();
  struct Entry {
    const char* name;
    const OperatorExpr* x;
    const Poly* k;
    const char* ref;
    bool row_block;  // conjugate-transposed pipeline: compare on its valid rows
    int bump2;       // extra cutoff needed at n = 2 to keep an interior margin
  };
  const std::vector<Entry> entries = {
      {"first-correction", &c.x_f1, &c.f1, "(3.15)", false, 0},
      {"iterated-correction", &c.x_i1, &c.i1, "(4.1)", false, 0},
      {"second-order-group", &c.x_i2, &c.i2, "(4.1)", false, 0},
      {"iterated-correction-adjoint", &c.x_i3, &c.i3, "(4.1)", true, 0},
      {"second-order-group-adjoint", &c.x_i4, &c.i4, "(4.1)", true, 0},
      {"cross-product", &c.x_i5, &c.i5, "(4.1)", false, 0},
      {"back-projection", &c.x_i6, &c.i6, "(4.1)", false, 3},
      {"radial-curvature-seed", &c.x_i21, &c.i21, "(4.21)", false, 0},
      {"flux-hessian-seed", &c.x_i22, &c.i22, "(4.21)", false, 0},
      {"curvature-trace-seed", &c.x_i23, &c.i23, "(4.21)", false, 0},
      {"pure-second-derivative-seed", &c.x_i24, &c.i24, "(4.21)", false, 0},
      {"holomorphic-radial-seed", &c.x_i25, &c.i25, "(4.21)", false, 0},
      {"pairing-square-seed", &c.x_i26, &c.i26, "(4.21)", false, 0},
      {"barred-remainder", &c.x_i27, &c.i27, "(4.27)", false, 0},
  };
  std::vector<CheckRow> rows;
  for (int n : p.dims) {
    if (n > 2) continue;  // cost grows steeply and adds no new index patterns
    const int base = p.trunc > 0 ? p.trunc : default_cutoff(n);
    // Bases are built lazily per cutoff so deep compositions can use a larger
    // one without charging every entry for it.
    std::map<int, std::pair<FockBasis, FockOps>> spaces;
    auto space = [&](int D) -> std::pair<FockBasis, FockOps>& {
      auto it = spaces.find(D);
      if (it == spaces.end()) {
        FockBasis basis = FockBasis::make(n, D);
        FockOps ops = FockOps::make(basis);
        it = spaces.emplace(D, std::make_pair(std::move(basis), std::move(ops))).first;
      }
      return it->second;
    };
    NumericAssignment data = sample_admissible(n, p.seed);
    for (const auto& e : entries) {
      const int D = base + (n == 2 ? e.bump2 : 0);
      auto& [basis, ops] = space(D);
      FockMatrix A = matrix_of(*e.x, basis, ops, data);
      FockMatrix B = matrix_of(*e.k, basis, ops, data);
      InteriorComparison cmp =
          e.row_block ? compare_block(A, B, basis, A.good + A.raise, B.good, 1)
                      : compare_interior(A, B, basis, 2);
      double r = cmp.relative();
      rows.push_back({"oracle-equivalence", n, p.seed, D, tol, r,
                      std::string(e.name) + ": pipeline matrix equals reduced-kernel matrix",
                      r <= tol, e.ref});
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// structural-properties
// ---------------------------------------------------------------------------
inline std::vector<CheckRow> check_structural(const CheckParams& p) {
  const double tol = detail::suite_tol(p, 1e-9);
  std::mt19937 rng(static_cast<uint32_t>(p.seed * 2654435761u + 12345u));
  const int n = 2;
  std::vector<CheckRow> rows;
  auto push = [&](const std::string& what, int cases, int fails, double worst,
                  const char* ref = "") {
    rows.push_back({"structural-properties", n, p.seed, 0, tol, worst,
                    what + " [" + std::to_string(cases) + " cases]", fails == 0, ref});
  };

  {
    int fails = 0;
    for (int k = 0; k < 100; ++k) {
      Poly K = detail::random_ground_kernel(rng, 3, 4, n);
      if (!(adjoint(adjoint(K)) - expand(K)).canonical().empty()) ++fails;
    }
    push("adjoint is an involution", 100, fails, static_cast<double>(fails), "(3.16)");
  }
  {
    int fails = 0;
    for (int k = 0; k < 40; ++k) {
      Poly K1 = detail::random_ground_kernel(rng, 2, 4, n);
      Poly K2 = detail::random_ground_kernel(rng, 2, 4, n);
      Poly lhs = adjoint(compose(K1, K2));
      Poly rhs = compose(adjoint(K2), adjoint(K1));
      if (!(lhs - rhs).canonical().empty()) ++fails;
    }
    push("adjoint reverses composition", 40, fails, static_cast<double>(fails), "(3.16)");
  }
  {
    int fails = 0;
    for (int k = 0; k < 100; ++k) {
      Poly K = detail::random_ground_kernel(rng, 3, 4, n);
      Poly once = project_ker(K);
      if (!(project_ker(once) - once).canonical().empty()) ++fails;
    }
    push("ground projection is idempotent", 100, fails, static_cast<double>(fails), "(1.9)");
  }
  {
    int fails = 0;
    for (int k = 0; k < 25; ++k) {
      Poly K1 = detail::random_ground_kernel(rng, 2, 3, n);
      Poly K2 = detail::random_ground_kernel(rng, 2, 3, n);
      Poly K3 = detail::random_ground_kernel(rng, 2, 3, n);
      Poly lhs = compose(compose(K1, K2), K3);
      Poly rhs = compose(K1, compose(K2, K3));
      if (!(lhs - rhs).canonical().empty()) ++fails;
    }
    push("composition is associative", 25, fails, static_cast<double>(fails), "");
  }
  {
    int fails = 0;
    for (int k = 0; k < 100; ++k) {
      Poly K = detail::random_ground_kernel(rng, 3, 4, n);
      Poly nf = fock_normal_form(K);
      if (!(fock_normal_form(nf) - nf).canonical().empty()) ++fails;
      if (!(expand(nf) - expand(K)).canonical().empty()) ++fails;
    }
    push("normal form is confluent and invertible by expansion", 100, fails,
         static_cast<double>(fails), "");
  }
  const TermCatalog& c = catalog();
  {
    std::set<int> p1 = parities(c.f1), p2 = parities(c.f2);
    bool ok = p1 == std::set<int>{1} && p2 == std::set<int>{0};
    push("first correction is odd, second correction is even", 2, ok ? 0 : 1,
         ok ? 0.0 : 1.0, "");
  }
  {
    // The scalar potential must not reach any reported output.
    NumericAssignment A = sample_admissible(n, p.seed);
    NumericAssignment A2 = A;
    A2.phi += 1.25;
    double worst = std::abs(numeric_scalar(origin_value(c.f2), A) -
                            numeric_scalar(origin_value(c.f2), A2));
    TwoForm form = diagonal_two_form(c.f2);
    for (const Poly* blk : {&form.mixed, &form.holo, &form.anti})
      for (int r = 1; r <= n; ++r)
        for (int q = 1; q <= n; ++q) {
          LabelEnv env{{200, r}, {201, q}};
          worst = std::max(worst, relative_difference(numeric_expand(*blk, A, env),
                                                      numeric_expand(*blk, A2, env)));
        }
    push("outputs are independent of the scalar potential", 1 + 3 * n * n, worst <= tol ? 0 : 1,
         worst, "");
  }
  {
    // Unconstrained second-derivative data must cancel from every output.
    int fails = 0;
    double worst = 0.0;
    for (uint64_t s : {p.seed, p.seed + 1, p.seed + 2}) {
      NumericAssignment A = sample_admissible(n, s);
      NumericAssignment B = sample_admissible(n, s + 7919);
      NumericAssignment A2 = A;
      A2.nnj = B.nnj;
      double d = std::abs(numeric_scalar(origin_value(c.f2), A) -
                          numeric_scalar(origin_value(c.f2), A2));
      TwoForm form = diagonal_two_form(c.f2);
      for (const Poly* blk : {&form.mixed, &form.holo, &form.anti})
        for (int r = 1; r <= n; ++r)
          for (int q = 1; q <= n; ++q) {
            LabelEnv env{{200, r}, {201, q}};
            d = std::max(d, relative_difference(numeric_expand(*blk, A, env),
                                                numeric_expand(*blk, A2, env)));
          }
      worst = std::max(worst, d);
      if (d > tol) ++fails;
    }
    push("outputs are independent of pure second-derivative data", 3, fails, worst, "");
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Registry and report assembly.
// ---------------------------------------------------------------------------
using CheckFn = std::vector<CheckRow> (*)(const CheckParams&);

inline const std::vector<std::pair<std::string, CheckFn>>& check_registry() {
  static const std::vector<std::pair<std::string, CheckFn>> reg = {
      {"diagonal-consistency", &check_origin_values},
      {"lemma-3.2", &check_ground_gradient},
      {"oracle-equivalence", &check_oracle_agreement},
      {"reduction-regression", &check_reductions},
      {"spectrum", &check_spectrum},
      {"structural-properties", &check_structural},
      {"theorem-3.3", &check_second_assembly},
  };
  return reg;
}

inline std::vector<CheckRow> run_checks(const std::vector<std::string>& names,
                                        const CheckParams& params) {
  std::vector<CheckRow> rows;
  for (const auto& name : names) {
    const CheckFn* fn = nullptr;
    for (const auto& [rn, rf] : check_registry())
      if (rn == name) fn = &rf;
    if (!fn) throw std::invalid_argument("unknown check '" + name + "'");
    std::vector<CheckRow> part = (*fn)(params);
    rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                std::make_move_iterator(part.end()));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const CheckRow& a, const CheckRow& b) { return a.check < b.check; });
  return rows;
}

inline std::vector<std::string> all_check_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : check_registry()) out.push_back(name);
  return out;
}

inline bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

inline nlohmann::ordered_json report_json(const std::vector<CheckRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["params"] = {{"n", r.n}, {"seed", r.seed}, {"D", r.D}, {"tol", r.tol}};
    j["residual"] = r.residual;
    j["expected"] = r.expected;
    j["status"] = r.pass ? "pass" : "fail";
    j["paper_ref"] = r.ref;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline std::string report_text(const std::vector<CheckRow>& rows) {
  std::ostringstream out;
  int fails = 0;
  for (const auto& r : rows) {
    if (!r.pass) ++fails;
    out << (r.pass ? "[pass] " : "[FAIL] ") << std::left << std::setw(22) << r.check;
    out << " n=" << r.n << " seed=" << r.seed << " D=" << r.D;
    out << std::scientific << std::setprecision(3) << " tol=" << r.tol
        << " residual=" << r.residual << std::defaultfloat;
    out << "  " << r.expected;
    if (!r.ref.empty()) out << "  [" << r.ref << "]";
    out << "\n";
  }
  out << rows.size() << " rows, " << fails << " failing\n";
  return out.str();
}

}  // namespace bkc
