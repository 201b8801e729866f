#pragma once
// Expression tree for operator pipelines acting on reproducing kernels.  A
// node either denotes the ground-state kernel, a literal kernel, or an
// operation applied to child expressions.  The symbolic evaluator lowers a
// tree to a kernel polynomial using the calculus in kernel.hpp; the numeric
// oracle walks the same tree with matrices instead.
#include <memory>
#include <utility>
#include <vector>

#include "bkc/kernel.hpp"

namespace bkc {

enum class OpKind {
  LeafP,        // the ground-state kernel itself
  LeafKernel,   // a literal kernel polynomial
  ApplyB,       // lowering-side generator b_j
  ApplyBplus,   // raising-side generator b_j^+
  MultiplyVar,  // multiplication by a coordinate variable
  ScaleScalar,  // multiplication by an exact scalar
  ScalePoly,    // multiplication by a variable/tensor polynomial
  Project,      // orthogonal projection onto the ground space
  Offdiag,      // complement of the ground-space projection
  InvOffdiag,   // k-th power of the inverse on the off-ground space
  Adjoint,      // kernel adjoint (swap arguments, conjugate)
  Compose,      // operator composition, left to right
  Sum,          // pointwise sum
};

struct OperatorExpr {
  OpKind kind = OpKind::LeafP;
  Idx index = Idx::fixed(1);    // ApplyB / ApplyBplus / MultiplyVar
  VarKind vkind = VarKind::Z;   // MultiplyVar
  int power = 1;                // InvOffdiag
  ExactScalar scalar;           // ScaleScalar
  Poly payload;                 // LeafKernel / ScalePoly
  std::vector<OperatorExpr> children;
};

inline OperatorExpr op_p() { return OperatorExpr{}; }

inline OperatorExpr op_kernel(Poly k) {
  OperatorExpr e;
  e.kind = OpKind::LeafKernel;
  e.payload = std::move(k);
  return e;
}

inline OperatorExpr op_unary(OpKind kind, OperatorExpr child) {
  OperatorExpr e;
  e.kind = kind;
  e.children.push_back(std::move(child));
  return e;
}

inline OperatorExpr op_b(Idx j, OperatorExpr child) {
  OperatorExpr e = op_unary(OpKind::ApplyB, std::move(child));
  e.index = j;
  return e;
}

inline OperatorExpr op_bplus(Idx j, OperatorExpr child) {
  OperatorExpr e = op_unary(OpKind::ApplyBplus, std::move(child));
  e.index = j;
  return e;
}

inline OperatorExpr op_mul(VarKind kind, Idx j, OperatorExpr child) {
  OperatorExpr e = op_unary(OpKind::MultiplyVar, std::move(child));
  e.vkind = kind;
  e.index = j;
  return e;
}

inline OperatorExpr op_scale(ExactScalar c, OperatorExpr child) {
  OperatorExpr e = op_unary(OpKind::ScaleScalar, std::move(child));
  e.scalar = std::move(c);
  return e;
}

inline OperatorExpr op_scale_poly(Poly p, OperatorExpr child) {
  OperatorExpr e = op_unary(OpKind::ScalePoly, std::move(child));
  e.payload = std::move(p);
  return e;
}

inline OperatorExpr op_project(OperatorExpr child) { return op_unary(OpKind::Project, std::move(child)); }
inline OperatorExpr op_offdiag(OperatorExpr child) { return op_unary(OpKind::Offdiag, std::move(child)); }
inline OperatorExpr op_adjoint(OperatorExpr child) { return op_unary(OpKind::Adjoint, std::move(child)); }

inline OperatorExpr op_inv(int k, OperatorExpr child) {
  OperatorExpr e = op_unary(OpKind::InvOffdiag, std::move(child));
  e.power = k;
  return e;
}

inline OperatorExpr op_compose(std::vector<OperatorExpr> children) {
  OperatorExpr e;
  e.kind = OpKind::Compose;
  e.children = std::move(children);
  return e;
}

inline OperatorExpr op_compose(OperatorExpr a, OperatorExpr b) {
  std::vector<OperatorExpr> cs;
  cs.push_back(std::move(a));
  cs.push_back(std::move(b));
  return op_compose(std::move(cs));
}

inline OperatorExpr op_sum(std::vector<OperatorExpr> children) {
  OperatorExpr e;
  e.kind = OpKind::Sum;
  e.children = std::move(children);
  return e;
}

// Lower an expression tree to a kernel polynomial.  `pinned` lists free index
// labels that must survive canonicalization unchanged.
inline Poly eval_symbolic(const OperatorExpr& e, const PinnedSet& pinned = {}) {
  auto child = [&](size_t i) { return eval_symbolic(e.children.at(i), pinned); };
  switch (e.kind) {
    case OpKind::LeafP:
      return Poly::one();
    case OpKind::LeafKernel:
      return e.payload;
    case OpKind::ApplyB:
      return apply_b(e.index, child(0), pinned);
    case OpKind::ApplyBplus:
      return apply_bplus(e.index, child(0), pinned);
    case OpKind::MultiplyVar:
      return mult_var(e.vkind, e.index, child(0), pinned);
    case OpKind::ScaleScalar:
      return child(0).scaled(e.scalar);
    case OpKind::ScalePoly: {
      Poly k = expand(child(0), pinned);
      return poly_product(e.payload, k, pinned).canonical(pinned);
    }
    case OpKind::Project:
      return project_ker(child(0), pinned);
    case OpKind::Offdiag: {
      Poly k = child(0);
      return (k - project_ker(k, pinned)).canonical(pinned);
    }
    case OpKind::InvOffdiag:
      return apply_inv_offdiag(child(0), e.power, pinned);
    case OpKind::Adjoint:
      return adjoint(child(0), pinned);
    case OpKind::Compose: {
      if (e.children.empty()) throw std::runtime_error("compose needs at least one operand");
      Poly acc = child(0);
      for (size_t i = 1; i < e.children.size(); ++i)
        acc = compose(acc, child(i), pinned);
      return acc;
    }
    case OpKind::Sum: {
      Poly acc;
      for (size_t i = 0; i < e.children.size(); ++i) acc = acc + child(i);
      return acc.canonical(pinned);
    }
  }
  throw std::logic_error("unhandled expression node");
}

// Free formal labels referenced anywhere in the tree (generator/variable
// indices and payload polynomials); useful for pinning during evaluation.
inline void collect_labels(const OperatorExpr& e, std::set<int16_t>& out) {
  switch (e.kind) {
    case OpKind::ApplyB:
    case OpKind::ApplyBplus:
    case OpKind::MultiplyVar:
      if (!e.index.concrete) out.insert(e.index.v);
      break;
    case OpKind::LeafKernel:
    case OpKind::ScalePoly:
      for (const auto& t : e.payload.terms()) {
        std::map<int16_t, int> counts;
        detail::count_labels(t, counts);
        for (const auto& [lbl, cnt] : counts)
          if (cnt == 1) out.insert(lbl);
      }
      break;
    default:
      break;
  }
  for (const auto& c : e.children) collect_labels(c, out);
}

}  // namespace bkc
