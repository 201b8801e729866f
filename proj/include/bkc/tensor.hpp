#pragma once
// Indexed polynomial algebra shared by tensor expressions and integral-kernel
// polynomials.  A Term is an exact scalar times a product of tensor symbols,
// Kronecker deltas and coordinate variables; repeated formal index labels are
// implicitly summed (Einstein convention).  Canonicalization contracts deltas,
// renames summed labels deterministically and minimizes over each symbol's
// sign-symmetry group, so equal expressions get identical representations.
#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkc/exact_scalar.hpp"

namespace bkc {

// ---------------------------------------------------------------------------
// Indices: either a fixed concrete coordinate (1-based) or a formal label.
// ---------------------------------------------------------------------------
struct Idx {
  int16_t v = 0;
  bool concrete = false;
  static Idx label(int id) { return Idx{static_cast<int16_t>(id), false}; }
  static Idx fixed(int val) { return Idx{static_cast<int16_t>(val), true}; }
  auto operator<=>(const Idx&) const = default;
};

// ---------------------------------------------------------------------------
// Tensor symbol families.
//   NablaJ[d,a,p]   = <(nabla_{e_d} J) e_a, e_p>, slots all plain or all barred;
//                     antisymmetric in slots (1,2) [0-based].
//   Curv[a,b,c,d]   = <R(e_a,e_b)e_c, e_d>, any bar pattern; antisymmetric in
//                     (0,1) and in (2,3); symmetric under pair swap.
//   NNJ[d1,d2,a,p]  = <(nabla^2 J)_{(e_d1,e_d2)} e_a, e_p>, slots all barred or
//                     all plain; no slot symmetry imposed.
//   Phi             = free real scalar symbol, no slots.
// Here e_j means dz_j when the slot is plain and dz-bar_j when barred.
// ---------------------------------------------------------------------------
enum class SymKind : uint8_t { NablaJ = 0, Curv = 1, NNJ = 2, Phi = 3 };

struct Sym {
  SymKind kind = SymKind::Phi;
  uint8_t nslots = 0;
  uint8_t bars = 0;  // bit s set => slot s is barred
  std::array<Idx, 4> idx{};
  auto operator<=>(const Sym&) const = default;
};

inline Sym nabla_j(Idx d, Idx a, Idx p, bool barred) {
  return Sym{SymKind::NablaJ, 3, static_cast<uint8_t>(barred ? 0b111 : 0), {d, a, p, Idx{}}};
}
inline Sym curv(Idx a, bool ab, Idx b, bool bb, Idx c, bool cb, Idx d, bool db) {
  uint8_t bars = static_cast<uint8_t>((ab ? 1 : 0) | (bb ? 2 : 0) | (cb ? 4 : 0) | (db ? 8 : 0));
  return Sym{SymKind::Curv, 4, bars, {a, b, c, d}};
}
inline Sym nnj(Idx d1, Idx d2, Idx a, Idx p, bool barred) {
  return Sym{SymKind::NNJ, 4, static_cast<uint8_t>(barred ? 0b1111 : 0), {d1, d2, a, p}};
}
inline Sym phi_sym() { return Sym{SymKind::Phi, 0, 0, {}}; }

// ---------------------------------------------------------------------------
// Coordinate variables of a kernel: z, z-bar, z', z-bar' with an index, plus
// the formal factor B marking a creation operator b applied outside the rest
// of the term (used by Fock normal forms; B factors commute pairwise).
// ---------------------------------------------------------------------------
enum class VarKind : uint8_t { Z = 0, Zb = 1, Zp = 2, Zbp = 3, B = 4 };

inline bool var_primed(VarKind k) { return k == VarKind::Zp || k == VarKind::Zbp; }
inline VarKind var_conj(VarKind k) {
  switch (k) {
    case VarKind::Z: return VarKind::Zb;
    case VarKind::Zb: return VarKind::Z;
    case VarKind::Zp: return VarKind::Zbp;
    case VarKind::Zbp: return VarKind::Zp;
    default: throw std::logic_error("conjugation of an operator factor");
  }
}
// Kernel adjoint K*(x, y) = conj(K(y, x)): swap primed/unprimed then conjugate.
inline VarKind var_adjoint(VarKind k) {
  switch (k) {
    case VarKind::Z: return VarKind::Zbp;
    case VarKind::Zb: return VarKind::Zp;
    case VarKind::Zp: return VarKind::Zb;
    case VarKind::Zbp: return VarKind::Z;
    default: throw std::logic_error("adjoint of an operator factor");
  }
}

struct Var {
  VarKind kind = VarKind::Z;
  Idx idx{};
  auto operator<=>(const Var&) const = default;
};

struct Delta {
  Idx a{}, b{};
  Delta() = default;
  Delta(Idx x, Idx y) : a(x), b(y) {
    if (std::tie(b.concrete, b.v) < std::tie(a.concrete, a.v)) std::swap(a, b);
  }
  auto operator<=>(const Delta&) const = default;
};

// ---------------------------------------------------------------------------
// Term and Poly.
// ---------------------------------------------------------------------------
struct Term {
  ExactScalar coeff;
  std::vector<Sym> syms;
  std::vector<Delta> deltas;
  std::vector<Var> vars;

  int var_degree() const { return static_cast<int>(vars.size()); }
  bool operator==(const Term& o) const {
    return coeff == o.coeff && syms == o.syms && deltas == o.deltas && vars == o.vars;
  }
};

using PinnedSet = std::set<int16_t>;

namespace detail {

inline void count_labels(const Term& t, std::map<int16_t, int>& cnt) {
  cnt.clear();
  for (const auto& s : t.syms)
    for (int k = 0; k < s.nslots; ++k)
      if (!s.idx[k].concrete) cnt[s.idx[k].v]++;
  for (const auto& d : t.deltas) {
    if (!d.a.concrete) cnt[d.a.v]++;
    if (!d.b.concrete) cnt[d.b.v]++;
  }
  for (const auto& v : t.vars)
    if (!v.idx.concrete) cnt[v.idx.v]++;
}

inline void rename_label(Term& t, int16_t from, Idx to) {
  for (auto& s : t.syms)
    for (int k = 0; k < s.nslots; ++k)
      if (!s.idx[k].concrete && s.idx[k].v == from) s.idx[k] = to;
  for (auto& d : t.deltas) {
    Idx a = d.a, b = d.b;
    if (!a.concrete && a.v == from) a = to;
    if (!b.concrete && b.v == from) b = to;
    d = Delta(a, b);
  }
  for (auto& v : t.vars)
    if (!v.idx.concrete && v.idx.v == from) v.idx = to;
}

// Contract deltas.  Returns false if the term vanishes (mismatched concrete
// indices).  Deltas between two non-summed endpoints are kept as factors.
inline bool contract_deltas(Term& t, const PinnedSet& pinned) {
  bool changed = true;
  std::map<int16_t, int> cnt;
  while (changed) {
    changed = false;
    count_labels(t, cnt);
    for (size_t di = 0; di < t.deltas.size(); ++di) {
      Delta d = t.deltas[di];
      if (d.a == d.b) {
        t.deltas.erase(t.deltas.begin() + di);
        if (!d.a.concrete && !pinned.count(d.a.v) && cnt[d.a.v] == 2) {
          t.coeff *= ExactScalar::n_pow(1);  // full trace over the dimension
        }
        changed = true;
        break;
      }
      if (d.a.concrete && d.b.concrete) {
        if (d.a.v != d.b.v) return false;
        t.deltas.erase(t.deltas.begin() + di);
        changed = true;
        break;
      }
      auto try_subst = [&](Idx from, Idx to) -> bool {
        if (from.concrete || pinned.count(from.v)) return false;
        if (cnt[from.v] != 2) return false;  // appears once outside this delta
        t.deltas.erase(t.deltas.begin() + di);
        rename_label(t, from.v, to);
        return true;
      };
      if (try_subst(d.a, d.b) || try_subst(d.b, d.a)) {
        changed = true;
        break;
      }
    }
  }
  return true;
}

// One candidate layout of a term's factors used during canonical search.
struct Layout {
  std::vector<Sym> syms;
  std::vector<Delta> deltas;
  std::vector<Var> vars;
  int sign = 1;
};

// Fills variants with (permuted symbol, sign) pairs for the symbol's
// sign-symmetry group.
inline void sym_variants(const Sym& s, std::vector<std::pair<Sym, int>>& out) {
  out.clear();
  switch (s.kind) {
    case SymKind::NablaJ: {
      out.emplace_back(s, 1);
      Sym w = s;
      std::swap(w.idx[1], w.idx[2]);
      out.emplace_back(w, -1);
      break;
    }
    case SymKind::Curv: {
      for (int swap_front = 0; swap_front < 2; ++swap_front)
        for (int swap_back = 0; swap_back < 2; ++swap_back)
          for (int pair_swap = 0; pair_swap < 2; ++pair_swap) {
            Sym w = s;
            auto bar = [&](int k) { return (w.bars >> k) & 1; };
            std::array<Idx, 4> ix = w.idx;
            std::array<int, 4> bs = {bar(0), bar(1), bar(2), bar(3)};
            if (swap_front) { std::swap(ix[0], ix[1]); std::swap(bs[0], bs[1]); }
            if (swap_back) { std::swap(ix[2], ix[3]); std::swap(bs[2], bs[3]); }
            if (pair_swap) {
              std::swap(ix[0], ix[2]); std::swap(ix[1], ix[3]);
              std::swap(bs[0], bs[2]); std::swap(bs[1], bs[3]);
            }
            w.idx = ix;
            w.bars = static_cast<uint8_t>(bs[0] | (bs[1] << 1) | (bs[2] << 2) | (bs[3] << 3));
            out.emplace_back(w, (swap_front ^ swap_back) ? -1 : 1);
          }
      break;
    }
    default:
      out.emplace_back(s, 1);
  }
}

using Key = std::vector<int32_t>;

inline void push_idx(Key& key, Idx ix, const std::map<int16_t, int>& bound_rank,
                     std::map<int16_t, int>* rename, int* next_id) {
  if (ix.concrete) {
    key.push_back(0);
    key.push_back(ix.v);
  } else if (!bound_rank.count(ix.v)) {
    key.push_back(1);  // free / open label: identity is significant
    key.push_back(ix.v);
  } else if (rename) {
    auto it = rename->find(ix.v);
    if (it == rename->end()) it = rename->emplace(ix.v, (*next_id)++).first;
    key.push_back(2);
    key.push_back(it->second);
  } else {
    key.push_back(2);
    key.push_back(-1);  // skeleton pass: summed labels are anonymous
  }
}

inline Key layout_key(const Layout& lay, const std::map<int16_t, int>& bound_rank,
                      bool skeleton) {
  Key key;
  std::map<int16_t, int> rename;
  int next_id = 0;
  auto* rn = skeleton ? nullptr : &rename;
  for (const auto& s : lay.syms) {
    key.push_back(10 + static_cast<int>(s.kind));
    key.push_back(s.bars);
    for (int k = 0; k < s.nslots; ++k) push_idx(key, s.idx[k], bound_rank, rn, &next_id);
  }
  for (const auto& d : lay.deltas) {
    key.push_back(40);
    push_idx(key, d.a, bound_rank, rn, &next_id);
    push_idx(key, d.b, bound_rank, rn, &next_id);
  }
  for (const auto& v : lay.vars) {
    key.push_back(50 + static_cast<int>(v.kind));
    push_idx(key, v.idx, bound_rank, rn, &next_id);
  }
  return key;
}

inline Key factor_skeleton(const Sym& s, const std::map<int16_t, int>& br) {
  Layout l;
  l.syms.push_back(s);
  return layout_key(l, br, true);
}
inline Key factor_skeleton(const Var& v, const std::map<int16_t, int>& br) {
  Layout l;
  l.vars.push_back(v);
  return layout_key(l, br, true);
}

// Sorts symbols (resp. vars) by skeleton and enumerates permutations of tied
// runs that involve summed labels, applying fn to every arrangement.
template <typename F, typename T>
inline void for_each_tied_order(std::vector<T>& items, const std::map<int16_t, int>& br, F&& fn) {
  std::vector<std::pair<Key, T>> keyed;
  keyed.reserve(items.size());
  for (const auto& it : items) keyed.emplace_back(factor_skeleton(it, br), it);
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  // Identify tied runs.
  std::vector<std::pair<size_t, size_t>> runs;
  for (size_t i = 0; i < keyed.size();) {
    size_t j = i + 1;
    while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
    if (j - i > 1) runs.emplace_back(i, j);
    i = j;
  }
  std::vector<T> base;
  for (auto& kv : keyed) base.push_back(kv.second);
  // Odometer over permutations of each run (runs are tiny in practice).
  std::vector<std::vector<std::vector<size_t>>> run_perms;
  for (auto [lo, hi] : runs) {
    std::vector<size_t> ids(hi - lo);
    std::iota(ids.begin(), ids.end(), lo);
    std::vector<std::vector<size_t>> perms;
    std::sort(ids.begin(), ids.end());
    do { perms.push_back(ids); } while (std::next_permutation(ids.begin(), ids.end()));
    run_perms.push_back(std::move(perms));
  }
  std::vector<size_t> pick(runs.size(), 0);
  while (true) {
    std::vector<T> arranged = base;
    for (size_t r = 0; r < runs.size(); ++r) {
      auto [lo, hi] = runs[r];
      for (size_t k = lo; k < hi; ++k) arranged[k] = base[run_perms[r][pick[r]][k - lo]];
    }
    fn(arranged);
    size_t r = 0;
    for (; r < runs.size(); ++r) {
      if (++pick[r] < run_perms[r].size()) break;
      pick[r] = 0;
    }
    if (r == runs.size()) break;
  }
}

}  // namespace detail

// Canonicalizes a term in place.  Returns false if the term is identically
// zero (concrete delta mismatch or self-cancellation through an odd symmetry).
inline bool canonicalize_term(Term& t, const PinnedSet& pinned = {}) {
  using namespace detail;
  if (t.coeff.is_zero()) return false;
  if (!contract_deltas(t, pinned)) return false;

  std::map<int16_t, int> cnt;
  count_labels(t, cnt);
  std::map<int16_t, int> bound_rank;
  for (const auto& [lab, c] : cnt) {
    if (pinned.count(lab)) continue;
    if (c == 2) bound_rank[lab] = 1;
    if (c > 2) throw std::logic_error("index label repeated more than twice in a term");
  }

  std::vector<std::vector<std::pair<Sym, int>>> variants(t.syms.size());
  size_t total = 1;
  for (size_t s = 0; s < t.syms.size(); ++s) {
    sym_variants(t.syms[s], variants[s]);
    total *= variants[s].size();
    if (total > 65536) throw std::logic_error("sign-symmetry orbit too large");
  }

  bool have_best = false, cancels = false;
  Key best_key;
  Layout best_layout;
  std::vector<size_t> pick(t.syms.size(), 0);
  while (true) {
    Layout lay;
    lay.deltas = t.deltas;
    lay.sign = 1;
    for (size_t s = 0; s < t.syms.size(); ++s) {
      lay.syms.push_back(variants[s][pick[s]].first);
      lay.sign *= variants[s][pick[s]].second;
    }
    lay.vars = t.vars;
    std::sort(lay.deltas.begin(), lay.deltas.end());
    for_each_tied_order(lay.syms, bound_rank, [&](const std::vector<Sym>& syms_arranged) {
      Layout inner = lay;
      inner.syms = syms_arranged;
      for_each_tied_order(inner.vars, bound_rank, [&](const std::vector<Var>& vars_arranged) {
        Layout cand = inner;
        cand.vars = vars_arranged;
        Key key = layout_key(cand, bound_rank, false);
        if (!have_best || key < best_key) {
          have_best = true;
          best_key = key;
          best_layout = cand;
          cancels = false;
        } else if (key == best_key && cand.sign != best_layout.sign) {
          cancels = true;
        }
      });
    });
    size_t s = 0;
    for (; s < t.syms.size(); ++s) {
      if (++pick[s] < variants[s].size()) break;
      pick[s] = 0;
    }
    if (s == t.syms.size()) break;
  }
  if (cancels) return false;
  if (best_layout.sign < 0) t.coeff = -t.coeff;
  // Apply the canonical renaming of summed labels chosen by the best layout.
  // Fresh ids must avoid labels that stay fixed (pinned or singly occurring).
  {
    std::set<int> reserved(pinned.begin(), pinned.end());
    for (const auto& [lab, c] : cnt)
      if (!bound_rank.count(lab)) reserved.insert(lab);
    std::map<int16_t, int> rename;
    int next_id = 0;
    auto fresh = [&]() {
      while (reserved.count(next_id)) ++next_id;
      return next_id++;
    };
    auto visit = [&](Idx ix) {
      if (!ix.concrete && bound_rank.count(ix.v) && !rename.count(ix.v)) rename[ix.v] = fresh();
    };
    for (const auto& s : best_layout.syms)
      for (int k = 0; k < s.nslots; ++k) visit(s.idx[k]);
    for (const auto& d : best_layout.deltas) { visit(d.a); visit(d.b); }
    for (const auto& v : best_layout.vars) visit(v.idx);
    auto apply = [&](Idx& ix) {
      if (!ix.concrete && rename.count(ix.v)) ix = Idx::label(rename[ix.v]);
    };
    for (auto& s : best_layout.syms)
      for (int k = 0; k < s.nslots; ++k) apply(s.idx[k]);
    for (auto& d : best_layout.deltas) { apply(d.a); apply(d.b); d = Delta(d.a, d.b); }
    for (auto& v : best_layout.vars) apply(v.idx);
  }
  t.syms = best_layout.syms;
  t.deltas = best_layout.deltas;
  t.vars = best_layout.vars;
  return true;
}

class Poly {
 public:
  Poly() = default;
  explicit Poly(Term t) { terms_.push_back(std::move(t)); }
  static Poly constant(ExactScalar c) {
    Term t;
    t.coeff = std::move(c);
    return Poly(std::move(t));
  }
  static Poly zero() { return Poly(); }
  static Poly one() { return constant(ExactScalar::one()); }

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(Term t) { terms_.push_back(std::move(t)); }
  void append(const Poly& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r.append(o);
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly scaled(const ExactScalar& c) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  Poly conjugated() const {
    Poly r = *this;
    for (auto& t : r.terms_) {
      t.coeff = t.coeff.conj();
      for (auto& s : t.syms) s.bars = static_cast<uint8_t>(s.bars ^ ((1u << s.nslots) - 1));
      for (auto& v : t.vars) v.kind = var_conj(v.kind);
    }
    return r;
  }

  int16_t max_label() const {
    int16_t m = -1;
    for (const auto& t : terms_) {
      auto upd = [&](Idx ix) { if (!ix.concrete && ix.v > m) m = ix.v; };
      for (const auto& s : t.syms)
        for (int k = 0; k < s.nslots; ++k) upd(s.idx[k]);
      for (const auto& d : t.deltas) { upd(d.a); upd(d.b); }
      for (const auto& v : t.vars) upd(v.idx);
    }
    return m;
  }

  // Canonicalize all terms and merge structurally equal ones.
  Poly canonical(const PinnedSet& pinned = {}) const {
    std::map<detail::Key, std::pair<Term, ExactScalar>> merged;
    std::map<int16_t, int> cnt;
    for (Term t : terms_) {
      if (!canonicalize_term(t, pinned)) continue;
      std::map<int16_t, int> bound_rank;
      detail::count_labels(t, cnt);
      for (const auto& [lab, c] : cnt)
        if (!pinned.count(lab) && c == 2) bound_rank[lab] = 1;
      detail::Layout lay{t.syms, t.deltas, t.vars, 1};
      detail::Key key = detail::layout_key(lay, bound_rank, false);
      auto it = merged.find(key);
      if (it == merged.end()) {
        ExactScalar c = t.coeff;
        merged.emplace(std::move(key), std::make_pair(std::move(t), std::move(c)));
      } else {
        it->second.second += t.coeff;
      }
    }
    Poly out;
    for (auto& [key, tc] : merged) {
      if (tc.second.is_zero()) continue;
      Term t = tc.first;
      t.coeff = tc.second;
      out.terms_.push_back(std::move(t));
    }
    return out;
  }

  bool is_zero_exact(const PinnedSet& pinned = {}) const { return canonical(pinned).empty(); }

 private:
  std::vector<Term> terms_;
};

// Relabels every summed label of `t` by adding `offset` (used to keep operand
// label spaces disjoint before taking products).
inline Term shift_bound_labels(const Term& t, int offset, const PinnedSet& pinned) {
  std::map<int16_t, int> cnt;
  detail::count_labels(t, cnt);
  Term r = t;
  for (const auto& [lab, c] : cnt)
    if (c == 2 && !pinned.count(lab))
      detail::rename_label(r, lab, Idx::label(lab + offset));
  return r;
}

inline Term term_product(const Term& a, const Term& b, const PinnedSet& pinned = {}) {
  int16_t m = 0;
  auto upd = [&](const Term& t) {
    std::map<int16_t, int> cnt;
    detail::count_labels(t, cnt);
    for (const auto& [lab, c] : cnt) m = std::max(m, static_cast<int16_t>(lab));
  };
  upd(a);
  upd(b);
  for (int16_t p : pinned) m = std::max(m, p);
  Term ra = shift_bound_labels(a, m + 1, pinned);
  Term rb = shift_bound_labels(b, 2 * (m + 1) + 16, pinned);
  Term out;
  out.coeff = ra.coeff * rb.coeff;
  out.syms = ra.syms;
  out.syms.insert(out.syms.end(), rb.syms.begin(), rb.syms.end());
  out.deltas = ra.deltas;
  out.deltas.insert(out.deltas.end(), rb.deltas.begin(), rb.deltas.end());
  out.vars = ra.vars;
  out.vars.insert(out.vars.end(), rb.vars.begin(), rb.vars.end());
  return out;
}

inline Poly poly_product(const Poly& a, const Poly& b, const PinnedSet& pinned = {}) {
  Poly out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) out.add_term(term_product(ta, tb, pinned));
  return out.canonical(pinned);
}

// ---------------------------------------------------------------------------
// Rendering (human-readable math text).
// ---------------------------------------------------------------------------
inline std::string idx_str(Idx ix) {
  if (ix.concrete) return std::to_string(ix.v);
  static const char* names = "abcdefghijklmnopqrstuvwxyz";
  int id = ix.v;
  std::string s;
  s += names[id % 26];
  if (id >= 26) s += std::to_string(id / 26);
  return s;
}

inline std::string sym_str(const Sym& s) {
  auto slot = [&](int k) {
    std::string t = idx_str(s.idx[k]);
    if ((s.bars >> k) & 1) t += "~";
    return t;
  };
  std::string name;
  switch (s.kind) {
    case SymKind::NablaJ: name = "DJ"; break;
    case SymKind::Curv: name = "R"; break;
    case SymKind::NNJ: name = "DDJ"; break;
    case SymKind::Phi: return "Phi";
  }
  name += "[";
  for (int k = 0; k < s.nslots; ++k) {
    if (k) name += ",";
    name += slot(k);
  }
  name += "]";
  return name;
}

inline std::string var_str(const Var& v) {
  static const char* names[5] = {"z", "zb", "zp", "zbp", "b"};
  return std::string(names[static_cast<int>(v.kind)]) + "[" + idx_str(v.idx) + "]";
}

inline std::string term_str(const Term& t) {
  std::string s = t.coeff.str();
  for (const auto& sym : t.syms) s += "·" + sym_str(sym);
  for (const auto& d : t.deltas) s += "·d[" + idx_str(d.a) + "," + idx_str(d.b) + "]";
  for (const auto& v : t.vars) s += "·" + var_str(v);
  return s;
}

inline std::string poly_str(const Poly& p, const std::string& tail = "") {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < p.terms().size(); ++i) {
    if (i) s += "  +  ";
    s += term_str(p.terms()[i]);
    if (!tail.empty()) s += "·" + tail;
  }
  return s;
}

}  // namespace bkc
