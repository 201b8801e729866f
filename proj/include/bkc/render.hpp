#pragma once
// Parseable text form for indexed polynomials.  Each term renders as
//   {scalar}·FACTOR·FACTOR·...
// with terms joined by " + ".  The scalar keeps its own textual syntax inside
// braces; factors are tensor symbols (DJ[a,b~,...], R[...], DDJ[...], Phi),
// deltas d[i,j] and variables z[i], zb[i], zp[i], zbp[i], b[i].  Formal labels
// render as letters (with a numeric suffix beyond 'z'), concrete indices as
// plain integers.
#include <cctype>
#include <sstream>

#include "bkc/tensor.hpp"

namespace bkc {

inline std::string poly_to_text(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p.terms().size(); ++i) {
    const Term& t = p.terms()[i];
    if (i) out += " + ";
    out += "{" + t.coeff.str() + "}";
    for (const auto& s : t.syms) out += "·" + sym_str(s);
    for (const auto& d : t.deltas) out += "·d[" + idx_str(d.a) + "," + idx_str(d.b) + "]";
    for (const auto& v : t.vars) out += "·" + var_str(v);
  }
  return out;
}

namespace detail {

inline Idx parse_idx_token(const std::string& s, bool& barred) {
  barred = false;
  std::string body = s;
  if (!body.empty() && body.back() == '~') {
    barred = true;
    body.pop_back();
  }
  if (body.empty()) throw std::runtime_error("empty index token");
  if (std::isdigit(static_cast<unsigned char>(body[0]))) return Idx::fixed(std::stoi(body));
  int base = body[0] - 'a';
  if (base < 0 || base >= 26) throw std::runtime_error("bad index token '" + s + "'");
  int mult = body.size() > 1 ? std::stoi(body.substr(1)) : 0;
  return Idx::label(base + 26 * mult);
}

inline std::vector<std::string> split_brackets(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

inline void parse_factor(const std::string& f, Term& t) {
  auto br = f.find('[');
  std::string name = br == std::string::npos ? f : f.substr(0, br);
  std::string body;
  if (br != std::string::npos) {
    if (f.back() != ']') throw std::runtime_error("unterminated bracket in '" + f + "'");
    body = f.substr(br + 1, f.size() - br - 2);
  }
  auto idxs = split_brackets(body);
  auto need = [&](size_t k) {
    if (idxs.size() != k)
      throw std::runtime_error("factor '" + name + "' expects " + std::to_string(k) + " indices");
  };
  if (name == "Phi") {
    need(0);
    t.syms.push_back(phi_sym());
    return;
  }
  std::vector<Idx> ix;
  std::vector<bool> bars;
  for (const auto& s : idxs) {
    bool b = false;
    ix.push_back(parse_idx_token(s, b));
    bars.push_back(b);
  }
  if (name == "DJ" || name == "DDJ") {
    need(name == "DJ" ? 3 : 4);
    bool all = true, none = true;
    for (bool b : bars) (b ? none : all) = false;
    if (!all && !none) throw std::runtime_error("mixed bars on '" + name + "'");
    if (name == "DJ") t.syms.push_back(nabla_j(ix[0], ix[1], ix[2], all));
    else t.syms.push_back(nnj(ix[0], ix[1], ix[2], ix[3], all));
    return;
  }
  if (name == "R") {
    need(4);
    t.syms.push_back(curv(ix[0], bars[0], ix[1], bars[1], ix[2], bars[2], ix[3], bars[3]));
    return;
  }
  if (name == "d") {
    need(2);
    if (bars[0] || bars[1]) throw std::runtime_error("bars on a delta");
    t.deltas.emplace_back(ix[0], ix[1]);
    return;
  }
  static const std::map<std::string, VarKind> kinds = {{"z", VarKind::Z},
                                                       {"zb", VarKind::Zb},
                                                       {"zp", VarKind::Zp},
                                                       {"zbp", VarKind::Zbp},
                                                       {"b", VarKind::B}};
  auto it = kinds.find(name);
  if (it == kinds.end()) throw std::runtime_error("unknown factor '" + name + "'");
  need(1);
  if (bars[0]) throw std::runtime_error("bars on a variable");
  t.vars.push_back(Var{it->second, ix[0]});
}

}  // namespace detail

inline Poly poly_from_text(const std::string& s) {
  std::string trimmed;
  {
    size_t a = s.find_first_not_of(" \t\n");
    size_t b = s.find_last_not_of(" \t\n");
    if (a == std::string::npos) throw std::runtime_error("empty polynomial text");
    trimmed = s.substr(a, b - a + 1);
  }
  if (trimmed == "0") return Poly::zero();
  // Split into terms at " + " outside braces.
  std::vector<std::string> terms;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i + 2 < trimmed.size(); ++i) {
    if (trimmed[i] == '{') ++depth;
    else if (trimmed[i] == '}') --depth;
    else if (depth == 0 && trimmed.compare(i, 3, " + ") == 0) {
      terms.push_back(trimmed.substr(start, i - start));
      start = i + 3;
      i += 2;
    }
  }
  terms.push_back(trimmed.substr(start));

  Poly out;
  for (const auto& ts : terms) {
    if (ts.empty() || ts[0] != '{') throw std::runtime_error("term must start with {scalar}");
    size_t close = ts.find('}');
    if (close == std::string::npos) throw std::runtime_error("unterminated scalar brace");
    Term t;
    t.coeff = ExactScalar::parse(ts.substr(1, close - 1));
    // Remaining factors separated by the UTF-8 middle dot.
    size_t pos = close + 1;
    while (pos < ts.size()) {
      if (ts.compare(pos, 2, "·") == 0) {
        pos += 2;
        continue;
      }
      size_t next = ts.find("·", pos);
      std::string factor = ts.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      detail::parse_factor(factor, t);
      if (next == std::string::npos) break;
      pos = next;
    }
    out.add_term(std::move(t));
  }
  return out;
}

}  // namespace bkc
