#pragma once
// Textual front end for operator pipelines.  Grammar:
//   expr    := atom | "(" form ")"
//   atom    := "P"
//   form    := "b" index expr         | "bplus" index expr
//            | "mul" kind index expr  | "project" expr | "offdiag" expr
//            | "inv" posint expr      | "adjoint" expr
//            | "compose" expr expr+   | "sum" expr+
//            | "scale" "{scalar}" expr| "scalepoly" "{poly}" expr
//            | "kernel" "{poly}"
//   kind    := "z" | "zb" | "zp" | "zbp"
//   index   := positive integer (a concrete coordinate slot)
//            | identifier (a formal summation label, e.g. "j")
// Braced payloads use the textual polynomial syntax from render.hpp.  Parse
// errors carry 1-based line/column positions.
#include <sstream>

#include "bkc/operator_expr.hpp"
#include "bkc/render.hpp"

namespace bkc {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int ln, int col)
      : std::runtime_error(msg + " at line " + std::to_string(ln) + ", column " + std::to_string(col)),
        line(ln),
        column(col) {}
};

namespace detail {

struct SexprToken {
  enum Type { LParen, RParen, Atom, Braced, End } type;
  std::string text;
  int line, column;
};

inline std::vector<SexprToken> sexpr_tokenize(const std::string& src) {
  std::vector<SexprToken> toks;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ';') {  // comment to end of line
      while (i < src.size() && src[i] != '\n') advance(src[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    int tl = line, tc = col;
    if (c == '(') {
      toks.push_back({SexprToken::LParen, "(", tl, tc});
      advance(c);
      ++i;
    } else if (c == ')') {
      toks.push_back({SexprToken::RParen, ")", tl, tc});
      advance(c);
      ++i;
    } else if (c == '{') {
      size_t j = i + 1;
      std::string body;
      int depth = 1;
      while (j < src.size() && depth > 0) {
        if (src[j] == '{') ++depth;
        if (src[j] == '}') --depth;
        if (depth > 0) body += src[j];
        ++j;
      }
      if (depth > 0) throw ParseError("unterminated '{'", tl, tc);
      for (size_t k = i; k < j; ++k) advance(src[k]);
      i = j;
      toks.push_back({SexprToken::Braced, body, tl, tc});
    } else {
      std::string word;
      while (i < src.size() && !std::isspace(static_cast<unsigned char>(src[i])) && src[i] != '(' &&
             src[i] != ')' && src[i] != '{' && src[i] != ';') {
        word += src[i];
        advance(src[i]);
        ++i;
      }
      toks.push_back({SexprToken::Atom, word, tl, tc});
    }
  }
  toks.push_back({SexprToken::End, "", line, col});
  return toks;
}

class SexprParser {
 public:
  explicit SexprParser(const std::string& src) : toks_(sexpr_tokenize(src)) {}

  OperatorExpr parse_top() {
    OperatorExpr e = parse_expr();
    const SexprToken& t = peek();
    if (t.type != SexprToken::End)
      throw ParseError("trailing input after expression", t.line, t.column);
    return e;
  }

 private:
  std::vector<SexprToken> toks_;
  size_t pos_ = 0;

  const SexprToken& peek() const { return toks_[pos_]; }
  const SexprToken& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg, const SexprToken& t) {
    throw ParseError(msg, t.line, t.column);
  }

  std::string expect_atom(const std::string& what) {
    const SexprToken& t = next();
    if (t.type != SexprToken::Atom) fail("expected " + what, t);
    return t.text;
  }

  Idx parse_index() {
    const SexprToken& t = next();
    if (t.type != SexprToken::Atom) fail("expected an index", t);
    try {
      bool barred = false;
      Idx ix = parse_idx_token(t.text, barred);
      if (barred) fail("index must not carry a bar", t);
      if (ix.concrete && ix.v < 1) fail("concrete index must be positive", t);
      return ix;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("malformed index '" + t.text + "'", t);
    }
  }

  int parse_posint() {
    const SexprToken& t = next();
    if (t.type != SexprToken::Atom) fail("expected a positive integer", t);
    try {
      int v = std::stoi(t.text);
      if (v < 1) fail("expected a positive integer", t);
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("malformed integer '" + t.text + "'", t);
    }
  }

  std::string parse_braced(const std::string& what) {
    const SexprToken& t = next();
    if (t.type != SexprToken::Braced) fail("expected a braced " + what, t);
    return t.text;
  }

  void expect_close(const SexprToken& open) {
    const SexprToken& t = next();
    if (t.type == SexprToken::End) fail("missing ')' for '(' ", open);
    if (t.type != SexprToken::RParen) fail("too many operands", t);
  }

  OperatorExpr parse_expr() {
    const SexprToken& t = next();
    if (t.type == SexprToken::Atom) {
      if (t.text == "P") return op_p();
      fail("unknown atom '" + t.text + "'", t);
    }
    if (t.type != SexprToken::LParen) fail("expected an expression", t);
    const SexprToken& open = t;
    std::string head = expect_atom("a form name");
    OperatorExpr e;
    if (head == "b" || head == "bplus") {
      Idx j = parse_index();
      OperatorExpr c = parse_expr();
      e = head == "b" ? op_b(j, std::move(c)) : op_bplus(j, std::move(c));
    } else if (head == "mul") {
      std::string kind = expect_atom("a variable kind");
      static const std::map<std::string, VarKind> kinds = {
          {"z", VarKind::Z}, {"zb", VarKind::Zb}, {"zp", VarKind::Zp}, {"zbp", VarKind::Zbp}};
      auto it = kinds.find(kind);
      if (it == kinds.end()) fail("unknown variable kind '" + kind + "'", toks_[pos_ - 1]);
      Idx j = parse_index();
      e = op_mul(it->second, j, parse_expr());
    } else if (head == "project" || head == "offdiag" || head == "adjoint") {
      OperatorExpr c = parse_expr();
      e = op_unary(head == "project" ? OpKind::Project
                                     : head == "offdiag" ? OpKind::Offdiag : OpKind::Adjoint,
                   std::move(c));
    } else if (head == "inv") {
      int k = parse_posint();
      e = op_inv(k, parse_expr());
    } else if (head == "compose" || head == "sum") {
      std::vector<OperatorExpr> cs;
      while (peek().type != SexprToken::RParen) {
        if (peek().type == SexprToken::End) fail("missing ')' for '(' ", open);
        cs.push_back(parse_expr());
      }
      size_t minimum = head == "compose" ? 2 : 1;
      if (cs.size() < minimum)
        fail("'" + head + "' needs at least " + std::to_string(minimum) + " operands", open);
      next();  // consume ')'
      return head == "compose" ? op_compose(std::move(cs)) : op_sum(std::move(cs));
    } else if (head == "scale") {
      std::string body = parse_braced("scalar");
      ExactScalar c;
      try {
        c = ExactScalar::parse(body);
      } catch (const std::exception& ex) {
        fail(std::string("bad scalar: ") + ex.what(), toks_[pos_ - 1]);
      }
      e = op_scale(std::move(c), parse_expr());
    } else if (head == "scalepoly" || head == "kernel") {
      std::string body = parse_braced("polynomial");
      Poly p;
      try {
        p = poly_from_text(body);
      } catch (const std::exception& ex) {
        fail(std::string("bad polynomial: ") + ex.what(), toks_[pos_ - 1]);
      }
      if (head == "kernel") {
        e = op_kernel(std::move(p));
      } else {
        e = op_scale_poly(std::move(p), parse_expr());
      }
    } else {
      fail("unknown form '" + head + "'", toks_[pos_ - 1]);
    }
    expect_close(open);
    return e;
  }
};

}  // namespace detail

inline OperatorExpr parse_pipeline(const std::string& src) {
  return detail::SexprParser(src).parse_top();
}

inline std::string render_pipeline(const OperatorExpr& e) {
  switch (e.kind) {
    case OpKind::LeafP:
      return "P";
    case OpKind::LeafKernel:
      return "(kernel {" + poly_to_text(e.payload) + "})";
    case OpKind::ApplyB:
      return "(b " + idx_str(e.index) + " " + render_pipeline(e.children[0]) + ")";
    case OpKind::ApplyBplus:
      return "(bplus " + idx_str(e.index) + " " + render_pipeline(e.children[0]) + ")";
    case OpKind::MultiplyVar: {
      static const char* names[] = {"z", "zb", "zp", "zbp", "b"};
      return std::string("(mul ") + names[static_cast<int>(e.vkind)] + " " + idx_str(e.index) +
             " " + render_pipeline(e.children[0]) + ")";
    }
    case OpKind::ScaleScalar:
      return "(scale {" + e.scalar.str() + "} " + render_pipeline(e.children[0]) + ")";
    case OpKind::ScalePoly:
      return "(scalepoly {" + poly_to_text(e.payload) + "} " + render_pipeline(e.children[0]) + ")";
    case OpKind::Project:
      return "(project " + render_pipeline(e.children[0]) + ")";
    case OpKind::Offdiag:
      return "(offdiag " + render_pipeline(e.children[0]) + ")";
    case OpKind::InvOffdiag:
      return "(inv " + std::to_string(e.power) + " " + render_pipeline(e.children[0]) + ")";
    case OpKind::Adjoint:
      return "(adjoint " + render_pipeline(e.children[0]) + ")";
    case OpKind::Compose:
    case OpKind::Sum: {
      std::string out = e.kind == OpKind::Compose ? "(compose" : "(sum";
      for (const auto& c : e.children) out += " " + render_pipeline(c);
      return out + ")";
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace bkc
