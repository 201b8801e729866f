#pragma once
// Exact scalar ring: finite sums  c * pi^k * n^m  with c a Gaussian rational,
// k any integer, m >= 0.  pi is the circle constant kept symbolic; n is the
// symbolic complex dimension (produced by Kronecker traces).
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bkc/rational.hpp"

namespace bkc {

class ExactScalar {
 public:
  using Key = std::pair<int, int>;  // (pi exponent, n exponent)

  ExactScalar() = default;
  ExactScalar(long long v) { add_term(GaussRational(Rational(v)), 0, 0); }
  ExactScalar(Rational r) { add_term(GaussRational(std::move(r)), 0, 0); }
  ExactScalar(GaussRational c) { add_term(std::move(c), 0, 0); }

  static ExactScalar zero() { return ExactScalar(); }
  static ExactScalar one() { return ExactScalar(1); }
  static ExactScalar i() { return ExactScalar(GaussRational::i()); }
  static ExactScalar rat(long long n, long long d) { return ExactScalar(Rational::of(n, d)); }
  static ExactScalar pi_pow(int k) {
    ExactScalar s;
    s.add_term(GaussRational(Rational(1)), k, 0);
    return s;
  }
  static ExactScalar n_pow(int m) {
    ExactScalar s;
    s.add_term(GaussRational(Rational(1)), 0, m);
    return s;
  }
  static ExactScalar term(GaussRational c, int pi_exp, int n_exp) {
    ExactScalar s;
    s.add_term(std::move(c), pi_exp, n_exp);
    return s;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussRational>& terms() const { return terms_; }

  ExactScalar operator-() const {
    ExactScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }
  ExactScalar operator+(const ExactScalar& o) const {
    ExactScalar r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
    return r;
  }
  ExactScalar operator-(const ExactScalar& o) const { return *this + (-o); }
  ExactScalar operator*(const ExactScalar& o) const {
    ExactScalar r;
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_)
        r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return r;
  }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
  ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
  bool operator==(const ExactScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExactScalar& o) const { return !(*this == o); }
  bool operator<(const ExactScalar& o) const {
    // Arbitrary strict order so scalars can key containers deterministically.
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return it->first < jt->first;
      if (it->second != jt->second) {
        if (it->second.re() != jt->second.re()) return it->second.re() < jt->second.re();
        return it->second.im() < jt->second.im();
      }
    }
    return it == terms_.end() && jt != o.terms_.end();
  }

  ExactScalar conj() const {
    ExactScalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
    return r;
  }

  std::complex<double> eval(double pi_val, int n_val) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, c] : terms_) {
      double mag = std::pow(pi_val, k.first) * std::pow(double(n_val), k.second);
      acc += std::complex<double>(c.re().to_double(), c.im().to_double()) * mag;
    }
    return acc;
  }

  // Canonical text form, e.g. "(1/2)", "(0-1i)·π^2", "(2/3+1/3i)·π^-1·n".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.re().str();
      if (!c.im().is_zero()) {
        out += (c.im().sign() >= 0 ? "+" : "") + c.im().str() + "i";
      }
      out += ")";
      if (k.first != 0) out += "·π" + (k.first == 1 ? "" : "^" + std::to_string(k.first));
      if (k.second != 0) out += "·n" + (k.second == 1 ? "" : "^" + std::to_string(k.second));
    }
    return out;
  }

  // Inverse of str(); also accepts "pi" for π and "*" for the middle dot.
  static ExactScalar parse(const std::string& text) {
    ExactScalar out;
    for (const std::string& piece : split_terms(text)) {
      if (piece == "0") continue;
      out += parse_term(piece);
    }
    return out;
  }

 private:
  void add_term(GaussRational c, int pi_exp, int n_exp) {
    if (c.is_zero()) return;
    Key key{pi_exp, n_exp};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  static std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (true) {
      size_t next = s.find(" + ", pos);
      if (next == std::string::npos) {
        parts.push_back(s.substr(pos));
        break;
      }
      parts.push_back(s.substr(pos, next - pos));
      pos = next + 3;
    }
    return parts;
  }

  static ExactScalar parse_term(const std::string& piece) {
    size_t pos = 0;
    GaussRational coeff(Rational(1));
    if (pos < piece.size() && piece[pos] == '(') {
      size_t close = piece.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("unbalanced scalar parens");
      coeff = parse_complex(piece.substr(pos + 1, close - pos - 1));
      pos = close + 1;
    } else if (pos < piece.size() && (std::isdigit(static_cast<unsigned char>(piece[pos])) ||
                                      piece[pos] == '-' || piece[pos] == '+')) {
      // Bare rational/complex without parentheses, e.g. "-1", "1/2", "2i".
      size_t end = pos;
      while (end < piece.size() && piece[end] != '*' &&
             piece.compare(end, 2, "·") != 0)
        ++end;
      coeff = parse_complex(piece.substr(pos, end - pos));
      pos = end;
    }
    int pi_exp = 0, n_exp = 0;
    while (pos < piece.size()) {
      if (piece.compare(pos, 2, "·") == 0) pos += 2;  // UTF-8 middle dot is 2 bytes
      else if (piece[pos] == '*') pos += 1;
      if (pos >= piece.size()) break;
      bool is_pi = false;
      if (piece.compare(pos, 2, "π") == 0) { is_pi = true; pos += 2; }
      else if (piece.compare(pos, 2, "pi") == 0) { is_pi = true; pos += 2; }
      else if (piece[pos] == 'n') { pos += 1; }
      else throw std::invalid_argument("bad scalar factor in '" + piece + "'");
      int e = 1;
      if (pos < piece.size() && piece[pos] == '^') {
        size_t end = pos + 1;
        if (end < piece.size() && piece[end] == '-') end++;
        while (end < piece.size() && std::isdigit(static_cast<unsigned char>(piece[end]))) end++;
        e = std::stoi(piece.substr(pos + 1, end - pos - 1));
        pos = end;
      }
      (is_pi ? pi_exp : n_exp) += e;
    }
    ExactScalar s;
    s.add_term(coeff, pi_exp, n_exp);
    return s;
  }

  // "1/2", "1/2+1/3i", "0-1i", "2i" (pure imaginary allowed with explicit i).
  static GaussRational parse_complex(const std::string& body) {
    if (!body.empty() && body.back() == 'i') {
      // Find the sign that splits re and im (not the leading sign).
      for (size_t k = body.size() - 1; k > 0; --k) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' &&
            !(k == 1 && (body[0] == '+' || body[0] == '-'))) {
          std::string re = body.substr(0, k);
          std::string im = body.substr(k, body.size() - 1 - k);
          if (im == "+" || im == "-") im += "1";
          return GaussRational(Rational::parse(re), Rational::parse(im));
        }
      }
      std::string im = body.substr(0, body.size() - 1);
      if (im.empty() || im == "-") im += "1";
      return GaussRational(Rational(0), Rational::parse(im));
    }
    return GaussRational(Rational::parse(body));
  }

  std::map<Key, GaussRational> terms_;
};

inline ExactScalar operator*(long long a, const ExactScalar& b) { return ExactScalar(a) * b; }

}  // namespace bkc
