#include "spgeo/laurent.hpp"

#include <cctype>
#include <stdexcept>

namespace spgeo {
namespace {

void check_exponent(const Exponent& e) {
  auto bad = [](int k) { return k > kMaxExponent || k < -kMaxExponent; };
  if (bad(e.v) || bad(e.x1) || bad(e.s))
    throw std::overflow_error("Laurent exponent outside [-64, 64]");
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent e{a.v + b.v, a.x1 + b.x1, a.s + b.s};
  check_exponent(e);
  return e;
}

Exponent sub(const Exponent& a, const Exponent& b) {
  Exponent e{a.v - b.v, a.x1 - b.x1, a.s - b.s};
  check_exponent(e);
  return e;
}

std::string monomial_text(const Exponent& e) {
  std::string out;
  auto put = [&out](const char* name, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (k != 1) out += "^" + std::to_string(k);
  };
  put("v", e.v);
  put("x1", e.x1);
  put("s", e.s);
  return out;
}

// Recursive-descent parser over the text format.
class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  LaurentPoly run() {
    LaurentPoly r = expr();
    skip();
    if (i_ != t_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse Laurent polynomial '" + std::string(t_) +
                                "' at offset " + std::to_string(i_) + ": " + why);
  }
  void skip() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < t_.size() && t_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    size_t b = i_;
    while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
    if (b == i_) fail("expected digits");
    return std::string(t_.substr(b, i_ - b));
  }

  LaurentPoly expr() {
    LaurentPoly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    LaurentPoly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }
  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }
  LaurentPoly factor() {
    if (eat('-')) return -factor();
    LaurentPoly base = atom();
    if (eat('^')) {
      bool neg = eat('-');
      if (!neg) eat('+');
      std::string d = digits();
      if (d.size() > 3) fail("exponent too large");
      int k = std::stoi(d);
      return base.pow(neg ? -k : k);
    }
    return base;
  }
  LaurentPoly atom() {
    skip();
    if (i_ >= t_.size()) fail("unexpected end of input");
    char c = t_[i_];
    if (c == '(') {
      ++i_;
      LaurentPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string n = digits();
      std::string d = "1";
      if (eat('/')) d = digits();
      return LaurentPoly(Rational::parse(n + "/" + d));
    }
    auto word = [&](std::string_view w) {
      if (t_.substr(i_, w.size()) == w) {
        size_t after = i_ + w.size();
        if (after < t_.size() && std::isalnum(static_cast<unsigned char>(t_[after]))) return false;
        i_ = after;
        return true;
      }
      return false;
    };
    if (word("x1")) return LaurentPoly::x1();
    if (word("x2")) return LaurentPoly::x2();
    if (word("v")) return LaurentPoly::v();
    if (word("q")) return LaurentPoly::q();
    if (word("s")) return LaurentPoly::s();
    fail("unknown symbol");
  }

  std::string_view t_;
  size_t i_ = 0;
};

}  // namespace

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, Exponent e) {
  check_exponent(e);
  LaurentPoly r;
  if (!c.is_zero()) r.terms_.emplace(e, c);
  return r;
}

LaurentPoly LaurentPoly::from_terms(const TermMap& raw) {
  LaurentPoly r;
  for (const auto& [e, c] : raw) {
    if (c.is_zero()) continue;
    check_exponent(e);
    r.terms_.emplace(e, c);
  }
  return r;
}

LaurentPoly poly_normalize(const LaurentPoly::TermMap& raw) { return LaurentPoly::from_terms(raw); }

LaurentPoly LaurentPoly::parse(std::string_view text) { return Parser(text).run(); }

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

Rational LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

std::pair<Exponent, Rational> LaurentPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e = add(ea, eb);
      auto [it, inserted] = r.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw std::domain_error("negative power of a non-unit Laurent polynomial");
    auto [ex, c] = *terms_.begin();
    return monomial(c.inverse(), {-ex.v, -ex.x1, -ex.s}).pow(-e);
  }
  LaurentPoly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(const LaurentPoly& v_img, const LaurentPoly& x1_img,
                                    const LaurentPoly& s_img) const {
  if (!v_img.is_monomial() || !x1_img.is_monomial() || !s_img.is_monomial())
    throw std::domain_error("substitution images must be nonzero monomials");
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r += LaurentPoly(c) * v_img.pow(e.v) * x1_img.pow(e.x1) * s_img.pow(e.s);
  return r;
}

LaurentPoly LaurentPoly::twist_s() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_)
    if (e.s % 2 != 0) c = -c;
  return r;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> v, std::complex<double> x1,
                                           std::complex<double> s) const {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_)
    acc += c.to_double() * std::pow(v, e.v) * std::pow(x1, e.x1) * std::pow(s, e.s);
  return acc;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_text(e);
    bool negative = c.sign() < 0;
    Rational mag = c.abs();
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly();
  if (b.is_monomial()) {
    auto [eb, cb] = *b.terms().begin();
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : a.terms()) t.emplace(sub(e, eb), c / cb);
    return LaurentPoly::from_terms(t);
  }
  // Shift both operands into the polynomial ring with no variable dividing the
  // divisor; then ordinary lex division decides divisibility (the quotient of
  // a polynomial by such a divisor is polynomial whenever it is Laurent).
  auto min_exp = [](const LaurentPoly& p) {
    Exponent m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms()) {
      m.v = std::min(m.v, e.v);
      m.x1 = std::min(m.x1, e.x1);
      m.s = std::min(m.s, e.s);
    }
    return m;
  };
  Exponent ma = min_exp(a), mb = min_exp(b);
  auto shift = [](const LaurentPoly& p, const Exponent& m) {
    LaurentPoly::TermMap t;
    for (const auto& [e, c] : p.terms()) t.emplace(Exponent{e.v - m.v, e.x1 - m.x1, e.s - m.s}, c);
    return LaurentPoly::from_terms(t);
  };
  LaurentPoly r = shift(a, ma), bb = shift(b, mb);
  auto [lb, cb] = bb.leading();
  LaurentPoly quotient;
  while (!r.is_zero()) {
    auto [lr, cr] = r.leading();
    Exponent d{lr.v - lb.v, lr.x1 - lb.x1, lr.s - lb.s};
    if (d.v < 0 || d.x1 < 0 || d.s < 0) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(cr / cb, d);
    quotient += t;
    r -= t * bb;
  }
  return quotient * LaurentPoly::monomial(1, sub(ma, mb));
}

std::optional<LaurentPoly> monomial_sqrt(const LaurentPoly& x) {
  if (!x.is_monomial()) return std::nullopt;
  auto [e, c] = *x.terms().begin();
  if (e.v % 2 || e.x1 % 2 || e.s % 2) return std::nullopt;
  auto r = rational_sqrt(c);
  if (!r) return std::nullopt;
  return LaurentPoly::monomial(*r, {e.v / 2, e.x1 / 2, e.s / 2});
}

}  // namespace spgeo
