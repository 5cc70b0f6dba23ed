#include "tanaka/scalar.hpp"

#include <cctype>
#include <sstream>

namespace tanaka {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string GaussQ::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    if (im == 1) os << "I";
    else if (im == -1) os << "-I";
    else os << im << "*I";
  } else {
    os << re;
    if (im > 0) os << "+";
    if (im == 1) os << "I";
    else if (im == -1) os << "-I";
    else os << im << "*I";
  }
  return os.str();
}

Scalar Scalar::unit(UnitCtxPtr ctx, size_t k, int power) {
  if (!ctx || k >= ctx->size()) throw std::out_of_range("Scalar::unit: bad unit index");
  Scalar s(ctx);
  Expo e(ctx->size(), 0);
  e[k] = power;
  s.terms_[e] = GaussQ(1);
  return s;
}

Scalar Scalar::normalize(UnitCtxPtr ctx, const std::vector<std::pair<Expo, GaussQ>>& raw) {
  Scalar s(ctx);
  for (const auto& [e, c] : raw) {
    if (e.size() != (ctx ? ctx->size() : 0))
      throw std::invalid_argument("Scalar::normalize: exponent vector length mismatch");
    auto it = s.terms_.find(e);
    if (it == s.terms_.end()) {
      if (!c.is_zero()) s.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) s.terms_.erase(it);
    }
  }
  return s;
}

GaussQ Scalar::constant_value() const {
  if (terms_.empty()) return GaussQ();
  if (!is_constant()) throw std::domain_error("Scalar: not a constant");
  return terms_.begin()->second;
}

void Scalar::check_ctx(const Scalar& o) const {
  // Mixing unit contexts is an error, not a coercion.
  if (ctx_ && o.ctx_ && !(*ctx_ == *o.ctx_))
    throw std::invalid_argument("Scalar: mixed unit contexts");
  if ((ctx_ == nullptr) != (o.ctx_ == nullptr))
    throw std::invalid_argument("Scalar: mixed unit contexts");
}

Scalar Scalar::operator-() const {
  Scalar r(ctx_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_ctx(o);
  Scalar r = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_ctx(o);
  Scalar r(ctx_ ? ctx_ : o.ctx_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e = e1;
      for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      GaussQ c = c1 * c2;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        if (!c.is_zero()) r.terms_[e] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (!is_unit_monomial()) throw std::domain_error("Scalar::inverse: not a unit monomial");
  const auto& [e, c] = *terms_.begin();
  Scalar r(ctx_);
  Expo ei = e;
  for (auto& x : ei) x = -x;
  r.terms_[ei] = GaussQ(1) / c;
  return r;
}

Scalar Scalar::conj() const {
  Scalar r(ctx_);
  for (const auto& [e, c] : terms_) {
    Expo ei = e;
    for (auto& x : ei) x = -x;
    r.terms_[ei] = c.conj();
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  check_ctx(o);
  return terms_ == o.terms_;
}

bool Scalar::operator<(const Scalar& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return it == terms_.end() && jt != o.terms_.end();
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool needs_paren = cs.find('+') != std::string::npos ||
                       cs.find('-', 1) != std::string::npos ||
                       cs.find('/') != std::string::npos;
    if (!first) os << " + ";
    first = false;
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ctx_->name(k);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << (needs_paren ? "(" + cs + ")" : cs);
    } else if (c == GaussQ(1)) {
      os << mono;
    } else if (c == -GaussQ(1)) {
      os << "-" << mono;
    } else {
      os << (needs_paren ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  UnitCtxPtr ctx;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("Scalar::parse: " + what + " at position " +
                                std::to_string(pos) + " in \"" + s + "\"");
  }

  Rat rational() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    }
    if (pos == start) fail("expected rational");
    Rat r(s.substr(start, pos - start));
    r.canonicalize();
    return r;
  }

  int integer() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoi(s.substr(start, pos - start));
  }

  std::string ident() {
    skip();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
    if (pos == start) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  // factor := ['-'|'+'] (rational | '(' sum ')' | 'I' | unitname ['^' int])
  Scalar factor() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '-') { ++pos; return -factor(); }
    if (c == '+') { ++pos; return factor(); }
    if (c == '(') {
      ++pos;
      Scalar r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit((unsigned char)c)) return Scalar::constant(ctx, GaussQ(rational()));
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string id = ident();
      if (id == "I") return Scalar::constant(ctx, GaussQ::i());
      int k = ctx ? ctx->index_of(id) : -1;
      if (k < 0) fail("unknown unit symbol '" + id + "'");
      int p = 1;
      if (eat('^')) p = integer();
      return Scalar::unit(ctx, (size_t)k, p);
    }
    fail("unexpected character");
  }

  Scalar product() {
    Scalar r = factor();
    while (eat('*')) r *= factor();
    return r;
  }

  Scalar sum() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Scalar r = product();
    if (neg) r = -r;
    for (;;) {
      skip();
      if (eat('+')) r += product();
      else if (eat('-')) r -= product();
      else break;
    }
    return r;
  }
};

}  // namespace

Scalar Scalar::parse(UnitCtxPtr ctx, const std::string& str) {
  Parser p{str, 0, ctx};
  Scalar r = p.sum();
  p.skip();
  if (p.pos != str.size()) p.fail("trailing input");
  return r;
}

}  // namespace tanaka
