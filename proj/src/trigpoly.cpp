#include "tanaka/trigpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace tanaka {

MPoly LinExp::to_poly(const SymTablePtr& tab) const {
  MPoly p = MPoly::constant(tab, GaussQ(c0));
  int ia = tab->index_of("alpha"), ib = tab->index_of("beta");
  if (ca != 0) {
    if (ia < 0) throw std::domain_error("LinExp: table lacks alpha");
    p += MPoly::var(tab, ia).scaled(GaussQ(ca));
  }
  if (cb != 0) {
    if (ib < 0) throw std::domain_error("LinExp: table lacks beta");
    p += MPoly::var(tab, ib).scaled(GaussQ(cb));
  }
  return p;
}

std::string LinExp::str() const {
  std::ostringstream os;
  bool some = false;
  if (c0 != 0 || (ca == 0 && cb == 0)) {
    os << c0;
    some = true;
  }
  if (ca != 0) {
    if (some && ca > 0) os << "+";
    if (ca == 1) os << "alpha";
    else if (ca == -1) os << "-alpha";
    else os << ca << "*alpha";
    some = true;
  }
  if (cb != 0) {
    if (some && cb > 0) os << "+";
    if (cb == 1) os << "beta";
    else if (cb == -1) os << "-beta";
    else os << cb << "*beta";
  }
  return os.str();
}

std::string TMono::str() const {
  std::vector<std::string> parts;
  if (!tpow.is_zero()) parts.push_back("t^(" + tpow.str() + ")");
  if (lnpow == 1) parts.push_back("ln(t)");
  if (lnpow > 1) parts.push_back("ln(t)^" + std::to_string(lnpow));
  if (!ereal.is_zero() || !eimag.is_zero()) {
    std::string ex = "exp((";
    if (!ereal.is_zero()) ex += ereal.str();
    if (!eimag.is_zero()) {
      if (!ereal.is_zero()) ex += "+";
      ex += "I*(" + eimag.str() + ")";
    }
    ex += ")*t)";
    parts.push_back(ex);
  }
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t k = 1; k < parts.size(); ++k) out += "*" + parts[k];
  return out;
}

TrigPoly TrigPoly::constant(SymTablePtr tab, const GaussQ& c) {
  TrigPoly p(tab);
  if (!c.is_zero()) p.terms_[TMono{}] = MPoly::constant(tab, c);
  return p;
}

TrigPoly TrigPoly::from_poly(MPoly p) {
  TrigPoly r(p.table());
  if (!p.is_zero()) r.terms_[TMono{}] = std::move(p);
  return r;
}

TrigPoly TrigPoly::mono(SymTablePtr tab, const TMono& m, const MPoly& coeff) {
  TrigPoly r(std::move(tab));
  if (!coeff.is_zero()) r.terms_[m] = coeff;
  return r;
}

TrigPoly TrigPoly::tpower(SymTablePtr tab, const LinExp& a) {
  TMono m;
  m.tpow = a;
  return mono(tab, m, MPoly::constant(tab, GaussQ(1)));
}

TrigPoly TrigPoly::log_t(SymTablePtr tab) {
  TMono m;
  m.lnpow = 1;
  return mono(tab, m, MPoly::constant(tab, GaussQ(1)));
}

TrigPoly TrigPoly::exp_t(SymTablePtr tab, const LinExp& re, const LinExp& im) {
  TMono m;
  m.ereal = re;
  m.eimag = im;
  return mono(tab, m, MPoly::constant(tab, GaussQ(1)));
}

TrigPoly TrigPoly::cos_t(SymTablePtr tab, const LinExp& b) {
  // (E + E^-1)/2 with E = exp(i b t)
  TMono p, q;
  p.eimag = b;
  q.eimag = -b;
  GaussQ half(Rat(1, 2));
  TrigPoly r(tab);
  r = mono(tab, p, MPoly::constant(tab, half)) + mono(tab, q, MPoly::constant(tab, half));
  return r;
}

TrigPoly TrigPoly::sin_t(SymTablePtr tab, const LinExp& b) {
  // (E - E^-1)/(2i)
  TMono p, q;
  p.eimag = b;
  q.eimag = -b;
  GaussQ c = GaussQ(Rat(1)) / GaussQ(Rat(0), Rat(2));  // 1/(2i) = -i/2
  TrigPoly r(tab);
  r = mono(tab, p, MPoly::constant(tab, c)) + mono(tab, q, MPoly::constant(tab, -c));
  return r;
}

void TrigPoly::add_term(const TMono& m, const MPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly r(tab_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
  TrigPoly r = *this;
  if (!r.tab_) r.tab_ = o.tab_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const { return *this + (-o); }

TrigPoly TrigPoly::operator*(const TrigPoly& o) const {
  TrigPoly r(tab_ ? tab_ : o.tab_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
  return r;
}

bool TrigPoly::operator<(const TrigPoly& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return it->first < jt->first;
    if (!(it->second == jt->second)) return it->second < jt->second;
  }
  return it == terms_.end() && jt != o.terms_.end();
}

TrigPoly TrigPoly::scaled(const GaussQ& c) const {
  TrigPoly r(tab_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_[m] = co.scaled(c);
  return r;
}

TrigPoly TrigPoly::dt() const {
  TrigPoly r(tab_);
  for (const auto& [m, c] : terms_) {
    // d/dt [t^a ln^k e^{ct}] = a t^{a-1} ln^k e^{ct} + k t^{a-1} ln^{k-1} e^{ct}
    //                          + c t^a ln^k e^{ct}
    if (!m.tpow.is_zero()) {
      TMono m2 = m;
      m2.tpow = m.tpow - LinExp(1);
      r.add_term(m2, c * m.tpow.to_poly(tab_));
    }
    if (m.lnpow > 0) {
      TMono m2 = m;
      m2.tpow = m.tpow - LinExp(1);
      m2.lnpow = m.lnpow - 1;
      r.add_term(m2, c.scaled(GaussQ(Rat((long)m.lnpow))));
    }
    if (!m.ereal.is_zero() || !m.eimag.is_zero()) {
      MPoly rate = m.ereal.to_poly(tab_) +
                   m.eimag.to_poly(tab_).scaled(GaussQ::i());
      r.add_term(m, c * rate);
    }
  }
  return r;
}

TrigPoly TrigPoly::dvar(int v) const {
  TrigPoly r(tab_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.derivative(v));
  return r;
}

TrigPoly TrigPoly::conj() const {
  TrigPoly r(tab_);
  for (const auto& [m, c] : terms_) {
    TMono m2 = m;
    m2.eimag = -m.eimag;
    r.add_term(m2, c.conj());
  }
  return r;
}

std::optional<TrigPoly> TrigPoly::try_divide_exact(const TrigPoly& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return TrigPoly(tab_);
  // combined leading term: largest TMono, then largest coefficient exponent
  auto lead = [](const TrigPoly& p) {
    auto it = p.terms_.rbegin();
    auto ct = it->second.terms().rbegin();
    return std::make_tuple(it->first, ct->first, ct->second);
  };
  auto [dm, de, dc] = lead(d);
  TrigPoly rem = *this, quot(tab_);
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 100000) return std::nullopt;
    auto [rm, re, rc] = lead(rem);
    if (rm.lnpow < dm.lnpow) return std::nullopt;
    MPoly::Expo qe = re;
    for (size_t k = 0; k < qe.size(); ++k) {
      qe[k] -= de[k];
      if (qe[k] < 0) return std::nullopt;
    }
    MPoly qc(tab_);
    {
      MPoly t = MPoly::constant(tab_, rc / dc);
      for (size_t k = 0; k < qe.size(); ++k)
        if (qe[k] != 0) t = t * MPoly::var(tab_, (int)k, qe[k]);
      qc = t;
    }
    TrigPoly qterm = TrigPoly::mono(tab_, rm + (-dm), qc);
    quot += qterm;
    rem -= qterm * d;
  }
  return quot;
}

std::string TrigPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!m.is_trivial()) os << "*" << m.str();
  }
  return os.str();
}

// ---------- FnFrac ----------

FnFrac::FnFrac(TrigPoly n) : num(std::move(n)), den(TrigPoly::constant(num.table(), GaussQ(1))) {}

FnFrac::FnFrac(TrigPoly n, TrigPoly d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("FnFrac: zero denominator");
  normalize();
}

void FnFrac::normalize() {
  auto tab = num.table() ? num.table() : den.table();
  if (num.is_zero()) {
    den = TrigPoly::constant(tab, GaussQ(1));
    return;
  }
  if (num == den) {
    num = TrigPoly::constant(tab, GaussQ(1));
    den = num;
    return;
  }
  // single-term denominator with constant coefficient: the t^a exp(ct)
  // part never vanishes on the domain and divides out exactly; ln powers
  // are kept in the denominator.
  if (den.is_single_term()) {
    const auto& [m0, c0] = *den.terms().begin();
    TMono m = m0;
    MPoly c = c0;
    if (!c.is_constant() && c.terms().size() == 1) {
      // monomial coefficient: divide it out of the numerator when exact
      bool ok = true;
      TrigPoly out(tab);
      try {
        for (const auto& [mn, cn] : num.terms())
          out = out + TrigPoly::mono(tab, mn, cn.divided_by(c));
      } catch (const std::domain_error&) {
        ok = false;
      }
      if (ok) {
        num = out;
        c = MPoly::constant(tab, GaussQ(1));
        TrigPoly newden = TrigPoly::mono(tab, m, c);
        den = newden;
      }
    }
    if (c.is_constant()) {
      GaussQ inv = GaussQ(Rat(1)) / c.constant_value();
      TMono unit = m;
      unit.lnpow = 0;
      TrigPoly out(tab);
      for (const auto& [mn, cn] : num.terms())
        out = out + TrigPoly::mono(tab, mn + (-unit), cn.scaled(inv));
      num = out;
      if (m.lnpow == 0) {
        den = TrigPoly::constant(tab, GaussQ(1));
      } else {
        TMono lnm;
        lnm.lnpow = m.lnpow;
        den = TrigPoly::mono(tab, lnm, MPoly::constant(tab, GaussQ(1)));
      }
    }
  }
}

FnFrac FnFrac::operator-() const {
  FnFrac r;
  r.num = -num;
  r.den = den;
  return r;
}

FnFrac FnFrac::operator+(const FnFrac& o) const {
  if (den == o.den) return FnFrac(num + o.num, den);
  return FnFrac(num * o.den + o.num * den, den * o.den);
}

FnFrac FnFrac::operator-(const FnFrac& o) const { return *this + (-o); }

FnFrac FnFrac::operator*(const FnFrac& o) const { return FnFrac(num * o.num, den * o.den); }

FnFrac FnFrac::operator/(const FnFrac& o) const {
  if (o.is_zero()) throw std::domain_error("FnFrac: division by zero");
  return FnFrac(num * o.den, den * o.num);
}

FnFrac FnFrac::conj() const {
  FnFrac r;
  r.num = num.conj();
  r.den = den.conj();
  return r;
}

std::string FnFrac::str() const {
  bool trivial_den = den.is_single_term() && den.terms().begin()->first.is_trivial() &&
                     den.terms().begin()->second.is_constant() &&
                     den.terms().begin()->second.constant_value() == GaussQ(1);
  if (trivial_den) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

// ---------- expression parser ----------

namespace {

struct FnParser {
  const std::string& s;
  size_t pos = 0;
  SymTablePtr tab;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  bool peek_word(const std::string& w) {
    skip();
    return s.compare(pos, w.size(), w) == 0;
  }
  bool eat_word(const std::string& w) {
    if (peek_word(w)) { pos += w.size(); return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("fnexpr: " + what + " at position " + std::to_string(pos) +
                                " in \"" + s + "\"");
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

  // Complex-linear exponent expressions: sums of products of rationals, I,
  // alpha, beta and parenthesized subexpressions. A '*' followed by the
  // bare variable t terminates the expression (it belongs to the caller).
  struct LinC {
    LinExp re, im;
    bool rational_scalar() const { return im.is_zero() && re.is_rational(); }
    bool imag_scalar() const { return re.is_zero() && im.is_rational(); }
  };
  LinC lin_mul(const LinC& a, const LinC& b) {
    if (a.rational_scalar()) {
      Rat q = a.re.c0;
      return {b.re * q, b.im * q};
    }
    if (b.rational_scalar()) {
      Rat q = b.re.c0;
      return {a.re * q, a.im * q};
    }
    if (a.imag_scalar()) {
      Rat q = a.im.c0;  // (iq)*(re+i im) = -q*im + i q*re
      return {b.im * (-q), b.re * q};
    }
    if (b.imag_scalar()) {
      Rat q = b.im.c0;
      return {a.im * (-q), a.re * q};
    }
    fail("nonlinear exponent");
  }
  bool bare_t_ahead() {
    // true if the upcoming token is the standalone variable t
    size_t save = pos;
    skip();
    bool yes = pos < s.size() && s[pos] == 't' &&
               (pos + 1 >= s.size() || (!std::isalnum((unsigned char)s[pos + 1]) &&
                                        s[pos + 1] != '_' && s[pos + 1] != '^'));
    pos = save;
    return yes;
  }
  LinC linitem() {
    skip();
    if (pos >= s.size()) fail("unexpected end of exponent");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      LinC r = linexp();
      if (!eat(')')) fail("expected ')' in exponent");
      return r;
    }
    if (std::isdigit((unsigned char)c)) return {LinExp(rational()), LinExp()};
    if (eat_word("I")) return {LinExp(), LinExp(Rat(1))};
    if (eat_word("alpha")) return {LinExp::alpha(), LinExp()};
    if (eat_word("beta")) return {LinExp::beta(), LinExp()};
    fail("expected exponent symbol");
  }
  LinC linterm() {
    LinC acc = linitem();
    for (;;) {
      size_t save = pos;
      skip();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (bare_t_ahead()) {
          pos = save;  // the '*t' belongs to the caller
          break;
        }
        acc = lin_mul(acc, linitem());
        continue;
      }
      pos = save;
      break;
    }
    return acc;
  }
  LinC linexp() {
    LinC acc;
    bool neg = false;
    skip();
    if (eat('-')) neg = true;
    else (void)eat('+');
    for (;;) {
      LinC term = linterm();
      if (neg) {
        term.re = -term.re;
        term.im = -term.im;
      }
      acc.re = acc.re + term.re;
      acc.im = acc.im + term.im;
      skip();
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return acc;
  }

  LinExp real_linexp() {
    LinC l = linexp();
    if (!l.im.is_zero()) fail("unexpected imaginary part");
    return l.re;
  }

  TrigPoly factor() {
    skip();
    if (pos >= s.size()) fail("unexpected end");
    char c = s[pos];
    if (c == '-') { ++pos; return -factor(); }
    if (c == '+') { ++pos; return factor(); }
    if (c == '(') {
      ++pos;
      TrigPoly r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit((unsigned char)c)) return TrigPoly::constant(tab, GaussQ(rational()));
    if (eat_word("ln(t)")) {
      TrigPoly r = TrigPoly::log_t(tab);
      if (eat('^')) {
        Rat p = rational();
        if (p.get_den() != 1 || p < 0) fail("ln power must be a nonnegative integer");
        long n = p.get_num().get_si();
        TrigPoly out = TrigPoly::constant(tab, GaussQ(1));
        for (long k = 0; k < n; ++k) out *= r;
        return out;
      }
      return r;
    }
    if (eat_word("exp(")) {
      // exp( lin * t ) or exp( ( lin ) * t )
      LinC l;
      skip();
      if (eat('(')) {
        l = linexp();
        if (!eat(')')) fail("expected ')' in exp");
      } else {
        l = linexp();
      }
      if (!eat('*')) fail("expected '*t' in exp");
      if (!eat_word("t")) fail("expected t in exp");
      if (!eat(')')) fail("expected ')' after exp");
      return TrigPoly::exp_t(tab, l.re, l.im);
    }
    if (eat_word("cos(")) {
      LinC l;
      skip();
      if (eat('(')) {
        l = linexp();
        if (!eat(')')) fail("expected ')'");
      } else {
        l = linexp();
      }
      if (!eat('*')) fail("expected '*t' in cos");
      if (!eat_word("t")) fail("expected t");
      if (!eat(')')) fail("expected ')'");
      if (!l.im.is_zero()) fail("cos frequency must be real");
      return TrigPoly::cos_t(tab, l.re);
    }
    if (eat_word("sin(")) {
      LinC l;
      skip();
      if (eat('(')) {
        l = linexp();
        if (!eat(')')) fail("expected ')'");
      } else {
        l = linexp();
      }
      if (!eat('*')) fail("expected '*t' in sin");
      if (!eat_word("t")) fail("expected t");
      if (!eat(')')) fail("expected ')'");
      if (!l.im.is_zero()) fail("sin frequency must be real");
      return TrigPoly::sin_t(tab, l.re);
    }
    if (eat_word("t")) {
      if (eat('^')) {
        skip();
        LinExp a;
        if (eat('(')) {
          a = real_linexp();
          if (!eat(')')) fail("expected ')' in power");
        } else {
          a = LinExp(rational());
        }
        return TrigPoly::tpower(tab, a);
      }
      return TrigPoly::tpower(tab, LinExp(1));
    }
    if (eat_word("I")) return TrigPoly::constant(tab, GaussQ::i());
    if (eat_word("alpha")) {
      int v = tab->index_of("alpha");
      if (v < 0) fail("alpha not in table");
      return TrigPoly::from_poly(MPoly::var(tab, v));
    }
    if (eat_word("beta")) {
      int v = tab->index_of("beta");
      if (v < 0) fail("beta not in table");
      return TrigPoly::from_poly(MPoly::var(tab, v));
    }
    // chart coordinate symbols (r, s, y0..)
    if (std::isalpha((unsigned char)c)) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
      std::string id = s.substr(start, pos - start);
      int v = tab->index_of(id);
      if (v < 0) fail("unknown symbol '" + id + "'");
      int p = 1;
      if (eat('^')) {
        Rat q = rational();
        if (q.get_den() != 1 || q <= 0) fail("power must be a positive integer");
        p = (int)q.get_num().get_si();
      }
      return TrigPoly::from_poly(MPoly::var(tab, v, p));
    }
    fail("unexpected character");
  }

  TrigPoly product() {
    TrigPoly r = factor();
    for (;;) {
      skip();
      if (eat('*')) {
        r *= factor();
        continue;
      }
      break;
    }
    return r;
  }

  TrigPoly sum() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else (void)eat('+');
    TrigPoly r = product();
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

TrigPoly parse_fnexpr(SymTablePtr tab, const std::string& text) {
  FnParser p{text, 0, tab};
  TrigPoly r = p.sum();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return r;
}

}  // namespace tanaka
