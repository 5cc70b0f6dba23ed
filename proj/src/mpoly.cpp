#include "tanaka/mpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tanaka {

MPoly MPoly::constant(SymTablePtr tab, const GaussQ& c) {
  MPoly p(tab);
  if (!c.is_zero()) p.terms_[Expo(tab->size(), 0)] = c;
  return p;
}

MPoly MPoly::var(SymTablePtr tab, int v, int power) {
  MPoly p(tab);
  Expo e(tab->size(), 0);
  e.at((size_t)v) = power;
  p.terms_[e] = GaussQ(1);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

GaussQ MPoly::constant_value() const {
  if (terms_.empty()) return GaussQ();
  if (!is_constant()) throw std::domain_error("MPoly: not a constant");
  return terms_.begin()->second;
}

void MPoly::add_term(const Expo& e, const GaussQ& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(tab_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  if (!r.tab_) r.tab_ = o.tab_;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r(tab_ ? tab_ : o.tab_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Expo e = e1;
      for (size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
      r.add_term(e, c1 * c2);
    }
  return r;
}

bool MPoly::operator<(const MPoly& o) const {
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (!(it->second == jt->second)) return it->second < jt->second;
  }
  return it == terms_.end() && jt != o.terms_.end();
}

MPoly MPoly::scaled(const GaussQ& c) const {
  MPoly r(tab_);
  if (c.is_zero()) return r;
  for (const auto& [e, co] : terms_) r.terms_[e] = co * c;
  return r;
}

MPoly MPoly::derivative(int v) const {
  MPoly r(tab_);
  for (const auto& [e, c] : terms_) {
    int p = e.at((size_t)v);
    if (p == 0) continue;
    Expo e2 = e;
    e2[(size_t)v] = p - 1;
    r.add_term(e2, c * GaussQ(Rat((long)p)));
  }
  return r;
}

MPoly MPoly::conj() const {
  MPoly r(tab_);
  for (const auto& [e, c] : terms_) r.terms_[e] = c.conj();
  return r;
}

MPoly MPoly::eval(int v, const GaussQ& value) const {
  MPoly r(tab_);
  for (const auto& [e, c] : terms_) {
    GaussQ cc = c;
    for (int p = 0; p < e.at((size_t)v); ++p) cc *= value;
    Expo e2 = e;
    e2[(size_t)v] = 0;
    r.add_term(e2, cc);
  }
  return r;
}

MPoly MPoly::divided_by(const MPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MPoly: division by zero");
  if (d.terms_.size() != 1) throw std::domain_error("MPoly: non-monomial divisor");
  const auto& [de, dc] = *d.terms_.begin();
  MPoly r(tab_);
  for (const auto& [e, c] : terms_) {
    Expo e2 = e;
    for (size_t k = 0; k < e2.size(); ++k) {
      e2[k] -= de[k];
      if (e2[k] < 0) throw std::domain_error("MPoly: not divisible");
    }
    r.terms_[e2] = c / dc;
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool paren = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos ||
                 cs.find('/') != std::string::npos;
    std::string mono;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += tab_->name(k);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      os << (paren ? "(" + cs + ")" : cs);
    } else if (c == GaussQ(1)) {
      os << mono;
    } else if (c == -GaussQ(1)) {
      os << "-" << mono;
    } else {
      os << (paren ? "(" + cs + ")" : cs) << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace tanaka
