#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanaka/mpoly.hpp"

namespace tanaka {

/// Rational linear combination q0 + qa*alpha + qb*beta of the symbolic
/// exponent parameters. Used for powers of t and exponential rates.
struct LinExp {
  Rat c0, ca, cb;

  LinExp() : c0(0), ca(0), cb(0) {}
  LinExp(long v) : c0(v), ca(0), cb(0) {}
  LinExp(Rat v) : c0(std::move(v)), ca(0), cb(0) {}
  LinExp(Rat a, Rat b, Rat c) : c0(std::move(a)), ca(std::move(b)), cb(std::move(c)) {}
  static LinExp alpha() { return LinExp(Rat(0), Rat(1), Rat(0)); }
  static LinExp beta() { return LinExp(Rat(0), Rat(0), Rat(1)); }

  bool is_zero() const { return c0 == 0 && ca == 0 && cb == 0; }
  bool is_rational() const { return ca == 0 && cb == 0; }
  LinExp operator+(const LinExp& o) const { return {c0 + o.c0, ca + o.ca, cb + o.cb}; }
  LinExp operator-(const LinExp& o) const { return {c0 - o.c0, ca - o.ca, cb - o.cb}; }
  LinExp operator-() const { return {-c0, -ca, -cb}; }
  LinExp operator*(const Rat& q) const { return {c0 * q, ca * q, cb * q}; }
  bool operator==(const LinExp& o) const { return c0 == o.c0 && ca == o.ca && cb == o.cb; }
  bool operator<(const LinExp& o) const {
    if (c0 != o.c0) return c0 < o.c0;
    if (ca != o.ca) return ca < o.ca;
    return cb < o.cb;
  }
  /// As a polynomial coefficient (alpha, beta as MPoly variables).
  MPoly to_poly(const SymTablePtr& tab) const;
  std::string str() const;
};

/// Generalized monomial t^a * ln(t)^k * exp((e_re + i*e_im) t).
struct TMono {
  LinExp tpow;
  int lnpow = 0;
  LinExp ereal, eimag;

  bool is_trivial() const {
    return tpow.is_zero() && lnpow == 0 && ereal.is_zero() && eimag.is_zero();
  }
  TMono operator+(const TMono& o) const {
    return {tpow + o.tpow, lnpow + o.lnpow, ereal + o.ereal, eimag + o.eimag};
  }
  TMono operator-() const { return {-tpow, -lnpow, -ereal, -eimag}; }
  bool operator==(const TMono& o) const {
    return tpow == o.tpow && lnpow == o.lnpow && ereal == o.ereal && eimag == o.eimag;
  }
  bool operator<(const TMono& o) const {
    if (!(tpow == o.tpow)) return tpow < o.tpow;
    if (lnpow != o.lnpow) return lnpow < o.lnpow;
    if (!(ereal == o.ereal)) return ereal < o.ereal;
    return eimag < o.eimag;
  }
  std::string str() const;
};

/// Element of the closed differential function ring: finite sum of
/// generalized monomials in t with polynomial coefficients in the other
/// symbols. cos(bt), sin(bt) are represented through exp(i b t), which
/// makes cos^2 + sin^2 = 1 an identity of the representation.
class TrigPoly {
public:
  TrigPoly() = default;
  explicit TrigPoly(SymTablePtr tab) : tab_(std::move(tab)) {}
  static TrigPoly constant(SymTablePtr tab, const GaussQ& c);
  static TrigPoly from_poly(MPoly p);
  static TrigPoly mono(SymTablePtr tab, const TMono& m, const MPoly& coeff);
  /// t^a, ln t, exp(c t), cos(bt), sin(bt)
  static TrigPoly tpower(SymTablePtr tab, const LinExp& a);
  static TrigPoly log_t(SymTablePtr tab);
  static TrigPoly exp_t(SymTablePtr tab, const LinExp& re, const LinExp& im);
  static TrigPoly cos_t(SymTablePtr tab, const LinExp& b);
  static TrigPoly sin_t(SymTablePtr tab, const LinExp& b);

  const SymTablePtr& table() const { return tab_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TMono, MPoly>& terms() const { return terms_; }
  /// Single-term test: c * monomial (coefficient possibly non-constant).
  bool is_single_term() const { return terms_.size() == 1; }

  TrigPoly operator-() const;
  TrigPoly operator+(const TrigPoly& o) const;
  TrigPoly operator-(const TrigPoly& o) const;
  TrigPoly operator*(const TrigPoly& o) const;
  TrigPoly& operator+=(const TrigPoly& o) { *this = *this + o; return *this; }
  TrigPoly& operator-=(const TrigPoly& o) { *this = *this - o; return *this; }
  TrigPoly& operator*=(const TrigPoly& o) { *this = *this * o; return *this; }
  bool operator==(const TrigPoly& o) const { return terms_ == o.terms_; }
  bool operator<(const TrigPoly& o) const;

  TrigPoly scaled(const GaussQ& c) const;
  TrigPoly dt() const;               // d/dt
  TrigPoly dvar(int v) const;        // d/d(poly variable)
  TrigPoly conj() const;
  /// Exact division when *this is a multiple of d (sparse long division on
  /// the combined monomial order); nullopt otherwise.
  std::optional<TrigPoly> try_divide_exact(const TrigPoly& d) const;

  std::string str() const;

private:
  void add_term(const TMono& m, const MPoly& c);
  SymTablePtr tab_;
  std::map<TMono, MPoly> terms_;
};

/// Fraction of TrigPolys: the working function field for frames, Levi
/// forms and rank computations.
struct FnFrac {
  TrigPoly num, den;

  FnFrac() = default;
  explicit FnFrac(TrigPoly n);
  FnFrac(TrigPoly n, TrigPoly d);
  static FnFrac zero(SymTablePtr tab) { return FnFrac(TrigPoly(tab)); }
  static FnFrac one(SymTablePtr tab) {
    return FnFrac(TrigPoly::constant(tab, GaussQ(1)));
  }

  bool is_zero() const { return num.is_zero(); }
  FnFrac operator-() const;
  FnFrac operator+(const FnFrac& o) const;
  FnFrac operator-(const FnFrac& o) const;
  FnFrac operator*(const FnFrac& o) const;
  FnFrac operator/(const FnFrac& o) const;
  FnFrac& operator+=(const FnFrac& o) { *this = *this + o; return *this; }
  bool operator==(const FnFrac& o) const { return (num * o.den) == (o.num * den); }
  FnFrac conj() const;

  std::string str() const;

private:
  void normalize();
};

/// Parses the curve.v1 expression grammar over a given table:
/// rationals, I, alpha, beta, t, t^(lin), ln(t), exp((lin)*t) with lin
/// allowed an I-part, cos((lin)*t), sin((lin)*t), products and sums.
TrigPoly parse_fnexpr(SymTablePtr tab, const std::string& text);

}  // namespace tanaka
