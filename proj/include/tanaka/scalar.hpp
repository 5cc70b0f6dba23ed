#pragma once

#include <gmpxx.h>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace tanaka {

using Rat = mpq_class;

/// Gaussian rational a + b*I.
struct GaussQ {
  Rat re, im;

  GaussQ() : re(0), im(0) {}
  GaussQ(long a) : re(a), im(0) {}
  GaussQ(const Rat& a) : re(a), im(0) {}
  GaussQ(Rat a, Rat b) : re(std::move(a)), im(std::move(b)) {}

  static GaussQ i() { return GaussQ(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussQ conj() const { return GaussQ(re, -im); }

  GaussQ operator-() const { return GaussQ(-re, -im); }
  GaussQ operator+(const GaussQ& o) const { return GaussQ(re + o.re, im + o.im); }
  GaussQ operator-(const GaussQ& o) const { return GaussQ(re - o.re, im - o.im); }
  GaussQ operator*(const GaussQ& o) const {
    return GaussQ(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  GaussQ operator/(const GaussQ& o) const {
    Rat n = o.re * o.re + o.im * o.im;
    if (n == 0) throw std::domain_error("GaussQ: division by zero");
    return GaussQ((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
  }
  GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
  GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
  GaussQ& operator*=(const GaussQ& o) { *this = *this * o; return *this; }

  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
  bool operator!=(const GaussQ& o) const { return !(*this == o); }
  // Deterministic order, used for canonical forms.
  bool operator<(const GaussQ& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  std::string str() const;
};

/// Declares the formal unit symbols u1..um of one computation.
/// Conjugation inverts units; values from different contexts never mix.
class UnitContext {
public:
  explicit UnitContext(std::vector<std::string> names = {}) : names_(std::move(names)) {}
  size_t size() const { return names_.size(); }
  const std::string& name(size_t k) const { return names_.at(k); }
  int index_of(const std::string& n) const {
    for (size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == n) return (int)k;
    return -1;
  }
  bool operator==(const UnitContext& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

using UnitCtxPtr = std::shared_ptr<const UnitContext>;

/// Exact element of Q(i)[u1^±1, ..., um^±1]: a Laurent polynomial in the
/// declared unit symbols with Gaussian rational coefficients, kept in
/// canonical form (no zero terms, exponent vectors lex-ordered).
class Scalar {
public:
  using Expo = std::vector<int>;

  Scalar() = default;
  explicit Scalar(UnitCtxPtr ctx) : ctx_(std::move(ctx)) {}
  Scalar(UnitCtxPtr ctx, const GaussQ& c) : ctx_(std::move(ctx)) {
    if (!c.is_zero()) terms_[zero_expo()] = c;
  }

  static Scalar constant(UnitCtxPtr ctx, const GaussQ& c) { return Scalar(ctx, c); }
  static Scalar unit(UnitCtxPtr ctx, size_t k, int power = 1);
  /// Builds the canonical form from a raw term list (merges, drops zeros).
  static Scalar normalize(UnitCtxPtr ctx, const std::vector<std::pair<Expo, GaussQ>>& raw);

  const UnitCtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_expo());
  }
  /// True for c*u^e with c != 0: the invertible elements of the ring.
  bool is_unit_monomial() const { return terms_.size() == 1; }
  GaussQ constant_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  /// Exact inverse; requires a unit monomial.
  Scalar inverse() const;

  /// coefficient a+bi -> a-bi, exponent vector e -> -e.
  Scalar conj() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // deterministic order only

  const std::map<Expo, GaussQ>& terms() const { return terms_; }

  std::string str() const;
  /// Parses the fixture grammar, e.g. "(1/2)*I*u1^-1 + 2*u2".
  static Scalar parse(UnitCtxPtr ctx, const std::string& s);

private:
  Expo zero_expo() const { return Expo(ctx_ ? ctx_->size() : 0, 0); }
  void check_ctx(const Scalar& o) const;

  UnitCtxPtr ctx_;
  std::map<Expo, GaussQ> terms_;
};

std::string rat_str(const Rat& r);

}  // namespace tanaka
