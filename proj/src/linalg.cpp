#include "tanaka/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tanaka {

SFrac::SFrac(Scalar n, Scalar d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("SFrac: zero denominator");
  normalize();
}

void SFrac::normalize() {
  if (num.is_zero()) {
    den = Scalar::constant(num.ctx(), GaussQ(1));
    return;
  }
  if (den.is_unit_monomial()) {
    num *= den.inverse();
    den = Scalar::constant(num.ctx(), GaussQ(1));
    return;
  }
  if (num == den) {
    num = Scalar::constant(num.ctx(), GaussQ(1));
    den = num;
  }
}

SFrac SFrac::operator-() const {
  SFrac r;
  r.num = -num;
  r.den = den;
  return r;
}

SFrac SFrac::operator+(const SFrac& o) const {
  if (den == o.den) return SFrac(num + o.num, den);
  return SFrac(num * o.den + o.num * den, den * o.den);
}

SFrac SFrac::operator-(const SFrac& o) const { return *this + (-o); }

SFrac SFrac::operator*(const SFrac& o) const { return SFrac(num * o.num, den * o.den); }

SFrac SFrac::operator/(const SFrac& o) const {
  if (o.is_zero()) throw std::domain_error("SFrac: division by zero");
  return SFrac(num * o.den, den * o.num);
}

bool SFrac::operator==(const SFrac& o) const { return (num * o.den) == (o.num * den); }

std::string SFrac::str() const {
  if (den.is_constant() && den.constant_value() == GaussQ(1)) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

RrefResult rref(SMat m) {
  RrefResult res;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Prefer a pivot that is a unit monomial of the ring.
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const SFrac& e = m[i][c];
      bool unit = e.num.is_unit_monomial() && e.den.is_unit_monomial();
      if (unit) { piv = i; break; }
      if (piv == rows) piv = i;
    }
    if (piv == rows) continue;
    const SFrac& p = m[piv][c];
    if (!(p.num.is_unit_monomial() && p.den.is_unit_monomial()))
      res.genericity.push_back("pivot nonzero: " + p.str());
    std::swap(m[piv], m[r]);
    SFrac inv = SFrac(Scalar::constant(m[r][c].num.ctx(), GaussQ(1))) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      SFrac f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    res.pivot_cols.push_back((int)c);
    ++r;
  }
  res.mat = std::move(m);
  return res;
}

size_t rank(const SMat& m, std::vector<std::string>* genericity) {
  RrefResult r = rref(m);
  if (genericity)
    genericity->insert(genericity->end(), r.genericity.begin(), r.genericity.end());
  return r.pivot_cols.size();
}

KernelResult kernel(const SMat& m) {
  KernelResult out;
  if (m.empty()) return out;
  size_t cols = m[0].size();
  RrefResult r = rref(m);
  out.genericity = r.genericity;
  UnitCtxPtr ctx;
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.num.ctx()) { ctx = e.num.ctx(); break; }
  std::set<int> pivots(r.pivot_cols.begin(), r.pivot_cols.end());
  Scalar one = Scalar::constant(ctx, GaussQ(1));
  for (size_t c = 0; c < cols; ++c) {
    if (pivots.count((int)c)) continue;
    SRow v(cols, SFrac::zero(ctx));
    v[c] = SFrac(one);
    for (size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.mat[i][c];
    out.basis.push_back(std::move(v));
  }
  // Canonical form: RREF the kernel basis itself.
  if (!out.basis.empty()) {
    RrefResult k = rref(out.basis);
    out.basis = std::move(k.mat);
  }
  return out;
}

std::optional<SRow> solve(const SMat& m, const SRow& b, std::vector<std::string>* genericity) {
  if (m.empty()) return SRow{};
  size_t rows = m.size(), cols = m[0].size();
  SMat aug = m;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  RrefResult r = rref(aug);
  if (genericity)
    genericity->insert(genericity->end(), r.genericity.begin(), r.genericity.end());
  UnitCtxPtr ctx;
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.num.ctx()) { ctx = e.num.ctx(); break; }
  SRow x(cols, SFrac::zero(ctx));
  for (size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == (int)cols) return std::nullopt;  // pivot in b column
    x[r.pivot_cols[i]] = r.mat[i][cols];
  }
  return x;
}

SMat smat_from_scalars(const std::vector<std::vector<Scalar>>& rows) {
  SMat m;
  for (const auto& row : rows) {
    SRow r;
    for (const auto& s : row) r.push_back(SFrac(s));
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace tanaka
