#include "tanaka/vfield.hpp"

#include <sstream>
#include <stdexcept>

namespace tanaka {

FnFrac Chart::diff(const FnFrac& f, size_t k) const {
  // quotient rule
  TrigPoly dn = diff(f.num, k), dd = diff(f.den, k);
  if (dd.is_zero()) return FnFrac(dn, f.den);
  return FnFrac(dn * f.den - f.num * dd, f.den * f.den);
}

VField VField::zero(ChartPtr c) {
  VField v;
  v.chart = c;
  v.coeff.assign(c->dim(), FnFrac::zero(c->table()));
  return v;
}

VField VField::basis(ChartPtr c, size_t k) {
  VField v = zero(c);
  v.coeff[k] = FnFrac::one(c->table());
  return v;
}

bool VField::is_zero() const {
  for (const auto& c : coeff)
    if (!c.is_zero()) return false;
  return true;
}

VField VField::operator+(const VField& o) const {
  if (!(*chart == *o.chart)) throw std::invalid_argument("VField: chart mismatch");
  VField r = *this;
  for (size_t k = 0; k < coeff.size(); ++k) r.coeff[k] += o.coeff[k];
  return r;
}

VField VField::operator-(const VField& o) const {
  if (!(*chart == *o.chart)) throw std::invalid_argument("VField: chart mismatch");
  VField r = *this;
  for (size_t k = 0; k < coeff.size(); ++k) r.coeff[k] = r.coeff[k] - o.coeff[k];
  return r;
}

VField VField::scaled(const FnFrac& f) const {
  VField r = *this;
  for (auto& c : r.coeff) c = c * f;
  return r;
}

VField VField::conj() const {
  VField r = *this;
  for (auto& c : r.coeff) c = c.conj();
  return r;
}

FnFrac VField::apply(const FnFrac& f) const {
  FnFrac acc = FnFrac::zero(chart->table());
  for (size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k].is_zero()) continue;
    acc += coeff[k] * chart->diff(f, k);
  }
  return acc;
}

std::string VField::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff[k].str() << ")*d_" << chart->coord(k).name;
  }
  if (first) os << "0";
  return os.str();
}

VField vf_bracket(const VField& x, const VField& y) {
  if (!(*x.chart == *y.chart)) throw std::invalid_argument("vf_bracket: chart mismatch");
  VField r = VField::zero(x.chart);
  for (size_t k = 0; k < r.coeff.size(); ++k) {
    FnFrac acc = FnFrac::zero(x.chart->table());
    for (size_t j = 0; j < r.coeff.size(); ++j) {
      if (!x.coeff[j].is_zero()) acc += x.coeff[j] * x.chart->diff(y.coeff[k], j);
      if (!y.coeff[j].is_zero()) acc = acc - y.coeff[j] * y.chart->diff(x.coeff[k], j);
    }
    r.coeff[k] = acc;
  }
  return r;
}

namespace {

// common single-term content reduction: divide the row by the invertible
// monomial part shared by all terms and by a rational scale
void reduce_row_content(std::vector<TrigPoly>& row, SymTablePtr tab) {
  bool any = false;
  bool shiftable = true;
  TMono common;
  GaussQ scale;
  for (const auto& e : row) {
    for (const auto& [m, c] : e.terms()) {
      if (!any) {
        common = m;
        scale = c.terms().begin()->second;
        any = true;
      } else {
        // monomial part: keep only if symbolic parts agree; min rational c0
        auto merge = [&](LinExp& a, const LinExp& b) {
          if (a.ca == b.ca && a.cb == b.cb) {
            if (b.c0 < a.c0) a.c0 = b.c0;
          } else {
            shiftable = false;
          }
        };
        merge(common.tpow, m.tpow);
        merge(common.ereal, m.ereal);
        merge(common.eimag, m.eimag);
        common.lnpow = std::min(common.lnpow, m.lnpow);
      }
    }
  }
  if (!any) return;
  if (!shiftable) common = TMono{};
  if (common.lnpow < 0) common.lnpow = 0;
  if (common.is_trivial() && scale == GaussQ(1)) return;
  GaussQ inv = GaussQ(Rat(1)) / scale;
  for (auto& e : row) {
    TrigPoly out(tab);
    for (const auto& [m, c] : e.terms())
      out = out + TrigPoly::mono(tab, m + (-common), c.scaled(inv));
    e = out;
  }
}

std::vector<TrigPoly> clear_denominators(const std::vector<FnFrac>& row, SymTablePtr tab) {
  // multiply entry k by the product of the other entries' denominators
  std::vector<TrigPoly> out;
  for (size_t k = 0; k < row.size(); ++k) {
    TrigPoly e = row[k].num;
    for (size_t j = 0; j < row.size(); ++j)
      if (j != k) e = e * row[j].den;
    out.push_back(std::move(e));
  }
  reduce_row_content(out, tab);
  return out;
}

}  // namespace

TrigEchelon trig_gauss_jordan(std::vector<std::vector<TrigPoly>> m) {
  TrigEchelon out;
  if (m.empty()) return out;
  SymTablePtr tab;
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.table()) { tab = e.table(); break; }
  size_t R = m.size(), C = m[0].size();
  for (auto& row : m) reduce_row_content(row, tab);
  // One-step fraction-free (Bareiss) Gauss-Jordan: every row is updated at
  // every step and divided exactly by the previous pivot, so entries stay
  // minors of the input matrix instead of growing exponentially.
  size_t r = 0;
  TrigPoly prev = TrigPoly::constant(tab, GaussQ(1));
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t piv = R;
    for (size_t i = r; i < R; ++i) {
      if (m[i][c].is_zero()) continue;
      if (m[i][c].is_single_term()) { piv = i; break; }
      if (piv == R) piv = i;
    }
    if (piv == R) continue;
    std::swap(m[piv], m[r]);
    const TrigPoly p = m[r][c];
    bool monomial_const = p.is_single_term() && p.terms().begin()->second.is_constant();
    if (!monomial_const) out.pivots_assumed.push_back("pivot nonzero: " + p.str());
    bool prev_trivial = prev.is_single_term() &&
                        prev.terms().begin()->first.is_trivial() &&
                        prev.terms().begin()->second.is_constant() &&
                        prev.terms().begin()->second.constant_value() == GaussQ(1);
    for (size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      const TrigPoly f = m[i][c];
      for (size_t j = 0; j < C; ++j) {
        TrigPoly e = m[i][j] * p;
        if (!f.is_zero()) e -= f * m[r][j];
        if (!prev_trivial && !e.is_zero()) {
          auto q = e.try_divide_exact(prev);
          if (!q) throw std::logic_error("trig_gauss_jordan: Bareiss division failed");
          e = *q;
        }
        m[i][j] = e;
      }
    }
    prev = p;
    out.pivot_cols.push_back((int)c);
    ++r;
  }
  for (auto& row : m) reduce_row_content(row, tab);
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

std::vector<std::vector<FnFrac>> fnmat_kernel(const std::vector<std::vector<FnFrac>>& m,
                                              SymTablePtr tab,
                                              std::vector<std::string>* loci) {
  if (m.empty()) return {};
  size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<TrigPoly>> t(rows);
  for (size_t i = 0; i < rows; ++i) t[i] = clear_denominators(m[i], tab);
  TrigEchelon e = trig_gauss_jordan(std::move(t));
  if (loci)
    for (const auto& p : e.pivots_assumed) loci->push_back(p);
  std::vector<bool> is_piv(cols, false);
  for (int pc : e.pivot_cols) is_piv[(size_t)pc] = true;
  std::vector<std::vector<FnFrac>> out;
  for (size_t c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<FnFrac> v(cols, FnFrac::zero(tab));
    v[c] = FnFrac::one(tab);
    for (size_t r = 0; r < e.pivot_cols.size(); ++r)
      v[(size_t)e.pivot_cols[r]] = -FnFrac(e.rows[r][c], e.rows[r][(size_t)e.pivot_cols[r]]);
    out.push_back(std::move(v));
  }
  return out;
}

FieldSpan::FieldSpan(std::vector<VField> f) : fields(std::move(f)) {
  if (fields.empty()) return;
  dim_ = fields[0].chart->dim();
  tab_ = fields[0].chart->table();
  for (const auto& v : fields) fieldrows_.push_back(clear_denominators(v.coeff, tab_));
  ech_ = trig_gauss_jordan(fieldrows_);
  rank_ = ech_.pivot_cols.size();
  pivots = ech_.pivots_assumed;
}

std::optional<std::vector<FnFrac>> FieldSpan::express(const VField& w) const {
  if (fields.empty()) {
    for (const auto& c : w.coeff)
      if (!c.is_zero()) return std::nullopt;
    return std::vector<FnFrac>{};
  }
  // solve fields^T x = w: columns are the fields, one more for w
  size_t n = fields.size();
  std::vector<std::vector<TrigPoly>> m(dim_, std::vector<TrigPoly>(n + 1, TrigPoly(tab_)));
  // rows over the chart dimension: entries fields[j].coeff[i] and w.coeff[i],
  // cleared of denominators rowwise (a common row scale is irrelevant)
  for (size_t i = 0; i < dim_; ++i) {
    std::vector<FnFrac> row;
    for (size_t j = 0; j < n; ++j) row.push_back(fields[j].coeff[i]);
    row.push_back(w.coeff[i]);
    auto cleared = clear_denominators(row, tab_);
    for (size_t j = 0; j <= n; ++j) m[i][j] = cleared[j];
  }
  TrigEchelon e = trig_gauss_jordan(std::move(m));
  std::vector<FnFrac> x(n, FnFrac::zero(tab_));
  for (size_t r = 0; r < e.pivot_cols.size(); ++r) {
    size_t c = (size_t)e.pivot_cols[r];
    if (c == n) return std::nullopt;  // pivot in the w column: inconsistent
    x[c] = FnFrac(e.rows[r][n], e.rows[r][c]);
  }
  return x;
}

bool FieldSpan::contains(const VField& w) const {
  if (fields.empty()) return w.is_zero();
  // rank test: appending w must not raise the rank
  std::vector<std::vector<TrigPoly>> rows = fieldrows_;
  std::vector<FnFrac> wc = w.coeff;
  rows.push_back(clear_denominators(wc, tab_));
  TrigEchelon e = trig_gauss_jordan(std::move(rows));
  return e.pivot_cols.size() == rank_;
}

}  // namespace tanaka
