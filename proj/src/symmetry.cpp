#include "tanaka/symmetry.hpp"

#include <stdexcept>

namespace tanaka {

namespace {

// 4x4 determinant over TrigPoly by cofactor expansion.
TrigPoly det4(const std::vector<std::vector<TrigPoly>>& m, SymTablePtr tab) {
  std::function<TrigPoly(std::vector<int>, std::vector<int>)> det =
      [&](std::vector<int> rows, std::vector<int> cols) -> TrigPoly {
    if (rows.size() == 1) return m[(size_t)rows[0]][(size_t)cols[0]];
    TrigPoly acc(tab);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rr(rows.begin() + 1, rows.end());
      std::vector<int> rc;
      for (size_t j = 0; j < cols.size(); ++j)
        if (j != k) rc.push_back(cols[j]);
      TrigPoly term = m[(size_t)rows[0]][(size_t)cols[k]] * det(rr, rc);
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  };
  return det(std::vector<int>{0, 1, 2, 3}, std::vector<int>{0, 1, 2, 3});
}

// Cramer solve of V x = b for a 4x4 TrigPoly matrix with nonzero det.
std::vector<FnFrac> cramer4(const std::vector<std::vector<TrigPoly>>& cols,
                            const std::vector<TrigPoly>& b, SymTablePtr tab) {
  // cols[k] is the k-th column (4 entries)
  std::vector<std::vector<TrigPoly>> m(4, std::vector<TrigPoly>(4, TrigPoly(tab)));
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) m[(size_t)i][(size_t)k] = cols[(size_t)k][(size_t)i];
  TrigPoly d = det4(m, tab);
  if (d.is_zero()) throw std::logic_error("cramer4: singular basis");
  std::vector<FnFrac> out;
  for (int k = 0; k < 4; ++k) {
    auto mk = m;
    for (int i = 0; i < 4; ++i) mk[(size_t)i][(size_t)k] = b[(size_t)i];
    out.push_back(FnFrac(det4(mk, tab), d));
  }
  return out;
}

}  // namespace

SymVerdict is_cr_symmetry(const TubeModel& m, const SymCandidate& cand) {
  SymVerdict v;
  auto tab = m.chart->table();
  if (cand.translation >= 0) {
    // translations d_{y_k} are tangent; frame coefficients are
    // y-independent in the x-part and y-linear only through the candidate
    v.is_symmetry = true;
    VField xi = VField::basis(m.chart, (size_t)(3 + cand.translation));
    FieldSpan dspan([&] {
      std::vector<VField> d = m.Z;
      for (const auto& z : m.Zbar()) d.push_back(z);
      return d;
    }());
    v.lie_d_check = true;
    std::vector<VField> dframe = m.Z;
    for (const auto& z : m.Zbar()) dframe.push_back(z);
    for (const auto& f : dframe) {
      VField br = vf_bracket(xi, f);
      if (!br.is_zero() && !dspan.contains(br)) v.lie_d_check = false;
    }
    v.is_symmetry = v.lie_d_check;
    return v;
  }

  const auto& A = *cand.matrix;
  // A psi, and the gamma-jet basis
  Curve d1 = m.curve.derivative();
  Curve d2 = d1.derivative();
  Curve d3 = d2.derivative();
  std::vector<std::vector<TrigPoly>> jet = {m.curve.comp, d1.comp, d2.comp, d3.comp};
  std::vector<TrigPoly> apsi(4, TrigPoly(tab));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      apsi[(size_t)i] += m.psi[(size_t)j].scaled(GaussQ(A[(size_t)i][(size_t)j]));

  // tangency: det(A psi | psi_p1 | psi_p2 | psi_p3) = 0, partials of psi
  std::vector<std::vector<TrigPoly>> partials;
  {
    // d/dr, d/ds (polynomial vars) and d/dt
    int vr = tab->index_of("r"), vs = tab->index_of("s");
    std::vector<TrigPoly> pr, ps, pt;
    for (int i = 0; i < 4; ++i) {
      pr.push_back(m.psi[(size_t)i].dvar(vr));
      ps.push_back(m.psi[(size_t)i].dvar(vs));
      pt.push_back(m.psi[(size_t)i].dt());
    }
    partials = {pr, ps, pt};
  }
  std::vector<std::vector<TrigPoly>> dm(4, std::vector<TrigPoly>(4, TrigPoly(tab)));
  for (int i = 0; i < 4; ++i) {
    dm[(size_t)i][0] = apsi[(size_t)i];
    for (int k = 0; k < 3; ++k) dm[(size_t)i][(size_t)(k + 1)] = partials[(size_t)k][(size_t)i];
  }
  TrigPoly resid = det4(dm, tab);
  if (!resid.is_zero()) {
    v.is_symmetry = false;
    v.residue = resid.str();
    return v;
  }

  // intrinsic pullback: A psi = p0 gamma + p1 gamma' + p2 gamma'' + p3 gamma'''
  std::vector<std::vector<TrigPoly>> jetcols = {jet[0], jet[1], jet[2], jet[3]};
  std::vector<FnFrac> p = cramer4(jetcols, apsi, tab);

  TrigPoly r_sym = TrigPoly::from_poly(MPoly::var(tab, tab->index_of("r")));
  TrigPoly s_sym = TrigPoly::from_poly(MPoly::var(tab, tab->index_of("s")));
  VField xi = VField::zero(m.chart);
  FnFrac inv_s = FnFrac(TrigPoly::constant(tab, GaussQ(1)), s_sym);
  if (m.variant == TubeVariant::TANGENT_VARIETY) {
    // psi_* d_r = gamma, psi_* d_s = gamma', psi_* X2 = gamma'' with
    // X2 = (1/s)(d_t - r d_s); tangency already forces p3 = 0
    if (!p[3].is_zero()) throw std::logic_error("is_cr_symmetry: inconsistent tangency");
    xi.coeff[0] = p[0];
    xi.coeff[1] = p[1] - p[2] * FnFrac(r_sym, s_sym);
    xi.coeff[2] = p[2] * inv_s;
  } else {
    // psi_* d_r = gamma', psi_* d_s = gamma'',
    // psi_* d_t = gamma' + r gamma'' + s gamma''';
    // tangency forces the gamma-component p0 = 0
    if (!p[0].is_zero()) throw std::logic_error("is_cr_symmetry: inconsistent tangency");
    FnFrac ct = p[3] * inv_s;
    xi.coeff[2] = ct;
    xi.coeff[0] = p[1] - ct;
    xi.coeff[1] = p[2] - ct * FnFrac(r_sym);
  }
  // y-part: (A y)_i
  for (int i = 0; i < 4; ++i) {
    MPoly ay(tab);
    for (int j = 0; j < 4; ++j)
      ay += MPoly::var(tab, tab->index_of("y" + std::to_string(j)))
                .scaled(GaussQ(A[(size_t)i][(size_t)j]));
    xi.coeff[(size_t)(3 + i)] = FnFrac(TrigPoly::from_poly(ay));
  }

  // L_xi D in D
  std::vector<VField> dframe = m.Z;
  for (const auto& z : m.Zbar()) dframe.push_back(z);
  FieldSpan dspan(dframe);
  v.lie_d_check = true;
  for (const auto& f : dframe) {
    VField br = vf_bracket(xi, f);
    if (!br.is_zero() && !dspan.contains(br)) v.lie_d_check = false;
  }
  v.is_symmetry = v.lie_d_check;
  if (!v.is_symmetry) v.residue = "Lie derivative leaves D";
  return v;
}

bool rnc_spectrum_test(const Rat& a, const Rat& b) {
  Rat spec[4] = {-1 - a - b, 3 - a - b, 3 * a - 1 - b, 3 * b - 1 - a};
  Rat model[4] = {Rat(-3), Rat(-1), Rat(1), Rat(3)};
  // proportional iff spec = nu * model for some nu != 0
  Rat nu = spec[1] / model[1];
  if (nu == 0) return false;
  for (int k = 0; k < 4; ++k)
    if (spec[k] != nu * model[k]) return false;
  return true;
}

}  // namespace tanaka
