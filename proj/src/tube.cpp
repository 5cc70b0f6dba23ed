#include "tanaka/tube.hpp"

#include <stdexcept>

namespace tanaka {

std::vector<VField> TubeModel::Zbar() const {
  std::vector<VField> out;
  for (const auto& z : Z) out.push_back(z.conj());
  return out;
}

std::vector<VField> TubeModel::tm_frame() const {
  std::vector<VField> out;
  for (size_t k = 0; k < chart->dim(); ++k) out.push_back(VField::basis(chart, k));
  return out;
}

TubeModel build_tube(const Curve& c, TubeVariant variant, bool allow_degenerate) {
  if (!allow_degenerate) {
    auto rep = curve_nondegenerate(c);
    if (rep.status == NondegReport::FALSE)
      throw std::invalid_argument("build_tube: degenerate curve (" + rep.excluded_locus +
                                  ")");
  }
  auto tab = c.comp[0].table();
  auto chart = std::make_shared<Chart>(
      tab, std::vector<Chart::Coord>{{"r", tab->index_of("r")},
                                     {"s", tab->index_of("s")},
                                     {"t", -1},
                                     {"y0", tab->index_of("y0")},
                                     {"y1", tab->index_of("y1")},
                                     {"y2", tab->index_of("y2")},
                                     {"y3", tab->index_of("y3")}});
  TubeModel m;
  m.name = c.name;
  m.variant = variant;
  m.curve = c;
  m.chart = chart;

  Curve d1 = c.derivative();
  Curve d2 = d1.derivative();
  Curve d3 = d2.derivative();
  TrigPoly r_sym = TrigPoly::from_poly(MPoly::var(tab, tab->index_of("r")));
  TrigPoly s_sym = TrigPoly::from_poly(MPoly::var(tab, tab->index_of("s")));

  auto dr = VField::basis(chart, 0);
  auto ds = VField::basis(chart, 1);
  auto dt = VField::basis(chart, 2);
  FnFrac inv_s(TrigPoly::constant(tab, GaussQ(1)), s_sym);

  const Curve* amb[3];
  if (variant == TubeVariant::TANGENT_VARIETY) {
    // psi = r gamma + s gamma'
    for (int i = 0; i < 4; ++i)
      m.psi.push_back(r_sym * c.comp[(size_t)i] + s_sym * d1.comp[(size_t)i]);
    // X0 = d_r (gamma), X1 = d_s (gamma'), X2 = (1/s)(d_t - r d_s) (gamma'')
    m.X.push_back(dr);
    m.X.push_back(ds);
    m.X.push_back(dt.scaled(inv_s) - ds.scaled(FnFrac(r_sym, s_sym)));
    amb[0] = &c;
    amb[1] = &d1;
    amb[2] = &d2;
  } else {
    // psi = gamma + r gamma' + s gamma''
    for (int i = 0; i < 4; ++i)
      m.psi.push_back(c.comp[(size_t)i] + r_sym * d1.comp[(size_t)i] +
                      s_sym * d2.comp[(size_t)i]);
    // psi_* d_r = gamma', psi_* d_s = gamma'',
    // psi_* d_t = gamma' + r gamma'' + s gamma'''
    m.X.push_back(dr);
    m.X.push_back(ds);
    m.X.push_back(dt.scaled(inv_s) - dr.scaled(inv_s) - ds.scaled(FnFrac(r_sym, s_sym)));
    amb[0] = &d1;
    amb[1] = &d2;
    amb[2] = &d3;
  }
  // J X_k = sum_i gamma^(k)_i d_{y_i}
  for (int k = 0; k < 3; ++k) {
    VField j = VField::zero(chart);
    for (int i = 0; i < 4; ++i) j.coeff[(size_t)(3 + i)] = FnFrac(amb[k]->comp[(size_t)i]);
    m.JX.push_back(j);
  }
  // Z_k = X_k - i J X_k, the unnormalized holomorphic frame
  for (int k = 0; k < 3; ++k) {
    FnFrac mi(TrigPoly::constant(tab, GaussQ(Rat(0), Rat(-1))));
    m.Z.push_back(m.X[(size_t)k] + m.JX[(size_t)k].scaled(mi));
  }
  return m;
}

TubeModel hyperquadric_tube() {
  auto tab = geom_symbols();
  auto chart = std::make_shared<Chart>(
      tab, std::vector<Chart::Coord>{{"x1", tab->index_of("x1")},
                                     {"x2", tab->index_of("x2")},
                                     {"x3", tab->index_of("x3")},
                                     {"y0", tab->index_of("y0")},
                                     {"y1", tab->index_of("y1")},
                                     {"y2", tab->index_of("y2")},
                                     {"y3", tab->index_of("y3")}});
  TubeModel m;
  m.name = "hyperquadric";
  m.variant = TubeVariant::TANGENT_VARIETY;
  m.chart = chart;
  GaussQ two(2);
  for (int k = 0; k < 3; ++k) {
    // X_k = d_{x_k}; ambient x-part e_k + 2 x_k e_0
    VField x = VField::basis(chart, (size_t)k);
    VField j = VField::zero(chart);
    TrigPoly xk = TrigPoly::from_poly(MPoly::var(tab, tab->index_of("x" + std::to_string(k + 1))));
    j.coeff[3] = FnFrac(xk.scaled(two));            // 2 x_k d_{y0}
    j.coeff[(size_t)(4 + k)] = FnFrac::one(tab);    // d_{y_{k+1}}
    m.X.push_back(x);
    m.JX.push_back(j);
    FnFrac mi(TrigPoly::constant(tab, GaussQ(Rat(0), Rat(-1))));
    m.Z.push_back(x + j.scaled(mi));
  }
  return m;
}

TubeModel change_frame(const TubeModel& m, const std::vector<std::vector<FnFrac>>& g) {
  TubeModel out = m;
  out.Z.clear();
  for (size_t i = 0; i < 3; ++i) {
    VField z = VField::zero(m.chart);
    for (size_t j = 0; j < 3; ++j) z = z + m.Z[j].scaled(g[i][j]);
    out.Z.push_back(z);
  }
  return out;
}

TubeModel corrupt_J(const TubeModel& m) {
  TubeModel out = m;
  out.name += "(corrupted J)";
  out.JX[1] = VField::zero(m.chart) - m.JX[1];
  auto tab = m.chart->table();
  out.Z.clear();
  for (int k = 0; k < 3; ++k) {
    FnFrac mi(TrigPoly::constant(tab, GaussQ(Rat(0), Rat(-1))));
    out.Z.push_back(out.X[(size_t)k] + out.JX[(size_t)k].scaled(mi));
  }
  return out;
}

}  // namespace tanaka
