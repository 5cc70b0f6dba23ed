#include "tanaka/freeman.hpp"

#include <stdexcept>

namespace tanaka {

namespace {

// Left kernel of a rows x cols FnFrac matrix: vectors v with v M = 0.
std::vector<std::vector<FnFrac>> left_kernel(const std::vector<std::vector<FnFrac>>& m,
                                             SymTablePtr tab,
                                             std::vector<std::string>* loci) {
  size_t rows = m.size();
  if (rows == 0) return {};
  size_t cols = m[0].size();
  std::vector<std::vector<FnFrac>> mt(cols, std::vector<FnFrac>(rows, FnFrac::zero(tab)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) mt[j][i] = m[i][j];
  return fnmat_kernel(mt, tab, loci);
}

// Frame of candidate complements for the chart: coordinate fields.
std::vector<VField> coord_fields(const TubeModel& m) { return m.tm_frame(); }

}  // namespace

FreemanData freeman(const TubeModel& m) {
  FreemanData fd;
  auto tab = m.chart->table();
  fd.D10 = m.Z;

  // D (x) C frame: Z and conj Z; bracket generation check
  std::vector<VField> dframe = m.Z;
  for (const auto& z : m.Zbar()) dframe.push_back(z);
  {
    std::vector<VField> all = dframe;
    for (size_t i = 0; i < dframe.size(); ++i)
      for (size_t j = i + 1; j < dframe.size(); ++j)
        all.push_back(vf_bracket(dframe[i], dframe[j]));
    FieldSpan span(all);
    fd.bracket_generating = span.rank() == m.chart->dim();
    for (const auto& p : span.pivots) fd.loci.push_back(p);
    if (!fd.bracket_generating) return fd;
  }

  // complement field: first coordinate field completing the D-frame
  FieldSpan dspan(dframe);
  VField complement = VField::zero(m.chart);
  {
    bool found = false;
    for (const auto& e : coord_fields(m)) {
      if (!dspan.contains(e)) {
        complement = e;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("freeman: no complement to D in TM");
  }

  // class of a field in TM (x) C modulo a subframe, along chosen reps
  auto class_coeffs = [&](const VField& w, const std::vector<VField>& modframe,
                          const std::vector<VField>& reps) -> std::vector<FnFrac> {
    std::vector<VField> basis = modframe;
    for (const auto& r : reps) basis.push_back(r);
    FieldSpan span(basis);
    auto x = span.express(w);
    if (!x) throw std::logic_error("freeman: field escapes the stated bundle");
    std::vector<FnFrac> out;
    for (size_t k = modframe.size(); k < basis.size(); ++k) out.push_back((*x)[k]);
    return out;
  };

  // ---- order 1: L1(Z_j, conj Z_k) = i [Z_j, conj Z_k] mod D (x) C
  auto zbar = m.Zbar();
  fd.L1.assign(3, std::vector<FnFrac>(3, FnFrac::zero(tab)));
  FnFrac I_c(TrigPoly::constant(tab, GaussQ::i()));
  for (size_t j = 0; j < 3; ++j)
    for (size_t k = 0; k < 3; ++k) {
      VField br = vf_bracket(m.Z[j], zbar[k]);
      auto cls = class_coeffs(br, dframe, {complement});
      fd.L1[j][k] = I_c * cls[0];
    }
  for (auto kv : left_kernel(fd.L1, tab, &fd.loci)) {
    VField f = VField::zero(m.chart);
    for (size_t j = 0; j < 3; ++j) f = f + m.Z[j].scaled(kv[j]);
    fd.K10.push_back(f);
  }
  if (fd.K10.empty()) {
    fd.holNondeg = true;  // Levi-nondegenerate: the chain stops at order 1
    return fd;
  }

  // representative of D10/K10: a Z_j independent of K10
  auto indep_rep = [&](const std::vector<VField>& sub,
                       const std::vector<VField>& cands) -> VField {
    FieldSpan s1(sub);
    size_t base = s1.rank();
    for (const auto& c : cands) {
      std::vector<VField> ext = sub;
      ext.push_back(c);
      if (FieldSpan(ext).rank() > base) return c;
    }
    throw std::logic_error("freeman: no representative found");
  };
  VField xrep = indep_rep(fd.K10, m.Z);

  // ---- order 2: L2 : K10 x D01 -> D10/K10, mod K10 + D01
  std::vector<VField> modK;
  for (const auto& f : fd.K10) modK.push_back(f);
  for (const auto& z : zbar) modK.push_back(z);
  fd.L2.assign(fd.K10.size(), std::vector<FnFrac>(3, FnFrac::zero(tab)));
  for (size_t i = 0; i < fd.K10.size(); ++i)
    for (size_t k = 0; k < 3; ++k) {
      VField br = vf_bracket(fd.K10[i], zbar[k]);
      auto cls = class_coeffs(br, modK, {xrep});
      fd.L2[i][k] = cls[0];
    }
  for (auto kv : left_kernel(fd.L2, tab, &fd.loci)) {
    VField f = VField::zero(m.chart);
    for (size_t j = 0; j < fd.K10.size(); ++j) f = f + fd.K10[j].scaled(kv[j]);
    fd.L10.push_back(f);
  }
  if (fd.L10.empty()) {
    fd.holNondeg = true;  // 2-nondegenerate
    return fd;
  }

  // ---- order 3: L3 : L10 x D01 -> K10/L10, mod L10 + D01
  VField yrep = indep_rep(fd.L10, fd.K10);
  std::vector<VField> modL;
  for (const auto& f : fd.L10) modL.push_back(f);
  for (const auto& z : zbar) modL.push_back(z);
  fd.L3.assign(fd.L10.size(), std::vector<FnFrac>(3, FnFrac::zero(tab)));
  bool all_zero = true;
  for (size_t i = 0; i < fd.L10.size(); ++i)
    for (size_t k = 0; k < 3; ++k) {
      VField br = vf_bracket(fd.L10[i], zbar[k]);
      auto cls = class_coeffs(br, modL, {yrep, xrep});
      fd.L3[i][k] = cls[0];
      if (!cls[0].is_zero()) all_zero = false;
    }
  fd.holNondeg = !left_kernel(fd.L3, tab, &fd.loci).empty() ? false : true;
  if (all_zero) fd.holNondeg = false;
  return fd;
}

LeviResult levi_form(const TubeModel& m, int order) {
  FreemanData fd = freeman(m);
  if (!fd.bracket_generating)
    throw std::invalid_argument("levi_form: D is not bracket generating");
  LeviResult r;
  r.loci = fd.loci;
  if (order == 1) {
    r.matrix = fd.L1;
    r.left_kernel = fd.K10;
  } else if (order == 2) {
    r.matrix = fd.L2;
    r.left_kernel = fd.L10;
  } else if (order == 3) {
    r.matrix = fd.L3;
    // left kernel of L3 is trivial iff holomorphically nondegenerate
    if (!fd.holNondeg && !fd.L10.empty()) r.left_kernel = fd.L10;
  } else {
    throw std::invalid_argument("levi_form: order must be 1, 2 or 3");
  }
  return r;
}

FreemanRanks freeman_ranks(const TubeModel& m) {
  FreemanRanks out;
  FreemanData fd = freeman(m);
  out.loci = fd.loci;
  if (!fd.bracket_generating) {
    out.degenerate = true;
    return out;
  }
  out.rkD = 3;
  out.rkK = fd.K10.size();
  out.rkL = fd.L10.size();
  out.holNondeg = fd.holNondeg;
  return out;
}

InclusionReport check_bracket_inclusions(const TubeModel& m) {
  InclusionReport rep;
  FreemanData fd = freeman(m);
  if (!freeman_ranks(m).three_nondegenerate())
    throw std::invalid_argument("check_bracket_inclusions: model is not 3-nondegenerate");
  auto tab = m.chart->table();
  auto conj_frame = [&](const std::vector<VField>& v) {
    std::vector<VField> out;
    for (const auto& f : v) out.push_back(f.conj());
    return out;
  };
  std::vector<VField> D10 = fd.D10, K10 = fd.K10, L10 = fd.L10;
  std::vector<VField> D01 = conj_frame(D10), K01 = conj_frame(K10), L01 = conj_frame(L10);
  auto cat = [](std::initializer_list<std::vector<VField>> parts) {
    std::vector<VField> out;
    for (const auto& p : parts)
      for (const auto& f : p) out.push_back(f);
    return out;
  };
  std::vector<VField> TMC = {};
  for (size_t k = 0; k < m.chart->dim(); ++k) TMC.push_back(VField::basis(m.chart, k));

  struct Row {
    std::string label;
    std::vector<VField> a, b, target;
  };
  std::vector<Row> rows = {
      {"[D10,D10] in D10", D10, D10, D10},
      {"[D10,K10] in D10", D10, K10, D10},
      {"[D10,L10] in D10", D10, L10, D10},
      {"[K10,K10] in K10", K10, K10, K10},
      {"[K10,L10] in K10", K10, L10, K10},
      {"[L10,L10] in L10", L10, L10, L10},
      {"[D10,D01] in TM(x)C", D10, D01, TMC},
      {"[D10,K01] in D(x)C", D10, K01, cat({D10, D01})},
      {"[D10,L01] in D10+K01", D10, L01, cat({D10, K01})},
      {"[K10,K01] in K(x)C", K10, K01, cat({K10, K01})},
      {"[K10,L01] in K10+L01", K10, L01, cat({K10, L01})},
      {"[L10,L01] in L(x)C", L10, L01, cat({L10, L01})},
  };
  for (const auto& row : rows) {
    FieldSpan span(row.target);
    InclusionRow out{row.label, true, ""};
    for (size_t i = 0; i < row.a.size() && out.pass; ++i)
      for (size_t j = 0; j < row.b.size() && out.pass; ++j) {
        VField br = vf_bracket(row.a[i], row.b[j]);
        if (br.is_zero()) continue;
        if (!span.contains(br)) {
          out.pass = false;
          out.offending = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
          rep.pass = false;
        }
      }
    rep.rows.push_back(out);
  }
  (void)tab;
  return rep;
}

NormalizedSections normalized_sections(const TubeModel& m) {
  FreemanData fd = freeman(m);
  auto ranks = freeman_ranks(m);
  if (!ranks.three_nondegenerate())
    throw std::invalid_argument("normalized_sections: model is not 3-nondegenerate");
  auto tab = m.chart->table();
  auto zbar = m.Zbar();

  // representatives
  auto indep_rep = [&](const std::vector<VField>& sub,
                       const std::vector<VField>& cands) -> VField {
    FieldSpan s1(sub);
    size_t base = s1.rank();
    for (const auto& c : cands) {
      std::vector<VField> ext = sub;
      ext.push_back(c);
      if (FieldSpan(ext).rank() > base) return c;
    }
    throw std::logic_error("normalized_sections: no representative");
  };
  VField xrep = indep_rep(fd.K10, m.Z);
  VField yrep = indep_rep(fd.L10, fd.K10);
  VField zrep = fd.L10[0];

  std::vector<VField> modK = fd.K10;
  for (const auto& z : m.Zbar()) modK.push_back(z);
  std::vector<VField> modL = fd.L10;
  for (const auto& z : m.Zbar()) modL.push_back(z);

  auto cls = [&](const VField& w, const std::vector<VField>& modframe,
                 const std::vector<VField>& reps) {
    std::vector<VField> basis = modframe;
    for (const auto& r : reps) basis.push_back(r);
    FieldSpan span(basis);
    auto x = span.express(w);
    if (!x) throw std::logic_error("normalized_sections: class computation failed");
    std::vector<FnFrac> out;
    for (size_t k = modframe.size(); k < basis.size(); ++k) out.push_back((*x)[k]);
    return out;
  };

  // L2(yrep, conj xrep) = lambda * xrep mod K10+D01
  FnFrac lambda = cls(vf_bracket(yrep, xrep.conj()), modK, {xrep})[0];
  // L3(zrep, conj xrep) = mu * yrep mod L10+D01
  FnFrac mu = cls(vf_bracket(zrep, xrep.conj()), modL, {yrep, xrep})[0];
  if (lambda.is_zero() || mu.is_zero())
    throw std::logic_error("normalized_sections: degenerate pairing");

  NormalizedSections out;
  out.X10 = xrep;
  out.Y10 = yrep.scaled(FnFrac::one(tab) / lambda);
  out.Z10 = zrep.scaled(FnFrac::one(tab) / (lambda * mu));
  out.gauge_note =
      "residual gauge: X10 -> lam*X10, Y10 -> Y10, Z10 -> lam^-1*Z10 for real lam > 0, "
      "together with a sixth-root-of-unity phase on a finite cover";

  // verify both normalization conditions by recomputation
  FnFrac c2 = cls(vf_bracket(out.Y10, out.X10.conj()), modK, {out.X10})[0];
  FnFrac c3a = cls(vf_bracket(out.Z10, out.X10.conj()), modL, {out.Y10, out.X10})[0];
  out.verified = (c2 == FnFrac::one(tab)) && (c3a == FnFrac::one(tab));
  return out;
}

}  // namespace tanaka
