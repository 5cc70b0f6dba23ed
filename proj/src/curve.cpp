#include "tanaka/curve.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tanaka {

SymTablePtr geom_symbols() {
  static SymTablePtr tab = std::make_shared<SymTable>(std::vector<std::string>{
      "alpha", "beta", "r", "s", "x1", "x2", "x3", "y0", "y1", "y2", "y3"});
  return tab;
}

ParamConstraints::Sign ParamConstraints::decide(const LinExp& l) const {
  if (l.is_zero()) return UNDECIDED;
  if (l.is_rational()) return l.c0 > 0 ? POSITIVE : NEGATIVE;
  if (order_1_alpha_beta) {
    // region closure: the cone from (1,1) spanned by (0,1) and (1,1).
    // A nonzero linear form that is >= 0 there is > 0 on the open region.
    Rat at11 = l.c0 + l.ca + l.cb;
    if (at11 >= 0 && l.cb >= 0 && l.ca + l.cb >= 0) return POSITIVE;
    if (at11 <= 0 && l.cb <= 0 && l.ca + l.cb <= 0) return NEGATIVE;
    return UNDECIDED;
  }
  // single-symbol forms: nonzero iff the root is excluded
  if (l.ca != 0 && l.cb == 0) {
    Rat root = -l.c0 / l.ca;
    if (alpha_nonzero && root == 0) return NONZERO;
    for (const auto& [sym, v] : exclusions)
      if (sym == "alpha" && v == root) return NONZERO;
    return UNDECIDED;
  }
  if (l.cb != 0 && l.ca == 0) {
    Rat root = -l.c0 / l.cb;
    if (beta_nonzero && root == 0) return NONZERO;
    for (const auto& [sym, v] : exclusions)
      if (sym == "beta" && v == root) return NONZERO;
    return UNDECIDED;
  }
  return UNDECIDED;
}

Curve Curve::derivative() const {
  Curve d = *this;
  for (auto& c : d.comp) c = c.dt();
  return d;
}

TrigPoly wronskian4(const Curve& c) {
  if (c.comp.size() != 4) throw std::invalid_argument("wronskian4: need 4 components");
  auto tab = c.comp[0].table();
  std::vector<std::vector<TrigPoly>> m(4, std::vector<TrigPoly>(4, TrigPoly(tab)));
  Curve cur = c;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) m[(size_t)row][(size_t)col] = cur.comp[(size_t)col];
    cur = cur.derivative();
  }
  // direct cofactor expansion (4x4)
  std::function<TrigPoly(const std::vector<std::vector<TrigPoly>>&, std::vector<int>,
                         std::vector<int>)>
      det = [&](const std::vector<std::vector<TrigPoly>>& a, std::vector<int> rows,
                std::vector<int> cols) -> TrigPoly {
    if (rows.size() == 1) return a[(size_t)rows[0]][(size_t)cols[0]];
    TrigPoly acc(tab);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<int> rrows(rows.begin() + 1, rows.end());
      std::vector<int> rcols;
      for (size_t j = 0; j < cols.size(); ++j)
        if (j != k) rcols.push_back(cols[j]);
      TrigPoly minor = det(a, rrows, rcols);
      TrigPoly term = a[(size_t)rows[0]][(size_t)cols[k]] * minor;
      if (k % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  };
  return det(m, {0, 1, 2, 3}, {0, 1, 2, 3});
}

namespace {

struct WFactor {
  // either a linear form, or the sum of squares u^2 + v^2
  bool sos = false;
  LinExp lin;   // linear factor when !sos
  LinExp u, v;  // sum-of-squares parts when sos
};

// Generic exact division of p by divisor d, univariate in variable v with
// constant leading coefficient; returns the quotient when the remainder
// vanishes.
std::optional<MPoly> exact_divide(const MPoly& p, const MPoly& d, int v) {
  auto tab = p.table();
  int dd = 0;
  GaussQ lead;
  for (const auto& [e, c] : d.terms())
    if (e[(size_t)v] > dd) dd = e[(size_t)v];
  MPoly leadc(tab);
  for (const auto& [e, c] : d.terms())
    if (e[(size_t)v] == dd) {
      MPoly::Expo e2 = e;
      e2[(size_t)v] = 0;
      MPoly t = MPoly::constant(tab, c);
      for (size_t kk = 0; kk < e2.size(); ++kk)
        if (e2[kk] != 0) t = t * MPoly::var(tab, (int)kk, e2[kk]);
      leadc += t;
    }
  if (!leadc.is_constant() || leadc.is_zero()) return std::nullopt;
  GaussQ lc = leadc.constant_value();
  MPoly rem = p, quot(tab);
  for (;;) {
    int best = -1;
    for (const auto& [e, c] : rem.terms()) best = std::max(best, e[(size_t)v]);
    if (best < dd) break;
    MPoly top(tab);
    for (const auto& [e, c] : rem.terms())
      if (e[(size_t)v] == best) {
        MPoly t = MPoly::constant(tab, c / lc);
        MPoly::Expo e2 = e;
        e2[(size_t)v] = best - dd;
        for (size_t kk = 0; kk < e2.size(); ++kk)
          if (e2[kk] != 0) t = t * MPoly::var(tab, (int)kk, e2[kk]);
        top += t;
      }
    if (top.is_zero()) break;
    quot += top;
    rem = rem - top * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

// Factor the Wronskian coefficient into linear forms and sum-of-squares
// quadratics u^2 + v^2 (the shapes that occur for the catalog).
std::optional<std::vector<WFactor>> wronskian_factors(const MPoly& p) {
  auto tab = p.table();
  int ia = tab->index_of("alpha"), ib = tab->index_of("beta");
  std::vector<WFactor> out;
  MPoly cur = p;
  auto is_const = [&](const MPoly& q) { return q.is_constant(); };

  auto try_linear = [&]() -> bool {
    for (int qa = -1; qa <= 1; ++qa)
      for (int qb = -1; qb <= 1; ++qb) {
        if (qa == 0 && qb == 0) continue;
        for (long q0 = -8; q0 <= 8; ++q0) {
          LinExp l{Rat(q0), Rat(qa), Rat(qb)};
          int v = qa != 0 ? ia : ib;
          auto q = exact_divide(cur, l.to_poly(tab), v);
          if (q) {
            WFactor f;
            f.lin = l;
            out.push_back(f);
            cur = *q;
            return true;
          }
        }
      }
    return false;
  };
  auto try_sos = [&]() -> bool {
    // candidates: (alpha+c)^2+beta^2, (beta+c)^2+alpha^2, beta^2+c^2,
    // alpha^2+c^2, (alpha-beta)^2+c^2, (alpha+beta)^2+c^2
    struct Cand {
      LinExp u, v;
      int divvar;
    };
    std::vector<Cand> cands;
    for (long c = -8; c <= 8; ++c) {
      cands.push_back({LinExp(Rat(c), Rat(1), Rat(0)), LinExp::beta(), ia});
      cands.push_back({LinExp(Rat(c), Rat(0), Rat(1)), LinExp::alpha(), ib});
    }
    for (long c = 1; c <= 8; ++c) {
      cands.push_back({LinExp(Rat(c)), LinExp::beta(), ib});
      cands.push_back({LinExp(Rat(c)), LinExp::alpha(), ia});
      cands.push_back({LinExp(Rat(c)), LinExp(Rat(0), Rat(1), Rat(-1)), ia});
      cands.push_back({LinExp(Rat(c)), LinExp(Rat(0), Rat(1), Rat(1)), ia});
    }
    for (const auto& cd : cands) {
      MPoly d = cd.u.to_poly(tab) * cd.u.to_poly(tab) + cd.v.to_poly(tab) * cd.v.to_poly(tab);
      auto q = exact_divide(cur, d, cd.divvar);
      if (q) {
        WFactor f;
        f.sos = true;
        f.u = cd.u;
        f.v = cd.v;
        out.push_back(f);
        cur = *q;
        return true;
      }
    }
    return false;
  };

  int guard = 0;
  while (!is_const(cur) && guard++ < 16) {
    if (try_linear()) continue;
    if (try_sos()) continue;
    return std::nullopt;
  }
  if (!cur.is_constant() || !cur.constant_value().is_real() ||
      cur.constant_value().is_zero())
    return std::nullopt;
  WFactor f;
  f.lin = LinExp(cur.constant_value().re);
  out.push_back(f);
  return out;
}

}  // namespace

NondegReport curve_nondegenerate(const Curve& c) {
  NondegReport rep;
  TrigPoly w = wronskian4(c);
  rep.witness = w.str();
  if (w.is_zero()) {
    rep.status = NondegReport::FALSE;
    rep.excluded_locus = "identically zero";
    return rep;
  }
  if (!w.is_single_term()) {
    // special case: a plain polynomial in t with same-sign constant
    // coefficients (and even exponents when the domain is all of R)
    bool plain = true, all_pos = true, all_neg = true, even_ok = true;
    for (const auto& [mm, cc] : w.terms()) {
      if (mm.lnpow != 0 || !mm.ereal.is_zero() || !mm.eimag.is_zero() ||
          !mm.tpow.is_rational() || !cc.is_constant() ||
          !cc.constant_value().is_real()) {
        plain = false;
        break;
      }
      Rat v = cc.constant_value().re;
      if (v > 0) all_neg = false;
      if (v < 0) all_pos = false;
      Rat e = mm.tpow.c0;
      if (e.get_den() != 1 || e < 0 || e.get_num() % 2 != 0) even_ok = false;
    }
    bool positive_domain = c.domain.find("t>0") != std::string::npos;
    if (plain && (all_pos || all_neg) && (positive_domain || even_ok)) {
      rep.status = NondegReport::TRUE;
      return rep;
    }
    rep.status = NondegReport::UNDECIDED;
    rep.excluded_locus = "multi-term Wronskian; no decision procedure";
    return rep;
  }
  const auto& [m, coeff] = *w.terms().begin();
  if (m.lnpow > 0) {
    rep.status = NondegReport::FALSE;
    rep.excluded_locus = "ln(t) factor vanishes at t = 1";
    return rep;
  }
  // t^a exp(ct) never vanish on the domain; decide the coefficient
  if (coeff.is_constant()) {
    rep.status = NondegReport::TRUE;
    return rep;
  }
  auto factors = wronskian_factors(coeff);
  if (!factors) {
    rep.status = NondegReport::UNDECIDED;
    rep.excluded_locus = "coefficient does not factor into known forms";
    return rep;
  }
  for (const auto& f : *factors) {
    if (f.sos) {
      // u^2 + v^2 > 0 unless u and v vanish together
      bool pos = false;
      if (f.u.is_rational() && !f.u.is_zero()) pos = true;
      if (f.v.is_rational() && !f.v.is_zero()) pos = true;
      // v is a bare symbol forced nonzero
      if (!pos && f.v.ca != 0 && f.v.cb == 0 && f.v.c0 == 0 && c.constraints.alpha_nonzero)
        pos = true;
      if (!pos && f.v.cb != 0 && f.v.ca == 0 && f.v.c0 == 0 && c.constraints.beta_nonzero)
        pos = true;
      if (!pos) {
        rep.status = NondegReport::UNDECIDED;
        rep.excluded_locus =
            "positivity of (" + f.u.str() + ")^2+(" + f.v.str() + ")^2 not forced";
        return rep;
      }
    } else {
      auto s = c.constraints.decide(f.lin);
      if (s == ParamConstraints::UNDECIDED) {
        rep.status = NondegReport::UNDECIDED;
        rep.excluded_locus = "sign of factor (" + f.lin.str() + ") not forced by constraints";
        return rep;
      }
    }
  }
  rep.status = NondegReport::TRUE;
  return rep;
}

Curve curve_from_json(const std::string& text, SymTablePtr tab) {
  nlohmann::json j = nlohmann::json::parse(text);
  Curve c;
  c.name = j.value("name", "");
  for (const auto& comp : j.at("components"))
    c.comp.push_back(parse_fnexpr(tab, comp.get<std::string>()));
  if (c.comp.size() != 4) throw std::invalid_argument("curve.v1: need 4 components");
  c.domain = j.value("domain", "t>0");
  if (j.contains("constraints")) {
    const auto& k = j["constraints"];
    c.constraints.order_1_alpha_beta = k.value("order_1_alpha_beta", false);
    c.constraints.alpha_nonzero = k.value("alpha_nonzero", false);
    c.constraints.beta_nonzero = k.value("beta_nonzero", false);
    if (k.contains("exclusions"))
      for (const auto& e : k["exclusions"]) {
        Rat v(e.at("value").get<std::string>());
        v.canonicalize();
        c.constraints.exclusions.push_back({e.at("sym").get<std::string>(), v});
      }
  }
  return c;
}

Curve curve_load(const std::string& path, SymTablePtr tab) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open curve fixture: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return curve_from_json(ss.str(), tab);
}

}  // namespace tanaka
