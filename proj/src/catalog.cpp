#include "tanaka/catalog.hpp"

#include <stdexcept>

#include "tanaka/tube.hpp"

namespace tanaka {

namespace {

// substitute numeric values for the symbolic parameters
TrigPoly subst_params(const TrigPoly& p, const std::optional<Rat>& a,
                      const std::optional<Rat>& b) {
  auto tab = p.table();
  int ia = tab->index_of("alpha"), ib = tab->index_of("beta");
  TrigPoly out(tab);
  auto sub_lin = [&](const LinExp& l) {
    LinExp r = l;
    if (a) {
      r.c0 += r.ca * *a;
      r.ca = 0;
    }
    if (b) {
      r.c0 += r.cb * *b;
      r.cb = 0;
    }
    return r;
  };
  for (const auto& [m, c] : p.terms()) {
    TMono m2 = m;
    m2.tpow = sub_lin(m.tpow);
    m2.ereal = sub_lin(m.ereal);
    m2.eimag = sub_lin(m.eimag);
    MPoly c2 = c;
    if (a) c2 = c2.eval(ia, GaussQ(*a));
    if (b) c2 = c2.eval(ib, GaussQ(*b));
    out = out + TrigPoly::mono(tab, m2, c2);
  }
  return out;
}

Rat eval_entry(const std::string& e, const std::optional<Rat>& a,
               const std::optional<Rat>& b) {
  auto tab = geom_symbols();
  TrigPoly p = parse_fnexpr(tab, e);
  p = subst_params(p, a, b);
  if (p.is_zero()) return Rat(0);
  if (!p.is_single_term() || !p.terms().begin()->first.is_trivial())
    throw std::invalid_argument("catalog: generator entry is not a constant");
  GaussQ c = p.terms().begin()->second.constant_value();
  if (!c.is_real()) throw std::invalid_argument("catalog: complex generator entry");
  return c.re;
}

}  // namespace

Curve HomogeneousCurve::curve(std::optional<Rat> alpha, std::optional<Rat> beta) const {
  auto tab = geom_symbols();
  Curve c;
  c.name = segre;
  c.constraints = constraints;
  for (const auto& e : comps) c.comp.push_back(subst_params(parse_fnexpr(tab, e), alpha, beta));
  c.domain = param_kind == "tau" ? "t>0" : "t";
  return c;
}

std::vector<std::vector<Rat>> HomogeneousCurve::generator(std::optional<Rat> alpha,
                                                          std::optional<Rat> beta) const {
  if (uses_alpha && !alpha) alpha = sample_alpha;
  if (uses_beta && !beta) beta = sample_beta;
  std::vector<std::vector<Rat>> v(4, std::vector<Rat>(4, Rat(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) v[(size_t)i][(size_t)j] = eval_entry(gen[(size_t)i][(size_t)j], alpha, beta);
  return v;
}

std::vector<Rat> HomogeneousCurve::base_point() const {
  std::vector<Rat> b;
  for (const auto& e : base) {
    Rat r(e);
    r.canonicalize();
    b.push_back(r);
  }
  return b;
}

bool HomogeneousCurve::generator_consistent(std::optional<Rat> alpha,
                                            std::optional<Rat> beta) const {
  if (uses_alpha && !alpha) alpha = sample_alpha;
  if (uses_beta && !beta) beta = sample_beta;
  auto tab = geom_symbols();
  Curve c = curve(alpha, beta);
  auto v = generator(alpha, beta);
  Curve d = c.derivative();
  // v gamma = tau gamma' (tau rows, flow parameter t with tau = e^t)
  // or v gamma = gamma' (t rows)
  for (int i = 0; i < 4; ++i) {
    TrigPoly lhs(tab);
    for (int j = 0; j < 4; ++j)
      lhs += c.comp[(size_t)j].scaled(GaussQ(v[(size_t)i][(size_t)j]));
    TrigPoly rhs = d.comp[(size_t)i];
    if (param_kind == "tau") rhs = rhs * TrigPoly::tpower(tab, LinExp(1));
    if (!(lhs == rhs)) return false;
  }
  // the base point must lie on the curve at the flow origin: gamma(tau=1)
  // resp. gamma(t=0); checked structurally by the rows' construction.
  return true;
}

std::vector<HomogeneousCurve> catalog() {
  std::vector<HomogeneousCurve> rows;
  auto mk = [&](std::string segre, std::string desc, bool ua, bool ub, std::string pk,
                Rat sa, Rat sb, std::vector<std::string> comps,
                std::vector<std::vector<std::string>> gen, std::vector<std::string> base,
                ParamConstraints cons) {
    HomogeneousCurve h;
    h.segre = std::move(segre);
    h.description = std::move(desc);
    h.uses_alpha = ua;
    h.uses_beta = ub;
    h.param_kind = std::move(pk);
    h.sample_alpha = std::move(sa);
    h.sample_beta = std::move(sb);
    h.comps = std::move(comps);
    h.gen = std::move(gen);
    h.base = std::move(base);
    h.constraints = std::move(cons);
    rows.push_back(std::move(h));
  };
  ParamConstraints none;
  {
    ParamConstraints c;
    c.order_1_alpha_beta = true;
    mk("(1111)", "[1 : tau : tau^a : tau^b], 1 < a < b", true, true, "tau", Rat(2), Rat(4),
       {"1", "t", "t^(alpha)", "t^(beta)"},
       {{"0", "0", "0", "0"},
        {"0", "1", "0", "0"},
        {"0", "0", "alpha", "0"},
        {"0", "0", "0", "beta"}},
       {"1", "1", "1", "1"}, c);
  }
  {
    ParamConstraints c;
    c.exclusions = {{"beta", Rat(1)}, {"beta", Rat(-1)}, {"beta", Rat(-3)}};
    mk("(211)", "[1 : ln tau : tau^(b-1) : tau^(-b-3)], b != +-1, -3", false, true, "tau",
       Rat(0), Rat(2), {"1", "ln(t)", "t^(beta-1)", "t^(-beta-3)"},
       {{"0", "0", "0", "0"},
        {"1", "0", "0", "0"},
        {"0", "0", "beta-1", "0"},
        {"0", "0", "0", "-beta-3"}},
       {"1", "0", "1", "1"}, c);
  }
  mk("(211inf)", "[1 : ln tau : tau : 1/tau]", false, false, "tau", Rat(0), Rat(0),
     {"1", "ln(t)", "t", "t^(-1)"},
     {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "1", "0"},
      {"0", "0", "0", "-1"}},
     {"1", "0", "1", "1"}, none);
  mk("(31)", "[1 : ln tau : ln^2 tau : tau^-4]", false, false, "tau", Rat(0), Rat(0),
     {"1", "ln(t)", "ln(t)^2", "t^(-4)"},
     {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "2", "0", "0"},
      {"0", "0", "0", "-4"}},
     {"1", "0", "0", "1"}, none);
  mk("(22)", "[1 : ln tau : tau^-2 : tau^-2 ln tau]", false, false, "tau", Rat(0), Rat(0),
     {"1", "ln(t)", "t^(-2)", "t^(-2)*ln(t)"},
     {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "-2", "0"},
      {"0", "0", "1", "-2"}},
     {"1", "0", "1", "0"}, none);
  mk("(4)", "[1 : tau : tau^2 : tau^3] (rational normal curve)", false, false, "t", Rat(0),
     Rat(0), {"1", "t", "t^2", "t^3"},
     {{"0", "0", "0", "0"}, {"1", "0", "0", "0"}, {"0", "2", "0", "0"},
      {"0", "0", "3", "0"}},
     {"1", "0", "0", "0"}, none);
  {
    ParamConstraints c;
    c.exclusions = {{"alpha", Rat(-1)}};
    c.beta_nonzero = true;
    mk("(1c11)", "[cos bt : sin bt : e^{(a-1)t} : e^{-(a+3)t}], a != -1, b != 0", true,
       true, "t", Rat(2), Rat(1),
       {"cos(beta*t)", "sin(beta*t)", "exp((alpha-1)*t)", "exp((-alpha-3)*t)"},
       {{"0", "-beta", "0", "0"},
        {"beta", "0", "0", "0"},
        {"0", "0", "alpha-1", "0"},
        {"0", "0", "0", "-alpha-3"}},
       {"1", "0", "1", "1"}, c);
  }
  {
    ParamConstraints c;
    c.beta_nonzero = true;
    mk("(1c11inf)", "[cos bt : sin bt : e^t : e^-t], b != 0", false, true, "t", Rat(0),
       Rat(1), {"cos(beta*t)", "sin(beta*t)", "exp(1*t)", "exp(-1*t)"},
       {{"0", "-beta", "0", "0"},
        {"beta", "0", "0", "0"},
        {"0", "0", "1", "0"},
        {"0", "0", "0", "-1"}},
       {"1", "0", "1", "1"}, c);
  }
  {
    ParamConstraints c;
    c.beta_nonzero = true;
    mk("(1c2)", "[cos bt : sin bt : t e^{-2t} : e^{-2t}], b != 0", false, true, "t",
       Rat(0), Rat(1), {"cos(beta*t)", "sin(beta*t)", "t*exp(-2*t)", "exp(-2*t)"},
       {{"0", "-beta", "0", "0"},
        {"beta", "0", "0", "0"},
        {"0", "0", "-2", "1"},
        {"0", "0", "0", "-2"}},
       {"1", "0", "0", "1"}, c);
  }
  mk("(2c)", "[cos t : sin t : t cos t : t sin t]", false, false, "t", Rat(0), Rat(0),
     {"cos(1*t)", "sin(1*t)", "t*cos(1*t)", "t*sin(1*t)"},
     {{"0", "-1", "0", "0"}, {"1", "0", "0", "0"}, {"1", "0", "0", "-1"},
      {"0", "1", "1", "0"}},
     {"1", "0", "0", "0"}, none);
  {
    ParamConstraints c;
    c.alpha_nonzero = true;
    c.beta_nonzero = true;
    mk("(1c1c)", "[cos at : sin at : e^{-2t} cos bt : e^{-2t} sin bt], a,b != 0", true,
       true, "t", Rat(1), Rat(2),
       {"cos(alpha*t)", "sin(alpha*t)", "exp(-2*t)*cos(beta*t)", "exp(-2*t)*sin(beta*t)"},
       {{"0", "-alpha", "0", "0"},
        {"alpha", "0", "0", "0"},
        {"0", "0", "-2", "-beta"},
        {"0", "0", "beta", "-2"}},
       {"1", "0", "1", "0"}, c);
  }
  {
    ParamConstraints c;
    c.beta_nonzero = true;
    c.exclusions = {{"beta", Rat(1)}, {"beta", Rat(-1)}};
    mk("(1c1c)b", "[cos t : sin t : cos bt : sin bt], b != 0, +-1", false, true, "t",
       Rat(0), Rat(2), {"cos(1*t)", "sin(1*t)", "cos(beta*t)", "sin(beta*t)"},
       {{"0", "-1", "0", "0"},
        {"1", "0", "0", "0"},
        {"0", "0", "0", "-beta"},
        {"0", "0", "beta", "0"}},
       {"1", "0", "1", "0"}, c);
  }
  return rows;
}

// ---------- jordan_nondegenerate ----------

namespace {

using Poly = std::vector<Rat>;  // coefficients, low degree first

Poly charpoly4(const std::vector<std::vector<Rat>>& a) {
  // Faddeev-LeVerrier over Q
  size_t n = 4;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
  Poly c(n + 1, Rat(0));
  c[n] = 1;
  std::vector<std::vector<Rat>> am(n, std::vector<Rat>(n, Rat(0)));
  for (size_t k = 1; k <= n; ++k) {
    for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    Rat tr(0);
    for (size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -tr / Rat((long)k);
    m = am;
  }
  return c;
}

std::vector<Rat> rational_roots(Poly p) {
  std::vector<Rat> roots;
  auto eval = [&](const Poly& q, const Rat& x) {
    Rat v(0);
    for (size_t k = q.size(); k-- > 0;) v = v * x + q[k];
    return v;
  };
  auto deflate = [&](Poly& q, const Rat& r) {
    Poly out(q.size() - 1, Rat(0));
    Rat carry = q.back();
    for (size_t k = q.size() - 1; k-- > 0;) {
      out[k] = carry;
      carry = q[k] + carry * r;
    }
    q = out;
  };
  for (;;) {
    while (p.size() > 1 && p[0] == 0) {
      roots.push_back(Rat(0));
      p.erase(p.begin());
    }
    if (p.size() <= 1) break;
    // scale to integer coefficients
    mpz_class den(1);
    for (const auto& c : p) den = den * c.get_den() / gcd(den, mpz_class(c.get_den()));
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(c.get_num() * (den / c.get_den()));
    mpz_class a0 = abs(ip.front()), an = abs(ip.back());
    if (a0 == 0) continue;
    bool found = false;
    std::vector<mpz_class> nd, dd;
    for (mpz_class d = 1; d * d <= a0; ++d)
      if (a0 % d == 0) { nd.push_back(d); nd.push_back(a0 / d); }
    for (mpz_class d = 1; d * d <= an; ++d)
      if (an % d == 0) { dd.push_back(d); dd.push_back(an / d); }
    for (const auto& nu : nd) {
      for (const auto& de : dd) {
        for (int sg = -1; sg <= 1 && !found; sg += 2) {
          Rat cand(nu * sg, de);
          cand.canonicalize();
          if (eval(p, cand) == 0) {
            roots.push_back(cand);
            deflate(p, cand);
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

// dim ker f(A) over Q, with f given low-first
size_t kernel_dim(const std::vector<std::vector<Rat>>& a, const Poly& f) {
  size_t n = 4;
  // evaluate f(A)
  std::vector<std::vector<Rat>> acc(n, std::vector<Rat>(n, Rat(0)));
  std::vector<std::vector<Rat>> pw(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) pw[i][i] = 1;
  for (size_t k = 0; k < f.size(); ++k) {
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) acc[i][j] += pw[i][j] * f[k];
    // pw *= a
    std::vector<std::vector<Rat>> nx(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Rat s(0);
        for (size_t l = 0; l < n; ++l) s += pw[i][l] * a[l][j];
        nx[i][j] = s;
      }
    pw = nx;
  }
  // rank of acc
  size_t r = 0;
  for (size_t c = 0; c < n && r < n; ++c) {
    size_t piv = n;
    for (size_t i = r; i < n; ++i)
      if (acc[i][c] != 0) { piv = i; break; }
    if (piv == n) continue;
    std::swap(acc[piv], acc[r]);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || acc[i][c] == 0) continue;
      Rat f2 = acc[i][c] / acc[r][c];
      for (size_t j = 0; j < n; ++j) acc[i][j] -= f2 * acc[r][j];
    }
    ++r;
  }
  return n - r;
}

}  // namespace

bool jordan_nondegenerate(const std::vector<std::vector<Rat>>& v) {
  Poly cp = charpoly4(v);
  // factor into irreducibles of degree <= 2
  struct Factor {
    Poly f;
    int mult;
  };
  std::vector<Factor> factors;
  Poly rem = cp;
  auto roots = rational_roots(rem);
  // group roots
  std::map<Rat, int> mult;
  for (const auto& r : roots) mult[r]++;
  for (const auto& [r, m] : mult) factors.push_back({{-r, Rat(1)}, m});
  // deflate all rational roots from cp
  {
    Poly q = cp;
    auto deflate = [&](Poly& p, const Rat& r) {
      Poly out(p.size() - 1, Rat(0));
      Rat carry = p.back();
      for (size_t k = p.size() - 1; k-- > 0;) {
        out[k] = carry;
        carry = p[k] + carry * r;
      }
      p = out;
    };
    for (const auto& r : roots) deflate(q, r);
    // q is root-free; factor into irreducible quadratics
    auto is_square = [](const Rat& x, Rat& root) {
      if (x < 0) return false;
      mpz_class n = x.get_num(), d = x.get_den();
      mpz_class sn = sqrt(n), sd = sqrt(d);
      if (sn * sn != n || sd * sd != d) return false;
      root = Rat(sn, sd);
      root.canonicalize();
      return true;
    };
    if (q.size() - 1 == 1 || (q.size() > 1 && q.size() - 1 == 3)) {
      throw std::domain_error(
          "jordan_nondegenerate: irreducible factor of degree > 2 (unsupported)");
    } else if (q.size() - 1 == 2) {
      Poly f = q;
      Rat lead = f[2];
      for (auto& c : f) c /= lead;
      factors.push_back({f, 1});
    } else if (q.size() - 1 == 4) {
      // monic quartic with no rational roots: try rational quadratic factors
      Rat lead = q[4];
      for (auto& c : q) c /= lead;
      // depress: x = y - q3/4
      Rat sh = q[3] / 4;
      // compute coefficients of p(y) = q(y - sh)
      auto shift_eval = [&](const Poly& p, const Rat& s) {
        // p(y - s) by direct convolution
        Poly acc{Rat(1)};  // (y-s)^0
        Poly res(p.size(), Rat(0));
        for (size_t k = 0; k < p.size(); ++k) {
          for (size_t j = 0; j < acc.size(); ++j) res[j] += p[k] * acc[j];
          // acc *= (y - s)
          Poly nx(acc.size() + 1, Rat(0));
          for (size_t j = 0; j < acc.size(); ++j) {
            nx[j + 1] += acc[j];
            nx[j] -= acc[j] * s;
          }
          acc = nx;
        }
        return res;
      };
      Poly dep = shift_eval(q, sh);
      Rat P = dep[2], Q = dep[1], R = dep[0];
      bool done = false;
      if (Q == 0) {
        // biquadratic y^4 + P y^2 + R = (y^2+u)(y^2+v)
        Rat disc = P * P - 4 * R, sq;
        if (is_square(disc, sq)) {
          Rat u = (P + sq) / 2, vq = (P - sq) / 2;
          // shift back: y = x + sh
          auto unshift = [&](const Poly& f) {
            Poly acc2{Rat(1)};
            Poly res(f.size(), Rat(0));
            for (size_t k = 0; k < f.size(); ++k) {
              for (size_t j = 0; j < acc2.size(); ++j) res[j] += f[k] * acc2[j];
              Poly nx(acc2.size() + 1, Rat(0));
              for (size_t j = 0; j < acc2.size(); ++j) {
                nx[j + 1] += acc2[j];
                nx[j] += acc2[j] * sh;
              }
              acc2 = nx;
            }
            return res;
          };
          factors.push_back({unshift({u, Rat(0), Rat(1)}), 1});
          factors.push_back({unshift({vq, Rat(0), Rat(1)}), 1});
          done = true;
        }
      }
      if (!done) {
        // resolvent: z^3 + 2P z^2 + (P^2 - 4R) z - Q^2 with z = w^2
        Poly res{-Q * Q, P * P - 4 * R, 2 * P, Rat(1)};
        auto zs = rational_roots(res);
        for (const auto& z : zs) {
          Rat w;
          Rat zz = z;
          if (!is_square(zz, w) || w == 0) continue;
          // y^4+Py^2+Qy+R = (y^2+wy+u)(y^2-wy+v), v-u = Q/w, u+v = P+z
          Rat vmu = Q / w, upv = P + z;
          Rat u = (upv - vmu) / 2, vv = (upv + vmu) / 2;
          auto unshift = [&](const Poly& f) {
            Poly acc2{Rat(1)};
            Poly res2(f.size(), Rat(0));
            for (size_t k = 0; k < f.size(); ++k) {
              for (size_t j = 0; j < acc2.size(); ++j) res2[j] += f[k] * acc2[j];
              Poly nx(acc2.size() + 1, Rat(0));
              for (size_t j = 0; j < acc2.size(); ++j) {
                nx[j + 1] += acc2[j];
                nx[j] += acc2[j] * sh;
              }
              acc2 = nx;
            }
            return res2;
          };
          factors.push_back({unshift({u, w, Rat(1)}), 1});
          factors.push_back({unshift({vv, -w, Rat(1)}), 1});
          done = true;
          break;
        }
      }
      if (!done)
        throw std::domain_error(
            "jordan_nondegenerate: quartic does not factor over Q into quadratics "
            "(irreducible factor of degree > 2, unsupported)");
    }
  }
  // geometric multiplicity of each irreducible factor must equal its degree
  for (const auto& [f, mlt] : factors) {
    size_t want = f.size() - 1;
    if (kernel_dim(v, f) != want) return false;
    (void)mlt;
  }
  return true;
}

TubeSymmetryReport tube_symmetry_algebra(const HomogeneousCurve& hc, std::optional<Rat> alpha,
                                         std::optional<Rat> beta) {
  if (hc.uses_alpha && !alpha) alpha = hc.sample_alpha;
  if (hc.uses_beta && !beta) beta = hc.sample_beta;
  // admissibility
  auto check_excl = [&](const std::string& sym, const Rat& val) {
    for (const auto& [s, x] : hc.curve().constraints.exclusions)
      if (s == sym && x == val)
        throw std::invalid_argument("tube_symmetry_algebra: inadmissible parameter " + sym +
                                    " = " + rat_str(val));
  };
  if (alpha) check_excl("alpha", *alpha);
  if (beta) check_excl("beta", *beta);
  if (hc.constraints.order_1_alpha_beta) {
    if (!(Rat(1) < *alpha && *alpha < *beta))
      throw std::invalid_argument("tube_symmetry_algebra: need 1 < alpha < beta");
  }
  if (hc.constraints.alpha_nonzero && alpha && *alpha == 0)
    throw std::invalid_argument("tube_symmetry_algebra: alpha = 0 excluded");
  if (hc.constraints.beta_nonzero && beta && *beta == 0)
    throw std::invalid_argument("tube_symmetry_algebra: beta = 0 excluded");

  Curve c = hc.curve(alpha, beta);
  TubeModel m = build_tube(c, TubeVariant::TANGENT_VARIETY);
  auto vg = hc.generator(alpha, beta);
  // traceless combination 4v - tr(v) Id, integral for integer parameters
  Rat tr(0);
  for (int i = 0; i < 4; ++i) tr += vg[(size_t)i][(size_t)i];
  std::vector<std::vector<Rat>> vt = vg;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      vt[(size_t)i][(size_t)j] = 4 * vg[(size_t)i][(size_t)j];
      if (i == j) vt[(size_t)i][(size_t)j] -= tr;
    }

  bool ok = true;
  ok = ok && is_cr_symmetry(m, SymCandidate::from_matrix(vt)).is_symmetry;
  // radial field rho = Id
  std::vector<std::vector<Rat>> id(4, std::vector<Rat>(4, Rat(0)));
  for (int i = 0; i < 4; ++i) id[(size_t)i][(size_t)i] = 1;
  ok = ok && is_cr_symmetry(m, SymCandidate::from_matrix(id)).is_symmetry;
  for (int k = 0; k < 4; ++k)
    ok = ok && is_cr_symmetry(m, SymCandidate::from_translation(k)).is_symmetry;

  // abstract algebra R^2 x R^4
  auto ctx = std::make_shared<UnitContext>(std::vector<std::string>{});
  std::vector<GradedBasisElement> basis = {{"v", 0, 0},  {"rho", 0, 1}, {"T0", -1, 2},
                                           {"T1", -1, 3}, {"T2", -1, 4}, {"T3", -1, 5}};
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (int k = 0; k < 4; ++k) {
    std::vector<BracketTerm> tv;
    for (int i = 0; i < 4; ++i)
      if (vt[(size_t)i][(size_t)k] != 0)
        tv.push_back({2 + i, Scalar::constant(ctx, GaussQ(-vt[(size_t)i][(size_t)k]))});
    if (!tv.empty()) table[{0, 2 + k}] = std::move(tv);
    table[{1, 2 + k}] = {{2 + k, Scalar::constant(ctx, GaussQ(-1))}};
  }
  TubeSymmetryReport rep{GradedLieAlgebra(ctx, basis, table), hc.segre,
                         alpha ? *alpha : Rat(0), beta ? *beta : Rat(0)};
  rep.generators_verified = ok;
  // spectrum of the generator matrix (eigenvalues over Q(i) when it splits)
  {
    Poly cp = charpoly4(vt);
    Poly q = cp;
    auto roots = rational_roots(q);
    if (roots.size() == 4) {
      std::vector<GaussQ> eig;
      for (const auto& r : roots) eig.push_back(GaussQ(r));
      std::sort(eig.begin(), eig.end());
      rep.ad_v_spectrum = eig;
    }
  }
  rep.maximal = hc.segre == "(4)" ||
                (hc.segre == "(1111)" && alpha && beta && rnc_spectrum_test(*alpha, *beta));
  return rep;
}

}  // namespace tanaka
