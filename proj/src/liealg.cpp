#include "tanaka/liealg.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tanaka {

GradedLieAlgebra::GradedLieAlgebra(
    UnitCtxPtr ctx, std::vector<GradedBasisElement> basis,
    std::map<std::pair<int, int>, std::vector<BracketTerm>> table, bool validate)
    : ctx_(std::move(ctx)), basis_(std::move(basis)), table_(std::move(table)) {
  for (size_t i = 0; i < basis_.size(); ++i) {
    int c = basis_[i].conj;
    if (c < 0 || c >= (int)basis_.size() || basis_[c].conj != (int)i)
      throw std::invalid_argument("liealg: conjPartner is not an involution");
    if (basis_[c].degree != basis_[i].degree)
      throw std::invalid_argument("liealg: conjugate partners must have equal degree");
  }
  for (auto& [key, terms] : table_) {
    if (key.first >= key.second)
      throw std::invalid_argument("liealg: bracket table keys must have i < j");
    std::sort(terms.begin(), terms.end(),
              [](const BracketTerm& a, const BracketTerm& b) { return a.target < b.target; });
  }
  if (validate) validate_table();
}

int GradedLieAlgebra::index_of(const std::string& name) const {
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].name == name) return (int)i;
  throw std::out_of_range("liealg: no basis element named '" + name + "'");
}

Vec GradedLieAlgebra::basis_vec(size_t i) const {
  Vec v = zero_vec();
  v[i] = Scalar::constant(ctx_, GaussQ(1));
  return v;
}

Vec GradedLieAlgebra::bracket_basis(int i, int j) const {
  Vec v = zero_vec();
  if (i == j) return v;
  bool flip = i > j;
  auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
  if (it == table_.end()) return v;
  for (const auto& t : it->second) v[t.target] = flip ? -t.coeff : t.coeff;
  return v;
}

Vec GradedLieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw std::invalid_argument("liealg: bracket dimension mismatch");
  Vec r = zero_vec();
  for (size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || i == j) continue;
      Vec b = bracket_basis((int)i, (int)j);
      Scalar c = x[i] * y[j];
      for (size_t k = 0; k < dim(); ++k)
        if (!b[k].is_zero()) r[k] += c * b[k];
    }
  }
  return r;
}

Vec GradedLieAlgebra::conj_vec(const Vec& x) const {
  Vec r = zero_vec();
  for (size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) r[basis_[i].conj] = x[i].conj();
  return r;
}

void GradedLieAlgebra::validate_table() const {
  for (const auto& [key, terms] : table_) {
    auto [i, j] = key;
    for (const auto& t : terms) {
      if (t.coeff.is_zero()) continue;
      if (basis_[t.target].degree != basis_[i].degree + basis_[j].degree)
        throw std::invalid_argument("liealg: degree additivity violated in [" +
                                    basis_[i].name + "," + basis_[j].name + "]");
    }
  }
  // conj-image of bracket(i,j) must equal bracket(conj i, conj j) entrywise
  for (size_t i = 0; i < dim(); ++i) {
    for (size_t j = i + 1; j < dim(); ++j) {
      Vec lhs = conj_vec(bracket_basis((int)i, (int)j));
      Vec rhs = bracket_basis(basis_[i].conj, basis_[j].conj);
      for (size_t k = 0; k < dim(); ++k)
        if (!(lhs[k] == rhs[k]))
          throw std::invalid_argument("liealg: conjugation compatibility violated in [" +
                                      basis_[i].name + "," + basis_[j].name + "]");
    }
  }
}

GradedLieAlgebra::JacobiReport GradedLieAlgebra::check_jacobi() const {
  JacobiReport rep;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = i + 1; j < dim(); ++j)
      for (size_t k = j + 1; k < dim(); ++k) {
        Vec xi = basis_vec(i), xj = basis_vec(j), xk = basis_vec(k);
        Vec r = bracket(bracket(xi, xj), xk);
        Vec r2 = bracket(bracket(xj, xk), xi);
        Vec r3 = bracket(bracket(xk, xi), xj);
        bool zero = true;
        for (size_t m = 0; m < dim(); ++m) {
          r[m] += r2[m] + r3[m];
          if (!r[m].is_zero()) zero = false;
        }
        if (!zero) {
          rep.pass = false;
          rep.failures.push_back({(int)i, (int)j, (int)k, r});
        }
      }
  return rep;
}

std::vector<Vec> GradedLieAlgebra::ad_matrix(const Vec& x) const {
  std::vector<Vec> cols;
  for (size_t j = 0; j < dim(); ++j) cols.push_back(bracket(x, basis_vec(j)));
  return cols;
}

namespace {

// Characteristic polynomial of a GaussQ matrix via Faddeev-LeVerrier;
// coefficients c[0] + c[1] x + ... + c[n] x^n.
std::vector<GaussQ> charpoly(const std::vector<std::vector<GaussQ>>& a) {
  size_t n = a.size();
  std::vector<std::vector<GaussQ>> m(n, std::vector<GaussQ>(n));
  std::vector<GaussQ> c(n + 1);
  c[n] = GaussQ(1);
  // M_0 = 0; M_{k} = A*M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A*M_k)/k
  std::vector<std::vector<GaussQ>> am(n, std::vector<GaussQ>(n));
  for (size_t k = 1; k <= n; ++k) {
    for (size_t i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        GaussQ s;
        for (size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        am[i][j] = s;
      }
    GaussQ tr;
    for (size_t i = 0; i < n; ++i) tr += am[i][i];
    c[n - k] = -(tr / GaussQ(Rat((long)k)));
    m = am;
  }
  return c;
}

// All Gaussian-rational roots of a monic-ish poly with GaussQ coefficients,
// found by scaling to Gaussian integers and testing divisor candidates of
// the constant term. Returns nullopt if the polynomial does not split.
std::optional<std::vector<GaussQ>> split_roots(std::vector<GaussQ> c) {
  std::vector<GaussQ> roots;
  // strip zero roots
  size_t deg = c.size() - 1;
  auto eval = [&](const std::vector<GaussQ>& p, const GaussQ& x) {
    GaussQ v;
    for (size_t k = p.size(); k-- > 0;) v = v * x + p[k];
    return v;
  };
  auto deflate = [&](std::vector<GaussQ>& p, const GaussQ& r) {
    // synthetic division by (x - r)
    std::vector<GaussQ> q(p.size() - 1);
    GaussQ carry = p.back();
    for (size_t k = p.size() - 1; k-- > 0;) {
      q[k] = carry;
      carry = p[k] + carry * r;
    }
    p = q;
  };
  while (deg > 0) {
    if (c[0].is_zero()) {
      roots.push_back(GaussQ(0));
      c.erase(c.begin());
      --deg;
      continue;
    }
    // candidate roots p/q with p | num-content, q | den-content scaled;
    // enumerate divisors of the integer norm of c0/cn
    GaussQ ratio = c[0] / c[deg];
    mpz_class num = ratio.re.get_num() * ratio.re.get_num() +
                    ratio.im.get_num() * ratio.im.get_num();
    mpz_class den = ratio.re.get_den() * ratio.im.get_den();
    if (num == 0) num = 1;
    std::vector<mpz_class> numd, dend;
    for (mpz_class d = 1; d * d <= num; ++d)
      if (num % d == 0) { numd.push_back(d); numd.push_back(num / d); }
    for (mpz_class d = 1; d * d <= den; ++d)
      if (den % d == 0) { dend.push_back(d); dend.push_back(den / d); }
    dend.push_back(1);
    bool found = false;
    for (const auto& p : numd) {
      for (const auto& q : dend) {
        for (int sign = 0; sign < 4 && !found; ++sign) {
          Rat v(p, q);
          v.canonicalize();
          GaussQ cand = (sign == 0)   ? GaussQ(v)
                        : (sign == 1) ? GaussQ(-v)
                        : (sign == 2) ? GaussQ(Rat(0), v)
                                      : GaussQ(Rat(0), -v);
          if (eval(c, cand).is_zero()) {
            roots.push_back(cand);
            deflate(c, cand);
            --deg;
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) return std::nullopt;
  }
  return roots;
}

}  // namespace

std::vector<GaussQ> GradedLieAlgebra::ad_spectrum(int i) const {
  auto cols = ad_matrix(basis_vec(i));
  size_t n = dim();
  std::vector<std::vector<GaussQ>> a(n, std::vector<GaussQ>(n));
  for (size_t col = 0; col < n; ++col)
    for (size_t row = 0; row < n; ++row) {
      const Scalar& s = cols[col][row];
      if (s.is_zero()) {
        a[row][col] = GaussQ(0);
      } else if (s.is_constant()) {
        a[row][col] = s.constant_value();
      } else {
        throw std::domain_error("ad_spectrum: matrix entries contain unit symbols");
      }
    }
  // Diagonal matrix: read off directly.
  bool diag = true;
  for (size_t r = 0; r < n && diag; ++r)
    for (size_t c = 0; c < n; ++c)
      if (r != c && !a[r][c].is_zero()) { diag = false; break; }
  std::vector<GaussQ> eig;
  if (diag) {
    for (size_t r = 0; r < n; ++r) eig.push_back(a[r][r]);
  } else {
    auto roots = split_roots(charpoly(a));
    if (!roots)
      throw std::domain_error("ad_spectrum: ad(" + basis_[i].name +
                              ") is not triangularizable over Q(i)");
    eig = *roots;
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

namespace {

std::vector<Vec> canonical_span(const GradedLieAlgebra& g, const std::vector<Vec>& vecs) {
  if (vecs.empty()) return {};
  SMat m;
  for (const auto& v : vecs) {
    SRow r;
    for (const auto& s : v) r.push_back(SFrac(s));
    m.push_back(std::move(r));
  }
  RrefResult rr = rref(std::move(m));
  std::vector<Vec> out;
  for (size_t i = 0; i < rr.pivot_cols.size(); ++i) {
    Vec v = g.zero_vec();
    bool nonzero = false;
    for (size_t j = 0; j < g.dim(); ++j) {
      const SFrac& e = rr.mat[i][j];
      if (!e.is_zero()) {
        // entries after rref over Frac(Scalar): clear denominators
        v[j] = e.num * e.den.inverse();
        nonzero = true;
      }
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Vec> GradedLieAlgebra::derived_subalgebra() const {
  std::vector<Vec> vals;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = i + 1; j < dim(); ++j) vals.push_back(bracket_basis((int)i, (int)j));
  return canonical_span(*this, vals);
}

std::vector<Vec> GradedLieAlgebra::center() const {
  // x central iff [x, e_j] = 0 for all j: stack all ad-rows.
  SMat m;
  for (size_t j = 0; j < dim(); ++j) {
    // row block: for each output coordinate k, row over unknowns i
    for (size_t k = 0; k < dim(); ++k) {
      SRow row;
      for (size_t i = 0; i < dim(); ++i) {
        Vec b = bracket_basis((int)i, (int)j);
        row.push_back(SFrac(b[k]));
      }
      m.push_back(std::move(row));
    }
  }
  KernelResult kr = kernel(m);
  std::vector<Vec> out;
  for (const auto& row : kr.basis) {
    Vec v = zero_vec();
    for (size_t i = 0; i < dim(); ++i)
      if (!row[i].is_zero()) v[i] = row[i].num * row[i].den.inverse();
    out.push_back(std::move(v));
  }
  return out;
}

std::string GradedLieAlgebra::vec_str(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << v[i].str() << ")*" << basis_[i].name;
  }
  if (first) os << "0";
  return os.str();
}

GradedLieAlgebra realify(const GradedLieAlgebra& g) {
  // Pair up conjugate partners; keep self-paired elements.
  std::vector<GradedBasisElement> basis;
  std::vector<Vec> embed;  // new basis expressed in old complexified basis
  std::vector<int> seen(g.dim(), 0);
  UnitCtxPtr ctx = g.ctx();
  Scalar one = Scalar::constant(ctx, GaussQ(1));
  Scalar I = Scalar::constant(ctx, GaussQ::i());
  for (size_t i = 0; i < g.dim(); ++i) {
    if (seen[i]) continue;
    int c = g.elem(i).conj;
    if (c == (int)i) {
      basis.push_back({g.elem(i).name, g.elem(i).degree, (int)basis.size()});
      Vec v = g.zero_vec();
      v[i] = one;
      embed.push_back(v);
      seen[i] = 1;
    } else {
      seen[i] = seen[c] = 1;
      int re_idx = (int)basis.size();
      basis.push_back({"Re_" + g.elem(i).name, g.elem(i).degree, re_idx});
      basis.push_back({"Im_" + g.elem(i).name, g.elem(i).degree, re_idx + 1});
      Vec vr = g.zero_vec(), vi = g.zero_vec();
      vr[i] = one;
      vr[c] = one;  // Z + Z~
      vi[i] = I;
      vi[c] = -I;  // i(Z - Z~)
      embed.push_back(vr);
      embed.push_back(vi);
    }
  }
  // change of basis: solve for structure constants in the new basis
  SMat bmat;  // columns = new basis vectors in old coords
  size_t n = g.dim();
  for (size_t r = 0; r < n; ++r) {
    SRow row;
    for (size_t cix = 0; cix < embed.size(); ++cix) row.push_back(SFrac(embed[cix][r]));
    bmat.push_back(std::move(row));
  }
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (size_t i = 0; i < embed.size(); ++i) {
    for (size_t j = i + 1; j < embed.size(); ++j) {
      Vec br = g.bracket(embed[i], embed[j]);
      SRow rhs;
      for (size_t r = 0; r < n; ++r) rhs.push_back(SFrac(br[r]));
      auto x = solve(bmat, rhs);
      if (!x) throw std::domain_error("realify: bracket not expressible in new basis");
      std::vector<BracketTerm> terms;
      for (size_t k = 0; k < x->size(); ++k) {
        if ((*x)[k].is_zero()) continue;
        Scalar cs = (*x)[k].num * (*x)[k].den.inverse();
        if (!(cs.conj() == cs))
          throw std::domain_error("realify: non-real structure constant");
        terms.push_back({(int)k, cs});
      }
      if (!terms.empty()) table[{(int)i, (int)j}] = std::move(terms);
    }
  }
  return GradedLieAlgebra(ctx, std::move(basis), std::move(table));
}

GradedLieAlgebra complexify(const GradedLieAlgebra& g) {
  // Inverse of realify: (X, JX) pairs named Re_*, Im_* turn back into
  // conjugate pairs Z = (X - i JX)/2, Z~ = (X + i JX)/2.
  std::vector<GradedBasisElement> basis;
  std::vector<Vec> embed;
  UnitCtxPtr ctx = g.ctx();
  Scalar half = Scalar::constant(ctx, GaussQ(Rat(1, 2)));
  Scalar ihalf = Scalar::constant(ctx, GaussQ(Rat(0), Rat(1, 2)));
  std::vector<bool> seen(g.dim(), false);
  for (size_t i = 0; i < g.dim(); ++i) {
    if (seen[i]) continue;
    const auto& e = g.elem(i);
    if (e.name.rfind("Re_", 0) == 0 && i + 1 < g.dim() &&
        g.elem(i + 1).name == "Im_" + e.name.substr(3)) {
      seen[i] = seen[i + 1] = true;
      std::string base = e.name.substr(3);
      int zi = (int)basis.size();
      basis.push_back({base, e.degree, zi + 1});
      basis.push_back({"conj_" + base, e.degree, zi});
      Vec z = g.zero_vec(), zb = g.zero_vec();
      z[i] = half;
      z[i + 1] = -ihalf;
      zb[i] = half;
      zb[i + 1] = ihalf;
      embed.push_back(z);
      embed.push_back(zb);
    } else {
      seen[i] = true;
      basis.push_back({e.name, e.degree, (int)basis.size()});
      Vec v = g.zero_vec();
      v[i] = Scalar::constant(ctx, GaussQ(1));
      embed.push_back(v);
    }
  }
  SMat bmat;
  for (size_t r = 0; r < g.dim(); ++r) {
    SRow row;
    for (size_t c = 0; c < embed.size(); ++c) row.push_back(SFrac(embed[c][r]));
    bmat.push_back(std::move(row));
  }
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (size_t i = 0; i < embed.size(); ++i)
    for (size_t j = i + 1; j < embed.size(); ++j) {
      Vec br = g.bracket(embed[i], embed[j]);
      SRow rhs;
      for (size_t r = 0; r < g.dim(); ++r) rhs.push_back(SFrac(br[r]));
      auto x = solve(bmat, rhs);
      if (!x) throw std::domain_error("complexify: bracket not expressible");
      std::vector<BracketTerm> terms;
      for (size_t k = 0; k < x->size(); ++k)
        if (!(*x)[k].is_zero())
          terms.push_back({(int)k, (*x)[k].num * (*x)[k].den.inverse()});
      if (!terms.empty()) table[{(int)i, (int)j}] = std::move(terms);
    }
  return GradedLieAlgebra(ctx, std::move(basis), std::move(table));
}

GradedLieAlgebra liealg_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> units;
  if (j.contains("units"))
    for (const auto& u : j["units"]) units.push_back(u.get<std::string>());
  auto ctx = std::make_shared<UnitContext>(units);
  std::vector<GradedBasisElement> basis;
  std::map<std::string, int> by_name;
  for (const auto& b : j.at("basis")) {
    GradedBasisElement e;
    e.name = b.at("name").get<std::string>();
    e.degree = b.at("degree").get<int>();
    by_name[e.name] = (int)basis.size();
    basis.push_back(e);
  }
  int idx = 0;
  for (const auto& b : j.at("basis")) {
    std::string cn = b.at("conj").get<std::string>();
    if (!by_name.count(cn))
      throw std::invalid_argument("liealg.v1: unknown conj partner '" + cn + "'");
    basis[idx++].conj = by_name[cn];
  }
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  if (j.contains("brackets"))
    for (const auto& br : j["brackets"]) {
      int x = by_name.at(br.at("x").get<std::string>());
      int y = by_name.at(br.at("y").get<std::string>());
      std::vector<BracketTerm> terms;
      for (const auto& t : br.at("terms")) {
        int z = by_name.at(t.at("z").get<std::string>());
        Scalar c = Scalar::parse(ctx, t.at("c").get<std::string>());
        terms.push_back({z, c});
      }
      if (x > y) {
        for (auto& t : terms) t.coeff = -t.coeff;
        std::swap(x, y);
      }
      if (x == y) throw std::invalid_argument("liealg.v1: bracket [x,x]");
      table[{x, y}] = std::move(terms);
    }
  return GradedLieAlgebra(ctx, std::move(basis), std::move(table));
}

GradedLieAlgebra liealg_load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open fixture: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return liealg_from_json(ss.str());
}

std::string liealg_to_json(const GradedLieAlgebra& g) {
  nlohmann::json j;
  j["schema"] = "liealg.v1";
  j["units"] = nlohmann::json::array();
  if (g.ctx())
    for (size_t k = 0; k < g.ctx()->size(); ++k) j["units"].push_back(g.ctx()->name(k));
  j["basis"] = nlohmann::json::array();
  for (const auto& b : g.basis())
    j["basis"].push_back({{"name", b.name},
                          {"degree", b.degree},
                          {"conj", g.elem(b.conj).name}});
  j["brackets"] = nlohmann::json::array();
  for (const auto& [key, terms] : g.table()) {
    nlohmann::json br;
    br["x"] = g.elem(key.first).name;
    br["y"] = g.elem(key.second).name;
    br["terms"] = nlohmann::json::array();
    for (const auto& t : terms)
      br["terms"].push_back({{"z", g.elem(t.target).name}, {"c", t.coeff.str()}});
    j["brackets"].push_back(br);
  }
  return j.dump(2);
}

}  // namespace tanaka
