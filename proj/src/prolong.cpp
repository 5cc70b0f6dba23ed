#include "tanaka/prolong.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tanaka {

SymbolAlgebra::SymbolAlgebra(GradedLieAlgebra g) : g_(std::move(g)) {
  int mindeg = 0;
  for (size_t i = 0; i < g_.dim(); ++i) {
    int d = g_.elem(i).degree;
    if (d > 0) throw std::invalid_argument("SymbolAlgebra: positive degree in input");
    layers_[d].push_back((int)i);
    if (d < 0) neg_.push_back((int)i);
    mindeg = std::min(mindeg, d);
  }
  depth_ = -mindeg;
  // fundamentality: [g_{-1}, g_{-k}] spans g_{-k-1}
  for (int k = 1; k < depth_; ++k) {
    const auto& top = layers_[-1];
    const auto& mid = layers_[-k];
    const auto& low = layers_[-k - 1];
    if (low.empty()) continue;
    SMat rows;
    for (int i : top)
      for (int j : mid) {
        Vec b = g_.bracket_basis(i, j);
        SRow r;
        for (int l : low) r.push_back(SFrac(b[l]));
        rows.push_back(std::move(r));
      }
    if (rank(rows) != low.size())
      throw std::invalid_argument("SymbolAlgebra: negative part is not fundamental");
  }
  // g0 must act by derivations; brackets must close degreewise. Both follow
  // from the table invariants plus Jacobi, which we require here.
  if (!g_.check_jacobi().pass)
    throw std::invalid_argument("SymbolAlgebra: input fails the Jacobi identity");
}

const std::vector<int>& SymbolAlgebra::degree_layer(int d) const {
  static const std::vector<int> empty;
  auto it = layers_.find(d);
  return it == layers_.end() ? empty : it->second;
}

Prolongation::Prolongation(SymbolAlgebra sym) : sym_(std::move(sym)) {}

size_t Prolongation::ext_dim() const {
  size_t n = sym_.alg().dim();
  for (const auto& l : levels_) n += l.dim();
  return n;
}

int Prolongation::ext_degree(size_t e) const {
  size_t n = sym_.alg().dim();
  if (e < n) return sym_.alg().elem(e).degree;
  e -= n;
  for (const auto& l : levels_) {
    if (e < l.dim()) return l.k;
    e -= l.dim();
  }
  throw std::out_of_range("ext_degree");
}

std::string Prolongation::ext_name(size_t e) const {
  size_t n = sym_.alg().dim();
  if (e < n) return sym_.alg().elem(e).name;
  e -= n;
  for (const auto& l : levels_) {
    if (e < l.dim()) return "P" + std::to_string(l.k) + "_" + std::to_string(e + 1);
    e -= l.dim();
  }
  throw std::out_of_range("ext_name");
}

Vec Prolongation::ext_zero() const { return Vec(ext_dim(), Scalar(sym_.alg().ctx())); }

// Extended-basis position of the first element of level k.
static size_t level_offset(const SymbolAlgebra& sym, const std::vector<ProlongLevel>& levels,
                           int k) {
  size_t off = sym.alg().dim();
  for (const auto& l : levels) {
    if (l.k == k) return off;
    off += l.dim();
  }
  throw std::out_of_range("level_offset");
}

Vec Prolongation::ext_bracket(size_t a, size_t b) {
  if (a == b) return ext_zero();
  bool flip = false;
  if (a > b) {
    std::swap(a, b);
    flip = true;
  }
  auto key = std::make_pair(a, b);
  auto it = bracket_cache_.find(key);
  if (it == bracket_cache_.end()) {
    const auto& g = sym_.alg();
    size_t n = g.dim();
    Vec r = ext_zero();
    int da = ext_degree(a), db = ext_degree(b);
    if (a < n && b < n) {
      Vec s = g.bracket_basis((int)a, (int)b);
      for (size_t i = 0; i < n; ++i) r[i] = s[i];
    } else if (a < n && b >= n) {
      // [x, phi] with phi a prolongation element
      int k = db;
      size_t off = level_offset(sym_, levels_, k);
      const ProlongMap& phi = levels_[(size_t)k - 1].basis[b - off];
      if (da < 0) {
        // [x, phi] = -phi(x)
        const auto& neg = sym_.negative();
        size_t pos = 0;
        bool found = false;
        for (; pos < neg.size(); ++pos)
          if ((size_t)neg[pos] == a) { found = true; break; }
        if (!found) throw std::logic_error("ext_bracket: negative position lookup");
        const Vec& val = phi.value[pos];
        for (size_t i = 0; i < val.size(); ++i) r[i] = -val[i];
      } else {
        // a in g0: [a, phi](x) = [a, phi(x)] - phi([a, x])
        ProlongMap chi;
        const auto& neg = sym_.negative();
        for (size_t pos = 0; pos < neg.size(); ++pos) {
          Vec acc = ext_zero();
          const Vec& phix = phi.value[pos];
          for (size_t t = 0; t < phix.size(); ++t) {
            if (phix[t].is_zero()) continue;
            Vec br = ext_bracket(a, t);
            for (size_t i = 0; i < br.size(); ++i)
              if (!br[i].is_zero()) acc[i] += phix[t] * br[i];
          }
          Vec ax = g.bracket_basis((int)a, neg[pos]);  // stays negative
          for (size_t z = 0; z < n; ++z) {
            if (ax[z].is_zero()) continue;
            size_t zpos = 0;
            for (; zpos < neg.size(); ++zpos)
              if ((size_t)neg[zpos] == z) break;
            if (zpos == neg.size())
              throw std::logic_error("ext_bracket: g0 action left the negative part");
            const Vec& phiz = phi.value[zpos];
            for (size_t i = 0; i < phiz.size(); ++i)
              if (!phiz[i].is_zero()) acc[i] -= ax[z] * phiz[i];
          }
          acc.resize(ext_dim(), Scalar(g.ctx()));
          chi.value.push_back(std::move(acc));
        }
        std::vector<Scalar> coeffs = express_in_level(k, chi);
        size_t koff = level_offset(sym_, levels_, k);
        for (size_t i = 0; i < coeffs.size(); ++i) r[koff + i] = coeffs[i];
      }
    } else {
      // both prolongation elements: [phi, psi](x) = [phi, psi(x)] - [psi, phi(x)]
      int k = da, l = db;
      size_t offa = level_offset(sym_, levels_, k);
      size_t offb = level_offset(sym_, levels_, l);
      const ProlongMap& phi = levels_[(size_t)k - 1].basis[a - offa];
      const ProlongMap& psi = levels_[(size_t)l - 1].basis[b - offb];
      const auto& neg = sym_.negative();
      ProlongMap chi;
      for (size_t pos = 0; pos < neg.size(); ++pos) {
        Vec acc = ext_zero();
        const Vec& psix = psi.value[pos];
        for (size_t t = 0; t < psix.size(); ++t) {
          if (psix[t].is_zero()) continue;
          Vec br = ext_bracket(a, t);
          for (size_t i = 0; i < br.size(); ++i)
            if (!br[i].is_zero()) acc[i] += psix[t] * br[i];
        }
        const Vec& phix = phi.value[pos];
        for (size_t t = 0; t < phix.size(); ++t) {
          if (phix[t].is_zero()) continue;
          Vec br = ext_bracket(b, t);
          for (size_t i = 0; i < br.size(); ++i)
            if (!br[i].is_zero()) acc[i] -= phix[t] * br[i];
        }
        acc.resize(ext_dim(), Scalar(g.ctx()));
        chi.value.push_back(std::move(acc));
      }
      int kl = k + l;
      bool have = false;
      for (const auto& lev : levels_)
        if (lev.k == kl && lev.dim() > 0) have = true;
      if (!have) {
        // target level vanishes (or is out of range): bracket must be zero
        for (const auto& v : chi.value)
          for (const auto& c : v)
            if (!c.is_zero())
              throw std::logic_error("ext_bracket: nonzero bracket into vanished level");
      } else {
        std::vector<Scalar> coeffs = express_in_level(kl, chi);
        size_t off = level_offset(sym_, levels_, kl);
        for (size_t i = 0; i < coeffs.size(); ++i) r[off + i] = coeffs[i];
      }
    }
    it = bracket_cache_.emplace(key, std::move(r)).first;
  }
  Vec out = it->second;
  out.resize(ext_dim(), Scalar(sym_.alg().ctx()));
  if (flip)
    for (auto& c : out) c = -c;
  return out;
}

std::vector<Scalar> Prolongation::express_in_level(int k, const ProlongMap& m) const {
  const ProlongLevel& lev = levels_.at((size_t)k - 1);
  const auto& neg = sym_.negative();
  size_t tdim = 0;
  for (const auto& b : lev.basis)
    for (const auto& v : b.value) tdim = std::max(tdim, v.size());
  for (const auto& v : m.value) tdim = std::max(tdim, v.size());
  SMat mat;
  SRow rhs;
  for (size_t pos = 0; pos < neg.size(); ++pos) {
    for (size_t t = 0; t < tdim; ++t) {
      SRow row;
      for (const auto& b : lev.basis) {
        Scalar e = t < b.value[pos].size() ? b.value[pos][t] : Scalar(sym_.alg().ctx());
        row.push_back(SFrac(e));
      }
      Scalar v = t < m.value[pos].size() ? m.value[pos][t] : Scalar(sym_.alg().ctx());
      rhs.push_back(SFrac(v));
      mat.push_back(std::move(row));
    }
  }
  auto x = solve(mat, rhs);
  if (!x) throw std::logic_error("express_in_level: map not in the computed level");
  std::vector<Scalar> out;
  for (const auto& f : *x) out.push_back(f.num * f.den.inverse());
  return out;
}

const ProlongLevel& Prolongation::step() {
  const auto& g = sym_.alg();
  int k = (int)levels_.size() + 1;
  const auto& neg = sym_.negative();

  // Unknowns: coefficient of target T in phi(x), deg(T) = deg(x) + k.
  struct Unknown {
    size_t pos;
    size_t target;
  };
  std::vector<Unknown> unknowns;
  size_t edim = ext_dim();
  for (size_t pos = 0; pos < neg.size(); ++pos) {
    int dx = g.elem(neg[pos]).degree;
    for (size_t t = 0; t < edim; ++t)
      if (ext_degree(t) == dx + k) unknowns.push_back({pos, t});
  }

  // Derivation condition phi([x,y]) = [phi(x),y] + [x,phi(y)], one block of
  // rows per negative pair, one row per output component.
  SMat mat;
  for (size_t pi = 0; pi < neg.size(); ++pi) {
    for (size_t pj = pi + 1; pj < neg.size(); ++pj) {
      int xi = neg[pi], yj = neg[pj];
      std::vector<std::map<size_t, Scalar>> rowcoef(edim);
      Vec bxy = g.bracket_basis(xi, yj);
      for (size_t z = 0; z < g.dim(); ++z) {
        if (bxy[z].is_zero()) continue;
        size_t zpos = 0;
        for (; zpos < neg.size(); ++zpos)
          if ((size_t)neg[zpos] == z) break;
        if (zpos == neg.size()) throw std::logic_error("step: bracket left negative part");
        for (size_t u = 0; u < unknowns.size(); ++u)
          if (unknowns[u].pos == zpos) {
            auto itc = rowcoef[unknowns[u].target].find(u);
            if (itc == rowcoef[unknowns[u].target].end())
              rowcoef[unknowns[u].target][u] = bxy[z];
            else
              itc->second += bxy[z];
          }
      }
      for (size_t u = 0; u < unknowns.size(); ++u) {
        if (unknowns[u].pos == pi) {
          Vec br = ext_bracket(unknowns[u].target, (size_t)yj);  // -[phi(x),y] => +[T,y] sign
          for (size_t i = 0; i < br.size(); ++i)
            if (!br[i].is_zero()) {
              auto itc = rowcoef[i].find(u);
              if (itc == rowcoef[i].end()) rowcoef[i][u] = -br[i];
              else itc->second -= br[i];
            }
        }
        if (unknowns[u].pos == pj) {
          Vec br = ext_bracket(unknowns[u].target, (size_t)xi);
          for (size_t i = 0; i < br.size(); ++i)
            if (!br[i].is_zero()) {
              auto itc = rowcoef[i].find(u);
              if (itc == rowcoef[i].end()) rowcoef[i][u] = br[i];
              else itc->second += br[i];
            }
        }
      }
      for (size_t i = 0; i < edim; ++i) {
        if (rowcoef[i].empty()) continue;
        SRow row(unknowns.size(), SFrac::zero(g.ctx()));
        bool nz = false;
        for (const auto& [u, c] : rowcoef[i])
          if (!c.is_zero()) {
            row[u] = SFrac(c);
            nz = true;
          }
        if (nz) mat.push_back(std::move(row));
      }
    }
  }

  ProlongLevel lev;
  lev.k = k;
  if (!unknowns.empty()) {
    KernelResult kr = kernel(mat);
    genericity_.insert(genericity_.end(), kr.genericity.begin(), kr.genericity.end());
    for (const auto& kv : kr.basis) {
      ProlongMap m;
      m.value.assign(neg.size(), Vec(edim, Scalar(g.ctx())));
      for (size_t u = 0; u < unknowns.size(); ++u)
        if (!kv[u].is_zero())
          m.value[unknowns[u].pos][unknowns[u].target] = kv[u].num * kv[u].den.inverse();
      lev.basis.push_back(std::move(m));
    }
  }
  resolve_conjugation(lev);
  levels_.push_back(std::move(lev));
  return levels_.back();
}

ProlongMap Prolongation::conj_map(const ProlongLevel& lev, size_t bi) const {
  // conj(phi) = conj o phi o conj. Level-valued targets use the conj
  // partners already resolved for lower levels.
  const auto& g = sym_.alg();
  const auto& neg = sym_.negative();
  size_t edim = ext_dim();
  ProlongMap cm;
  cm.value.assign(neg.size(), Vec(edim, Scalar(g.ctx())));
  for (size_t pos = 0; pos < neg.size(); ++pos) {
    int cx = g.elem((size_t)neg[pos]).conj;
    size_t cpos = 0;
    for (; cpos < neg.size(); ++cpos)
      if (neg[cpos] == cx) break;
    const Vec& v = lev.basis[bi].value[cpos];
    for (size_t t = 0; t < v.size(); ++t) {
      if (v[t].is_zero()) continue;
      size_t ct;
      if (t < g.dim()) {
        ct = (size_t)g.elem(t).conj;
      } else {
        size_t off = g.dim();
        ct = edim;  // sentinel
        for (const auto& prev : levels_) {
          if (t < off + prev.dim()) {
            ct = off + (size_t)prev.conj.at(t - off);
            break;
          }
          off += prev.dim();
        }
        if (ct == edim)
          throw std::logic_error("conj_map: unresolved level target");
      }
      cm.value[pos][ct] += v[t].conj();
    }
  }
  return cm;
}

void Prolongation::resolve_conjugation(ProlongLevel& lev) const {
  const auto& g = sym_.alg();
  size_t n = lev.dim();
  lev.conj.assign(n, -1);
  if (n == 0) return;
  // First try: conj permutes the canonical basis exactly.
  std::vector<std::vector<Scalar>> cmat;
  {
    // temporarily register lev to make express_in_level applicable
    auto* self = const_cast<Prolongation*>(this);
    self->levels_.push_back(lev);
    bool exact = true;
    for (size_t bi = 0; bi < n && exact; ++bi) {
      ProlongMap cm = conj_map(lev, bi);
      std::vector<Scalar> coeffs = express_in_level(lev.k, cm);
      cmat.push_back(coeffs);
      int partner = -1;
      for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        if (partner != -1 || !(coeffs[j] == Scalar::constant(g.ctx(), GaussQ(1)))) {
          partner = -2;
          break;
        }
        partner = (int)j;
      }
      if (partner >= 0) lev.conj[bi] = partner;
      else exact = false;
    }
    if (!exact) {
      // Adapt: replace the basis by independent self-conjugate combinations
      // v + conj(v) and i(v - conj(v)).
      std::vector<ProlongMap> cands;
      Scalar I = Scalar::constant(g.ctx(), GaussQ::i());
      for (size_t bi = 0; bi < n; ++bi) {
        ProlongMap cm = conj_map(lev, bi);
        ProlongMap plus = lev.basis[bi], minus = lev.basis[bi];
        for (size_t pos = 0; pos < plus.value.size(); ++pos)
          for (size_t t = 0; t < plus.value[pos].size(); ++t) {
            Scalar cv = t < cm.value[pos].size() ? cm.value[pos][t] : Scalar(g.ctx());
            Scalar orig = plus.value[pos][t];
            plus.value[pos][t] = orig + cv;
            minus.value[pos][t] = I * (orig - cv);
          }
        cands.push_back(std::move(plus));
        cands.push_back(std::move(minus));
      }
      // greedy independent selection
      SMat rows;
      std::vector<ProlongMap> chosen;
      for (auto& cand : cands) {
        SRow flat;
        for (const auto& v : cand.value)
          for (const auto& c : v) flat.push_back(SFrac(c));
        rows.push_back(flat);
        if (rank(rows) == rows.size()) {
          chosen.push_back(std::move(cand));
          if (chosen.size() == n) break;
        } else {
          rows.pop_back();
        }
      }
      if (chosen.size() != n)
        throw std::logic_error("resolve_conjugation: adaptation failed to span the level");
      lev.basis = std::move(chosen);
      for (size_t bi = 0; bi < n; ++bi) lev.conj[bi] = (int)bi;
    }
    self->levels_.pop_back();
    self->bracket_cache_.clear();
  }
}

GradedLieAlgebra Prolongation::assemble() const {
  const auto& g = sym_.alg();
  size_t edim = ext_dim();
  std::vector<GradedBasisElement> basis;
  for (size_t i = 0; i < g.dim(); ++i) basis.push_back(g.elem(i));

  auto* self = const_cast<Prolongation*>(this);
  size_t off = g.dim();
  for (const auto& lev : levels_) {
    for (size_t bi = 0; bi < lev.dim(); ++bi)
      basis.push_back({ext_name(off + bi), lev.k, (int)(off + (size_t)lev.conj.at(bi))});
    off += lev.dim();
  }

  std::map<std::pair<int, int>, std::vector<BracketTerm>> table;
  for (size_t a = 0; a < edim; ++a)
    for (size_t b = a + 1; b < edim; ++b) {
      Vec br = self->ext_bracket(a, b);
      std::vector<BracketTerm> terms;
      for (size_t t = 0; t < edim; ++t)
        if (!br[t].is_zero()) terms.push_back({(int)t, br[t]});
      if (!terms.empty()) table[{(int)a, (int)b}] = std::move(terms);
    }
  return GradedLieAlgebra(g.ctx(), std::move(basis), std::move(table));
}

ProlongReport tanaka_prolong(const SymbolAlgebra& sym, int kmax, Prolongation* out) {
  Prolongation pr(sym);
  ProlongReport rep;
  for (int k = 1; k <= kmax; ++k) {
    const ProlongLevel& lev = pr.step();
    rep.dims.push_back(lev.dim());
    if (lev.dim() == 0) {
      rep.terminated = true;  // fundamentality kills all higher levels
      for (int k2 = k + 1; k2 <= kmax; ++k2) rep.dims.push_back(0);
      break;
    }
  }
  rep.total = sym.alg().dim();
  for (auto d : rep.dims) rep.total += d;
  for (const auto& lev : pr.levels()) {
    for (size_t bi = 0; bi < lev.dim(); ++bi) {
      std::ostringstream os;
      os << "P" << lev.k << "_" << (bi + 1) << " = ";
      const auto& neg = sym.negative();
      bool first = true;
      for (size_t pos = 0; pos < neg.size(); ++pos) {
        const Vec& v = lev.basis[bi].value[pos];
        for (size_t t = 0; t < v.size(); ++t) {
          if (v[t].is_zero()) continue;
          if (!first) os << " + ";
          first = false;
          os << "(" << v[t].str() << ")*" << sym.alg().elem((size_t)neg[pos]).name << "^*(x)"
             << pr.ext_name(t);
        }
      }
      if (first) os << "0";
      rep.basis_desc.push_back(os.str());
    }
  }
  rep.genericity = pr.genericity();
  GradedLieAlgebra asm_alg = pr.assemble();
  rep.jacobi_pass = asm_alg.check_jacobi().pass;
  if (out) *out = std::move(pr);
  return rep;
}

// ---- Spencer complex ----

static int neg_pos_of(const SymbolAlgebra& sym, int idx) {
  const auto& neg = sym.negative();
  for (size_t p = 0; p < neg.size(); ++p)
    if (neg[p] == idx) return (int)p;
  return -1;
}

Cochain1 spencer_delta0(const SymbolAlgebra& sym, const Vec& v) {
  const auto& g = sym.alg();
  Cochain1 out;
  for (int x : sym.negative()) out.push_back(g.bracket(g.basis_vec((size_t)x), v));
  return out;
}

Cochain2 spencer_delta1(const SymbolAlgebra& sym, const Cochain1& f, bool check_domain) {
  const auto& g = sym.alg();
  const auto& neg = sym.negative();
  if (f.size() != neg.size())
    throw std::invalid_argument("spencer_delta1: cochain size mismatch");
  if (check_domain) {
    for (size_t p = 0; p < neg.size(); ++p) {
      int dx = g.elem((size_t)neg[p]).degree;
      for (size_t t = 0; t < g.dim(); ++t)
        if (!f[p][t].is_zero() && g.elem(t).degree != dx + 1)
          throw std::invalid_argument(
              "spencer_delta1: cochain not in g_{-1}*(x)g_0 + g_{-2}*(x)g_{-1}");
    }
  }
  Cochain2 out;
  for (size_t i = 0; i < neg.size(); ++i)
    for (size_t j = i + 1; j < neg.size(); ++j) {
      Vec xi = g.basis_vec((size_t)neg[i]);
      Vec xj = g.basis_vec((size_t)neg[j]);
      Vec r = g.bracket(xi, f[j]);
      Vec r2 = g.bracket(xj, f[i]);
      Vec bxy = g.bracket_basis(neg[i], neg[j]);
      Vec r3 = g.zero_vec();
      for (size_t z = 0; z < g.dim(); ++z) {
        if (bxy[z].is_zero()) continue;
        int zp = neg_pos_of(sym, (int)z);
        if (zp < 0) throw std::logic_error("spencer_delta1: bracket left negative part");
        for (size_t t = 0; t < g.dim(); ++t) r3[t] += bxy[z] * f[(size_t)zp][t];
      }
      Vec val = g.zero_vec();
      bool nz = false;
      for (size_t t = 0; t < g.dim(); ++t) {
        val[t] = r[t] - r2[t] - r3[t];
        if (!val[t].is_zero()) nz = true;
      }
      if (nz) out[{(int)i, (int)j}] = std::move(val);
    }
  return out;
}

std::map<std::tuple<int, int, int>, Vec> spencer_delta2(const SymbolAlgebra& sym,
                                                        const Cochain2& w) {
  const auto& g = sym.alg();
  const auto& neg = sym.negative();
  auto get = [&](int i, int j) -> Vec {
    if (i == j) return g.zero_vec();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = w.find({i, j});
    Vec v = it == w.end() ? g.zero_vec() : it->second;
    if (flip)
      for (auto& c : v) c = -c;
    return v;
  };
  std::map<std::tuple<int, int, int>, Vec> out;
  for (size_t i = 0; i < neg.size(); ++i)
    for (size_t j = i + 1; j < neg.size(); ++j)
      for (size_t k = j + 1; k < neg.size(); ++k) {
        Vec xi = g.basis_vec((size_t)neg[i]);
        Vec xj = g.basis_vec((size_t)neg[j]);
        Vec xk = g.basis_vec((size_t)neg[k]);
        Vec val = g.bracket(xi, get((int)j, (int)k));
        Vec t2 = g.bracket(xj, get((int)i, (int)k));
        Vec t3 = g.bracket(xk, get((int)i, (int)j));
        for (size_t t = 0; t < g.dim(); ++t) val[t] = val[t] - t2[t] + t3[t];
        struct P {
          int a, b, c, sign;
        };
        P parts[3] = {{(int)i, (int)j, (int)k, -1},
                      {(int)i, (int)k, (int)j, +1},
                      {(int)j, (int)k, (int)i, -1}};
        for (const auto& p : parts) {
          Vec bxy = g.bracket_basis(neg[(size_t)p.a], neg[(size_t)p.b]);
          for (size_t z = 0; z < g.dim(); ++z) {
            if (bxy[z].is_zero()) continue;
            int zp = neg_pos_of(sym, (int)z);
            if (zp < 0) throw std::logic_error("spencer_delta2: bracket left negative part");
            Vec wz = get(zp, p.c);
            for (size_t t = 0; t < g.dim(); ++t)
              val[t] += Scalar::constant(g.ctx(), GaussQ(p.sign)) * bxy[z] * wz[t];
          }
        }
        bool nz = false;
        for (const auto& c : val)
          if (!c.is_zero()) nz = true;
        if (nz) out[{(int)i, (int)j, (int)k}] = std::move(val);
      }
  return out;
}

std::map<std::pair<int, int>, Scalar> spencer_delta_dual(const SymbolAlgebra& sym, int neg_pos) {
  const auto& g = sym.alg();
  const auto& neg = sym.negative();
  std::map<std::pair<int, int>, Scalar> out;
  for (size_t i = 0; i < neg.size(); ++i)
    for (size_t j = i + 1; j < neg.size(); ++j) {
      Vec b = g.bracket_basis(neg[i], neg[j]);
      Scalar c = -b[(size_t)neg[(size_t)neg_pos]];
      if (!c.is_zero()) out[{(int)i, (int)j}] = c;
    }
  return out;
}

}  // namespace tanaka
