#pragma once

#include <map>
#include <string>
#include <vector>

#include "tanaka/liealg.hpp"

namespace tanaka {

/// Non-positively graded algebra with fundamental negative part, the input
/// of Tanaka prolongation.
class SymbolAlgebra {
public:
  explicit SymbolAlgebra(GradedLieAlgebra g);

  const GradedLieAlgebra& alg() const { return g_; }
  int depth() const { return depth_; }  // mu: degrees span {-mu..0}
  const std::vector<int>& negative() const { return neg_; }
  const std::vector<int>& degree_layer(int d) const;  // indices of degree d

private:
  GradedLieAlgebra g_;
  int depth_;
  std::vector<int> neg_;
  std::map<int, std::vector<int>> layers_;
};

/// A degree-k prolongation element: a map from the negative part into the
/// algebra extended by the previously computed levels, shifting degree by k.
/// Values are vectors over the extended basis (symbol first, then level 1,
/// level 2, ...).
struct ProlongMap {
  std::vector<Vec> value;  // indexed by position in SymbolAlgebra::negative()
};

struct ProlongLevel {
  int k = 0;
  std::vector<ProlongMap> basis;
  std::vector<int> conj;  // conj partner index within the level
  size_t dim() const { return basis.size(); }
};

/// Incremental prolongation state with the recursive bracket of the graded
/// prolongation pr(m x g0).
class Prolongation {
public:
  explicit Prolongation(SymbolAlgebra sym);

  const SymbolAlgebra& sym() const { return sym_; }
  const std::vector<ProlongLevel>& levels() const { return levels_; }
  size_t ext_dim() const;
  int ext_degree(size_t e) const;
  std::string ext_name(size_t e) const;

  /// Computes the full degree-k level (k = levels computed so far + 1)
  /// as the exact kernel of the derivation-condition system.
  const ProlongLevel& step();

  /// Bracket of extended basis elements, as an extended vector.
  Vec ext_bracket(size_t a, size_t b);

  /// Assembles the prolonged algebra up to the computed levels.
  /// Requires every computed level to close (the last level must be 0 or
  /// brackets must stay within computed range).
  GradedLieAlgebra assemble() const;

  const std::vector<std::string>& genericity() const { return genericity_; }

private:
  Vec ext_zero() const;
  std::vector<Scalar> express_in_level(int k, const ProlongMap& m) const;
  ProlongMap conj_map(const ProlongLevel& lev, size_t bi) const;
  void resolve_conjugation(ProlongLevel& lev) const;

  SymbolAlgebra sym_;
  std::vector<ProlongLevel> levels_;
  std::map<std::pair<size_t, size_t>, Vec> bracket_cache_;
  std::vector<std::string> genericity_;
};

struct ProlongReport {
  std::vector<size_t> dims;  // per degree 1..kmax (trailing zeros recorded)
  size_t total = 0;          // dim of symbol + computed positive part
  bool terminated = false;   // a zero level was reached (rest vanish)
  std::vector<std::string> basis_desc;  // human-readable level bases
  std::vector<std::string> genericity;
  bool jacobi_pass = false;  // of the assembled prolonged algebra
};

/// Tanaka prolongation up to degree kmax.
ProlongReport tanaka_prolong(const SymbolAlgebra& sym, int kmax, Prolongation* out = nullptr);

// ---- Spencer complex (degree-1 component of the CE differential) ----

/// 1-cochain on the negative part with values in the symbol algebra,
/// stored by negative position.
using Cochain1 = std::vector<Vec>;
/// 2-cochain: values on ordered pairs (i < j) of negative positions.
using Cochain2 = std::map<std::pair<int, int>, Vec>;

/// delta of a 0-cochain v: x -> [x, v].
Cochain1 spencer_delta0(const SymbolAlgebra& sym, const Vec& v);

/// delta of a 1-cochain: (x,y) -> [x,f(y)] - [y,f(x)] - f([x,y]).
/// Requires the cochain to shift degree by exactly 1, i.e. to lie in
/// g_{-1}* (x) g_0  (+)  g_{-2}* (x) g_{-1}.
Cochain2 spencer_delta1(const SymbolAlgebra& sym, const Cochain1& f, bool check_domain = true);

/// delta of a 2-cochain (used by the d o d = 0 property suite).
/// Values on ordered triples i < j < k of negative positions.
std::map<std::tuple<int, int, int>, Vec> spencer_delta2(const SymbolAlgebra& sym,
                                                        const Cochain2& w);

/// Scalar-valued forms: delta of a dual-basis covector rho = e_i^*:
/// (x,y) -> -rho([x,y]).
std::map<std::pair<int, int>, Scalar> spencer_delta_dual(const SymbolAlgebra& sym, int neg_pos);

}  // namespace tanaka
