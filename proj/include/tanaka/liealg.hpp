#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tanaka/linalg.hpp"
#include "tanaka/scalar.hpp"

namespace tanaka {

struct GradedBasisElement {
  std::string name;
  int degree = 0;
  int conj = -1;  // index of the conjugate partner; self-paired allowed
};

/// Vector in a fixed algebra basis.
using Vec = std::vector<Scalar>;

struct BracketTerm {
  int target;
  Scalar coeff;
};

/// Finite-dimensional graded Lie algebra over the Scalar ring.
/// Brackets are stored sparsely for i < j only; antisymmetry is by
/// construction. Construction validates degree additivity and conjugation
/// compatibility; the Jacobi identity is checkable, not assumed.
class GradedLieAlgebra {
public:
  GradedLieAlgebra(UnitCtxPtr ctx, std::vector<GradedBasisElement> basis,
                   std::map<std::pair<int, int>, std::vector<BracketTerm>> table,
                   bool validate = true);

  size_t dim() const { return basis_.size(); }
  const UnitCtxPtr& ctx() const { return ctx_; }
  const std::vector<GradedBasisElement>& basis() const { return basis_; }
  const GradedBasisElement& elem(size_t i) const { return basis_.at(i); }
  int index_of(const std::string& name) const;

  Vec zero_vec() const { return Vec(dim(), Scalar(ctx_)); }
  Vec basis_vec(size_t i) const;

  /// Bracket of two basis elements, as a vector.
  Vec bracket_basis(int i, int j) const;
  /// Bilinear extension of the table.
  Vec bracket(const Vec& x, const Vec& y) const;

  Vec conj_vec(const Vec& x) const;

  struct JacobiFailure {
    int i, j, k;
    Vec residue;
  };
  struct JacobiReport {
    bool pass = true;
    std::vector<JacobiFailure> failures;
  };
  /// Jac(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y] on all basis triples.
  JacobiReport check_jacobi() const;

  /// Matrix of ad(x) in the algebra basis: column j holds [x, e_j].
  std::vector<Vec> ad_matrix(const Vec& x) const;

  /// Eigenvalue multiset of ad(basis element). Exact: diagonal entries when
  /// the matrix is (a permutation of) triangular, otherwise the roots of the
  /// characteristic polynomial over Q(i); error if it does not split.
  std::vector<GaussQ> ad_spectrum(int i) const;

  /// Span of all brackets, as a canonical RREF basis.
  std::vector<Vec> derived_subalgebra() const;
  /// Kernel of all ad maps, canonical basis.
  std::vector<Vec> center() const;

  const std::map<std::pair<int, int>, std::vector<BracketTerm>>& table() const { return table_; }

  std::string vec_str(const Vec& v) const;

private:
  void validate_table() const;

  UnitCtxPtr ctx_;
  std::vector<GradedBasisElement> basis_;
  std::map<std::pair<int, int>, std::vector<BracketTerm>> table_;  // keys i < j
};

/// Complexified algebra (conj pairs) -> real form. Conjugate pairs (Z, Z~)
/// become X = Z + Z~ and JX = i(Z - Z~); self-paired elements are kept.
/// Fails if the resulting structure constants are not self-conjugate.
GradedLieAlgebra realify(const GradedLieAlgebra& g);

/// Real algebra previously produced by realify -> complexified picture.
/// Inverse of realify up to basis order.
GradedLieAlgebra complexify(const GradedLieAlgebra& g);

/// liealg.v1 JSON schema.
GradedLieAlgebra liealg_from_json(const std::string& text);
GradedLieAlgebra liealg_load(const std::string& path);
std::string liealg_to_json(const GradedLieAlgebra& g);

}  // namespace tanaka
