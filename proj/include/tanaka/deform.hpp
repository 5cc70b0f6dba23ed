#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tanaka/liealg.hpp"

namespace tanaka {

/// Polynomial in the deformation unknowns w_0, w_1, ... over the Scalar
/// ring. Monomial exponents are sparse maps var -> power.
class UPoly {
public:
  using Mono = std::map<int, int>;

  UPoly() = default;
  explicit UPoly(UnitCtxPtr ctx) : ctx_(std::move(ctx)) {}
  static UPoly constant(UnitCtxPtr ctx, Scalar c);
  static UPoly var(UnitCtxPtr ctx, int v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  const std::map<Mono, Scalar>& terms() const { return terms_; }
  const UnitCtxPtr& ctx() const { return ctx_; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly& operator+=(const UPoly& o) { *this = *this + o; return *this; }
  UPoly& operator-=(const UPoly& o) { *this = *this - o; return *this; }
  bool operator==(const UPoly& o) const { return terms_ == o.terms_; }
  bool operator<(const UPoly& o) const;

  UPoly scaled(const Scalar& c) const;

  std::set<int> vars() const;
  int degree_in(int v) const;
  /// eq = A*w + B with A, B free of w; returns (A, B) when eq is linear in w.
  std::optional<std::pair<UPoly, UPoly>> linear_in(int v) const;
  /// substitute w := e (degree of e in w must be 0)
  UPoly subst(int v, const UPoly& e) const;
  UPoly eval(const std::map<int, Scalar>& assignment) const;

  std::string str(const std::vector<std::string>& names) const;

private:
  void add_term(const Mono& m, const Scalar& c);
  UnitCtxPtr ctx_;
  std::map<Mono, Scalar> terms_;
};

/// One deformation unknown: the coefficient of `target` in the deformed
/// bracket [x, y], of strictly positive degree excess. Conjugation acts by
/// conj(w) = cfactor * w_partner.
struct DeformUnknown {
  std::string name;
  int x, y, target;  // slot (x < y)
  int excess;
  int partner;     // index of the conjugate unknown (may be self)
  Scalar cfactor;  // unit scalar in conj(w) = cfactor * partner
};

/// Pinned table relation for a slot: constants on some targets, free
/// unknowns on others, zero elsewhere (within the stated scope).
struct PinnedSlot {
  int x, y;
  std::map<int, Scalar> terms;  // target -> pinned constant (positive excess)
  struct FreeSpec {
    int target;
    Scalar prefactor;                 // coefficient = prefactor * w
    std::optional<Scalar> conj_rule;  // conj(w) = conj_rule * w (self rule)
  };
  std::vector<FreeSpec> free;
  bool exact = false;  // exact: unlisted targets are 0 even outside NEG
};

/// Filtered-deformation system: graded base + unknown positive-excess
/// corrections + pinned relations + optional S-grading constraints.
class DeformationSystem {
public:
  DeformationSystem(GradedLieAlgebra base, std::vector<PinnedSlot> pinned,
                    std::optional<std::string> graded_by,
                    std::vector<std::string> rigid_rows);

  const GradedLieAlgebra& base() const { return base_; }
  const std::vector<DeformUnknown>& unknowns() const { return unknowns_; }
  const std::vector<std::string>& unknown_names() const { return names_; }
  /// Deformed bracket of basis elements i<j: vector of UPoly per target.
  const std::vector<UPoly>& deformed_bracket(int i, int j) const;
  std::optional<int> seig(int i) const;  // S-eigenvalue when graded_by set

  /// conj of a polynomial under the unknown involution + scalar conjugation.
  UPoly conj_poly(const UPoly& p) const;

  /// One polynomial equation per (triple, output component); degree <= 2.
  std::vector<UPoly> jacobi_system() const;

  std::string poly_str(const UPoly& p) const { return p.str(names_); }

private:
  void build();
  GradedLieAlgebra base_;
  std::vector<PinnedSlot> pinned_;
  std::optional<std::string> graded_by_;
  std::set<int> rigid_;
  std::vector<std::optional<int>> seig_;
  std::vector<DeformUnknown> unknowns_;
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::vector<UPoly>> table_;
};

struct TraceStep {
  enum Kind { Substitute, Contradiction, Split, Residual, Solved } kind;
  std::string text;
  // Substitute:
  int var = -1;
  UPoly expr;
  int partner_var = -1;
  UPoly partner_expr;
  size_t from_eq = 0;  // index into the equation list at that point
  // Split:
  UPoly split_on;
  bool branch_nonzero = true;
  // Contradiction:
  UPoly final_eq;
};

struct EliminationResult {
  enum Verdict { Inconsistent, Residual, Consistent } verdict;
  std::vector<TraceStep> trace;
  std::vector<UPoly> residual;               // for Residual
  std::map<int, UPoly> solution;             // var -> expression (telescoped)
  std::vector<std::string> genericity;       // non-unit constants treated as nonzero
  std::vector<EliminationResult> branches;   // for case splits
  std::string verdict_str() const {
    switch (verdict) {
      case Inconsistent: return "Inconsistent";
      case Residual: return "Residual";
      default: return "Consistent";
    }
  }
};

/// Linear elimination cascade: substitute unknowns with unit-invertible
/// leading coefficients (deterministic order: fewest unknowns, then lowest
/// unknown index), case-splitting on non-invertible pivots; Inconsistent
/// iff a nonzero constant is derived on every branch.
EliminationResult eliminate(const DeformationSystem& ds);

/// Re-runs a trace against the original system; true iff every step is
/// valid and the terminal status is reproduced.
bool replay_trace(const DeformationSystem& ds, const EliminationResult& res);

/// deform.v1 fixture loader.
struct DeformFixture {
  DeformationSystem system;
  std::string name;
  std::string expect_verdict;
};
DeformFixture deform_load(const std::string& path);
DeformFixture deform_from_json(const std::string& text);

std::string elimination_trace_text(const DeformationSystem& ds, const EliminationResult& r);

}  // namespace tanaka
