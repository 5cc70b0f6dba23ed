#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/liealg.hpp"
#include "tanaka/tube.hpp"

namespace tanaka {

/// Candidate infinitesimal symmetry: a real 4x4 matrix A acting as the
/// holomorphic field (Ax) d_x + (Ay) d_y, or a translation d_{y_k}.
struct SymCandidate {
  std::optional<std::vector<std::vector<Rat>>> matrix;  // 4x4
  int translation = -1;                                 // y index when matrix absent

  static SymCandidate from_matrix(std::vector<std::vector<Rat>> a) {
    return SymCandidate{std::move(a), -1};
  }
  static SymCandidate from_translation(int k) { return SymCandidate{std::nullopt, k}; }
};

struct SymVerdict {
  bool is_symmetry = false;
  std::string residue;  // the failing tangency determinant, when false
  bool lie_d_check = false;  // L_xi D in D verified (when tangency holds)
};

/// True iff the candidate field is tangent to the model (A psi lies in the
/// span of the parametrization's partials identically) and its flow
/// preserves D (checked via Lie derivatives of the D-frame).
SymVerdict is_cr_symmetry(const TubeModel& m, const SymCandidate& cand);

/// rnc spectrum test: the tuple (-1-a-b, 3-a-b, 3a-1-b, 3b-1-a) is
/// proportional to (-3,-1,1,3) iff (a,b) = (2,3).
bool rnc_spectrum_test(const Rat& alpha, const Rat& beta);

}  // namespace tanaka
