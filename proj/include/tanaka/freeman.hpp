#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/tube.hpp"

namespace tanaka {

/// Freeman filtration data of a tube model at a generic point.
struct FreemanData {
  bool bracket_generating = false;
  std::vector<VField> D10;  // Z0, Z1, Z2
  std::vector<VField> K10;  // left kernel of the first-order Levi form
  std::vector<VField> L10;  // left kernel of the second-order form
  bool holNondeg = false;   // third-order left kernel vanishes
  // Levi matrices in the frames above (entries of the stated quotients)
  std::vector<std::vector<FnFrac>> L1, L2, L3;
  std::vector<std::string> loci;  // genericity: pivots assumed invertible
};

FreemanData freeman(const TubeModel& m);

/// Matrix of the order-k Levi form plus its left kernel frame
/// (order 1, 2 or 3); computes the chain up to k-1 first.
struct LeviResult {
  std::vector<std::vector<FnFrac>> matrix;
  std::vector<VField> left_kernel;
  std::vector<std::string> loci;
};
LeviResult levi_form(const TubeModel& m, int order);

struct FreemanRanks {
  bool degenerate = false;  // D not bracket generating: no ranks
  size_t rkD = 0, rkK = 0, rkL = 0;
  bool holNondeg = false;
  bool three_nondegenerate() const {
    return !degenerate && rkD == 3 && rkK == 2 && rkL == 1 && holNondeg;
  }
  std::vector<std::string> loci;
};
FreemanRanks freeman_ranks(const TubeModel& m);

/// Verifies every inclusion of the bracket table of the Freeman bundles.
struct InclusionRow {
  std::string label;
  bool pass;
  std::string offending;  // bracket that escaped the stated target
};
struct InclusionReport {
  bool pass = true;
  std::vector<InclusionRow> rows;
};
InclusionReport check_bracket_inclusions(const TubeModel& m);

/// Normalized sections (X10, Y10, Z10) of D10/K10, K10/L10, L10 with
/// L2(Y10, conj X10) = X10 and L3(Z10, conj X10) = Y10 at the generic point.
struct NormalizedSections {
  VField X10, Y10, Z10;
  std::string gauge_note;
  bool verified = false;  // both conditions re-checked by recomputation
};
NormalizedSections normalized_sections(const TubeModel& m);

}  // namespace tanaka
