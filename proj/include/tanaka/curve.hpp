#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/trigpoly.hpp"

namespace tanaka {

/// Declared constraints on the symbolic parameters alpha, beta: strict
/// order bounds 1 < alpha < beta (type 1111) and exclusions sym != value.
struct ParamConstraints {
  bool order_1_alpha_beta = false;  // 1 < alpha < beta
  std::vector<std::pair<std::string, Rat>> exclusions;  // sym != value
  bool alpha_nonzero = false, beta_nonzero = false;

  enum Sign { POSITIVE, NEGATIVE, NONZERO, UNDECIDED };
  /// Decides the sign of a linear form over the constraint region.
  Sign decide(const LinExp& l) const;
};

/// Projective curve lift: four components in the function ring of the
/// single variable t (or tau), plus domain and parameter data.
struct Curve {
  std::string name;
  std::vector<TrigPoly> comp;  // gamma_0..gamma_3
  ParamConstraints constraints;
  std::string domain;  // e.g. "t>0"

  Curve derivative() const;
};

/// det(gamma, gamma', gamma'', gamma''') via direct expansion.
TrigPoly wronskian4(const Curve& c);

struct NondegReport {
  enum Status { TRUE, FALSE, UNDECIDED } status;
  std::string witness;         // the Wronskian in canonical form
  std::string excluded_locus;  // when zeros exist in the domain
};

/// true iff the Wronskian is not identically zero and has no zero in the
/// declared domain; factor signs are decided against the constraints.
NondegReport curve_nondegenerate(const Curve& c);

/// curve.v1 JSON loader. Components use the fnexpr grammar.
Curve curve_from_json(const std::string& text, SymTablePtr tab);
Curve curve_load(const std::string& path, SymTablePtr tab);

/// The shared symbol table of the geometric modules.
SymTablePtr geom_symbols();

}  // namespace tanaka
