#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/curve.hpp"
#include "tanaka/liealg.hpp"
#include "tanaka/symmetry.hpp"

namespace tanaka {

/// One row of the homogeneous nondegenerate projective curve table.
struct HomogeneousCurve {
  std::string segre;          // "(1111)", "(211)", ..., "(1c1c)b"
  std::string description;    // the parametrized form
  bool uses_alpha = false, uses_beta = false;
  std::string param_kind;     // "tau" (flow tau = e^t) or "t"
  // admissible sample parameters used by instantiations and checks
  Rat sample_alpha{0}, sample_beta{0};

  /// Parametrized curve with the given (or sample) parameters substituted;
  /// symbolic when nullopt is passed and the row has that parameter.
  Curve curve(std::optional<Rat> alpha = std::nullopt,
              std::optional<Rat> beta = std::nullopt) const;
  /// Generator matrix v at the given parameters (rational entries).
  std::vector<std::vector<Rat>> generator(std::optional<Rat> alpha = std::nullopt,
                                          std::optional<Rat> beta = std::nullopt) const;
  /// Base point of the exp(tv)-orbit.
  std::vector<Rat> base_point() const;

  /// exp(tv)-orbit consistency: v gamma = tau gamma' (tau rows) or gamma'.
  bool generator_consistent(std::optional<Rat> alpha = std::nullopt,
                            std::optional<Rat> beta = std::nullopt) const;

  std::vector<std::string> comps;  // fnexpr strings with alpha/beta symbols
  std::vector<std::vector<std::string>> gen;  // generator entries (fnexpr in alpha,beta)
  std::vector<std::string> base;
  ParamConstraints constraints;
};

/// All 12 rows of the table.
std::vector<HomogeneousCurve> catalog();

/// true iff every eigenvalue of the rational 4x4 matrix has geometric
/// multiplicity 1 (precisely one Jordan block per eigenvalue); eigenvalues
/// detected via exact factorization into linear/quadratic factors.
bool jordan_nondegenerate(const std::vector<std::vector<Rat>>& v);

/// The tube symmetry algebra of a catalog curve: the abstract 6-dim algebra
/// R^2 x R^4 with every generator checked on the built tube.
struct TubeSymmetryReport {
  GradedLieAlgebra algebra;
  std::string segre;
  Rat alpha, beta;
  std::vector<GaussQ> ad_v_spectrum;  // spectrum of the generator matrix v
  bool generators_verified = false;
  bool maximal = false;  // rational normal curve: 8-dim model, claim cited
};
TubeSymmetryReport tube_symmetry_algebra(const HomogeneousCurve& hc,
                                         std::optional<Rat> alpha = std::nullopt,
                                         std::optional<Rat> beta = std::nullopt);

}  // namespace tanaka
