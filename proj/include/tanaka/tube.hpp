#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tanaka/curve.hpp"
#include "tanaka/vfield.hpp"

namespace tanaka {

enum class TubeVariant { TANGENT_VARIETY, OSCULATING_RULED };

/// Tube hypersurface with its canonical complex frame.
/// Variant TANGENT_VARIETY: psi(r,s,t) = r*gamma + s*gamma', chart (r,s,t,y);
/// intrinsic frame X0 = d_r, X1 = d_s, X2 = (1/s)(d_t - r d_s) with ambient
/// x-parts gamma, gamma', gamma''; J-images J X_k = sum gamma^(k)_i d_{y_i}.
/// Variant OSCULATING_RULED: psi(t,r,s) = gamma + r*gamma' + s*gamma'';
/// ambient parts gamma', gamma'', gamma'''.
struct TubeModel {
  std::string name;
  TubeVariant variant;
  Curve curve;
  ChartPtr chart;                // (r, s, t, y0..y3)
  std::vector<VField> Z;         // holomorphic frame Z_0, Z_1, Z_2
  std::vector<VField> X, JX;     // the real frame pieces
  std::vector<TrigPoly> psi;     // the parametrization, 4 ambient components

  std::vector<VField> Zbar() const;
  /// All 7 coordinate fields of the chart.
  std::vector<VField> tm_frame() const;
};

TubeModel build_tube(const Curve& c, TubeVariant variant, bool allow_degenerate = false);

/// The Levi-nondegenerate control model: tube over the graph
/// x0 = x1^2 + x2^2 + x3^2, chart (x1,x2,x3,y0..y3).
TubeModel hyperquadric_tube();

/// Applies an invertible function-matrix change to the Z-frame (tests of
/// frame independence).
TubeModel change_frame(const TubeModel& m, const std::vector<std::vector<FnFrac>>& g);

/// Negative control: flips the sign of J X_1 (breaks integrability).
TubeModel corrupt_J(const TubeModel& m);

}  // namespace tanaka
