#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tanaka/scalar.hpp"

namespace tanaka {

/// Element of the fraction field of the Scalar ring. Denominators are kept
/// unit-normalized when possible so exact inversion never leaves the ring
/// silently: a non-unit denominator is visible to the rank routines.
struct SFrac {
  Scalar num, den;  // den never zero

  SFrac() = default;
  explicit SFrac(Scalar n) : num(std::move(n)), den(Scalar::constant(num.ctx(), GaussQ(1))) {}
  SFrac(Scalar n, Scalar d);

  static SFrac zero(UnitCtxPtr ctx) { return SFrac(Scalar(ctx)); }

  bool is_zero() const { return num.is_zero(); }
  SFrac operator-() const;
  SFrac operator+(const SFrac& o) const;
  SFrac operator-(const SFrac& o) const;
  SFrac operator*(const SFrac& o) const;
  SFrac operator/(const SFrac& o) const;
  bool operator==(const SFrac& o) const;

  std::string str() const;

private:
  void normalize();
};

using SRow = std::vector<SFrac>;
using SMat = std::vector<SRow>;

/// Reduced row-echelon form over Frac(Scalar).
/// Pivot policy: prefer unit-monomial pivots (exactly invertible in the
/// ring); otherwise take the first nonzero entry and record it as a
/// genericity assumption (a Laurent polynomial in the units assumed nonzero).
struct RrefResult {
  SMat mat;
  std::vector<int> pivot_cols;
  std::vector<std::string> genericity;  // non-unit pivots assumed invertible
};

RrefResult rref(SMat m);

size_t rank(const SMat& m, std::vector<std::string>* genericity = nullptr);

/// Basis of the right kernel {x : M x = 0}, canonicalized by RREF of the
/// basis vectors themselves (deterministic golden form).
struct KernelResult {
  std::vector<SRow> basis;  // each of size cols
  std::vector<std::string> genericity;
};

KernelResult kernel(const SMat& m);

/// Solves M x = b exactly; nullopt if inconsistent.
std::optional<SRow> solve(const SMat& m, const SRow& b,
                          std::vector<std::string>* genericity = nullptr);

SMat smat_from_scalars(const std::vector<std::vector<Scalar>>& rows);

}  // namespace tanaka
