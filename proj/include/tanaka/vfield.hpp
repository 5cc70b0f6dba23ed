#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tanaka/trigpoly.hpp"

namespace tanaka {

/// Coordinate chart: named coordinates, each differentiating either as the
/// transcendental variable t or as a polynomial symbol of the table.
class Chart {
public:
  struct Coord {
    std::string name;
    int poly_var;  // -1 for the t coordinate
  };
  Chart(SymTablePtr tab, std::vector<Coord> coords)
      : tab_(std::move(tab)), coords_(std::move(coords)) {}
  size_t dim() const { return coords_.size(); }
  const SymTablePtr& table() const { return tab_; }
  const Coord& coord(size_t k) const { return coords_.at(k); }
  int index_of(const std::string& n) const {
    for (size_t k = 0; k < coords_.size(); ++k)
      if (coords_[k].name == n) return (int)k;
    return -1;
  }
  TrigPoly diff(const TrigPoly& f, size_t k) const {
    return coords_[k].poly_var < 0 ? f.dt() : f.dvar(coords_[k].poly_var);
  }
  FnFrac diff(const FnFrac& f, size_t k) const;
  bool operator==(const Chart& o) const {
    if (coords_.size() != o.coords_.size()) return false;
    for (size_t k = 0; k < coords_.size(); ++k)
      if (coords_[k].name != o.coords_[k].name) return false;
    return true;
  }

private:
  SymTablePtr tab_;
  std::vector<Coord> coords_;
};

using ChartPtr = std::shared_ptr<const Chart>;

/// Vector field on a chart with function-field coefficients.
struct VField {
  ChartPtr chart;
  std::vector<FnFrac> coeff;

  static VField zero(ChartPtr c);
  static VField basis(ChartPtr c, size_t k);

  bool is_zero() const;
  VField operator+(const VField& o) const;
  VField operator-(const VField& o) const;
  VField scaled(const FnFrac& f) const;
  VField conj() const;

  /// X(f): derivation applied to a function.
  FnFrac apply(const FnFrac& f) const;

  std::string str() const;
};

/// Lie bracket [X,Y]^k = X(Y^k) - Y(X^k); chart mismatch is an error.
VField vf_bracket(const VField& x, const VField& y);

/// Fraction-free Gauss-Jordan echelon form over the function ring; row
/// scales are arbitrary (cross-multiplication), contents reduced.
struct TrigEchelon {
  std::vector<std::vector<TrigPoly>> rows;  // nonzero echelon rows
  std::vector<int> pivot_cols;
  std::vector<std::string> pivots_assumed;  // non-monomial pivots taken nonzero
};
TrigEchelon trig_gauss_jordan(std::vector<std::vector<TrigPoly>> m);

/// Right kernel basis of an FnFrac matrix (rows x cols).
std::vector<std::vector<FnFrac>> fnmat_kernel(const std::vector<std::vector<FnFrac>>& m,
                                              SymTablePtr tab,
                                              std::vector<std::string>* loci = nullptr);

/// Exact linear algebra over the function field with genericity recording.
struct FieldSpan {
  std::vector<VField> fields;        // the spanning set
  std::vector<std::string> pivots;   // nonzero pivots assumed invertible

  explicit FieldSpan(std::vector<VField> f);
  size_t rank() const { return rank_; }
  /// Coefficients expressing w in the span, or nullopt if not a member.
  std::optional<std::vector<FnFrac>> express(const VField& w) const;
  bool contains(const VField& w) const;

private:
  size_t rank_ = 0;
  TrigEchelon ech_;                        // echelon of the coefficient rows
  std::vector<std::vector<TrigPoly>> fieldrows_;  // cleared-denominator rows
  size_t dim_ = 0;
  SymTablePtr tab_;
};

}  // namespace tanaka
