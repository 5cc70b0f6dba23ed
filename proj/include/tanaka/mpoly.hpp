#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tanaka/scalar.hpp"

namespace tanaka {

/// Named polynomial variables of the geometric function ring (parameters
/// alpha, beta and the chart coordinates other than t).
class SymTable {
public:
  explicit SymTable(std::vector<std::string> names) : names_(std::move(names)) {}
  size_t size() const { return names_.size(); }
  const std::string& name(size_t k) const { return names_.at(k); }
  int index_of(const std::string& n) const {
    for (size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == n) return (int)k;
    return -1;
  }
  bool operator==(const SymTable& o) const { return names_ == o.names_; }

private:
  std::vector<std::string> names_;
};

using SymTablePtr = std::shared_ptr<const SymTable>;

/// Sparse multivariate polynomial over the Gaussian rationals.
class MPoly {
public:
  using Expo = std::vector<int>;  // dense exponent vector over the table

  MPoly() = default;
  explicit MPoly(SymTablePtr tab) : tab_(std::move(tab)) {}
  static MPoly constant(SymTablePtr tab, const GaussQ& c);
  static MPoly var(SymTablePtr tab, int v, int power = 1);

  const SymTablePtr& table() const { return tab_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussQ constant_value() const;
  const std::map<Expo, GaussQ>& terms() const { return terms_; }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator<(const MPoly& o) const;

  MPoly scaled(const GaussQ& c) const;
  MPoly derivative(int v) const;
  MPoly conj() const;  // variables are real; coefficients conjugate
  MPoly eval(int v, const GaussQ& value) const;
  /// Exact division by a constant or a monomial*constant divisor; throws if
  /// not exactly divisible.
  MPoly divided_by(const MPoly& d) const;

  std::string str() const;

private:
  void add_term(const Expo& e, const GaussQ& c);
  SymTablePtr tab_;
  std::map<Expo, GaussQ> terms_;
};

}  // namespace tanaka
