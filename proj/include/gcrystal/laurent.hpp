#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcrystal/scalar.hpp"

namespace gc {

// Laurent polynomial in one variable z with exact coefficients.
// Stored densely from the lowest nonzero exponent; zero has no terms.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Scalar& c);  // NOLINT: constants convert implicitly
  static LaurentPoly monomial(const Scalar& c, int exponent);

  bool is_zero() const { return coef_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coef_.size()) - 1; }
  Scalar coefficient(int exponent) const;
  const Scalar& leading() const { return coef_.back(); }
  std::map<int, Scalar> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coef_ == b.coef_;
  }

  std::string str() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Scalar> coef_;
};

}  // namespace gc
