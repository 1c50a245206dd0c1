#pragma once

#include "json.hpp"

#include "gcrystal/folding.hpp"

namespace gc {

// Square matrix of Laurent polynomials in z.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(size_t n) : n_(n), e_(n * n) {}
  static PolyMatrix identity(size_t n);

  size_t size() const { return n_; }
  LaurentPoly& at(size_t i, size_t j) { return e_[i * n_ + j]; }
  const LaurentPoly& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  // Smallest and largest z-exponent over all entries (0, 0 when zero).
  std::pair<int, int> exponent_range() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  nlohmann::json to_json() const;

 private:
  size_t n_ = 0;
  std::vector<LaurentPoly> e_;
};

// Un-inverted A1 matrix: diagonal 1/l_i, subdiagonal -1, top-right -z.
PolyMatrix n_matrix_A1(const GCPoint& l);
// A + zB + z^2 C on B(D1_n), with the point's spectral parameter.
PolyMatrix m_matrix_D1(const GCPoint& l);

enum class JKind { J0, J1, J2, J3, J4 };
PolyMatrix j_matrix(JKind which, int n);
// Matrix and parameter n attached to an involution on host rank N.
std::pair<JKind, int> j_for_involution(Sigma s, int N);

// M(Sigma l) J = J M(l).
bool check_conjugation(Sigma s, const GCPoint& l);
Report conjugation_report(Sigma s, int N, int samples, Sampler& smp);

// D1: M_L(l) M_K(m) = M_K(l') M_L(m').  A1: N(m) N(l) = N(m') N(l').
bool check_r_matrix_identity(const GCPoint& l, const GCPoint& m, const GCPoint& lp, const GCPoint& mp);

// Scaling any single output coordinate by 2 must break the identity.
Report uniqueness_perturbation(const GCPoint& l, const GCPoint& m, const GCPoint& lp, const GCPoint& mp);

}  // namespace gc
