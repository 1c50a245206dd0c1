#pragma once

#include "gcrystal/mmatrix.hpp"
#include "gcrystal/product.hpp"

namespace gc {

// Variables of an R map: "a_<coord>", "a_L" for the first factor and
// "b_<coord>", "b_L" for the second.
inline const std::string kFirst = "a_";
inline const std::string kSecond = "b_";

// V_i, V_i^*, V_0^sharp and the subtraction-free W_i of D1_n, on the prefixed
// variables of a B(D1_n) pair. W[0] is unused.
struct VWFamily {
  int n = 0;
  std::vector<Expr> V, Vstar, W;
  Expr V0sharp;
  // Number of summands of each V_i.
  int terms_per_V = 0;
};
const VWFamily& d1_vw(int n);

struct RMap {
  TypeId type;
  std::shared_ptr<const Model> model;  // B model
  std::vector<std::string> inputs;     // first coords, a_L, second coords, b_L
  std::vector<Expr> out;               // l' coords then m' coords
  Program prog;
};

// Supported for a1, d1 and the four folded types.
bool has_r_map(const TypeId& t);
const RMap& r_map(const TypeId& t);

// (l spectral L, m spectral M) -> (l' spectral M, m' spectral L).
std::pair<GCPoint, GCPoint> apply_R(const GCPoint& l, const GCPoint& m);
// V-model R as Xi o R o Xi^{-1} on both factors.
std::pair<GCPoint, GCPoint> apply_R_V(const GCPoint& x, const GCPoint& y);
// Combinatorial R on lattice points with integer levels.
std::pair<std::vector<long long>, std::vector<long long>> apply_R_trop(const TypeId& t, const std::vector<long long>& a,
                                                                      long long la, const std::vector<long long>& b,
                                                                      long long lb);

// The form V_i V_i^* + (M-L)V_i^* + (L-M)V_i, evaluated with subtraction.
Scalar w_difference_form(int n, int i, const GCPoint& l, const GCPoint& m);
Scalar w_positive_form(int n, int i, const GCPoint& l, const GCPoint& m);
// Both W forms on B(t) pairs; folded types are compared at their host images.
Report w_form_report(const TypeId& t, int samples, Sampler& smp);

struct RSuiteConfig {
  Scalar L = 2, M = 3, K = 5;
  int samples = 20;
};
// Commutation with the product action, preservation of product gamma/eps,
// inversion, YBE, identity at equal spectra, and for a1/d1 the matrix identity.
Report verify_R_properties(const TypeId& t, const RSuiteConfig& cfg, Sampler& smp);
// Folded types: host R keeps fixed varieties and agrees with the folded R through eta.
Report restriction_check(const TypeId& t, const RSuiteConfig& cfg, Sampler& smp);
// V-model R versus B-model R through Xi.
Report v_model_r_check(const TypeId& t, const RSuiteConfig& cfg, Sampler& smp);

}  // namespace gc
