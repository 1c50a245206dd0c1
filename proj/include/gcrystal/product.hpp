#pragma once

#include <vector>

#include "gcrystal/model.hpp"

namespace gc {

struct ProductPoint {
  std::vector<GCPoint> factors;
  bool operator==(const ProductPoint& o) const { return factors == o.factors; }
};

// c1 = (c phi(x) + eps(y))/(phi(x) + eps(y)), c2 = c/c1.
std::pair<Scalar, Scalar> split_parameter(const Scalar& c, const Scalar& phi_x, const Scalar& eps_y);

// k > 2 is left-associated: ((x1 x x2) x x3) ...
ProductPoint product_apply_e(const Model& m, const ProductPoint& pp, int i, const Scalar& c);
StructureValues product_structure_functions(const Model& m, const ProductPoint& pp, int i);
// Right-associated variant, for the associativity check.
StructureValues product_structure_right(const Model& m, const ProductPoint& pp, int i);

// Expressions of the two-factor action on prefixed variables
// ("<pa><coord>", "<pa>L", "<pb><coord>", "<pb>L", and "c").
struct PairExprs {
  std::vector<std::vector<Expr>> action;  // [i] -> first factor coords, then second factor coords
  std::vector<Expr> gamma, eps;
};
PairExprs pair_exprs(const Model& m, const std::string& pa, const std::string& pb);

// Renames model variables with a prefix; "c" stays unless given.
std::map<std::string, Expr> prefix_bindings(const Model& m, const std::string& p);

}  // namespace gc
