#pragma once

#include <optional>
#include <utility>

#include "gcrystal/model.hpp"

namespace gc {

// How the target spectral parameter follows from the source one.
enum class SpectralRule { Same, Square, Sqrt };

// Coordinate map between two models, as expressions in the source
// coordinates and "L" (the source spectral parameter).
struct PointMap {
  std::shared_ptr<const Model> src;
  std::shared_ptr<const Model> dst;
  std::vector<Expr> out;
  std::optional<Expr> scalar;  // a(x) for the sigma-bar maps
  SpectralRule rule = SpectralRule::Same;
  Program prog;
  void compile();
};

GCPoint apply_map(const PointMap& m, const GCPoint& p, Scalar* scalar_out = nullptr);

// sigma-bar: V -> V, or V -> V2 for the A2even families.
const PointMap& sigma_bar_map(const TypeId& t);
// V2 -> V, A2even families only.
const PointMap& sigma_bar_inverse_map(const TypeId& t);
std::pair<GCPoint, std::optional<Scalar>> sigma_bar(const TypeId& t, const GCPoint& p);

enum class XiDirection { BtoV, VtoB };
const PointMap& xi_map(const TypeId& t, XiDirection d);
GCPoint iso_Xi(const TypeId& t, XiDirection d, const GCPoint& p);

// Geometric crystal on B^-_i . xi for a reduced word.
std::vector<Scalar> schubert_e_action(const std::vector<int>& word, const std::vector<Scalar>& coords,
                                      const IntMatrix& a, int i, const Scalar& c);
Scalar schubert_eps(const std::vector<int>& word, const std::vector<Scalar>& coords, const IntMatrix& a, int i);

// The word w_1 of a V model and the coordinate read along it.
std::pair<std::vector<int>, std::vector<std::string>> v_model_word(const TypeId& t);

}  // namespace gc
