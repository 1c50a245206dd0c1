#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcrystal/cartan.hpp"
#include "gcrystal/expr.hpp"

namespace gc {

enum class ModelKind { V, B, V2 };

std::string model_id(ModelKind k);
ModelKind parse_model(const std::string& id);

struct UnsupportedModel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Expression family of one catalogued model. Expressions use the coordinate
// names, the spectral parameter "L" and the action parameter "c".
struct Model {
  TypeId type;
  ModelKind kind;
  CartanData cartan;
  std::vector<std::string> coords;
  std::vector<std::vector<Expr>> action;  // action[i][k]: new value of coords[k]
  std::vector<Expr> gamma;
  std::vector<Expr> eps;

  // B-models only: prod coords[k]^weights[k] == L^target_power.
  std::vector<int> weights;
  int target_power = 0;
  int solve = -1;

  std::vector<Program> action_prog;  // inputs: coords, L, c
  Program structure_prog;            // inputs: coords, L; outputs gamma..., eps...

  // V2 models carry e_0..e_{n-1} only.
  int index_count() const { return static_cast<int>(action.size()); }
  int coord_index(const std::string& name) const;
  bool has_constraint() const { return !weights.empty(); }
  std::string label() const;
};

// P_i of a V model: x_i xb_i in the bulk, with the end conventions of each family.
Expr v_pair(const TypeId& t, int i);

// Built once per (type, kind) and cached.
std::shared_ptr<const Model> build_model(const TypeId& t, ModelKind kind);

struct GCPoint {
  TypeId type;
  ModelKind kind;
  Scalar L;
  std::vector<Scalar> coords;
  bool operator==(const GCPoint& o) const {
    return type == o.type && kind == o.kind && L == o.L && coords == o.coords;
  }
};

struct StructureValues {
  Scalar gamma;
  Scalar eps;
  Scalar phi;
};

GCPoint apply_e(const Model& m, int i, const Scalar& c, const GCPoint& p);
StructureValues structure_functions(const Model& m, int i, const GCPoint& p);
// All gamma_i then all eps_i in one pass.
std::vector<Scalar> structure_all(const Model& m, const GCPoint& p);

Scalar constraint_value(const Model& m, const std::vector<Scalar>& coords);
Scalar constraint_target(const Model& m, const Scalar& L);
bool constraint_holds(const Model& m, const GCPoint& p);

// Coordinates drawn from the sampler; B-models solve one coordinate from the
// product constraint.
GCPoint sample_point(const Model& m, Sampler& s, const std::optional<Scalar>& L = std::nullopt);
GCPoint make_point(const Model& m, const Scalar& L, std::vector<Scalar> coords);

// Tropical counterparts, used by ultra-discretization.
std::vector<long long> apply_e_trop(const Model& m, int i, long long k, long long level,
                                    const std::vector<long long>& b);
std::vector<long long> structure_trop(const Model& m, long long level, const std::vector<long long>& b);

}  // namespace gc
