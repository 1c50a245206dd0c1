#pragma once

#include <string>

#include "gcrystal/rmap.hpp"

namespace gc {

using Lattice = std::vector<long long>;

struct LatticePoint {
  TypeId type;
  ModelKind kind;
  long long level = 0;
  Lattice coords;
  bool operator==(const LatticePoint& o) const {
    return type == o.type && kind == o.kind && level == o.level && coords == o.coords;
  }
};

// Tropicalisation of one model at a fixed level: e~_i^k, wt_i = UD(gamma_i),
// eps_i = UD(eps_i), phi_i = UD(gamma_i eps_i).
class TropCrystal {
 public:
  TropCrystal(std::shared_ptr<const Model> m, long long level);

  const Model& model() const { return *m_; }
  long long level() const { return level_; }
  int indices() const { return m_->index_count(); }

  Lattice e(int i, long long k, const Lattice& b) const { return apply_e_trop(*m_, i, k, level_, b); }
  // wt_0..wt_{N-1} then eps_0..eps_{N-1}
  Lattice structure(const Lattice& b) const { return structure_trop(*m_, level_, b); }
  Lattice phi(const Lattice& b) const;
  // B models: tropical product constraint.
  bool on_lattice(const Lattice& b) const;
  // Origin of the free coordinates, the solved one filled in.
  Lattice origin() const { return complete({}); }
  // Free coordinates in [-r, r]; the constrained coordinate is solved.
  std::vector<Lattice> box(int radius) const;
  bool in_box(const Lattice& b, int radius) const;

 private:
  Lattice complete(Lattice free_coords) const;
  std::shared_ptr<const Model> m_;
  long long level_;
  Program phi_prog_;
};

// Exhaustive axioms on the box: e~^0 = id, e~^{-1} e~^1 = id, e~^1 e~^1 = e~^2,
// wt_j(e~_i^k b) = wt_j(b) + k a_ij, eps_i(e~_i^k b) = eps_i(b) - k,
// phi = eps + wt, and the lattice constraint.
Report check_crystal_axioms(const TropCrystal& tc, int radius);

struct Connectivity {
  bool connected = false;
  size_t box_points = 0;
  size_t reached = 0;
  size_t visited = 0;  // search nodes over all box points
};
// Every box point is joined to the origin's component by a best-first search
// over e~_i^{+1}, e~_i^{-1} with free coordinates within radius + slack; one
// search stops after `cap` nodes.
Connectivity connectivity_sample(const TropCrystal& tc, int radius, int slack = 2, size_t cap = 2000000);

// Tensor product of two lattice points on one model.
std::pair<Lattice, Lattice> tensor_e(const TropCrystal& cx, const TropCrystal& cy, int i, long long k,
                                     const Lattice& a, const Lattice& b);
// wt then eps of a tensor product.
Lattice tensor_structure(const TropCrystal& cx, const TropCrystal& cy, const Lattice& a, const Lattice& b);

// Piecewise-linear tensor rule against UD of the rational product action.
Report check_tensor_rule(std::shared_ptr<const Model> m, long long lx, long long ly, int samples, Sampler& smp);

struct CombRConfig {
  int radius = 1;
  std::vector<long long> levels{1, 2, 3};
  // Exhaustive triples only when box^3 stays within this bound.
  long long triple_limit = 2000000;
  // Sampled triples otherwise.
  int triple_samples = 20000;
};
// Tropical (R-e), (R-eps), (R-wt), (inver), identity at equal levels and YB.
Report combinatorial_r_check(const TypeId& t, const CombRConfig& cfg, Sampler& smp);

// Degree in t at x = t^c against tropical evaluation, for every gamma_i, eps_i
// and action component of the model; exponents of coords, L and c in [-5, 5].
Report degree_consistency_report(const Model& m, int samples, Sampler& smp);

// Lattice points of the box as nodes, edges b ->_i e~_i^1 b inside the box.
std::string crystal_dot(const TropCrystal& tc, int radius);

}  // namespace gc
