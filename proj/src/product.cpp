#include "gcrystal/product.hpp"

namespace gc {

std::pair<Scalar, Scalar> split_parameter(const Scalar& c, const Scalar& phi_x, const Scalar& eps_y) {
  Scalar den = phi_x + eps_y;
  if (den == 0) throw DomainError("phi(x) + eps(y) vanishes");
  Scalar c1 = (c * phi_x + eps_y) / den;
  if (c1 == 0) throw DomainError("split parameter vanishes");
  return {c1, c / c1};
}

namespace {

StructureValues combine(const StructureValues& x, const StructureValues& y) {
  if (x.phi == 0) throw DomainError("phi vanishes");
  StructureValues r;
  r.gamma = x.gamma * y.gamma;
  r.eps = x.eps + x.eps * y.eps / x.phi;
  r.phi = r.gamma * r.eps;
  return r;
}

StructureValues left_fold(const Model& m, const std::vector<GCPoint>& f, size_t count, int i) {
  StructureValues acc = structure_functions(m, i, f[0]);
  for (size_t k = 1; k < count; ++k) acc = combine(acc, structure_functions(m, i, f[k]));
  return acc;
}

void apply_prefix(const Model& m, std::vector<GCPoint>& f, size_t count, int i, const Scalar& c) {
  if (count == 1) {
    f[0] = apply_e(m, i, c, f[0]);
    return;
  }
  StructureValues x = left_fold(m, f, count - 1, i);
  StructureValues y = structure_functions(m, i, f[count - 1]);
  auto [c1, c2] = split_parameter(c, x.phi, y.eps);
  f[count - 1] = apply_e(m, i, c2, f[count - 1]);
  apply_prefix(m, f, count - 1, i, c1);
}

}  // namespace

ProductPoint product_apply_e(const Model& m, const ProductPoint& pp, int i, const Scalar& c) {
  if (pp.factors.empty()) throw std::invalid_argument("empty product");
  ProductPoint out = pp;
  apply_prefix(m, out.factors, out.factors.size(), i, c);
  return out;
}

StructureValues product_structure_functions(const Model& m, const ProductPoint& pp, int i) {
  if (pp.factors.empty()) throw std::invalid_argument("empty product");
  return left_fold(m, pp.factors, pp.factors.size(), i);
}

StructureValues product_structure_right(const Model& m, const ProductPoint& pp, int i) {
  if (pp.factors.empty()) throw std::invalid_argument("empty product");
  StructureValues acc = structure_functions(m, i, pp.factors.back());
  for (size_t k = pp.factors.size() - 1; k-- > 0;) acc = combine(structure_functions(m, i, pp.factors[k]), acc);
  return acc;
}

std::map<std::string, Expr> prefix_bindings(const Model& m, const std::string& p) {
  std::map<std::string, Expr> b;
  for (auto& c : m.coords) b[c] = V(p + c);
  b["L"] = V(p + "L");
  return b;
}

PairExprs pair_exprs(const Model& m, const std::string& pa, const std::string& pb) {
  PairExprs out;
  Substitution sa(prefix_bindings(m, pa)), sb(prefix_bindings(m, pb));
  const Expr c = V("c");
  for (int i = 0; i < m.index_count(); ++i) {
    size_t s = static_cast<size_t>(i);
    Expr gx = sa(m.gamma[s]), ex = sa(m.eps[s]);
    Expr gy = sb(m.gamma[s]), ey = sb(m.eps[s]);
    Expr phx = gx * ex;
    Expr c1 = (c * phx + ey) / (phx + ey);
    Expr c2 = c * (phx + ey) / (c * phx + ey);
    auto ca = prefix_bindings(m, pa);
    ca["c"] = c1;
    auto cb = prefix_bindings(m, pb);
    cb["c"] = c2;
    Substitution ta(ca), tb(cb);
    std::vector<Expr> row = ta(m.action[s]);
    for (auto& e : tb(m.action[s])) row.push_back(e);
    out.action.push_back(row);
    out.gamma.push_back(gx * gy);
    out.eps.push_back(ex + ex * ey / phx);
  }
  return out;
}

}  // namespace gc
