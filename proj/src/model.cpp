#include "gcrystal/model.hpp"

#include <map>
#include <mutex>

namespace gc {

std::string model_id(ModelKind k) {
  switch (k) {
    case ModelKind::V: return "V";
    case ModelKind::B: return "B";
    case ModelKind::V2: return "V2";
  }
  return "?";
}

ModelKind parse_model(const std::string& id) {
  if (id == "V") return ModelKind::V;
  if (id == "B") return ModelKind::B;
  if (id == "V2") return ModelKind::V2;
  throw std::invalid_argument("unknown model: " + id);
}

int Model::coord_index(const std::string& name) const {
  for (size_t k = 0; k < coords.size(); ++k)
    if (coords[k] == name) return static_cast<int>(k);
  throw std::invalid_argument("no coordinate " + name + " in " + label());
}

std::string Model::label() const { return model_id(kind) + "(" + type_label(type) + ")"; }

Expr v_pair(const TypeId& t, int i) {
  const Family f = t.family;
  const int n = t.n;
  const int nbar = f == Family::D1 ? n - 2 : n - 1;
  auto x = [](int k) { return V("x" + std::to_string(k)); };
  const Expr L = V("L");
  if (i == 0) {
    if (f == Family::D2 || f == Family::A2even) return pow(x(0), 2) / pow(L, 2);
    if (f == Family::A2evenDagger) return x(0) / L;
    return 1 / L;
  }
  if (i <= nbar) return x(i) * V("xb" + std::to_string(i));
  if (f == Family::D1) return x(n - 1) * x(n);
  if (f == Family::A2odd || f == Family::A2even) return x(n);
  return pow(x(n), 2);
}

namespace {

std::string ix(const std::string& base, int k) { return base + std::to_string(k); }

// Collects per-index data, then fills a Model.
struct Draft {
  std::vector<std::string> coords;
  std::vector<std::map<std::string, Expr>> moves;  // changed coordinates only
  std::vector<Expr> gamma, eps;

  explicit Draft(int indices) : moves(static_cast<size_t>(indices)), gamma(static_cast<size_t>(indices)),
                                eps(static_cast<size_t>(indices)) {}

  void scale_all(int i, const Expr& f) {
    for (auto& c : coords) moves[static_cast<size_t>(i)][c] = V(c) * f;
  }
  void set(int i, const std::string& c, const Expr& e) { moves[static_cast<size_t>(i)][c] = e; }
};

const Expr L = V("L");
const Expr c = V("c");

// ---------------------------------------------------------------- V models

Draft v_a1(int n) {
  Draft d(n + 1);
  auto x = [](int k) { return V(ix("x", k)); };
  for (int k = 1; k <= n; ++k) d.coords.push_back(ix("x", k));
  d.scale_all(0, 1 / c);
  d.eps[0] = L * x(1);
  d.gamma[0] = 1 / (L * x(1) * x(n));
  for (int i = 1; i <= n; ++i) {
    d.set(i, ix("x", i), c * x(i));
    d.eps[static_cast<size_t>(i)] = i == n ? 1 / x(n) : x(i + 1) / x(i);
    Expr g = pow(x(i), 2) / (i > 1 ? x(i - 1) : 1 / L);
    if (i < n) g = g / x(i + 1);
    d.gamma[static_cast<size_t>(i)] = g;
  }
  return d;
}

Draft v_model(const TypeId& t) {
  const Family f = t.family;
  const int n = t.n;
  if (f == Family::A1) return v_a1(n);
  const bool has0 = f == Family::D2 || f == Family::A2even || f == Family::A2evenDagger;
  const bool dag = f == Family::A2evenDagger;
  const bool sq0 = f == Family::D2 || f == Family::A2even;  // x_0 enters squared
  const int nbar = f == Family::D1 ? n - 2 : n - 1;
  Draft d(n + 1);
  if (has0) d.coords.push_back("x0");
  for (int k = 1; k <= n; ++k) d.coords.push_back(ix("x", k));
  for (int k = 1; k <= nbar; ++k) d.coords.push_back(ix("xb", k));
  auto x = [](int k) { return V(ix("x", k)); };
  auto xb = [](int k) { return V(ix("xb", k)); };
  auto P = [&](int i) { return v_pair(t, i); };
  auto xm = [&](int i) -> Expr {
    if (i > 1) return x(i - 1);
    if (sq0) return pow(x(0), 2);
    if (dag) return x(0);
    return 1;
  };
  const bool top_sq = f == Family::A2odd || f == Family::A2even;

  // i = 0
  if (f == Family::B1 || f == Family::D1 || f == Family::A2odd) {
    Expr P1 = P(1), P2 = P(2);
    d.scale_all(0, 1 / c);
    d.set(0, "x1", x(1) * (c * P1 + P2) / (c * (P1 + P2)));
    d.set(0, "xb1", xb(1) * (P1 + P2) / (c * P1 + P2));
    if (f == Family::A2odd) d.set(0, ix("x", n), x(n) / pow(c, 2));
    d.eps[0] = L * (P1 + P2) / x(1);
    d.gamma[0] = 1 / (L * P2);
  } else if (sq0) {
    Expr A = pow(x(0), 2), B = pow(L, 2) * P(1);
    Expr K = (pow(c, 2) * A + B) / (pow(c, 2) * (A + B));
    d.scale_all(0, K);
    d.set(0, "x0", x(0) * (pow(c, 2) * A + B) / (c * (A + B)));
    if (f == Family::A2even) d.set(0, ix("x", n), x(n) * pow(K, 2));
    d.eps[0] = (A + B) / pow(x(0), 3);
    d.gamma[0] = A / B;
  } else {
    Expr lp = L * P(1);
    Expr u = c * x(0) + lp, v = x(0) + lp;
    d.scale_all(0, u / (c * v));
    d.set(0, "x0", x(0) * pow(u, 2) / (c * pow(v, 2)));
    d.eps[0] = (1 / x(0)) * pow(1 + lp / x(0), 2);
    d.gamma[0] = pow(x(0), 2) / pow(lp, 2);
  }

  for (int i = 1; i <= n; ++i) {
    auto& g = d.gamma[static_cast<size_t>(i)];
    auto& e = d.eps[static_cast<size_t>(i)];
    if (f == Family::D1 && i >= n - 1) {
      d.set(i, ix("x", i), c * x(i));
      e = x(n - 2) / x(i);
      g = pow(x(i), 2) / P(n - 2);
    } else if (i == n) {
      d.set(i, ix("x", n), c * x(n));
      e = top_sq ? pow(x(n - 1), 2) / x(n) : x(n - 1) / x(n);
      g = top_sq ? pow(x(n), 2) / pow(P(n - 1), 2) : pow(x(n), 2) / P(n - 1);
    } else {
      Expr Pi = P(i), Pj = P(i + 1);
      d.set(i, ix("x", i), x(i) * (c * Pi + Pj) / (Pi + Pj));
      d.set(i, ix("xb", i), xb(i) * c * (Pi + Pj) / (c * Pi + Pj));
      e = xm(i) / x(i) * (1 + Pj / Pi);
      g = pow(Pi, 2) / (P(i - 1) * Pj);
    }
  }
  return d;
}

// Second chart for the A2even families; carries e_0..e_{n-1}.
Draft v2_model(const TypeId& t) {
  const int n = t.n;
  const bool dag = t.family == Family::A2evenDagger;
  Draft d(n);
  for (int k = 0; k <= n; ++k) d.coords.push_back(ix("y", k));
  for (int k = 1; k < n; ++k) d.coords.push_back(ix("yb", k));
  auto y = [](int k) { return V(ix("y", k)); };
  auto yb = [](int k) { return V(ix("yb", k)); };
  auto Q = [&](int k) -> Expr {
    if (k == 0) return dag ? y(0) : pow(y(0), 2);
    return y(k) * yb(k);
  };
  Expr top = dag ? pow(y(n), 2) / L : y(n) / pow(L, 2);
  d.set(0, "y0", c * y(0));
  d.gamma[0] = pow(y(0), 2) / pow(Q(1), dag ? 2 : 1);
  d.eps[0] = pow(y(1), dag ? 2 : 1) / y(0);
  for (int i = 1; i < n; ++i) {
    Expr Pi = Q(i), Pm = Q(i - 1);
    d.set(i, ix("y", i), y(i) * (c * Pi + Pm) / (Pi + Pm));
    d.set(i, ix("yb", i), yb(i) * c * (Pi + Pm) / (c * Pi + Pm));
    Expr next = i < n - 1 ? Q(i + 1) : top;
    d.gamma[static_cast<size_t>(i)] = pow(Pi, 2) / (Pm * next);
    Expr num = i == n - 1 ? (dag ? pow(y(n), 2) : y(n)) : y(i + 1);
    d.eps[static_cast<size_t>(i)] = num / y(i) * (1 + Pm / Pi);
  }
  return d;
}

// ---------------------------------------------------------------- B models

Draft b_a1(int n, std::vector<int>& w, int& tp, int& solve) {
  Draft d(n + 1);
  for (int k = 1; k <= n + 1; ++k) d.coords.push_back(ix("l", k));
  auto l = [](int k) { return V(ix("l", k)); };
  for (int i = 0; i <= n; ++i) {
    int a = i >= 1 ? i : n + 1, b = i + 1;
    d.set(i, ix("l", a), c * l(a));
    d.set(i, ix("l", b), l(b) / c);
    d.eps[static_cast<size_t>(i)] = l(b);
    d.gamma[static_cast<size_t>(i)] = l(a) / l(b);
  }
  w.assign(static_cast<size_t>(n + 1), 1);
  tp = 1;
  solve = n;
  return d;
}

// Generic xi-move on node i acting through coordinate pair k; shared by the
// D1 model and the folded models (letters "l"/"lb" or "m"/"mb").
void xi_move(Draft& d, int i, const std::string& u, const std::string& ub) {
  int k = i == 0 ? 2 : i + 1;
  Expr lk = V(ix(u, k)), lbk = V(ix(ub, k));
  Expr xi = (c * lbk + lk) / (lbk + lk);
  d.set(i, ix(u, k), xi * lk / c);
  d.set(i, ix(ub, k), xi * lbk);
  if (i == 0) {
    d.set(0, ix(u, 1), V(ix(u, 1)) / xi);
    d.set(0, ix(ub, 1), c * V(ix(ub, 1)) / xi);
  } else {
    d.set(i, ix(u, i), c * V(ix(u, i)) / xi);
    d.set(i, ix(ub, i), V(ix(ub, i)) / xi);
  }
}

Draft b_d1(int n, std::vector<int>& w, int& tp, int& solve) {
  Draft d(n + 1);
  for (int k = 1; k <= n; ++k) d.coords.push_back(ix("l", k));
  for (int k = 1; k < n; ++k) d.coords.push_back(ix("lb", k));
  auto l = [](int k) { return V(ix("l", k)); };
  auto b = [](int k) { return V(ix("lb", k)); };
  for (int i = 0; i <= n; ++i) {
    auto& g = d.gamma[static_cast<size_t>(i)];
    auto& e = d.eps[static_cast<size_t>(i)];
    if (i == n - 1) {
      d.set(i, ix("l", n - 1), c * l(n - 1));
      d.set(i, ix("l", n), l(n) / c);
      e = l(n) * b(n - 1);
      g = l(n - 1) / (l(n) * b(n - 1));
    } else if (i == n) {
      d.set(i, ix("l", n), c * l(n));
      d.set(i, ix("lb", n - 1), b(n - 1) / c);
      e = b(n - 1);
      g = l(n - 1) * l(n) / b(n - 1);
    } else {
      xi_move(d, i, "l", "lb");
      if (i == 0) {
        e = l(1) * (l(2) / b(2) + 1);
        g = b(1) * b(2) / (l(1) * l(2));
      } else {
        e = b(i) * (l(i + 1) / b(i + 1) + 1);
        g = l(i) * b(i + 1) / (b(i) * l(i + 1));
      }
    }
  }
  w.assign(d.coords.size(), 1);
  tp = 1;
  solve = n - 1;
  return d;
}

// B models of B1, D2, A2odd, A2even in coordinates m_i, mb_i (and m_0).
Draft b_folded(const TypeId& t, std::vector<int>& w, int& tp, int& solve) {
  const Family f = t.family;
  const int n = t.n;
  const bool has0 = f == Family::D2 || f == Family::A2even;
  const bool top = f == Family::A2odd || f == Family::A2even;
  Draft d(n + 1);
  if (has0) d.coords.push_back("m0");
  for (int k = 1; k <= n; ++k) d.coords.push_back(ix("m", k));
  for (int k = 1; k <= n; ++k) d.coords.push_back(ix("mb", k));
  auto m = [](int k) { return V(ix("m", k)); };
  auto b = [](int k) { return V(ix("mb", k)); };
  std::vector<Expr> den;
  if (has0) den.push_back(pow(m(0), 2));
  for (int k = 1; k < n; ++k) den.push_back(m(k));
  for (int k = 1; k <= n; ++k) den.push_back(b(k));
  Expr M = L / Expr::product(den);

  for (int i = 0; i <= n; ++i) {
    auto& g = d.gamma[static_cast<size_t>(i)];
    auto& e = d.eps[static_cast<size_t>(i)];
    if (i == n) {
      d.set(i, ix("m", n), c * m(n));
      d.set(i, ix("mb", n), b(n) / c);
      e = b(n);
      g = m(n) / b(n);
    } else if (i == 0 && has0) {
      Expr xi = (pow(c, 2) * b(1) + m(1)) / (b(1) + m(1));
      d.set(0, "m0", c * m(0) / xi);
      d.set(0, "m1", xi * m(1) / pow(c, 2));
      d.set(0, "mb1", xi * b(1));
      e = m(0) * (m(1) / b(1) + 1);
      g = b(1) / m(1);
    } else if (i == n - 1 && top) {
      Expr xi = (c + M) / (1 + M);
      d.set(i, ix("m", n - 1), m(n - 1) * c / xi);
      d.set(i, ix("m", n), m(n) * pow(xi, 2) / pow(c, 2));
      d.set(i, ix("mb", n), b(n) * pow(xi, 2));
      d.set(i, ix("mb", n - 1), b(n - 1) / xi);
      e = b(n - 1) * (M + 1);
      g = m(n - 1) / b(n - 1) / M;
    } else {
      xi_move(d, i, "m", "mb");
      if (i == 0) {
        e = m(1) * (m(2) / b(2) + 1);
        g = b(1) * b(2) / (m(1) * m(2));
      } else {
        e = b(i) * (m(i + 1) / b(i + 1) + 1);
        g = m(i) * b(i + 1) / (b(i) * m(i + 1));
      }
    }
  }
  w.clear();
  for (auto& name : d.coords) {
    int wt = 1;
    if (name == "m0") wt = has0 && top ? 4 : 2;
    else if (top && name != ix("m", n) && name != ix("mb", n)) wt = 2;
    w.push_back(wt);
  }
  tp = top ? 2 : 1;
  solve = static_cast<int>(has0 ? n : n - 1);
  return d;
}

std::shared_ptr<const Model> make_model(const TypeId& t, ModelKind kind) {
  check_rank(t);
  auto m = std::make_shared<Model>();
  m->type = t;
  m->kind = kind;
  m->cartan = cartan_matrix(t);
  Draft d(0);
  switch (kind) {
    case ModelKind::V: d = v_model(t); break;
    case ModelKind::V2:
      if (t.family != Family::A2even && t.family != Family::A2evenDagger)
        throw UnsupportedModel("V2 exists only for a2-even and a2-even-dagger");
      d = v2_model(t);
      break;
    case ModelKind::B:
      switch (t.family) {
        case Family::A1: d = b_a1(t.n, m->weights, m->target_power, m->solve); break;
        case Family::D1: d = b_d1(t.n, m->weights, m->target_power, m->solve); break;
        case Family::A2evenDagger: throw UnsupportedModel("no B model for a2-even-dagger");
        default: d = b_folded(t, m->weights, m->target_power, m->solve); break;
      }
      break;
  }
  m->coords = d.coords;
  m->gamma = d.gamma;
  m->eps = d.eps;
  std::vector<std::string> in = m->coords;
  in.push_back("L");
  std::vector<std::string> in_c = in;
  in_c.push_back("c");
  for (auto& mv : d.moves) {
    std::vector<Expr> row;
    for (auto& name : m->coords) {
      auto it = mv.find(name);
      row.push_back(it == mv.end() ? V(name) : it->second);
    }
    m->action.push_back(row);
    m->action_prog.emplace_back(in_c, row);
  }
  std::vector<Expr> st = m->gamma;
  st.insert(st.end(), m->eps.begin(), m->eps.end());
  m->structure_prog = Program(in, st);
  return m;
}

}  // namespace

std::shared_ptr<const Model> build_model(const TypeId& t, ModelKind kind) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Model>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(t.family), t.n, static_cast<int>(kind));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto m = make_model(t, kind);
  cache.emplace(key, m);
  return m;
}

namespace {
void check_point(const Model& m, const GCPoint& p) {
  if (!(p.type == m.type) || p.kind != m.kind || p.coords.size() != m.coords.size())
    throw std::invalid_argument("point does not match model " + m.label());
}
}  // namespace

GCPoint apply_e(const Model& m, int i, const Scalar& cval, const GCPoint& p) {
  check_point(m, p);
  if (i < 0 || i >= m.index_count()) throw std::invalid_argument("index out of range");
  std::vector<Scalar> in = p.coords;
  in.push_back(p.L);
  in.push_back(cval);
  GCPoint out = p;
  out.coords = m.action_prog[static_cast<size_t>(i)].run<RationalSemiring>(in);
  return out;
}

std::vector<Scalar> structure_all(const Model& m, const GCPoint& p) {
  check_point(m, p);
  std::vector<Scalar> in = p.coords;
  in.push_back(p.L);
  return m.structure_prog.run<RationalSemiring>(in);
}

StructureValues structure_functions(const Model& m, int i, const GCPoint& p) {
  auto all = structure_all(m, p);
  size_t k = static_cast<size_t>(m.index_count());
  StructureValues s{all[static_cast<size_t>(i)], all[k + static_cast<size_t>(i)], 0};
  s.phi = s.gamma * s.eps;
  return s;
}

Scalar constraint_value(const Model& m, const std::vector<Scalar>& coords) {
  Scalar r(1);
  for (size_t k = 0; k < coords.size(); ++k) r *= ipow(coords[k], m.weights[k]);
  return r;
}

Scalar constraint_target(const Model& m, const Scalar& L) { return ipow(L, m.target_power); }

bool constraint_holds(const Model& m, const GCPoint& p) {
  if (!m.has_constraint()) return true;
  return constraint_value(m, p.coords) == constraint_target(m, p.L);
}

GCPoint make_point(const Model& m, const Scalar& L, std::vector<Scalar> coords) {
  if (coords.size() != m.coords.size()) throw std::invalid_argument("wrong coordinate count");
  return GCPoint{m.type, m.kind, L, std::move(coords)};
}

GCPoint sample_point(const Model& m, Sampler& s, const std::optional<Scalar>& L) {
  Scalar spec = L ? *L : s.draw();
  std::vector<Scalar> x;
  for (size_t k = 0; k < m.coords.size(); ++k) x.push_back(s.draw());
  if (m.has_constraint()) {
    size_t k = static_cast<size_t>(m.solve);
    x[k] = 1;
    x[k] = constraint_target(m, spec) / constraint_value(m, x);
  }
  return make_point(m, spec, std::move(x));
}

std::vector<long long> apply_e_trop(const Model& m, int i, long long k, long long level,
                                    const std::vector<long long>& b) {
  std::vector<long long> in = b;
  in.push_back(level);
  in.push_back(k);
  return m.action_prog[static_cast<size_t>(i)].run<TropicalSemiring>(in);
}

std::vector<long long> structure_trop(const Model& m, long long level, const std::vector<long long>& b) {
  std::vector<long long> in = b;
  in.push_back(level);
  return m.structure_prog.run<TropicalSemiring>(in);
}

}  // namespace gc
