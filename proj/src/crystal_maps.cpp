#include "gcrystal/crystal_maps.hpp"

#include <map>
#include <mutex>

namespace gc {

void PointMap::compile() {
  std::vector<std::string> in = src->coords;
  in.push_back("L");
  std::vector<Expr> outs = out;
  if (scalar) outs.push_back(*scalar);
  prog = Program(in, outs);
}

namespace {

Scalar target_spectral(SpectralRule r, const Scalar& L) {
  switch (r) {
    case SpectralRule::Same: return L;
    case SpectralRule::Square: return L * L;
    case SpectralRule::Sqrt: {
      Scalar root;
      if (!rational_sqrt(L, root)) throw DomainError("spectral parameter " + to_string(L) + " is not a square");
      return root;
    }
  }
  return L;
}

std::string ix(const std::string& b, int k) { return b + std::to_string(k); }
Expr x(int k) { return V(ix("x", k)); }
Expr xb(int k) { return V(ix("xb", k)); }
Expr y(int k) { return V(ix("y", k)); }
Expr yb(int k) { return V(ix("yb", k)); }
const Expr L = V("L");

Expr prod_range(const std::string& base, int from, int to) {
  std::vector<Expr> f;
  for (int k = from; k <= to; ++k) f.push_back(V(ix(base, k)));
  return Expr::product(f);
}

// Fills out[] in the order of dst->coords from a name -> expr table.
void place(PointMap& m, const std::map<std::string, Expr>& table) {
  for (auto& name : m.dst->coords) {
    auto it = table.find(name);
    if (it == table.end()) throw std::logic_error("map leaves " + name + " undefined");
    m.out.push_back(it->second);
  }
  m.compile();
}

PointMap make_sigma_bar(const TypeId& t) {
  const int n = t.n;
  PointMap m;
  m.src = build_model(t, ModelKind::V);
  auto P = [&](int i) { return v_pair(t, i); };
  std::map<std::string, Expr> y_;
  switch (t.family) {
    case Family::A1:
      m.dst = m.src;
      y_["x1"] = 1 / (L * x(n));
      for (int k = 2; k <= n; ++k) y_[ix("x", k)] = x(k - 1) / x(n);
      break;
    case Family::B1:
    case Family::D1:
    case Family::A2odd: {
      m.dst = m.src;
      Expr a = 1 / (L * x(1) * xb(1));
      for (auto& c : m.src->coords) y_[c] = a * V(c);
      if (t.family == Family::A2odd) y_[ix("x", n)] = pow(a, 2) * x(n);
      m.scalar = a;
      break;
    }
    case Family::D2: {
      m.dst = m.src;
      Expr S = P(n - 1) + pow(x(n), 2);
      Expr tail = x(n - 1) * pow(x(n), 2);
      m.scalar = S / (L * tail);
      y_["x0"] = S / (x(n - 1) * x(n));
      for (int i = 1; i <= n - 2; ++i) {
        Expr s = P(n - i - 1) + P(n - i);
        y_[ix("x", i)] = s * S / (x(n - i - 1) * tail);
        y_[ix("xb", i)] = S * x(n - i - 1) * P(n - i) / (pow(L, 2) * s * tail);
      }
      y_[ix("x", n - 1)] = (pow(x(0), 2) / pow(L, 2) + P(1)) * S / (pow(x(0), 2) * tail);
      y_[ix("x", n)] = x(0) * S / (pow(L, 2) * tail);
      y_[ix("xb", n - 1)] = S * pow(x(0), 2) * P(1) / ((pow(x(0), 2) + pow(L, 2) * P(1)) * tail);
      break;
    }
    case Family::A2even: {
      m.dst = build_model(t, ModelKind::V2);
      Expr a = (P(n - 1) + x(n)) / (pow(L, 2) * x(n - 1) * x(n));
      m.scalar = a;
      y_["y0"] = a * x(0);
      y_["y1"] = a * (pow(x(0), 2) + pow(L, 2) * P(1)) / pow(x(0), 2);
      for (int i = 2; i < n; ++i) y_[ix("y", i)] = pow(L, 2) * a * (P(i - 1) + P(i)) / x(i - 1);
      y_[ix("y", n)] = pow(P(n - 1) + x(n), 2) / (pow(x(n - 1), 2) * x(n));
      y_["yb1"] = a * pow(L, 2) * pow(x(0), 2) * P(1) / (pow(x(0), 2) + pow(L, 2) * P(1));
      for (int i = 2; i < n; ++i) y_[ix("yb", i)] = a * x(i - 1) * P(i) / (P(i - 1) + P(i));
      break;
    }
    case Family::A2evenDagger: {
      m.dst = build_model(t, ModelKind::V2);
      Expr a = (P(n - 1) + pow(x(n), 2)) / (L * x(n - 1) * pow(x(n), 2));
      m.scalar = a;
      y_["y0"] = pow(a, 2) * x(0);
      y_["y1"] = L * a * (x(0) / L + P(1)) / x(0);
      for (int i = 2; i < n; ++i) y_[ix("y", i)] = L * a * (P(i - 1) + P(i)) / x(i - 1);
      y_[ix("y", n)] = L * a * x(n);
      y_["yb1"] = a * x(0) * P(1) / (x(0) / L + P(1));
      for (int i = 2; i < n; ++i) y_[ix("yb", i)] = a * x(i - 1) * P(i) / (P(i - 1) + P(i));
      break;
    }
  }
  place(m, y_);
  return m;
}

PointMap make_sigma_bar_inverse(const TypeId& t) {
  if (t.family != Family::A2even && t.family != Family::A2evenDagger)
    throw UnsupportedModel("sigma-bar inverse from V2 exists only for the a2-even families");
  const int n = t.n;
  const bool dag = t.family == Family::A2evenDagger;
  PointMap m;
  m.src = build_model(t, ModelKind::V2);
  m.dst = build_model(t, ModelKind::V);
  auto Q = [](int k) { return y(k) * yb(k); };
  std::map<std::string, Expr> x_;
  Expr a = dag ? y(0) * y(1) / (y(0) + Q(1)) : pow(y(0), 2) * y(1) / (pow(y(0), 2) + Q(1));
  Expr lev = dag ? L : pow(L, 2);  // l or l^2 in the bulk formulas
  m.scalar = a;
  x_["x0"] = dag ? (y(0) + Q(1)) / (a * y(1)) : y(0) / a;
  for (int i = 1; i <= n - 2; ++i) {
    x_[ix("x", i)] = (Q(i) + Q(i + 1)) / (a * y(i + 1));
    x_[ix("xb", i)] = Q(i) * y(i + 1) / (lev * a * (Q(i) + Q(i + 1)));
  }
  Expr top = dag ? pow(y(n), 2) : y(n);
  x_[ix("x", n - 1)] = (Q(n - 1) + top / lev) / (a * top);
  x_[ix("x", n)] = dag ? y(n) / (L * a) : y(n) / (pow(L, 4) * pow(a, 2));
  x_[ix("xb", n - 1)] = Q(n - 1) * top / (a * (lev * Q(n - 1) + top));
  place(m, x_);
  return m;
}

// B -> V, with "L" the B spectral parameter.
PointMap make_xi(const TypeId& t) {
  const int n = t.n;
  PointMap m;
  m.src = build_model(t, ModelKind::B);
  m.dst = build_model(t, ModelKind::V);
  std::map<std::string, Expr> v;
  switch (t.family) {
    case Family::A1:
      for (int k = 1; k <= n; ++k) v[ix("x", k)] = prod_range("l", 1, k) / L;
      break;
    case Family::D1:
      for (int i = 1; i <= n - 2; ++i) {
        v[ix("x", i)] = 1 / prod_range("lb", 1, i);
        v[ix("xb", i)] = prod_range("l", 1, i) / L;
      }
      v[ix("x", n - 1)] = 1 / (prod_range("lb", 1, n - 1) * V(ix("l", n)));
      v[ix("x", n)] = 1 / prod_range("lb", 1, n - 1);
      break;
    case Family::B1:
      for (int i = 1; i <= n; ++i) v[ix("x", i)] = 1 / prod_range("mb", 1, i);
      for (int i = 1; i < n; ++i) v[ix("xb", i)] = prod_range("m", 1, i) / L;
      break;
    case Family::D2:
    case Family::A2odd:
    case Family::A2even: {
      const bool has0 = t.family != Family::A2odd;
      Expr m02 = has0 ? pow(V("m0"), 2) : Expr(1);
      if (has0) v["x0"] = 1 / V("m0");
      for (int i = 1; i < n; ++i) {
        v[ix("x", i)] = 1 / (m02 * prod_range("mb", 1, i));
        v[ix("xb", i)] = prod_range("m", 1, i) / L;
      }
      if (t.family == Family::D2)
        v[ix("x", n)] = 1 / (m02 * prod_range("mb", 1, n));
      else
        v[ix("x", n)] = 1 / (V(ix("mb", n)) * pow(m02 * prod_range("mb", 1, n - 1), 2));
      m.rule = t.family == Family::A2odd ? SpectralRule::Same : SpectralRule::Sqrt;
      break;
    }
    case Family::A2evenDagger: throw UnsupportedModel("no B model for a2-even-dagger");
  }
  place(m, v);
  return m;
}

// V -> B, with "L" the V level.
PointMap make_xi_inverse(const TypeId& t) {
  const int n = t.n;
  PointMap m;
  m.src = build_model(t, ModelKind::V);
  m.dst = build_model(t, ModelKind::B);
  std::map<std::string, Expr> b;
  switch (t.family) {
    case Family::A1:
      b["l1"] = x(1) * L;
      for (int k = 2; k <= n; ++k) b[ix("l", k)] = x(k) / x(k - 1);
      b[ix("l", n + 1)] = 1 / x(n);
      break;
    case Family::D1:
      b["l1"] = L * xb(1);
      b["lb1"] = 1 / x(1);
      for (int i = 2; i <= n - 2; ++i) {
        b[ix("l", i)] = xb(i) / xb(i - 1);
        b[ix("lb", i)] = x(i - 1) / x(i);
      }
      b[ix("l", n - 1)] = x(n - 1) / xb(n - 2);
      b[ix("l", n)] = x(n) / x(n - 1);
      b[ix("lb", n - 1)] = x(n - 2) / x(n);
      break;
    case Family::B1:
    case Family::D2:
    case Family::A2odd:
    case Family::A2even: {
      const Family f = t.family;
      const bool has0 = f == Family::D2 || f == Family::A2even;
      const bool top = f == Family::A2odd || f == Family::A2even;
      Expr lev = has0 ? pow(L, 2) : L;
      if (has0) {
        b["m0"] = 1 / x(0);
        b["mb1"] = pow(x(0), 2) / x(1);
      } else {
        b["mb1"] = 1 / x(1);
      }
      int last = top ? n - 1 : n;
      for (int i = 2; i <= last; ++i) b[ix("mb", i)] = x(i - 1) / x(i);
      if (top) b[ix("mb", n)] = pow(x(n - 1), 2) / x(n);
      b["m1"] = lev * xb(1);
      for (int i = 2; i < n; ++i) b[ix("m", i)] = xb(i) / xb(i - 1);
      b[ix("m", n)] = top ? x(n) / pow(xb(n - 1), 2) : x(n) / xb(n - 1);
      m.rule = has0 ? SpectralRule::Square : SpectralRule::Same;
      break;
    }
    case Family::A2evenDagger: throw UnsupportedModel("no B model for a2-even-dagger");
  }
  place(m, b);
  return m;
}

template <class Make>
const PointMap& cached(std::map<std::pair<int, int>, PointMap>& cache, const TypeId& t, Make make) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t.family), t.n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make(t)).first;
  return it->second;
}

}  // namespace

GCPoint apply_map(const PointMap& m, const GCPoint& p, Scalar* scalar_out) {
  if (!(p.type == m.src->type) || p.kind != m.src->kind || p.coords.size() != m.src->coords.size())
    throw std::invalid_argument("point does not match source model " + m.src->label());
  std::vector<Scalar> in = p.coords;
  in.push_back(p.L);
  auto out = m.prog.run<RationalSemiring>(in);
  if (m.scalar) {
    if (scalar_out) *scalar_out = out.back();
    out.pop_back();
  }
  return GCPoint{m.dst->type, m.dst->kind, target_spectral(m.rule, p.L), out};
}

const PointMap& sigma_bar_map(const TypeId& t) {
  static std::map<std::pair<int, int>, PointMap> cache;
  return cached(cache, t, make_sigma_bar);
}

const PointMap& sigma_bar_inverse_map(const TypeId& t) {
  static std::map<std::pair<int, int>, PointMap> cache;
  return cached(cache, t, make_sigma_bar_inverse);
}

std::pair<GCPoint, std::optional<Scalar>> sigma_bar(const TypeId& t, const GCPoint& p) {
  const PointMap& m = sigma_bar_map(t);
  Scalar a;
  GCPoint q = apply_map(m, p, &a);
  return {q, m.scalar ? std::optional<Scalar>(a) : std::nullopt};
}

const PointMap& xi_map(const TypeId& t, XiDirection d) {
  static std::map<std::pair<int, int>, PointMap> fwd, bwd;
  return d == XiDirection::BtoV ? cached(fwd, t, make_xi) : cached(bwd, t, make_xi_inverse);
}

GCPoint iso_Xi(const TypeId& t, XiDirection d, const GCPoint& p) { return apply_map(xi_map(t, d), p); }

std::vector<Scalar> schubert_e_action(const std::vector<int>& word, const std::vector<Scalar>& coords,
                                      const IntMatrix& a, int i, const Scalar& c) {
  const size_t k = word.size();
  if (coords.size() != k) throw std::invalid_argument("word and coordinates differ in length");
  // term[m] = 1/(c_1^{a_{i_1,i}} ... c_{m-1}^{a_{i_{m-1},i}} c_m) for i_m = i
  std::vector<Scalar> term(k, Scalar(0));
  Scalar pre(1);
  for (size_t m = 0; m < k; ++m) {
    if (coords[m] == 0) throw DomainError("zero Schubert coordinate");
    if (word[m] == i) term[m] = 1 / (pre * coords[m]);
    pre *= ipow(coords[m], a[static_cast<size_t>(word[m])][static_cast<size_t>(i)]);
  }
  std::vector<Scalar> out(k);
  for (size_t j = 0; j < k; ++j) {
    Scalar num(0), den(0);
    for (size_t m = 0; m < k; ++m) {
      if (word[m] != i) continue;
      num += (m <= j ? c : Scalar(1)) * term[m];
      den += (m < j ? c : Scalar(1)) * term[m];
    }
    out[j] = den == 0 ? coords[j] : coords[j] * num / den;
  }
  return out;
}

Scalar schubert_eps(const std::vector<int>& word, const std::vector<Scalar>& coords, const IntMatrix& a, int i) {
  Scalar pre(1), s(0);
  for (size_t m = 0; m < word.size(); ++m) {
    if (word[m] == i) s += 1 / (pre * coords[m]);
    pre *= ipow(coords[m], a[static_cast<size_t>(word[m])][static_cast<size_t>(i)]);
  }
  return s;
}

std::pair<std::vector<int>, std::vector<std::string>> v_model_word(const TypeId& t) {
  const int n = t.n;
  std::vector<int> w;
  std::vector<std::string> names;
  auto push = [&](int letter, const std::string& name) {
    w.push_back(letter);
    names.push_back(name);
  };
  switch (t.family) {
    case Family::A1:
      for (int k = n; k >= 1; --k) push(k, ix("x", k));
      break;
    case Family::D1:
      for (int k = 1; k <= n; ++k) push(k, ix("x", k));
      for (int k = n - 2; k >= 1; --k) push(k, ix("xb", k));
      break;
    default:
      if (t.family == Family::D2 || t.family == Family::A2even || t.family == Family::A2evenDagger) push(0, "x0");
      for (int k = 1; k <= n; ++k) push(k, ix("x", k));
      for (int k = n - 1; k >= 1; --k) push(k, ix("xb", k));
      break;
  }
  return {w, names};
}

}  // namespace gc
