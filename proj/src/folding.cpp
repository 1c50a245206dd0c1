#include "gcrystal/folding.hpp"

#include <map>
#include <mutex>

#include "gcrystal/checks.hpp"

namespace gc {

std::string sigma_name(Sigma s) { return "S" + std::to_string(static_cast<int>(s)); }

namespace {

std::string ix(const std::string& b, int k) { return b + std::to_string(k); }
Expr l(int k) { return V(ix("l", k)); }
Expr lb(int k) { return V(ix("lb", k)); }
Expr m(int k) { return V(ix("m", k)); }
Expr mb(int k) { return V(ix("mb", k)); }

std::map<std::string, Expr> identity_table(const Model& md) {
  std::map<std::string, Expr> t;
  for (auto& c : md.coords) t[c] = V(c);
  return t;
}

PointMap finish(std::shared_ptr<const Model> src, std::shared_ptr<const Model> dst,
                const std::map<std::string, Expr>& table, SpectralRule rule) {
  PointMap pm;
  pm.src = std::move(src);
  pm.dst = std::move(dst);
  pm.rule = rule;
  for (auto& c : pm.dst->coords) {
    auto it = table.find(c);
    if (it == table.end()) throw std::logic_error("map leaves " + c + " undefined");
    pm.out.push_back(it->second);
  }
  pm.compile();
  return pm;
}

std::map<std::string, Expr> sigma_table(Sigma s, int N, const Model& host) {
  auto t = identity_table(host);
  switch (s) {
    case Sigma::S0:
      t["l1"] = lb(1);
      t["lb1"] = l(1);
      break;
    case Sigma::S1: {
      int n = N - 1;
      t[ix("l", n)] = l(n) * l(n + 1);
      t[ix("l", n + 1)] = 1 / l(n + 1);
      t[ix("lb", n)] = l(n + 1) * lb(n);
      break;
    }
    case Sigma::S2: {
      if (N % 2) throw std::invalid_argument("S2 needs an even host rank");
      Expr s1 = l(N - 1) + lb(N - 1);
      t["l1"] = l(N - 1) * lb(N - 1) / s1;
      t["lb1"] = l(N) * l(N - 1) * lb(N - 1) / s1;
      t[ix("l", N)] = lb(1) / l(1);
      Expr u = l(2) / lb(2) + 1;
      t[ix("l", N - 1)] = l(1) * lb(2) / l(2) * u;
      t[ix("lb", N - 1)] = l(1) * u;
      for (int i = 2; i <= N - 2; ++i) {
        Expr F = (l(i + 1) + lb(i + 1)) / (l(i) + lb(i));
        t[ix("l", N - i)] = l(i) * lb(i) / l(i + 1) * F;
        t[ix("lb", N - i)] = l(i) * lb(i) / lb(i + 1) * F;
      }
      break;
    }
    default:
      throw std::logic_error("composite involution");
  }
  return t;
}

PointMap make_involution(Sigma s, int N) {
  auto host = build_model({Family::D1, N}, ModelKind::B);
  auto simple = [&](Sigma k) { return sigma_table(k, N, *host); };
  // compose(f, g) = f after g
  auto compose = [&](const std::map<std::string, Expr>& f, const std::map<std::string, Expr>& g) {
    Substitution sub(g);
    std::map<std::string, Expr> out;
    for (auto& [k, e] : f) out[k] = sub(e);
    return out;
  };
  std::map<std::string, Expr> t;
  switch (s) {
    case Sigma::S3: t = compose(simple(Sigma::S0), simple(Sigma::S1)); break;
    case Sigma::S4: t = compose(simple(Sigma::S2), compose(simple(Sigma::S1), simple(Sigma::S0))); break;
    default: t = simple(s); break;
  }
  return finish(host, host, t, SpectralRule::Same);
}

}  // namespace

const PointMap& involution_map(Sigma s, int N) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, PointMap> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(s), N);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_involution(s, N)).first;
  return it->second;
}

GCPoint apply_involution(Sigma s, const GCPoint& p) {
  if (p.type.family != Family::D1 || p.kind != ModelKind::B)
    throw std::invalid_argument("involutions act on B(d1) points");
  return apply_map(involution_map(s, p.type.n), p);
}

std::vector<int> involution_permutation(Sigma s, int N) {
  auto s0 = [](int i) { return i == 0 ? 1 : i == 1 ? 0 : i; };
  auto s1 = [N](int i) { return i == N - 1 ? N : i == N ? N - 1 : i; };
  auto s2 = [N](int i) { return N - i; };
  std::vector<int> p;
  for (int i = 0; i <= N; ++i) {
    switch (s) {
      case Sigma::S0: p.push_back(s0(i)); break;
      case Sigma::S1: p.push_back(s1(i)); break;
      case Sigma::S2: p.push_back(s2(i)); break;
      case Sigma::S3: p.push_back(s0(s1(i))); break;
      case Sigma::S4: p.push_back(s2(s1(s0(i)))); break;
    }
  }
  return p;
}

Report check_defining_property(Sigma s, int N, int samples, Sampler& smp) {
  Report r;
  auto host = build_model({Family::D1, N}, ModelKind::B);
  auto perm = involution_permutation(s, N);
  SingleCrystal cr{host, std::nullopt};
  Tally skip;
  for_samples(cr, samples, smp, skip, [&](const GCPoint& p) {
    GCPoint q = apply_involution(s, p);
    auto a = structure_all(*host, p);
    auto b = structure_all(*host, q);
    const size_t K = static_cast<size_t>(N + 1);
    for (size_t i = 0; i <= static_cast<size_t>(N); ++i) {
      size_t j = static_cast<size_t>(perm[i]);
      r["gamma"].record(b[j] == a[i], "i=" + std::to_string(i));
      r["eps"].record(b[K + j] == a[K + i], "i=" + std::to_string(i));
    }
    r["involutive"].record(apply_involution(s, q) == p);
    r["constraint"].record(constraint_holds(*host, q));
  });
  return r;
}

int host_rank(const TypeId& t) {
  switch (t.family) {
    case Family::B1: return t.n + 1;
    case Family::D2: return t.n + 2;
    case Family::A2odd: return 2 * t.n;
    case Family::A2even: return 2 * t.n + 2;
    default: throw std::invalid_argument(family_id(t.family) + " is not a folded type");
  }
}

TypeId host_type(const TypeId& t) { return {Family::D1, host_rank(t)}; }

Sigma folding_involution(const TypeId& t) {
  switch (t.family) {
    case Family::B1: return Sigma::S1;
    case Family::D2: return Sigma::S3;
    case Family::A2odd: return Sigma::S2;
    case Family::A2even: return Sigma::S4;
    default: throw std::invalid_argument(family_id(t.family) + " is not a folded type");
  }
}

bool host_spectral_squared(const TypeId& t) {
  return t.family == Family::A2odd || t.family == Family::A2even;
}

std::vector<int> host_operators(const TypeId& t, int i) {
  const int n = t.n;
  switch (t.family) {
    case Family::B1: return i == n ? std::vector<int>{n, n + 1} : std::vector<int>{i};
    case Family::D2:
      if (i == 0) return {0, 1};
      if (i == n) return {n + 1, n + 2};
      return {i + 1};
    case Family::A2odd: return i == n ? std::vector<int>{n} : std::vector<int>{i, 2 * n - i};
    case Family::A2even:
      if (i == 0) return {0, 1, 2 * n + 1, 2 * n + 2};
      if (i == n) return {n + 1};
      return {i + 1, 2 * n - i + 1};
    default: throw std::invalid_argument(family_id(t.family) + " is not a folded type");
  }
}

int host_index(const TypeId& t, int i) {
  switch (t.family) {
    case Family::B1:
    case Family::A2odd: return i;
    case Family::D2: return i + 1;
    case Family::A2even: return i == 0 ? 0 : i + 1;
    default: throw std::invalid_argument(family_id(t.family) + " is not a folded type");
  }
}

namespace {

PointMap make_eta(const TypeId& t) {
  const int n = t.n;
  auto src = build_model(t, ModelKind::B);
  auto dst = build_model(host_type(t), ModelKind::B);
  std::map<std::string, Expr> h;
  SpectralRule rule = SpectralRule::Same;
  if (t.family == Family::B1) {
    for (int i = 1; i <= n; ++i) {
      h[ix("l", i)] = m(i);
      h[ix("lb", i)] = mb(i);
    }
    h[ix("l", n + 1)] = 1;
  } else if (t.family == Family::D2) {
    h["l1"] = m(0);
    h["lb1"] = m(0);
    for (int i = 1; i <= n; ++i) {
      h[ix("l", i + 1)] = m(i);
      h[ix("lb", i + 1)] = mb(i);
    }
    h[ix("l", n + 2)] = 1;
  } else {
    rule = SpectralRule::Square;
    const int off = t.family == Family::A2odd ? 0 : 1;
    const int N = 2 * n + 2 * off;
    std::vector<Expr> den;
    if (off) den.push_back(pow(m(0), 2));
    for (int k = 1; k < n; ++k) den.push_back(m(k));
    for (int k = 1; k <= n; ++k) den.push_back(mb(k));
    Expr M = V("L") / Expr::product(den);
    if (off) {
      h["l1"] = m(0);
      h["lb1"] = m(0);
    }
    for (int i = 1; i < n; ++i) {
      h[ix("l", i + off)] = m(i);
      h[ix("lb", i + off)] = mb(i);
    }
    h[ix("l", n + off)] = m(n) / (1 + M);
    h[ix("lb", n + off)] = mb(n) / (1 + 1 / M);
    for (int i = n + off - 1; i >= 2; --i) {
      Expr li = h[ix("l", i)], bi = h[ix("lb", i)], lj = h[ix("l", i + 1)], bj = h[ix("lb", i + 1)];
      Expr F = (lj + bj) / (li + bi);
      h[ix("l", N - i)] = li * bi / lj * F;
      h[ix("lb", N - i)] = li * bi / bj * F;
    }
    Expr l1 = h["l1"], b1 = h["lb1"], l2 = h["l2"], b2 = h["lb2"];
    Expr u = l2 / b2 + 1;
    h[ix("l", N - 1)] = l1 * b2 / l2 * u;
    h[ix("lb", N - 1)] = l1 * u;
    h[ix("l", N)] = off ? Expr(1) : b1 / l1;
  }
  return finish(src, dst, h, rule);
}

PointMap make_eta_inverse(const TypeId& t) {
  const int n = t.n;
  auto src = build_model(host_type(t), ModelKind::B);
  auto dst = build_model(t, ModelKind::B);
  std::map<std::string, Expr> x;
  SpectralRule rule = SpectralRule::Same;
  if (t.family == Family::B1) {
    for (int i = 1; i <= n; ++i) {
      x[ix("m", i)] = l(i);
      x[ix("mb", i)] = lb(i);
    }
  } else if (t.family == Family::D2) {
    x["m0"] = l(1);
    for (int i = 1; i <= n; ++i) {
      x[ix("m", i)] = l(i + 1);
      x[ix("mb", i)] = lb(i + 1);
    }
  } else {
    rule = SpectralRule::Sqrt;
    const int off = t.family == Family::A2odd ? 0 : 1;
    if (off) x["m0"] = l(1);
    for (int i = 1; i < n; ++i) {
      x[ix("m", i)] = l(i + off);
      x[ix("mb", i)] = lb(i + off);
    }
    Expr a = l(n + off), b = lb(n + off);
    x[ix("m", n)] = a * (1 + a / b);
    x[ix("mb", n)] = b * (1 + b / a);
  }
  return finish(src, dst, x, rule);
}

template <class Make>
const PointMap& cached_fold(std::map<std::pair<int, int>, PointMap>& cache, const TypeId& t, Make make) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(t.family), t.n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make(t)).first;
  return it->second;
}

}  // namespace

const PointMap& eta_map(const TypeId& t) {
  static std::map<std::pair<int, int>, PointMap> cache;
  return cached_fold(cache, t, make_eta);
}

const PointMap& eta_inverse_map(const TypeId& t) {
  static std::map<std::pair<int, int>, PointMap> cache;
  return cached_fold(cache, t, make_eta_inverse);
}

GCPoint eta_embed(const TypeId& t, const GCPoint& p) { return apply_map(eta_map(t), p); }
GCPoint eta_inverse(const TypeId& t, const GCPoint& l) { return apply_map(eta_inverse_map(t), l); }

GCPoint host_apply(const TypeId& t, int i, const Scalar& c, const GCPoint& l) {
  auto host = build_model(host_type(t), ModelKind::B);
  GCPoint q = l;
  for (int j : host_operators(t, i)) q = apply_e(*host, j, c, q);
  return q;
}

Report folded_action_check(const TypeId& t, int samples, Sampler& smp) {
  Report r;
  auto md = build_model(t, ModelKind::B);
  auto host = build_model(host_type(t), ModelKind::B);
  const Sigma sg = folding_involution(t);
  SingleCrystal cr{md, std::nullopt};
  Tally skip;
  std::vector<GCPoint> images;
  for_samples(cr, samples, smp, skip, [&](const GCPoint& p) {
    GCPoint h = eta_embed(t, p);
    r["host-constraint"].record(constraint_holds(*host, h));
    r["fixed-point"].record(apply_involution(sg, h) == h);
    r["eta-inverse"].record(eta_inverse(t, h) == p);
    for (auto& prev : images) r["injective"].record(!(prev == h));
    images.push_back(h);
    Scalar c = smp.draw();
    auto sp = structure_all(*md, p);
    auto sh = structure_all(*host, h);
    const size_t K = static_cast<size_t>(t.n + 1), KH = static_cast<size_t>(host->index_count());
    for (int i = 0; i <= t.n; ++i) {
      std::string at = "i=" + std::to_string(i);
      r["intertwine"].record(eta_embed(t, apply_e(*md, i, c, p)) == host_apply(t, i, c, h), at);
      size_t hi = static_cast<size_t>(host_index(t, i));
      r["eps"].record(sp[K + static_cast<size_t>(i)] == sh[KH + hi], at);
      r["gamma"].record(sp[static_cast<size_t>(i)] == sh[hi], at);
    }
  });
  return r;
}

Report paired_braid_check(int samples, Sampler& smp) {
  Report r;
  auto host = build_model({Family::D1, 4}, ModelKind::B);
  SingleCrystal cr{host, std::nullopt};
  auto E1 = [&](const GCPoint& p, const Scalar& c) { return apply_e(*host, 1, c, apply_e(*host, 3, c, p)); };
  auto e2 = [&](const GCPoint& p, const Scalar& c) { return apply_e(*host, 2, c, p); };
  Tally skip;
  for_samples(cr, samples, smp, skip, [&](const GCPoint& p) {
    Scalar c = smp.draw(), d = smp.draw();
    GCPoint lhs = E1(e2(E1(e2(p, d), c * d), c * c * d), c);
    GCPoint rhs = e2(E1(e2(E1(p, c), c * c * d), c * d), d);
    r["paired-braid"].record(lhs == rhs);
  });
  return r;
}

}  // namespace gc
