#include "gcrystal/mmatrix.hpp"

#include <algorithm>

#include "gcrystal/checks.hpp"

namespace gc {

PolyMatrix PolyMatrix::identity(size_t n) {
  PolyMatrix m(n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

std::pair<int, int> PolyMatrix::exponent_range() const {
  bool any = false;
  int lo = 0, hi = 0;
  for (auto& p : e_) {
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.low()) : p.low();
    hi = any ? std::max(hi, p.high()) : p.high();
    any = true;
  }
  return {lo, hi};
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  const size_t n = a.n_;
  PolyMatrix r(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const LaurentPoly& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) += x * b.at(k, j);
    }
  // degrees add under multiplication; anything wider is a construction bug
  auto [alo, ahi] = a.exponent_range();
  auto [blo, bhi] = b.exponent_range();
  auto [rlo, rhi] = r.exponent_range();
  if (rlo < alo + blo || rhi > ahi + bhi) throw std::logic_error("product exponent range out of bounds");
  return r;
}

nlohmann::json PolyMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < n_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (size_t j = 0; j < n_; ++j) {
      nlohmann::json cell = nlohmann::json::object();
      for (auto& [e, c] : at(i, j).terms()) cell[std::to_string(e)] = to_string(c);
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return {{"size", n_}, {"entries", rows}};
}

namespace {

Scalar coord(const GCPoint& p, const std::string& name) {
  auto md = build_model(p.type, p.kind);
  return p.coords[static_cast<size_t>(md->coord_index(name))];
}

void require(const GCPoint& p, Family f) {
  if (p.type.family != f || p.kind != ModelKind::B)
    throw std::invalid_argument("expected a B(" + family_id(f) + ") point");
}

}  // namespace

PolyMatrix n_matrix_A1(const GCPoint& l) {
  require(l, Family::A1);
  const size_t N = static_cast<size_t>(l.type.n + 1);
  PolyMatrix m(N);
  for (size_t i = 0; i < N; ++i) {
    Scalar v = coord(l, "l" + std::to_string(i + 1));
    if (v == 0) throw DomainError("zero coordinate");
    m.at(i, i) = Scalar(1 / v);
    if (i > 0) m.at(i, i - 1) = Scalar(-1);
  }
  m.at(0, N - 1) += LaurentPoly::monomial(-1, 1);
  return m;
}

PolyMatrix m_matrix_D1(const GCPoint& p) {
  require(p, Family::D1);
  const int n = p.type.n, N = 2 * n;
  std::vector<Scalar> l(static_cast<size_t>(n + 1)), lb(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) l[static_cast<size_t>(k)] = coord(p, "l" + std::to_string(k));
  for (int k = 1; k < n; ++k) lb[static_cast<size_t>(k)] = coord(p, "lb" + std::to_string(k));
  for (int k = 1; k <= n; ++k)
    if (l[static_cast<size_t>(k)] == 0 || (k < n && lb[static_cast<size_t>(k)] == 0)) throw DomainError("zero coordinate");
  auto L_ = [&](int k) { return l[static_cast<size_t>(k)]; };
  auto B_ = [&](int k) { return lb[static_cast<size_t>(k)]; };
  auto prodL = [&](int a, int b) {
    Scalar r = 1;
    for (int k = a; k <= b; ++k) r *= L_(k);
    return r;
  };
  auto prodB = [&](int a, int b) {
    Scalar r = 1;
    for (int k = a; k <= b; ++k) r *= B_(k);
    return r;
  };
  // 1-indexed A
  std::vector<std::vector<Scalar>> A(static_cast<size_t>(N + 1), std::vector<Scalar>(static_cast<size_t>(N + 1)));
  auto a = [&](int i, int j) -> Scalar& { return A[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  for (int i = 1; i < n; ++i) a(i, i) = L_(i) / B_(i);
  a(n, n) = L_(n);
  a(n + 1, n + 1) = 1 / L_(n);
  for (int i = n + 2; i <= N; ++i) a(i, i) = B_(N + 1 - i) / L_(N + 1 - i);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < i; ++j) {
      a(i, j) = prodL(j, i - 1) * (1 + L_(i) / B_(i));
      a(N + 1 - j, N + 1 - i) = prodB(j, i - 1) * (1 + B_(i) / L_(i));
    }
  for (int j = 1; j < n; ++j) {
    a(n, j) = prodL(j, n);
    a(N + 1 - j, n) = prodB(j, n - 1) * L_(n);
    a(N + 1 - j, n + 1) = prodB(j, n - 1);
    a(n + 1, j) = prodL(j, n - 1);
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) a(N + 1 - i, j) = prodL(j, n) * prodB(i, n - 1);

  PolyMatrix M(static_cast<size_t>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Scalar b = a(i, 1) * a(N, j) - p.L * a(i, j) - (i == 1 && j == N ? 1 : 0);
      LaurentPoly e(a(i, j));
      e += LaurentPoly::monomial(b, 1);
      if (i == 1 && j == N) e += LaurentPoly::monomial(p.L, 2);
      M.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = e;
    }
  return M;
}

PolyMatrix j_matrix(JKind which, int n) {
  switch (which) {
    case JKind::J0: {
      const size_t m = static_cast<size_t>(2 * n + 2);
      PolyMatrix J = PolyMatrix::identity(m);
      J.at(0, 0) = LaurentPoly();
      J.at(m - 1, m - 1) = LaurentPoly();
      J.at(0, m - 1) = LaurentPoly::monomial(1, 1);
      J.at(m - 1, 0) = LaurentPoly::monomial(1, -1);
      return J;
    }
    case JKind::J1: {
      const size_t m = static_cast<size_t>(2 * n + 2), k = static_cast<size_t>(n);
      PolyMatrix J = PolyMatrix::identity(m);
      J.at(k, k) = LaurentPoly();
      J.at(k + 1, k + 1) = LaurentPoly();
      J.at(k, k + 1) = Scalar(1);
      J.at(k + 1, k) = Scalar(1);
      return J;
    }
    case JKind::J2: {
      const size_t h = static_cast<size_t>(2 * n);
      PolyMatrix J(2 * h);
      for (size_t i = 0; i < h; ++i) {
        J.at(i, h + i) = LaurentPoly::monomial(1, 1);
        J.at(h + i, i) = Scalar(1);
      }
      return J;
    }
    case JKind::J3: return j_matrix(JKind::J0, n + 1) * j_matrix(JKind::J1, n + 1);
    case JKind::J4:
      return j_matrix(JKind::J0, 2 * n + 1) * j_matrix(JKind::J1, 2 * n + 1) * j_matrix(JKind::J2, n + 1);
  }
  throw std::logic_error("unknown J");
}

std::pair<JKind, int> j_for_involution(Sigma s, int N) {
  switch (s) {
    case Sigma::S0: return {JKind::J0, N - 1};
    case Sigma::S1: return {JKind::J1, N - 1};
    case Sigma::S2:
      if (N % 2) throw std::invalid_argument("S2 needs an even host rank");
      return {JKind::J2, N / 2};
    case Sigma::S3: return {JKind::J3, N - 2};
    case Sigma::S4:
      if (N % 2) throw std::invalid_argument("S4 needs an even host rank");
      return {JKind::J4, N / 2 - 1};
  }
  throw std::logic_error("unknown involution");
}

bool check_conjugation(Sigma s, const GCPoint& l) {
  auto [k, n] = j_for_involution(s, l.type.n);
  PolyMatrix J = j_matrix(k, n);
  return m_matrix_D1(apply_involution(s, l)) * J == J * m_matrix_D1(l);
}

Report conjugation_report(Sigma s, int N, int samples, Sampler& smp) {
  Report r;
  SingleCrystal cr{build_model({Family::D1, N}, ModelKind::B), std::nullopt};
  Tally skip;
  std::string key = "conjugation-" + sigma_name(s) + "-N" + std::to_string(N);
  for_samples(cr, samples, smp, skip, [&](const GCPoint& p) { r[key].record(check_conjugation(s, p)); });
  r[key].skipped += skip.skipped;
  return r;
}

bool check_r_matrix_identity(const GCPoint& l, const GCPoint& m, const GCPoint& lp, const GCPoint& mp) {
  if (l.type.family == Family::A1) return n_matrix_A1(m) * n_matrix_A1(l) == n_matrix_A1(mp) * n_matrix_A1(lp);
  if (l.type.family == Family::D1) return m_matrix_D1(l) * m_matrix_D1(m) == m_matrix_D1(lp) * m_matrix_D1(mp);
  throw std::invalid_argument("M-matrices exist for a1 and d1 only");
}

Report uniqueness_perturbation(const GCPoint& l, const GCPoint& m, const GCPoint& lp, const GCPoint& mp) {
  Report r;
  auto md = build_model(lp.type, lp.kind);
  for (int side = 0; side < 2; ++side)
    for (size_t k = 0; k < lp.coords.size(); ++k) {
      GCPoint a = lp, b = mp;
      (side == 0 ? a : b).coords[k] *= 2;
      r["perturbation-detected"].record(!check_r_matrix_identity(l, m, a, b),
                                        (side == 0 ? "l'." : "m'.") + md->coords[k]);
    }
  return r;
}

}  // namespace gc
