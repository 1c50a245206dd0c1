#include "gcrystal/mmatrix.hpp"
#include "helpers.hpp"

using namespace gct;

namespace {
LaurentPoly z(int k, const Scalar& c = 1) { return LaurentPoly::monomial(c, k); }

LaurentPoly det3(const PolyMatrix& m) {
  auto e = [&](size_t i, size_t j) { return m.at(i, j); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}
}  // namespace

TEST_CASE("Laurent arithmetic") {
  LaurentPoly a = z(-1, 2) + z(1), b = z(1) - z(-1, 2);
  CHECK((a * b) == z(2) - z(-2, 4));
  CHECK((a - a).is_zero());
  CHECK(a.low() == -1);
  CHECK(a.high() == 1);
}

TEST_CASE("A1 N-matrix at the unit point") {
  PolyMatrix N = n_matrix_A1(unit_point({Family::A1, 2}, ModelKind::B));
  REQUIRE(N.size() == 3);
  CHECK(N.at(0, 0) == LaurentPoly(1));
  CHECK(N.at(1, 0) == LaurentPoly(-1));
  CHECK(N.at(2, 1) == LaurentPoly(-1));
  CHECK(N.at(0, 2) == z(1, -1));
  CHECK(N.at(0, 1).is_zero());
  CHECK(det3(N) == LaurentPoly(1) - z(1));
}

TEST_CASE("D1 M-matrix shape") {
  TypeId t{Family::D1, 4};
  Sampler s(51);
  GCPoint l = sample_point(*build_model(t, ModelKind::B), s, Scalar(3));
  PolyMatrix M = m_matrix_D1(l);
  const size_t n = 4;
  REQUIRE(M.size() == 2 * n);
  CHECK(M.at(n, n).coefficient(0) == 1 / at(l, "l4"));
  Scalar prod = 1;
  for (int j = 4; j >= 1; --j) {
    prod *= at(l, "l" + std::to_string(j));
    CHECK(M.at(n - 1, static_cast<size_t>(j - 1)).coefficient(0) == prod);
  }
  auto [lo, hi] = M.exponent_range();
  CHECK(lo == 0);
  CHECK(hi == 2);
  for (size_t i = 0; i < M.size(); ++i)
    for (size_t j = 0; j < M.size(); ++j)
      if (i != 0 || j != M.size() - 1) CHECK(M.at(i, j).coefficient(2) == 0);
  CHECK(M.at(0, M.size() - 1).coefficient(2) == 3);
}

TEST_CASE("J matrices are signed permutations") {
  for (JKind k : {JKind::J0, JKind::J1, JKind::J2, JKind::J3, JKind::J4}) {
    PolyMatrix J = j_matrix(k, 5);
    PolyMatrix JJ = J * J;
    for (size_t i = 0; i < J.size(); ++i) {
      int nonzero = 0;
      for (size_t j = 0; j < J.size(); ++j)
        if (!J.at(i, j).is_zero()) ++nonzero;
      CHECK(nonzero == 1);
    }
    CHECK(JJ.size() == J.size());
  }
}

TEST_CASE("conjugation by J") {
  Sampler s(52);
  for (auto [sg, N] : {std::pair{Sigma::S0, 5}, {Sigma::S1, 5}, {Sigma::S2, 4}, {Sigma::S3, 8}, {Sigma::S4, 6}}) {
    INFO(sigma_name(sg) << " on d1_" << N);
    require_ok(conjugation_report(sg, N, 5, s));
  }
}

TEST_CASE("R-matrix identity rejects perturbed outputs") {
  TypeId t{Family::D1, 4};
  Sampler s(53);
  auto m = build_model(t, ModelKind::B);
  GCPoint l = sample_point(*m, s, Scalar(2)), mm = sample_point(*m, s, Scalar(3));
  auto [lp, mp] = apply_R(l, mm);
  CHECK(check_r_matrix_identity(l, mm, lp, mp));
  require_ok(uniqueness_perturbation(l, mm, lp, mp));
}
