#include "gcrystal/checks.hpp"
#include "helpers.hpp"

using namespace gct;

TEST_CASE("split parameter") {
  auto [c1, c2] = split_parameter(3, 2, 1);
  CHECK(c1 == q("7/3"));
  CHECK(c2 == q("9/7"));
  CHECK(c1 * c2 == 3);
}

TEST_CASE("product gamma is multiplicative and eps follows the tensor rule") {
  TypeId t{Family::D1, 4};
  auto m = build_model(t, ModelKind::B);
  Sampler s(31);
  for (int k = 0; k < 20; ++k) {
    ProductPoint pp{{sample_point(*m, s, Scalar(2)), sample_point(*m, s, Scalar(3))}};
    for (int i = 0; i < m->index_count(); ++i) {
      auto x = structure_functions(*m, i, pp.factors[0]);
      auto y = structure_functions(*m, i, pp.factors[1]);
      auto p = product_structure_functions(*m, pp, i);
      CHECK(p.gamma == x.gamma * y.gamma);
      CHECK(p.eps == x.eps * (x.phi + y.eps) / x.phi);
    }
  }
}

TEST_CASE("product action splits c between the factors") {
  TypeId t{Family::A1, 2};
  auto m = build_model(t, ModelKind::V);
  Sampler s(32);
  for (int k = 0; k < 20; ++k) {
    ProductPoint pp{{sample_point(*m, s), sample_point(*m, s)}};
    Scalar c = s.draw();
    auto x = structure_functions(*m, 1, pp.factors[0]);
    auto y = structure_functions(*m, 1, pp.factors[1]);
    auto [c1, c2] = split_parameter(c, x.phi, y.eps);
    ProductPoint got = product_apply_e(*m, pp, 1, c);
    CHECK(got.factors[0] == apply_e(*m, 1, c1, pp.factors[0]));
    CHECK(got.factors[1] == apply_e(*m, 1, c2, pp.factors[1]));
  }
}

TEST_CASE("three-factor products") {
  Sampler s(33);
  ProductCrystal cr{build_model({Family::B1, 2}, ModelKind::V), {2, 3, 5}};
  require_ok(verify_axioms(cr, 10, s));
  auto m = cr.m;
  for (int k = 0; k < 10; ++k) {
    ProductPoint pp = cr.sample(s);
    for (int i = 0; i < m->index_count(); ++i) {
      auto l = product_structure_functions(*m, pp, i), r = product_structure_right(*m, pp, i);
      CHECK(l.gamma == r.gamma);
      CHECK(l.eps == r.eps);
    }
  }
}

TEST_CASE("product suite") {
  Sampler s(34);
  require_ok(product_check({Family::A2odd, 3}, {2, 3, 5}, 5, s));
}
