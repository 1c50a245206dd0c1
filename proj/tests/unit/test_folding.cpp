#include "helpers.hpp"

using namespace gct;

namespace {
const TypeId D1_5{Family::D1, 5};
}

TEST_CASE("Sigma0 swaps l1 and lb1") {
  Sampler s(41);
  auto m = build_model(D1_5, ModelKind::B);
  GCPoint l = sample_point(*m, s);
  GCPoint y = apply_involution(Sigma::S0, l);
  CHECK(at(y, "l1") == at(l, "lb1"));
  CHECK(at(y, "lb1") == at(l, "l1"));
  CHECK(at(y, "l3") == at(l, "l3"));
}

TEST_CASE("Sigma1 on the tail") {
  Sampler s(42);
  auto m = build_model(D1_5, ModelKind::B);
  GCPoint l = sample_point(*m, s);
  GCPoint y = apply_involution(Sigma::S1, l);
  CHECK(at(y, "l5") == 1 / at(l, "l5"));
  CHECK(at(y, "l4") == at(l, "l4") * at(l, "l5"));
  CHECK(at(y, "lb4") == at(l, "l5") * at(l, "lb4"));
  CHECK(at(y, "l1") == at(l, "l1"));
}

TEST_CASE("involutions square to the identity") {
  Sampler s(43);
  for (auto [sg, N] : {std::pair{Sigma::S0, 5}, {Sigma::S1, 5}, {Sigma::S2, 4}, {Sigma::S3, 5}, {Sigma::S4, 6}}) {
    auto m = build_model({Family::D1, N}, ModelKind::B);
    for (int k = 0; k < 10; ++k) {
      GCPoint l = sample_point(*m, s);
      CHECK(apply_involution(sg, apply_involution(sg, l)) == l);
    }
  }
}

TEST_CASE("defining property of the involutions") {
  Sampler s(44);
  for (auto [sg, N] : {std::pair{Sigma::S0, 5}, {Sigma::S1, 5}, {Sigma::S2, 4}, {Sigma::S3, 5}, {Sigma::S4, 6}}) {
    INFO(sigma_name(sg) << " on d1_" << N);
    require_ok(check_defining_property(sg, N, 10, s));
  }
}

TEST_CASE("eta of a unit point is a unit point") {
  TypeId t{Family::B1, 3};
  GCPoint l = eta_embed(t, unit_point(t, ModelKind::B));
  CHECK(l.type == TypeId{Family::D1, host_rank(t)});
  for (auto& v : l.coords) CHECK(v == 1);
  CHECK(eta_inverse(t, l) == unit_point(t, ModelKind::B));
}

TEST_CASE("eta lands on fixed points of the folding involution") {
  Sampler s(45);
  for (Family f : {Family::B1, Family::D2, Family::A2odd, Family::A2even}) {
    TypeId t{f, 3};
    auto m = build_model(t, ModelKind::B);
    for (int k = 0; k < 10; ++k) {
      GCPoint l = eta_embed(t, sample_point(*m, s));
      CHECK(apply_involution(folding_involution(t), l) == l);
    }
  }
}

TEST_CASE("folded actions") {
  Sampler s(46);
  for (Family f : {Family::B1, Family::D2, Family::A2odd, Family::A2even}) {
    INFO(family_id(f));
    require_ok(folded_action_check({f, 3}, 10, s));
  }
  require_ok(paired_braid_check(20, s));
}
