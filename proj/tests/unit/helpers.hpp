#pragma once

#include <map>
#include <string>

#include "doctest.h"
#include "gcrystal/io.hpp"

namespace gct {

using namespace gc;

inline Scalar q(const std::string& s) { return parse_scalar(s); }

// Point from named coordinates; on B models the solved coordinate may be
// omitted and is then filled in from the constraint.
inline GCPoint point(TypeId t, ModelKind k, const Scalar& L, const std::map<std::string, Scalar>& named) {
  auto m = build_model(t, k);
  std::vector<Scalar> x;
  for (size_t i = 0; i < m->coords.size(); ++i) {
    auto it = named.find(m->coords[i]);
    x.push_back(it == named.end() ? Scalar(1) : it->second);
  }
  if (m->has_constraint() && !named.count(m->coords[static_cast<size_t>(m->solve)])) {
    auto s = static_cast<size_t>(m->solve);
    x[s] = 1;
    x[s] = constraint_target(*m, L) / constraint_value(*m, x);
  }
  return make_point(*m, L, x);
}

inline GCPoint unit_point(TypeId t, ModelKind k) { return point(t, k, 1, {}); }

inline Scalar at(const GCPoint& p, const std::string& name) {
  return p.coords[static_cast<size_t>(build_model(p.type, p.kind)->coord_index(name))];
}

inline GCPoint from_json(const char* text) { return point_from_json(nlohmann::json::parse(text)); }

inline void require_ok(const Report& r) {
  for (auto& [k, t] : r.checks) {
    INFO(k << " pass=" << t.pass << " fail=" << t.fail << (t.notes.empty() ? "" : " first: " + t.notes[0]));
    CHECK(t.ok());
  }
  CHECK(!r.checks.empty());
}

}  // namespace gct
