#include "gcrystal/checks.hpp"

namespace gc {

std::optional<std::pair<ActionWord, ActionWord>> verma_relation(int aij, int aji, int i, int j, const Scalar& a,
                                                                const Scalar& b) {
  if (aij == 0 && aji == 0) return std::make_pair(ActionWord{{i, a}, {j, b}}, ActionWord{{j, b}, {i, a}});
  if (aij == -1 && aji == -1)
    return std::make_pair(ActionWord{{i, a}, {j, a * b}, {i, b}}, ActionWord{{j, b}, {i, a * b}, {j, a}});
  if (aij == -1 && aji == -2) {
    std::swap(i, j);
    std::swap(aij, aji);
  }
  if (aij == -2 && aji == -1)
    return std::make_pair(ActionWord{{i, a}, {j, a * a * b}, {i, a * b}, {j, b}},
                          ActionWord{{j, b}, {i, a * b}, {j, a * a * b}, {i, a}});
  if (aij == -1 && aji == -3) {
    std::swap(i, j);
    std::swap(aij, aji);
  }
  if (aij == -3 && aji == -1) {
    Scalar a2 = a * a, a3 = a2 * a;
    return std::make_pair(
        ActionWord{{i, a}, {j, a3 * b}, {i, a2 * b}, {j, a3 * b * b}, {i, a * b}, {j, b}},
        ActionWord{{j, b}, {i, a * b}, {j, a3 * b * b}, {i, a2 * b}, {j, a3 * b}, {i, a}});
  }
  return std::nullopt;
}

}  // namespace gc
