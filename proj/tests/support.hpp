#pragma once

#include <string>
#include <vector>

#include "ramcoh/local_field.hpp"

namespace ramcoh::testing {

struct NamedSpec {
  std::string label;
  TowerSpec spec;
  int e, f, t, w;
  std::vector<int> breaks;
};

inline TowerSpec q2_unramified() { return {2, {1, 1, 1}, {}}; }
inline TowerSpec q3_unramified() { return {3, {1, 0, 1}, {}}; }
inline TowerSpec q3_zeta3() { return {3, {}, {{{3}, {3}, {1}}}}; }
inline TowerSpec q2_i() { return {2, {}, {{{2}, {2}, {1}}}}; }
inline TowerSpec q2_sqrt2() { return {2, {}, {{{-2}, {0}, {1}}}}; }
inline TowerSpec q2_mixed() { return {2, {1, 1, 1}, {{{2}, {2}, {1}}}}; }
// Q2(zeta8): pi_2 = zeta8 - 1 over Q2(i), (x+1)^2 = i = 1 + pi_1.
inline TowerSpec q2_zeta8() { return {2, {}, {{{2}, {2}, {1}}, {{0, -1}, {2}, {1}}}}; }

inline const std::vector<NamedSpec>& corpus() {
  static const std::vector<NamedSpec> c = {
      {"Q2 unramified f=2", q2_unramified(), 1, 2, 1, 1, {}},
      {"Q3 unramified f=2", q3_unramified(), 1, 2, 1, 1, {}},
      {"Q3(zeta3)", q3_zeta3(), 2, 1, 2, 1, {0}},
      {"Q2(i)", q2_i(), 2, 1, 1, 2, {1}},
      {"Q2(sqrt2)", q2_sqrt2(), 2, 1, 1, 2, {2}},
      {"Q2 unramified f=2 then x^2+2x+2", q2_mixed(), 2, 2, 1, 2, {1}},
  };
  return c;
}

}  // namespace ramcoh::testing
