#pragma once

#include "helpers.hpp"
#include "lls/linked_series.hpp"

namespace lls::test {

// d = 1, r = 0, δ = (1); coordinates t^0, t^1, s^0, s^1.
inline LimitLinearSeries exact_line() {
  return LimitLinearSeries{CurveModel(1), 0, DeltaSet(1, {1}),
                           {span(4, {{1, 0, 0, 1}}), span(4, {{0, 0, 0, 1}})}};
}

inline LimitLinearSeries gapped_line() {
  return LimitLinearSeries{CurveModel(1), 0, DeltaSet(1, {1}),
                           {span(4, {{0, 1, 0, 0}}), span(4, {{0, 0, 0, 1}})}};
}

}  // namespace lls::test
