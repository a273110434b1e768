#pragma once

#include <initializer_list>
#include <vector>

#include "lls/linalg.hpp"

namespace lls::test {

inline Vector vec(std::initializer_list<Rational> entries) { return Vector(entries); }

inline Matrix mat(std::size_t cols, std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) out.emplace_back(r);
  return Matrix::from_rows(cols, out);
}

inline Subspace span(std::size_t ambient, std::initializer_list<std::initializer_list<Rational>> rows) {
  return Subspace::span(mat(ambient, rows));
}

inline Vector unit(std::size_t ambient, std::size_t i) {
  Vector v(ambient);
  v[i] = 1;
  return v;
}

}  // namespace lls::test
