#include "lls/delta.hpp"

#include <string>

#include "lls/error.hpp"

namespace lls {

bool is_integer(const Rational& x) { return mpz_divisible_p(x.get_num_mpz_t(), x.get_den_mpz_t()) != 0; }

long floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

long ceil_of(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q.get_si();
}

DeltaSet::DeltaSet(int d, std::vector<int> delta) : d_(d), delta_(std::move(delta)) {
  if (d < 0) throw InvalidInput("negative degree d");
  if (delta_.size() != static_cast<std::size_t>(d)) {
    throw InvalidInput("delta has " + std::to_string(delta_.size()) + " entries, expected " +
                       std::to_string(d));
  }
  indices_.emplace_back(0);
  for (int segment = 1; segment <= d; ++segment) {
    const int steps = delta_[segment - 1];
    if (steps < 1) throw InvalidInput("delta entries must be positive");
    for (int k = 1; k <= steps; ++k) {
      Rational step(k, steps);
      step.canonicalize();
      Rational index = segment - 1 + step;
      indices_.push_back(index);
    }
  }
}

std::optional<std::size_t> DeltaSet::position_of(const Rational& index) const {
  for (std::size_t k = 0; k < indices_.size(); ++k)
    if (indices_[k] == index) return k;
  return std::nullopt;
}

std::size_t DeltaSet::position_of_integer(int k) const {
  if (k < 0 || k > d_) throw InvalidInput("integer index outside [0, d]");
  std::size_t position = 0;
  for (int segment = 0; segment < k; ++segment) position += static_cast<std::size_t>(delta_[segment]);
  return position;
}

DeltaSet build_delta(int d, std::vector<int> delta) { return DeltaSet(d, std::move(delta)); }

std::vector<std::pair<Rational, Rational>> consecutive_pairs(const DeltaSet& set) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t k = 0; k + 1 < set.size(); ++k) out.emplace_back(set[k], set[k + 1]);
  return out;
}

bool Reindexing::is_identity() const {
  for (std::size_t k = 0; k < to_original.size(); ++k)
    if (to_original[k] != k) return false;
  return true;
}

Reindexing support_subset(const DeltaSet& set, const NumericalData& data) {
  if (data.size() != set.size())
    throw DimensionMismatch("numerical data does not cover the index set");
  Reindexing out;
  out.delta.assign(static_cast<std::size_t>(set.degree()), 1);
  for (std::size_t k = 0; k < set.size(); ++k) {
    const bool keep = set.is_integer_position(k) || data[k].m != 0;
    if (!keep) continue;
    out.to_original.push_back(k);
    // A kept non-integer index in segment (l-1, l) adds one step to δ'_l.
    if (!set.is_integer_position(k)) ++out.delta[static_cast<std::size_t>(floor_of(set[k]))];
  }
  return out;
}

}  // namespace lls
