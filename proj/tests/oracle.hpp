// Copyright 2026 The qpm Authors.
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference computations for tests. Everything here works on
// plain rational matrices and index vectors, never through QSpace/PointSet,
// so it stays independent of the code under test.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qpm/real.hpp"
#include "qpm/space.hpp"

namespace qpm::oracle {

using Matrix = std::vector<std::vector<Rational>>;
using Indices = std::vector<std::size_t>;

inline Matrix to_rational_matrix(const QSpace& space) {
  Matrix m;
  for (const auto& row : space.matrix()) {
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(v.rational());
    m.push_back(std::move(r));
  }
  return m;
}

// sup_{a in A} inf_{b in B} d(a,b)  and  sup_{b in B} inf_{a in A} d(a,b), maxed.
inline Rational hausdorff(const Matrix& d, const Indices& a, const Indices& b) {
  Rational forward(0);
  for (auto i : a) {
    Rational best = d[i][b[0]];
    for (auto j : b) best = std::min(best, d[i][j]);
    forward = std::max(forward, best);
  }
  Rational backward(0);
  for (auto j : b) {
    Rational best = d[a[0]][j];
    for (auto i : a) best = std::min(best, d[i][j]);
    backward = std::max(backward, best);
  }
  return std::max(forward, backward);
}

// Shortest walk cost by enumerating every simple path (n <= 7 or so).
inline Rational shortest_path(const Matrix& w, std::size_t from, std::size_t to) {
  const auto n = w.size();
  Rational best = w[from][to];
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != from && k != to) others.push_back(k);
  }
  // every subset in every order
  const std::uint32_t subsets = 1u << others.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    std::vector<std::size_t> mid;
    for (std::size_t k = 0; k < others.size(); ++k) {
      if (mask & (1u << k)) mid.push_back(others[k]);
    }
    std::sort(mid.begin(), mid.end());
    do {
      Rational cost = w[from][mid.front()];
      for (std::size_t k = 0; k + 1 < mid.size(); ++k) cost += w[mid[k]][mid[k + 1]];
      cost += w[mid.back()][to];
      best = std::min(best, cost);
    } while (std::next_permutation(mid.begin(), mid.end()));
  }
  return best;
}

// Random nonempty subset of {0..n-1}, indices ascending.
inline Indices random_subset(std::mt19937_64& rng, std::size_t n) {
  Indices out;
  while (out.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 2 == 0) out.push_back(i);
    }
  }
  return out;
}

inline PointSet as_point_set(const QSpace& space, const Indices& idx) {
  std::vector<Point> members;
  for (auto i : idx) members.push_back(space.points()[i]);
  return PointSet(std::move(members));
}

}  // namespace qpm::oracle
