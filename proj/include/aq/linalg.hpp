#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

using Index = Eigen::Index;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

bool is_zero_matrix(const RatMatrix& m);

/// Row echelon form produced by fraction-free (Bareiss) elimination with
/// first-nonzero pivoting. Rows are pre-scaled to integers; the update rule
/// keeps entries integral, which bounds coefficient growth. Deterministic.
struct Echelon {
  RatMatrix mat;                   // upper echelon
  std::vector<Index> pivot_cols;   // one per pivot row, ascending
  Index rank = 0;
  bool is_pivot_col(Index c) const;
};

Echelon eliminate(RatMatrix m);

Index rank(const RatMatrix& m);

/// Basis of the null space, one column per free variable in column order.
RatMatrix kernel_basis(const RatMatrix& m);

/// Some exact solution of m·x = v, or nullopt when inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v);

/// Column indices of `candidates` whose span extends span(base) to
/// span(base ∪ candidates), chosen greedily left to right. Used to pick
/// cohomology representatives: candidates = cocycles, base = coboundaries.
std::vector<Index> extend_independent(const RatMatrix& base, const RatMatrix& candidates);

/// Coordinates of v in the column span of m (exact), or nullopt.
std::optional<RatVector> coordinates_in_span(const RatMatrix& m, const RatVector& v);

}  // namespace aq
