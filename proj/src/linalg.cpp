#include "aq/linalg.hpp"

#include <algorithm>
#include <ostream>

namespace aq {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  try {
    mpq_class v(text, 10);
    if (v.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    v.canonicalize();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  }
}

bool is_zero_matrix(const RatMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool Echelon::is_pivot_col(Index c) const {
  return std::binary_search(pivot_cols.begin(), pivot_cols.end(), c);
}

namespace {

// Clear denominators and divide out the content so Bareiss stays integral
// and entries stay small.
void normalize_row(RatMatrix& m, Index i) {
  mpz_class den_lcm = 1;
  for (Index j = 0; j < m.cols(); ++j)
    if (!m(i, j).is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), m(i, j).raw().get_den().get_mpz_t());
  mpz_class num_gcd = 0;
  for (Index j = 0; j < m.cols(); ++j) {
    if (m(i, j).is_zero()) continue;
    mpz_class scaled_num = m(i, j).raw().get_num() * (den_lcm / m(i, j).raw().get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
  }
  if (num_gcd == 0) return;  // zero row
  Rational scale{mpq_class(den_lcm, num_gcd)};
  for (Index j = 0; j < m.cols(); ++j) m(i, j) *= scale;
}

}  // namespace

Echelon eliminate(RatMatrix m) {
  const Index rows = m.rows(), cols = m.cols();
  for (Index i = 0; i < rows; ++i) normalize_row(m, i);

  Echelon e;
  Rational prev(1);
  Index pr = 0;  // next pivot row
  for (Index col = 0; col < cols && pr < rows; ++col) {
    Index chosen = -1;
    for (Index i = pr; i < rows; ++i) {
      if (!m(i, col).is_zero()) { chosen = i; break; }
    }
    if (chosen < 0) continue;
    if (chosen != pr) m.row(chosen).swap(m.row(pr));
    for (Index i = pr + 1; i < rows; ++i) {
      for (Index j = col + 1; j < cols; ++j)
        m(i, j) = (m(pr, col) * m(i, j) - m(i, col) * m(pr, j)) / prev;
      m(i, col) = Rational(0);
    }
    prev = m(pr, col);
    e.pivot_cols.push_back(col);
    ++pr;
  }
  e.rank = pr;
  e.mat = std::move(m);
  return e;
}

Index rank(const RatMatrix& m) { return eliminate(m).rank; }

RatMatrix kernel_basis(const RatMatrix& m) {
  const Index cols = m.cols();
  Echelon e = eliminate(m);
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!e.is_pivot_col(c)) free_cols.push_back(c);

  RatMatrix basis = RatMatrix::Zero(cols, static_cast<Index>(free_cols.size()));
  for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
    RatVector x = RatVector::Zero(cols);
    x(free_cols[k]) = Rational(1);
    for (Index i = e.rank - 1; i >= 0; --i) {
      Index p = e.pivot_cols[i];
      Rational acc(0);
      for (Index j = p + 1; j < cols; ++j)
        if (!e.mat(i, j).is_zero() && !x(j).is_zero()) acc += e.mat(i, j) * x(j);
      x(p) = -acc / e.mat(i, p);
    }
    basis.col(k) = x;
  }
  return basis;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v) {
  const Index cols = m.cols();
  RatMatrix aug(m.rows(), cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = v;
  Echelon e = eliminate(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) return std::nullopt;

  RatVector x = RatVector::Zero(cols);
  for (Index i = e.rank - 1; i >= 0; --i) {
    Index p = e.pivot_cols[i];
    Rational acc = e.mat(i, cols);
    for (Index j = p + 1; j < cols; ++j)
      if (!e.mat(i, j).is_zero() && !x(j).is_zero()) acc -= e.mat(i, j) * x(j);
    x(p) = acc / e.mat(i, p);
  }
  return x;
}

std::vector<Index> extend_independent(const RatMatrix& base, const RatMatrix& candidates) {
  const Index n = base.rows() > 0 ? base.rows() : candidates.rows();
  RatMatrix joint(n, base.cols() + candidates.cols());
  if (base.cols() > 0) joint.leftCols(base.cols()) = base;
  if (candidates.cols() > 0) joint.rightCols(candidates.cols()) = candidates;
  Echelon e = eliminate(std::move(joint));
  std::vector<Index> picked;
  for (Index c : e.pivot_cols)
    if (c >= base.cols()) picked.push_back(c - base.cols());
  return picked;
}

std::optional<RatVector> coordinates_in_span(const RatMatrix& m, const RatVector& v) {
  return solve_linear(m, v);
}

}  // namespace aq
