#include "aq/complex_window.hpp"

#include "aq/grading.hpp"

namespace aq {

Index ComplexWindow::dim(int n) const {
  if (n < lo || n > hi) return 0;
  return static_cast<Index>(basis_labels[static_cast<size_t>(n - lo)].size());
}

const RatMatrix& ComplexWindow::d_from(int n) const {
  if (!has_d_from(n)) throw BuildError("ComplexWindow: no differential from degree " + std::to_string(n));
  return diffs[static_cast<size_t>(n - lo)];
}

const DegreeCohomology& CohomologySummary::at(int n) const {
  for (const auto& d : degrees)
    if (d.degree == n) return d;
  throw BuildError("CohomologySummary: degree " + std::to_string(n) + " not in window");
}

std::optional<Index> CohomologySummary::dim_at(int n) const { return at(n).dim; }

CohomologySummary cohomology_window(const ComplexWindow& cw) {
  // d∘d = 0 wherever both matrices live in the window
  for (int n = cw.lo; n + 1 < cw.hi; ++n) {
    if (cw.dim(n) == 0 || cw.dim(n + 2) == 0) continue;
    RatMatrix composite = cw.d_from(n + 1) * cw.d_from(n);
    if (!is_zero_matrix(composite))
      throw BuildError("cohomology_window: d∘d != 0 out of degree " + std::to_string(n));
  }

  CohomologySummary summary;
  for (int n = cw.lo; n <= cw.hi; ++n) {
    DegreeCohomology deg;
    deg.degree = n;
    const Index cn = cw.dim(n);
    if (!cw.has_d_from(n)) {
      deg.status = DegreeStatus::edge_unknown;
      summary.degrees.push_back(std::move(deg));
      continue;
    }
    RatMatrix ker = kernel_basis(cw.d_from(n));  // cn x k
    if (n == cw.lo) {
      deg.status = DegreeStatus::edge_kernel_only;
      deg.dim = ker.cols();
      deg.representatives = std::move(ker);
      summary.degrees.push_back(std::move(deg));
      continue;
    }
    const RatMatrix& din = cw.d_from(n - 1);  // cn x c_{n-1}
    deg.status = DegreeStatus::interior;
    Index image_rank = rank(din);
    deg.dim = ker.cols() - image_rank;
    // representatives: kernel columns independent modulo the image
    RatMatrix image = din;
    std::vector<Index> picked = extend_independent(image, ker);
    RatMatrix reps(cn, static_cast<Index>(picked.size()));
    for (Index k = 0; k < static_cast<Index>(picked.size()); ++k) reps.col(k) = ker.col(picked[static_cast<size_t>(k)]);
    if (static_cast<Index>(picked.size()) != *deg.dim)
      throw BuildError("cohomology_window: representative count mismatch at degree " + std::to_string(n));
    deg.representatives = std::move(reps);
    summary.degrees.push_back(std::move(deg));
  }
  return summary;
}

}  // namespace aq
