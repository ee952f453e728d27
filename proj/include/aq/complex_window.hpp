#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aq/linalg.hpp"

namespace aq {

struct DegreeWindow {
  int lo = 0;
  int hi = 0;
  DegreeWindow() = default;
  DegreeWindow(int l, int h) : lo(l), hi(h) {
    if (l > h) throw std::invalid_argument("DegreeWindow: lo > hi");
  }
  int span() const { return hi - lo + 1; }
  bool contains(int n) const { return lo <= n && n <= hi; }
};

/// One finite slice of a cochain complex: ordered bases for degrees lo..hi and
/// the differential matrices dⁿ : Cⁿ → Cⁿ⁺¹ for n = lo..hi−1. Cohomology is
/// fully known at interior degrees only; window edges are reported as
/// kernel-only lower bounds and never asserted against.
struct ComplexWindow {
  int lo = 0;
  int hi = -1;
  std::vector<std::vector<std::string>> basis_labels;  // size hi-lo+1
  std::vector<RatMatrix> diffs;                        // size hi-lo (may be 0x0 blocks)

  Index dim(int n) const;
  const RatMatrix& d_from(int n) const;  // valid for lo <= n < hi
  bool has_d_from(int n) const { return n >= lo && n < hi; }
};

enum class DegreeStatus {
  interior,          // exact cohomology
  edge_kernel_only,  // only ker dⁿ known; dim is an upper bound
  edge_unknown,      // no outgoing differential in the window
};

struct DegreeCohomology {
  int degree = 0;
  DegreeStatus status = DegreeStatus::interior;
  std::optional<Index> dim;     // exact for interior, kernel dim for kernel-only edges
  RatMatrix representatives;    // cocycle coordinate columns; classes form a basis (interior)
};

struct CohomologySummary {
  std::vector<DegreeCohomology> degrees;  // indexed lo..hi
  const DegreeCohomology& at(int n) const;
  std::optional<Index> dim_at(int n) const;
};

/// Exact ranks/kernels over ℚ via fraction-free elimination. Throws BuildError
/// when dⁿ⁺¹∘dⁿ ≠ 0 on the window interior (an upstream construction bug).
CohomologySummary cohomology_window(const ComplexWindow& cw);

}  // namespace aq
