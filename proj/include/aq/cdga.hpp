#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aq/complex_window.hpp"
#include "aq/grading.hpp"

namespace aq {

class FreeCdga;
using CdgaPtr = std::shared_ptr<const FreeCdga>;

/// Finitely generated free graded-commutative algebra over ℚ with a
/// degree-(+1) differential. Immutable after construction; build() validates
/// d² = 0 on every generator and computes the minimality flags.
class FreeCdga {
 public:
  /// Throws BuildError on wrong value degrees or d² ≠ 0 (reporting the
  /// offending generator and the nonzero element).
  static FreeCdga build(std::vector<Generator> gens,
                        const std::map<std::string, Element>& differential);
  static CdgaPtr build_shared(std::vector<Generator> gens,
                              const std::map<std::string, Element>& differential);
  /// ℚ itself: no generators, zero differential.
  static CdgaPtr rationals();

  const GenSet& gens() const { return gens_; }
  const Element& d_of(int gen) const { return d_[static_cast<size_t>(gen)]; }

  /// Graded Leibniz extension of the differential.
  Element d(const Element& e) const;
  Element mul(const Element& a, const Element& b) const { return elem_mul(gens_, a, b); }

  bool is_minimal() const { return minimal_; }
  bool is_connected() const { return true; }  // generators all sit in degree >= 1
  bool is_simply_connected() const { return simply_connected_; }

  /// Bases and differential matrices on a degree slice.
  ComplexWindow complex(DegreeWindow slice) const;

 private:
  FreeCdga() = default;
  GenSet gens_;
  std::vector<Element> d_;
  bool minimal_ = true;
  bool simply_connected_ = true;
};

/// True iff every d(g) is decomposable (lies in A⁺·A⁺).
bool check_minimal(const FreeCdga& a);

/// Re-express an element of one generator table in another (matching by
/// generator name). Throws BuildError on missing names.
Element translate_element(const GenSet& from, const GenSet& to, const Element& e);

/// A ⊗ ΛV with the differential extended by f : V → Z*(A).
/// Throws BuildError when an f-value is not a cocycle of the right degree.
FreeCdga hirsch_extension(const FreeCdga& a, const std::vector<Generator>& new_gens,
                          const std::map<std::string, Element>& f);

FreeCdga tensor_product(const FreeCdga& a, const FreeCdga& b);

/// Degree-preserving algebra map determined by images of generators,
/// validated to commute with the differentials.
class DgaMorphism {
 public:
  static DgaMorphism build(CdgaPtr src, CdgaPtr dst,
                           const std::map<std::string, Element>& images);
  static DgaMorphism identity(CdgaPtr a);
  /// All generators to zero; the augmentation through ℚ into dst.
  static DgaMorphism trivial(CdgaPtr src, CdgaPtr dst);

  const FreeCdga& source() const { return *src_; }
  const FreeCdga& target() const { return *dst_; }
  CdgaPtr source_ptr() const { return src_; }
  CdgaPtr target_ptr() const { return dst_; }
  const Element& image_of(int gen) const { return images_[static_cast<size_t>(gen)]; }

  Element apply(const Element& e) const;  // multiplicative extension

 private:
  DgaMorphism() = default;
  CdgaPtr src_, dst_;
  std::vector<Element> images_;
};

struct PostnikovStage {
  CdgaPtr algebra;        // sub-CDGA on generators of degree <= n
  DgaMorphism inclusion;  // into the original algebra
};

/// Requires a minimal input (otherwise the differential need not restrict).
PostnikovStage postnikov_truncation(CdgaPtr a, int n);

struct CohomologyReport {
  DegreeWindow window;
  std::vector<std::vector<Monomial>> bases;  // per degree lo..hi
  CohomologySummary summary;                 // every degree in window is exact
  Index dim(int n) const;
  std::vector<Element> representatives(const GenSet& gs, int n) const;
};

/// H*(A) on the window; exact at every requested degree (the slice is
/// enlarged internally by one degree on each side).
CohomologyReport cohomology(const FreeCdga& a, DegreeWindow w);

struct MinimalModelResult {
  CdgaPtr model;
  DgaMorphism quasi_iso;  // model -> input, iso on H^k for k <= through_degree
};

/// Degree-by-degree construction for connected simply connected input
/// (H⁰ = ℚ, H¹ = 0 verified first). Already-minimal input is returned as is.
MinimalModelResult minimal_model(CdgaPtr a, int through_degree);

}  // namespace aq
