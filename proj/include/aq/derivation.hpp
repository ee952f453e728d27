#pragma once

#include <optional>
#include <tuple>

#include "aq/module_view.hpp"

namespace aq {

/// Degree-d φ-derivation A → M, recorded by its values on generators and
/// extended to all of A by the φ-twisted graded Leibniz rule.
class Derivation {
 public:
  static Derivation zero(DgModuleView m, int degree);
  static Derivation elementary(DgModuleView m, int degree, int gen, const Monomial& value);
  /// Validates value degrees (|g| + degree, or zero).
  static Derivation from_values(DgModuleView m, int degree, std::vector<Element> values);

  int degree() const { return degree_; }
  const DgModuleView& module() const { return module_; }
  const FreeCdga& source() const { return module_.base(); }
  const Element& value(int gen) const { return values_[static_cast<size_t>(gen)]; }
  bool is_zero() const;

  /// θ(ab) = θ(a)φ(b) + (−1)^{|θ||a|} φ(a)θ(b), extended over monomials.
  Element apply(const Element& e) const;

  Derivation& operator+=(const Derivation& o);
  friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
  friend Derivation operator*(const Rational& c, const Derivation& a);
  friend Derivation operator-(const Derivation& a) { return Rational(-1) * a; }

  std::string label() const;  // "g -> value, ..." with zero values skipped

 private:
  Derivation(DgModuleView m, int degree, std::vector<Element> values)
      : module_(std::move(m)), degree_(degree), values_(std::move(values)) {}
  DgModuleView module_;
  int degree_;
  std::vector<Element> values_;
};

/// dθ = d_M∘θ − (−1)^{|θ|} θ∘d_A (the sign convention fixed once for the
/// whole engine; it matches [θ, d_A] up to overall sign).
Derivation der_differential(const Derivation& theta);

/// [θ₁,θ₂] = θ₁∘θ₂ − (−1)^{|θ₁||θ₂|} θ₂∘θ₁ on Der*(A,A). Requires M = A via id.
Derivation gerstenhaber_bracket(const Derivation& t1, const Derivation& t2);

/// Smallest k <= bound with θ^k = 0 on all generators, or nullopt.
std::optional<int> nilpotency_check(const Derivation& theta, int bound);

/// Ordered basis of elementary derivations of one degree.
struct DerSlice {
  int degree = 0;
  std::vector<std::pair<int, Monomial>> items;  // (source generator, target monomial)
  std::vector<std::string> labels;
  Index dim() const { return static_cast<Index>(items.size()); }
  Derivation assemble(const DgModuleView& m, const RatVector& coords) const;
  RatVector coordinates(const Derivation& theta) const;
};

DerSlice der_slice(const DgModuleView& m, int degree);

/// Spec operation surface: refuses non-minimal sources.
std::vector<Derivation> derivation_space(const DgModuleView& m, int degree);

struct DerComplex {
  DgModuleView module;
  std::vector<DerSlice> slices;  // degrees lo..hi
  ComplexWindow window;
  const DerSlice& slice(int degree) const;
};

DerComplex der_complex(const DgModuleView& m, DegreeWindow w);

struct AqCohomologyReport {
  DegreeWindow window;
  std::vector<Index> dims;                           // per degree lo..hi, exact
  std::vector<std::vector<Derivation>> representatives;
  Index dim(int n) const;
  const std::vector<Derivation>& reps(int n) const;
};

/// H^n_AQ(A, M) on the window via the derivation complex of the minimal A.
/// Throws PreconditionError when A is not minimal.
AqCohomologyReport aq_cohomology_der(const DgModuleView& m, DegreeWindow w);

/// Z⁰/B⁰ with its bracket. Basis representatives are echelon-leading cocycles,
/// so the structure constants are reproducible.
struct LiePresentation {
  std::vector<std::string> basis_labels;
  std::vector<Derivation> representatives;
  std::vector<std::tuple<int, int, int, Rational>> brackets;  // [e_i,e_j] = Σ_k c·e_k, i < j
  int dim() const { return static_cast<int>(basis_labels.size()); }
  bool is_abelian() const { return brackets.empty(); }
};

/// Checks antisymmetry/Jacobi on the recorded constants and independence of
/// the representative choice before returning.
LiePresentation h0_lie_algebra(CdgaPtr a);

}  // namespace aq
