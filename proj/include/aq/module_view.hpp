#pragma once

#include <optional>

#include "aq/cdga.hpp"

namespace aq {

/// A dg module over A presented as a CDGA carrier B together with a structure
/// map φ : A → B. Covers every module the engine needs: M = A (φ = id),
/// M = ℚ (empty carrier, augmentation), M = A*(X) via a basepoint map.
/// An optional top cap truncates the carrier from above: the quotient module
/// B / B_{>cap}, with the induced differential and action.
class DgModuleView {
 public:
  static DgModuleView self(CdgaPtr a);
  static DgModuleView trivial(CdgaPtr a);  // M = ℚ
  static DgModuleView over(DgaMorphism phi, std::optional<int> top_cap = std::nullopt);

  const FreeCdga& base() const { return phi_.source(); }
  const FreeCdga& carrier() const { return phi_.target(); }
  CdgaPtr base_ptr() const { return phi_.source_ptr(); }
  CdgaPtr carrier_ptr() const { return phi_.target_ptr(); }
  const DgaMorphism& phi() const { return phi_; }
  std::optional<int> top_cap() const { return top_cap_; }
  bool is_self() const;

  std::vector<Monomial> slice_basis(int degree) const;
  Element truncate(const Element& e) const;
  Element differential(const Element& m) const;          // d_B, then truncate
  Element act(const Element& a, const Element& m) const; // φ(a)·m, truncated

  DgModuleView with_cap(std::optional<int> cap) const;

 private:
  explicit DgModuleView(DgaMorphism phi, std::optional<int> cap)
      : phi_(std::move(phi)), top_cap_(cap) {}
  DgaMorphism phi_;
  std::optional<int> top_cap_;
};

}  // namespace aq
