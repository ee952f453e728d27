#include "aq/module_view.hpp"

namespace aq {

DgModuleView DgModuleView::self(CdgaPtr a) {
  return DgModuleView(DgaMorphism::identity(std::move(a)), std::nullopt);
}

DgModuleView DgModuleView::trivial(CdgaPtr a) {
  return DgModuleView(DgaMorphism::trivial(std::move(a), FreeCdga::rationals()), std::nullopt);
}

DgModuleView DgModuleView::over(DgaMorphism phi, std::optional<int> top_cap) {
  return DgModuleView(std::move(phi), top_cap);
}

bool DgModuleView::is_self() const {
  if (!(base().gens() == carrier().gens())) return false;
  for (int g = 0; g < base().gens().size(); ++g)
    if (!(phi_.image_of(g) == Element::generator(carrier().gens(), g))) return false;
  return true;
}

std::vector<Monomial> DgModuleView::slice_basis(int degree) const {
  if (top_cap_ && degree > *top_cap_) return {};
  return window_basis(carrier().gens(), degree);
}

Element DgModuleView::truncate(const Element& e) const {
  if (!top_cap_) return e;
  Element r;
  for (const auto& [m, c] : e.terms())
    if (m.degree() <= *top_cap_) r.add_term(m, c);
  return r;
}

Element DgModuleView::differential(const Element& m) const {
  return truncate(carrier().d(m));
}

Element DgModuleView::act(const Element& a, const Element& m) const {
  return truncate(carrier().mul(phi_.apply(a), m));
}

DgModuleView DgModuleView::with_cap(std::optional<int> cap) const {
  return DgModuleView(phi_, cap);
}

}  // namespace aq
