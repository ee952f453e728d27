#include "aq/cdga.hpp"

#include <algorithm>
#include <sstream>

namespace aq {

FreeCdga FreeCdga::build(std::vector<Generator> gens,
                         const std::map<std::string, Element>& differential) {
  FreeCdga a;
  a.gens_ = GenSet(std::move(gens));
  a.d_.assign(static_cast<size_t>(a.gens_.size()), Element::zero());
  for (const auto& [name, value] : differential) {
    int g = a.gens_.require(name);
    if (!value.is_zero() && !value.is_homogeneous(a.gens_[g].degree + 1)) {
      throw BuildError("d(" + name + ") must be homogeneous of degree " +
                       std::to_string(a.gens_[g].degree + 1));
    }
    a.d_[static_cast<size_t>(g)] = value;
  }
  for (int g = 0; g < a.gens_.size(); ++g) {
    Element dd = a.d(a.d_of(g));
    if (!dd.is_zero()) {
      throw BuildError("d^2 != 0 on generator '" + a.gens_[g].name +
                       "': d(d(" + a.gens_[g].name + ")) = " + to_string(a.gens_, dd));
    }
  }
  a.minimal_ = true;
  a.simply_connected_ = true;
  for (int g = 0; g < a.gens_.size(); ++g) {
    if (a.gens_[g].degree < 2) a.simply_connected_ = false;
    for (const auto& [m, c] : a.d_of(g).terms())
      if (m.flat_length() < 2) a.minimal_ = false;
  }
  return a;
}

CdgaPtr FreeCdga::build_shared(std::vector<Generator> gens,
                               const std::map<std::string, Element>& differential) {
  return std::make_shared<const FreeCdga>(build(std::move(gens), differential));
}

CdgaPtr FreeCdga::rationals() {
  static const CdgaPtr q = build_shared({}, {});
  return q;
}

Element FreeCdga::d(const Element& e) const {
  Element r;
  for (const auto& [m, c] : e.terms()) {
    std::vector<int> word = m.flat_word();
    int prefix_degree = 0;
    for (size_t i = 0; i < word.size(); ++i) {
      const Element& dg = d_of(word[i]);
      if (!dg.is_zero()) {
        auto pre = monomial_normalize(gens_, std::span(word.data(), i));
        auto suf = monomial_normalize(gens_, std::span(word.data() + i + 1, word.size() - i - 1));
        // word is canonically sorted, so both normalize with sign +1
        Rational coef = (prefix_degree % 2 != 0) ? -c : c;
        Element t = elem_mul(gens_, Element::term(pre->first, coef), dg);
        t = elem_mul(gens_, t, Element::term(suf->first, Rational(1)));
        r = r + t;
      }
      prefix_degree += gens_[word[i]].degree;
    }
  }
  return r;
}

ComplexWindow FreeCdga::complex(DegreeWindow slice) const {
  ComplexWindow cw;
  cw.lo = slice.lo;
  cw.hi = slice.hi;
  std::vector<std::vector<Monomial>> bases;
  for (int n = slice.lo; n <= slice.hi; ++n) bases.push_back(window_basis(gens_, n));
  for (const auto& basis : bases) {
    std::vector<std::string> labels;
    for (const auto& m : basis) labels.push_back(to_string(gens_, m));
    cw.basis_labels.push_back(std::move(labels));
  }
  for (int n = slice.lo; n < slice.hi; ++n) {
    const auto& from = bases[static_cast<size_t>(n - slice.lo)];
    const auto& to = bases[static_cast<size_t>(n + 1 - slice.lo)];
    RatMatrix dn = RatMatrix::Zero(static_cast<Index>(to.size()), static_cast<Index>(from.size()));
    for (size_t j = 0; j < from.size(); ++j) {
      Element image = d(Element::term(from[j], Rational(1)));
      if (!image.is_zero()) dn.col(static_cast<Index>(j)) = coordinates(gens_, image, n + 1, to);
    }
    cw.diffs.push_back(std::move(dn));
  }
  return cw;
}

bool check_minimal(const FreeCdga& a) { return a.is_minimal(); }

Element translate_element(const GenSet& from, const GenSet& to, const Element& e) {
  Element r;
  for (const auto& [m, c] : e.terms()) {
    std::vector<std::pair<int, int>> factors;
    for (const auto& [g, exp] : m.factors()) factors.push_back({to.require(from[g].name), exp});
    std::sort(factors.begin(), factors.end());
    // renaming preserves degrees, so no Koszul signs can arise
    r.add_term(MonomialBuilder::from_factors(to, std::move(factors)), c);
  }
  return r;
}

FreeCdga hirsch_extension(const FreeCdga& a, const std::vector<Generator>& new_gens,
                          const std::map<std::string, Element>& f) {
  std::vector<Generator> gens;
  for (int g = 0; g < a.gens().size(); ++g) gens.push_back(a.gens()[g]);
  for (const auto& v : new_gens) gens.push_back(v);
  GenSet merged(gens);

  std::map<std::string, Element> diff;
  for (int g = 0; g < a.gens().size(); ++g)
    diff[a.gens()[g].name] = translate_element(a.gens(), merged, a.d_of(g));
  for (const auto& v : new_gens) {
    Element value;  // default d = 0
    if (auto it = f.find(v.name); it != f.end()) value = it->second;
    if (!value.is_zero()) {
      if (!value.is_homogeneous(v.degree + 1))
        throw BuildError("hirsch_extension: f(" + v.name + ") must have degree " +
                         std::to_string(v.degree + 1));
      if (!a.d(value).is_zero())
        throw BuildError("hirsch_extension: f(" + v.name + ") is not a cocycle");
    }
    diff[v.name] = translate_element(a.gens(), merged, value);
  }
  return FreeCdga::build(std::move(gens), diff);
}

FreeCdga tensor_product(const FreeCdga& a, const FreeCdga& b) {
  std::vector<Generator> gens;
  for (int g = 0; g < a.gens().size(); ++g) gens.push_back(a.gens()[g]);
  for (int g = 0; g < b.gens().size(); ++g) gens.push_back(b.gens()[g]);
  GenSet merged(gens);
  std::map<std::string, Element> diff;
  for (int g = 0; g < a.gens().size(); ++g)
    diff[a.gens()[g].name] = translate_element(a.gens(), merged, a.d_of(g));
  for (int g = 0; g < b.gens().size(); ++g)
    diff[b.gens()[g].name] = translate_element(b.gens(), merged, b.d_of(g));
  return FreeCdga::build(std::move(gens), diff);
}

DgaMorphism DgaMorphism::build(CdgaPtr src, CdgaPtr dst,
                               const std::map<std::string, Element>& images) {
  DgaMorphism f;
  f.src_ = std::move(src);
  f.dst_ = std::move(dst);
  f.images_.assign(static_cast<size_t>(f.src_->gens().size()), Element::zero());
  for (const auto& [name, value] : images) {
    int g = f.src_->gens().require(name);
    if (!value.is_zero() && !value.is_homogeneous(f.src_->gens()[g].degree))
      throw BuildError("morphism image of '" + name + "' must have degree " +
                       std::to_string(f.src_->gens()[g].degree));
    f.images_[static_cast<size_t>(g)] = value;
  }
  for (int g = 0; g < f.src_->gens().size(); ++g) {
    Element lhs = f.apply(f.src_->d_of(g));
    Element rhs = f.dst_->d(f.image_of(g));
    if (!(lhs == rhs))
      throw BuildError("morphism does not commute with differentials on generator '" +
                       f.src_->gens()[g].name + "'");
  }
  return f;
}

DgaMorphism DgaMorphism::identity(CdgaPtr a) {
  std::map<std::string, Element> images;
  for (int g = 0; g < a->gens().size(); ++g)
    images[a->gens()[g].name] = Element::generator(a->gens(), g);
  return build(a, a, images);
}

DgaMorphism DgaMorphism::trivial(CdgaPtr src, CdgaPtr dst) {
  return build(std::move(src), std::move(dst), {});
}

Element DgaMorphism::apply(const Element& e) const {
  Element r;
  const GenSet& dst_gens = dst_->gens();
  for (const auto& [m, c] : e.terms()) {
    Element prod = Element::term(Monomial::unit(), c);
    for (int g : m.flat_word()) {
      prod = elem_mul(dst_gens, prod, image_of(g));
      if (prod.is_zero()) break;
    }
    r = r + prod;
  }
  return r;
}

PostnikovStage postnikov_truncation(CdgaPtr a, int n) {
  if (!a->is_minimal())
    throw PreconditionError("postnikov_truncation: input must be minimal");
  std::vector<Generator> kept;
  for (int g = 0; g < a->gens().size(); ++g)
    if (a->gens()[g].degree <= n) kept.push_back(a->gens()[g]);
  GenSet sub(kept);
  std::map<std::string, Element> diff;
  for (const auto& gen : kept) {
    int g = a->gens().require(gen.name);
    // minimality: d(g) is decomposable, so every factor has degree <= |g| <= n
    diff[gen.name] = translate_element(a->gens(), sub, a->d_of(g));
  }
  CdgaPtr stage = FreeCdga::build_shared(kept, diff);
  std::map<std::string, Element> incl;
  for (const auto& gen : kept)
    incl[gen.name] = Element::generator(a->gens(), a->gens().require(gen.name));
  return PostnikovStage{stage, DgaMorphism::build(stage, a, incl)};
}

Index CohomologyReport::dim(int n) const {
  auto d = summary.dim_at(n);
  return d ? *d : 0;
}

std::vector<Element> CohomologyReport::representatives(const GenSet& gs, int n) const {
  const auto& deg = summary.at(n);
  const auto& basis = bases[static_cast<size_t>(n - window.lo)];
  std::vector<Element> reps;
  for (Index k = 0; k < deg.representatives.cols(); ++k) {
    Element e;
    for (Index i = 0; i < deg.representatives.rows(); ++i)
      if (!deg.representatives(i, k).is_zero())
        e.add_term(basis[static_cast<size_t>(i)], deg.representatives(i, k));
    reps.push_back(std::move(e));
  }
  return reps;
}

CohomologyReport cohomology(const FreeCdga& a, DegreeWindow w) {
  // widen by one degree so every requested degree is interior
  ComplexWindow cw = a.complex(DegreeWindow(w.lo - 1, w.hi + 1));
  CohomologySummary full = cohomology_window(cw);
  CohomologyReport report;
  report.window = w;
  for (int n = w.lo; n <= w.hi; ++n) {
    report.bases.push_back(window_basis(a.gens(), n));
    report.summary.degrees.push_back(full.at(n));
  }
  return report;
}

namespace {

// Cocycle coordinate matrix and coboundary image matrix at one degree.
struct SliceData {
  std::vector<Monomial> basis;
  RatMatrix cocycles;      // columns: basis of Z^n
  RatMatrix coboundaries;  // columns: d applied to the (n-1)-basis
  RatMatrix d_out;         // the matrix C^n -> C^{n+1}
};

SliceData slice_data(const FreeCdga& a, int n) {
  ComplexWindow cw = a.complex(DegreeWindow(n - 1, n + 1));
  SliceData s;
  s.basis = window_basis(a.gens(), n);
  s.d_out = cw.d_from(n);
  s.cocycles = kernel_basis(s.d_out);
  s.coboundaries = cw.d_from(n - 1);
  return s;
}

}  // namespace

MinimalModelResult minimal_model(CdgaPtr a, int through_degree) {
  {
    CohomologyReport low = cohomology(*a, DegreeWindow(0, 1));
    if (low.dim(0) != 1 || low.dim(1) != 0)
      throw PreconditionError(
          "minimal_model: input must be connected and simply connected (H^0 = Q, H^1 = 0)");
  }
  if (a->is_minimal()) return MinimalModelResult{a, DgaMorphism::identity(a)};

  std::vector<Generator> gens;                // generators of the model built so far
  std::map<std::string, Element> model_diff;  // in model coordinates
  std::map<std::string, Element> q_images;    // in coordinates of *a
  CdgaPtr model = FreeCdga::rationals();
  DgaMorphism q = DgaMorphism::trivial(model, a);

  auto rebuild = [&]() {
    model = FreeCdga::build_shared(gens, model_diff);
    q = DgaMorphism::build(model, a, q_images);
  };

  int fresh = 0;
  for (int k = 2; k <= through_degree; ++k) {
    SliceData target = slice_data(*a, k);

    // surjectivity at k: adjoin closed generators hitting coker(H^k(model) -> H^k(A))
    {
      SliceData source = slice_data(*model, k);
      RatMatrix mapped(static_cast<Index>(target.basis.size()), source.cocycles.cols());
      for (Index j = 0; j < source.cocycles.cols(); ++j) {
        Element z;
        for (Index i = 0; i < source.cocycles.rows(); ++i)
          if (!source.cocycles(i, j).is_zero())
            z.add_term(source.basis[static_cast<size_t>(i)], source.cocycles(i, j));
        mapped.col(j) = coordinates(a->gens(), q.apply(z), k, target.basis);
      }
      RatMatrix reached(static_cast<Index>(target.basis.size()),
                        target.coboundaries.cols() + mapped.cols());
      if (target.coboundaries.cols() > 0) reached.leftCols(target.coboundaries.cols()) = target.coboundaries;
      if (mapped.cols() > 0) reached.rightCols(mapped.cols()) = mapped;
      for (Index pick : extend_independent(reached, target.cocycles)) {
        std::string name = "e" + std::to_string(k) + "_" + std::to_string(fresh++);
        gens.push_back({name, k});
        model_diff[name] = Element::zero();
        Element rep;
        for (Index i = 0; i < target.cocycles.rows(); ++i)
          if (!target.cocycles(i, pick).is_zero())
            rep.add_term(target.basis[static_cast<size_t>(i)], target.cocycles(i, pick));
        q_images[name] = rep;
      }
      rebuild();
    }

    // injectivity at k+1: adjoin generators killing ker(H^{k+1}(model) -> H^{k+1}(A))
    {
      CohomologyReport hm = cohomology(*model, DegreeWindow(k + 1, k + 1));
      std::vector<Element> reps = hm.representatives(model->gens(), k + 1);
      if (!reps.empty()) {
        SliceData target_up = slice_data(*a, k + 1);
        RatMatrix ha_basis(static_cast<Index>(target_up.basis.size()), 0);
        {
          std::vector<Index> picks = extend_independent(target_up.coboundaries, target_up.cocycles);
          ha_basis.resize(static_cast<Index>(target_up.basis.size()), static_cast<Index>(picks.size()));
          for (Index i = 0; i < static_cast<Index>(picks.size()); ++i)
            ha_basis.col(i) = target_up.cocycles.col(picks[static_cast<size_t>(i)]);
        }
        // induced map on H^{k+1} in the chosen bases
        RatMatrix induced(ha_basis.cols(), static_cast<Index>(reps.size()));
        for (size_t j = 0; j < reps.size(); ++j) {
          RatVector img = coordinates(a->gens(), q.apply(reps[j]), k + 1, target_up.basis);
          RatMatrix span(static_cast<Index>(target_up.basis.size()),
                         target_up.coboundaries.cols() + ha_basis.cols());
          if (target_up.coboundaries.cols() > 0) span.leftCols(target_up.coboundaries.cols()) = target_up.coboundaries;
          if (ha_basis.cols() > 0) span.rightCols(ha_basis.cols()) = ha_basis;
          auto coords = coordinates_in_span(span, img);
          if (!coords) throw BuildError("minimal_model: cocycle image escaped H^{k+1} span");
          induced.col(static_cast<Index>(j)) = coords->tail(ha_basis.cols());
        }
        RatMatrix ker = kernel_basis(induced);
        std::vector<std::pair<std::string, Element>> to_solve;
        for (Index j = 0; j < ker.cols(); ++j) {
          Element w;
          for (Index i = 0; i < ker.rows(); ++i)
            if (!ker(i, j).is_zero()) w = w + ker(i, j) * reps[static_cast<size_t>(i)];
          std::string name = "e" + std::to_string(k) + "_" + std::to_string(fresh++);
          gens.push_back({name, k});
          to_solve.push_back({name, w});
        }
        if (!to_solve.empty()) {
          GenSet extended(gens);
          for (auto& [name, w] : to_solve) {
            model_diff[name] = translate_element(model->gens(), extended, w);
            // q(new gen) solves d_A(v) = q(w); solvable because [q(w)] = 0 in H^{k+1}(A)
            SliceData down = slice_data(*a, k);
            RatVector rhs = coordinates(a->gens(), q.apply(w), k + 1, target_up.basis);
            auto sol = solve_linear(down.d_out, rhs);
            if (!sol) throw BuildError("minimal_model: failed to lift a killed class");
            Element v;
            for (Index i = 0; i < sol->size(); ++i)
              if (!(*sol)(i).is_zero()) v.add_term(down.basis[static_cast<size_t>(i)], (*sol)(i));
            q_images[name] = v;
          }
          rebuild();
        }
      }
    }
  }

  // post-validate: iso on H^k for k <= through_degree
  for (int k = 0; k <= through_degree; ++k) {
    CohomologyReport hm = cohomology(*model, DegreeWindow(k, k));
    CohomologyReport ha = cohomology(*a, DegreeWindow(k, k));
    if (hm.dim(k) != ha.dim(k))
      throw BuildError("minimal_model: cohomology mismatch at degree " + std::to_string(k));
  }
  return MinimalModelResult{model, q};
}

}  // namespace aq
