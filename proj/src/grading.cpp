#include "aq/grading.hpp"

#include <algorithm>
#include <sstream>

namespace aq {

GenSet::GenSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.degree < 1) throw BuildError("generator '" + g.name + "' must have degree >= 1, got " + std::to_string(g.degree));
    if (g.name.empty()) throw BuildError("generator with empty name");
  }
  std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.degree, a.name) < std::tie(b.degree, b.name);
  });
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    if (!index_.emplace(gens_[static_cast<size_t>(i)].name, i).second)
      throw BuildError("duplicate generator id '" + gens_[static_cast<size_t>(i)].name + "'");
  }
}

std::optional<int> GenSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GenSet::require(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw BuildError("unknown generator id '" + name + "'");
  return *idx;
}

int GenSet::max_degree() const {
  return gens_.empty() ? 0 : gens_.back().degree;
}

bool GenSet::operator==(const GenSet& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree) return false;
  return true;
}

int Monomial::flat_length() const {
  int n = 0;
  for (const auto& [g, e] : factors_) n += e;
  return n;
}

std::vector<int> Monomial::flat_word() const {
  std::vector<int> w;
  for (const auto& [g, e] : factors_)
    for (int k = 0; k < e; ++k) w.push_back(g);
  return w;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
  if (auto c = degree_ <=> o.degree_; c != 0) return c;
  return factors_ <=> o.factors_;
}

Monomial MonomialBuilder::from_factors(const GenSet& gs, std::vector<std::pair<int, int>> factors) {
  Monomial m;
  m.factors_ = std::move(factors);
  for (const auto& [g, e] : m.factors_) m.degree_ += e * gs[g].degree;
  return m;
}

Element Element::term(const Monomial& m, const Rational& c) {
  Element e;
  if (!c.is_zero()) e.terms_.emplace(m, c);
  return e;
}

Element Element::generator(const GenSet& gs, int index) {
  return term(MonomialBuilder::from_factors(gs, {{index, 1}}), Rational(1));
}

void Element::add_term(const Monomial& m, const Rational& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Element::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (m.degree() != degree) return false;
  return true;
}

std::optional<int> Element::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

std::map<int, Element> Element::homogeneous_parts() const {
  std::map<int, Element> parts;
  for (const auto& [m, c] : terms_) parts[m.degree()].add_term(m, c);
  return parts;
}

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, c);
  return r;
}

Element operator-(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [m, c] : b.terms()) r.add_term(m, -c);
  return r;
}

Element operator*(const Rational& c, const Element& a) {
  Element r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : a.terms()) r.add_term(m, c * k);
  return r;
}

Element operator-(const Element& a) { return Rational(-1) * a; }

std::optional<std::pair<Monomial, int>> monomial_normalize(const GenSet& gs,
                                                           std::span<const int> word) {
  std::vector<int> w(word.begin(), word.end());
  for (int g : w)
    if (g < 0 || g >= gs.size()) throw BuildError("monomial_normalize: generator index out of range");

  int sign = 1;
  // insertion sort, counting Koszul signs for adjacent transpositions
  for (size_t i = 1; i < w.size(); ++i) {
    size_t j = i;
    while (j > 0 && w[j - 1] > w[j]) {
      if (gs[w[j - 1]].odd() && gs[w[j]].odd()) sign = -sign;
      std::swap(w[j - 1], w[j]);
      --j;
    }
  }
  std::vector<std::pair<int, int>> factors;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!factors.empty() && factors.back().first == w[i]) {
      if (gs[w[i]].odd()) return std::nullopt;  // odd square vanishes
      ++factors.back().second;
    } else {
      factors.push_back({w[i], 1});
    }
  }
  return std::make_pair(MonomialBuilder::from_factors(gs, std::move(factors)), sign);
}

Element monomial_mul(const GenSet& gs, const Monomial& a, const Monomial& b) {
  std::vector<int> word = a.flat_word();
  for (int g : b.flat_word()) word.push_back(g);
  auto norm = monomial_normalize(gs, word);
  if (!norm) return Element::zero();
  return Element::term(norm->first, Rational(norm->second));
}

Element elem_mul(const GenSet& gs, const Element& a, const Element& b) {
  Element r;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> word = ma.flat_word();
      for (int g : mb.flat_word()) word.push_back(g);
      auto norm = monomial_normalize(gs, word);
      if (!norm) continue;
      r.add_term(norm->first, ca * cb * Rational(norm->second));
    }
  }
  return r;
}

namespace {

void enumerate_monomials(const GenSet& gs, int from_gen, int remaining,
                         std::vector<std::pair<int, int>>& acc,
                         std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(MonomialBuilder::from_factors(gs, acc));
    return;
  }
  for (int g = from_gen; g < gs.size(); ++g) {
    int d = gs[g].degree;
    if (d > remaining) break;  // generators sorted by degree
    int max_exp = gs[g].odd() ? 1 : remaining / d;
    for (int e = 1; e <= max_exp; ++e) {
      acc.push_back({g, e});
      enumerate_monomials(gs, g + 1, remaining - e * d, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<Monomial> window_basis(const GenSet& gs, int degree) {
  if (degree < 0) return {};
  if (degree == 0) return {Monomial::unit()};
  std::vector<Monomial> out;
  std::vector<std::pair<int, int>> acc;
  enumerate_monomials(gs, 0, degree, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

RatVector coordinates(const GenSet& gs, const Element& e, int degree,
                      const std::vector<Monomial>& basis) {
  RatVector v = RatVector::Zero(static_cast<Index>(basis.size()));
  std::map<Monomial, Index> pos;
  for (Index i = 0; i < static_cast<Index>(basis.size()); ++i) pos.emplace(basis[static_cast<size_t>(i)], i);
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() != degree)
      throw BuildError("coordinates: element not homogeneous of degree " + std::to_string(degree) +
                       " (found " + to_string(gs, m) + ")");
    auto it = pos.find(m);
    if (it == pos.end()) throw BuildError("coordinates: monomial outside basis: " + to_string(gs, m));
    v(it->second) = c;
  }
  return v;
}

std::string to_string(const GenSet& gs, const Monomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : m.factors()) {
    if (!first) os << "*";
    os << gs[g].name;
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string to_string(const GenSet& gs, const Element& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : e.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (m.is_unit()) {
      os << a.str();
    } else {
      if (a != Rational(1)) os << a.str() << "*";
      os << to_string(gs, m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace aq
