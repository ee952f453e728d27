#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "aq/linalg.hpp"
#include "aq/rational.hpp"

namespace aq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Construction-time contract violation (bad degrees, d² ≠ 0, ...).
struct BuildError : Error {
  using Error::Error;
};

/// A computation was refused because a stated precondition fails
/// (non-minimal source, uncertified window, ...). CLI exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

struct Generator {
  std::string name;
  int degree = 0;
  bool odd() const { return degree % 2 != 0; }
};

/// Ordered table of the polynomial generators of a free graded-commutative
/// algebra. Canonical order: (degree, then name); monomial bases, matrix
/// columns and Koszul signs are all derived from it, so results are
/// reproducible across runs.
class GenSet {
 public:
  GenSet() = default;
  explicit GenSet(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& operator[](int i) const { return gens_[static_cast<size_t>(i)]; }
  std::optional<int> find(const std::string& name) const;
  int require(const std::string& name) const;  // throws BuildError on unknown id
  int max_degree() const;

  bool operator==(const GenSet& o) const;

 private:
  std::vector<Generator> gens_;
  std::map<std::string, int> index_;
};

/// Canonical monomial: factors sorted by generator order, odd generators with
/// exponent exactly 1. Degree is cached so ordering needs no context.
class Monomial {
 public:
  Monomial() = default;  // the unit
  static Monomial unit() { return Monomial(); }

  bool is_unit() const { return factors_.empty(); }
  int degree() const { return degree_; }
  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  int flat_length() const;
  std::vector<int> flat_word() const;  // exponent-expanded generator indices

  /// True when the monomial is a single generator to the first power.
  bool is_single_generator() const {
    return factors_.size() == 1 && factors_[0].second == 1;
  }

  std::strong_ordering operator<=>(const Monomial& o) const;
  bool operator==(const Monomial& o) const = default;

  friend struct MonomialBuilder;

 private:
  std::vector<std::pair<int, int>> factors_;  // (generator index, exponent ≥ 1)
  int degree_ = 0;
};

struct MonomialBuilder {
  static Monomial from_factors(const GenSet& gs, std::vector<std::pair<int, int>> factors);
};

/// ℚ-linear combination of canonical monomials; zero coefficients never stored.
class Element {
 public:
  Element() = default;
  static Element zero() { return Element(); }
  static Element unit() { return term(Monomial::unit(), Rational(1)); }
  static Element term(const Monomial& m, const Rational& c);
  static Element generator(const GenSet& gs, int index);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;

  /// Homogeneous with the stated degree? Zero elements are homogeneous of
  /// every degree.
  bool is_homogeneous(int degree) const;
  std::optional<int> degree() const;  // nullopt for 0 and inhomogeneous sums
  std::map<int, Element> homogeneous_parts() const;

  bool operator==(const Element& o) const = default;

 private:
  std::map<Monomial, Rational> terms_;
};

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator*(const Rational& c, const Element& a);
Element operator-(const Element& a);

/// Sorts a flat word of generator indices into canonical order, accumulating
/// the Koszul sign (adjacent swap of degrees p,q contributes (−1)^{pq}).
/// Returns nullopt when an odd generator repeats (x² = 0 in char 0).
std::optional<std::pair<Monomial, int>> monomial_normalize(const GenSet& gs,
                                                           std::span<const int> word);

Element elem_mul(const GenSet& gs, const Element& a, const Element& b);
Element monomial_mul(const GenSet& gs, const Monomial& a, const Monomial& b);

/// All canonical monomials of exactly the given degree, in canonical order.
std::vector<Monomial> window_basis(const GenSet& gs, int degree);

/// Coordinates of a homogeneous element in window_basis(gs, degree).
RatVector coordinates(const GenSet& gs, const Element& e, int degree,
                      const std::vector<Monomial>& basis);

std::string to_string(const GenSet& gs, const Monomial& m);
std::string to_string(const GenSet& gs, const Element& e);

}  // namespace aq
