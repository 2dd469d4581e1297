#pragma once

// Finite-support n-dimensional observables x(A) = sum of a_i over t_i in A.

#include "lexspec/boxgeom.hpp"
#include "lexspec/lexalg.hpp"

#include <vector>

namespace lexspec {

struct Atom {
  Point point;
  LexElement weight;

  friend bool operator==(const Atom&, const Atom&) = default;
};

class DiscreteObservable {
 public:
  /// Validates the atoms: distinct points of dimension n, nonzero weights in
  /// [0, u], summable with total exactly u. Atoms are stored sorted by point.
  static DiscreteObservable make(Signature sig, std::size_t n, std::vector<Atom> atoms);

  const Signature& signature() const { return sig_; }
  std::size_t dim() const { return n_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  /// x(A).
  LexElement eval(const Region& a) const;
  /// x({p}).
  LexElement point_mass(const Point& p) const;

  friend bool operator==(const DiscreteObservable&, const DiscreteObservable&) = default;

 private:
  DiscreteObservable(Signature sig, std::size_t n, std::vector<Atom> atoms)
      : sig_(sig), n_(n), atoms_(std::move(atoms)) {}

  Signature sig_;
  std::size_t n_;
  std::vector<Atom> atoms_;
};

}  // namespace lexspec
