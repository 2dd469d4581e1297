#include "lexspec/observable.hpp"

#include <algorithm>

namespace lexspec {

DiscreteObservable DiscreteObservable::make(Signature sig, std::size_t n, std::vector<Atom> atoms) {
  if (n == 0) throw Error("observable dimension must be >= 1");
  std::vector<LexElement> weights;
  for (const auto& a : atoms) {
    if (a.point.size() != n) throw Error("atom point " + to_string(a.point) + " is not in R^" + std::to_string(n));
    if (a.weight.signature() != sig) throw Error("atom weight has a foreign signature");
    if (!in_unit_interval(a.weight)) throw Error("atom weight " + to_string(a.weight) + " is outside [0, u]");
    if (a.weight.is_zero()) throw Error("atom at " + to_string(a.point) + " has zero weight");
    weights.push_back(a.weight);
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.point < b.point; });
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (atoms[i - 1].point == atoms[i].point) throw Error("duplicate atom point " + to_string(atoms[i].point));
  auto total = sum_finite(sig, weights);
  if (!total) throw Error("atom weights are not summable");
  if (*total != LexElement::unit(sig))
    throw Error("atom weights sum to " + to_string(*total) + ", expected " + to_string(LexElement::unit(sig)));
  return DiscreteObservable(sig, n, std::move(atoms));
}

LexElement DiscreteObservable::eval(const Region& a) const {
  if (a.dim() != n_) throw Error("dimension mismatch in observable evaluation");
  LexElement sum = LexElement::zero(sig_);
  for (const auto& atom : atoms_)
    if (a.contains(atom.point)) sum = sum + atom.weight;
  return sum;
}

LexElement DiscreteObservable::point_mass(const Point& p) const {
  if (p.size() != n_) throw Error("dimension mismatch in point_mass");
  for (const auto& atom : atoms_)
    if (atom.point == p) return atom.weight;
  return LexElement::zero(sig_);
}

}  // namespace lexspec
