#pragma once

// Exact arithmetic in the lexicographic group Z lex Z^d and in its unit
// interval [0, u], u = (k, 0), viewed both as an MV-algebra and as an
// effect algebra.

#include "lexspec/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexspec {

/// Strong-unit height k and rank d of the infinitesimal group Z^d.
struct Signature {
  int k = 1;
  int d = 1;

  Signature() = default;
  Signature(int k_, int d_);

  friend bool operator==(const Signature&, const Signature&) = default;
};

std::string to_string(const Signature& s);

enum class Order { Less, Equal, Greater, Incomparable };

std::string_view to_string(Order o);

/// Element (h, g) of Z lex Z^d tagged with the signature of its algebra.
/// Any group element is representable; membership in [0, u] is a separate
/// predicate.
class LexElement {
 public:
  LexElement(Signature sig, Integer h, std::vector<Integer> g);

  static LexElement zero(Signature sig);
  /// The strong unit u = (k, 0).
  static LexElement unit(Signature sig);

  const Signature& signature() const { return sig_; }
  const Integer& height() const { return h_; }
  const std::vector<Integer>& infinitesimal() const { return g_; }

  bool is_zero() const;

  friend bool operator==(const LexElement&, const LexElement&) = default;

 private:
  Signature sig_;
  Integer h_;
  std::vector<Integer> g_;
};

/// Total order on representations; used for sorting and map keys only,
/// not the lexicographic group order.
std::strong_ordering repr_order(const LexElement& a, const LexElement& b);

Order lex_cmp(const LexElement& a, const LexElement& b);
bool lex_le(const LexElement& a, const LexElement& b);

LexElement operator+(const LexElement& a, const LexElement& b);
LexElement operator-(const LexElement& a, const LexElement& b);
LexElement operator-(const LexElement& a);

LexElement meet(const LexElement& a, const LexElement& b);
LexElement join(const LexElement& a, const LexElement& b);

bool in_unit_interval(const LexElement& a);
/// Stratum index i with a in M_i; M_0 = Rad(M), M_k = Rad(M)'.
int height_class(const LexElement& a);

LexElement mv_oplus(const LexElement& a, const LexElement& b);
LexElement mv_neg(const LexElement& a);
LexElement mv_odot(const LexElement& a, const LexElement& b);

/// Effect-algebra sum: defined iff a <= b'.
std::optional<LexElement> partial_add(const LexElement& a, const LexElement& b);

/// Sum of a finite summable family; nullopt if the family is not summable.
/// The empty family sums to 0 of `sig`.
std::optional<LexElement> sum_finite(Signature sig, std::span<const LexElement> items);

/// "(h; g1, ..., gd)".
std::string to_string(const LexElement& a);
LexElement parse_lex(std::string_view text, Signature sig);

}  // namespace lexspec
