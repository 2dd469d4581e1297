#include "lexspec/lexalg.hpp"

#include <algorithm>
#include <cctype>

namespace lexspec {

namespace {

void require_same(const LexElement& a, const LexElement& b) {
  if (a.signature() != b.signature())
    throw Error("signature mismatch: " + to_string(a.signature()) + " vs " + to_string(b.signature()));
}

void require_member(const LexElement& a) {
  if (!in_unit_interval(a)) throw Error("operand " + to_string(a) + " is outside [0, u]");
}

}  // namespace

Signature::Signature(int k_, int d_) : k(k_), d(d_) {
  if (k < 1) throw Error("signature requires k >= 1");
  if (d < 1) throw Error("signature requires d >= 1");
}

std::string to_string(const Signature& s) {
  return "k=" + std::to_string(s.k) + ",d=" + std::to_string(s.d);
}

std::string_view to_string(Order o) {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    case Order::Incomparable: return "Incomparable";
  }
  return "?";
}

LexElement::LexElement(Signature sig, Integer h, std::vector<Integer> g)
    : sig_(sig), h_(std::move(h)), g_(std::move(g)) {
  if (g_.size() != static_cast<std::size_t>(sig_.d))
    throw Error("infinitesimal part has " + std::to_string(g_.size()) + " coordinates, signature needs " +
                std::to_string(sig_.d));
}

LexElement LexElement::zero(Signature sig) {
  return LexElement(sig, 0, std::vector<Integer>(sig.d, Integer(0)));
}

LexElement LexElement::unit(Signature sig) {
  return LexElement(sig, sig.k, std::vector<Integer>(sig.d, Integer(0)));
}

bool LexElement::is_zero() const {
  return h_ == 0 && std::all_of(g_.begin(), g_.end(), [](const Integer& x) { return x == 0; });
}

std::strong_ordering repr_order(const LexElement& a, const LexElement& b) {
  if (a.signature().k != b.signature().k) return a.signature().k <=> b.signature().k;
  if (a.signature().d != b.signature().d) return a.signature().d <=> b.signature().d;
  if (a.height() != b.height()) return a.height() < b.height() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t j = 0; j < a.infinitesimal().size(); ++j) {
    const auto& x = a.infinitesimal()[j];
    const auto& y = b.infinitesimal()[j];
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Order lex_cmp(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  if (a.height() < b.height()) return Order::Less;
  if (a.height() > b.height()) return Order::Greater;
  bool le = true, ge = true;
  for (std::size_t j = 0; j < a.infinitesimal().size(); ++j) {
    const auto& x = a.infinitesimal()[j];
    const auto& y = b.infinitesimal()[j];
    if (x > y) le = false;
    if (x < y) ge = false;
  }
  if (le && ge) return Order::Equal;
  if (le) return Order::Less;
  if (ge) return Order::Greater;
  return Order::Incomparable;
}

bool lex_le(const LexElement& a, const LexElement& b) {
  Order o = lex_cmp(a, b);
  return o == Order::Less || o == Order::Equal;
}

LexElement operator+(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  std::vector<Integer> g(a.infinitesimal());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] += b.infinitesimal()[j];
  return LexElement(a.signature(), a.height() + b.height(), std::move(g));
}

LexElement operator-(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  std::vector<Integer> g(a.infinitesimal());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] -= b.infinitesimal()[j];
  return LexElement(a.signature(), a.height() - b.height(), std::move(g));
}

LexElement operator-(const LexElement& a) {
  std::vector<Integer> g(a.infinitesimal());
  for (auto& x : g) x = -x;
  return LexElement(a.signature(), -a.height(), std::move(g));
}

LexElement meet(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  if (a.height() < b.height()) return a;
  if (b.height() < a.height()) return b;
  std::vector<Integer> g(a.infinitesimal());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = std::min(g[j], b.infinitesimal()[j]);
  return LexElement(a.signature(), a.height(), std::move(g));
}

LexElement join(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  if (a.height() > b.height()) return a;
  if (b.height() > a.height()) return b;
  std::vector<Integer> g(a.infinitesimal());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = std::max(g[j], b.infinitesimal()[j]);
  return LexElement(a.signature(), a.height(), std::move(g));
}

bool in_unit_interval(const LexElement& a) {
  const auto& g = a.infinitesimal();
  if (a.height() < 0 || a.height() > a.signature().k) return false;
  if (a.height() == 0) return std::all_of(g.begin(), g.end(), [](const Integer& x) { return x >= 0; });
  if (a.height() == a.signature().k) return std::all_of(g.begin(), g.end(), [](const Integer& x) { return x <= 0; });
  return true;
}

int height_class(const LexElement& a) { return a.height().convert_to<int>(); }

LexElement mv_oplus(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  require_member(a);
  require_member(b);
  return meet(a + b, LexElement::unit(a.signature()));
}

LexElement mv_neg(const LexElement& a) {
  require_member(a);
  return LexElement::unit(a.signature()) - a;
}

LexElement mv_odot(const LexElement& a, const LexElement& b) {
  return mv_neg(mv_oplus(mv_neg(a), mv_neg(b)));
}

std::optional<LexElement> partial_add(const LexElement& a, const LexElement& b) {
  require_same(a, b);
  require_member(a);
  require_member(b);
  if (!lex_le(a, mv_neg(b))) return std::nullopt;
  return a + b;
}

std::optional<LexElement> sum_finite(Signature sig, std::span<const LexElement> items) {
  LexElement total = LexElement::zero(sig);
  for (const auto& it : items) {
    if (it.signature() != sig) throw Error("signature mismatch in sum_finite");
    if (!in_unit_interval(it)) return std::nullopt;
    total = total + it;
  }
  // Items are >= 0, so every subsum lies below the total.
  if (!lex_le(total, LexElement::unit(sig))) return std::nullopt;
  return total;
}

std::string to_string(const LexElement& a) {
  std::string out = "(" + a.height().str() + ";";
  for (std::size_t j = 0; j < a.infinitesimal().size(); ++j) {
    out += j ? ", " : " ";
    out += a.infinitesimal()[j].str();
  }
  return out + ")";
}

LexElement parse_lex(std::string_view text, Signature sig) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 4 || s.front() != '(' || s.back() != ')')
    throw ParseError("lex element must look like '(h; g1,...,gd)': '" + std::string(text) + "'");
  s = s.substr(1, s.size() - 2);
  auto semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("missing ';' in lex element '" + std::string(text) + "'");
  auto as_int = [&](std::string_view part) {
    Rational r = parse_rational(part);
    if (boost::multiprecision::denominator(r) != 1)
      throw ParseError("non-integer coordinate in '" + std::string(text) + "'");
    return Integer(boost::multiprecision::numerator(r));
  };
  Integer h = as_int(std::string_view(s).substr(0, semi));
  std::vector<Integer> g;
  std::string_view rest = std::string_view(s).substr(semi + 1);
  while (true) {
    auto comma = rest.find(',');
    g.push_back(as_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (g.size() != static_cast<std::size_t>(sig.d))
    throw ParseError("lex element '" + std::string(text) + "' has wrong rank for " + to_string(sig));
  return LexElement(sig, std::move(h), std::move(g));
}

}  // namespace lexspec
