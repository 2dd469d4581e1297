#include "lexspec/gallery.hpp"

#include <charconv>

namespace lexspec {

namespace {

GalleryEntry from_atoms(std::string name, std::string title, int k, std::vector<Atom> atoms,
                        std::vector<Point> listed) {
  DiscreteObservable x = DiscreteObservable::make(Signature(k, 1), 2, std::move(atoms));
  StepResolution f = StepResolution::from_observable(x);
  return GalleryEntry{std::move(name), std::move(title), std::move(x), std::move(f), std::move(listed), {}};
}

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string_view rest = name.substr(prefix.size());
  int value = 0;
  auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || end != rest.data() + rest.size() || rest.empty()) return std::nullopt;
  return value;
}

GalleryEntry worked_case(int c) {
  const std::string name = "3.7/" + std::to_string(c);
  const Signature s2(2, 1), s3(3, 1);
  const LexElement a1(s2, 0, {1}), a2(s2, 1, {2}), a3(s2, 1, {-3});
  switch (c) {
    case 1:
      return from_atoms(name, "chain t1 < t2 < t3", 2, {{{1, 1}, a1}, {{2, 2}, a2}, {{3, 3}, a3}}, {{2, 2}, {3, 3}});
    case 2:
      return from_atoms(name, "t3 to the right of t2", 2, {{{1, 1}, a1}, {{2, 2}, a2}, {{3, 2}, a3}}, {{2, 2}, {3, 2}});
    case 3:
      return from_atoms(name, "t3 above t2", 2, {{{1, 1}, a1}, {{2, 2}, a2}, {{2, 3}, a3}}, {{2, 2}, {2, 3}});
    case 4: {
      GalleryEntry e = from_atoms(name, "t2, t3 incomparable", 2, {{{1, 1}, a1}, {{3, 3}, a2}, {{4, 2}, a3}},
                                  {{3, 3}, {4, 2}});
      e.note = "the listed points omit the T_2 corner (4,3)";
      return e;
    }
    case 5:
      return from_atoms(name, "empty T_1", 2, {{{1, 1}, LexElement(s2, 0, {2})}, {{2, 2}, LexElement(s2, 2, {-2})}},
                        {{2, 2}});
    case 6: {
      GalleryEntry e = from_atoms(
          name, "k = 3, t1, t2 incomparable", 3,
          {{{1, 2}, LexElement(s3, 1, {1})}, {{2, 1}, LexElement(s3, 1, {2})}, {{3, 3}, LexElement(s3, 1, {-3})}},
          {{1, 2}, {2, 1}, {3, 3}});
      e.note = "the listed points omit the T_2 corner (2,2)";
      return e;
    }
    case 7:
      return from_atoms(
          name, "k = 3 antichain, saturating the bound", 3,
          {{{1, 3}, LexElement(s3, 1, {1})}, {{2, 2}, LexElement(s3, 1, {2})}, {{3, 1}, LexElement(s3, 1, {-3})}},
          {{1, 3}, {2, 2}, {3, 1}, {2, 3}, {3, 2}, {3, 3}});
    case 8:
      return from_atoms(name, "k = 3, unequal heights", 3,
                        {{{1, 2}, LexElement(s3, 1, {1})}, {{2, 1}, LexElement(s3, 2, {-1})}},
                        {{1, 2}, {2, 1}, {2, 2}});
    case 9: {
      StepResolution f = mismatch_resolution();
      GalleryEntry e{name, "block infima sum to 1 but F is not F_x'", std::nullopt, f, {{1, 3}, {3, 2}, {3, 3}}, {}};
      e.note =
          "the printed data mixes k = 2 with a T_3 and a weight (0,-3) outside [0,u]; "
          "running the corrected variant with atoms (1,3)->(1;2), (3,2)->(1;-3), (2,0)->(0;1)";
      return e;
    }
    default:
      throw Error("unknown example " + name);
  }
}

}  // namespace

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"3.7/1", "3.7/2", "3.7/3", "3.7/4", "3.7/5",
                                                 "3.7/6", "3.7/7", "3.7/8", "3.7/9"};
  return names;
}

GalleryEntry gallery_entry(std::string_view name, int k) {
  if (auto c = suffix_number(name, "3.7/")) return worked_case(*c);
  if (auto kk = suffix_number(name, "saturate/")) {
    if (*kk < 1) throw Error("saturate/k needs k >= 1");
    DiscreteObservable x = saturating_family(*kk);
    StepResolution f = StepResolution::from_observable(x);
    return GalleryEntry{std::string(name), "k atoms of weight (1;0) on an antichain", x, f, {}, {}};
  }
  for (auto [prefix, shape, title] :
       {std::tuple{"patho/", PathologyShape::Staircase, "staircase of corners at level 1"},
        std::tuple{"antichain/", PathologyShape::ShrinkingAntichain, "bounded shrinking antichain at level 1"}}) {
    if (auto m = suffix_number(name, prefix)) {
      if (*m < 1) throw Error(std::string(prefix) + "m needs m >= 1");
      return GalleryEntry{std::string(name), title, std::nullopt, pathological_family(*m, k, shape), {}, {}};
    }
  }
  throw Error("unknown example " + std::string(name));
}

}  // namespace lexspec
