#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include <random>

#include "complicial/generators.hpp"
#include "complicial/iso.hpp"
#include "complicial/msset.hpp"
#include "complicial/ops.hpp"

namespace testsupport {

using namespace complicial;

inline MssPtr share(MarkedSimplicialSet x) {
  return std::make_shared<MarkedSimplicialSet>(std::move(x));
}

inline MssPtr gen(const GeneratorShape& s, Dim t) {
  return share(make_generator(s, t));
}

/// Inclusion between two generator-style complexes whose cells carry vertex
/// labels: matches cells of `sub` to same-labelled cells of `big`.
inline SimplicialMap inclusion_by_labels(MssPtr sub, MssPtr big) {
  SimplicialMap m;
  m.source = sub;
  m.target = big;
  m.assign.resize(sub->truncation() + 1);
  for (Dim d = 0; d <= sub->truncation(); ++d)
    for (CellId c = 0; c < sub->count(d); ++c) {
      bool found = false;
      for (CellId b = 0; b < big->count(d); ++b)
        if (big->cell(d, b).label == sub->cell(d, c).label) {
          m.assign[d].push_back(nondeg_ref(d, b));
          found = true;
          break;
        }
      if (!found) throw std::logic_error("inclusion_by_labels: no match");
    }
  return m;
}

/// Deterministic small fuzz complexes: random spanned subcomplexes of a
/// standard simplex with random markings.
inline MssPtr random_complex(std::mt19937& rng, int max_top_dim = 3) {
  std::uniform_int_distribution<int> dim_pick(1, max_top_dim);
  int m = dim_pick(rng);
  auto full = gen(GeneratorShape::standard(m), m);
  std::vector<std::pair<Dim, CellId>> seeds;
  std::uniform_int_distribution<int> coin(0, 3);
  for (Dim d = 0; d <= m; ++d)
    for (CellId c = 0; c < full->count(d); ++c)
      if (coin(rng) != 0) seeds.push_back({d, c});
  if (seeds.empty()) seeds.push_back({0, 0});
  auto [sub, inc] = spanned_subcomplex(full, seeds);
  auto mutable_sub = std::make_shared<MarkedSimplicialSet>(*sub);
  std::uniform_int_distribution<int> mark(0, 1);
  for (Dim d = 1; d <= mutable_sub->truncation(); ++d)
    for (CellId c = 0; c < mutable_sub->count(d); ++c)
      mutable_sub->cell_mut(d, c).marked = mark(rng) == 1;
  return mutable_sub;
}

}  // namespace testsupport

#endif
