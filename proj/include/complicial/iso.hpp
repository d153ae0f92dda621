#ifndef COMPLICIAL_ISO_HPP
#define COMPLICIAL_ISO_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "complicial/msset.hpp"

namespace complicial {

namespace detail {

/// Iterated isomorphism-invariant cell signatures: dimension and marking,
/// refined by the signatures at the base of each face.
inline std::vector<std::vector<int>> cell_signatures(
    const MarkedSimplicialSet& X, Dim t) {
  std::vector<std::vector<int>> sig(t + 1);
  for (Dim d = 0; d <= t; ++d)
    for (CellId c = 0; c < X.count(d); ++c)
      sig[d].push_back(d >= 1 && X.cell(d, c).marked ? 1 : 0);
  for (int round = 0; round < t + 2; ++round) {
    std::vector<std::vector<int>> next(t + 1);
    for (Dim d = 0; d <= t; ++d) {
      std::map<std::vector<int>, int> canon;
      std::vector<std::vector<int>> keys;
      for (CellId c = 0; c < X.count(d); ++c) {
        std::vector<int> key{sig[d][c]};
        if (d >= 1)
          for (const SimplexRef& f : X.cell(d, c).faces) {
            key.push_back(static_cast<int>(f.word.letters.size()));
            for (int l : f.word.letters) key.push_back(l);
            key.push_back(sig[f.base_dim][f.base]);
          }
        keys.push_back(std::move(key));
      }
      for (const auto& k : keys) canon.emplace(k, 0);
      int n = 0;
      for (auto& [k, v] : canon) v = n++;
      for (CellId c = 0; c < X.count(d); ++c)
        next[d].push_back(canon.at(keys[c]));
    }
    sig = std::move(next);
  }
  return sig;
}

}  // namespace detail

/// Searches for a dimension-, face- and marking-preserving bijection on
/// nondegenerate cells up to the common truncation. Deterministic: cells are
/// processed and candidates tried in index order.
inline std::optional<SimplicialMap> find_isomorphism(
    MssPtr X, MssPtr Y, bool respect_basepoints = false) {
  Dim t = std::min(X->truncation(), Y->truncation());
  for (Dim d = 0; d <= t; ++d)
    if (X->count(d) != Y->count(d)) return std::nullopt;

  auto sx = detail::cell_signatures(*X, t);
  auto sy = detail::cell_signatures(*Y, t);
  // signatures are computed per complex; align them by sorting multisets
  for (Dim d = 0; d <= t; ++d) {
    auto a = sx[d];
    auto b = sy[d];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::vector<CellId>> phi(t + 1);   // X cell -> Y cell
  std::vector<std::vector<char>> used(t + 1);    // Y side
  for (Dim d = 0; d <= t; ++d) {
    phi[d].assign(X->count(d), -1);
    used[d].assign(Y->count(d), 0);
  }

  // face-vector lookup on the Y side, per dimension
  std::vector<std::map<std::vector<SimplexRef>, std::vector<CellId>>> byfaces(
      t + 1);
  for (Dim d = 1; d <= t; ++d)
    for (CellId c = 0; c < Y->count(d); ++c)
      byfaces[d][Y->cell(d, c).faces].push_back(c);

  std::map<std::string, CellId> ybase;
  if (respect_basepoints) {
    for (const auto& [name, v] : X->basepoints()) {
      if (!Y->has_basepoint(name)) return std::nullopt;
      ybase[name] = Y->basepoint(name);
    }
    if (X->basepoints().size() != Y->basepoints().size()) return std::nullopt;
  }

  struct Item {
    Dim d;
    CellId c;
  };
  std::vector<Item> order;
  for (Dim d = 0; d <= t; ++d)
    for (CellId c = 0; c < X->count(d); ++c) order.push_back({d, c});

  auto candidates_for = [&](size_t pos) {
    auto [d, c] = order[pos];
    std::vector<CellId> candidates;
    if (d == 0) {
      for (CellId y = 0; y < Y->count(0); ++y)
        if (!used[0][y] && sy[0][y] == sx[0][c]) candidates.push_back(y);
      if (respect_basepoints) {
        CellId forced = -1;
        bool conflict = false;
        for (const auto& [name, v] : X->basepoints())
          if (v == c) {
            CellId y = ybase.at(name);
            if (forced >= 0 && forced != y) conflict = true;
            forced = y;
          }
        if (conflict)
          candidates.clear();
        else if (forced >= 0) {
          candidates.clear();
          if (!used[0][forced] && sy[0][forced] == sx[0][c])
            candidates.push_back(forced);
        }
      }
    } else {
      std::vector<SimplexRef> want;
      bool ok = true;
      for (const SimplexRef& f : X->cell(d, c).faces) {
        CellId img = phi[f.base_dim][f.base];
        if (img < 0) {
          ok = false;
          break;
        }
        want.push_back(SimplexRef{f.word, f.base_dim, img});
      }
      if (ok) {
        auto it = byfaces[d].find(want);
        if (it != byfaces[d].end())
          for (CellId y : it->second)
            if (!used[d][y] && sy[d][y] == sx[d][c] &&
                Y->cell(d, y).marked == X->cell(d, c).marked)
              candidates.push_back(y);
      }
    }
    return candidates;
  };

  // iterative backtracking: recursion depth would equal the cell count
  std::vector<std::vector<CellId>> cands(order.size());
  std::vector<size_t> cursor(order.size(), 0);
  size_t pos = 0;
  while (pos < order.size()) {
    auto [d, c] = order[pos];
    if (cursor[pos] == 0) cands[pos] = candidates_for(pos);
    if (cursor[pos] < cands[pos].size()) {
      CellId y = cands[pos][cursor[pos]++];
      phi[d][c] = y;
      used[d][y] = 1;
      ++pos;
      continue;
    }
    cands[pos].clear();
    cursor[pos] = 0;
    if (pos == 0) return std::nullopt;
    --pos;
    auto [pd, pc] = order[pos];
    used[pd][phi[pd][pc]] = 0;
    phi[pd][pc] = -1;
  }

  SimplicialMap m;
  m.source = (X->truncation() == t)
                 ? X
                 : std::make_shared<MarkedSimplicialSet>(truncate(*X, t));
  m.target = Y;
  m.assign.resize(t + 1);
  for (Dim d = 0; d <= t; ++d)
    for (CellId c = 0; c < X->count(d); ++c)
      m.assign[d].push_back(nondeg_ref(d, phi[d][c]));
  return m;
}

inline bool isomorphic(const MarkedSimplicialSet& X,
                       const MarkedSimplicialSet& Y,
                       bool respect_basepoints = false) {
  return find_isomorphism(std::make_shared<MarkedSimplicialSet>(X),
                          std::make_shared<MarkedSimplicialSet>(Y),
                          respect_basepoints)
      .has_value();
}

}  // namespace complicial

#endif
