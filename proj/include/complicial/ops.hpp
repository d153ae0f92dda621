#ifndef COMPLICIAL_OPS_HPP
#define COMPLICIAL_OPS_HPP

#include <functional>
#include <map>
#include <tuple>
#include <utility>

#include "complicial/msset.hpp"

namespace complicial {

namespace detail {

inline DegeneracyWord shift_word(const DegeneracyWord& w, int by) {
  DegeneracyWord out = w;
  for (int& l : out.letters) l += by;
  return out;
}

}  // namespace detail

/// Join X * Y. Simplices are pairs (sigma, sigma') with dim sigma +
/// dim sigma' + 1 = m, either side possibly the empty simplex; the
/// nondegenerate ones are exactly the pairs of nondegenerate simplices.
/// A pair is marked iff either coordinate is.
inline MarkedSimplicialSet join(const MarkedSimplicialSet& X,
                                const MarkedSimplicialSet& Y) {
  if (X.empty() && Y.empty()) return MarkedSimplicialSet(0);
  if (X.empty()) return Y;
  if (Y.empty()) return X;
  Dim t = std::min(X.truncation(), Y.truncation()) + 1;
  MarkedSimplicialSet out(t);

  // A cell is (xdim, xid, ydim, yid): the X part spans the initial vertices,
  // the Y part the rest; (-1, -1) marks an absent side.
  using Key = std::tuple<int, CellId, int, CellId>;
  std::map<Key, CellId> idx;
  auto key = [](int kd, CellId x, int ld, CellId y) {
    return std::make_tuple(kd, x, ld, y);
  };

  for (Dim m = 0; m <= t; ++m) {
    std::vector<Key> cells;
    if (m <= X.truncation())
      for (CellId x = 0; x < X.count(m); ++x)
        cells.push_back(key(m, x, -1, -1));
    for (int k = m - 1; k >= 0; --k) {
      int l = m - 1 - k;
      if (k > X.truncation() || l > Y.truncation()) continue;
      for (CellId x = 0; x < X.count(k); ++x)
        for (CellId y = 0; y < Y.count(l); ++y)
          cells.push_back(key(k, x, l, y));
    }
    if (m <= Y.truncation())
      for (CellId y = 0; y < Y.count(m); ++y)
        cells.push_back(key(-1, -1, m, y));

    for (const auto& c : cells) {
      auto [k, x, l_part, y] = c;
      (void)l_part;
      if (m == 0) {
        const auto& lbl =
            (k >= 0) ? X.cell(0, x).label : Y.cell(0, y).label;
        idx[c] = out.add_vertex(lbl);
        continue;
      }
      std::vector<SimplexRef> faces;
      bool marked = false;
      std::string label;
      if (y < 0) {  // pure X cell
        const auto& cx = X.cell(m, x);
        marked = cx.marked;
        label = cx.label;
        for (int a = 0; a <= m; ++a) {
          const SimplexRef& f = cx.faces[a];
          faces.push_back(SimplexRef{
              f.word, f.dim(), idx.at(key(f.base_dim, f.base, -1, -1))});
        }
      } else if (k < 0) {  // pure Y cell
        const auto& cy = Y.cell(m, y);
        marked = cy.marked;
        label = cy.label;
        for (int a = 0; a <= m; ++a) {
          const SimplexRef& f = cy.faces[a];
          faces.push_back(SimplexRef{
              f.word, f.dim(), idx.at(key(-1, -1, f.base_dim, f.base))});
        }
      } else {
        int l = m - 1 - k;
        marked = (k >= 1 && X.cell(k, x).marked) ||
                 (l >= 1 && Y.cell(l, y).marked);
        label = X.cell(k, x).label + "*" + Y.cell(l, y).label;
        for (int a = 0; a <= m; ++a) {
          if (a <= k) {
            if (k == 0) {
              faces.push_back(nondeg_ref(l, idx.at(key(-1, -1, l, y))));
            } else {
              SimplexRef f = X.face(nondeg_ref(k, x), a);
              CellId base = idx.at(key(f.base_dim, f.base, l, y));
              faces.push_back(SimplexRef{f.word, f.base_dim + 1 + l, base});
            }
          } else {
            if (l == 0) {
              faces.push_back(nondeg_ref(k, idx.at(key(k, x, -1, -1))));
            } else {
              SimplexRef f = Y.face(nondeg_ref(l, y), a - k - 1);
              CellId base = idx.at(key(k, x, f.base_dim, f.base));
              faces.push_back(SimplexRef{detail::shift_word(f.word, k + 1),
                                         k + 1 + f.base_dim, base});
            }
          }
        }
      }
      idx[c] = out.add_cell(m, std::move(faces), marked, std::move(label));
    }
  }
  return out;
}

/// Suspension: two poles and, in dimension m > 0, one nondegenerate cell per
/// nondegenerate (m-1)-cell of X, marked iff it was marked in X. Records
/// basepoints "bot" and "top".
inline MarkedSimplicialSet suspend(const MarkedSimplicialSet& X) {
  MarkedSimplicialSet out(X.truncation() + 1);
  CellId bot = out.add_vertex("bot");
  CellId top = out.add_vertex("top");
  out.set_basepoint("bot", bot);
  out.set_basepoint("top", top);
  // suspended cell (q+1, i) <-> X cell (q, i)
  for (Dim q = 0; q <= X.truncation(); ++q) {
    for (CellId i = 0; i < X.count(q); ++i) {
      const auto& c = X.cell(q, i);
      std::vector<SimplexRef> faces;
      if (q == 0) {
        faces.push_back(nondeg_ref(0, top));
        faces.push_back(nondeg_ref(0, bot));
      } else {
        for (int a = 0; a <= q; ++a) {
          const SimplexRef& f = c.faces[a];
          faces.push_back(SimplexRef{f.word, f.base_dim + 1, f.base});
        }
        faces.push_back(point_degeneracy(bot, q));
      }
      out.add_cell(q + 1, std::move(faces), q >= 1 && c.marked,
                   "S(" + c.label + ")");
    }
  }
  return out;
}

/// Suspension applied to a map: poles to poles, suspended cells to suspended
/// images.
inline SimplicialMap suspend_map(const SimplicialMap& f, MssPtr susp_source,
                                 MssPtr susp_target) {
  SimplicialMap out;
  out.source = std::move(susp_source);
  out.target = std::move(susp_target);
  out.assign.resize(out.source->truncation() + 1);
  out.assign[0] = {nondeg_ref(0, out.target->basepoint("bot")),
                   nondeg_ref(0, out.target->basepoint("top"))};
  for (Dim m = 1; m <= out.source->truncation(); ++m)
    for (CellId c = 0; c < out.source->count(m); ++c) {
      const SimplexRef& img = f.at(m - 1, c);
      out.assign[m].push_back(
          SimplexRef{img.word, img.base_dim + 1, img.base});
    }
  return out;
}

/// Product-style models share cell bookkeeping: each nondegenerate m-cell is
/// a pair of m-dimensional references with disjoint degeneracy supports.
struct PairModel {
  MssPtr complex;
  MssPtr left, right;
  // per dim, coordinates of each cell (parallel to complex cells)
  std::vector<std::vector<std::pair<SimplexRef, SimplexRef>>> coords;
  std::vector<std::map<std::pair<SimplexRef, SimplexRef>, CellId>> index;

  CellId cell_of(const std::pair<SimplexRef, SimplexRef>& p, Dim d) const {
    return index[d].at(p);
  }

  /// Normal form of an arbitrary coordinate pair of equal dimension: extracts
  /// the common degeneracy letters (largest first) and resolves the base cell.
  SimplexRef normalize(SimplexRef a, SimplexRef b) const {
    DegeneracyWord w;
    for (;;) {
      int common = -1;
      for (int la : a.word.letters)
        if (b.word.contains(la)) common = std::max(common, la);
      if (common < 0) break;
      w.letters.push_back(common);
      a = left->face(a, common);
      b = right->face(b, common);
    }
    Dim d = a.dim();
    return SimplexRef{w, d, index[d].at({a, b})};
  }

  SimplicialMap projection(bool first) const {
    SimplicialMap m;
    m.source = complex;
    m.target = first ? left : right;
    m.assign.resize(complex->truncation() + 1);
    for (Dim d = 0; d <= complex->truncation(); ++d)
      for (const auto& pr : coords[d])
        m.assign[d].push_back(first ? pr.first : pr.second);
    return m;
  }
};

/// Builds the cells of X x Y (or a regular subcomplex of it) whose vertexwise
/// pairs satisfy `keep`. The predicate must be closed under faces, which holds
/// for the vertex conditions used here.
inline PairModel product_filtered(
    MssPtr X, MssPtr Y,
    const std::function<bool(const MarkedSimplicialSet&, const SimplexRef&,
                             const MarkedSimplicialSet&, const SimplexRef&)>&
        keep) {
  Dim t = std::min(X->truncation(), Y->truncation());
  PairModel model;
  model.left = X;
  model.right = Y;
  model.coords.resize(t + 1);
  model.index.resize(t + 1);
  auto out = std::make_shared<MarkedSimplicialSet>(t);

  for (Dim m = 0; m <= t; ++m) {
    std::vector<SimplexRef> xs = X->refs_of_dim(m);
    std::vector<SimplexRef> ys = Y->refs_of_dim(m);
    for (const auto& rx : xs) {
      for (const auto& ry : ys) {
        bool disjoint = true;
        for (int l : rx.word.letters)
          if (ry.word.contains(l)) {
            disjoint = false;
            break;
          }
        if (!disjoint) continue;
        if (keep && !keep(*X, rx, *Y, ry)) continue;
        if (m == 0) {
          CellId id = out->add_vertex(X->cell(0, rx.base).label + "," +
                                      Y->cell(0, ry.base).label);
          model.index[0][{rx, ry}] = id;
          model.coords[0].push_back({rx, ry});
          continue;
        }
        std::vector<SimplexRef> faces;
        for (int a = 0; a <= m; ++a) {
          SimplexRef fa = X->face(rx, a);
          SimplexRef fb = Y->face(ry, a);
          faces.push_back(model.normalize(fa, fb));
        }
        bool marked = X->ref_marked(rx) && Y->ref_marked(ry);
        CellId id = out->add_cell(m, std::move(faces), marked);
        model.index[m][{rx, ry}] = id;
        model.coords[m].push_back({rx, ry});
      }
    }
  }
  model.complex = out;
  return model;
}

inline PairModel product_model(MssPtr X, MssPtr Y) {
  return product_filtered(std::move(X), std::move(Y), nullptr);
}

inline MarkedSimplicialSet product(const MarkedSimplicialSet& X,
                                   const MarkedSimplicialSet& Y) {
  auto px = std::make_shared<MarkedSimplicialSet>(X);
  auto py = std::make_shared<MarkedSimplicialSet>(Y);
  return *product_model(px, py).complex;
}

struct PushoutResult {
  MssPtr complex;
  SimplicialMap from_x;  // leg X -> pushout
  SimplicialMap from_y;  // leg Y -> pushout
};

/// Pushout of X <-f- A -g-> Y along a monomorphism f. Cells are Y's cells
/// followed by the X cells outside the image of f; a cell is marked iff some
/// representative is marked.
inline PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source == g.source || *f.source == *g.source))
    throw std::invalid_argument("pushout: legs have different sources");
  if (!f.mono())
    throw std::invalid_argument("pushout: first leg must be a monomorphism");
  const MarkedSimplicialSet& A = *f.source;
  const MarkedSimplicialSet& X = *f.target;
  const MarkedSimplicialSet& Y = *g.target;
  Dim t = std::min(X.truncation(), Y.truncation());
  auto out = std::make_shared<MarkedSimplicialSet>(t);

  // preimage of X cells under f
  std::vector<std::map<CellId, CellId>> pre(X.truncation() + 1);
  for (Dim d = 0; d <= A.truncation(); ++d)
    for (CellId a = 0; a < A.count(d); ++a) {
      const SimplexRef& r = f.at(d, a);
      pre[r.base_dim][r.base] = a;
    }

  std::vector<std::vector<SimplexRef>> ymap(t + 1), xmap(t + 1);
  for (Dim d = 0; d <= t; ++d) {
    // Y cells keep their identity
    for (CellId y = 0; y < Y.count(d); ++y) {
      const auto& c = Y.cell(d, y);
      bool marked = d >= 1 && c.marked;
      CellId id;
      if (d == 0)
        id = out->add_vertex(c.label);
      else
        id = out->add_cell(d, c.faces, marked, c.label);
      ymap[d].push_back(nondeg_ref(d, id));
    }
    // X cells outside the image
    xmap[d].resize(X.count(d));
    for (CellId x = 0; x < X.count(d); ++x) {
      auto it = pre[d].find(x);
      if (it != pre[d].end()) {
        const SimplexRef& gy = g.at(d, it->second);
        xmap[d][x] = SimplexRef{gy.word, gy.base_dim,
                                ymap[gy.base_dim][gy.base].base};
        continue;
      }
      const auto& c = X.cell(d, x);
      if (d == 0) {
        CellId id = out->add_vertex(c.label);
        xmap[d][x] = nondeg_ref(0, id);
        continue;
      }
      std::vector<SimplexRef> faces;
      for (const SimplexRef& fr : c.faces) {
        const SimplexRef& repl = xmap[fr.base_dim][fr.base];
        faces.push_back(apply_word(fr.word, repl));
      }
      CellId id = out->add_cell(d, std::move(faces), c.marked, c.label);
      xmap[d][x] = nondeg_ref(d, id);
    }
  }

  // marks inherited through the identification: a marked X cell f(a) marks
  // the class of g(a) when that class is a nondegenerate Y cell
  for (Dim d = 1; d <= std::min(A.truncation(), t); ++d)
    for (CellId a = 0; a < A.count(d); ++a) {
      const SimplexRef& fx = f.at(d, a);
      const SimplexRef& gy = g.at(d, a);
      if (fx.base_dim <= t && X.cell(fx.base_dim, fx.base).marked &&
          !gy.degenerate())
        out->cell_mut(d, ymap[d][gy.base].base).marked = true;
    }

  for (const auto& [name, v] : A.basepoints()) {
    const SimplexRef& gy = g.at(0, v);
    out->set_basepoint(name, ymap[0][gy.base].base);
  }
  for (const auto& [name, v] : Y.basepoints())
    out->set_basepoint(name, ymap[0][v].base);
  for (const auto& [name, v] : X.basepoints())
    out->set_basepoint(name, xmap[0][v].base);

  PushoutResult res;
  res.complex = out;
  res.from_y.source =
      (Y.truncation() == t) ? g.target
                            : std::make_shared<MarkedSimplicialSet>(truncate(Y, t));
  res.from_y.target = out;
  res.from_y.assign = std::move(ymap);
  res.from_x.source =
      (X.truncation() == t) ? f.target
                            : std::make_shared<MarkedSimplicialSet>(truncate(X, t));
  res.from_x.target = out;
  res.from_x.assign = std::move(xmap);
  return res;
}

/// Wedge of pointed simplicial sets: glues the 0-simplex x of X to y of Y.
/// The glue point is recorded as basepoint "wedge".
inline PushoutResult wedge_ss(MssPtr X, CellId x, MssPtr Y, CellId y) {
  if (x < 0 || x >= X->count(0))
    throw std::invalid_argument("wedge_ss: missing 0-simplex in left operand");
  if (y < 0 || y >= Y->count(0))
    throw std::invalid_argument("wedge_ss: missing 0-simplex in right operand");
  auto pt = std::make_shared<MarkedSimplicialSet>(0);
  pt->add_vertex("pt");
  pt->set_basepoint("wedge", 0);
  SimplicialMap f{pt, X, {{nondeg_ref(0, x)}}};
  SimplicialMap g{pt, Y, {{nondeg_ref(0, y)}}};
  return pushout(f, g);
}

/// Smallest subcomplex of X containing the seed cells, with its inclusion.
inline std::pair<MssPtr, SimplicialMap> spanned_subcomplex(
    MssPtr X, const std::vector<std::pair<Dim, CellId>>& seeds) {
  Dim t = X->truncation();
  std::vector<std::vector<char>> in(t + 1);
  for (Dim d = 0; d <= t; ++d) in[d].assign(X->count(d), 0);
  std::vector<std::pair<Dim, CellId>> stack(seeds);
  while (!stack.empty()) {
    auto [d, c] = stack.back();
    stack.pop_back();
    if (in[d][c]) continue;
    in[d][c] = 1;
    if (d >= 1)
      for (const SimplexRef& fr : X->cell(d, c).faces)
        stack.push_back({fr.base_dim, fr.base});
  }
  auto sub = std::make_shared<MarkedSimplicialSet>(t);
  std::vector<std::vector<CellId>> newid(t + 1);
  SimplicialMap inc;
  inc.source = sub;
  inc.target = X;
  inc.assign.resize(t + 1);
  for (Dim d = 0; d <= t; ++d) {
    newid[d].assign(X->count(d), -1);
    for (CellId c = 0; c < X->count(d); ++c) {
      if (!in[d][c]) continue;
      const auto& cell = X->cell(d, c);
      if (d == 0) {
        newid[d][c] = sub->add_vertex(cell.label);
      } else {
        std::vector<SimplexRef> faces;
        for (const SimplexRef& fr : cell.faces)
          faces.push_back(
              SimplexRef{fr.word, fr.base_dim, newid[fr.base_dim][fr.base]});
        newid[d][c] = sub->add_cell(d, std::move(faces), cell.marked, cell.label);
      }
      inc.assign[d].push_back(nondeg_ref(d, c));
    }
  }
  for (const auto& [name, v] : X->basepoints())
    if (newid[0][v] >= 0) sub->set_basepoint(name, newid[0][v]);
  return {sub, inc};
}

}  // namespace complicial

#endif
