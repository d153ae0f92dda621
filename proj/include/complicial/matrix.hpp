#ifndef COMPLICIAL_MATRIX_HPP
#define COMPLICIAL_MATRIX_HPP

#include <algorithm>
#include <map>
#include <memory>

#include "complicial/cat.hpp"
#include "complicial/msset.hpp"

namespace complicial {

/// An m-simplex of the nerve of a suspension, in matrix coordinates: a
/// functor [k] x [l]^op -> P with k + l + 1 = m. Entry (i, c) sits in row i
/// and column c; horizontal arrows decrease the column index, vertical
/// arrows increase the row index. rows == 0 encodes a degeneracy of the top
/// pole, cols == 0 one of the bottom pole.
struct GridSimplex {
  int rows = 0, cols = 0;
  std::vector<int> entry;  // rows * cols, index i * cols + c
  std::vector<int> hor;    // rows * (cols-1): (i,c+1) -> (i,c), index i*(cols-1)+c
  std::vector<int> ver;    // (rows-1) * cols: (i,c) -> (i+1,c), index i*cols+c

  int k() const { return rows - 1; }
  int l() const { return cols - 1; }
  int dim() const { return rows + cols - 1; }
  int at(int i, int c) const { return entry[i * cols + c]; }
  int h(int i, int c) const { return hor[i * (cols - 1) + c]; }
  int v(int i, int c) const { return ver[i * cols + c]; }

  std::vector<int> encode() const {
    std::vector<int> out{rows, cols};
    out.insert(out.end(), entry.begin(), entry.end());
    out.insert(out.end(), hor.begin(), hor.end());
    out.insert(out.end(), ver.begin(), ver.end());
    return out;
  }
  bool operator==(const GridSimplex&) const = default;
};

namespace detail {

inline bool grid_rows_coincide(const FinCategory& P, const GridSimplex& g,
                               int i) {
  for (int c = 0; c < g.cols; ++c) {
    if (g.at(i, c) != g.at(i + 1, c)) return false;
    if (g.v(i, c) != P.identity[g.at(i, c)]) return false;
  }
  return true;
}

inline bool grid_cols_coincide(const FinCategory& P, const GridSimplex& g,
                               int c) {
  // columns c and c+1 coincide: equal entries, identity horizontals
  for (int i = 0; i < g.rows; ++i) {
    if (g.at(i, c) != g.at(i, c + 1)) return false;
    if (g.h(i, c) != P.identity[g.at(i, c)]) return false;
  }
  return true;
}

/// Degenerate at simplex vertex position a?
inline bool grid_degenerate_at(const FinCategory& P, const GridSimplex& g,
                               int a) {
  int k = g.k();
  if (g.rows == 0 || g.cols == 0) return true;  // pole degeneracies
  if (a < k) return grid_rows_coincide(P, g, a);
  if (a == k) return false;  // vertices k, k+1 lie on different poles
  int c = a - k - 1;
  return grid_cols_coincide(P, g, c);
}

inline GridSimplex grid_remove_row(const FinCategory& P, const GridSimplex& g,
                                   int r) {
  GridSimplex out;
  out.rows = g.rows - 1;
  out.cols = g.cols;
  if (out.rows == 0) {
    return out;  // pure top-pole degeneracy
  }
  auto row_of = [&](int i) { return i < r ? i : i + 1; };
  for (int i = 0; i < out.rows; ++i)
    for (int c = 0; c < out.cols; ++c)
      out.entry.push_back(g.at(row_of(i), c));
  for (int i = 0; i < out.rows; ++i)
    for (int c = 0; c + 1 < out.cols; ++c)
      out.hor.push_back(g.h(row_of(i), c));
  for (int i = 0; i + 1 < out.rows; ++i)
    for (int c = 0; c < out.cols; ++c) {
      if (row_of(i) + 1 == row_of(i + 1))
        out.ver.push_back(g.v(row_of(i), c));
      else  // rows r-1 and r+1 become adjacent: compose across row r
        out.ver.push_back(P.compose(g.v(r - 1, c), g.v(r, c)));
    }
  return out;
}

inline GridSimplex grid_remove_col(const FinCategory& P, const GridSimplex& g,
                                   int rc) {
  GridSimplex out;
  out.rows = g.rows;
  out.cols = g.cols - 1;
  if (out.cols == 0) return out;  // pure bottom-pole degeneracy
  auto col_of = [&](int c) { return c < rc ? c : c + 1; };
  for (int i = 0; i < out.rows; ++i)
    for (int c = 0; c < out.cols; ++c)
      out.entry.push_back(g.at(i, col_of(c)));
  for (int i = 0; i < out.rows; ++i)
    for (int c = 0; c + 1 < out.cols; ++c) {
      if (col_of(c) + 1 == col_of(c + 1))
        out.hor.push_back(g.h(i, col_of(c)));
      else  // arrow across the removed column: first h(i, rc), then h(i, rc-1)
        out.hor.push_back(P.compose(g.h(i, rc), g.h(i, rc - 1)));
    }
  for (int i = 0; i + 1 < out.rows; ++i)
    for (int c = 0; c < out.cols; ++c) out.ver.push_back(g.v(i, col_of(c)));
  return out;
}

inline GridSimplex grid_face(const FinCategory& P, const GridSimplex& g,
                             int a) {
  int k = g.k();
  if (g.rows == 0 || g.cols == 0) {
    GridSimplex out = g;
    (g.rows == 0 ? out.cols : out.rows) -= 1;
    return out;
  }
  if (a <= k) return grid_remove_row(P, g, a);
  return grid_remove_col(P, g, a - k - 1);
}

inline GridSimplex grid_degenerate(const FinCategory& P, const GridSimplex& g,
                                   int a) {
  int k = g.k();
  GridSimplex out;
  if (g.rows == 0 || g.cols == 0) {
    out = g;
    (g.rows == 0 ? out.cols : out.rows) += 1;
    return out;
  }
  if (a <= k) {  // duplicate row a
    out.rows = g.rows + 1;
    out.cols = g.cols;
    auto row_of = [&](int i) { return i <= a ? i : i - 1; };
    for (int i = 0; i < out.rows; ++i)
      for (int c = 0; c < out.cols; ++c)
        out.entry.push_back(g.at(row_of(i), c));
    for (int i = 0; i < out.rows; ++i)
      for (int c = 0; c + 1 < out.cols; ++c)
        out.hor.push_back(g.h(row_of(i), c));
    for (int i = 0; i + 1 < out.rows; ++i)
      for (int c = 0; c < out.cols; ++c) {
        if (i == a)
          out.ver.push_back(P.identity[g.at(a, c)]);
        else
          out.ver.push_back(g.v(i <= a ? i : i - 1, c));
      }
    return out;
  }
  int dc = a - k - 1;  // duplicate column dc
  out.rows = g.rows;
  out.cols = g.cols + 1;
  auto col_of = [&](int c) { return c <= dc ? c : c - 1; };
  for (int i = 0; i < out.rows; ++i)
    for (int c = 0; c < out.cols; ++c)
      out.entry.push_back(g.at(i, col_of(c)));
  for (int i = 0; i < out.rows; ++i)
    for (int c = 0; c + 1 < out.cols; ++c) {
      if (c == dc)
        out.hor.push_back(P.identity[g.at(i, dc)]);
      else
        out.hor.push_back(g.h(i, c < dc ? c : c - 1));
    }
  for (int i = 0; i + 1 < out.rows; ++i)
    for (int c = 0; c < out.cols; ++c) out.ver.push_back(g.v(i, col_of(c)));
  return out;
}

inline std::vector<std::string> grid_validate(const FinCategory& P,
                                              const GridSimplex& g) {
  std::vector<std::string> bad;
  for (int i = 0; i < g.rows; ++i)
    for (int c = 0; c + 1 < g.cols; ++c) {
      const auto& m = P.mors[g.h(i, c)];
      if (m.src != g.at(i, c + 1) || m.tgt != g.at(i, c))
        bad.push_back("horizontal endpoints");
    }
  for (int i = 0; i + 1 < g.rows; ++i)
    for (int c = 0; c < g.cols; ++c) {
      const auto& m = P.mors[g.v(i, c)];
      if (m.src != g.at(i, c) || m.tgt != g.at(i + 1, c))
        bad.push_back("vertical endpoints");
    }
  for (int i = 0; i + 1 < g.rows; ++i)
    for (int c = 0; c + 1 < g.cols; ++c)
      if (P.compose(g.h(i, c), g.v(i, c)) !=
          P.compose(g.v(i, c + 1), g.h(i + 1, c)))
        bad.push_back("square does not commute");
  return bad;
}

}  // namespace detail

/// The nerve of the suspension of P in matrix coordinates.
struct MatrixModel {
  MssPtr complex;
  std::shared_ptr<const FinCategory> base;
  CellId bot = 0, top = 1;
  std::vector<std::vector<GridSimplex>> cells;  // per dim
  std::vector<std::map<std::vector<int>, CellId>> index;

  /// Normal form of an arbitrary grid as a reference into the complex.
  SimplexRef ref_of(GridSimplex g) const {
    DegeneracyWord word;
    for (;;) {
      int pos = -1;
      for (int a = g.dim() - 1; a >= 0; --a)
        if (detail::grid_degenerate_at(*base, g, a)) {
          pos = a;
          break;
        }
      if (pos < 0) break;
      word.letters.push_back(pos);
      g = detail::grid_face(*base, g, pos);
    }
    if (g.cols == 0) return SimplexRef{word, 0, bot};
    if (g.rows == 0) return SimplexRef{word, 0, top};
    return SimplexRef{word, g.dim(), index[g.dim()].at(g.encode())};
  }

  /// Materializes an arbitrary reference as a grid.
  GridSimplex grid_of(const SimplexRef& r) const {
    GridSimplex g;
    if (r.base_dim == 0 && r.base == bot) {
      g.rows = 1;
      g.cols = 0;
    } else if (r.base_dim == 0 && r.base == top) {
      g.rows = 0;
      g.cols = 1;
    } else {
      g = cells[r.base_dim][r.base];
    }
    for (auto it = r.word.letters.rbegin(); it != r.word.letters.rend(); ++it)
      g = detail::grid_degenerate(*base, g, *it);
    return g;
  }
};

inline MatrixModel matrix_model(std::shared_ptr<const FinCategory> P,
                                MarkingPolicy policy, Dim d_max) {
  MatrixModel M;
  M.base = P;
  M.cells.resize(d_max + 1);
  M.index.resize(d_max + 1);
  auto out = std::make_shared<MarkedSimplicialSet>(d_max);

  // dimension 0: the two poles
  {
    GridSimplex botg;
    botg.rows = 1;
    botg.cols = 0;
    GridSimplex topg;
    topg.rows = 0;
    topg.cols = 1;
    M.cells[0].push_back(botg);
    M.cells[0].push_back(topg);
    M.index[0][botg.encode()] = 0;
    M.index[0][topg.encode()] = 1;
    M.bot = out->add_vertex("bot");
    M.top = out->add_vertex("top");
    out->set_basepoint("bot", M.bot);
    out->set_basepoint("top", M.top);
  }

  for (Dim m = 1; m <= d_max; ++m) {
    std::vector<GridSimplex> found;
    for (int k = 0; k <= m - 1; ++k) {
      int l = m - 1 - k;
      GridSimplex g;
      g.rows = k + 1;
      g.cols = l + 1;
      g.entry.assign(g.rows * g.cols, -1);
      g.hor.assign(g.rows * (g.cols - 1), -1);
      g.ver.assign((g.rows - 1) * g.cols, -1);

      // fill row-major; when an entry is placed, pick the incoming arrows
      std::function<void(int)> place = [&](int pos) {
        if (pos == g.rows * g.cols) {
          bool nondeg = true;
          for (int a = 0; a < g.dim() && nondeg; ++a)
            if (detail::grid_degenerate_at(*P, g, a)) nondeg = false;
          if (nondeg) found.push_back(g);
          return;
        }
        int i = pos / g.cols, c = pos % g.cols;
        for (int obj = 0; obj < P->n_objects; ++obj) {
          g.entry[pos] = obj;
          // incoming horizontal: from (i, c+1)?? arrows go to smaller c:
          // chosen when the smaller-column entry exists; we fill c ascending
          // within a row, so pick the arrow (i,c) -> (i,c-1) now if c >= 1.
          std::vector<int> hcands{-1}, vcands{-1};
          if (c >= 1) {
            hcands.clear();
            for (size_t f = 0; f < P->mors.size(); ++f)
              if (P->mors[f].src == obj && P->mors[f].tgt == g.at(i, c - 1))
                hcands.push_back(static_cast<int>(f));
          }
          if (i >= 1) {
            vcands.clear();
            for (size_t f = 0; f < P->mors.size(); ++f)
              if (P->mors[f].src == g.at(i - 1, c) && P->mors[f].tgt == obj)
                vcands.push_back(static_cast<int>(f));
          }
          for (int hf : hcands) {
            if (c >= 1) g.hor[i * (g.cols - 1) + (c - 1)] = hf;
            for (int vf : vcands) {
              if (i >= 1) g.ver[(i - 1) * g.cols + c] = vf;
              // square at (i-1, c-1): needs h(i-1,c-1), v(i-1,c), h(i,c-1), v(i-1,c-1)
              bool ok = true;
              if (i >= 1 && c >= 1) {
                int path1 = P->compose(g.h(i - 1, c - 1), g.v(i - 1, c - 1));
                int path2 = P->compose(g.v(i - 1, c), g.h(i, c - 1));
                ok = path1 == path2;
              }
              if (ok) place(pos + 1);
              if (i >= 1) g.ver[(i - 1) * g.cols + c] = -1;
            }
            if (c >= 1) g.hor[i * (g.cols - 1) + (c - 1)] = -1;
          }
        }
        g.entry[pos] = -1;
      };
      place(0);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      return a.encode() < b.encode();
    });
    for (auto& g : found) {
      M.index[m][g.encode()] = static_cast<CellId>(M.cells[m].size());
      M.cells[m].push_back(g);
    }
  }

  // second pass: faces and marking
  for (Dim m = 1; m <= d_max; ++m) {
    for (const GridSimplex& g : M.cells[m]) {
      std::vector<SimplexRef> faces;
      for (int a = 0; a <= m; ++a)
        faces.push_back(M.ref_of(detail::grid_face(*P, g, a)));
      bool marked = false;
      switch (policy) {
        case MarkingPolicy::street:
          marked = false;
          break;
        case MarkingPolicy::roberts_street:
          // in matrix coordinates the nondegenerate 1- and 2-simplices carry
          // non-identity cells, so only dimensions >= 3 are marked
          marked = m >= 3;
          break;
        case MarkingPolicy::natural:
          if (m >= 3)
            marked = true;
          else if (m == 2)
            marked = P->has_inverse(g.rows == 2 ? g.v(0, 0) : g.h(0, 0));
          else
            marked = false;  // no 1-morphism across the poles is an equivalence
          break;
      }
      out->add_cell(m, std::move(faces), marked);
    }
  }
  M.complex = out;
  return M;
}

}  // namespace complicial

#endif
