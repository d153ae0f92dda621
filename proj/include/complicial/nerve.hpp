#ifndef COMPLICIAL_NERVE_HPP
#define COMPLICIAL_NERVE_HPP

#include <algorithm>
#include <map>
#include <memory>

#include "complicial/cat2_ops.hpp"
#include "complicial/iso.hpp"
#include "complicial/ops.hpp"

namespace complicial {

/// An m-simplex of the nerve of a 2-category: vertices, all pairwise edges,
/// and 2-cell fillers for all triples. For indices with repetitions the data
/// is forced (identity 1-morphisms and identity 2-cells), so only strictly
/// increasing index tuples are stored.
struct DuskinSimplex {
  int m = 0;
  std::vector<int> vx;    // m+1 objects
  std::vector<int> edge;  // e(i,j) for i < j, lex order
  std::vector<int> tri;   // t(i,j,k) for i < j < k, lex order

  static int eidx(int m, int i, int j) {
    // position of (i,j), i<j, in lex order
    int pos = 0;
    for (int a = 0; a < i; ++a) pos += m - a;
    return pos + (j - i - 1);
  }
  static int tidx(int m, int i, int j, int k) {
    int pos = 0;
    for (int a = 0; a < i; ++a) pos += (m - a) * (m - a - 1) / 2;
    for (int b = i + 1; b < j; ++b) pos += m - b;
    return pos + (k - j - 1);
  }

  std::vector<int> encode() const {
    std::vector<int> out;
    out.push_back(m);
    out.insert(out.end(), vx.begin(), vx.end());
    out.insert(out.end(), edge.begin(), edge.end());
    out.insert(out.end(), tri.begin(), tri.end());
    return out;
  }
  bool operator==(const DuskinSimplex&) const = default;
};

namespace detail {

inline int duskin_edge(const Fin2Category& D, const DuskinSimplex& s, int i,
                       int j) {
  if (i == j) return D.id1[s.vx[i]];
  return s.edge[DuskinSimplex::eidx(s.m, i, j)];
}

inline int duskin_tri(const Fin2Category& D, const DuskinSimplex& s, int i,
                      int j, int k) {
  if (i < j && j < k) return s.tri[DuskinSimplex::tidx(s.m, i, j, k)];
  // repeated indices force the identity 2-cell on a_{ik}
  int a = duskin_edge(D, s, i, k);
  return D.hom(s.vx[i], s.vx[k]).identity[a];
}

/// Reindexes a simplex along a vertex map [p] -> [m] (monotone), giving the
/// corresponding p-simplex (used for faces and degeneracies alike).
inline DuskinSimplex duskin_reindex(const Fin2Category& D,
                                    const DuskinSimplex& s,
                                    const std::vector<int>& v) {
  DuskinSimplex out;
  out.m = static_cast<int>(v.size()) - 1;
  for (int x : v) out.vx.push_back(s.vx[x]);
  for (int i = 0; i <= out.m; ++i)
    for (int j = i + 1; j <= out.m; ++j)
      out.edge.push_back(duskin_edge(D, s, v[i], v[j]));
  for (int i = 0; i <= out.m; ++i)
    for (int j = i + 1; j <= out.m; ++j)
      for (int k = j + 1; k <= out.m; ++k)
        out.tri.push_back(duskin_tri(D, s, v[i], v[j], v[k]));
  return out;
}

inline DuskinSimplex duskin_face(const Fin2Category& D, const DuskinSimplex& s,
                                 int a) {
  std::vector<int> v;
  for (int x = 0; x <= s.m; ++x)
    if (x != a) v.push_back(x);
  return duskin_reindex(D, s, v);
}

inline bool duskin_degenerate_at(const Fin2Category& D, const DuskinSimplex& s,
                                 int i) {
  if (s.vx[i] != s.vx[i + 1]) return false;
  if (duskin_edge(D, s, i, i + 1) != D.id1[s.vx[i]]) return false;
  // the simplex must equal the i-th degeneracy of its own i-th face;
  // comparing the two collapsing faces instead would miss the fillers
  // indexed by both i and i+1
  DuskinSimplex face = duskin_face(D, s, i);
  std::vector<int> dup;
  for (int x = 0; x <= s.m; ++x) dup.push_back(x <= i ? x : x - 1);
  return duskin_reindex(D, face, dup) == s;
}

/// Extracts the EZ normal form of an arbitrary simplex: the degeneracy word
/// (largest letters first) and the nondegenerate core.
inline std::pair<DegeneracyWord, DuskinSimplex> duskin_normalize(
    const Fin2Category& D, DuskinSimplex s) {
  DegeneracyWord word;
  for (;;) {
    int pos = -1;
    for (int i = s.m - 1; i >= 0; --i)
      if (duskin_degenerate_at(D, s, i)) {
        pos = i;
        break;
      }
    if (pos < 0) break;
    word.letters.push_back(pos);
    s = duskin_face(D, s, pos);
  }
  return {word, std::move(s)};
}

}  // namespace detail

/// Nerve of a finite 2-category with one of the three markings, truncated at
/// d_max. Cells are numbered per dimension in lexicographic encoding order.
struct DuskinNerve {
  MssPtr complex;
  Fin2Ptr category;
  MarkingPolicy policy = MarkingPolicy::roberts_street;
  std::vector<std::vector<DuskinSimplex>> cells;      // per dim
  std::vector<std::map<std::vector<int>, CellId>> index;

  SimplexRef ref_of(const DuskinSimplex& s) const {
    auto [word, core] = detail::duskin_normalize(*category, s);
    return SimplexRef{word, core.m, index[core.m].at(core.encode())};
  }
};

inline DuskinNerve duskin_nerve(Fin2Ptr D, MarkingPolicy policy, Dim d_max) {
  {
    auto bad = D->validate();
    if (!bad.empty())
      throw std::invalid_argument("duskin_nerve: invalid 2-category: " +
                                  bad.front());
  }
  DuskinNerve N;
  N.category = D;
  N.policy = policy;
  N.cells.resize(d_max + 1);
  N.index.resize(d_max + 1);
  CellClassification cls;
  if (policy == MarkingPolicy::natural) cls = classify_cells(*D);

  // enumerate all m-simplices (degenerate included), keep the nondegenerate
  for (Dim m = 0; m <= d_max; ++m) {
    std::vector<DuskinSimplex> found;
    DuskinSimplex s;
    s.m = m;
    s.vx.assign(m + 1, -1);
    s.edge.assign(m * (m + 1) / 2, -1);
    s.tri.assign((m + 1) * m * (m - 1) / 6, -1);

    // quadruples grouped by their last triangle in assignment order
    struct Quad {
      int i, j, k, l;
    };
    std::vector<std::vector<Quad>> quads_at(s.tri.size());
    for (int i = 0; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k)
          for (int q = k + 1; q <= m; ++q) {
            int last = std::max({DuskinSimplex::tidx(m, i, j, k),
                                 DuskinSimplex::tidx(m, i, j, q),
                                 DuskinSimplex::tidx(m, i, k, q),
                                 DuskinSimplex::tidx(m, j, k, q)});
            quads_at[last].push_back({i, j, k, q});
          }

    auto cocycle_holds = [&](int i, int j, int k, int q) {
      const auto& homIQ = D->hom(s.vx[i], s.vx[q]);
      int aijk = detail::duskin_tri(*D, s, i, j, k);
      int aikq = detail::duskin_tri(*D, s, i, k, q);
      int ajkq = detail::duskin_tri(*D, s, j, k, q);
      int aijq = detail::duskin_tri(*D, s, i, j, q);
      int ekq = detail::duskin_edge(*D, s, k, q);
      int eij = detail::duskin_edge(*D, s, i, j);
      int lhs = homIQ.comp[aikq][D->hcomp2(
          s.vx[i], s.vx[k], s.vx[q], aijk,
          D->hom(s.vx[k], s.vx[q]).identity[ekq])];
      int rhs = homIQ.comp[aijq][D->hcomp2(
          s.vx[i], s.vx[j], s.vx[q],
          D->hom(s.vx[i], s.vx[j]).identity[eij], ajkq)];
      return lhs == rhs;
    };

    // triangle assignment in lex order with cocycle checks
    std::function<void(int)> place_tri = [&](int t) {
      if (t == static_cast<int>(s.tri.size())) {
        found.push_back(s);
        return;
      }
      // recover (i, j, k) for position t
      int i = 0, j = 0, k = 0, pos = t;
      for (i = 0; i <= m; ++i) {
        int block = (m - i) * (m - i - 1) / 2;
        if (pos < block) break;
        pos -= block;
      }
      for (j = i + 1; j <= m; ++j) {
        if (pos < m - j) break;
        pos -= m - j;
      }
      k = j + 1 + pos;
      const auto& homIK = D->hom(s.vx[i], s.vx[k]);
      int src = detail::duskin_edge(*D, s, i, k);
      int tgt = D->hcomp1(s.vx[i], s.vx[j], s.vx[k],
                          detail::duskin_edge(*D, s, i, j),
                          detail::duskin_edge(*D, s, j, k));
      for (size_t mor = 0; mor < homIK.mors.size(); ++mor) {
        if (homIK.mors[mor].src != src || homIK.mors[mor].tgt != tgt) continue;
        s.tri[t] = static_cast<int>(mor);
        bool ok = true;
        for (const auto& qd : quads_at[t])
          if (!cocycle_holds(qd.i, qd.j, qd.k, qd.l)) {
            ok = false;
            break;
          }
        if (ok) place_tri(t + 1);
      }
      s.tri[t] = -1;
    };

    // edge assignment: for each target vertex j ascending, sources i
    // descending, so that triangles (i, i', j) complete as soon as possible
    std::vector<std::pair<int, int>> edge_order;
    for (int j = 1; j <= m; ++j)
      for (int i = j - 1; i >= 0; --i) edge_order.push_back({i, j});

    std::function<void(size_t)> place_edge = [&](size_t e) {
      if (e == edge_order.size()) {
        place_tri(0);
        return;
      }
      auto [i, j] = edge_order[e];
      const auto& homIJ = D->hom(s.vx[i], s.vx[j]);
      for (int f = 0; f < homIJ.n_objects; ++f) {
        s.edge[DuskinSimplex::eidx(m, i, j)] = f;
        bool ok = true;
        // a triangle (i, i', j) is complete; its filler hom must be inhabited
        for (int ip = i + 1; ip < j && ok; ++ip) {
          int src = detail::duskin_edge(*D, s, i, j);
          int tgt = D->hcomp1(s.vx[i], s.vx[ip], s.vx[j],
                              detail::duskin_edge(*D, s, i, ip),
                              detail::duskin_edge(*D, s, ip, j));
          bool any = false;
          for (const auto& mor : D->hom(s.vx[i], s.vx[j]).mors)
            if (mor.src == src && mor.tgt == tgt) {
              any = true;
              break;
            }
          if (!any) ok = false;
        }
        if (ok) place_edge(e + 1);
      }
      s.edge[DuskinSimplex::eidx(m, i, j)] = -1;
    };

    std::function<void(int)> place_vx = [&](int v) {
      if (v == m + 1) {
        place_edge(0);
        return;
      }
      for (int x = 0; x < D->n; ++x) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
          if (D->hom(s.vx[u], x).n_objects == 0) ok = false;
        if (!ok) continue;
        s.vx[v] = x;
        place_vx(v + 1);
        s.vx[v] = -1;
      }
    };
    place_vx(0);

    for (auto& cand : found) {
      bool nondeg = true;
      for (int i = 0; i < m && nondeg; ++i)
        if (detail::duskin_degenerate_at(*D, cand, i)) nondeg = false;
      if (!nondeg) continue;
      N.index[m][cand.encode()] = static_cast<CellId>(N.cells[m].size());
      N.cells[m].push_back(cand);
    }
  }

  auto out = std::make_shared<MarkedSimplicialSet>(d_max);
  for (Dim m = 0; m <= d_max; ++m) {
    for (CellId c = 0; c < static_cast<CellId>(N.cells[m].size()); ++c) {
      const DuskinSimplex& s = N.cells[m][c];
      if (m == 0) {
        out->add_vertex(D->obj_labels.empty() ? std::to_string(s.vx[0])
                                              : D->obj_labels[s.vx[0]]);
        continue;
      }
      std::vector<SimplexRef> faces;
      for (int a = 0; a <= m; ++a) {
        auto [word, core] = detail::duskin_normalize(
            *D, detail::duskin_face(*D, s, a));
        faces.push_back(
            SimplexRef{word, core.m, N.index[core.m].at(core.encode())});
      }
      bool marked = false;
      switch (policy) {
        case MarkingPolicy::street:
          marked = false;
          break;
        case MarkingPolicy::roberts_street:
          if (m >= 3)
            marked = true;
          else if (m == 2)
            marked = D->hom(s.vx[0], s.vx[2]).is_identity(s.tri[0]);
          else
            marked = false;  // an identity edge would be degenerate
          break;
        case MarkingPolicy::natural:
          if (m >= 3)
            marked = true;
          else if (m == 2)
            marked = cls.invertible2[s.vx[0]][s.vx[2]][s.tri[0]];
          else
            marked = cls.equivalence1[s.vx[0]][s.vx[1]][s.edge[0]];
          break;
      }
      out->add_cell(m, std::move(faces), marked);
    }
  }
  N.complex = out;
  return N;
}

}  // namespace complicial

#endif
