#ifndef COMPLICIAL_CAT2_HPP
#define COMPLICIAL_CAT2_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>

#include "complicial/cat.hpp"

namespace complicial {

/// Finite strict 2-category. hom(a, b) is a FinCategory whose objects are
/// the 1-morphisms a -> b and whose morphisms are the 2-morphisms, composed
/// vertically. Horizontal composition is diagrammatic: hcomp1(a,b,c,f,g) is
/// "f: a->b then g: b->c".
struct Fin2Category {
  int n = 0;
  std::vector<std::string> obj_labels;
  std::vector<FinCategory> homs;        // n * n, index a * n + b
  std::vector<int> id1;                 // identity 1-morphism per object
  std::vector<std::vector<int>> h1;     // (a*n+b)*n+c -> [f * |hom(b,c)| + g]
  std::vector<std::vector<int>> h2;     // same shape on 2-morphisms

  const FinCategory& hom(int a, int b) const { return homs[a * n + b]; }
  FinCategory& hom_mut(int a, int b) { return homs[a * n + b]; }

  int hcomp1(int a, int b, int c, int f, int g) const {
    return h1[(a * n + b) * n + c][f * hom(b, c).n_objects + g];
  }
  int hcomp2(int a, int b, int c, int al, int be) const {
    return h2[(a * n + b) * n + c][al * hom(b, c).mors.size() + be];
  }

  /// Identity 2-cell on a 1-morphism.
  int id2(int a, int b, int f) const { return hom(a, b).identity[f]; }

  std::vector<std::string> validate() const;
};

using Fin2Ptr = std::shared_ptr<const Fin2Category>;

/// Fills the horizontal composition tables from callbacks.
inline void fill_hcomp(
    Fin2Category& D,
    const std::function<int(int, int, int, int, int)>& on1,
    const std::function<int(int, int, int, int, int)>& on2) {
  int n = D.n;
  D.h1.assign(n * n * n, {});
  D.h2.assign(n * n * n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto& t1 = D.h1[(a * n + b) * n + c];
        auto& t2 = D.h2[(a * n + b) * n + c];
        const auto& AB = D.hom(a, b);
        const auto& BC = D.hom(b, c);
        t1.assign(AB.n_objects * BC.n_objects, -1);
        t2.assign(AB.mors.size() * BC.mors.size(), -1);
        for (int f = 0; f < AB.n_objects; ++f)
          for (int g = 0; g < BC.n_objects; ++g)
            t1[f * BC.n_objects + g] = on1(a, b, c, f, g);
        for (size_t al = 0; al < AB.mors.size(); ++al)
          for (size_t be = 0; be < BC.mors.size(); ++be)
            t2[al * BC.mors.size() + be] =
                on2(a, b, c, static_cast<int>(al), static_cast<int>(be));
      }
}

inline std::vector<std::string> Fin2Category::validate() const {
  std::vector<std::string> bad;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto sub = hom(a, b).validate();
      for (auto& s : sub)
        bad.push_back("hom(" + std::to_string(a) + "," + std::to_string(b) +
                      "): " + s);
    }
  if (static_cast<int>(id1.size()) != n) bad.push_back("id1 size");
  if (!bad.empty()) return bad;

  auto v2 = [&](int a, int b, int al, int be) {  // vertical composite
    return hom(a, b).comp[al][be];
  };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& AB = hom(a, b);
        const auto& BC = hom(b, c);
        const auto& AC = hom(a, c);
        for (int f = 0; f < AB.n_objects; ++f)
          for (int g = 0; g < BC.n_objects; ++g) {
            int fg = hcomp1(a, b, c, f, g);
            if (fg < 0 || fg >= AC.n_objects) {
              bad.push_back("hcomp1 out of range");
              return bad;
            }
          }
        for (size_t al = 0; al < AB.mors.size(); ++al)
          for (size_t be = 0; be < BC.mors.size(); ++be) {
            int g2 = hcomp2(a, b, c, al, be);
            if (g2 < 0 || g2 >= static_cast<int>(AC.mors.size())) {
              bad.push_back("hcomp2 out of range");
              return bad;
            }
            // endpoints: hcomp2 covers hcomp1 of the endpoints
            if (AC.mors[g2].src !=
                    hcomp1(a, b, c, AB.mors[al].src, BC.mors[be].src) ||
                AC.mors[g2].tgt !=
                    hcomp1(a, b, c, AB.mors[al].tgt, BC.mors[be].tgt))
              bad.push_back("hcomp2 endpoints at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
          }
        // interchange: functoriality of hcomp in both arguments
        for (size_t al = 0; al < AB.mors.size(); ++al)
          for (size_t al2 = 0; al2 < AB.mors.size(); ++al2) {
            if (AB.comp[al][al2] < 0) continue;
            for (size_t be = 0; be < BC.mors.size(); ++be)
              for (size_t be2 = 0; be2 < BC.mors.size(); ++be2) {
                if (BC.comp[be][be2] < 0) continue;
                int lhs = hcomp2(a, b, c, AB.comp[al][al2], BC.comp[be][be2]);
                int rhs = v2(a, c, hcomp2(a, b, c, al, be),
                             hcomp2(a, b, c, al2, be2));
                if (lhs != rhs) {
                  bad.push_back("interchange at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) +
                                ")");
                  goto interchange_done;
                }
              }
          }
      interchange_done:
        // identity 2-cells compose to identity 2-cells
        for (int f = 0; f < AB.n_objects; ++f)
          for (int g = 0; g < BC.n_objects; ++g)
            if (hcomp2(a, b, c, AB.identity[f], BC.identity[g]) !=
                AC.identity[hcomp1(a, b, c, f, g)])
              bad.push_back("hcomp2 on identity 2-cells");
      }

  // horizontal units
  for (int a = 0; a < n; ++a) {
    if (id1[a] < 0 || id1[a] >= hom(a, a).n_objects) {
      bad.push_back("id1 of object " + std::to_string(a));
      continue;
    }
    for (int b = 0; b < n; ++b) {
      const auto& AB = hom(a, b);
      for (int f = 0; f < AB.n_objects; ++f) {
        if (hcomp1(a, a, b, id1[a], f) != f)
          bad.push_back("left horizontal unit");
        if (hcomp1(a, b, b, f, id1[b]) != f)
          bad.push_back("right horizontal unit");
      }
      for (size_t al = 0; al < AB.mors.size(); ++al) {
        if (hcomp2(a, a, b, hom(a, a).identity[id1[a]], static_cast<int>(al)) !=
            static_cast<int>(al))
          bad.push_back("left horizontal unit on 2-cells");
        if (hcomp2(a, b, b, static_cast<int>(al), hom(b, b).identity[id1[b]]) !=
            static_cast<int>(al))
          bad.push_back("right horizontal unit on 2-cells");
      }
    }
  }

  // horizontal associativity on 1- and 2-morphisms
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const auto& AB = hom(a, b);
          const auto& BC = hom(b, c);
          const auto& CD = hom(c, d);
          for (int f = 0; f < AB.n_objects; ++f)
            for (int g = 0; g < BC.n_objects; ++g)
              for (int h = 0; h < CD.n_objects; ++h)
                if (hcomp1(a, c, d, hcomp1(a, b, c, f, g), h) !=
                    hcomp1(a, b, d, f, hcomp1(b, c, d, g, h)))
                  bad.push_back("horizontal associativity (1-morphisms)");
          for (size_t al = 0; al < AB.mors.size(); ++al)
            for (size_t be = 0; be < BC.mors.size(); ++be)
              for (size_t ga = 0; ga < CD.mors.size(); ++ga)
                if (hcomp2(a, c, d, hcomp2(a, b, c, al, be),
                           static_cast<int>(ga)) !=
                    hcomp2(a, b, d, static_cast<int>(al),
                           hcomp2(b, c, d, be, ga)))
                  bad.push_back("horizontal associativity (2-morphisms)");
        }
  return bad;
}

/// 2-functor between finite 2-categories.
struct TwoFunctor {
  std::vector<int> obj;
  std::vector<std::vector<int>> one;  // per (a*n+b): 1-morphism images
  std::vector<std::vector<int>> two;  // per (a*n+b): 2-morphism images
};

inline std::vector<std::string> validate_2functor(const Fin2Category& A,
                                                  const Fin2Category& B,
                                                  const TwoFunctor& F) {
  std::vector<std::string> bad;
  int n = A.n;
  if (static_cast<int>(F.obj.size()) != n ||
      static_cast<int>(F.one.size()) != n * n ||
      static_cast<int>(F.two.size()) != n * n) {
    bad.push_back("table sizes");
    return bad;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& H = A.hom(a, b);
      const auto& K = B.hom(F.obj[a], F.obj[b]);
      FinFunctor local{F.one[a * n + b], F.two[a * n + b]};
      auto sub = validate_functor(H, K, local);
      for (auto& s : sub)
        bad.push_back("hom(" + std::to_string(a) + "," + std::to_string(b) +
                      "): " + s);
    }
  if (!bad.empty()) return bad;
  for (int a = 0; a < n; ++a)
    if (F.one[a * n + a][A.id1[a]] != B.id1[F.obj[a]])
      bad.push_back("identity 1-morphism at object " + std::to_string(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const auto& AB = A.hom(a, b);
        const auto& BC = A.hom(b, c);
        for (int f = 0; f < AB.n_objects; ++f)
          for (int g = 0; g < BC.n_objects; ++g)
            if (F.one[a * n + c][A.hcomp1(a, b, c, f, g)] !=
                B.hcomp1(F.obj[a], F.obj[b], F.obj[c], F.one[a * n + b][f],
                         F.one[b * n + c][g]))
              bad.push_back("hcomp1 preservation");
        for (size_t al = 0; al < AB.mors.size(); ++al)
          for (size_t be = 0; be < BC.mors.size(); ++be)
            if (F.two[a * n + c][A.hcomp2(a, b, c, al, be)] !=
                B.hcomp2(F.obj[a], F.obj[b], F.obj[c], F.two[a * n + b][al],
                         F.two[b * n + c][be]))
              bad.push_back("hcomp2 preservation");
      }
  return bad;
}

namespace detail {

inline FinCategory terminal_category() {
  FinCategoryBuilder b(1);
  int e = b.add_mor(0, 0, "id");
  b.set_identities({e});
  b.raw().obj_labels = {"*"};
  return b.finish([e](int, int) { return e; });
}

inline FinCategory empty_category() { return FinCategory{}; }

/// Product of categories; object (x, y) has index x * |D| + y, morphism
/// (f, g) has index f * |D.mors| + g.
inline FinCategory product_category(const FinCategory& C, const FinCategory& D) {
  FinCategoryBuilder b(C.n_objects * D.n_objects);
  for (int x = 0; x < C.n_objects; ++x)
    for (int y = 0; y < D.n_objects; ++y)
      b.raw().obj_labels.push_back(
          (x < static_cast<int>(C.obj_labels.size()) ? C.obj_labels[x] : "") +
          "|" +
          (y < static_cast<int>(D.obj_labels.size()) ? D.obj_labels[y] : ""));
  for (size_t f = 0; f < C.mors.size(); ++f)
    for (size_t g = 0; g < D.mors.size(); ++g)
      b.add_mor(C.mors[f].src * D.n_objects + D.mors[g].src,
                C.mors[f].tgt * D.n_objects + D.mors[g].tgt);
  std::vector<int> ids;
  for (int x = 0; x < C.n_objects; ++x)
    for (int y = 0; y < D.n_objects; ++y)
      ids.push_back(C.identity[x] * static_cast<int>(D.mors.size()) +
                    D.identity[y]);
  b.set_identities(ids);
  int dm = static_cast<int>(D.mors.size());
  return b.finish([&C, &D, dm](int f, int g) {
    int cf = f / dm, df = f % dm;
    int cg = g / dm, dg = g % dm;
    return C.comp[cf][cg] * dm + D.comp[df][dg];
  });
}

}  // namespace detail

/// A 1-category regarded as a 2-category with discrete hom-categories.
inline Fin2Category as_2category(const FinCategory& P) {
  Fin2Category D;
  D.n = P.n_objects;
  D.obj_labels = P.obj_labels;
  D.homs.resize(D.n * D.n);
  D.id1.assign(D.n, -1);
  // hom(a,b): discrete category on Hom_P(a,b); remember indices
  std::vector<std::vector<std::vector<int>>> local(D.n,
                                                   std::vector<std::vector<int>>(D.n));
  std::vector<int> local_of_mor(P.mors.size(), -1);
  for (size_t f = 0; f < P.mors.size(); ++f) {
    int a = P.mors[f].src, b = P.mors[f].tgt;
    local_of_mor[f] = static_cast<int>(local[a][b].size());
    local[a][b].push_back(static_cast<int>(f));
  }
  for (int a = 0; a < D.n; ++a)
    for (int b = 0; b < D.n; ++b) {
      FinCategoryBuilder hb(static_cast<int>(local[a][b].size()));
      std::vector<int> ids;
      for (size_t i = 0; i < local[a][b].size(); ++i) {
        hb.add_mor(static_cast<int>(i), static_cast<int>(i),
                   P.mors[local[a][b][i]].label);
        ids.push_back(static_cast<int>(i));
        hb.raw().obj_labels.push_back(P.mors[local[a][b][i]].label);
      }
      hb.set_identities(ids);
      D.hom_mut(a, b) = hb.finish([](int f, int) { return f; });
      if (a == b) D.id1[a] = local_of_mor[P.identity[a]];
    }
  fill_hcomp(
      D,
      [&](int a, int b, int c, int f, int g) {
        int pf = local[a][b][f], pg = local[b][c][g];
        return local_of_mor[P.comp[pf][pg]];
      },
      [&](int a, int b, int c, int al, int be) {
        // all 2-cells are identities
        int pf = local[a][b][al], pg = local[b][c][be];
        return local_of_mor[P.comp[pf][pg]];
      });
  return D;
}

/// Suspension of a 1-category: two objects with hom P between them and no
/// other nontrivial structure.
inline Fin2Category suspend2(const FinCategory& P) {
  Fin2Category D;
  D.n = 2;
  D.obj_labels = {"bot", "top"};
  D.homs.resize(4);
  D.hom_mut(0, 0) = detail::terminal_category();
  D.hom_mut(1, 1) = detail::terminal_category();
  D.hom_mut(0, 1) = P;
  D.hom_mut(1, 0) = detail::empty_category();
  D.id1 = {0, 0};
  fill_hcomp(
      D,
      [&](int a, int b, int c, int f, int g) {
        if (a == b) return g;  // whisker by an identity
        if (b == c) return f;
        return -1;  // unreachable: hom(1,0) empty
      },
      [&](int a, int b, int c, int al, int be) {
        if (a == b) return be;
        if (b == c) return al;
        return -1;
      });
  return D;
}

/// 2-truncated oriental on [m]: 1-morphisms x_i -> x_j are the subsets of
/// {i..j} containing both endpoints, 2-morphisms are inclusions, horizontal
/// composition is union.
inline Fin2Category oriental2(int m) {
  if (m < 0) throw std::invalid_argument("oriental2: m >= 0 required");
  Fin2Category D;
  D.n = m + 1;
  for (int i = 0; i <= m; ++i) D.obj_labels.push_back("x" + std::to_string(i));
  D.homs.resize(D.n * D.n);
  D.id1.assign(D.n, 0);

  // subsets of {i..j} containing i and j, ascending mask order
  auto subsets = [m](int i, int j) {
    std::vector<unsigned> out;
    if (j < i) return out;
    if (i == j) {
      out.push_back(1u << i);
      return out;
    }
    int inner = j - i - 1;
    for (unsigned bits = 0; bits < (1u << inner); ++bits) {
      unsigned mask = (1u << i) | (1u << j);
      for (int t = 0; t < inner; ++t)
        if (bits & (1u << t)) mask |= (1u << (i + 1 + t));
      out.push_back(mask);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<std::vector<std::vector<unsigned>>> sub(D.n,
                                                      std::vector<std::vector<unsigned>>(D.n));
  std::vector<std::vector<std::map<unsigned, int>>> sub_idx(
      D.n, std::vector<std::map<unsigned, int>>(D.n));
  std::vector<std::vector<std::map<std::pair<int, int>, int>>> mor_idx(
      D.n, std::vector<std::map<std::pair<int, int>, int>>(D.n));

  auto mask_label = [m](unsigned mask) {
    std::string s = "{";
    bool first = true;
    for (int v = 0; v <= m; ++v)
      if (mask & (1u << v)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
      }
    return s + "}";
  };

  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) {
      sub[i][j] = subsets(i, j);
      for (size_t t = 0; t < sub[i][j].size(); ++t)
        sub_idx[i][j][sub[i][j][t]] = static_cast<int>(t);
      FinCategoryBuilder hb(static_cast<int>(sub[i][j].size()));
      for (unsigned mask : sub[i][j]) hb.raw().obj_labels.push_back(mask_label(mask));
      std::vector<int> ids(sub[i][j].size(), -1);
      for (size_t s = 0; s < sub[i][j].size(); ++s)
        for (size_t tt = 0; tt < sub[i][j].size(); ++tt) {
          unsigned S = sub[i][j][s], T = sub[i][j][tt];
          if ((S & T) == S) {  // S subset of T
            int id = hb.add_mor(static_cast<int>(s), static_cast<int>(tt));
            mor_idx[i][j][{static_cast<int>(s), static_cast<int>(tt)}] = id;
            if (s == tt) ids[s] = id;
          }
        }
      hb.set_identities(ids);
      auto& mors = hb.raw().mors;
      D.hom_mut(i, j) = hb.finish([&mors, &mor_idx, i, j](int f, int g) {
        return mor_idx[i][j].at({mors[f].src, mors[g].tgt});
      });
    }
  // hcomp: union of subsets
  fill_hcomp(
      D,
      [&](int a, int b, int c, int f, int g) {
        unsigned u = sub[a][b][f] | sub[b][c][g];
        return sub_idx[a][c].at(u);
      },
      [&](int a, int b, int c, int al, int be) {
        const auto& AB = D.hom(a, b);
        const auto& BC = D.hom(b, c);
        unsigned s = sub[a][b][AB.mors[al].src] | sub[b][c][BC.mors[be].src];
        unsigned t = sub[a][b][AB.mors[al].tgt] | sub[b][c][BC.mors[be].tgt];
        return mor_idx[a][c].at(
            {sub_idx[a][c].at(s), sub_idx[a][c].at(t)});
      });
  return D;
}

/// Cartesian product of 2-categories; objects (a, a') indexed a * n' + a'.
inline Fin2Category product2(const Fin2Category& A, const Fin2Category& B) {
  Fin2Category D;
  D.n = A.n * B.n;
  D.homs.resize(D.n * D.n);
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b)
      D.obj_labels.push_back(
          (a < static_cast<int>(A.obj_labels.size()) ? A.obj_labels[a] : "") +
          "|" +
          (b < static_cast<int>(B.obj_labels.size()) ? B.obj_labels[b] : ""));
  for (int x = 0; x < D.n; ++x)
    for (int y = 0; y < D.n; ++y) {
      int a = x / B.n, ap = x % B.n;
      int b = y / B.n, bp = y % B.n;
      D.hom_mut(x, y) = detail::product_category(A.hom(a, b), B.hom(ap, bp));
    }
  D.id1.resize(D.n);
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b)
      D.id1[a * B.n + b] =
          A.id1[a] * B.hom(b, b).n_objects + B.id1[b];
  fill_hcomp(
      D,
      [&](int x, int y, int z, int f, int g) {
        int a = x / B.n, ap = x % B.n;
        int b = y / B.n, bp = y % B.n;
        int c = z / B.n, cp = z % B.n;
        int f1 = f / B.hom(ap, bp).n_objects, f2 = f % B.hom(ap, bp).n_objects;
        int g1 = g / B.hom(bp, cp).n_objects, g2 = g % B.hom(bp, cp).n_objects;
        return A.hcomp1(a, b, c, f1, g1) * B.hom(ap, cp).n_objects +
               B.hcomp1(ap, bp, cp, f2, g2);
      },
      [&](int x, int y, int z, int al, int be) {
        int a = x / B.n, ap = x % B.n;
        int b = y / B.n, bp = y % B.n;
        int c = z / B.n, cp = z % B.n;
        int n1 = static_cast<int>(B.hom(ap, bp).mors.size());
        int n2 = static_cast<int>(B.hom(bp, cp).mors.size());
        int a1 = al / n1, a2 = al % n1;
        int b1 = be / n2, b2 = be % n2;
        return A.hcomp2(a, b, c, a1, b1) *
                   static_cast<int>(B.hom(ap, cp).mors.size()) +
               B.hcomp2(ap, bp, cp, a2, b2);
      });
  return D;
}

/// Full sub-2-category on a subset of objects.
inline Fin2Category full_sub2(const Fin2Category& A,
                              const std::vector<int>& objects) {
  Fin2Category D;
  D.n = static_cast<int>(objects.size());
  D.homs.resize(D.n * D.n);
  D.id1.resize(D.n);
  for (int i = 0; i < D.n; ++i) {
    D.obj_labels.push_back(objects[i] < static_cast<int>(A.obj_labels.size())
                               ? A.obj_labels[objects[i]]
                               : "");
    D.id1[i] = A.id1[objects[i]];
  }
  for (int i = 0; i < D.n; ++i)
    for (int j = 0; j < D.n; ++j) D.hom_mut(i, j) = A.hom(objects[i], objects[j]);
  fill_hcomp(
      D,
      [&](int a, int b, int c, int f, int g) {
        return A.hcomp1(objects[a], objects[b], objects[c], f, g);
      },
      [&](int a, int b, int c, int al, int be) {
        return A.hcomp2(objects[a], objects[b], objects[c], al, be);
      });
  return D;
}

/// Detects whether `x` is a cosieve (or sieve) object and produces the
/// characteristic 2-functor to [1] when it is.
struct SieveWitness {
  bool valid = false;
  TwoFunctor chi;  // into as_2category(interval_category(1))
};

inline SieveWitness check_sieve(const Fin2Category& A, int x, bool cosieve) {
  SieveWitness w;
  for (int b = 0; b < A.n; ++b) {
    const FinCategory& H = cosieve ? A.hom(x, b) : A.hom(b, x);
    if (b == x) {
      if (H.n_objects != 1 || H.mors.size() != 1) return w;
    } else {
      if (H.n_objects != 0) return w;
    }
  }
  int n = A.n;
  w.valid = true;
  w.chi.obj.resize(n);
  w.chi.one.assign(n * n, {});
  w.chi.two.assign(n * n, {});
  for (int a = 0; a < n; ++a)
    w.chi.obj[a] = cosieve ? (a == x ? 1 : 0) : (a == x ? 0 : 1);
  // [1] as a 2-category: hom categories are terminal or empty, so every
  // assignment is forced
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& H = A.hom(a, b);
      w.chi.one[a * n + b].assign(H.n_objects, 0);
      w.chi.two[a * n + b].assign(H.mors.size(), 0);
    }
  return w;
}

/// Marks of the 2-cells and 1-cells that are invertible / equivalences.
struct CellClassification {
  std::vector<std::vector<std::vector<char>>> invertible2;   // [a][b][mor]
  std::vector<std::vector<std::vector<char>>> equivalence1;  // [a][b][obj]
};

inline CellClassification classify_cells(const Fin2Category& A) {
  CellClassification out;
  out.invertible2.assign(A.n, std::vector<std::vector<char>>(A.n));
  out.equivalence1.assign(A.n, std::vector<std::vector<char>>(A.n));
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      const auto& H = A.hom(a, b);
      out.invertible2[a][b].resize(H.mors.size());
      for (size_t f = 0; f < H.mors.size(); ++f)
        out.invertible2[a][b][f] = H.has_inverse(static_cast<int>(f));
      out.equivalence1[a][b].assign(H.n_objects, 0);
    }
  auto iso_objects = [&](const FinCategory& H, int u, int v) {
    for (size_t f = 0; f < H.mors.size(); ++f)
      if (H.mors[f].src == u && H.mors[f].tgt == v &&
          H.has_inverse(static_cast<int>(f)))
        return true;
    return false;
  };
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < A.n; ++b) {
      const auto& H = A.hom(a, b);
      for (int f = 0; f < H.n_objects; ++f) {
        bool eq = false;
        for (int g = 0; g < A.hom(b, a).n_objects && !eq; ++g) {
          int gf = A.hcomp1(a, b, a, f, g);
          int fg = A.hcomp1(b, a, b, g, f);
          if (iso_objects(A.hom(a, a), gf, A.id1[a]) &&
              iso_objects(A.hom(b, b), fg, A.id1[b]))
            eq = true;
        }
        out.equivalence1[a][b][f] = eq;
      }
    }
  return out;
}

}  // namespace complicial

#endif
