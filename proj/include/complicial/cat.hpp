#ifndef COMPLICIAL_CAT_HPP
#define COMPLICIAL_CAT_HPP

#include <functional>
#include <string>
#include <vector>

#include "complicial/core.hpp"

namespace complicial {

/// Finite category with explicit composition table. Composition is written
/// diagrammatically: compose(f, g) is "f then g".
struct FinCategory {
  struct Mor {
    int src = 0, tgt = 0;
    std::string label;
  };

  int n_objects = 0;
  std::vector<std::string> obj_labels;
  std::vector<Mor> mors;
  std::vector<int> identity;            // per object
  std::vector<std::vector<int>> comp;   // comp[f][g], -1 when not composable

  int compose(int f, int g) const {
    int h = comp[f][g];
    if (h < 0) throw std::invalid_argument("FinCategory: not composable");
    return h;
  }

  bool is_identity(int f) const {
    return mors[f].src == mors[f].tgt && identity[mors[f].src] == f;
  }

  int hom_size(int a, int b) const {
    int n = 0;
    for (const Mor& m : mors)
      if (m.src == a && m.tgt == b) ++n;
    return n;
  }

  bool has_inverse(int f) const {
    for (size_t g = 0; g < mors.size(); ++g)
      if (mors[g].src == mors[f].tgt && mors[g].tgt == mors[f].src &&
          comp[f][g] == identity[mors[f].src] &&
          comp[g][f] == identity[mors[f].tgt])
        return true;
    return false;
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    if (static_cast<int>(identity.size()) != n_objects)
      bad.push_back("identity table size");
    for (int a = 0; a < n_objects && a < static_cast<int>(identity.size()); ++a) {
      int e = identity[a];
      if (e < 0 || e >= static_cast<int>(mors.size()) || mors[e].src != a ||
          mors[e].tgt != a)
        bad.push_back("identity of object " + std::to_string(a));
    }
    size_t n = mors.size();
    if (comp.size() != n) {
      bad.push_back("composition table size");
      return bad;
    }
    for (size_t f = 0; f < n; ++f) {
      if (comp[f].size() != n) {
        bad.push_back("composition row size");
        return bad;
      }
      for (size_t g = 0; g < n; ++g) {
        bool composable = mors[f].tgt == mors[g].src;
        int h = comp[f][g];
        if (!composable && h != -1)
          bad.push_back("composite defined on non-composable pair");
        if (composable) {
          if (h < 0 || h >= static_cast<int>(n)) {
            bad.push_back("missing composite");
            continue;
          }
          if (mors[h].src != mors[f].src || mors[h].tgt != mors[g].tgt)
            bad.push_back("composite endpoints");
        }
      }
    }
    if (!bad.empty()) return bad;
    for (size_t f = 0; f < n; ++f) {
      if (comp[identity[mors[f].src]][f] != static_cast<int>(f))
        bad.push_back("left unit law at morphism " + std::to_string(f));
      if (comp[f][identity[mors[f].tgt]] != static_cast<int>(f))
        bad.push_back("right unit law at morphism " + std::to_string(f));
    }
    for (size_t f = 0; f < n; ++f)
      for (size_t g = 0; g < n; ++g) {
        if (mors[f].tgt != mors[g].src) continue;
        for (size_t h = 0; h < n; ++h) {
          if (mors[g].tgt != mors[h].src) continue;
          if (comp[comp[f][g]][h] != comp[f][comp[g][h]])
            bad.push_back("associativity at (" + std::to_string(f) + "," +
                          std::to_string(g) + "," + std::to_string(h) + ")");
        }
      }
    return bad;
  }
};

/// Builds a category from object count and a membership predicate on
/// morphisms identified by abstract keys.
class FinCategoryBuilder {
 public:
  explicit FinCategoryBuilder(int n_objects) { cat_.n_objects = n_objects; }

  int add_mor(int src, int tgt, std::string label = {}) {
    cat_.mors.push_back({src, tgt, std::move(label)});
    return static_cast<int>(cat_.mors.size() - 1);
  }

  void set_identities(const std::vector<int>& ids) { cat_.identity = ids; }

  /// Completes the composition table from a callback.
  FinCategory finish(const std::function<int(int, int)>& compose) {
    size_t n = cat_.mors.size();
    cat_.comp.assign(n, std::vector<int>(n, -1));
    for (size_t f = 0; f < n; ++f)
      for (size_t g = 0; g < n; ++g)
        if (cat_.mors[f].tgt == cat_.mors[g].src)
          cat_.comp[f][g] = compose(static_cast<int>(f), static_cast<int>(g));
    return std::move(cat_);
  }

  FinCategory& raw() { return cat_; }

 private:
  FinCategory cat_;
};

/// The poset [k] as a category: one morphism i -> j for each i <= j.
inline FinCategory interval_category(int k) {
  if (k < 0) throw std::invalid_argument("interval_category: k >= 0 required");
  FinCategoryBuilder b(k + 1);
  std::vector<std::vector<int>> id(k + 1, std::vector<int>(k + 1, -1));
  for (int i = 0; i <= k; ++i)
    for (int j = i; j <= k; ++j)
      id[i][j] = b.add_mor(i, j, std::to_string(i) + "<=" + std::to_string(j));
  std::vector<int> ids;
  for (int i = 0; i <= k; ++i) ids.push_back(id[i][i]);
  b.set_identities(ids);
  auto& mors = b.raw().mors;
  for (int i = 0; i <= k; ++i) b.raw().obj_labels.push_back(std::to_string(i));
  return b.finish([&mors, &id](int f, int g) {
    return id[mors[f].src][mors[g].tgt];
  });
}

/// The poset [k] x [l]^op; k = -1 or l = -1 gives the empty category.
/// Objects are pairs (i, a), morphisms (i, a) -> (j, b) exist iff i <= j and
/// a >= b. Object index is i * (l + 1) + a.
inline FinCategory rect_category(int k, int l) {
  if (k < 0 || l < 0) return FinCategory{};
  int n = (k + 1) * (l + 1);
  FinCategoryBuilder b(n);
  std::vector<std::vector<int>> id(n, std::vector<int>(n, -1));
  for (int i = 0; i <= k; ++i)
    for (int a = 0; a <= l; ++a)
      b.raw().obj_labels.push_back("(" + std::to_string(i) + "," +
                                   std::to_string(a) + ")");
  // morphisms in lexicographic source-then-target order
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      int i = s / (l + 1), a = s % (l + 1);
      int j = t / (l + 1), c = t % (l + 1);
      if (i <= j && a >= c)
        id[s][t] = b.add_mor(s, t);
    }
  std::vector<int> ids;
  for (int s = 0; s < n; ++s) ids.push_back(id[s][s]);
  b.set_identities(ids);
  auto& mors = b.raw().mors;
  return b.finish([&mors, &id](int f, int g) {
    return id[mors[f].src][mors[g].tgt];
  });
}

/// The free-living isomorphism: two objects, two mutually inverse
/// non-identities.
inline FinCategory walking_iso_category() {
  FinCategoryBuilder b(2);
  int i0 = b.add_mor(0, 0, "id0");
  int i1 = b.add_mor(1, 1, "id1");
  int u = b.add_mor(0, 1, "u");
  int v = b.add_mor(1, 0, "v");
  b.set_identities({i0, i1});
  b.raw().obj_labels = {"0", "1"};
  auto& mors = b.raw().mors;
  return b.finish([&mors, i0, i1, u, v](int f, int g) {
    int src = mors[f].src, tgt = mors[g].tgt;
    if (src == tgt) return src == 0 ? i0 : i1;
    return src == 0 ? u : v;
  });
}

/// Functor between finite categories: object and morphism assignments.
struct FinFunctor {
  std::vector<int> obj;
  std::vector<int> mor;
  bool operator==(const FinFunctor&) const = default;
};

inline std::vector<std::string> validate_functor(const FinCategory& A,
                                                 const FinCategory& B,
                                                 const FinFunctor& F) {
  std::vector<std::string> bad;
  if (static_cast<int>(F.obj.size()) != A.n_objects ||
      F.mor.size() != A.mors.size()) {
    bad.push_back("functor table sizes");
    return bad;
  }
  for (size_t f = 0; f < A.mors.size(); ++f) {
    const auto& m = A.mors[f];
    const auto& fm = B.mors[F.mor[f]];
    if (fm.src != F.obj[m.src] || fm.tgt != F.obj[m.tgt])
      bad.push_back("endpoints at morphism " + std::to_string(f));
  }
  for (int a = 0; a < A.n_objects; ++a)
    if (F.mor[A.identity[a]] != B.identity[F.obj[a]])
      bad.push_back("identity at object " + std::to_string(a));
  for (size_t f = 0; f < A.mors.size(); ++f)
    for (size_t g = 0; g < A.mors.size(); ++g)
      if (A.comp[f][g] >= 0 &&
          F.mor[A.comp[f][g]] != B.comp[F.mor[f]][F.mor[g]])
        bad.push_back("composition at (" + std::to_string(f) + "," +
                      std::to_string(g) + ")");
  return bad;
}

/// All functors A -> B, by backtracking over object then morphism
/// assignments with composition checks.
inline std::vector<FinFunctor> enumerate_functors(const FinCategory& A,
                                                  const FinCategory& B) {
  std::vector<FinFunctor> out;
  FinFunctor F;
  F.obj.assign(A.n_objects, -1);
  F.mor.assign(A.mors.size(), -1);

  std::function<void(size_t)> place_mor = [&](size_t f) {
    if (f == A.mors.size()) {
      if (validate_functor(A, B, F).empty()) out.push_back(F);
      return;
    }
    if (F.mor[f] >= 0) {  // identity, already forced
      place_mor(f + 1);
      return;
    }
    const auto& m = A.mors[f];
    for (size_t bm = 0; bm < B.mors.size(); ++bm) {
      if (B.mors[bm].src != F.obj[m.src] || B.mors[bm].tgt != F.obj[m.tgt])
        continue;
      F.mor[f] = static_cast<int>(bm);
      bool ok = true;
      for (size_t g = 0; g < A.mors.size() && ok; ++g) {
        if (F.mor[g] < 0) continue;
        if (A.comp[f][g] >= 0 && F.mor[A.comp[f][g]] >= 0 &&
            F.mor[A.comp[f][g]] != B.comp[F.mor[f]][F.mor[g]])
          ok = false;
        if (A.comp[g][f] >= 0 && F.mor[A.comp[g][f]] >= 0 &&
            F.mor[A.comp[g][f]] != B.comp[F.mor[g]][F.mor[f]])
          ok = false;
      }
      if (ok) place_mor(f + 1);
      F.mor[f] = -1;
    }
  };

  std::function<void(int)> place_obj = [&](int a) {
    if (a == A.n_objects) {
      for (int x = 0; x < A.n_objects; ++x)
        F.mor[A.identity[x]] = B.identity[F.obj[x]];
      place_mor(0);
      for (int x = 0; x < A.n_objects; ++x) F.mor[A.identity[x]] = -1;
      return;
    }
    for (int b = 0; b < B.n_objects; ++b) {
      F.obj[a] = b;
      place_obj(a + 1);
      F.obj[a] = -1;
    }
  };
  place_obj(0);
  return out;
}

}  // namespace complicial

#endif
