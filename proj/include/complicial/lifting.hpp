#ifndef COMPLICIAL_LIFTING_HPP
#define COMPLICIAL_LIFTING_HPP

#include <functional>
#include <map>
#include <vector>

#include "complicial/msset.hpp"

namespace complicial {

namespace detail {

/// Candidate lookup for map targets: all references of a given dimension in
/// X, indexed by their face vector.
struct RefTable {
  std::vector<std::vector<SimplexRef>> refs;  // per dim
  std::vector<std::map<std::vector<SimplexRef>, std::vector<SimplexRef>>>
      by_faces;  // per dim >= 1

  explicit RefTable(const MarkedSimplicialSet& X) {
    Dim t = X.truncation();
    refs.resize(t + 1);
    by_faces.resize(t + 1);
    for (Dim d = 0; d <= t; ++d) {
      refs[d] = X.refs_of_dim(d);
      if (d == 0) continue;
      for (const SimplexRef& r : refs[d]) {
        std::vector<SimplexRef> fs;
        for (int a = 0; a <= d; ++a) fs.push_back(X.face(r, a));
        by_faces[d][fs].push_back(r);
      }
    }
  }
};

struct MapSearch {
  const MarkedSimplicialSet& A;
  const MarkedSimplicialSet& X;
  const RefTable& table;
  std::vector<std::vector<SimplexRef>> asg;
  std::vector<std::vector<char>> fixed;

  MapSearch(const MarkedSimplicialSet& a, const MarkedSimplicialSet& x,
            const RefTable& tbl)
      : A(a), X(x), table(tbl) {
    asg.resize(A.truncation() + 1);
    fixed.resize(A.truncation() + 1);
    for (Dim d = 0; d <= A.truncation(); ++d) {
      asg[d].resize(A.count(d));
      fixed[d].assign(A.count(d), 0);
    }
  }

  SimplexRef push(const SimplexRef& r) const {
    return apply_word(r.word, asg[r.base_dim][r.base]);
  }

  /// Runs the backtracking over all unfixed cells; calls `emit` on every
  /// complete marking-preserving simplicial assignment. `emit` returns false
  /// to stop the search.
  bool run(const std::function<bool()>& emit) { return place(0, 0, emit); }

 private:
  bool place(Dim d, CellId c, const std::function<bool()>& emit) {
    while (d <= A.truncation() &&
           c >= static_cast<CellId>(A.count(d))) {
      ++d;
      c = 0;
    }
    if (d > A.truncation()) return emit();
    if (fixed[d][c]) return place(d, c + 1, emit);
    bool marked = d >= 1 && A.cell(d, c).marked;
    if (d == 0) {
      for (const SimplexRef& r : table.refs[0]) {
        asg[0][c] = r;
        fixed[0][c] = 1;
        if (!place(d, c + 1, emit)) {
          fixed[0][c] = 0;
          return false;
        }
        fixed[0][c] = 0;
      }
      return true;
    }
    std::vector<SimplexRef> want;
    for (const SimplexRef& f : A.cell(d, c).faces) want.push_back(push(f));
    auto it = table.by_faces[d].find(want);
    if (it == table.by_faces[d].end()) return true;
    for (const SimplexRef& r : it->second) {
      if (marked && !X.ref_marked(r)) continue;
      asg[d][c] = r;
      fixed[d][c] = 1;
      if (!place(d, c + 1, emit)) {
        fixed[d][c] = 0;
        return false;
      }
      fixed[d][c] = 0;
    }
    return true;
  }
};

}  // namespace detail

/// All marking-preserving simplicial maps A -> X. Exhaustive; meant for small
/// test shapes.
inline std::vector<SimplicialMap> enumerate_maps(MssPtr A, MssPtr X) {
  detail::RefTable table(*X);
  detail::MapSearch search(*A, *X, table);
  std::vector<SimplicialMap> out;
  search.run([&]() {
    SimplicialMap m;
    m.source = A;
    m.target = X;
    m.assign = search.asg;
    out.push_back(std::move(m));
    return true;
  });
  return out;
}

/// Number of ways a fixed map A -> X extends along a monomorphism i: A -> B.
inline int count_extensions(const SimplicialMap& i, const SimplicialMap& f,
                            const detail::RefTable& table) {
  const MarkedSimplicialSet& B = *i.target;
  const MarkedSimplicialSet& X = *f.target;
  detail::MapSearch search(B, X, table);
  const MarkedSimplicialSet& A = *i.source;
  for (Dim d = 0; d <= A.truncation(); ++d)
    for (CellId c = 0; c < A.count(d); ++c) {
      const SimplexRef& img = i.at(d, c);
      search.asg[img.base_dim][img.base] = f.at(d, c);
      search.fixed[img.base_dim][img.base] = 1;
    }
  int n = 0;
  search.run([&]() {
    ++n;
    return true;
  });
  return n;
}

inline bool extends_at_least_once(const SimplicialMap& i,
                                  const SimplicialMap& f,
                                  const detail::RefTable& table) {
  const MarkedSimplicialSet& B = *i.target;
  const MarkedSimplicialSet& X = *f.target;
  detail::MapSearch search(B, X, table);
  const MarkedSimplicialSet& A = *i.source;
  for (Dim d = 0; d <= A.truncation(); ++d)
    for (CellId c = 0; c < A.count(d); ++c) {
      const SimplexRef& img = i.at(d, c);
      search.asg[img.base_dim][img.base] = f.at(d, c);
      search.fixed[img.base_dim][img.base] = 1;
    }
  bool found = false;
  search.run([&]() {
    found = true;
    return false;
  });
  return found;
}

/// Right lifting property of X against i: every marking-preserving map
/// A -> X extends along i to B -> X. Brute force with face-consistency
/// pruning.
inline bool has_extension(const SimplicialMap& i, MssPtr X) {
  if (!i.mono())
    throw std::invalid_argument("has_extension: i must be a monomorphism");
  Dim top = 0;
  for (Dim d = 0; d <= i.target->truncation(); ++d)
    if (i.target->count(d) > 0) top = d;
  if (X->truncation() < top)
    throw std::invalid_argument(
        "has_extension: target truncation below the extension shape");
  detail::RefTable table(*X);
  detail::MapSearch search(*i.source, *X, table);
  bool all_extend = true;
  search.run([&]() {
    SimplicialMap f;
    f.source = i.source;
    f.target = X;
    f.assign = search.asg;
    if (extends_at_least_once(i, f, table)) return true;
    all_extend = false;
    return false;  // stop at first counterexample
  });
  return all_extend;
}

}  // namespace complicial

#endif
