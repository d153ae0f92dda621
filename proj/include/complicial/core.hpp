#ifndef COMPLICIAL_CORE_HPP
#define COMPLICIAL_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace complicial {

using Dim = int;
using CellId = std::int32_t;

/// Reduced word of degeneracy operators s_{i_1}...s_{i_k} with i_1 > ... > i_k.
/// The empty word is the identity operator.
struct DegeneracyWord {
  std::vector<int> letters;  // strictly descending

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  bool operator==(const DegeneracyWord&) const = default;
  auto operator<=>(const DegeneracyWord&) const = default;

  bool descending() const {
    for (size_t i = 1; i < letters.size(); ++i)
      if (letters[i - 1] <= letters[i]) return false;
    return true;
  }

  bool contains(int j) const {
    for (int v : letters)
      if (v == j) return true;
    return false;
  }
};

/// Normal form of s_a composed after `w`, via s_a s_j = s_{j+1} s_a for a <= j.
inline DegeneracyWord insert_degeneracy(const DegeneracyWord& w, int a) {
  DegeneracyWord out;
  out.letters.reserve(w.letters.size() + 1);
  size_t i = 0;
  int cur = a;
  while (i < w.letters.size() && cur <= w.letters[i]) {
    out.letters.push_back(w.letters[i] + 1);
    ++i;
  }
  out.letters.push_back(cur);
  for (; i < w.letters.size(); ++i) out.letters.push_back(w.letters[i]);
  return out;
}

/// Normal form of `outer` composed after `inner` (outer applied last).
inline DegeneracyWord compose_words(const DegeneracyWord& outer,
                                    const DegeneracyWord& inner) {
  DegeneracyWord res = inner;
  for (auto it = outer.letters.rbegin(); it != outer.letters.rend(); ++it)
    res = insert_degeneracy(res, *it);
  return res;
}

/// Result of pushing d_a through a degeneracy word: either the face operator
/// cancelled against a letter, or it survives (as d_{pending}) to hit the base.
struct FaceThroughWord {
  DegeneracyWord word;
  std::optional<int> pending;  // face index to apply to the base, if any
};

inline FaceThroughWord face_through_word(const DegeneracyWord& w, int a) {
  FaceThroughWord r;
  int cur = a;
  size_t i = 0;
  for (; i < w.letters.size(); ++i) {
    int s = w.letters[i];
    if (cur < s) {
      r.word.letters.push_back(s - 1);
    } else if (cur == s || cur == s + 1) {
      for (size_t j = i + 1; j < w.letters.size(); ++j)
        r.word.letters.push_back(w.letters[j]);
      return r;
    } else {
      r.word.letters.push_back(s);
      --cur;
    }
  }
  r.pending = cur;
  return r;
}

/// Vertex map of the monotone surjection encoded by `w` on a simplex of
/// dimension base_dim + |w|: sends vertex v of the degenerate simplex to the
/// corresponding vertex of the base.
inline int collapse_vertex(const DegeneracyWord& w, int v) {
  for (int s : w.letters) v = (v <= s) ? v : v - 1;
  return v;
}

/// Reference to a (possibly degenerate) simplex in Eilenberg-Zilber normal
/// form: a reduced degeneracy word applied to a nondegenerate base cell.
struct SimplexRef {
  DegeneracyWord word;
  Dim base_dim = 0;
  CellId base = 0;

  Dim dim() const { return base_dim + word.size(); }
  bool degenerate() const { return !word.empty(); }
  bool operator==(const SimplexRef&) const = default;
  auto operator<=>(const SimplexRef&) const = default;
};

inline SimplexRef nondeg_ref(Dim d, CellId c) { return SimplexRef{{}, d, c}; }

/// The m-fold degeneracy s_0^m of a vertex.
inline SimplexRef point_degeneracy(CellId vertex, int m) {
  SimplexRef r;
  r.base_dim = 0;
  r.base = vertex;
  for (int i = m - 1; i >= 0; --i) r.word.letters.push_back(i);
  return r;
}

/// Applies a degeneracy word on top of an existing reference.
inline SimplexRef apply_word(const DegeneracyWord& w, const SimplexRef& r) {
  return SimplexRef{compose_words(w, r.word), r.base_dim, r.base};
}

/// Number of monotone surjections [k] ->> [q], i.e. C(k, q). Used to
/// reconstruct full simplex counts (with degeneracies) from nondegenerate
/// cell counts.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / (i + 1);
  return r;
}

}  // namespace complicial

#endif
