#ifndef COMPLICIAL_MSSET_HPP
#define COMPLICIAL_MSSET_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "complicial/core.hpp"

namespace complicial {

/// Marking schemes for nerves of 2-categories: no marks beyond degeneracies,
/// marks on identity top cells, or marks on equivalences and invertible
/// 2-cells. Everything of dimension >= 3 is marked in the latter two.
enum class MarkingPolicy { street, roberts_street, natural };

/// Finite simplicial set with marking, truncated at a fixed dimension.
/// Only nondegenerate simplices are stored; every face is kept in
/// Eilenberg-Zilber normal form, so degenerate simplices exist implicitly.
class MarkedSimplicialSet {
 public:
  struct Cell {
    std::vector<SimplexRef> faces;  // d_0..d_m for an m-cell, m >= 1
    bool marked = false;            // nondegenerate cells of dim >= 1 only
    std::string label;
  };

  explicit MarkedSimplicialSet(Dim truncation = 0)
      : truncation_(truncation), cells_(truncation + 1) {}

  Dim truncation() const { return truncation_; }

  int count(Dim d) const {
    return (d >= 0 && d <= truncation_) ? static_cast<int>(cells_[d].size()) : 0;
  }

  int total_cells() const {
    int n = 0;
    for (Dim d = 0; d <= truncation_; ++d) n += count(d);
    return n;
  }

  const Cell& cell(Dim d, CellId i) const { return cells_[d][i]; }
  Cell& cell_mut(Dim d, CellId i) { return cells_[d][i]; }

  CellId add_vertex(std::string label = {}) {
    Cell c;
    c.label = std::move(label);
    cells_[0].push_back(std::move(c));
    return static_cast<CellId>(cells_[0].size() - 1);
  }

  CellId add_cell(Dim d, std::vector<SimplexRef> faces, bool marked,
                  std::string label = {}) {
    if (d < 1 || d > truncation_)
      throw std::invalid_argument("add_cell: dimension out of range");
    if (static_cast<int>(faces.size()) != d + 1)
      throw std::invalid_argument("add_cell: face count mismatch");
    Cell c;
    c.faces = std::move(faces);
    c.marked = marked;
    c.label = std::move(label);
    cells_[d].push_back(std::move(c));
    return static_cast<CellId>(cells_[d].size() - 1);
  }

  void set_basepoint(const std::string& name, CellId vertex) {
    basepoints_[name] = vertex;
  }
  const std::map<std::string, CellId>& basepoints() const { return basepoints_; }
  bool has_basepoint(const std::string& name) const {
    return basepoints_.count(name) != 0;
  }
  CellId basepoint(const std::string& name) const {
    auto it = basepoints_.find(name);
    if (it == basepoints_.end())
      throw std::invalid_argument("unknown basepoint: " + name);
    return it->second;
  }

  bool empty() const {
    for (const auto& per_dim : cells_)
      if (!per_dim.empty()) return false;
    return true;
  }

  /// d_a of a possibly degenerate simplex, in normal form.
  SimplexRef face(const SimplexRef& r, int a) const {
    FaceThroughWord ft = face_through_word(r.word, a);
    if (!ft.pending) return SimplexRef{ft.word, r.base_dim, r.base};
    if (r.base_dim < 1)
      throw std::logic_error("face: residual face operator on a vertex");
    const SimplexRef& f = cells_[r.base_dim][r.base].faces[*ft.pending];
    return SimplexRef{compose_words(ft.word, f.word), f.base_dim, f.base};
  }

  SimplexRef degenerate(const SimplexRef& r, int i) const {
    return SimplexRef{insert_degeneracy(r.word, i), r.base_dim, r.base};
  }

  /// s-th vertex of a simplex, as a 0-cell id.
  CellId vertex(SimplexRef r, int s) const {
    int v = collapse_vertex(r.word, s);
    SimplexRef cur = nondeg_ref(r.base_dim, r.base);
    while (cur.dim() > 0) {
      if (v > 0) {
        cur = face(cur, 0);
        --v;
      } else {
        cur = face(cur, cur.dim());
      }
    }
    return cur.base;
  }

  /// Iterated face keeping only the vertices in `keep` (ascending subset of
  /// 0..dim). Removes the complement from the top index downward.
  SimplexRef subsimplex(const SimplexRef& r, const std::vector<int>& keep) const {
    std::vector<char> in(r.dim() + 1, 0);
    for (int v : keep) in[v] = 1;
    SimplexRef cur = r;
    for (int a = r.dim(); a >= 0; --a)
      if (!in[a]) cur = face(cur, a);
    return cur;
  }

  /// Degenerate simplices are marked by definition; nondegenerate positive-
  /// dimensional ones carry the stored flag.
  bool ref_marked(const SimplexRef& r) const {
    if (r.degenerate()) return true;
    if (r.base_dim == 0) return false;
    return cells_[r.base_dim][r.base].marked;
  }

  /// Total number of m-simplices, degenerate ones included, reconstructed
  /// from the nondegenerate counts.
  std::uint64_t simplex_count_with_degeneracies(Dim m) const {
    std::uint64_t n = 0;
    for (Dim q = 0; q <= std::min(m, truncation_); ++q)
      n += static_cast<std::uint64_t>(count(q)) * binomial(m, q);
    return n;
  }

  /// All simplex references of dimension m (nondegenerate bases with every
  /// admissible degeneracy word), in a fixed deterministic order.
  std::vector<SimplexRef> refs_of_dim(Dim m) const {
    std::vector<SimplexRef> out;
    for (Dim q = std::min<Dim>(m, truncation_); q >= 0; --q) {
      int len = m - q;
      std::vector<int> sel(len);
      // descending words of length len with letters in [0, m-1]
      std::vector<DegeneracyWord> words;
      DegeneracyWord w;
      build_words(m - 1, len, w, words);
      for (CellId c = 0; c < count(q); ++c)
        for (const auto& dw : words) out.push_back(SimplexRef{dw, q, c});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every
  /// stored cell, plus reference well-formedness and marking hygiene.
  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    auto where = [](Dim d, CellId i) {
      std::ostringstream os;
      os << "cell " << d << ":" << i;
      return os.str();
    };
    for (Dim d = 0; d <= truncation_; ++d) {
      for (CellId i = 0; i < count(d); ++i) {
        const Cell& c = cells_[d][i];
        if (d == 0) {
          if (!c.faces.empty()) bad.push_back(where(d, i) + ": vertex with faces");
          continue;
        }
        if (static_cast<int>(c.faces.size()) != d + 1) {
          bad.push_back(where(d, i) + ": face count");
          continue;
        }
        bool refs_ok = true;
        for (int a = 0; a <= d; ++a) {
          const SimplexRef& f = c.faces[a];
          if (!f.word.descending() || f.base_dim < 0 ||
              f.base_dim > truncation_ || f.base < 0 ||
              f.base >= count(f.base_dim) || f.dim() != d - 1) {
            bad.push_back(where(d, i) + ": malformed face ref d_" +
                          std::to_string(a));
            refs_ok = false;
          }
        }
        if (!refs_ok) continue;
        SimplexRef self = nondeg_ref(d, i);
        if (d >= 2) {
          for (int j = 1; j <= d; ++j) {
            for (int a = 0; a < j; ++a) {
              SimplexRef lhs = face(face(self, j), a);
              SimplexRef rhs = face(face(self, a), j - 1);
              // d_a d_j = d_{j-1} d_a for a < j
              if (!(lhs == rhs))
                bad.push_back(where(d, i) + ": d_" + std::to_string(a) + " d_" +
                              std::to_string(j) + " mismatch");
            }
          }
        }
      }
    }
    for (const auto& [name, v] : basepoints_)
      if (v < 0 || v >= count(0))
        bad.push_back("basepoint " + name + ": missing vertex");
    return bad;
  }

  bool operator==(const MarkedSimplicialSet& o) const {
    if (truncation_ != o.truncation_ || basepoints_ != o.basepoints_)
      return false;
    for (Dim d = 0; d <= truncation_; ++d) {
      if (count(d) != o.count(d)) return false;
      for (CellId i = 0; i < count(d); ++i) {
        const Cell &a = cells_[d][i], &b = o.cells_[d][i];
        if (a.faces != b.faces || a.marked != b.marked || a.label != b.label)
          return false;
      }
    }
    return true;
  }

 private:
  static void build_words(int max_letter, int len, DegeneracyWord& acc,
                          std::vector<DegeneracyWord>& out) {
    if (len == 0) {
      out.push_back(acc);
      return;
    }
    // next letter strictly below the previous one, leaving room for the rest
    for (int l = max_letter; l >= len - 1; --l) {
      acc.letters.push_back(l);
      build_words(l - 1, len - 1, acc, out);
      acc.letters.pop_back();
    }
  }

  Dim truncation_;
  std::vector<std::vector<Cell>> cells_;
  std::map<std::string, CellId> basepoints_;
};

using MssPtr = std::shared_ptr<const MarkedSimplicialSet>;

/// Marking-preserving simplicial map, stored on nondegenerate source cells.
struct SimplicialMap {
  MssPtr source;
  MssPtr target;
  std::vector<std::vector<SimplexRef>> assign;  // [dim][cell] -> target ref

  const SimplexRef& at(Dim d, CellId c) const { return assign[d][c]; }

  /// Image of an arbitrary source reference.
  SimplexRef push(const SimplexRef& r) const {
    return apply_word(r.word, assign[r.base_dim][r.base]);
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> bad;
    const auto& S = *source;
    const auto& T = *target;
    if (static_cast<int>(assign.size()) != S.truncation() + 1) {
      bad.push_back("assignment dimension table size");
      return bad;
    }
    for (Dim d = 0; d <= S.truncation(); ++d) {
      if (static_cast<int>(assign[d].size()) != S.count(d)) {
        bad.push_back("assignment size at dim " + std::to_string(d));
        continue;
      }
      for (CellId c = 0; c < S.count(d); ++c) {
        const SimplexRef& img = assign[d][c];
        if (img.dim() != d) {
          bad.push_back("dimension mismatch at " + std::to_string(d) + ":" +
                        std::to_string(c));
          continue;
        }
        for (int a = 0; a <= d && d >= 1; ++a) {
          SimplexRef lhs = T.face(img, a);
          SimplexRef rhs = push(S.face(nondeg_ref(d, c), a));
          if (!(lhs == rhs))
            bad.push_back("face compatibility fails at " + std::to_string(d) +
                          ":" + std::to_string(c) + " d_" + std::to_string(a));
        }
        if (d >= 1 && S.cell(d, c).marked && !T.ref_marked(img))
          bad.push_back("marking lost at " + std::to_string(d) + ":" +
                        std::to_string(c));
      }
    }
    return bad;
  }

  /// Injective on nondegenerate cells with nondegenerate images, i.e. a
  /// monomorphism of simplicial sets.
  bool mono() const {
    for (Dim d = 0; d <= source->truncation(); ++d) {
      std::vector<SimplexRef> seen;
      for (CellId c = 0; c < source->count(d); ++c) {
        const SimplexRef& img = assign[d][c];
        if (img.degenerate()) return false;
        seen.push_back(img);
      }
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        return false;
    }
    return true;
  }
};

/// g after f; source of g must be the target of f (same cell structure).
inline SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap m;
  m.source = f.source;
  m.target = g.target;
  m.assign.resize(f.assign.size());
  for (size_t d = 0; d < f.assign.size(); ++d)
    for (const SimplexRef& r : f.assign[d]) m.assign[d].push_back(g.push(r));
  return m;
}

inline bool same_assignment(const SimplicialMap& a, const SimplicialMap& b) {
  return a.assign == b.assign;
}

inline SimplicialMap identity_map(const MssPtr& x) {
  SimplicialMap m;
  m.source = x;
  m.target = x;
  m.assign.resize(x->truncation() + 1);
  for (Dim d = 0; d <= x->truncation(); ++d)
    for (CellId c = 0; c < x->count(d); ++c)
      m.assign[d].push_back(nondeg_ref(d, c));
  return m;
}

/// Forgets the marking: every nondegenerate flag is cleared.
inline MarkedSimplicialSet strip_marking(const MarkedSimplicialSet& x) {
  MarkedSimplicialSet out = x;
  for (Dim d = 1; d <= out.truncation(); ++d)
    for (CellId c = 0; c < out.count(d); ++c) out.cell_mut(d, c).marked = false;
  return out;
}

/// Discards all cells above dimension d.
inline MarkedSimplicialSet truncate(const MarkedSimplicialSet& x, Dim d) {
  if (d > x.truncation())
    throw std::invalid_argument("truncate: above current truncation");
  MarkedSimplicialSet out(d);
  for (Dim q = 0; q <= d; ++q)
    for (CellId c = 0; c < x.count(q); ++c) {
      const auto& cell = x.cell(q, c);
      if (q == 0)
        out.add_vertex(cell.label);
      else
        out.add_cell(q, cell.faces, cell.marked, cell.label);
    }
  for (const auto& [name, v] : x.basepoints()) out.set_basepoint(name, v);
  return out;
}

}  // namespace complicial

#endif
