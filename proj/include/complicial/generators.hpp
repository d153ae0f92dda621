#ifndef COMPLICIAL_GENERATORS_HPP
#define COMPLICIAL_GENERATORS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "complicial/msset.hpp"

namespace complicial {

/// The named marked simplicial sets the anodyne machinery is generated by.
struct GeneratorShape {
  enum class Tag {
    Empty,                   // Delta[-1]
    Standard,                // Delta[m]
    Top,                     // Delta[m]_t
    Complicial,              // Delta^k[m]
    ComplicialPrime,         // Delta^k[m]'
    ComplicialDoublePrime,   // Delta^k[m]''
    Horn,                    // Lambda^k[m], regular in Delta^k[m]
    HornPrime,               // Lambda^k[m]', regular in Delta^k[m]'
    ThreeEq,                 // Delta[3]_eq
    ThreeSharp,              // Delta[3]^sharp
  };
  Tag tag = Tag::Standard;
  int m = 0;
  int k = 0;

  static GeneratorShape empty() { return {Tag::Empty, -1, 0}; }
  static GeneratorShape standard(int m) { return {Tag::Standard, m, 0}; }
  static GeneratorShape top(int m) { return {Tag::Top, m, 0}; }
  static GeneratorShape complicial(int m, int k) { return {Tag::Complicial, m, k}; }
  static GeneratorShape complicial_prime(int m, int k) {
    return {Tag::ComplicialPrime, m, k};
  }
  static GeneratorShape complicial_double_prime(int m, int k) {
    return {Tag::ComplicialDoublePrime, m, k};
  }
  static GeneratorShape horn(int m, int k) { return {Tag::Horn, m, k}; }
  static GeneratorShape horn_prime(int m, int k) { return {Tag::HornPrime, m, k}; }
  static GeneratorShape three_eq() { return {Tag::ThreeEq, 3, 0}; }
  static GeneratorShape three_sharp() { return {Tag::ThreeSharp, 3, 0}; }
};

namespace detail {

inline std::string vertex_list_label(const std::vector<int>& vs) {
  std::string s;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(vs[i]);
  }
  return s;
}

inline unsigned vertex_label_mask(const std::string& lab) {
  unsigned mask = 0;
  size_t pos = 0;
  while (pos < lab.size()) {
    size_t next = lab.find('.', pos);
    if (next == std::string::npos) next = lab.size();
    mask |= 1u << std::stoi(lab.substr(pos, next - pos));
    pos = next + 1;
  }
  return mask;
}

/// Builds the complex spanned by a set of vertex subsets of [m] (each subset
/// closed under passing to sub-subsets). Cells are indexed per dimension in
/// lexicographic vertex order, which the certificate format relies on.
class SimplexComplexBuilder {
 public:
  explicit SimplexComplexBuilder(int m) : m_(m) {}

  void include_all_subsets() {
    for (unsigned mask = 1; mask < (1u << (m_ + 1)); ++mask) include(mask);
  }

  void include(unsigned mask) { wanted_.push_back(mask); }
  void exclude(unsigned mask) {
    excluded_.push_back(mask);
  }

  MarkedSimplicialSet build(Dim truncation) {
    std::sort(wanted_.begin(), wanted_.end());
    wanted_.erase(std::unique(wanted_.begin(), wanted_.end()), wanted_.end());
    std::vector<std::vector<unsigned>> by_dim(m_ + 1);
    for (unsigned mask : wanted_) {
      if (std::find(excluded_.begin(), excluded_.end(), mask) != excluded_.end())
        continue;
      by_dim[__builtin_popcount(mask) - 1].push_back(mask);
    }
    for (auto& v : by_dim) {
      std::sort(v.begin(), v.end(), [this](unsigned a, unsigned b) {
        return vertices_of(a) < vertices_of(b);
      });
    }
    MarkedSimplicialSet out(truncation);
    std::vector<std::map<unsigned, CellId>> index(m_ + 1);
    for (int d = 0; d <= m_ && d <= truncation; ++d) {
      for (unsigned mask : by_dim[d]) {
        auto vs = vertices_of(mask);
        if (d == 0) {
          index[0][mask] = out.add_vertex(vertex_list_label(vs));
          continue;
        }
        std::vector<SimplexRef> faces;
        for (int a = 0; a <= d; ++a) {
          unsigned fmask = mask & ~(1u << vs[a]);
          auto it = index[d - 1].find(fmask);
          if (it == index[d - 1].end())
            throw std::logic_error("simplex complex not closed under faces");
          faces.push_back(nondeg_ref(d - 1, it->second));
        }
        index[d][mask] = out.add_cell(d, std::move(faces), false,
                                      vertex_list_label(vs));
      }
    }
    mask_index_ = std::move(index);
    return out;
  }

  CellId id_of(unsigned mask) const {
    int d = __builtin_popcount(mask) - 1;
    return mask_index_[d].at(mask);
  }

  static std::vector<int> vertices_of(unsigned mask) {
    std::vector<int> vs;
    for (int v = 0; v < 32; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    return vs;
  }

 private:
  int m_;
  std::vector<unsigned> wanted_;
  std::vector<unsigned> excluded_;
  std::vector<std::map<unsigned, CellId>> mask_index_;
};

}  // namespace detail

inline MarkedSimplicialSet make_generator(const GeneratorShape& shape,
                                          Dim truncation) {
  using Tag = GeneratorShape::Tag;
  const int m = shape.m;
  const int k = shape.k;

  if (shape.tag == Tag::Empty) return MarkedSimplicialSet(std::max(truncation, 0));
  if (m < 0) throw std::invalid_argument("make_generator: negative dimension");
  if (truncation < m)
    throw std::invalid_argument("make_generator: truncation below shape dimension");

  bool is_complicial = shape.tag == Tag::Complicial ||
                       shape.tag == Tag::ComplicialPrime ||
                       shape.tag == Tag::ComplicialDoublePrime ||
                       shape.tag == Tag::Horn || shape.tag == Tag::HornPrime;
  if (is_complicial && (k < 0 || k > m))
    throw std::invalid_argument("make_generator: need 0 <= k <= m");
  bool is_horn = shape.tag == Tag::Horn || shape.tag == Tag::HornPrime;
  if (shape.tag == Tag::HornPrime && !(0 < k && k < m))
    throw std::invalid_argument("make_generator: horn-prime requires an inner index");

  detail::SimplexComplexBuilder b(m);
  b.include_all_subsets();
  unsigned full = (1u << (m + 1)) - 1;
  if (is_horn) {
    b.exclude(full);
    b.exclude(full & ~(1u << k));
  }
  MarkedSimplicialSet out = b.build(truncation);

  auto mark_mask = [&](unsigned mask) {
    int d = __builtin_popcount(mask) - 1;
    if (d >= 1) out.cell_mut(d, b.id_of(mask)).marked = true;
  };
  auto present = [&](unsigned mask) {
    if (!is_horn) return true;
    return mask != full && mask != (full & ~(1u << k));
  };

  switch (shape.tag) {
    case Tag::Empty:
      break;
    case Tag::Standard:
      break;
    case Tag::Top:
      mark_mask(full);
      break;
    case Tag::Complicial:
    case Tag::ComplicialPrime:
    case Tag::ComplicialDoublePrime:
    case Tag::Horn:
    case Tag::HornPrime: {
      // a nondegenerate simplex is marked iff it contains {k-1,k,k+1} cap [m]
      unsigned core = 0;
      for (int v : {k - 1, k, k + 1})
        if (0 <= v && v <= m) core |= (1u << v);
      for (unsigned mask = 1; mask <= full; ++mask)
        if ((mask & core) == core && present(mask)) mark_mask(mask);
      if (shape.tag == Tag::ComplicialPrime ||
          shape.tag == Tag::ComplicialDoublePrime ||
          shape.tag == Tag::HornPrime) {
        if (k - 1 >= 0 && present(full & ~(1u << (k - 1))))
          mark_mask(full & ~(1u << (k - 1)));
        if (k + 1 <= m && present(full & ~(1u << (k + 1))))
          mark_mask(full & ~(1u << (k + 1)));
      }
      if (shape.tag == Tag::ComplicialDoublePrime) mark_mask(full & ~(1u << k));
      break;
    }
    case Tag::ThreeEq: {
      for (unsigned mask = 1; mask <= full; ++mask)
        if (__builtin_popcount(mask) >= 3) mark_mask(mask);
      mark_mask((1u << 0) | (1u << 2));  // [02]
      mark_mask((1u << 1) | (1u << 3));  // [13]
      break;
    }
    case Tag::ThreeSharp: {
      for (unsigned mask = 1; mask <= full; ++mask)
        if (__builtin_popcount(mask) >= 2) mark_mask(mask);
      break;
    }
  }
  return out;
}

/// Canonical cell numbering of generator complexes: for horn/simplex shapes
/// built above, the cell of a vertex subset is determined by lexicographic
/// order within its dimension. Used by the certificate format.
inline CellId generator_cell_of_vertices(const MarkedSimplicialSet& gen, Dim d,
                                         const std::vector<int>& vs) {
  std::string want = detail::vertex_list_label(vs);
  for (CellId c = 0; c < gen.count(d); ++c)
    if (gen.cell(d, c).label == want) return c;
  throw std::invalid_argument("generator cell not found: " + want);
}

/// A horn generator together with the vertex subsets of its cells, aligned
/// with the cell numbering. The attach tables of certificates are indexed by
/// these cells in (dimension, index) order.
struct HornShape {
  MarkedSimplicialSet complex;
  std::vector<std::vector<unsigned>> masks;           // per dim
  std::map<unsigned, std::pair<Dim, CellId>> by_mask;
};

inline HornShape make_horn_shape(int m, int k, bool primed) {
  HornShape out{make_generator(primed ? GeneratorShape::horn_prime(m, k)
                                      : GeneratorShape::horn(m, k),
                               m),
                {},
                {}};
  out.masks.resize(m + 1);
  for (Dim d = 0; d < m; ++d) {
    out.masks[d].resize(out.complex.count(d));
    for (CellId c = 0; c < out.complex.count(d); ++c) {
      unsigned mask = detail::vertex_label_mask(out.complex.cell(d, c).label);
      out.masks[d][c] = mask;
      out.by_mask[mask] = {d, c};
    }
  }
  return out;
}

}  // namespace complicial

#endif
