#ifndef COMPLICIAL_COMPARISONS_HPP
#define COMPLICIAL_COMPARISONS_HPP

#include "complicial/matrix.hpp"
#include "complicial/nerve.hpp"

namespace complicial {

namespace detail {

/// Local hom-object index in as_2category(P) -> morphism index in P.
/// Relies on as_2category enumerating each hom's objects in morphism-index
/// order.
inline int hom_object_to_base_mor(const FinCategory& P, int a, int b,
                                  int local) {
  int seen = 0;
  for (size_t f = 0; f < P.mors.size(); ++f)
    if (P.mors[f].src == a && P.mors[f].tgt == b) {
      if (seen == local) return static_cast<int>(f);
      ++seen;
    }
  throw std::logic_error("hom_object_to_base_mor: index out of range");
}

}  // namespace detail

/// The inclusion of the suspension of the nerve into the nerve of the
/// suspension, in matrix coordinates: a nondegenerate m-simplex of the nerve
/// of P becomes the single-column grid of its chain.
struct SuspComparison {
  std::shared_ptr<const FinCategory> base;
  DuskinNerve nerve;       // of P, truncated one below
  MssPtr source;           // suspend(nerve.complex)
  MatrixModel target;      // matrix_model(P)
  SimplicialMap comparison;
};

inline SuspComparison susp_comparison(std::shared_ptr<const FinCategory> P,
                                      MarkingPolicy policy, Dim d_max) {
  if (d_max < 1)
    throw std::invalid_argument("susp_comparison: need d_max >= 1");
  SuspComparison out;
  out.base = P;
  auto P2 = std::make_shared<Fin2Category>(as_2category(*P));
  out.nerve = duskin_nerve(P2, policy, d_max - 1);
  out.source = std::make_shared<MarkedSimplicialSet>(suspend(*out.nerve.complex));
  out.target = matrix_model(P, policy, d_max);

  SimplicialMap& cmp = out.comparison;
  cmp.source = out.source;
  cmp.target = out.target.complex;
  cmp.assign.resize(out.source->truncation() + 1);
  cmp.assign[0] = {nondeg_ref(0, out.target.bot), nondeg_ref(0, out.target.top)};
  for (Dim m = 1; m <= out.source->truncation(); ++m) {
    for (CellId c = 0; c < out.source->count(m); ++c) {
      const DuskinSimplex& chain = out.nerve.cells[m - 1][c];
      GridSimplex g;
      g.rows = m;
      g.cols = 1;
      for (int i = 0; i < m; ++i) g.entry.push_back(chain.vx[i]);
      for (int i = 0; i + 1 < m; ++i)
        g.ver.push_back(detail::hom_object_to_base_mor(
            *P, chain.vx[i], chain.vx[i + 1],
            detail::duskin_edge(*P2, chain, i, i + 1)));
      SimplexRef r = out.target.ref_of(g);
      if (r.degenerate())
        throw std::logic_error("susp_comparison: comparison image degenerate");
      cmp.assign[m].push_back(r);
    }
  }
  return out;
}

/// The nerve of a wedge in pair coordinates, with the comparison inclusion
/// from the wedge of the nerves.
struct WedgeNervePairs {
  WedgePresentation pres;
  DuskinNerve nerve_left, nerve_right;
  std::vector<int> chi_left, chi_right;  // chi per object / 0-cell
  PairModel pairs;
  MssPtr wedge_of_nerves;
  SimplicialMap comparison;  // wedge_of_nerves -> pairs.complex
};

inline WedgeNervePairs wedge_nerve_pairs(const WedgePresentation& w,
                                         MarkingPolicy policy, Dim d_max,
                                         bool cross_check = true) {
  WedgeNervePairs out;
  out.pres = w;
  out.nerve_left = duskin_nerve(w.left, policy, d_max);
  out.nerve_right = duskin_nerve(w.right, policy, d_max);
  out.chi_left = w.chi_left.obj;
  out.chi_right = w.chi_right.obj;

  const auto& chiL = out.chi_left;
  const auto& chiR = out.chi_right;
  out.pairs = product_filtered(
      out.nerve_left.complex, out.nerve_right.complex,
      [&](const MarkedSimplicialSet& L, const SimplexRef& rl,
          const MarkedSimplicialSet& R, const SimplexRef& rr) {
        for (int s = 0; s <= rl.dim(); ++s)
          if (chiL[L.vertex(rl, s)] < chiR[R.vertex(rr, s)]) return false;
        return true;
      });
  std::const_pointer_cast<MarkedSimplicialSet>(out.pairs.complex)
      ->set_basepoint("wedge",
                      out.pairs.cell_of({nondeg_ref(0, w.cosieve_obj),
                                         nondeg_ref(0, w.sieve_obj)},
                                        0));

  // comparison from the simplicial wedge of the nerves
  auto glued = wedge_ss(out.nerve_left.complex, w.cosieve_obj,
                        out.nerve_right.complex, w.sieve_obj);
  out.wedge_of_nerves = glued.complex;
  SimplicialMap& cmp = out.comparison;
  cmp.source = out.wedge_of_nerves;
  cmp.target = out.pairs.complex;
  cmp.assign.resize(out.wedge_of_nerves->truncation() + 1);
  for (Dim d = 0; d <= out.wedge_of_nerves->truncation(); ++d)
    cmp.assign[d].resize(out.wedge_of_nerves->count(d));
  for (Dim d = 0; d <= d_max; ++d) {
    for (CellId c = 0; c < out.nerve_right.complex->count(d); ++c) {
      SimplexRef pair_ref{{},
                          d,
                          out.pairs.cell_of({point_degeneracy(w.cosieve_obj, d),
                                             nondeg_ref(d, c)},
                                            d)};
      cmp.assign[d][glued.from_y.at(d, c).base] = pair_ref;
    }
    for (CellId c = 0; c < out.nerve_left.complex->count(d); ++c) {
      SimplexRef pair_ref{{},
                          d,
                          out.pairs.cell_of({nondeg_ref(d, c),
                                             point_degeneracy(w.sieve_obj, d)},
                                            d)};
      cmp.assign[d][glued.from_x.at(d, c).base] = pair_ref;
    }
  }

  if (cross_check) {
    auto wres = wedge2(w);
    auto wcat = std::make_shared<Fin2Category>(std::move(wres.wedge));
    auto direct = duskin_nerve(wcat, policy, d_max);
    if (!find_isomorphism(out.pairs.complex, direct.complex).has_value())
      throw std::logic_error(
          "wedge_nerve_pairs: pair model disagrees with the nerve of the "
          "wedge 2-category");
  }
  return out;
}

}  // namespace complicial

#endif
