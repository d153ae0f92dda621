#include <catch2/catch_amalgamated.hpp>

#include "complicial/comparisons.hpp"
#include "complicial/lifting.hpp"
#include "support.hpp"

using namespace complicial;
using testsupport::gen;
using testsupport::inclusion_by_labels;

namespace {

Fin2Ptr share2(Fin2Category c) {
  return std::make_shared<Fin2Category>(std::move(c));
}

std::shared_ptr<const FinCategory> share1(FinCategory c) {
  return std::make_shared<FinCategory>(std::move(c));
}

int marked_count(const MarkedSimplicialSet& X, Dim d) {
  int n = 0;
  for (CellId c = 0; c < X.count(d); ++c)
    if (X.cell(d, c).marked) ++n;
  return n;
}

}  // namespace

TEST_CASE("nerve of a poset interval") {
  auto N = duskin_nerve(share2(as_2category(interval_category(1))),
                        MarkingPolicy::roberts_street, 4);
  const auto& X = *N.complex;
  CHECK(X.validate().empty());
  CHECK(X.count(0) == 2);
  CHECK(X.count(1) == 1);
  CHECK(X.count(2) == 0);
  CHECK(X.count(3) == 0);
  CHECK(marked_count(X, 1) == 0);
  CHECK(isomorphic(truncate(X, 1), make_generator(GeneratorShape::standard(1), 1)));
}

TEST_CASE("nerve of a chain poset matches the standard simplex") {
  auto N = duskin_nerve(share2(as_2category(interval_category(2))),
                        MarkingPolicy::roberts_street, 3);
  CHECK(isomorphic(strip_marking(truncate(*N.complex, 2)),
                   make_generator(GeneratorShape::standard(2), 2)));
  // all 2-simplices of a poset nerve are strictly commuting, hence marked
  CHECK(marked_count(*N.complex, 2) == N.complex->count(2));
}

TEST_CASE("nerve of a suspension: 2-simplices") {
  auto N = duskin_nerve(share2(suspend2(interval_category(1))),
                        MarkingPolicy::roberts_street, 2);
  CHECK(N.complex->count(2) == 2);
  CHECK(N.complex->validate().empty());
  // neither is marked: their fillers are non-identity 2-cells
  CHECK(marked_count(*N.complex, 2) == 0);
}

TEST_CASE("matrix model of the interval") {
  auto M = matrix_model(share1(interval_category(1)),
                        MarkingPolicy::roberts_street, 6);
  const auto& X = *M.complex;
  CHECK(X.validate().empty());
  for (Dim d = 0; d <= 6; ++d) CHECK(X.count(d) == 2);
  for (Dim d = 1; d <= 2; ++d) CHECK(marked_count(X, d) == 0);
  for (Dim d = 3; d <= 6; ++d) CHECK(marked_count(X, d) == X.count(d));
  CHECK(X.basepoint("bot") == 0);
  CHECK(X.basepoint("top") == 1);
}

TEST_CASE("matrix model matches the nerve of the suspension") {
  for (auto P : {share1(interval_category(0)), share1(interval_category(1)),
                 share1(walking_iso_category())}) {
    auto M = matrix_model(P, MarkingPolicy::roberts_street, 4);
    auto N = duskin_nerve(share2(suspend2(*P)),
                          MarkingPolicy::roberts_street, 4);
    auto iso = find_isomorphism(M.complex, N.complex);
    REQUIRE(iso.has_value());
    CHECK(iso->validate().empty());
    // exact marked counts per dimension
    for (Dim d = 1; d <= 4; ++d)
      CHECK(marked_count(*M.complex, d) == marked_count(*N.complex, d));
  }
  // the natural marking agrees as well
  auto P = share1(walking_iso_category());
  auto M = matrix_model(P, MarkingPolicy::natural, 3);
  auto N = duskin_nerve(share2(suspend2(*P)), MarkingPolicy::natural, 3);
  REQUIRE(find_isomorphism(M.complex, N.complex).has_value());
  CHECK(marked_count(*M.complex, 2) == marked_count(*N.complex, 2));
  CHECK(marked_count(*M.complex, 2) > 0);
}

TEST_CASE("matrix model with parallel morphisms in the base") {
  // a base category with two parallel arrows gives hom-categories with
  // parallel 2-cells, so fillers over a fixed boundary are not unique
  FinCategoryBuilder b(2);
  int i0 = b.add_mor(0, 0, "id0");
  int i1 = b.add_mor(1, 1, "id1");
  b.add_mor(0, 1, "f");
  b.add_mor(0, 1, "g");
  b.set_identities({i0, i1});
  b.raw().obj_labels = {"0", "1"};
  auto& mors = b.raw().mors;
  auto P = share1(b.finish([&mors, i0, i1](int x, int y) {
    if (mors[x].src == mors[x].tgt) return y;  // identity then y
    return x;                                  // x then identity
  }));
  REQUIRE(P->validate().empty());

  auto M = matrix_model(P, MarkingPolicy::roberts_street, 4);
  CHECK(M.complex->validate().empty());
  auto N = duskin_nerve(share2(suspend2(*P)), MarkingPolicy::roberts_street, 4);
  auto iso = find_isomorphism(M.complex, N.complex);
  REQUIRE(iso.has_value());
  CHECK(iso->validate().empty());
  // two nondegenerate 1-simplices across the poles, both unmarked
  CHECK(M.complex->count(1) == 2);
  CHECK(marked_count(*M.complex, 1) == 0);
}

TEST_CASE("three-coskeletality: boundaries of dimension >= 4 fill uniquely") {
  auto M = matrix_model(share1(interval_category(1)),
                        MarkingPolicy::street, 5);
  for (Dim m : {4, 5}) {
    auto full = gen(GeneratorShape::standard(m), m);
    std::vector<std::pair<Dim, CellId>> seeds;
    for (CellId c = 0; c < full->count(m - 1); ++c) seeds.push_back({m - 1, c});
    auto [bd, inc] = spanned_subcomplex(full, seeds);
    detail::RefTable table(*M.complex);
    auto boundary_maps = enumerate_maps(bd, M.complex);
    CHECK(!boundary_maps.empty());
    for (const auto& f : boundary_maps)
      CHECK(count_extensions(inc, f, table) == 1);
  }
}

TEST_CASE("roberts-street marking sits inside the natural marking") {
  for (auto D : {share2(suspend2(interval_category(1))),
                 share2(as_2category(walking_iso_category())),
                 share2(theta2(2, {1, 0}))}) {
    auto rs = duskin_nerve(D, MarkingPolicy::roberts_street, 3);
    auto nat = duskin_nerve(D, MarkingPolicy::natural, 3);
    for (Dim d = 0; d <= 3; ++d) {
      REQUIRE(rs.complex->count(d) == nat.complex->count(d));
      for (CellId c = 0; c < rs.complex->count(d); ++c) {
        if (d >= 1 && rs.complex->cell(d, c).marked)
          CHECK(nat.complex->cell(d, c).marked);
        CHECK(rs.complex->cell(d, c).faces == nat.complex->cell(d, c).faces);
      }
    }
  }
}

TEST_CASE("the nerve preserves finite products") {
  auto A = share2(as_2category(interval_category(1)));
  auto B = share2(suspend2(interval_category(0)));
  auto AB = share2(product2(*A, *B));
  auto N_AB = duskin_nerve(AB, MarkingPolicy::roberts_street, 3);
  auto NA = duskin_nerve(A, MarkingPolicy::roberts_street, 3);
  auto NB = duskin_nerve(B, MarkingPolicy::roberts_street, 3);
  auto prod = product_model(NA.complex, NB.complex);
  auto iso = find_isomorphism(N_AB.complex, prod.complex);
  REQUIRE(iso.has_value());
  CHECK(iso->validate().empty());
}

TEST_CASE("suspension comparison for the point is an isomorphism") {
  auto cmp = susp_comparison(share1(interval_category(0)),
                             MarkingPolicy::roberts_street, 4);
  CHECK(cmp.comparison.validate().empty());
  CHECK(cmp.comparison.mono());
  // both sides are the interval: every cell is in the image
  for (Dim d = 0; d <= 4; ++d)
    CHECK(cmp.source->count(d) == cmp.target.complex->count(d));
}

TEST_CASE("suspension comparison is a regular mono") {
  auto cmp = susp_comparison(share1(interval_category(1)),
                             MarkingPolicy::roberts_street, 5);
  CHECK(cmp.comparison.validate().empty());
  CHECK(cmp.comparison.mono());
  const auto& S = *cmp.source;
  const auto& T = *cmp.target.complex;
  for (Dim d = 1; d <= 5; ++d)
    for (CellId c = 0; c < S.count(d); ++c) {
      const SimplexRef& img = cmp.comparison.at(d, c);
      CHECK(S.cell(d, c).marked == T.cell(img.base_dim, img.base).marked);
      // images are the single-column grids
      CHECK(cmp.target.cells[d][img.base].cols == 1);
    }
}

TEST_CASE("inner horn extension against small nerves") {
  auto horn = gen(GeneratorShape::horn(2, 1), 2);
  auto delta = gen(GeneratorShape::complicial(2, 1), 2);
  auto i = inclusion_by_labels(horn, delta);
  auto N1 = duskin_nerve(share2(as_2category(interval_category(1))),
                         MarkingPolicy::roberts_street, 2);
  CHECK(has_extension(i, N1.complex));
  auto M = matrix_model(share1(interval_category(1)),
                        MarkingPolicy::roberts_street, 2);
  CHECK(has_extension(i, M.complex));
}

TEST_CASE("nerves lift against the elementary inner anodyne shapes") {
  // the nerve of a strict 2-category should admit fillers for the inner
  // complicial horns and extend along the thinness re-markings
  auto M = matrix_model(share1(interval_category(1)),
                        MarkingPolicy::roberts_street, 3);
  auto MI = matrix_model(share1(walking_iso_category()),
                         MarkingPolicy::roberts_street, 3);
  for (auto [m, k] :
       std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}}) {
    auto horn = gen(GeneratorShape::horn(m, k), m);
    auto delta = gen(GeneratorShape::complicial(m, k), m);
    auto i = inclusion_by_labels(horn, delta);
    CHECK(has_extension(i, M.complex));
    CHECK(has_extension(i, MI.complex));
    auto dp = gen(GeneratorShape::complicial_prime(m, k), m);
    auto dpp = gen(GeneratorShape::complicial_double_prime(m, k), m);
    CHECK(has_extension(inclusion_by_labels(dp, dpp), M.complex));
  }
}

TEST_CASE("wedge nerve in pair coordinates") {
  auto left = share2(suspend2(interval_category(0)));
  auto right = share2(suspend2(interval_category(0)));
  auto pres = make_wedge_presentation(left, 1, right, 0);
  // the cross-check against the nerve of the glued 2-category is built in
  auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 3);
  CHECK(W.pairs.complex->validate().empty());
  CHECK(W.comparison.validate().empty());
  CHECK(W.comparison.mono());
  // N[2]: counts 3 / 3 / 1 / 0
  CHECK(W.pairs.complex->count(0) == 3);
  CHECK(W.pairs.complex->count(1) == 3);
  CHECK(W.pairs.complex->count(2) == 1);
  CHECK(W.pairs.complex->count(3) == 0);
  // the comparison image misses exactly the long edge and the triangle
  int image_cells = 0;
  for (Dim d = 0; d <= 3; ++d) image_cells += W.wedge_of_nerves->count(d);
  CHECK(image_cells == 3 + 2);

  // marking: both coordinates must be marked
  for (Dim d = 1; d <= 3; ++d)
    for (CellId c = 0; c < W.pairs.complex->count(d); ++c) {
      auto [rl, rr] = W.pairs.coords[d][c];
      CHECK(W.pairs.complex->cell(d, c).marked ==
            (W.nerve_left.complex->ref_marked(rl) &&
             W.nerve_right.complex->ref_marked(rr)));
    }
}

TEST_CASE("wedge nerve pairs embed regularly into the product of nerves") {
  auto left = share2(suspend2(interval_category(1)));
  auto right = share2(suspend2(interval_category(0)));
  auto pres = make_wedge_presentation(left, 1, right, 0);
  auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 3);
  auto prod = product_model(W.nerve_left.complex, W.nerve_right.complex);
  // every pair cell exists in the product with the same marking, and the
  // pairs are exactly those satisfying the chi condition
  for (Dim d = 0; d <= 3; ++d) {
    for (CellId c = 0; c < W.pairs.complex->count(d); ++c) {
      auto pr = W.pairs.coords[d][c];
      CellId p = prod.cell_of(pr, d);
      if (d >= 1)
        CHECK(W.pairs.complex->cell(d, c).marked ==
              prod.complex->cell(d, p).marked);
    }
    int chi_ok = 0;
    for (CellId p = 0; p < prod.complex->count(d); ++p) {
      auto [rl, rr] = prod.coords[d][p];
      bool ok = true;
      for (int s = 0; s <= d && ok; ++s)
        if (W.chi_left[W.nerve_left.complex->vertex(rl, s)] <
            W.chi_right[W.nerve_right.complex->vertex(rr, s)])
          ok = false;
      if (ok) ++chi_ok;
    }
    CHECK(chi_ok == W.pairs.complex->count(d));
  }
}

TEST_CASE("pair condition: a vertex over the cosieve side dominates") {
  auto left = share2(suspend2(interval_category(0)));
  auto right = share2(suspend2(interval_category(1)));
  auto pres = make_wedge_presentation(left, 1, right, 0);
  auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 2);
  // (cosieve vertex, anything) is always allowed: count the vertex pairs
  int with_top = 0;
  for (CellId c = 0; c < W.pairs.complex->count(0); ++c) {
    auto [rl, rr] = W.pairs.coords[0][c];
    if (rl.base == pres.cosieve_obj) ++with_top;
  }
  CHECK(with_top == W.nerve_right.complex->count(0));
}
