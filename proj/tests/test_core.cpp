#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "support.hpp"

using namespace complicial;
using testsupport::gen;

namespace {

std::vector<int> vertex_tuple(const MarkedSimplicialSet& X, const SimplexRef& r) {
  std::vector<int> vs;
  for (int s = 0; s <= r.dim(); ++s) vs.push_back(X.vertex(r, s));
  return vs;
}

}  // namespace

TEST_CASE("degeneracy word normal forms") {
  DegeneracyWord e;
  CHECK(insert_degeneracy(e, 0).letters == std::vector<int>{0});
  // s_0 s_0 = s_1 s_0
  auto w = insert_degeneracy(insert_degeneracy(e, 0), 0);
  CHECK(w.letters == std::vector<int>{1, 0});
  // s_0 s_1 = s_2 s_0
  auto v = insert_degeneracy(insert_degeneracy(e, 1), 0);
  CHECK(v.letters == std::vector<int>{2, 0});
  CHECK(compose_words(w, v).descending());
  CHECK(point_degeneracy(0, 4).word.letters == std::vector<int>({3, 2, 1, 0}));
}

TEST_CASE("face and degeneracy calculus matches the vertex model on a simplex") {
  // In Delta[4] every simplex is determined by its vertex tuple, so the whole
  // reference calculus can be checked against plain tuple operations.
  auto X = make_generator(GeneratorShape::standard(4), 4);
  for (Dim p = 0; p <= 4; ++p) {
    auto refs = X.refs_of_dim(p);
    // count of monotone maps [p] -> [4]
    CHECK(refs.size() == binomial(p + 5, p + 1));
    CHECK(refs.size() == X.simplex_count_with_degeneracies(p));
    std::set<std::vector<int>> tuples;
    for (const auto& r : refs) {
      auto t = vertex_tuple(X, r);
      CHECK(std::is_sorted(t.begin(), t.end()));
      tuples.insert(t);
      if (p >= 1) {
        for (int a = 0; a <= p; ++a) {
          auto f = vertex_tuple(X, X.face(r, a));
          auto expect = t;
          expect.erase(expect.begin() + a);
          CHECK(f == expect);
        }
        for (int i = 0; i < p; ++i) {
          auto s = vertex_tuple(X, X.degenerate(r, i));
          auto expect = t;
          expect.insert(expect.begin() + i, t[i]);
          CHECK(s == expect);
        }
      }
    }
    CHECK(tuples.size() == refs.size());  // normal forms are unique
  }
}

TEST_CASE("standard simplex generator") {
  auto d2 = make_generator(GeneratorShape::standard(2), 4);
  CHECK(d2.count(0) == 3);
  CHECK(d2.count(1) == 3);
  CHECK(d2.count(2) == 1);
  CHECK(d2.count(3) == 0);
  for (Dim d = 1; d <= 2; ++d)
    for (CellId c = 0; c < d2.count(d); ++c) CHECK_FALSE(d2.cell(d, c).marked);
  CHECK(d2.validate().empty());
  CHECK_THROWS_AS(make_generator(GeneratorShape::standard(3), 2),
                  std::invalid_argument);
}

TEST_CASE("complicial simplex markings") {
  auto c = make_generator(GeneratorShape::complicial(2, 1), 2);
  int marked = 0;
  for (Dim d = 1; d <= 2; ++d)
    for (CellId i = 0; i < c.count(d); ++i)
      if (c.cell(d, i).marked) ++marked;
  CHECK(marked == 1);
  CHECK(c.cell(2, 0).marked);

  // Delta^1[3]: marked cells are those containing {0,1,2}
  auto c3 = make_generator(GeneratorShape::complicial(3, 1), 3);
  std::vector<std::string> marked_labels;
  for (Dim d = 1; d <= 3; ++d)
    for (CellId i = 0; i < c3.count(d); ++i)
      if (c3.cell(d, i).marked) marked_labels.push_back(c3.cell(d, i).label);
  CHECK(marked_labels == std::vector<std::string>{"0.1.2", "0.1.2.3"});

  auto p3 = make_generator(GeneratorShape::complicial_prime(3, 1), 3);
  marked_labels.clear();
  for (CellId i = 0; i < p3.count(2); ++i)
    if (p3.cell(2, i).marked) marked_labels.push_back(p3.cell(2, i).label);
  CHECK(marked_labels == std::vector<std::string>{"0.1.2", "0.1.3", "1.2.3"});

  auto pp3 = make_generator(GeneratorShape::complicial_double_prime(3, 1), 3);
  int marked2 = 0;
  for (CellId i = 0; i < pp3.count(2); ++i)
    if (pp3.cell(2, i).marked) ++marked2;
  CHECK(marked2 == 4);

  CHECK_THROWS_AS(make_generator(GeneratorShape::complicial(2, 3), 4),
                  std::invalid_argument);
}

TEST_CASE("horns are regular subobjects of the complicial simplex") {
  auto h = make_generator(GeneratorShape::horn(3, 1), 3);
  CHECK(h.count(3) == 0);
  CHECK(h.count(2) == 3);  // missing face 0.2.3
  for (CellId i = 0; i < h.count(2); ++i)
    CHECK(h.cell(2, i).label != "0.2.3");
  int hm = 0;
  for (Dim d = 1; d <= 2; ++d)
    for (CellId i = 0; i < h.count(d); ++i)
      if (h.cell(d, i).marked) ++hm;
  CHECK(hm == 1);  // only 0.1.2 among horn cells
  CHECK(h.validate().empty());

  CHECK_THROWS_AS(make_generator(GeneratorShape::horn_prime(3, 0), 3),
                  std::invalid_argument);
}

TEST_CASE("three-simplex marking variants") {
  auto eq = make_generator(GeneratorShape::three_eq(), 3);
  int e1 = 0, e2 = 0, e3 = 0;
  std::vector<std::string> edges;
  for (CellId i = 0; i < eq.count(1); ++i)
    if (eq.cell(1, i).marked) {
      ++e1;
      edges.push_back(eq.cell(1, i).label);
    }
  for (CellId i = 0; i < eq.count(2); ++i)
    if (eq.cell(2, i).marked) ++e2;
  for (CellId i = 0; i < eq.count(3); ++i)
    if (eq.cell(3, i).marked) ++e3;
  CHECK(e1 == 2);
  CHECK(edges == std::vector<std::string>{"0.2", "1.3"});
  CHECK(e2 == 4);
  CHECK(e3 == 1);

  auto sharp = make_generator(GeneratorShape::three_sharp(), 3);
  for (Dim d = 1; d <= 3; ++d)
    for (CellId i = 0; i < sharp.count(d); ++i) CHECK(sharp.cell(d, i).marked);
}

TEST_CASE("validate flags corrupted identities") {
  auto d2 = make_generator(GeneratorShape::standard(2), 2);
  CHECK(d2.validate().empty());
  auto bad = d2;
  // swap two faces of the triangle so d_i d_j identities break
  auto& cell = bad.cell_mut(2, 0);
  std::swap(cell.faces[0], cell.faces[2]);
  CHECK_FALSE(bad.validate().empty());
}

TEST_CASE("truncate") {
  auto d3 = make_generator(GeneratorShape::standard(3), 3);
  auto t1 = truncate(d3, 1);
  CHECK(t1.count(0) == 4);
  CHECK(t1.count(1) == 6);
  CHECK(t1.truncation() == 1);
  CHECK(truncate(d3, 3) == d3);
  CHECK_THROWS_AS(truncate(d3, 4), std::invalid_argument);
}

TEST_CASE("empty generator") {
  auto e = make_generator(GeneratorShape::empty(), 3);
  CHECK(e.empty());
  CHECK(e.validate().empty());
}
