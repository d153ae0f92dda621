// Acceptance suite: runs every verification gate at full scale and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "complicial/anodyne.hpp"
#include "complicial/serialize.hpp"

using namespace complicial;

namespace {

struct Scorecard {
  int failures = 0;

  void run(int number, const std::string& title, double budget_seconds,
           const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << number << " " << title << " ("
         << elapsed << " s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
    if (!ok) ++failures;
  }
};

Fin2Ptr share2(Fin2Category c) {
  return std::make_shared<Fin2Category>(std::move(c));
}

std::shared_ptr<const FinCategory> share1(FinCategory c) {
  return std::make_shared<FinCategory>(std::move(c));
}

bool valid(const MarkedSimplicialSet& X, std::string& detail,
           const std::string& what) {
  auto bad = X.validate();
  if (bad.empty()) return true;
  detail = what + ": " + bad.front();
  return false;
}

int marked_count(const MarkedSimplicialSet& X, Dim d) {
  int n = 0;
  for (CellId c = 0; c < X.count(d); ++c)
    if (d >= 1 && X.cell(d, c).marked) ++n;
  return n;
}

MssPtr random_subcomplex(std::mt19937& rng, int max_top_dim) {
  std::uniform_int_distribution<int> dim_pick(1, max_top_dim);
  int m = dim_pick(rng);
  auto full = std::make_shared<MarkedSimplicialSet>(
      make_generator(GeneratorShape::standard(m), m));
  std::vector<std::pair<Dim, CellId>> seeds;
  std::uniform_int_distribution<int> coin(0, 3);
  for (Dim d = 0; d <= m; ++d)
    for (CellId c = 0; c < full->count(d); ++c)
      if (coin(rng) != 0) seeds.push_back({d, c});
  if (seeds.empty()) seeds.push_back({0, 0});
  auto [sub, inc] = spanned_subcomplex(full, seeds);
  auto out = std::make_shared<MarkedSimplicialSet>(*sub);
  std::uniform_int_distribution<int> mark(0, 1);
  for (Dim d = 1; d <= out->truncation(); ++d)
    for (CellId c = 0; c < out->count(d); ++c)
      out->cell_mut(d, c).marked = mark(rng) == 1;
  return out;
}

struct NamedBase {
  std::string name;
  std::shared_ptr<const FinCategory> cat;
};

struct NamedTheta {
  std::string name;
  int m;
  std::vector<int> widths;
};

bool run_wedge_cert_case(const NamedTheta& l, const NamedTheta& r, Dim D,
                         bool marked, std::string& detail,
                         size_t* steps_out = nullptr) {
  auto left = share2(theta2(l.m, l.widths));
  auto right = share2(theta2(r.m, r.widths));
  auto pres = make_wedge_presentation(left, l.m, right, 0);
  auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, D + 1);
  if (!valid(*W.pairs.complex, detail, "pairs complex")) return false;
  auto cert = build_cert_wedge(W, D, marked, l.name + ";" + r.name);
  auto verdict = replay(cert, W.comparison);
  if (!verdict.ok) {
    detail = l.name + " v " + r.name + ": step " +
             std::to_string(verdict.failed_step) + ": " + verdict.reason;
    return false;
  }
  if (steps_out) *steps_out = cert.steps.size();
  return true;
}

}  // namespace

int main() {
  Scorecard score;

  // 1. matrix model vs nerve of the suspension, through dimension 6
  score.run(1, "matrix model matches the nerve of the suspension", 60,
            [&](std::string& detail) {
              std::vector<NamedBase> bases{
                  {"interval:0", share1(interval_category(0))},
                  {"interval:1", share1(interval_category(1))},
                  {"interval:2", share1(interval_category(2))},
                  {"walking_iso", share1(walking_iso_category())},
                  {"rect:1,1", share1(rect_category(1, 1))}};
              for (const auto& base : bases) {
                auto M = matrix_model(base.cat,
                                      MarkingPolicy::roberts_street, 6);
                auto N = duskin_nerve(share2(suspend2(*base.cat)),
                                      MarkingPolicy::roberts_street, 6);
                if (!valid(*M.complex, detail, base.name + " matrix") ||
                    !valid(*N.complex, detail, base.name + " nerve"))
                  return false;
                for (Dim d = 0; d <= 6; ++d) {
                  if (M.complex->count(d) != N.complex->count(d)) {
                    detail = base.name + ": counts differ at dim " +
                             std::to_string(d);
                    return false;
                  }
                  if (marked_count(*M.complex, d) !=
                      marked_count(*N.complex, d)) {
                    detail = base.name + ": marked counts differ at dim " +
                             std::to_string(d);
                    return false;
                  }
                }
                auto iso = find_isomorphism(M.complex, N.complex);
                if (!iso || !iso->validate().empty()) {
                  detail = base.name + ": no marking-preserving isomorphism";
                  return false;
                }
              }
              return true;
            });

  // 2. oriental collapse bijectivity for 0 <= k, l <= 3
  score.run(2, "oriental collapse is bijective for k,l <= 3", 30,
            [&](std::string& detail) {
              for (int k = 0; k <= 3; ++k)
                for (int l = 0; l <= 3; ++l) {
                  auto rep = collapse_map(k, l);
                  if (!rep.ok()) {
                    detail = "(" + std::to_string(k) + "," +
                             std::to_string(l) + ") fails";
                    return false;
                  }
                }
              return true;
            });

  // 3. wedge as pullback, plus the universal property
  score.run(3, "wedge agrees with the pullback over the corner", 0,
            [&](std::string& detail) {
              std::vector<NamedTheta> shapes{{"theta:1,[0]", 1, {0}},
                                             {"theta:1,[1]", 1, {1}},
                                             {"theta:2,[0,0]", 2, {0, 0}},
                                             {"theta:2,[1,0]", 2, {1, 0}}};
              for (const auto& L : shapes)
                for (const auto& R : shapes) {
                  auto left = share2(theta2(L.m, L.widths));
                  auto right = share2(theta2(R.m, R.widths));
                  auto pres = make_wedge_presentation(left, L.m, right, 0);
                  auto res = wedge2(pres);
                  if (!res.wedge.validate().empty() ||
                      !validate_2functor(*left, res.wedge, res.embed_left)
                           .empty() ||
                      !validate_2functor(*right, res.wedge, res.embed_right)
                           .empty()) {
                    detail = L.name + " v " + R.name + ": invalid wedge";
                    return false;
                  }
                  auto pb = pullback_over_corner(*left, *right, pres.chi_left,
                                                 pres.chi_right);
                  if (!isomorphic_2cats(res.wedge, pb)) {
                    detail = L.name + " v " + R.name + ": not isomorphic";
                    return false;
                  }
                  // universal property: the canonical cocone factors
                  // uniquely through the wedge, as does the collapse cocone
                  int hits = count_factorizations(res, pres, res.wedge,
                                                  res.embed_left,
                                                  res.embed_right);
                  if (hits != 1) {
                    detail = L.name + " v " + R.name +
                             ": expected unique factorization, found " +
                             std::to_string(hits);
                    return false;
                  }
                  auto terminal = theta2(0, {});
                  auto collapse = [&](const Fin2Category& C) {
                    TwoFunctor f;
                    f.obj.assign(C.n, 0);
                    f.one.assign(C.n * C.n, {});
                    f.two.assign(C.n * C.n, {});
                    for (int a = 0; a < C.n; ++a)
                      for (int b = 0; b < C.n; ++b) {
                        f.one[a * C.n + b].assign(C.hom(a, b).n_objects, 0);
                        f.two[a * C.n + b].assign(C.hom(a, b).mors.size(), 0);
                      }
                    return f;
                  };
                  int collapsed = count_factorizations(
                      res, pres, terminal, collapse(*left), collapse(*right));
                  if (collapsed != 1) {
                    detail = L.name + " v " + R.name +
                             ": collapse cocone factorizations: " +
                             std::to_string(collapsed);
                    return false;
                  }
                }
              return true;
            });

  // 4. suspension certificates at D = 5, both modes
  {
    std::vector<NamedBase> bases{{"interval:1", share1(interval_category(1))},
                                 {"interval:2", share1(interval_category(2))},
                                 {"walking_iso", share1(walking_iso_category())}};
    for (const auto& base : bases) {
      score.run(4, "suspension certificate for " + base.name + " at D=5", 300,
                [&](std::string& detail) {
                  auto cmp = susp_comparison(
                      base.cat, MarkingPolicy::roberts_street, 6);
                  if (!valid(*cmp.target.complex, detail, "nerve") ||
                      !valid(*cmp.source, detail, "suspended nerve"))
                    return false;
                  if (!cmp.comparison.validate().empty()) {
                    detail = "comparison map invalid";
                    return false;
                  }
                  for (bool marked : {true, false}) {
                    auto cert = build_cert_suspension(cmp.target, 5, marked,
                                                      base.name);
                    auto verdict = replay(cert, cmp.comparison);
                    if (!verdict.ok) {
                      detail = std::string(marked ? "marked" : "unmarked") +
                               " mode: step " +
                               std::to_string(verdict.failed_step) + ": " +
                               verdict.reason;
                      return false;
                    }
                  }
                  return true;
                });
    }
  }

  // 5. wedge certificates at D = 5, both modes
  {
    std::vector<std::pair<NamedTheta, NamedTheta>> pairs{
        {{"theta:1,[0]", 1, {0}}, {"theta:1,[0]", 1, {0}}},
        {{"theta:1,[1]", 1, {1}}, {"theta:1,[0]", 1, {0}}},
        {{"theta:1,[1]", 1, {1}}, {"theta:1,[1]", 1, {1}}}};
    for (const auto& [L, R] : pairs) {
      score.run(5, "wedge certificate for " + L.name + " v " + R.name + " at D=5",
                300, [&](std::string& detail) {
                  for (bool marked : {true, false})
                    if (!run_wedge_cert_case(L, R, 5, marked, detail))
                      return false;
                  return true;
                });
    }
  }

  // 6. the theta instance and the classical spine inclusion
  score.run(6, "spine and theta-cell corollary instances", 300,
            [&](std::string& detail) {
              // N[1|1] v N[1|1] -> N[2|1,1] through D = 5
              size_t steps = 0;
              NamedTheta t11{"theta:1,[1]", 1, {1}};
              if (!run_wedge_cert_case(t11, t11, 5, true, detail, &steps))
                return false;
              if (steps == 0) {
                detail = "expected a nonempty certificate for [2|1,1]";
                return false;
              }
              // k_i = 0: exactly the classical spine filler of Delta[2]
              auto left = share2(theta2(1, {0}));
              auto right = share2(theta2(1, {0}));
              auto pres = make_wedge_presentation(left, 1, right, 0);
              auto W =
                  wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 6);
              auto cert =
                  build_cert_wedge(W, 5, true, "theta:1,[0];theta:1,[0]");
              if (cert.steps.size() != 1 || cert.steps[0].horn_dim != 2 ||
                  cert.steps[0].horn_index != 1 || cert.steps[0].d != 1) {
                detail = "spine certificate should be a single inner 2-horn";
                return false;
              }
              auto verdict = replay(cert, W.comparison);
              if (!verdict.ok) {
                detail = "spine replay: " + verdict.reason;
                return false;
              }
              // chain one more wedge: ([2|0,0]) v [1|0] -> [3|0,0,0]
              NamedTheta t200{"theta:2,[0,0]", 2, {0, 0}};
              NamedTheta t10{"theta:1,[0]", 1, {0}};
              if (!run_wedge_cert_case(t200, t10, 4, true, detail))
                return false;
              return true;
            });

  // 7. face tables through dimension 6, plus the worked example
  score.run(7, "face tables and the worked six-simplex example", 0,
            [&](std::string& detail) {
              for (auto base : {share1(interval_category(1)),
                                share1(interval_category(2))}) {
                auto M =
                    matrix_model(base, MarkingPolicy::roberts_street, 6);
                auto bad = check_face_tables_suspension(M, 6);
                if (!bad.empty()) {
                  detail = "suspension: " + bad.front();
                  return false;
                }
              }
              std::vector<std::pair<NamedTheta, NamedTheta>> wedges{
                  {{"theta:1,[0]", 1, {0}}, {"theta:1,[0]", 1, {0}}},
                  {{"theta:1,[1]", 1, {1}}, {"theta:1,[0]", 1, {0}}}};
              for (const auto& [L, R] : wedges) {
                auto left = share2(theta2(L.m, L.widths));
                auto right = share2(theta2(R.m, R.widths));
                auto pres = make_wedge_presentation(left, L.m, right, 0);
                auto W =
                    wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 6);
                auto bad = check_face_tables_wedge(W, 6);
                if (!bad.empty()) {
                  detail = "wedge: " + bad.front();
                  return false;
                }
              }
              // the worked example over the rectangle poset
              auto P = rect_category(3, 2);
              auto obj = [&](int i, int a) { return i * 3 + a; };
              auto grid_for = [&](int third_row_obj) {
                GridSimplex g;
                g.rows = 4;
                g.cols = 3;
                for (int c = 0; c < 3; ++c) g.entry.push_back(obj(0, c));
                for (int c = 0; c < 3; ++c) g.entry.push_back(obj(1, c));
                for (int c = 0; c < 3; ++c) g.entry.push_back(third_row_obj);
                for (int c = 0; c < 3; ++c) g.entry.push_back(obj(3, 0));
                auto find_mor = [&](int src, int tgt) {
                  for (size_t f = 0; f < P.mors.size(); ++f)
                    if (P.mors[f].src == src && P.mors[f].tgt == tgt)
                      return static_cast<int>(f);
                  return -1;
                };
                for (int i = 0; i < 4; ++i)
                  for (int c = 0; c + 1 < 3; ++c)
                    g.hor.push_back(find_mor(g.at(i, c + 1), g.at(i, c)));
                for (int i = 0; i + 1 < 4; ++i)
                  for (int c = 0; c < 3; ++c)
                    g.ver.push_back(find_mor(g.at(i, c), g.at(i + 1, c)));
                return g;
              };
              auto c1 = classify_susp(P, grid_for(obj(1, 0)));
              auto c2 = classify_susp(P, grid_for(obj(2, 0)));
              if (!(c1.type == 3 && c1.suspect_index == 2 && c1.suspect &&
                    c2.type == 3 && c2.suspect_index == 2 && !c2.suspect)) {
                detail = "worked example classification differs";
                return false;
              }
              return true;
            });

  // 8. join laws
  score.run(8, "join laws", 0, [&](std::string& detail) {
    for (int l = 0; l <= 4; ++l) {
      auto dl = make_generator(GeneratorShape::standard(l), l + 1);
      auto pt = make_generator(GeneratorShape::standard(0), l + 1);
      auto cone = join(dl, pt);
      auto want = make_generator(GeneratorShape::standard(l + 1), l + 1);
      if (!isomorphic(cone, want)) {
        detail = "cone of Delta[" + std::to_string(l) + "] is off";
        return false;
      }
    }
    auto e = make_generator(GeneratorShape::empty(), 3);
    auto x = make_generator(GeneratorShape::three_eq(), 3);
    if (!(join(e, x) == x) || !(join(x, e) == x)) {
      detail = "empty join unit fails";
      return false;
    }
    std::mt19937 rng(20260809);
    for (int trial = 0; trial < 25; ++trial) {
      auto X = random_subcomplex(rng, 3);
      auto Y = random_subcomplex(rng, 3);
      auto XY = join(*X, *Y);
      if (!valid(XY, detail, "join")) return false;
      for (Dim m = 0; m <= XY.truncation(); ++m) {
        std::uint64_t want = 0;
        for (int k = -1; k <= m; ++k) {
          int l = m - 1 - k;
          std::uint64_t xk = k < 0 ? 1 : X->simplex_count_with_degeneracies(k);
          std::uint64_t yl = l < 0 ? 1 : Y->simplex_count_with_degeneracies(l);
          want += xk * yl;
        }
        if (XY.simplex_count_with_degeneracies(m) != want) {
          detail = "join count formula fails at dim " + std::to_string(m);
          return false;
        }
      }
    }
    return true;
  });

  // 9. suspension census and compatibility with wedges
  score.run(9, "suspension census and wedge compatibility", 0,
            [&](std::string& detail) {
              std::mt19937 rng(31415926);
              for (int trial = 0; trial < 50; ++trial) {
                auto X = random_subcomplex(rng, 4);
                auto S = suspend(*X);
                if (!valid(S, detail, "suspension")) return false;
                for (Dim m = 1; m <= std::min<Dim>(S.truncation(), 5); ++m) {
                  std::uint64_t want = 2;
                  for (Dim q = 0; q <= m - 1; ++q)
                    want += X->simplex_count_with_degeneracies(q);
                  if (S.simplex_count_with_degeneracies(m) != want) {
                    detail = "census formula fails at dim " +
                             std::to_string(m);
                    return false;
                  }
                  if (S.count(m) != X->count(m - 1)) {
                    detail = "nondegenerate census fails";
                    return false;
                  }
                }
              }
              // suspension commutes with gluing along a point
              for (int trial = 0; trial < 10; ++trial) {
                auto X = random_subcomplex(rng, 3);
                auto Y = random_subcomplex(rng, 3);
                auto W = wedge_ss(X, 0, Y, 0);
                auto lhs = suspend(*W.complex);

                auto pt = std::make_shared<MarkedSimplicialSet>(
                    make_generator(GeneratorShape::standard(0),
                                   std::min(X->truncation(), Y->truncation())));
                SimplicialMap ix, iy;
                ix.source = pt;
                ix.target = X;
                ix.assign.assign(pt->truncation() + 1, {});
                ix.assign[0] = {nondeg_ref(0, 0)};
                iy = ix;
                iy.target = Y;
                auto SX = std::make_shared<MarkedSimplicialSet>(suspend(*X));
                auto SY = std::make_shared<MarkedSimplicialSet>(suspend(*Y));
                auto SP = std::make_shared<MarkedSimplicialSet>(suspend(*pt));
                auto sx = suspend_map(ix, SP, SX);
                auto sy = suspend_map(iy, SP, SY);
                auto rhs = pushout(sx, sy);
                if (!find_isomorphism(
                         std::make_shared<MarkedSimplicialSet>(lhs),
                         rhs.complex, true)
                         .has_value()) {
                  detail = "suspension does not commute with the wedge";
                  return false;
                }
              }
              return true;
            });

  // 10. hygiene: serialization round trips, deterministic certificates
  score.run(10, "serialization and determinism", 0, [&](std::string& detail) {
    auto P = share1(interval_category(1));
    auto M = matrix_model(P, MarkingPolicy::roberts_street, 4);
    std::string bytes = encode_to_string(*M.complex);
    std::istringstream is(bytes);
    auto back = decode_mss(is);
    if (!(back == *M.complex) || encode_to_string(back) != bytes) {
      detail = "complex round trip not byte-exact";
      return false;
    }
    auto cmp1 = susp_comparison(P, MarkingPolicy::roberts_street, 5);
    auto cert1 = build_cert_suspension(cmp1.target, 4, true, "interval:1");
    auto cmp2 = susp_comparison(P, MarkingPolicy::roberts_street, 5);
    auto cert2 = build_cert_suspension(cmp2.target, 4, true, "interval:1");
    if (encode_to_string(cert1) != encode_to_string(cert2)) {
      detail = "certificates differ across runs";
      return false;
    }
    std::istringstream cis(encode_to_string(cert1));
    auto cback = decode_cert(cis);
    if (encode_to_string(cback) != encode_to_string(cert1)) {
      detail = "certificate round trip not byte-exact";
      return false;
    }
    if (!replay(cback, cmp2.comparison).ok) {
      detail = "decoded certificate fails to replay";
      return false;
    }
    auto left = share2(theta2(1, {1}));
    auto right = share2(theta2(1, {0}));
    auto pres = make_wedge_presentation(left, 1, right, 0);
    auto W1 = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 4);
    auto W2 = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, 4);
    auto wc1 = build_cert_wedge(W1, 3, true, "w");
    auto wc2 = build_cert_wedge(W2, 3, true, "w");
    if (encode_to_string(wc1) != encode_to_string(wc2)) {
      detail = "wedge certificates differ across runs";
      return false;
    }
    return true;
  });

  if (score.failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << score.failures << " criteria failed" << std::endl;
  return 1;
}
