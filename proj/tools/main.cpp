// Command-line surface: build and inspect marked simplicial sets, verify the
// comparison theorems, and replay anodyne certificates.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "complicial/anodyne.hpp"
#include "complicial/serialize.hpp"

using namespace complicial;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr Dim kMaxDim = 8;  // guard against infeasible enumerations

MarkingPolicy parse_policy(const std::string& s) {
  if (s == "rs" || s == "roberts-street") return MarkingPolicy::roberts_street;
  if (s == "street") return MarkingPolicy::street;
  if (s == "natural") return MarkingPolicy::natural;
  throw CLI::ValidationError("--marking", "unknown marking policy: " + s);
}

std::shared_ptr<const FinCategory> parse_catspec(const std::string& spec) {
  if (spec == "walking_iso")
    return std::make_shared<FinCategory>(walking_iso_category());
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "interval")
    return std::make_shared<FinCategory>(interval_category(std::stoi(args)));
  if (kind == "rect") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("rect:K,L expected");
    return std::make_shared<FinCategory>(rect_category(
        std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1))));
  }
  throw std::invalid_argument("unknown category spec: " + spec);
}

std::vector<int> parse_width_list(std::string args) {
  // accepts "[1,0]" or "1,0"
  if (!args.empty() && args.front() == '[') args = args.substr(1);
  if (!args.empty() && args.back() == ']') args.pop_back();
  std::vector<int> widths;
  size_t pos = 0;
  while (pos < args.size()) {
    size_t next = args.find(',', pos);
    if (next == std::string::npos) next = args.size();
    widths.push_back(std::stoi(args.substr(pos, next - pos)));
    pos = next + 1;
  }
  return widths;
}

/// 2-category specs: theta:M,[k1,...] or susp:CATSPEC.
struct TwoCatSpec {
  Fin2Ptr cat;
  int cosieve = -1;  // last object
  int sieve = 0;     // first object
};

TwoCatSpec parse_2catspec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  TwoCatSpec out;
  if (kind == "theta") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("theta:M,[k...] expected");
    int m = std::stoi(args.substr(0, comma));
    auto widths = parse_width_list(args.substr(comma + 1));
    out.cat = std::make_shared<Fin2Category>(theta2(m, widths));
    out.cosieve = m;
    return out;
  }
  if (kind == "susp") {
    out.cat = std::make_shared<Fin2Category>(suspend2(*parse_catspec(args)));
    out.cosieve = 1;
    return out;
  }
  throw std::invalid_argument("unknown 2-category spec: " + spec);
}

void guard_dim(Dim d) {
  if (d < 0 || d > kMaxDim)
    throw std::invalid_argument("dimension out of the supported range 0.." +
                                std::to_string(kMaxDim));
}

struct BuiltObject {
  MssPtr complex;
  // optional classification hooks for the census type split
  const MatrixModel* matrix = nullptr;
  const WedgeNervePairs* wedge = nullptr;
};

/// Builds the object named by positional arguments; heavy models are kept
/// alive by the two shared slots.
struct ObjectFactory {
  std::shared_ptr<MatrixModel> matrix;
  std::shared_ptr<WedgeNervePairs> wedge;

  BuiltObject build(const std::vector<std::string>& args, Dim d,
                    MarkingPolicy policy) {
    if (args.empty()) throw std::invalid_argument("missing object kind");
    const std::string& kind = args[0];
    auto shape_arg = [&](size_t i) {
      if (i >= args.size())
        throw std::invalid_argument("missing argument for " + kind);
      return std::stoi(args[i]);
    };
    auto mk = [&](GeneratorShape s) {
      BuiltObject b;
      b.complex =
          std::make_shared<MarkedSimplicialSet>(make_generator(s, d));
      return b;
    };
    if (kind == "standard") return mk(GeneratorShape::standard(shape_arg(1)));
    if (kind == "top") return mk(GeneratorShape::top(shape_arg(1)));
    if (kind == "complicial")
      return mk(GeneratorShape::complicial(shape_arg(1), shape_arg(2)));
    if (kind == "complicial-prime")
      return mk(GeneratorShape::complicial_prime(shape_arg(1), shape_arg(2)));
    if (kind == "complicial-double-prime")
      return mk(GeneratorShape::complicial_double_prime(shape_arg(1),
                                                        shape_arg(2)));
    if (kind == "horn") return mk(GeneratorShape::horn(shape_arg(1), shape_arg(2)));
    if (kind == "horn-prime")
      return mk(GeneratorShape::horn_prime(shape_arg(1), shape_arg(2)));
    if (kind == "three-eq") return mk(GeneratorShape::three_eq());
    if (kind == "three-sharp") return mk(GeneratorShape::three_sharp());
    if (kind == "empty") return mk(GeneratorShape::empty());
    if (kind == "nerve-suspension") {
      if (args.size() < 2) throw std::invalid_argument("missing base category");
      matrix = std::make_shared<MatrixModel>(
          matrix_model(parse_catspec(args[1]), policy, d));
      BuiltObject b;
      b.complex = matrix->complex;
      b.matrix = matrix.get();
      return b;
    }
    if (kind == "theta") {
      if (args.size() < 3) throw std::invalid_argument("theta M k1,k2,...");
      auto cat = std::make_shared<Fin2Category>(
          theta2(std::stoi(args[1]), parse_width_list(args[2])));
      BuiltObject b;
      b.complex = duskin_nerve(cat, policy, d).complex;
      return b;
    }
    if (kind == "nerve-wedge") {
      if (args.size() < 3)
        throw std::invalid_argument("nerve-wedge LEFT RIGHT");
      auto left = parse_2catspec(args[1]);
      auto right = parse_2catspec(args[2]);
      auto pres = make_wedge_presentation(left.cat, left.cosieve, right.cat,
                                          right.sieve);
      wedge = std::make_shared<WedgeNervePairs>(
          wedge_nerve_pairs(pres, policy, d));
      BuiltObject b;
      b.complex = wedge->pairs.complex;
      b.wedge = wedge.get();
      return b;
    }
    throw std::invalid_argument("unknown object kind: " + kind);
  }
};

void print_census(const BuiltObject& obj, const std::string& format) {
  const auto& X = *obj.complex;
  bool csv = format == "csv";
  if (format != "csv" && format != "table")
    throw std::invalid_argument("--format must be table or csv");
  if (csv) {
    std::cout << "dim,nondegenerate,marked,types\n";
  } else {
    std::cout << "dim  nondegenerate  marked";
    if (obj.matrix) std::cout << "  by type";
    if (obj.wedge) std::cout << "  by type pair";
    std::cout << "\n";
  }
  for (Dim d = 0; d <= X.truncation(); ++d) {
    int marked = 0;
    for (CellId c = 0; c < X.count(d); ++c)
      if (d >= 1 && X.cell(d, c).marked) ++marked;
    std::cout << d << (csv ? "," : "    ") << X.count(d) << (csv ? "," : "  ")
              << marked;
    if (csv) std::cout << ",";
    if (obj.matrix) {
      std::map<int, int> by_type;
      for (CellId c = 0; c < X.count(d); ++c)
        by_type[classify_susp(*obj.matrix->base, obj.matrix->cells[d][c])
                    .type]++;
      if (!csv) std::cout << "  ";
      bool first = true;
      for (auto [k, n] : by_type) {
        std::cout << (first || !csv ? "" : ";") << "k=" << k << ":" << n
                  << (csv ? "" : " ");
        first = false;
      }
    }
    if (obj.wedge) {
      std::map<std::pair<int, int>, int> by_type;
      for (CellId c = 0; c < X.count(d); ++c) {
        auto [rl, rr] = obj.wedge->pairs.coords[d][c];
        auto cls = classify_wedge(*obj.wedge, rl, rr);
        by_type[{cls.type_left, cls.type_right}]++;
      }
      if (!csv) std::cout << "  ";
      bool first = true;
      for (auto [kk, n] : by_type) {
        if (csv)
          std::cout << (first ? "" : ";") << kk.first << "|" << kk.second
                    << ":" << n;
        else
          std::cout << "(" << kk.first << "," << kk.second << "):" << n << " ";
        first = false;
      }
    }
    std::cout << "\n";
  }
}

void write_or_print(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << payload;
}

int run_verify_suspension(const std::string& base, Dim d, bool unmarked,
                          const std::string& out) {
  auto P = parse_catspec(base);
  auto cmp = susp_comparison(P, MarkingPolicy::roberts_street, d + 1);
  auto cert = build_cert_suspension(cmp.target, d, !unmarked, base);
  auto verdict = replay(cert, cmp.comparison);
  if (!out.empty()) write_or_print(out, encode_to_string(cert));
  if (verdict.ok) {
    std::cout << "suspension comparison for " << base << " through dim " << d
              << ": anodyne certificate with " << cert.steps.size()
              << " steps replayed (" << (unmarked ? "unmarked" : "marked")
              << " mode)\n";
    return kExitOk;
  }
  std::cout << "FAILED at step " << verdict.failed_step << ": "
            << verdict.reason << "\n";
  return kExitVerifyFail;
}

int run_verify_wedge(const std::string& left, const std::string& right, Dim d,
                     bool unmarked, const std::string& out) {
  auto l = parse_2catspec(left);
  auto r = parse_2catspec(right);
  auto pres = make_wedge_presentation(l.cat, l.cosieve, r.cat, r.sieve);
  auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, d + 1);
  auto cert = build_cert_wedge(W, d, !unmarked, left + ";" + right);
  auto verdict = replay(cert, W.comparison);
  if (!out.empty()) write_or_print(out, encode_to_string(cert));
  if (verdict.ok) {
    std::cout << "wedge comparison for " << left << " v " << right
              << " through dim " << d << ": anodyne certificate with "
              << cert.steps.size() << " steps replayed ("
              << (unmarked ? "unmarked" : "marked") << " mode)\n";
    return kExitOk;
  }
  std::cout << "FAILED at step " << verdict.failed_step << ": "
            << verdict.reason << "\n";
  return kExitVerifyFail;
}

int run_verify_face_tables(const std::string& context, const std::string& base,
                           const std::string& left, const std::string& right,
                           Dim d) {
  std::vector<std::string> bad;
  if (context == "suspension") {
    auto M = matrix_model(parse_catspec(base), MarkingPolicy::roberts_street, d);
    bad = check_face_tables_suspension(M, d);
  } else if (context == "wedge") {
    auto l = parse_2catspec(left);
    auto r = parse_2catspec(right);
    auto pres = make_wedge_presentation(l.cat, l.cosieve, r.cat, r.sieve);
    auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street, d);
    bad = check_face_tables_wedge(W, d);
  } else {
    throw std::invalid_argument("--context must be suspension or wedge");
  }
  if (bad.empty()) {
    std::cout << "face tables verified through dim " << d << "\n";
    return kExitOk;
  }
  for (const auto& s : bad) std::cout << "violation: " << s << "\n";
  return kExitVerifyFail;
}

int run_verify_matrix_iso(const std::string& base, Dim d) {
  auto P = parse_catspec(base);
  auto M = matrix_model(P, MarkingPolicy::roberts_street, d);
  auto N = duskin_nerve(std::make_shared<Fin2Category>(suspend2(*P)),
                        MarkingPolicy::roberts_street, d);
  for (Dim q = 0; q <= d; ++q) {
    if (M.complex->count(q) != N.complex->count(q)) {
      std::cout << "FAILED: cell counts differ at dim " << q << "\n";
      return kExitVerifyFail;
    }
    int mm = 0, nm = 0;
    for (CellId c = 0; c < M.complex->count(q); ++c) {
      if (q >= 1 && M.complex->cell(q, c).marked) ++mm;
      if (q >= 1 && N.complex->cell(q, c).marked) ++nm;
    }
    if (mm != nm) {
      std::cout << "FAILED: marked counts differ at dim " << q << "\n";
      return kExitVerifyFail;
    }
  }
  auto iso = find_isomorphism(M.complex, N.complex);
  if (!iso) {
    std::cout << "FAILED: no isomorphism found\n";
    return kExitVerifyFail;
  }
  std::cout << "matrix model of " << base
            << " is isomorphic to the nerve of its suspension through dim "
            << d << "\n";
  return kExitOk;
}

int run_verify_collapse(int k, int l) {
  auto rep = collapse_map(k, l);
  if (rep.ok()) {
    std::cout << "collapse of the oriental onto the suspended rectangle (" << k
              << "," << l << "): bijective on objects, 1- and 2-morphisms\n";
    return kExitOk;
  }
  std::cout << "FAILED:";
  if (!rep.functor_valid) std::cout << " functor-axioms";
  if (!rep.objects_bijective) std::cout << " objects";
  if (!rep.one_morphisms_bijective) std::cout << " one-morphisms";
  if (!rep.two_morphisms_bijective) std::cout << " two-morphisms";
  std::cout << "\n";
  return kExitVerifyFail;
}

int run_verify_wedge_pullback(const std::string& left,
                              const std::string& right) {
  auto l = parse_2catspec(left);
  auto r = parse_2catspec(right);
  auto pres = make_wedge_presentation(l.cat, l.cosieve, r.cat, r.sieve);
  auto res = wedge2(pres);
  if (!res.wedge.validate().empty() ||
      !validate_2functor(*l.cat, res.wedge, res.embed_left).empty() ||
      !validate_2functor(*r.cat, res.wedge, res.embed_right).empty()) {
    std::cout << "FAILED: wedge construction invalid\n";
    return kExitVerifyFail;
  }
  auto pb = pullback_over_corner(*l.cat, *r.cat, pres.chi_left, pres.chi_right);
  if (!isomorphic_2cats(res.wedge, pb)) {
    std::cout << "FAILED: wedge and pullback are not isomorphic\n";
    return kExitVerifyFail;
  }
  // universal property against the canonical cocone
  int factorizations = count_factorizations(res, pres, res.wedge,
                                            res.embed_left, res.embed_right);
  if (factorizations != 1) {
    std::cout << "FAILED: expected a unique factorization, found "
              << factorizations << "\n";
    return kExitVerifyFail;
  }
  std::cout << "wedge of " << left << " and " << right
            << " agrees with the pullback; unique factorization verified\n";
  return kExitOk;
}

int run_verify_lambda_prime(int m, int k, const std::string& out) {
  auto cert = decompose_lambda_prime(m, k);
  if (!out.empty()) write_or_print(out, encode_to_string(cert));
  auto verdict = replay_lambda_prime(cert, m, k);
  if (verdict.ok) {
    std::cout << "horn-to-double-prime decomposition (" << m << "," << k
              << ") replays in two steps\n";
    return kExitOk;
  }
  std::cout << "FAILED at step " << verdict.failed_step << ": "
            << verdict.reason << "\n";
  return kExitVerifyFail;
}

int run_replay(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open certificate: " + path);
  auto cert = decode_cert(is);
  guard_dim(cert.truncation + 1);
  ReplayVerdict verdict;
  if (cert.theorem == "suspension") {
    auto cmp = susp_comparison(parse_catspec(cert.params),
                               MarkingPolicy::roberts_street,
                               cert.truncation + 1);
    verdict = replay(cert, cmp.comparison);
  } else if (cert.theorem == "wedge") {
    auto semi = cert.params.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("wedge certificate params must be L;R");
    auto l = parse_2catspec(cert.params.substr(0, semi));
    auto r = parse_2catspec(cert.params.substr(semi + 1));
    auto pres = make_wedge_presentation(l.cat, l.cosieve, r.cat, r.sieve);
    auto W = wedge_nerve_pairs(pres, MarkingPolicy::roberts_street,
                               cert.truncation + 1);
    verdict = replay(cert, W.comparison);
  } else if (cert.theorem == "lambda-prime") {
    auto comma = cert.params.find(',');
    verdict = replay_lambda_prime(cert, std::stoi(cert.params.substr(0, comma)),
                                  std::stoi(cert.params.substr(comma + 1)));
  } else {
    throw std::invalid_argument("unknown theorem: " + cert.theorem);
  }
  if (verdict.ok) {
    std::cout << "certificate verified: " << cert.steps.size() << " steps\n";
    return kExitOk;
  }
  std::cout << "FAILED at step " << verdict.failed_step << ": "
            << verdict.reason << "\n";
  return kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite marked simplicial sets, nerves of 2-categories, and anodyne "
      "certificates"};
  app.require_subcommand(1);

  // build
  auto* cmd_build = app.add_subcommand("build", "build an object and write it");
  std::vector<std::string> build_args;
  Dim build_dim = 3;
  std::string build_marking = "rs";
  std::string build_out;
  cmd_build->add_option("object", build_args, "object kind and parameters")
      ->required()
      ->expected(-1);
  cmd_build->add_option("--dim", build_dim, "truncation dimension");
  cmd_build->add_option("--marking", build_marking, "rs | street | natural");
  cmd_build->add_option("--out", build_out, "output file (default: stdout)");

  // census
  auto* cmd_census = app.add_subcommand("census", "cell counts per dimension");
  std::vector<std::string> census_args;
  Dim census_dim = 3;
  std::string census_marking = "rs";
  std::string census_format = "table";
  cmd_census->add_option("object", census_args, "object kind and parameters")
      ->required()
      ->expected(-1);
  cmd_census->add_option("--dim", census_dim, "truncation dimension");
  cmd_census->add_option("--marking", census_marking, "rs | street | natural");
  cmd_census->add_option("--format", census_format, "table | csv");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "verify a theorem instance");
  std::string theorem;
  std::string v_base, v_left, v_right, v_context, v_out;
  int v_k = 0, v_l = 0, v_m = 2;
  Dim v_dim = 3;
  bool v_unmarked = false;
  cmd_verify
      ->add_option("theorem", theorem,
                   "suspension | wedge | face-tables | matrix-iso | "
                   "oriental-collapse | wedge-pullback | lambda-prime")
      ->required();
  cmd_verify->add_option("--base", v_base, "base category spec");
  cmd_verify->add_option("--left", v_left, "left 2-category spec");
  cmd_verify->add_option("--right", v_right, "right 2-category spec");
  cmd_verify->add_option("--context", v_context, "suspension | wedge");
  cmd_verify->add_option("--dim", v_dim, "verification dimension");
  cmd_verify->add_option("--k", v_k, "first index");
  cmd_verify->add_option("--l", v_l, "second index");
  cmd_verify->add_option("--m", v_m, "simplex dimension");
  cmd_verify->add_flag("--unmarked", v_unmarked,
                       "verify the underlying unmarked statement");
  cmd_verify->add_option("--out", v_out, "write the certificate here");

  // replay
  auto* cmd_replay = app.add_subcommand("replay", "replay a certificate file");
  std::string replay_path;
  cmd_replay->add_option("--cert", replay_path, "certificate file")->required();

  // rlp
  auto* cmd_rlp =
      app.add_subcommand("rlp", "decompose and replay a primed horn");
  int rlp_m = 2, rlp_k = 1;
  std::string rlp_out;
  cmd_rlp->add_option("--m", rlp_m, "simplex dimension")->required();
  cmd_rlp->add_option("--k", rlp_k, "horn index")->required();
  cmd_rlp->add_option("--out", rlp_out, "write the certificate here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_build) {
      guard_dim(build_dim);
      ObjectFactory factory;
      auto obj =
          factory.build(build_args, build_dim, parse_policy(build_marking));
      auto bad = obj.complex->validate();
      if (!bad.empty()) {
        std::cout << "invalid object: " << bad.front() << "\n";
        return kExitVerifyFail;
      }
      write_or_print(build_out, encode_to_string(*obj.complex));
      return kExitOk;
    }
    if (*cmd_census) {
      guard_dim(census_dim);
      ObjectFactory factory;
      auto obj =
          factory.build(census_args, census_dim, parse_policy(census_marking));
      print_census(obj, census_format);
      return kExitOk;
    }
    if (*cmd_verify) {
      guard_dim(v_dim + 1);
      if (theorem == "suspension")
        return run_verify_suspension(v_base, v_dim, v_unmarked, v_out);
      if (theorem == "wedge")
        return run_verify_wedge(v_left, v_right, v_dim, v_unmarked, v_out);
      if (theorem == "face-tables")
        return run_verify_face_tables(v_context, v_base, v_left, v_right,
                                      v_dim);
      if (theorem == "matrix-iso") return run_verify_matrix_iso(v_base, v_dim);
      if (theorem == "oriental-collapse") return run_verify_collapse(v_k, v_l);
      if (theorem == "wedge-pullback")
        return run_verify_wedge_pullback(v_left, v_right);
      if (theorem == "lambda-prime")
        return run_verify_lambda_prime(v_m, v_k, v_out);
      throw std::invalid_argument("unknown theorem: " + theorem);
    }
    if (*cmd_replay) return run_replay(replay_path);
    if (*cmd_rlp) {
      auto cert = decompose_lambda_prime(rlp_m, rlp_k);
      if (!rlp_out.empty()) write_or_print(rlp_out, encode_to_string(cert));
      auto verdict = replay_lambda_prime(cert, rlp_m, rlp_k);
      if (verdict.ok) {
        std::cout << "decomposition verified\n";
        return kExitOk;
      }
      std::cout << "FAILED: " << verdict.reason << "\n";
      return kExitVerifyFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
