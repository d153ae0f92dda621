#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "complicial/serialize.hpp"
#include "support.hpp"

using namespace complicial;
using testsupport::gen;

TEST_CASE("complex files round-trip byte-exactly") {
  for (auto shape : {GeneratorShape::complicial(2, 1),
                     GeneratorShape::three_eq(),
                     GeneratorShape::horn_prime(3, 1)}) {
    auto X = make_generator(shape, 3);
    std::string bytes = encode_to_string(X);
    std::istringstream is(bytes);
    auto Y = decode_mss(is);
    CHECK(Y == X);
    CHECK(encode_to_string(Y) == bytes);
  }
}

TEST_CASE("a built nerve re-decodes and revalidates") {
  auto P = std::make_shared<FinCategory>(interval_category(1));
  auto M = matrix_model(P, MarkingPolicy::roberts_street, 4);
  std::string bytes = encode_to_string(*M.complex);
  std::istringstream is(bytes);
  auto Y = decode_mss(is);
  CHECK(Y.validate().empty());
  CHECK(Y == *M.complex);
  CHECK(Y.basepoints().size() == 2);
}

TEST_CASE("fuzzed complexes round-trip") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 10; ++t) {
    auto X = testsupport::random_complex(rng);
    std::string bytes = encode_to_string(*X);
    std::istringstream is(bytes);
    auto Y = decode_mss(is);
    CHECK(Y == *X);
  }
}

TEST_CASE("dangling references are rejected") {
  auto X = make_generator(GeneratorShape::standard(1), 1);
  std::string bytes = encode_to_string(X);
  // point the edge at a nonexistent vertex
  auto pos = bytes.find(":0:1,");
  REQUIRE(pos != std::string::npos);
  bytes.replace(pos, 5, ":0:7,");
  std::istringstream is(bytes);
  CHECK_THROWS_AS(decode_mss(is), std::invalid_argument);
}

TEST_CASE("map files round-trip") {
  auto horn = gen(GeneratorShape::horn(2, 1), 2);
  auto delta = gen(GeneratorShape::complicial(2, 1), 2);
  auto inc = testsupport::inclusion_by_labels(horn, delta);
  std::string bytes = encode_to_string(inc);
  std::istringstream is(bytes);
  auto back = decode_smap(is);
  CHECK(back.assign == inc.assign);
  CHECK(*back.source == *inc.source);
  CHECK(*back.target == *inc.target);
  CHECK(encode_to_string(back) == bytes);
}

TEST_CASE("certificates round-trip and stay replayable") {
  auto P = std::make_shared<FinCategory>(interval_category(1));
  auto cmp = susp_comparison(P, MarkingPolicy::roberts_street, 4);
  auto cert = build_cert_suspension(cmp.target, 3, true, "interval:1");
  std::string bytes = encode_to_string(cert);
  std::istringstream is(bytes);
  auto back = decode_cert(is);
  CHECK(back.theorem == cert.theorem);
  CHECK(back.params == cert.params);
  CHECK(back.truncation == cert.truncation);
  CHECK(back.marked_mode == cert.marked_mode);
  REQUIRE(back.steps.size() == cert.steps.size());
  CHECK(encode_to_string(back) == bytes);
  CHECK(replay(back, cmp.comparison).ok);
}

TEST_CASE("certificate construction is deterministic") {
  auto P = std::make_shared<FinCategory>(interval_category(1));
  auto cmp1 = susp_comparison(P, MarkingPolicy::roberts_street, 4);
  auto cmp2 = susp_comparison(P, MarkingPolicy::roberts_street, 4);
  auto a = encode_to_string(build_cert_suspension(cmp1.target, 3, true, "x"));
  auto b = encode_to_string(build_cert_suspension(cmp2.target, 3, true, "x"));
  CHECK(a == b);
}

TEST_CASE("lambda-prime certificates round-trip") {
  auto cert = decompose_lambda_prime(3, 1);
  std::string bytes = encode_to_string(cert);
  std::istringstream is(bytes);
  auto back = decode_cert(is);
  CHECK(encode_to_string(back) == bytes);
  CHECK(replay_lambda_prime(back, 3, 1).ok);
}
