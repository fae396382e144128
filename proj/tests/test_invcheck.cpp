// SPDX-License-Identifier: Apache-2.0
#include <invmap/invcheck.hpp>

#include <doctest.h>

#include "fixtures.hpp"
#include "test_util.hpp"

using namespace invmap;

TEST_CASE("checker accepts the three-gate machine with the expected order") {
  const auto outcome = check_theorem1(fixtures::machine4());
  REQUIRE(outcome.accepted);
  const auto& order = outcome.certificate->order;
  REQUIRE(order.size() == 4);
  CHECK(order[0] == CertificateEntry{0, 1});
  CHECK(order[1] == CertificateEntry{1, 2});
  CHECK(order[2] == CertificateEntry{2, 3});
  CHECK(order[3] == CertificateEntry{3, 0});
}

TEST_CASE("checker accepts the remaining invertible fixtures") {
  CHECK(check_theorem1(fixtures::increment4()).accepted);
  CHECK(check_theorem1(fixtures::tfunction4()).accepted);
  CHECK(check_theorem1(fixtures::renamed4()).accepted);
  CHECK(check_theorem1(VectorialMapping::identity(5)).accepted);
  CHECK(check_theorem1(VectorialMapping::shift(5)).accepted);
}

TEST_CASE("checker rejects the invertible-but-uncertified example") {
  const auto outcome = check_theorem1(fixtures::uncertified4());
  REQUIRE(!outcome.accepted);
  CHECK(outcome.reason == RejectReason::unmarkable_residue);
  CHECK(outcome.unmarked == std::vector<unsigned>{0, 1, 2});
  // ...while the oracle confirms it is a bijection: the condition is
  // sufficient, not necessary.
  CHECK(brute_force_invertible(fixtures::uncertified4()).invertible);
}

TEST_CASE("checker rejects a duplicated pivot") {
  const auto outcome = check_theorem1(fixtures::collapse2());
  REQUIRE(!outcome.accepted);
  CHECK(outcome.reason == RejectReason::unmarkable_residue);
  CHECK(outcome.unmarked == std::vector<unsigned>{1});
}

TEST_CASE("checker rejects when no base row exists") {
  // Both outputs have non-constant rests, so the first pass marks nothing.
  const auto m = mapping_from_text("n = 2\nf0 = x0 ^ x0*x1\nf1 = x1 ^ x0*x1\n");
  const auto outcome = check_theorem1(m);
  REQUIRE(!outcome.accepted);
  CHECK(outcome.reason == RejectReason::no_constant_pivot_base);
  CHECK(outcome.unmarked == std::vector<unsigned>{0, 1});
}

TEST_CASE("checker traces the 20-bit fixture to the documented pivots") {
  const auto outcome = check_theorem1(fixtures::full_period20_b());
  REQUIRE(outcome.accepted);
  // The base pass leaves exactly f15 and f19; f15 is markable first.
  const auto& order = outcome.certificate->order;
  REQUIRE(order.size() == 20);
  CHECK(order[18] == CertificateEntry{15, 16});
  CHECK(order[19] == CertificateEntry{19, 0});

  const auto other = check_theorem1(fixtures::full_period20_a());
  REQUIRE(other.accepted);
}

TEST_CASE("accepted certificates validate and invert") {
  for (const auto& m : {fixtures::increment4(), fixtures::machine4(), fixtures::tfunction4(),
                        fixtures::renamed4()}) {
    const auto outcome = check_theorem1(m);
    REQUIRE(outcome.accepted);
    CHECK_NOTHROW(validate_certificate(m, *outcome.certificate));
    for (State s = 0; s < 16; ++s)
      REQUIRE(invert_state(m, *outcome.certificate, apply(m, s)) == s);
  }
}

TEST_CASE("invert_state fixtures") {
  const auto m9 = fixtures::renamed4();
  const auto cert9 = check_theorem1(m9).certificate.value();
  CHECK(invert_state(m9, cert9, 1) == 11);

  const auto inc = fixtures::increment4();
  const auto cert_inc = check_theorem1(inc).certificate.value();
  CHECK(invert_state(inc, cert_inc, 0) == 15);  // the preimage of 0 under x+1 mod 16
}

TEST_CASE("invert_state rejects invalid certificates") {
  const auto m = fixtures::machine4();
  InvertibilityCertificate cert = check_theorem1(m).certificate.value();

  auto truncated = cert;
  truncated.order.pop_back();
  CHECK_THROWS_AS(invert_state(m, truncated, 0), std::invalid_argument);

  auto bad_pivot = cert;
  bad_pivot.order[0].pivot = 3;  // x3 is not free in f0 = x1
  CHECK_THROWS_AS(invert_state(m, bad_pivot, 0), std::invalid_argument);

  auto reordered = cert;
  std::swap(reordered.order[0], reordered.order[3]);  // f3 needs x3 before it is known
  CHECK_THROWS_AS(invert_state(m, reordered, 0), std::invalid_argument);

  auto duplicate = cert;
  duplicate.order[1] = duplicate.order[0];
  CHECK_THROWS_AS(invert_state(m, duplicate, 0), std::invalid_argument);
}

TEST_CASE("brute force oracle fixtures") {
  CHECK(brute_force_invertible(fixtures::uncertified4()).invertible);
  CHECK(brute_force_invertible(fixtures::machine4()).invertible);

  const auto result = brute_force_invertible(fixtures::collapse2());
  REQUIRE(!result.invertible);
  REQUIRE(result.collision.has_value());
  const auto [a, b] = *result.collision;
  CHECK(a != b);
  CHECK(apply(fixtures::collapse2(), a) == apply(fixtures::collapse2(), b));
}

TEST_CASE("brute force oracle honors the cap") {
  const auto m = VectorialMapping::shift(6);
  CHECK_THROWS_AS(brute_force_invertible(m, 5), std::invalid_argument);
  CHECK(brute_force_invertible(m, 6).invertible);
}

TEST_CASE("inverse_mapping fixtures") {
  const auto inc = fixtures::increment4();
  const auto dec = inverse_mapping(inc);
  CHECK(dec.output(0) == parse_anf("x0 ^ 1", 4));
  for (State s = 0; s < 16; ++s) {
    CHECK(apply(dec, apply(inc, s)) == s);
    CHECK(apply(inc, apply(dec, s)) == s);
  }

  const auto id = VectorialMapping::identity(3);
  CHECK(inverse_mapping(id) == id);

  const auto m9 = fixtures::renamed4();
  const auto m9_inv = inverse_mapping(m9);
  for (State s = 0; s < 16; ++s) CHECK(apply(m9_inv, apply(m9, s)) == s);

  CHECK_THROWS_AS(inverse_mapping(fixtures::collapse2()), std::invalid_argument);
}

TEST_CASE("property: acceptance implies bijectivity") {
  // A slice of the full soundness sweep (the acceptance suite runs >= 10^4).
  SplitMix64 rng(0x5eed2001);
  int accepted_count = 0;
  for (int iter = 0; iter < 2000; ++iter) {
    const unsigned n = 3 + static_cast<unsigned>(rng.below(6));
    const auto m = (iter % 2) ? testutil::random_mapping(rng, n, 4, 2)
                              : testutil::random_triangular_mapping(rng, n, 3);
    const auto outcome = check_theorem1(m);
    if (!outcome.accepted) continue;
    ++accepted_count;
    REQUIRE(brute_force_invertible(m).invertible);
    CHECK_NOTHROW(validate_certificate(m, *outcome.certificate));
    const State probe = rng.below(State{1} << n);
    REQUIRE(invert_state(m, *outcome.certificate, apply(m, probe)) == probe);
  }
  CHECK(accepted_count > 200);  // the sweep must actually exercise acceptance
}

TEST_CASE("property: the verdict ignores output order") {
  SplitMix64 rng(0x5eed2002);
  for (int iter = 0; iter < 150; ++iter) {
    const unsigned n = 3 + static_cast<unsigned>(rng.below(5));
    const auto m = (iter % 2) ? testutil::random_mapping(rng, n, 4, 2)
                              : testutil::random_triangular_mapping(rng, n, 2);
    // Shuffle output positions only; variables keep their names.
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i) perm[i] = i;
    for (unsigned i = 0; i + 1 < n; ++i)
      std::swap(perm[i], perm[i + rng.below(n - i)]);
    std::vector<AnfFunction> shuffled;
    shuffled.reserve(n);
    for (unsigned i = 0; i < n; ++i) shuffled.push_back(m.output(perm[i]));
    const VectorialMapping permuted(n, std::move(shuffled));
    REQUIRE(check_theorem1(m).accepted == check_theorem1(permuted).accepted);
  }
}

TEST_CASE("property: collision witnesses are genuine") {
  SplitMix64 rng(0x5eed2003);
  for (int iter = 0; iter < 300; ++iter) {
    const unsigned n = 2 + static_cast<unsigned>(rng.below(5));
    const auto m = testutil::random_mapping(rng, n, 3, 2);
    const auto result = brute_force_invertible(m);
    if (result.invertible) {
      CHECK(!result.collision.has_value());
    } else {
      REQUIRE(result.collision.has_value());
      CHECK(result.collision->a != result.collision->b);
      CHECK(apply(m, result.collision->a) == apply(m, result.collision->b));
    }
  }
}

TEST_CASE("property: inverse_mapping round trips on random bijections") {
  SplitMix64 rng(0x5eed2004);
  int built = 0;
  for (int iter = 0; iter < 200 && built < 60; ++iter) {
    const unsigned n = 3 + static_cast<unsigned>(rng.below(4));
    const auto m = testutil::random_triangular_mapping(rng, n, 2);
    if (!brute_force_invertible(m).invertible) continue;
    ++built;
    const auto inv = inverse_mapping(m);
    for (State s = 0; s < (State{1} << n); ++s)
      REQUIRE(apply(inv, apply(m, s)) == s);
  }
  CHECK(built == 60);
}
