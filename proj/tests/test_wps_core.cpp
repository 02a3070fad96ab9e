#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fano/errors.hpp"
#include "fano/weights.hpp"
#include "oracles.hpp"

using fano::Nat;
using fano::Rat;
using fano::Weights;

namespace {
Weights W(const char* csv) { return Weights::parse(csv); }
}  // namespace

TEST_CASE("parse and construction") {
  CHECK(W("33, 22,6 ,5").str() == "33,22,6,5");
  CHECK(W("33,22,6,5").name() == "P^3(33,22,6,5)");
  CHECK(W("3,2,1").dimension() == 2);
  CHECK_THROWS_AS(W("3"), fano::InvalidInput);
  CHECK_THROWS_AS(W("3,0,1"), fano::InvalidInput);
  CHECK_THROWS_AS(W("3,,1"), fano::InvalidInput);
  CHECK_THROWS_WITH_AS(W("3,x,1"), doctest::Contains("#2"), fano::InvalidInput);
}

TEST_CASE("is_well_formed") {
  CHECK(is_well_formed(W("3,2,1")));
  CHECK_FALSE(is_well_formed(W("2,2,1")));
  CHECK(is_well_formed(W("1,1")));
  CHECK_FALSE(is_well_formed(W("6,4,2,1")));
  CHECK(is_well_formed(W("33,22,6,5")));
}

TEST_CASE("fano_index") {
  CHECK(fano_index(W("33,22,6,5")) == Nat(66u));
  CHECK(fano_index(W("7,5,3,2")) == Nat(17u));
  CHECK(fano_index(W("430,287,123,21,20")) == Nat(881u));
  CHECK(fano_index(W("3,2,1")) == Nat(6u));
  CHECK_THROWS_AS(fano_index(W("2,2,1")), fano::PreconditionViolation);
}

TEST_CASE("is_gorenstein") {
  CHECK(is_gorenstein(W("3,2,1")));
  CHECK_FALSE(is_gorenstein(W("7,5,3,2")));
  CHECK(is_gorenstein(W("4,3,2,1,1,1")));
  CHECK(is_gorenstein(W("1,1,1")));
}

TEST_CASE("anticanonical_volume") {
  CHECK(anticanonical_volume(W("4,3,2,1,1,1")) == Rat(Nat(10368u)));
  CHECK(anticanonical_volume(W("2,1,1,1,1")) == Rat(Nat(648u)));
  CHECK(anticanonical_volume(W("1,1,1")) == Rat(Nat(9u)));
  CHECK(anticanonical_volume(W("7,5,3,2")) == Rat(Nat(4913u), Nat(210u)));
}

TEST_CASE("coordinate_singularities") {
  CHECK(coordinate_singularities(W("1,1,1")).empty());

  auto pts = coordinate_singularities(W("3,2,1"));
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].index == 0);
  CHECK(pts[0].singularity.str() == "1/3(2,1)");
  CHECK(pts[1].index == 1);
  CHECK(pts[1].singularity.str() == "1/2(1,1)");

  pts = coordinate_singularities(W("7,5,3,2"));
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].singularity.str() == "1/7(5,3,2)");
  CHECK(pts[1].singularity.str() == "1/5(2,3,2)");
  CHECK(pts[2].singularity.str() == "1/3(1,2,2)");
  CHECK(pts[3].singularity.str() == "1/2(1,1,1)");

  CHECK_THROWS_AS(coordinate_singularities(W("2,2,1")), fano::PreconditionViolation);
}

TEST_CASE("canonical_form") {
  CHECK(W("1,2,3").canonical_form().str() == "3,2,1");
  CHECK(W("5,33,6,22").canonical_form().str() == "33,22,6,5");
  CHECK(W("1,1,1").canonical_form().str() == "1,1,1");
  CHECK(W("5,33,6,22").canonical_form().canonical_form().str() == "33,22,6,5");
  CHECK(W("1,2,3") == W("3,1,2"));
  CHECK_FALSE(W("1,2,3") == W("1,2,4"));
}

TEST_CASE("well-formedness agrees with the naive oracle") {
  for (std::int64_t a = 1; a <= 12; ++a)
    for (std::int64_t b = 1; b <= 12; ++b)
      for (std::int64_t c = 1; c <= 12; ++c) {
        const Weights w({Nat(a), Nat(b), Nat(c)});
        CHECK(is_well_formed(w) == oracle::weights_well_formed({a, b, c}));
      }
}
