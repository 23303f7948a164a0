#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "letterplace/homology.hpp"
#include "letterplace/scomplex.hpp"
#include "support/generators.hpp"
#include "support/snf_oracle.hpp"

using namespace lp;

namespace {

const FieldSpec kQQ(0);
const FieldSpec kGF2(2);
const FieldSpec kGF3(3);
const std::vector<FieldSpec> kFields = {kQQ, kGF2, kGF3};

SComplex rp2_complex() {
  // 6-vertex triangulation of the projective plane.  All 15 edges are
  // faces, so the minimal nonfaces are exactly the 10 non-facet triples.
  std::vector<std::string> names = {"1", "2", "3", "4", "5", "6"};
  std::vector<std::vector<std::string>> facets = {
      {"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"}, {"1", "5", "6"},
      {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "5"}, {"3", "4", "6"}};
  // nonfaces: every triple that is not a facet (edges are all present)
  std::vector<std::vector<std::string>> gens;
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j)
      for (size_t k = j + 1; k < 6; ++k) {
        std::vector<std::string> tri = {names[i], names[j], names[k]};
        if (std::find(facets.begin(), facets.end(), tri) == facets.end()) gens.push_back(tri);
      }
  return SComplex::from_named_nonfaces(names, gens);
}

}  // namespace

TEST_CASE("nonface minimality and faces") {
  SComplex x = SComplex::from_named_nonfaces({"1", "2", "3"}, {{"1", "2"}, {"1", "2", "3"}});
  REQUIRE(x.nonfaces().size() == 1);  // {1,2,3} contains {1,2}

  SComplex full = SComplex::full_simplex({"1", "2"});
  REQUIRE(full.nonfaces().empty());
  REQUIRE(full.face_count() == 4);

  SComplex tri = SComplex::from_named_nonfaces({"1", "2", "3"}, {{"1", "2", "3"}});
  REQUIRE(tri.face_count() == 7);  // boundary of the triangle
  REQUIRE(tri.facets().size() == 3);

  // face predicate agrees with a full subset scan
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    SComplex c = test_gen::random_complex(rng, 7);
    auto brute = test_oracle::brute_faces(c);
    long long total = 0;
    for (auto& lv : brute) total += static_cast<long long>(lv.size());
    REQUIRE(c.face_count() == total);
    auto levels = c.faces_by_card();
    for (size_t l = 0; l < levels.size(); ++l) REQUIRE(levels[l] == brute[l]);
  }
}

TEST_CASE("restriction") {
  SComplex tri = SComplex::from_named_nonfaces({"1", "2", "3"}, {{"1", "2", "3"}});
  SComplex edge = tri.restrict_to(0b011);
  REQUIRE(edge.n_vertices() == 2);
  REQUIRE(edge.nonfaces().empty());

  SComplex x = SComplex::from_named_nonfaces({"1", "2", "3", "4"}, {{"1", "2"}});
  SComplex r = x.restrict_to(0b1011);
  REQUIRE(r.nonfaces().size() == 1);

  SComplex nothing = x.restrict_to(0);
  REQUIRE(nothing.n_vertices() == 0);
  REQUIRE(reduced_homology(nothing, kQQ) == HPoly::t_pow(-1));
}

TEST_CASE("reduced homology basics") {
  SComplex tri = SComplex::from_named_nonfaces({"1", "2", "3"}, {{"1", "2", "3"}});
  for (auto& k : kFields) REQUIRE(reduced_homology(tri, k) == HPoly::t_pow(1));

  SComplex point = SComplex::full_simplex({"1"});
  for (auto& k : kFields) REQUIRE(reduced_homology(point, k).is_zero());

  SComplex empty = SComplex::full_simplex({});
  REQUIRE(reduced_homology(empty, kQQ) == HPoly::t_pow(-1));

  SComplex void_complex = SComplex::from_nonfaces({}, {0});
  REQUIRE_THROWS_AS(reduced_homology(void_complex, kQQ), std::invalid_argument);

  SComplex two = SComplex::from_named_nonfaces({"1", "2"}, {{"1", "2"}});
  REQUIRE(reduced_homology(two, kGF3) == HPoly::t_pow(0));
}

TEST_CASE("projective plane homology, pinned against the integer oracle") {
  SComplex rp2 = rp2_complex();
  REQUIRE(rp2.face_count() == 1 + 6 + 15 + 10);

  HPoly q = reduced_homology(rp2, kQQ);
  HPoly f2 = reduced_homology(rp2, kGF2);
  HPoly f3 = reduced_homology(rp2, kGF3);

  REQUIRE(q.is_zero());
  REQUIRE(f2 == HPoly::t_pow(1) + HPoly::t_pow(2));
  REQUIRE(f3.is_zero());

  for (auto& k : kFields)
    REQUIRE(test_oracle::homology_via_snf(rp2, k) == reduced_homology(rp2, k));
}

TEST_CASE("engine matches the integer oracle on random complexes") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    SComplex x = test_gen::random_complex(rng, 7);
    for (auto& k : kFields)
      REQUIRE(test_oracle::homology_via_snf(x, k) == reduced_homology(x, k));
  }
}

TEST_CASE("join and suspension") {
  SComplex tri = SComplex::from_named_nonfaces({"1", "2", "3"}, {{"1", "2", "3"}});
  SComplex tri2 = SComplex::from_named_nonfaces({"4", "5", "6"}, {{"4", "5", "6"}});
  SComplex sphere3 = SComplex::join(tri, tri2);
  for (auto& k : kFields) REQUIRE(reduced_homology(sphere3, k) == HPoly::t_pow(3));

  REQUIRE_THROWS_AS(SComplex::join(tri, tri), std::invalid_argument);

  SComplex empty = SComplex::full_simplex({});
  REQUIRE(reduced_homology(empty.suspension(), kQQ) == HPoly::t_pow(0));

  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    SComplex x = test_gen::random_complex(rng, 8);
    for (auto& k : kFields) {
      HPoly base = reduced_homology(x, k);
      REQUIRE(reduced_homology(x.suspension(), k) == base.shifted(1));
    }
  }
}

TEST_CASE("join product law") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 50) {
    SComplex x = test_gen::random_complex(rng, 6);
    SComplex y = test_gen::random_complex(rng, 6);
    std::vector<std::string> renamed;
    for (auto& n : y.vertex_names()) renamed.push_back("w" + n);
    y = SComplex::from_nonfaces(renamed, y.nonfaces());
    SComplex j = SComplex::join(x, y);
    for (auto& k : kFields) {
      HPoly lhs = reduced_homology(j, k).shifted(1);
      HPoly rhs = reduced_homology(x, k).shifted(1) * reduced_homology(y, k).shifted(1);
      REQUIRE(lhs == rhs);
    }
    ++done;
  }
}

TEST_CASE("euler characteristic consistency") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 60; ++t) {
    SComplex x = test_gen::random_complex(rng, 8);
    long long chi = reduced_euler_characteristic(x);
    for (auto& k : kFields) REQUIRE(reduced_homology(x, k).alternating_sum() == chi);
  }
}

TEST_CASE("dominated vertex deletion") {
  // two left vertices with equal neighborhoods: the later one goes
  SComplex x = SComplex::from_named_nonfaces({"a", "a'", "b"}, {{"a", "b"}, {"a'", "b"}});
  SComplex r = reduce_dominated(x, 0b011, 0b100);
  REQUIRE(r.n_vertices() == 2);
  REQUIRE(r.vertex_names()[0] == "a");
  for (auto& k : kFields) REQUIRE(reduced_homology(r, k) == reduced_homology(x, k));

  // no domination: complex unchanged
  SComplex square =
      SComplex::from_named_nonfaces({"a1", "a2", "b1", "b2"}, {{"a1", "b1"}, {"a2", "b2"}});
  REQUIRE(reduce_dominated(square, 0b0011, 0b1100).n_vertices() == 4);

  REQUIRE_THROWS_AS(reduce_dominated(SComplex::from_named_nonfaces({"a", "b", "c"}, {{"a", "b", "c"}}),
                                     0b011, 0b100),
                    std::invalid_argument);

  std::mt19937_64 rng(67);
  for (int t = 0; t < 50; ++t) {
    auto bip = test_gen::random_bipartite_complex(rng, 4);
    SComplex reduced = reduce_dominated(bip.complex, bip.side_a, bip.side_b);
    for (auto& k : kFields)
      REQUIRE(reduced_homology(reduced, k) == reduced_homology(bip.complex, k));
  }
}

TEST_CASE("size guards") {
  // a complex with a huge number of faces trips the enumeration guard
  std::vector<std::string> names;
  for (int i = 0; i < 30; ++i) names.push_back("v" + std::to_string(i));
  SComplex big = SComplex::full_simplex(names);
  REQUIRE_THROWS_AS(big.faces_by_card(), GuardError);
}
