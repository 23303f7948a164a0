#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "letterplace/poset.hpp"
#include "support/generators.hpp"

using namespace lp;

namespace {

Poset v_poset() { return Poset::parse("a\nb\nc\na < b\na < c"); }

Poset p8_poset() {
  return Poset::parse("a\nb\nc\nd\ne\nf\ng\nh\na < b\na < f\nb < c\nb < e\nc < d\nf < g\ng < h");
}

ElemSet set_of(const Poset& p, std::initializer_list<const char*> names) {
  ElemSet s = 0;
  for (auto n : names) s |= elem_bit(*p.index_of(n));
  return s;
}

}  // namespace

TEST_CASE("poset parsing") {
  Poset v = v_poset();
  REQUIRE(v.size() == 3);
  REQUIRE(v.covers().size() == 2);
  REQUIRE(v.leq(*v.index_of("a"), *v.index_of("b")));
  REQUIRE(!v.leq(*v.index_of("b"), *v.index_of("c")));

  Poset single = Poset::parse("p");
  REQUIRE(single.size() == 1);
  REQUIRE(single.covers().empty());

  REQUIRE_THROWS_AS(Poset::parse("x\ny\nx < y\ny < x"), ParseError);
  REQUIRE_THROWS_WITH(Poset::parse("x\ny\nx < y\ny < x"),
                      Catch::Matchers::ContainsSubstring("cycle"));
  REQUIRE_THROWS_AS(Poset::parse("x\nx"), ParseError);
  REQUIRE_THROWS_AS(Poset::parse("x\nx < y"), ParseError);
  REQUIRE_THROWS_AS(Poset::parse("x y z"), ParseError);

  // comments, blank lines, redundant comparabilities
  Poset p = Poset::parse("# chain\na\n\nb\nc\na < b\nb < c\na < c  # transitive, reduced away");
  REQUIRE(p.covers().size() == 2);
}

TEST_CASE("min max and antichains") {
  Poset v = v_poset();
  ElemSet all = v.all();
  REQUIRE(v.min_of(all) == set_of(v, {"a"}));
  REQUIRE(v.max_of(all) == set_of(v, {"b", "c"}));

  Poset c3 = Poset::chain(3);
  REQUIRE(c3.min_of(c3.all()) == 1);
  REQUIRE(c3.max_of(c3.all()) == 4);

  Poset a2 = Poset::antichain(2);
  REQUIRE(a2.min_of(a2.all()) == a2.all());
  REQUIRE(a2.max_of(a2.all()) == a2.all());

  REQUIRE(v.width() == 2);
  REQUIRE(Poset::chain(4).width() == 1);
  std::vector<ElemSet> mas = v.maximal_antichains();
  REQUIRE(mas == std::vector<ElemSet>{set_of(v, {"a"}), set_of(v, {"b", "c"})});
  REQUIRE(!v.all_maximal_antichains_same_size());

  // width equals the max over maximal antichains
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    Poset p = test_gen::random_poset(rng, 7);
    int w = 0;
    for (ElemSet m : p.maximal_antichains()) w = std::max(w, set_size(m));
    REQUIRE(p.width() == w);
  }
}

TEST_CASE("eight-element tree of the worked example") {
  Poset p8 = p8_poset();
  REQUIRE(p8.is_rooted_forest());
  REQUIRE(p8.unique_min() == p8.index_of("a"));
  // brute-force antichain width; the top diagram row sits at c(n-1)+1 = 4
  REQUIRE(p8.width() == 3);
}

TEST_CASE("subset order") {
  Poset v = v_poset();
  auto S = [&](std::initializer_list<const char*> names) { return set_of(v, names); };
  REQUIRE(v.subset_leq(S({"a"}), S({"b", "c"})));
  REQUIRE(!v.subset_leq(S({"b"}), S({"c"})));
  REQUIRE(v.subset_leq(S({"b", "c"}), S({"b", "c"})));
  REQUIRE(!v.subset_leq(S({"a", "b"}), S({"a", "b"})));
  REQUIRE_THROWS_AS(v.subset_leq(0, S({"a"})), std::invalid_argument);

  // A <= A iff A is an antichain; transitivity on random posets
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    Poset p = test_gen::random_poset(rng, 6);
    std::uniform_int_distribution<ElemSet> dist(1, p.all());
    ElemSet a = dist(rng), b = dist(rng), c = dist(rng);
    REQUIRE(p.subset_leq(a, a) == p.is_antichain(a));
    if (p.subset_leq(a, b) && p.subset_leq(b, c)) REQUIRE(p.subset_leq(a, c));
    REQUIRE(p.is_antichain(p.min_of(a)));
    REQUIRE(p.is_antichain(p.max_of(a)));
    REQUIRE((p.min_of(a) & ~a) == 0);
    REQUIRE((p.max_of(a) & ~a) == 0);
  }
}

TEST_CASE("order relation equals recomputed closure") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    Poset p = test_gen::random_poset(rng, 8);
    int k = p.size();
    // independent Floyd-Warshall from the cover relation
    std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) reach[i][i] = true;
    for (auto& [a, b] : p.covers()) reach[a][b] = true;
    for (int m = 0; m < k; ++m)
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (reach[i][m] && reach[m][j]) reach[i][j] = true;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) REQUIRE(p.leq(i, j) == reach[i][j]);
  }
}

TEST_CASE("isotone maps and multichains") {
  Poset v = v_poset();
  REQUIRE(Poset::isotone_maps(v, Poset::chain(2)).size() == 5);
  REQUIRE(v.multichains(2).size() == 5);
  REQUIRE(Poset::chain(1).multichains(5).size() == 1);
  REQUIRE(v.count_multichains(2) == 5);
  REQUIRE(v.count_isotone_to_chain(2) == 5);

  // |isotone_maps(P,[n])| is nondecreasing in n, and matches the
  // ideal-lattice count
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    Poset p = test_gen::random_poset(rng, 5);
    size_t prev = 0;
    for (int n = 1; n <= 3; ++n) {
      auto maps = Poset::isotone_maps(p, Poset::chain(n));
      REQUIRE(maps.size() >= prev);
      REQUIRE(p.count_isotone_to_chain(n) == static_cast<long long>(maps.size()));
      REQUIRE(p.count_multichains(n) ==
              static_cast<long long>(Poset::isotone_maps(Poset::chain(n), p).size()));
      prev = maps.size();
    }
  }
}

TEST_CASE("rooted forest operations") {
  Poset v = v_poset();
  REQUIRE(v.is_rooted_forest());
  REQUIRE(v.unique_min() == v.index_of("a"));

  Poset rest = v.remove_element(*v.index_of("a"));
  REQUIRE(rest.size() == 2);
  REQUIRE(rest.covers().empty());
  auto comps = rest.components();
  REQUIRE(comps.size() == 2);
  REQUIRE(comps[0].size() == 1);
  REQUIRE(comps[1].size() == 1);

  REQUIRE_THROWS_AS(v.remove_element(17), std::invalid_argument);

  Poset n_shape = Poset::parse("a\nb\nc\nd\na < c\nb < c\nb < d");
  REQUIRE(!n_shape.is_rooted_forest());

  // canonical form identifies isomorphic forests and separates shapes
  Poset v2 = Poset::parse("r\ny\nx\nr < x\nr < y");
  REQUIRE(v2.forest_canonical() == v.forest_canonical());
  REQUIRE(Poset::chain(3).forest_canonical() != v.forest_canonical());
  auto forests4 = test_gen::rooted_forests_on(4);
  std::set<std::string> canon;
  for (auto& f : forests4) canon.insert(f.forest_canonical());
  REQUIRE(canon.size() == forests4.size());
  REQUIRE(forests4.size() == 9);  // rooted forests on 4 unlabeled nodes
}
