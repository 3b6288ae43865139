#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qrep/permutation_group.hpp"
#include "qrep/quandle.hpp"
#include "qrep/quandle_io.hpp"

using namespace qrep;

namespace {

std::vector<std::set<Element>> conjugacy_classes(const oracle::Table& g) {
  const std::size_t n = g.size();
  std::size_t e = 0;
  while (g[e][0] != 0) ++e;
  std::vector<std::set<Element>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<Element> cls;
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t yinv = 0;
      while (g[y][yinv] != e) ++yinv;
      cls.insert(g[g[y][x]][yinv]);
    }
    for (Element c : cls) seen[c] = true;
    classes.push_back(cls);
  }
  return classes;
}

bool is_automorphism(const FiniteQuandle& q, const Permutation& p) {
  for (Element y = 0; y < q.size(); ++y)
    for (Element z = 0; z < q.size(); ++z)
      if (p(q(y, z)) != q(p(y), p(z))) return false;
  return true;
}

}  // namespace

TEST(Permutation, ValidatesImages) {
  EXPECT_THROW(Permutation({0, 0, 1}), domain_error);
  EXPECT_THROW(Permutation({0, 3, 1}), domain_error);
  const Permutation p({1, 2, 0});
  EXPECT_EQ(p.compose(p.inverse()), Permutation::identity(3));
  EXPECT_EQ(p.compose(p).compose(p), Permutation::identity(3));
  EXPECT_EQ(p.fixed_points(), 0u);
  EXPECT_TRUE(Permutation::identity(4).is_identity());
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  const Permutation a({1, 0, 2});
  const Permutation b({0, 2, 1});
  const Permutation ab = a.compose(b);
  for (Element x = 0; x < 3; ++x) EXPECT_EQ(ab(x), a(b(x)));
}

TEST(Dihedral, SmallTables) {
  EXPECT_EQ(dihedral(1).table(), (OperationTable{{0}}));
  EXPECT_EQ(dihedral(3).table(), (OperationTable{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
  EXPECT_EQ(dihedral(4)(1, 2), 3u);
  EXPECT_THROW(dihedral(0), domain_error);
  for (std::size_t n = 1; n <= 16; ++n) EXPECT_EQ(dihedral(n).table(), oracle::dihedral_table(n)) << n;
}

TEST(Alexander, Examples) {
  const auto trivial = alexander(5, 1);
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) EXPECT_EQ(trivial(x, y), x);
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_EQ(alexander(n, static_cast<std::int64_t>(n) - 1).table(), dihedral(n).table());
  EXPECT_EQ(alexander(5, 2)(1, 3), 4u);
  EXPECT_THROW(alexander(6, 2), domain_error);
  EXPECT_THROW(alexander(6, 3), domain_error);
  EXPECT_THROW(alexander(0, 1), domain_error);
}

TEST(Conjugation, AbelianIsTrivial) {
  const auto q = conjugation_quandle(oracle::cyclic_cayley(5));
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) EXPECT_EQ(q(x, y), x);
}

TEST(Conjugation, S3OrbitsAreConjugacyClasses) {
  const auto s3 = oracle::s3_cayley();
  const auto q = conjugation_quandle(s3);
  const auto blocks = orbits(q);
  const auto classes = conjugacy_classes(s3);
  ASSERT_EQ(blocks.size(), classes.size());
  std::multiset<std::size_t> sizes;
  for (const auto& b : blocks) {
    sizes.insert(b.size());
    const std::set<Element> bs(b.begin(), b.end());
    EXPECT_NE(std::find(classes.begin(), classes.end(), bs), classes.end());
  }
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
  // The identity (lexicographically first permutation) is fixed by everything.
  for (Element y = 0; y < 6; ++y) EXPECT_EQ(q(0, y), 0u);
}

TEST(Core, Examples) {
  const auto z2 = core_quandle(oracle::cyclic_cayley(2));
  EXPECT_EQ(z2.table(), (OperationTable{{0, 0}, {1, 1}}));
  for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(core_quandle(oracle::cyclic_cayley(n)).table(), dihedral(n).table());
  const auto core_s3 = core_quandle(oracle::s3_cayley());
  for (Element x = 0; x < 6; ++x) EXPECT_EQ(core_s3(x, x), x);
}

TEST(GroupTable, RejectsInvalid) {
  EXPECT_THROW(conjugation_quandle({{0, 1}, {0, 1}}), domain_error);
  EXPECT_THROW(core_quandle({{1, 0}, {0, 0}}), domain_error);
  EXPECT_THROW(conjugation_quandle({{0, 1}, {1}}), domain_error);
  // Associative with identity but 1 has no inverse: {0,1} under max.
  EXPECT_THROW(conjugation_quandle({{0, 1}, {1, 1}}), domain_error);
}

TEST(Axioms, Examples) {
  EXPECT_TRUE(check_axioms(dihedral(6).table()).all());
  OperationTable sum(5, std::vector<Element>(5));
  for (Element x = 0; x < 5; ++x)
    for (Element y = 0; y < 5; ++y) sum[x][y] = (x + y) % 5;
  EXPECT_FALSE(check_axioms(sum).idempotent);
  const OperationTable constant(4, std::vector<Element>(4, 2));
  EXPECT_FALSE(check_axioms(constant).bijective_columns);
  EXPECT_THROW(check_axioms({{0, 5}, {1, 1}}), domain_error);
  EXPECT_THROW(FiniteQuandle::from_table(constant), domain_error);
}

TEST(Axioms, AgreeWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    OperationTable t(n, std::vector<Element>(n));
    for (auto& row : t)
      for (auto& v : row) v = pick(rng);
    const auto r = check_axioms(t);
    EXPECT_EQ(r.bijective_columns, oracle::rack_columns_bijective(t));
    EXPECT_EQ(r.right_distributive, oracle::right_distributive(t));
    EXPECT_EQ(r.idempotent, oracle::idempotent(t));
  }
}

TEST(RightTranslation, Dihedral5) {
  EXPECT_EQ(right_translation(dihedral(5), 0).images(), (std::vector<Element>{0, 4, 3, 2, 1}));
  EXPECT_THROW(right_translation(dihedral(5), 5), domain_error);
}

TEST(RightTranslation, IsAutomorphism) {
  std::vector<FiniteQuandle> qs;
  for (std::size_t n = 1; n <= 20; ++n) qs.push_back(dihedral(n));
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::int64_t u = 1; u < static_cast<std::int64_t>(n); ++u)
      if (std::gcd(u, static_cast<std::int64_t>(n)) == 1) qs.push_back(alexander(n, u));
  qs.push_back(conjugation_quandle(oracle::s3_cayley()));
  qs.push_back(core_quandle(oracle::s3_cayley()));
  for (const auto& q : qs)
    for (Element x = 0; x < q.size(); ++x) EXPECT_TRUE(is_automorphism(q, right_translation(q, x)));
}

TEST(RightTranslation, DihedralInvolutions) {
  for (std::size_t n = 1; n <= 24; ++n) {
    const auto q = dihedral(n);
    for (Element x = 0; x < n; ++x) {
      const auto r = right_translation(q, x);
      EXPECT_TRUE(r.compose(r).is_identity());
    }
  }
}

TEST(InnerGroup, Orders) {
  EXPECT_EQ(inner_group(dihedral(3)).order(), 6u);
  EXPECT_EQ(inner_group(dihedral(4)).order(), 4u);
  EXPECT_EQ(inner_group(alexander(5, 1)).order(), 1u);
  for (std::size_t n = 3; n <= 24; ++n) {
    const std::size_t expected = n % 2 == 0 ? n : 2 * n;
    EXPECT_EQ(inner_group(dihedral(n)).order(), expected) << n;
    EXPECT_EQ(inner_group(dihedral(n)).order(), oracle::inner_group(oracle::dihedral_table(n)).size()) << n;
  }
}

TEST(InnerGroup, ClosedAndWordsEvaluate) {
  for (const auto& q : {dihedral(7), dihedral(8), alexander(7, 3), conjugation_quandle(oracle::s3_cayley())}) {
    const auto g = inner_group(q);
    const auto& elems = g.elements();
    const std::set<Permutation> as_set(elems.begin(), elems.end());
    EXPECT_EQ(as_set.size(), elems.size());
    for (const auto& a : elems) {
      EXPECT_TRUE(g.contains(a.inverse()));
      for (const auto& b : elems) EXPECT_TRUE(g.contains(a.compose(b)));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) EXPECT_EQ(g.evaluate(g.words()[i]), elems[i]);
    // Shortlex: word lengths never decrease along the BFS order.
    for (std::size_t i = 1; i < elems.size(); ++i) EXPECT_LE(g.words()[i - 1].size(), g.words()[i].size());
  }
}

TEST(Orbits, Examples) {
  EXPECT_EQ(orbits(dihedral(6)), (Partition{{0, 2, 4}, {1, 3, 5}}));
  EXPECT_EQ(orbits(dihedral(7)), (Partition{{0, 1, 2, 3, 4, 5, 6}}));
  EXPECT_EQ(orbits(alexander(3, 1)), (Partition{{0}, {1}, {2}}));
  EXPECT_TRUE(is_connected(dihedral(5)));
  EXPECT_FALSE(is_connected(dihedral(8)));
  EXPECT_TRUE(is_connected(dihedral(1)));
}

TEST(Orbits, PartitionProperty) {
  for (std::size_t n = 1; n <= 20; ++n) {
    std::vector<int> hits(n, 0);
    for (const auto& b : orbits(dihedral(n)))
      for (Element x : b) ++hits[x];
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST(GeneratingSet, ClosesToEverything) {
  for (const auto& q : {dihedral(12), dihedral(11), alexander(7, 3), alexander(4, 1), conjugation_quandle(oracle::s3_cayley())}) {
    const auto gens = quandle_generating_set(q);
    std::set<Element> closed(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<Element> cur(closed.begin(), closed.end());
      for (Element a : cur)
        for (Element b : cur) grew |= closed.insert(q(a, b)).second;
    }
    EXPECT_EQ(closed.size(), q.size());
  }
  EXPECT_EQ(quandle_generating_set(dihedral(12)).size(), 2u);
}

TEST(TableIo, RoundTrip) {
  std::ostringstream out;
  write_table(out, dihedral(5).table());
  EXPECT_EQ(out.str().substr(0, 12), "5\n1 3 5 2 4\n");
  EXPECT_EQ(parse_table(out.str()), dihedral(5).table());
}

TEST(TableIo, Errors) {
  EXPECT_THROW(parse_table(""), domain_error);
  EXPECT_THROW(parse_table("0\n"), domain_error);
  EXPECT_THROW(parse_table("2\n1 2\n2"), domain_error);
  EXPECT_THROW(parse_table("2\n1 2\n2 3\n"), domain_error);
  EXPECT_THROW(parse_table("2\n1 2\n2 0\n"), domain_error);
  EXPECT_THROW(parse_table("2\n1 1\n2 2\n7\n"), domain_error);
  EXPECT_THROW(parse_table("2\n1 x\n2 2\n"), domain_error);
  EXPECT_NO_THROW(parse_table("2\n1 1\n2 2\n"));
}
