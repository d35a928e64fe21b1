#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "wlog/homology.hpp"

using namespace wlog;
using namespace fixtures;

namespace {

IntMatrix fromRows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

void checkSmith(const IntMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CHECK(multiply(multiply(s.u, a), s.v) == s.d);
  Int du = determinant(s.u), dv = determinant(s.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t i = 0; i + 1 < s.invariantFactors.size(); ++i) {
    CHECK(s.invariantFactors[i + 1] % s.invariantFactors[i] == 0);
  }
  for (const Int& f : s.invariantFactors) CHECK(f > 0);
  // off-diagonal of d is zero
  for (int i = 0; i < s.d.rows(); ++i)
    for (int j = 0; j < s.d.cols(); ++j)
      if (i != j) CHECK(s.d.at(i, j) == 0);
}

}  // namespace

TEST_CASE("smith normal form pinned examples") {
  SmithForm diag = smith_normal_form(fromRows({{2, 0}, {0, 3}}));
  CHECK(diag.rank == 2);
  REQUIRE(diag.invariantFactors.size() == 2);
  CHECK(diag.invariantFactors[0] == 1);
  CHECK(diag.invariantFactors[1] == 6);

  SmithForm zero = smith_normal_form(IntMatrix(3, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.invariantFactors.empty());

  SmithForm ones = smith_normal_form(fromRows({{1, 1}, {1, 1}}));
  CHECK(ones.rank == 1);
  REQUIRE(ones.invariantFactors.size() == 1);
  CHECK(ones.invariantFactors[0] == 1);

  SmithForm empty = smith_normal_form(IntMatrix(0, 0));
  CHECK(empty.rank == 0);
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> dim(0, 8), entry(-9, 9);
  for (int round = 0; round < 150; ++round) {
    IntMatrix m(dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    checkSmith(m);
  }
  // a couple of larger ones to shake out coefficient growth
  std::uniform_int_distribution<int> big(20, 30);
  for (int round = 0; round < 3; ++round) {
    IntMatrix m(big(rng), big(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    checkSmith(m);
  }
}

TEST_CASE("row-span membership") {
  IntMatrix m = fromRows({{2, 0, 0}, {0, 3, 0}});
  CHECK(in_row_span(m, {2, 3, 0}));
  CHECK(in_row_span(m, {4, -3, 0}));
  CHECK_FALSE(in_row_span(m, {1, 0, 0}));
  CHECK_FALSE(in_row_span(m, {0, 0, 1}));
  CHECK(in_row_span(m, {0, 0, 0}));
}

TEST_CASE("presentation complex homology") {
  // commutator relators: boundary vanishes
  Alphabet v({"v1", "v2", "v3", "v4", "v5"});
  std::vector<Word> relators = {
      commutator(Word::letter(0), Word::letter(1)),
      commutator(Word::letter(1), Word::letter(2)),
      commutator(Word::letter(2), Word::letter(3)),
      commutator(Word::letter(4), parse(v, "v2^-1*v3")),
  };
  ComplexHomology h = complex_homology(5, relators);
  CHECK(h.h1 == AbelianGroupDescriptor{5, {}});
  CHECK(h.h2FreeRank == 4);

  // three surjective-boundary relators on three generators
  Alphabet a({"a1", "a2", "a3"});
  std::vector<Word> mixed = {
      Word::letter(0) * Word::letter(1, -1),
      Word::letter(0) * Word::letter(2, -1),
      Word::letter(1) * Word::letter(2, -1),
  };
  ComplexHomology hm = complex_homology(3, mixed);
  CHECK(hm.h1 == AbelianGroupDescriptor{1, {}});
  CHECK(hm.h2FreeRank == 1);

  // <a | a>
  ComplexHomology ha = complex_homology(1, {Word::letter(0)});
  CHECK(ha.h1.trivial());
  CHECK(ha.h2FreeRank == 0);

  // torsion: <a | a^2>
  ComplexHomology ht = complex_homology(1, {Word::letter(0, 2)});
  CHECK(ht.h1.freeRank == 0);
  REQUIRE(ht.h1.torsion.size() == 1);
  CHECK(ht.h1.torsion[0] == 2);
  CHECK(ht.h1.str() == "Z/2");
}

TEST_CASE("exterior rank") {
  Alphabet v({"v1", "v2", "v3", "v4", "v5"});
  std::vector<Word> fig4 = {
      commutator(Word::letter(0), Word::letter(1)),
      commutator(Word::letter(1), Word::letter(2)),
      commutator(Word::letter(2), Word::letter(3)),
      commutator(Word::letter(4), parse(v, "v2^-1*v3")),
  };
  CHECK(exterior_rank(fig4, 5) == 4);

  Alphabet abc({"a", "b", "c"});
  std::vector<Word> chain = {
      commutator(Word::letter(0), Word::letter(1)),
      commutator(Word::letter(1), Word::letter(2)),
      commutator(Word::letter(0), parse(abc, "b*c")),
  };
  CHECK(exterior_rank(chain, 3) == 3);

  std::vector<Word> dup = {commutator(Word::letter(0), Word::letter(1)),
                           commutator(Word::letter(0), Word::letter(1))};
  CHECK(exterior_rank(dup, 2) == 1);

  CHECK_THROWS_AS(exterior_rank({Word::letter(0)}, 2), NotApplicable);

  // invariance under conjugation and inversion of a relator
  std::mt19937 rng(59);
  for (int round = 0; round < 30; ++round) {
    std::vector<Word> rels;
    for (int i = 0; i < 3; ++i) {
      rels.push_back(commutator(randomWord(rng, 4, 6), randomWord(rng, 4, 6)));
    }
    long r = exterior_rank(rels, 4);
    auto mutated = rels;
    mutated[1] = conjugate(mutated[1], randomWord(rng, 4, 5));
    mutated[2] = mutated[2].inverse();
    CHECK(exterior_rank(mutated, 4) == r);
    CHECK(r <= static_cast<long>(rels.size()));
  }
}

TEST_CASE("exterior span membership") {
  std::vector<Word> basis = {commutator(Word::letter(0), Word::letter(1)),
                             commutator(Word::letter(1), Word::letter(2))};
  Word inSpan = commutator(Word::letter(0), Word::letter(1)) *
                commutator(Word::letter(1), Word::letter(2));
  CHECK(in_exterior_span(basis, inSpan, 3));
  CHECK_FALSE(in_exterior_span(basis, commutator(Word::letter(0), Word::letter(2)), 3));
}

TEST_CASE("flag complex H1") {
  CHECK(flag_h1(flag_two_skeleton(cycleGraph(4))) == AbelianGroupDescriptor{1, {}});
  CHECK(flag_h1(flag_two_skeleton(completeGraph(3))).trivial());
  CHECK(flag_h1(flag_two_skeleton(exampleGraph())).trivial());
}

TEST_CASE("pi1 trivial certificate") {
  SimplicialGraph cone = coneOver(cycleGraph(5), "apex");
  CHECK(pi1_trivial_certificate(flag_two_skeleton(cone)) == CertificateStatus::Certified);

  CHECK(pi1_trivial_certificate(flag_two_skeleton(cycleGraph(4))) ==
        CertificateStatus::Unknown);

  CHECK(pi1_trivial_certificate(flag_two_skeleton(exampleGraph())) ==
        CertificateStatus::Certified);

  CHECK(pi1_trivial_certificate(flag_two_skeleton(completeGraph(4))) ==
        CertificateStatus::Certified);

  // certificate implies trivial H1
  std::mt19937 rng(71);
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("r" + std::to_string(i));
  for (int round = 0; round < 30; ++round) {
    FlagSkeleton skel = flag_two_skeleton(randomConnectedGraph(rng, names, 0.5));
    if (pi1_trivial_certificate(skel) == CertificateStatus::Certified) {
      CHECK(flag_h1(skel).trivial());
    }
  }
}
