#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "linalg.hpp"
#include "oracle.hpp"
#include "random_ideal.hpp"
#include "test_util.hpp"

using namespace monres;
using test_util::ideal_of;
using test_util::mono;

TEST_CASE("rank of reference matrices") {
  RationalField q;
  SparseMatrix<RationalField> zero;
  zero.rows = 3;
  zero.cols = 4;
  CHECK(matrix_rank(q, zero) == 0);

  SparseMatrix<RationalField> identity;
  identity.rows = identity.cols = 3;
  for (std::size_t i = 0; i < 3; ++i) identity.add_entry(i, i, q.one());
  CHECK(matrix_rank(q, identity) == 3);

  // All-ones 2x2: rank 1 over F_2 and over Q.
  PrimeField f2(2);
  SparseMatrix<PrimeField> ones2;
  ones2.rows = ones2.cols = 2;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) ones2.add_entry(i, j, f2.one());
  CHECK(matrix_rank(f2, ones2) == 1);

  SparseMatrix<RationalField> onesq;
  onesq.rows = onesq.cols = 2;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) onesq.add_entry(i, j, q.one());
  CHECK(matrix_rank(q, onesq) == 1);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  CHECK(f7.add(5, 4) == 2);
  CHECK(f7.sub(2, 5) == 4);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inverse(3) == 5);
  CHECK(f7.div(1, 3) == 5);
  CHECK(f7.neg(2) == 5);
  CHECK_THROWS_AS(f7.inverse(0), DomainError);
  CHECK_THROWS_AS(FieldSpec::prime(6), DomainError);
  CHECK(FieldSpec::parse("Fp:32003").p == 32003);
  CHECK(FieldSpec::parse("Q").kind == FieldSpec::Kind::Rationals);
  CHECK_THROWS_AS(FieldSpec::parse("R"), DomainError);
}

TEST_CASE("lcm lattice of the triangle and of a single generator") {
  auto M = ideal_of("ab, bc, ac");
  auto lattice = lcm_lattice(M);
  const auto& vars = M.variables();
  std::set<Monomial> expected = {mono("1", vars), mono("ab", vars),
                                 mono("bc", vars), mono("ac", vars),
                                 mono("abc", vars)};
  CHECK(std::set<Monomial>(lattice.begin(), lattice.end()) == expected);

  auto single = ideal_of("x^2*y");
  CHECK(lcm_lattice(single).size() == 2);
}

TEST_CASE("dominant ideals have full lcm lattices") {
  std::mt19937_64 rng(37);
  RandomIdealParams params;
  params.vars = 5;
  params.max_gens = 5;
  params.max_exp = 4;
  params.constraint = RandomIdealParams::Constraint::Dominant;
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal M = random_ideal(rng, params);
    CHECK(lcm_lattice(M).size() == (std::size_t(1) << M.generator_count()));
  }
}

TEST_CASE("Betti numbers of the nondominant triangle") {
  // Hand computation on the abc strand: three pair faces and one triple
  // face; the boundary from the triple has rank 1 and the boundary from the
  // pairs onto the singletons has rank 2, leaving beta_2 = 2.
  auto M = ideal_of("ab, bc, ac");
  const auto& vars = M.variables();
  BettiTable table = betti_oracle(M, FieldSpec::rationals());
  CHECK(table.at(0, mono("1", vars)) == 1);
  CHECK(table.at(1, mono("ab", vars)) == 1);
  CHECK(table.at(1, mono("bc", vars)) == 1);
  CHECK(table.at(1, mono("ac", vars)) == 1);
  CHECK(table.at(2, mono("abc", vars)) == 2);
  CHECK(table.entries.size() == 5);
  CHECK(table.pd() == 2);
  CHECK(table.totals() == std::vector<std::int64_t>{1, 3, 2});
}

TEST_CASE("Betti numbers of the Koszul cube") {
  auto M = ideal_of("x^2, y^2, z^2");
  BettiTable table = betti_oracle(M, FieldSpec::rationals());
  CHECK(table.totals() == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(table.pd() == 3);
}

TEST_CASE("monomial coefficients never reach the strand matrices") {
  auto M = ideal_of("x^2, x*y, y^3");
  const auto& vars = M.variables();
  BettiTable table = betti_oracle(M, FieldSpec::rationals());
  CHECK(table.totals() == std::vector<std::int64_t>{1, 3, 2});
  CHECK(table.at(2, mono("x^2*y", vars)) == 1);
  CHECK(table.at(2, mono("x*y^3", vars)) == 1);
}

TEST_CASE("zero and unit ideals") {
  VariableSet vars({"x", "y"});
  BettiTable zero = betti_oracle(MonomialIdeal::zero(vars),
                                 FieldSpec::rationals());
  CHECK(zero.entries.size() == 1);
  CHECK(zero.at(0, Monomial(2)) == 1);
  CHECK(zero.pd() == 0);

  BettiTable unit =
      betti_oracle(ideal_of("1, x"), FieldSpec::rationals());
  CHECK(unit.entries.empty());
  CHECK(unit.pd() == -1);
}

TEST_CASE("beta_0 lives only at multidegree 1") {
  std::mt19937_64 rng(41);
  RandomIdealParams params;
  params.vars = 4;
  params.max_gens = 6;
  params.max_exp = 3;
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal M = random_ideal(rng, params);
    BettiTable table = betti_oracle(M, FieldSpec::rationals());
    const Monomial one(M.variables().size());
    CHECK(table.at(0, one) == 1);
    for (const auto& [key, count] : table.entries) {
      if (key.first == 0) CHECK(key.second == one);
    }
  }
}

TEST_CASE("Euler characteristic and parity per strand") {
  std::mt19937_64 rng(43);
  RandomIdealParams params;
  params.vars = 4;
  params.max_gens = 6;
  params.max_exp = 3;
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal M = random_ideal(rng, params);
    TaylorComplex complex = build_taylor(M);
    std::map<Monomial, std::int64_t> euler_faces;
    std::map<Monomial, std::int64_t> count_faces;
    for (FaceMask mask = 0; mask < complex.face_count(); ++mask) {
      int h = TaylorComplex::hdeg(mask);
      euler_faces[complex.mdeg(mask)] += (h % 2 == 0) ? 1 : -1;
      count_faces[complex.mdeg(mask)] += 1;
    }
    BettiTable table = betti_oracle(M, FieldSpec::rationals());
    std::map<Monomial, std::int64_t> euler_betti;
    std::map<Monomial, std::int64_t> sum_betti;
    for (const auto& [key, count] : table.entries) {
      euler_betti[key.second] += (key.first % 2 == 0) ? count : -count;
      sum_betti[key.second] += count;
    }
    for (const auto& [l, faces_chi] : euler_faces) {
      auto it = euler_betti.find(l);
      std::int64_t betti_chi = it == euler_betti.end() ? 0 : it->second;
      CHECK(faces_chi == betti_chi);
      auto st = sum_betti.find(l);
      std::int64_t betti_sum = st == sum_betti.end() ? 0 : st->second;
      CHECK((count_faces[l] - betti_sum) % 2 == 0);
    }
  }
}

TEST_CASE("oracle is invariant under generator and variable permutation") {
  std::mt19937_64 rng(47);
  RandomIdealParams params;
  params.vars = 4;
  params.max_gens = 5;
  params.max_exp = 3;
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal M = random_ideal(rng, params);
    const std::size_t n = M.variables().size();
    BettiTable base = betti_oracle(M, FieldSpec::rationals());

    // Permute generators (the constructor re-sorts, so shuffle the input).
    std::vector<Monomial> gens = M.generators();
    std::shuffle(gens.begin(), gens.end(), rng);
    BettiTable shuffled = betti_oracle(MonomialIdeal(M.variables(), gens),
                                       FieldSpec::rationals());
    CHECK(base.same_entries(shuffled));

    // Permute variables; multidegrees relabel accordingly.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Monomial> permuted;
    for (const auto& g : M.generators()) {
      std::vector<Monomial::Exponent> e(n);
      for (std::size_t i = 0; i < n; ++i) e[perm[i]] = g.exponent(i);
      permuted.emplace_back(std::move(e));
    }
    BettiTable relabeled = betti_oracle(
        MonomialIdeal(M.variables(), permuted), FieldSpec::rationals());
    std::map<std::pair<int, Monomial>, std::int64_t> expected;
    for (const auto& [key, count] : base.entries) {
      std::vector<Monomial::Exponent> e(n);
      for (std::size_t i = 0; i < n; ++i) e[perm[i]] = key.second.exponent(i);
      expected[{key.first, Monomial(std::move(e))}] = count;
    }
    CHECK(relabeled.entries == expected);
  }
}

TEST_CASE("results agree over Q and F_p on characteristic-free examples") {
  for (const char* text : {"ab, bc, ac", "x^2, y^2, z^2", "x^2, x*y, y^3"}) {
    auto M = ideal_of(text);
    BettiTable over_q = betti_oracle(M, FieldSpec::rationals());
    BettiTable over_f2 = betti_oracle(M, FieldSpec::prime(2));
    BettiTable over_f32003 = betti_oracle(M, FieldSpec::prime(32003));
    CHECK(over_q.same_entries(over_f2));
    CHECK(over_q.same_entries(over_f32003));
  }
}

TEST_CASE("the projective plane ideal separates characteristics") {
  // Stanley-Reisner ideal of the 6-vertex triangulated projective plane:
  // the ten triples that are not faces. Its Betti numbers over F_2 differ
  // from those over Q.
  auto M = ideal_of(
      "x1*x2*x5, x1*x2*x6, x1*x3*x4, x1*x3*x6, x1*x4*x5, "
      "x2*x3*x4, x2*x3*x5, x2*x4*x6, x3*x5*x6, x4*x5*x6");
  REQUIRE(M.generator_count() == 10);
  BettiTable over_q = betti_oracle(M, FieldSpec::rationals());
  BettiTable over_f2 = betti_oracle(M, FieldSpec::prime(2));
  CHECK_FALSE(over_q.same_entries(over_f2));
  CHECK(over_q.pd() == 3);
  CHECK(over_f2.pd() == 4);
}
