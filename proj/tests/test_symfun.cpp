#include "hurwitz/partition.hpp"
#include "hurwitz/symfun.hpp"

#include "printers.hpp"

#include <doctest.h>

using namespace hurwitz;

TEST_CASE("schur functions in the power-sum basis")
{
  const SymFun s2 = schur(Partition{2}, 3);
  CHECK(*s2.find(Partition{1, 1}) == frac(1, 2));
  CHECK(*s2.find(Partition{2}) == frac(1, 2));
  const SymFun s11 = schur(Partition{1, 1}, 3);
  CHECK(*s11.find(Partition{2}) == frac(-1, 2));
  const SymFun s21 = schur(Partition{2, 1}, 3);
  CHECK(*s21.find(Partition{1, 1, 1}) == frac(1, 3));
  CHECK(*s21.find(Partition{3}) == frac(-1, 3));
  CHECK(s21.find(Partition{2, 1}) == nullptr);
  CHECK_THROWS_AS(schur(Partition{3}, 2), std::invalid_argument);
}

TEST_CASE("shifted second power sum")
{
  CHECK(shifted_p2(Partition{1}) == 0);
  CHECK(shifted_p2(Partition{2}) == 2);
  CHECK(shifted_p2(Partition{1, 1}) == -2);
  CHECK(shifted_p2(Partition{3, 1}) == 4);
  CHECK(shifted_p2(Partition{2, 2}) == 0);
}

TEST_CASE("schur functions are cut-and-join eigenfunctions")
{
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d)) {
      const SymFun s = schur(mu, 6);
      CHECK(cut_and_join(s) == s * frac(shifted_p2(mu), 2));
    }
}

TEST_CASE("cut-and-join on monomials")
{
  // Delta p_1^2 = p_2 and Delta p_2 = p_1^2.
  SymFun p11(4), p2(4);
  p11.add_term(Partition{1, 1}, 1);
  p2.add_term(Partition{2}, 1);
  CHECK(cut_and_join(p11) == p2);
  CHECK(cut_and_join(p2) == p11);
}

TEST_CASE("graded exp and log are inverse")
{
  SymFun f(5);
  f.add_term(Partition{1}, 1);
  f.add_term(Partition{2}, frac(1, 2));
  f.add_term(Partition{3, 1}, frac(-2, 3));
  const SymFun e = exp_series(f, Rational(1));
  CHECK(log_series(e, Rational(1)) == f);
  CHECK(*e.find(Partition{1, 1}) == frac(1, 2));
  CHECK_THROWS_AS(log_series(f, Rational(1)), std::invalid_argument);
  SymFun with_constant = f;
  with_constant.add_term(Partition{}, 1);
  CHECK_THROWS_AS(exp_series(with_constant, Rational(1)), std::invalid_argument);
}
