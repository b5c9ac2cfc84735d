#include "doctest.h"

#include "finsite/errors.hpp"
#include "finsite/field.hpp"
#include "finsite/matrix.hpp"

using namespace finsite;

namespace {

  Matrix from_rows(std::vector<std::vector<int>> const& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

}  // namespace

TEST_CASE("prime field arithmetic reduces") {
  auto k = Field::prime(5);
  CHECK(k.add(Scalar(3), Scalar(4)) == 2);
  CHECK(k.mul(Scalar(3), Scalar(4)) == 2);
  CHECK(k.neg(Scalar(1)) == 4);
  CHECK(k.inv(Scalar(2)) == 3);
  CHECK(k.parse_scalar("1/3") == 2);
  CHECK(k.parse_scalar("-2") == 3);
  CHECK(k.residue(k.from_int(-7)) == 3);
  CHECK_THROWS_AS(k.inv(Scalar(0)), std::domain_error);
}

TEST_CASE("rationals stay exact") {
  auto q = Field::rationals();
  CHECK(q.parse_scalar("1/3") == Scalar(1) / 3);
  CHECK(q.add(Scalar(1) / 3, Scalar(1) / 6) == Scalar(1) / 2);
  CHECK(Field::format(Scalar(-2) / 3) == "-2/3");
}

TEST_CASE("field descriptors parse") {
  CHECK(Field::parse("Q") == Field::rationals());
  CHECK(Field::parse("F5") == Field::prime(5));
  CHECK(Field::parse("GF(7)") == Field::prime(7));
  CHECK(Field::prime(2).name() == "F2");
  CHECK_THROWS_AS(Field::prime(4), InvalidData);
  CHECK_THROWS_AS(Field::parse("F9"), InvalidData);
}

TEST_CASE("rank, nullspace and inverse") {
  auto k = Field::rationals();
  auto a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(linalg::rank(k, a) == 2);
  auto n = linalg::nullspace(k, a);
  REQUIRE(n.cols() == 1);
  CHECK(linalg::multiply(k, a, n).is_zero());
  CHECK_FALSE(linalg::inverse(k, a).has_value());

  auto b = from_rows({{2, 1}, {1, 1}});
  auto inv = linalg::inverse(k, b);
  REQUIRE(inv.has_value());
  CHECK(linalg::multiply(k, b, *inv) == Matrix::identity(2));
}

TEST_CASE("elimination over F2") {
  auto k = Field::prime(2);
  auto a = from_rows({{1, 1}, {1, 1}});
  CHECK(linalg::rank(k, a) == 1);
  CHECK_FALSE(linalg::is_invertible(k, a));
  auto x = linalg::solve(k, a, from_rows({{1}, {1}}));
  REQUIRE(x.has_value());
  CHECK(linalg::multiply(k, a, *x) == from_rows({{1}, {1}}));
  CHECK_FALSE(linalg::solve(k, a, from_rows({{1}, {0}})).has_value());
}

TEST_CASE("nullspace basis is read off the reduced form") {
  auto k = Field::rationals();
  auto n = linalg::nullspace(k, from_rows({{1, 1, 0}}));
  REQUIRE(n.cols() == 2);
  // free columns 1 and 2
  CHECK(n(1, 0) == 1);
  CHECK(n(2, 0) == 0);
  CHECK(n(1, 1) == 0);
  CHECK(n(2, 1) == 1);
}

TEST_CASE("subspace coordinates") {
  auto k = Field::prime(3);
  Subspace s(k, from_rows({{1, 0}, {1, 1}, {0, 1}}));
  std::vector<Scalar> v{Scalar(2), Scalar(0), Scalar(1)};  // 2 b0 + 1 b1 = (2, 3, 1) = (2, 0, 1)
  REQUIRE(s.contains(v));
  auto c = s.coordinates(v);
  CHECK(c[0] == 2);
  CHECK(c[1] == 1);
  std::vector<Scalar> w{Scalar(1), Scalar(0), Scalar(0)};
  CHECK_FALSE(s.contains(w));
  CHECK_THROWS_AS(s.coordinates(w), InvalidData);
}

TEST_CASE("intertwiner search finds a conjugating matrix") {
  auto k = Field::prime(5);
  auto a = from_rows({{0, 1}, {1, 0}});
  auto p = from_rows({{1, 2}, {3, 4}});
  auto pinv = linalg::inverse(k, p);
  REQUIRE(pinv.has_value());
  auto b = linalg::multiply(k, linalg::multiply(k, p, a), *pinv);
  IntertwinerSystem sys(k, {{2, 2}});
  sys.add(0, a, b, 0);  // X a = b X
  auto found = sys.find_invertible();
  REQUIRE(found.witness.has_value());
  auto const& x = (*found.witness)[0];
  CHECK(linalg::is_invertible(k, x));
  CHECK(linalg::multiply(k, x, a) == linalg::multiply(k, b, x));
}

TEST_CASE("intertwiner search reports exhaustive failure") {
  auto k = Field::prime(2);
  IntertwinerSystem sys(k, {{2, 2}});
  sys.add(0, from_rows({{0, 1}, {0, 0}}), from_rows({{0, 0}, {0, 0}}), 0);
  auto found = sys.find_invertible();
  CHECK_FALSE(found.witness.has_value());
  CHECK(found.exhaustive);
}
