#include <doctest.h>

#include "hdpart/errors.hpp"
#include "hdpart/golden.hpp"
#include "hdpart/polynomial.hpp"
#include "hdpart/triangle.hpp"

using namespace hdpart;

TEST_CASE("kind names round-trip") {
  for (TriangleKind k : {TriangleKind::A, TriangleKind::B, TriangleKind::C, TriangleKind::D, TriangleKind::F,
                         TriangleKind::T, TriangleKind::Alpha, TriangleKind::Beta, TriangleKind::Abox2,
                         TriangleKind::Cbox2, TriangleKind::Fbox2, TriangleKind::Chat, TriangleKind::Fhat,
                         TriangleKind::CD})
    CHECK(parse_triangle_kind(name(k)) == k);
  CHECK(name(TriangleKind::Alpha) == "alpha");
  CHECK(name(TriangleKind::CD) == "cD");
  CHECK_THROWS_AS(parse_triangle_kind("Q"), std::invalid_argument);
}

TEST_CASE("support regions") {
  Triangle A(TriangleKind::A);
  CHECK(A.row_origin() == 1);
  CHECK(A.support_last(5) == 4);
  Triangle C(TriangleKind::C);
  CHECK(C.row_origin() == 0);
  CHECK(C.support_last(3) == 6);
  Triangle D(TriangleKind::D);
  CHECK(D.support_last(3) == 4);
  Triangle F(TriangleKind::F);
  CHECK(F.support_last(8) == 3);
  Triangle T(TriangleKind::T);
  CHECK(T.col_origin() == 1);
  CHECK(T.support_last(4) == 4);
  Triangle beta(TriangleKind::Beta);
  CHECK(beta.support_last(5) == 2);
}

TEST_CASE("set, get and unknown entries") {
  Triangle C(TriangleKind::C);
  C.set(0, 0, 1);
  C.set(1, 1, 1);
  CHECK(C.at(0, 0) == 1);
  CHECK(C.at(0, 5) == 0);
  CHECK(C.known(1, 1));
  CHECK_FALSE(C.known(1, 2));
  CHECK_FALSE(C.get(1, 2));
  CHECK_THROWS_AS(C.at(1, 2), DataError);
  CHECK_FALSE(C.row_complete(1));
  CHECK(C.complete_through() == 0);
  C.set(1, 0, 0);
  C.set(1, 2, 1);
  CHECK(C.row_complete(1));
  CHECK(C.complete_through() == 1);
  CHECK_THROWS_AS(C.set(1, 3, 5), SupportError);
  CHECK_NOTHROW(C.set(1, 3, 0));
  CHECK(C.at(5, 11) == 0);
  CHECK_THROWS_AS(C.at(5, 0), DataError);
  CHECK(C.truncated(0).last_row() == 0);
}

TEST_CASE("JSON and CSV") {
  Triangle B(TriangleKind::B);
  B.set(1, 0, 1);
  B.set(2, 0, 1);
  B.set(2, 1, 1);
  B.set(3, 0, 1);
  B.set(3, 2, 1);
  auto j = to_json(B);
  CHECK(j["name"] == "B");
  CHECK(j["rows"][2][1].is_null());
  CHECK(j["rows"][2][2] == "1");
  Triangle back = triangle_from_json(j);
  CHECK(back == B);
  CHECK(to_csv(B) == "row,0,1,2\n1,\"1\",,\n2,\"1\",\"1\",\n3,\"1\",,\"1\"\n");

  const Triangle& A = reference_A();
  CHECK(triangle_from_json(nlohmann::json::parse(to_json(A).dump())) == A);
  Triangle huge(TriangleKind::C);
  huge.set(0, 0, Integer("123456789012345678901234567890"));
  CHECK(triangle_from_json(to_json(huge)).at(0, 0) == Integer("123456789012345678901234567890"));
}

TEST_CASE("integers and polynomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(9) == 945);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(parse_integer("-42") == -42);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK_THROWS(parse_integer("12x"));
  Polynomial b2 = binomial_polynomial(2);
  for (long r = 0; r <= 10; ++r) CHECK(b2(r) == Rational(binomial(r, 2)));
  CHECK((Polynomial::variable() * Polynomial::variable()).degree() == 2);
  CHECK(to_string(Polynomial({0, 1, 1})) == "r^2 + r");
}
