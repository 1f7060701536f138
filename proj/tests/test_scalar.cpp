#include <hopfkit/scalar.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace hopfkit;

TEST_CASE("rational arithmetic") {
  Scalar half = Scalar::rational(1, 2);
  Scalar third = Scalar::rational(1, 3);
  CHECK(half + third == Scalar::rational(5, 6));
  CHECK(half * third == Scalar::rational(1, 6));
  CHECK(-half == Scalar::rational(-1, 2));
  CHECK((half - half).isZero());
}

TEST_CASE("inverse and division by zero") {
  CHECK(Scalar::q().inverse() == Scalar::fraction(Poly(Int(1)), Poly::monomial(Int(1), 1)));
  CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
}

TEST_CASE("polynomial multiplication oracle") {
  // (q - q^-1) * q = q^2 - 1, checked against a hand-built polynomial
  Scalar v = (Scalar::q() - Scalar::q(-1)) * Scalar::q();
  Poly expect({Int(-1), Int(0), Int(1)});  // q^2 - 1
  CHECK(v == Scalar::fraction(expect, Poly(Int(1))));
}

TEST_CASE("normal form is canonical") {
  // (q^2 - 1)/(q - 1) reduces to q + 1
  Scalar a = Scalar::fraction(Poly({Int(-1), Int(0), Int(1)}), Poly({Int(-1), Int(1)}));
  CHECK(a == Scalar::q() + Scalar(1));
  // denominator sign normalization
  Scalar b = Scalar::fraction(Poly(Int(1)), Poly({Int(0), Int(-1)}));
  CHECK(b == -Scalar::q(-1));
  // zero is 0/1
  Scalar z = Scalar::fraction(Poly(), Poly({Int(3), Int(7)}));
  CHECK(z.den() == Poly(Int(1)));
}

static Scalar randomScalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  auto poly = [&] {
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    return Poly(std::move(c));
  };
  Poly num = poly();
  Poly den;
  do { den = poly(); } while (den.isZero());
  return Scalar::fraction(num, den);
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::mt19937 rng(20240817);
  for (int iter = 0; iter < 1000; ++iter) {
    Scalar a = randomScalar(rng), b = randomScalar(rng), c = randomScalar(rng);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    if (!a.isZero()) REQUIRE(a * a.inverse() == Scalar(1));
  }
}

TEST_CASE("parser") {
  CHECK(Scalar::parse("5/6") == Scalar::rational(5, 6));
  CHECK(Scalar::parse("q^2-1") == Scalar::q() * Scalar::q() - Scalar(1));
  CHECK(Scalar::parse("(q^2-1)/(q)") == (Scalar::q() * Scalar::q() - Scalar(1)) / Scalar::q());
  CHECK(Scalar::parse("-3*q") == Scalar(-3) * Scalar::q());
  CHECK(Scalar::parse("q^-2") == Scalar::q(-2));
  CHECK_THROWS_AS(Scalar::parse("q +"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("(q"), ParseError);
}

TEST_CASE("print then parse round-trips") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    Scalar a = randomScalar(rng);
    CHECK(Scalar::parse(a.toString()) == a);
  }
}

TEST_CASE("specialization at q = 1") {
  Scalar a = (Scalar::q() - Scalar::q(-1)) / Scalar::q();
  CHECK(a.atQ1().isZero());
  CHECK((Scalar::q() + Scalar(1)).atQ1() == Scalar(2));
  // pole at q = 1
  CHECK_THROWS_AS((Scalar(1) / (Scalar::q() - Scalar(1))).atQ1(), DivisionByZero);
}
