#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "gsq/perm.hpp"

using namespace gsq;

namespace {

Perm random_perm(int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), std::uint8_t{0});
    for (int i = n - 1; i > 0; --i)
        std::swap(im[static_cast<std::size_t>(i)], im[rng() % static_cast<std::uint64_t>(i + 1)]);
    return Perm::from_images(std::move(im));
}

long long order_of(const Perm& p) {
    long long ord = 1;
    for (auto& c : p.cycles(true)) ord = std::lcm(ord, static_cast<long long>(c.size()));
    return ord;
}

}  // namespace

TEST_CASE("compose applies left factor first") {
    Perm c = Perm::parse("(1,2,3)");
    CHECK(compose(c, Perm::identity(3)) == c);
    CHECK(compose(Perm::identity(3), c) == c);
    CHECK(compose(c, Perm::parse("(1,3,2)")) == Perm::identity(3));
    CHECK(compose(Perm::parse("(1,2,3)", 6), Perm::parse("(1,4,5,6,3)", 6)) ==
          Perm::parse("(1,2)(3,4,5,6)"));
    CHECK_THROWS_AS(compose(Perm::identity(3), Perm::identity(4)), std::invalid_argument);
}

TEST_CASE("compose is associative") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Perm a = random_perm(8, rng), b = random_perm(8, rng), c = random_perm(8, rng);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("power") {
    CHECK(power(Perm::parse("(1,2,3)"), 3) == Perm::identity(3));
    CHECK(power(Perm::parse("(1,2,3,4,5)"), 3) == Perm::parse("(1,4,2,5,3)"));
    CHECK(power(Perm::parse("(1,2,3)"), 0) == Perm::identity(3));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Perm p = random_perm(10, rng);
        CHECK(compose(power(p, -1), p) == Perm::identity(10));
        CHECK(power(p, order_of(p)) == Perm::identity(10));
    }
}

TEST_CASE("cycle type") {
    CHECK(CycleType(Perm::identity(5)) == CycleType(5, {{1, 5}}));
    CHECK(CycleType(Perm::parse("(1,2)(3,4)(5,6,7,8)(9,10,11,12)")) ==
          CycleType(12, {{2, 2}, {4, 2}}));
    CHECK(CycleType(Perm::parse("(1,2,3)(4,5)(6,7)", 8)) ==
          CycleType(8, {{3, 1}, {2, 2}, {1, 1}}));
}

TEST_CASE("parity") {
    CHECK(parity(Perm::parse("(1,2)")) == Parity::Odd);
    CHECK(parity(Perm::parse("(1,2,3,4)")) == Parity::Odd);
    CHECK(parity(Perm::parse("(1,3)(2,4)")) == Parity::Even);
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Perm p = random_perm(9, rng), q = random_perm(9, rng);
        bool even_pq = parity(compose(p, q)) == Parity::Even;
        CHECK(even_pq == ((parity(p) == Parity::Even) == (parity(q) == Parity::Even)));
    }
}

TEST_CASE("decrement") {
    CHECK(decrement(Perm::identity(6)) == 0);
    CHECK(decrement(Perm::parse("(1,2,3,4,5,6,7)")) == 6);
    CHECK(decrement(Perm::parse("(1,2)(3,4,5)")) == 3);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        Perm p = random_perm(10, rng);
        CHECK((decrement(p) % 2 == 0) == (parity(p) == Parity::Even));
    }
}

TEST_CASE("conjugation preserves cycle type") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 300; ++i) {
        Perm p = random_perm(9, rng), q = random_perm(9, rng);
        Perm conj = compose(q.inverse(), compose(p, q));
        CHECK(CycleType(conj) == CycleType(p));
    }
}

TEST_CASE("parse and format") {
    CHECK(Perm::parse("()").degree() == 0);
    CHECK(Perm::parse("e", 4) == Perm::identity(4));
    CHECK(Perm::parse(" ( 1 , 2 ) ( 3 , 4 ) ") == Perm::parse("(1,2)(3,4)"));
    CHECK(Perm::parse("(2,3,1)").to_cycle_string() == "(1,2,3)");
    CHECK(Perm::parse("(4,5)(1,2,3)", 6).to_cycle_string() == "(1,2,3)(4,5)");
    CHECK(Perm::identity(5).to_cycle_string() == "()");
    CHECK(Perm::parse("(5)", 5) == Perm::identity(5));  // explicit fixed point

    CHECK_THROWS_AS(Perm::parse("(1,2"), ParseError);
    CHECK_THROWS_AS(Perm::parse("(1,1)"), ParseError);
    CHECK_THROWS_AS(Perm::parse("(0,1)"), ParseError);
    CHECK_THROWS_AS(Perm::parse("(1,2)x"), ParseError);
    CHECK_THROWS_AS(Perm::parse("(1,65)"), ParseError);
    CHECK_THROWS_AS(Perm::parse("(1,2,3)", 2), ParseError);
    try {
        Perm::parse("(1,,2)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("round trip on random permutations") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 10000; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Perm p = random_perm(n, rng);
        CHECK(Perm::parse(p.to_cycle_string(), n) == p);
    }
}

TEST_CASE("from_images validates bijections") {
    CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_images({0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::from_cycles(4, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Perm::identity(65), std::invalid_argument);
}
