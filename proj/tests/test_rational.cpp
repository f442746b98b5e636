#include <catch2/catch_amalgamated.hpp>

#include "bidouble/rational.hpp"

using namespace bidouble;

TEST_CASE("rational construction and string round trips") {
    REQUIRE(rat(3, 6) == rat(1, 2));
    REQUIRE(rat_to_string(rat(3, 6)) == "1/2");
    REQUIRE(rat_to_string(rat(-4, 2)) == "-2");
    REQUIRE(rat_to_string(rat(0, 7)) == "0");
    REQUIRE(rat_from_string("22/7") == rat(22, 7));
    REQUIRE(rat_from_string("-9") == rat(-9));
    REQUIRE(rat_from_string("0/5") == 0);
    REQUIRE(rat_from_string("004/2") == 2);
    REQUIRE_THROWS_AS(rat(1, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string(""), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("a/2"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("1/"), std::invalid_argument);
    REQUIRE_THROWS_AS(rat_from_string("1.5"), std::invalid_argument);
}

TEST_CASE("normalize_primitive clears denominators and fixes the sign") {
    std::vector<Rat> v = {rat(0), rat(-3, 4), rat(9, 2)};
    auto n = normalize_primitive(v);
    REQUIRE(n == std::vector<Rat>{rat(0), rat(1), rat(-6)});
    // leading nonzero entry positive
    auto m = normalize_primitive({rat(-2, 3), rat(4)});
    REQUIRE(m == std::vector<Rat>{rat(1), rat(-6)});
    auto z = normalize_primitive({rat(0), rat(0)});
    REQUIRE(z == std::vector<Rat>{rat(0), rat(0)});
}

TEST_CASE("rref rank and kernel on a hand-checked system") {
    // rows: x+y+z=0, 2x+2y+2z=0, x-y=0 -> rank 2, kernel spanned by (1,1,-2)
    RatMatrix m = RatMatrix::from_rows({
        {rat(1), rat(1), rat(1)},
        {rat(2), rat(2), rat(2)},
        {rat(1), rat(-1), rat(0)},
    });
    REQUIRE(rank(m) == 2);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    REQUIRE(ker[0] == std::vector<Rat>{rat(1), rat(1), rat(-2)});
}

TEST_CASE("kernel basis is deterministic and primitive") {
    RatMatrix m(1, 4);
    m.at(0, 0) = rat(1, 2);
    m.at(0, 1) = rat(1, 3);
    m.at(0, 2) = rat(0);
    m.at(0, 3) = rat(-1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 3);
    for (const auto& v : ker) {
        // integer entries with no common factor
        Int g = 0;
        for (const auto& c : v) {
            REQUIRE(is_integer(c));
            g = gcd(g, c.get_num());
        }
        REQUIRE(abs(g) == 1);
        // kernel vector really solves the system
        Rat dot = 0;
        for (std::size_t j = 0; j < 4; ++j) dot += m.at(0, j) * v[j];
        REQUIRE(dot == 0);
    }
    auto ker2 = kernel_basis(m);
    REQUIRE(ker == ker2);
}

TEST_CASE("rank plus nullity equals the column count") {
    // a 4x5 matrix with a planted rank-2 row space
    RatMatrix m(4, 5);
    for (std::size_t j = 0; j < 5; ++j) {
        m.at(0, j) = rat(static_cast<long>(j) + 1);
        m.at(1, j) = rat(2 * static_cast<long>(j) + 3);
        m.at(2, j) = m.at(0, j) + m.at(1, j);
        m.at(3, j) = rat(3) * m.at(0, j) - m.at(1, j);
    }
    REQUIRE(rank(m) == 2);
    REQUIRE(kernel_basis(m).size() == 3);
}

TEST_CASE("rank of the zero and identity matrices") {
    RatMatrix z(3, 3);
    REQUIRE(rank(z) == 0);
    REQUIRE(kernel_basis(z).size() == 3);
    RatMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i) id.at(i, i) = rat(1);
    REQUIRE(rank(id) == 3);
    REQUIRE(kernel_basis(id).empty());
}

TEST_CASE("arbitrary precision survives large entries") {
    Rat big = rat_from_string("123456789123456789123456789/2");
    REQUIRE(rat_to_string(big * 2) == "123456789123456789123456789");
    RatMatrix m(1, 2);
    m.at(0, 0) = big;
    m.at(0, 1) = -big * 3;
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    REQUIRE(ker[0] == std::vector<Rat>{rat(3), rat(1)});
}
