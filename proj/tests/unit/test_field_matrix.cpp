#include <doctest.h>

#include "lrc/field.hpp"
#include "lrc/matrix.hpp"
#include "oracles.hpp"

using namespace lrc;

TEST_CASE("prime field arithmetic") {
    const Field f = Field::make(7);
    CHECK(f.is_prime());
    CHECK(f.name() == "GF(7)");
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(3) == 4);
    CHECK(f.mul(3, 5) == 1);
    for (Elem a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.pow(f.primitive_element(), 6) == 1);
    CHECK_THROWS_AS(f.inv(0), Error);
    CHECK(f.from_int(-1) == 6);
}

TEST_CASE("order of the primitive element is q - 1") {
    for (std::uint64_t q : {2u, 3u, 5u, 11u, 13u, 4u, 8u, 16u, 256u}) {
        const Field f = Field::make(q);
        Elem x = f.primitive_element();
        std::size_t order = 1;
        while (x != 1) {
            x = f.mul(x, f.primitive_element());
            ++order;
        }
        CHECK(order == q - 1);
    }
}

TEST_CASE("GF(2^m) products agree with carry-less multiplication") {
    for (int m = 2; m <= 8; ++m) {
        const Field f = Field::make(std::uint64_t{1} << m);
        const auto poly = f.modulus_mask();
        for (Elem a = 0; a < f.order(); ++a)
            for (Elem b = 0; b < f.order(); ++b) REQUIRE(f.mul(a, b) == oracle::gf2m_mul(a, b, poly, m));
    }
    const Field big = Field::make(1u << 16);
    Pcg32 rng(3);
    for (int i = 0; i < 2000; ++i) {
        const Elem a = rng.below(big.order()), b = rng.below(big.order());
        CHECK(big.mul(a, b) == oracle::gf2m_mul(a, b, big.modulus_mask(), 16));
    }
}

TEST_CASE("GF(4) from x^2 + x + 1") {
    const Field f = Field::make(4, {1, 1, 1});
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});
    CHECK(f.mul(2, 2) == 3);
    CHECK(f.mul(2, 3) == 1);
    CHECK(f.add(2, 3) == 1);
}

TEST_CASE("field errors") {
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;
    };
    CHECK(code_of([] { Field::make(6); }) == ErrorCode::NotPrimePower);
    CHECK(code_of([] { Field::make(9); }) == ErrorCode::NotPrimePower);
    CHECK(code_of([] { Field::make(4, {1, 0, 1}); }) == ErrorCode::ReducibleModulus);
    CHECK(code_of([] { Field::make(1); }) == ErrorCode::NotPrimePower);
}

TEST_CASE("default moduli are irreducible") {
    for (int m = 2; m <= 16; ++m) CHECK(is_irreducible_gf2(Field::default_modulus(m)));
    CHECK_FALSE(is_irreducible_gf2(0b101));
    CHECK(is_irreducible_gf2(0b111));
}

TEST_CASE("a non-primitive modulus still yields a generator") {
    // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5.
    const Field f = Field::make(16, {1, 1, 1, 1, 1});
    Elem x = f.primitive_element();
    std::size_t order = 1;
    while (x != 1) {
        x = f.mul(x, f.primitive_element());
        ++order;
    }
    CHECK(order == 15);
    for (Elem a = 1; a < 16; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("rref and rank of a known matrix") {
    const Field f = Field::make(7);
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    const auto e = rref(m, f);
    CHECK(e.pivots == Coords{0, 1});
    CHECK(e.reduced.to_rows() == std::vector<std::vector<Elem>>{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
    CHECK(rank(m, f) == 2);
}

TEST_CASE("rank matches the size of the row span") {
    Pcg32 rng(11);
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        const Field f = Field::make(q);
        for (int t = 0; t < 30; ++t) {
            const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(5);
            Matrix m = oracle::random_matrix(rng, rows, cols, f);
            if (rows > 1 && rng.below(2)) {
                for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = f.add(m(0, j), m(rows - 2, j));
            }
            CHECK(rank(m, f) == oracle::span_rank(m, f));
        }
    }
}

TEST_CASE("null space is orthogonal and complementary") {
    Pcg32 rng(5);
    for (std::uint64_t q : {2u, 7u, 8u}) {
        const Field f = Field::make(q);
        for (int t = 0; t < 20; ++t) {
            const Matrix m = oracle::random_matrix(rng, 1 + rng.below(4), 2 + rng.below(6), f);
            const Matrix ns = null_space_basis(m, f);
            CHECK(ns.cols() == m.cols());
            CHECK(ns.rows() + rank(m, f) == m.cols());
            CHECK(rank(ns, f) == ns.rows());
            if (ns.rows() > 0) CHECK(multiply(m, ns.transpose(), f).is_zero());
        }
    }
}

TEST_CASE("solve_linear") {
    const Field f = Field::make(5);
    const Matrix a = Matrix::from_rows({{1, 1}, {0, 1}});
    const Vector b{3, 1};
    const auto x = solve_linear(a, b, f);
    REQUIRE(x);
    CHECK(mat_vec(a, *x, f) == b);
    const Matrix sing = Matrix::from_rows({{1, 1}, {2, 2}});
    CHECK_FALSE(solve_linear(sing, Vector{1, 1}, f));
    const auto free = solve_linear(sing, Vector{1, 2}, f);
    REQUIRE(free);
    CHECK(*free == Vector{1, 0});
}

TEST_CASE("row_basis and same_row_space") {
    const Field f = Field::make(3);
    const Matrix m = Matrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    const Matrix b = row_basis(m, f);
    CHECK(b.rows() == 2);
    CHECK(same_row_space(m, b, f));
    CHECK_FALSE(same_row_space(b, Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}), f));
}
