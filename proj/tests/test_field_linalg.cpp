#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "homnerve/field.hpp"
#include "homnerve/linalg.hpp"
#include "oracle.hpp"

using namespace homnerve;

namespace {

std::vector<long long> random_entries(std::mt19937_64& rng, std::size_t n, long long mod) {
    std::vector<long long> out(n);
    for (auto& x : out) x = static_cast<long long>(rng() % static_cast<std::uint64_t>(mod));
    return out;
}

std::vector<std::vector<long long>> as_rows(const std::vector<long long>& flat, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<long long>> out(rows);
    for (std::size_t r = 0; r < rows; ++r) out[r].assign(flat.begin() + r * cols, flat.begin() + (r + 1) * cols);
    return out;
}

}  // namespace

TEST_CASE("field specs parse and reject non-primes", "[field]") {
    CHECK(FieldSpec::parse("gf2").characteristic() == 2);
    CHECK(FieldSpec::parse("gf3").name() == "gf3");
    CHECK(FieldSpec::parse("q").kind() == FieldSpec::Kind::Rationals);
    CHECK(FieldSpec::parse("q").name() == "q");
    CHECK_THROWS_AS(FieldSpec::parse("gf4"), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::parse("gf1"), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::parse("gfx"), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::parse("reals"), InvalidInput);
}

TEST_CASE("prime field inverses", "[field]") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
        PrimeField f(p);
        for (std::uint32_t a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.from_int(-1) == p - 1);
    }
    CHECK_THROWS_AS(PrimeField(9), InvalidInput);
}

TEST_CASE("rational conversion rejects denominators that vanish mod p", "[field]") {
    CHECK_THROWS_AS(PrimeField(3).from_rational(1, 3), InvalidInput);
    CHECK_THROWS_AS(GF2{}.from_rational(1, 4), InvalidInput);
    CHECK(PrimeField(5).from_rational(1, 2) == 3);
    CHECK_THROWS_AS(Matrix<PrimeField>::from_rationals(PrimeField(3), 1, 1, {{1, 6}}), InvalidInput);
    CHECK(Rationals{}.from_rational(2, 4) == BigRational(1, 2));
}

TEST_CASE("rank of small fixed matrices", "[linalg]") {
    auto id = Matrix<GF2>::from_ints({}, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(rank(id) == 3);
    auto ones = Matrix<GF2>::from_ints({}, 2, 2, {1, 1, 1, 1});
    CHECK(rank(ones) == 1);
    CHECK(rank(Matrix<GF2>({}, 0, 4)) == 0);
    CHECK(rank(Matrix<Rationals>({}, 3, 0)) == 0);
    // Rank depends on the characteristic: det = 3.
    auto m = std::vector<long long>{1, 1, -1, 2};
    CHECK(rank(Matrix<PrimeField>::from_ints(PrimeField(3), 2, 2, m)) == 1);
    CHECK(rank(Matrix<Rationals>::from_ints({}, 2, 2, m)) == 2);
}

TEST_CASE("rank agrees with the reversed-pivot oracle on random matrices", "[linalg]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        const auto flat = random_entries(rng, rows * cols, 3);
        const auto expected3 = oracle::rank_mod_p(as_rows(flat, rows, cols), 3);
        CHECK(rank(Matrix<PrimeField>::from_ints(PrimeField(3), rows, cols, flat)) == expected3);
        const auto expected2 = oracle::rank_mod_p(as_rows(flat, rows, cols), 2);
        CHECK(rank(Matrix<GF2>::from_ints({}, rows, cols, flat)) == expected2);
        const auto expectedq = oracle::rank_rational(as_rows(flat, rows, cols));
        CHECK(rank(Matrix<Rationals>::from_ints({}, rows, cols, flat)) == expectedq);
    }
}

TEST_CASE("random 6x8 over GF(3) matches a second elimination", "[linalg]") {
    std::mt19937_64 rng(42);
    const auto flat = random_entries(rng, 48, 3);
    const auto r = rank(Matrix<PrimeField>::from_ints(PrimeField(3), 6, 8, flat));
    CHECK(r == oracle::rank_mod_p(as_rows(flat, 6, 8), 3));
    CHECK(r <= 6);
}

TEST_CASE("kernel basis edge cases", "[linalg]") {
    CHECK(kernel_basis(Matrix<GF2>({}, 2, 3)).size() == 3);
    CHECK(kernel_basis(Matrix<GF2>::from_ints({}, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})).empty());

    // Boundary of the hollow triangle: edges 01, 02, 12 against vertices 0, 1, 2.
    auto d1 = Matrix<GF2>::from_ints({}, 3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1});
    const auto k = kernel_basis(d1);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<std::uint8_t>{1, 1, 1});
}

TEST_CASE("rank plus nullity equals column count; rank survives row operations", "[linalg][property]") {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
        const long long p = std::array<long long, 3>{2, 3, 7}[trial % 3];
        const auto flat = random_entries(rng, rows * cols, p);
        PrimeField f(static_cast<std::uint32_t>(p));
        const auto m = Matrix<PrimeField>::from_ints(f, rows, cols, flat);
        const auto kernel = kernel_basis(m);
        CHECK(rank(m) + kernel.size() == cols);
        for (const auto& v : kernel) {
            const auto image = matvec(m, std::span<const std::uint32_t>(v));
            CHECK(std::all_of(image.begin(), image.end(), [](auto x) { return x == 0; }));
        }
        // Independence of the kernel basis.
        EchelonBasis<PrimeField> span(f, cols);
        for (const auto& v : kernel) CHECK(span.insert(v));

        std::vector<std::size_t> perm(rows);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix<PrimeField> shuffled(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const auto scale = static_cast<std::uint32_t>(1 + rng() % static_cast<std::uint64_t>(p - 1));
            for (std::size_t c = 0; c < cols; ++c) shuffled(r, c) = f.mul(scale, m(perm[r], c));
        }
        CHECK(rank(shuffled) == rank(m));
    }
}

TEST_CASE("extend_to_complement", "[linalg]") {
    using V = std::vector<BigRational>;
    const V e1{1, 0}, e2{0, 1};
    const auto both = extend_to_complement<Rationals>({}, {e1, e2}, {}, 2);
    CHECK(both.size() == 2);

    const auto none = extend_to_complement<Rationals>({V{1, 1}, V{1, -1}}, {e1, e2}, {}, 2);
    CHECK(none.empty());

    CHECK_THROWS_AS(extend_to_complement<Rationals>({V{1, 1}}, {e1}, {}, 2), InvalidInput);

    // Hollow triangle: im d2 = 0, ker d1 is spanned by the 1-cycle.
    auto d1 = Matrix<GF2>::from_ints({}, 3, 3, {1, 1, 0, 1, 0, 1, 0, 1, 1});
    const auto reps = extend_to_complement<GF2>({}, kernel_basis(d1), {}, 3);
    CHECK(reps.size() == 1);
}
