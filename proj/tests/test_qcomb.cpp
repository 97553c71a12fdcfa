#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;

namespace {

// Character sum over the rank-i sphere at a fixed rank-j matrix for prime q:
// with n_t matrices giving <M, Y> = t, the value is sum_t n_t w^t, which is an
// integer only when all n_t (t != 0) agree, and then equals n_0 - n_1.
BigInt character_sum(const Field& F, int k, int m, int i, int j) {
    Mat Y(F, k, m);
    for (int t = 0; t < j; ++t) Y.set(t, t, 1);
    std::vector<long> n(F.q(), 0);
    for (const auto& M : all_matrices(F, k, m))
        if (brute_rank(M) == i) ++n[trace_inner(M, Y)];
    for (std::uint32_t t = 2; t < F.q(); ++t) REQUIRE(n[t] == n[1]);
    return BigInt(n[0] - n[1]);
}

}  // namespace

TEST_CASE("gaussian binomials count subspaces") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(2, 3, 2) == 0);
    CHECK(gaussian_binomial(2, -1, 2) == 0);
    // Pascal-type recurrence [a,b] = [a-1,b-1] + q^b [a-1,b].
    for (std::uint64_t q : {2u, 3u, 4u})
        for (int a = 1; a <= 8; ++a)
            for (int b = 1; b <= a; ++b)
                CHECK(gaussian_binomial(a, b, q) ==
                      gaussian_binomial(a - 1, b - 1, q) + ipow(q, b) * gaussian_binomial(a - 1, b, q));
}

TEST_CASE("subspace Moebius function inverts the zeta function") {
    for (std::uint64_t q : {2u, 3u, 5u})
        for (int n = 1; n <= 6; ++n) {
            BigInt s = 0;
            for (int j = 0; j <= n; ++j) s += gaussian_binomial(n, j, q) * subspace_moebius(0, j, q);
            CHECK(s == 0);
        }
    CHECK(subspace_moebius(2, 2, 3) == 1);
    CHECK(subspace_moebius(1, 2, 3) == -1);
    CHECK(subspace_moebius(0, 3, 2) == -8);
}

TEST_CASE("rank sphere sizes match enumeration") {
    for (auto [q, k, m] : {std::tuple{2u, 2, 3}, {2u, 3, 3}, {3u, 2, 2}, {2u, 2, 4}}) {
        const Field F = field_of_order(q);
        std::vector<long> counts(k + 1, 0);
        for (const auto& M : all_matrices(F, k, m)) ++counts[brute_rank(M)];
        for (int i = 0; i <= k; ++i) CHECK(rank_sphere_size(i, k, m, q) == counts[i]);
    }
}

TEST_CASE("Krawtchouk values equal character sums over rank spheres") {
    for (auto [q, k, m] : {std::tuple{2u, 2, 2}, {2u, 2, 3}, {3u, 2, 2}, {2u, 3, 3}}) {
        const Field F = field_of_order(q);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                CAPTURE(q, k, m, i, j);
                CHECK(krawtchouk(i, j, k, m, q) == character_sum(F, k, m, i, j));
            }
    }
}

TEST_CASE("Krawtchouk table identities") {
    for (std::uint64_t q : {2u, 3u, 4u})
        for (int k = 1; k <= 4; ++k)
            for (int m = k; m <= 5; ++m) {
                const auto T = build_table(k, m, q);
                const DenseMatrix<BigInt> I = DenseMatrix<BigInt>::Identity(k + 1, k + 1) * T.ambient_size();
                CHECK(DenseMatrix<BigInt>(T.P * T.P) == I);
                for (int i = 0; i <= k; ++i) CHECK(T.at(i, 0) == rank_sphere_size(i, k, m, q));
                CHECK(T.at(0, k) == 1);
            }
}

TEST_CASE("MacWilliams transform of a one-word code is the sphere-size vector") {
    const auto T = build_table(2, 3, 2);
    DistanceDistribution B = DistanceDistribution::Zero(3);
    B(0) = 1;
    const auto Bs = macwilliams_transform(B, 1, T);
    for (int i = 0; i <= 2; ++i) CHECK(Bs(i) == BigRat(rank_sphere_size(i, 2, 3, 2)));
    CHECK_THROWS(macwilliams_transform(DistanceDistribution::Zero(2), 1, T));
}

TEST_CASE("q-combinatorics examples and symmetries") {
    CHECK(gaussian_binomial(2, 1, 2) == 3);
    CHECK(subspace_moebius(0, 1, 5) == -1);
    CHECK(subspace_moebius(0, 2, 2) == 2);
    CHECK(krawtchouk(1, 0, 2, 2, 2) == 9);
    CHECK(rank_sphere_size(1, 2, 2, 2) == 9);
    for (std::uint64_t q : {2u, 3u})
        for (int k = 1; k <= 4; ++k)
            for (int m = k; m <= 4; ++m) {
                BigInt total = 0;
                for (int i = 0; i <= k; ++i) {
                    total += rank_sphere_size(i, k, m, q);
                    CHECK(gaussian_binomial(k, i, q) == gaussian_binomial(k, k - i, q));
                }
                CHECK(total == ipow(q, k * m));
                for (int j = 0; j <= k; ++j) CHECK(krawtchouk(0, j, k, m, q) == 1);
            }
}
