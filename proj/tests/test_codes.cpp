#include <catch_amalgamated.hpp>

#include "rmc/construct.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("code parameters") {
    const Field F = make_field(2);
    CHECK_THROWS_AS(CodeParams(F, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(F, 0, 2), std::invalid_argument);
    CHECK(CodeParams(F, 2, 3).ambient_size() == 64);
}

TEST_CASE("canonical representation ignores generator redundancy and order") {
    const Field F = make_field(2);
    const CodeParams p(F, 2, 2);
    const Mat a = bits(F, {"10", "01"});
    const Mat b = bits(F, {"01", "11"});
    const std::vector<Mat> g1{a, b};
    const std::vector<Mat> g2{b, a + b, a, a};
    const RankCode c1 = RankCode::from_generators(p, g1);
    const RankCode c2 = RankCode::from_generators(p, g2);
    CHECK(c1 == c2);
    CHECK(c1.dim() == 2);
    CHECK(c1.cardinality() == 4);
    CHECK(c1.contains(a + b));
    CHECK_FALSE(c1.contains(bits(F, {"11", "00"})));
}

TEST_CASE("set codes collapse duplicates and keep lexicographic order") {
    const Field F = make_field(3);
    const CodeParams p(F, 1, 2);
    const std::vector<Mat> w{Mat::from_rows(F, {{2, 1}}), Mat::from_rows(F, {{0, 1}}), Mat::from_rows(F, {{2, 1}})};
    const RankCode c = RankCode::from_set(p, w);
    CHECK(c.cardinality() == 2);
    CHECK(c.words() == std::vector<Vec>{{0, 1}, {2, 1}});
    CHECK_THROWS(RankCode::from_set(p, std::vector<Mat>{}));
    CHECK_THROWS(c.dim());
    CHECK_THROWS(dual(c));
}

TEST_CASE("distances and distributions agree with pairwise enumeration") {
    Rng rng(21);
    for (auto [q, k, m] : {std::tuple{2u, 2, 3}, {3u, 2, 2}, {2u, 3, 3}, {4u, 2, 2}}) {
        const CodeParams p(field_of_order(q), k, m);
        for (int n = 0; n < 15; ++n) {
            const RankCode lin = random_linear_code(p, 1 + static_cast<int>(rng.below(3)), rng.next());
            const RankCode set = random_code(p, 2 + rng.below(6), rng.next());
            for (const RankCode* c : {&lin, &set}) {
                CHECK(min_distance(*c) == brute_min_distance(*c));
                const auto words = words_of(*c);
                WeightDistribution W = WeightDistribution::Zero(k + 1);
                DistanceDistribution B = DistanceDistribution::Zero(k + 1);
                for (const auto& M : words) {
                    W(brute_rank(M)) += 1;
                    for (const auto& N : words) B(brute_rank(M - N)) += BigRat(BigInt(1), BigInt(words.size()));
                }
                CHECK(weight_distribution(*c) == W);
                CHECK(distance_distribution(*c) == B);
            }
        }
    }
}

TEST_CASE("min distance needs two codewords") {
    const CodeParams p(make_field(2), 2, 2);
    CHECK_THROWS_AS(min_distance(RankCode::zero(p)), std::domain_error);
    CHECK(min_distance(RankCode::full_space(p)) == 1);
}

TEST_CASE("dual code is the trace-orthogonal complement") {
    Rng rng(22);
    for (auto [q, k, m] : {std::tuple{2u, 2, 3}, {3u, 2, 2}, {4u, 1, 3}}) {
        const CodeParams p(field_of_order(q), k, m);
        for (int n = 0; n < 10; ++n) {
            const RankCode C = random_linear_code(p, static_cast<int>(rng.below(p.length() + 1)), rng.next());
            const RankCode D = dual(C);
            CHECK(C.dim() + D.dim() == p.length());
            CHECK(dual(D) == C);
            // Oracle: everything orthogonal to all codewords.
            long count = 0;
            const auto words = words_of(C);
            for (const auto& X : all_matrices(p.field, k, m)) {
                bool orth = true;
                for (const auto& M : words) orth = orth && trace_inner(X, M) == 0;
                count += orth;
                CHECK(orth == D.contains(X));
            }
            CHECK(D.cardinality() == count);
        }
    }
}

TEST_CASE("restriction to column spaces") {
    // |C(U)| = |C| / q^(m(k-u)) * |C^perp(U^perp)|
    Rng rng(23);
    for (auto [q, k, m] : {std::tuple{2u, 3, 3}, {3u, 2, 3}}) {
        const CodeParams p(field_of_order(q), k, m);
        for (int n = 0; n < 10; ++n) {
            const RankCode C = random_linear_code(p, static_cast<int>(rng.below(p.length() + 1)), rng.next());
            for (int u = 0; u <= k; ++u) {
                for (const auto& U : enumerate_subspaces(p.field, k, u)) {
                    const RankCode CU = restrict(C, U);
                    long count = 0;
                    for (const auto& M : words_of(C)) count += U.contains(column_space(M));
                    REQUIRE(CU.cardinality() == count);
                    const BigRat rhs = BigRat(C.cardinality(), ipow(q, static_cast<std::uint64_t>(m) * (k - u))) *
                                       BigRat(restrict(dual(C), U.perp()).cardinality());
                    REQUIRE(BigRat(CU.cardinality()) == rhs);
                }
            }
        }
    }
}

TEST_CASE("left annihilated subcode") {
    const Field F = make_field(2);
    const RankCode C = example_code();
    const Mat H = bits(F, {"100"});
    const RankCode S = left_annihilated(C, H);
    long count = 0;
    for (const auto& M : words_of(C)) count += (H * M).is_zero();
    CHECK(S.cardinality() == count);
}

TEST_CASE("MRD and dually QMRD predicates") {
    const CodeParams p(make_field(2), 2, 2);
    CHECK(is_mrd(RankCode::full_space(p)));
    CHECK_FALSE(is_mrd(example_code()));
    CHECK(is_mrd(gabidulin(2, 3, 3, 2)));
    CHECK_FALSE(is_dually_qmrd(gabidulin(2, 3, 3, 2)));
    CHECK(is_dually_qmrd(dually_qmrd(2, 3, 3, 4)));
    CHECK_THROWS(is_dually_qmrd(random_code(p, 3, 1)));
}

TEST_CASE("codeword streams visit every codeword once") {
    const RankCode C = example_code();
    std::set<Vec> seen;
    CodewordStream s(C);
    while (s.next()) seen.emplace(s.current().begin(), s.current().end());
    CHECK(seen.size() == 16);
    const RankCode S = RankCode::from_set_vectors(C.params(), std::vector<Vec>(seen.begin(), seen.end()));
    CHECK(same_codewords(C, S));
    CHECK_FALSE(same_codewords(C, RankCode::zero(C.params())));
}

TEST_CASE("search guard refuses oversized enumerations") {
    const CodeParams p(make_field(2), 5, 5);
    const RankCode full = RankCode::full_space(p);
    CHECK_THROWS_AS(full.codewords(), GuardError);
    SearchGuard tight;
    tight.limit = 4;
    CHECK_THROWS_AS(weight_distribution(example_code(), tight), GuardError);
    tight.force = true;
    CHECK(weight_distribution(example_code(), tight).sum() == 16);
}

TEST_CASE("worked example code and its dual") {
    const RankCode C = example_code();
    const Field F = C.field();
    CHECK(C.dim() == 4);
    CHECK(min_distance(C) == 2);
    const RankCode D = dual(C);
    for (const Mat& M : {bits(F, {"001", "000", "000"}), bits(F, {"000", "100", "010"}), bits(F, {"001", "100", "010"})})
        CHECK(D.contains(M));
    const CodeParams p(F, 2, 2);
    CHECK(dual(RankCode::full_space(p)).cardinality() == 1);
    CHECK(weight_distribution(RankCode::full_space(p)) == (WeightDistribution(3) << 1, 9, 6).finished());
    CHECK(weight_distribution(RankCode::zero(p)) == (WeightDistribution(3) << 1, 0, 0).finished());
    const std::vector<Mat> pair{Mat(F, 2, 2), Mat::identity(F, 2)};
    CHECK(min_distance(RankCode::from_set(p, pair)) == 2);
    CHECK(RankCode::from_generators(p, std::vector<Mat>{}).cardinality() == 1);
}

TEST_CASE("Singleton bound, dual inclusion reversal and the QMRD characterization") {
    Rng rng(24);
    const CodeParams p(make_field(2), 3, 3);
    for (int n = 0; n < 60; ++n) {
        const int t = 1 + static_cast<int>(rng.below(8));
        const RankCode C = random_linear_code(p, t, rng.next());
        const int d = min_distance(C);
        CHECK(C.dim() <= p.m * (p.k - d + 1));
        std::vector<Mat> gens = C.basis();
        gens.push_back(random_matrix(p.field, 3, 3, rng));
        const RankCode D = RankCode::from_generators(p, gens);
        CHECK(dual(C).space().contains(dual(D).space()));
        if (t % p.m != 0) CHECK(is_dually_qmrd(C) == (d + min_distance(dual(C)) == p.k + 1));
        CHECK(weight_distribution(C).cast<BigRat>() == distance_distribution(C));
    }
}

TEST_CASE("restriction edge cases") {
    const RankCode C = example_code();
    CHECK(restrict(C, Subspace::full(C.field(), 3)) == C);
    CHECK(restrict(C, Subspace(C.field(), 3)).cardinality() == 1);
    CHECK_THROWS(restrict(C, Subspace::full(C.field(), 2)));
}
