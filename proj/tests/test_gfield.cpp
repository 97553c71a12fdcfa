#include <catch_amalgamated.hpp>

#include <set>

#include "rmc/gfield.hpp"
#include "rmc/random.hpp"

using namespace rmc;

namespace {

// Monic polynomials of degree n over GF(p), coefficient tuples from the
// constant term upward, in lexicographic order of (c_0, ..., c_{n-1}).
std::vector<std::vector<Elem>> monics(std::uint32_t p, int n) {
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> c(n, 0);
    while (true) {
        auto poly = c;
        poly.push_back(1);
        out.push_back(poly);
        int t = n - 1;
        while (t >= 0 && c[t] == p - 1) c[t--] = 0;
        if (t < 0) break;
        ++c[t];
    }
    return out;
}

std::vector<Elem> naive_mul(std::uint32_t p, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<Elem>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    return r;
}

// Least irreducible found by sieving out every product of lower-degree monics.
std::vector<Elem> sieve_least_irreducible(std::uint32_t p, int n) {
    std::set<std::vector<Elem>> reducible;
    for (int a = 1; a <= n / 2; ++a)
        for (const auto& f : monics(p, a))
            for (const auto& g : monics(p, n - a)) reducible.insert(naive_mul(p, f, g));
    for (const auto& f : monics(p, n))
        if (!reducible.contains(f)) return f;
    return {};
}

// Product of two element codes by polynomial multiplication and reduction.
Elem slow_mul(const Field& F, Elem a, Elem b) {
    const std::uint32_t p = F.p();
    const int e = static_cast<int>(F.e());
    std::vector<Elem> x(e), y(e);
    for (int i = 0; i < e; ++i, a /= p, b /= p) {
        x[i] = a % p;
        y[i] = b % p;
    }
    auto r = naive_mul(p, x, y);
    const auto mod = F.modulus();
    for (int d = static_cast<int>(r.size()) - 1; d >= e; --d) {
        const Elem c = r[d];
        for (int i = 0; i <= e; ++i) r[d - e + i] = static_cast<Elem>((r[d - e + i] + std::uint64_t{p - c} * mod[i]) % p);
    }
    Elem out = 0;
    for (int i = e - 1; i >= 0; --i) out = out * p + r[i];
    return out;
}

}  // namespace

TEST_CASE("modulus is the least irreducible under the constant-first order") {
    for (auto [p, e] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {2u, 8u}, {3u, 2u}, {3u, 3u}, {5u, 2u}, {7u, 2u}}) {
        CAPTURE(p, e);
        const Field F = make_field(p, e);
        const auto want = sieve_least_irreducible(p, static_cast<int>(e));
        REQUIRE(std::vector<Elem>(F.modulus().begin(), F.modulus().end()) == want);
    }
}

TEST_CASE("known small fields") {
    const Field f4 = make_field(2, 2);
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.inv(2) == 3);
    const Field f9 = make_field(3, 2);
    CHECK(std::vector<Elem>(f9.modulus().begin(), f9.modulus().end()) == std::vector<Elem>{1, 0, 1});
    const Field f16 = make_field(2, 4);
    CHECK(std::vector<Elem>(f16.modulus().begin(), f16.modulus().end()) == std::vector<Elem>{1, 0, 0, 1, 1});
    const Field f5 = make_field(5);
    CHECK(f5.modulus().size() == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.neg(2) == 3);
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (std::uint32_t q : {2u, 3u, 4u, 7u, 8u, 9u, 16u, 25u}) {
        CAPTURE(q);
        const Field F = field_of_order(q);
        for (Elem a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (Elem b = 0; b < q; ++b) {
                CHECK(F.mul(a, b) == slow_mul(F, a, b));
                for (Elem c = 0; c < q; ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
                }
            }
        }
    }
}

TEST_CASE("log-table fields agree with polynomial arithmetic") {
    Rng rng(11);
    for (std::uint32_t q : {512u, 729u, 1024u, 65536u, 65521u, 4096u}) {
        CAPTURE(q);
        const Field F = field_of_order(q);
        for (int n = 0; n < 2000; ++n) {
            const Elem a = static_cast<Elem>(rng.below(q));
            const Elem b = static_cast<Elem>(rng.below(q));
            const Elem c = static_cast<Elem>(rng.below(q));
            REQUIRE(F.mul(a, b) == slow_mul(F, a, b));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
        CHECK(F.pow(static_cast<Elem>(1 + rng.below(q - 1)), q - 1) == 1);
    }
}

TEST_CASE("field construction rejects bad orders") {
    CHECK_THROWS_AS(field_of_order(6), std::invalid_argument);
    CHECK_THROWS_AS(field_of_order(1), std::invalid_argument);
    CHECK_THROWS_AS(field_of_order(131072), std::invalid_argument);
    CHECK_THROWS_AS(make_field(4), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2).inv(0), std::domain_error);
    CHECK(make_field(2, 3) == field_of_order(8));
}

TEST_CASE("polynomial helpers") {
    const Field F = make_field(2);
    CHECK(poly::is_irreducible(F, {1, 1, 1}));
    CHECK_FALSE(poly::is_irreducible(F, {1, 0, 1}));
    CHECK(poly::least_irreducible(F, 4) == poly::Poly{1, 0, 0, 1, 1});
    const Field F4 = make_field(2, 2);
    // Degree-2 irreducibles over GF(4) have no roots in GF(4).
    const auto g = poly::least_irreducible(F4, 2);
    REQUIRE(g.size() == 3);
    for (Elem x = 0; x < 4; ++x) CHECK(F4.add(F4.add(g[0], F4.mul(g[1], x)), F4.mul(x, x)) != 0);
    CHECK(poly::degree(poly::mod(F, {1, 1, 0, 1}, {1, 1})) < 1);
}

TEST_CASE("small identities and Frobenius additivity") {
    CHECK(make_field(2).add(1, 1) == 0);
    CHECK(make_field(3).mul(2, 2) == 1);
    for (std::uint32_t q : {4u, 8u, 9u, 27u, 1024u}) {
        const Field F = field_of_order(q);
        Rng rng(q);
        for (int n = 0; n < 300; ++n) {
            const Elem a = static_cast<Elem>(rng.below(q));
            const Elem b = static_cast<Elem>(rng.below(q));
            CHECK(F.pow(F.add(a, b), F.p()) == F.add(F.pow(a, F.p()), F.pow(b, F.p())));
        }
    }
}
