#include "rmc/verify.hpp"

#include <sstream>

#include "rmc/construct.hpp"
#include "rmc/covering.hpp"
#include "rmc/surgery.hpp"

namespace rmc {

namespace {

Mat bits(const Field& f, std::initializer_list<const char*> rows) {
    std::vector<Elem> v;
    int k = 0;
    int m = 0;
    for (const char* r : rows) {
        m = 0;
        for (const char* c = r; *c; ++c, ++m) v.push_back(static_cast<Elem>(*c - '0'));
        ++k;
    }
    return devectorize(f, v, k, m);
}

RankCode binary_code(int k, int m, const std::vector<Mat>& gens) {
    return RankCode::from_generators(CodeParams(make_field(2), k, m), gens);
}

// Ambient matrix number `index`, last entry fastest.
Mat ambient_matrix(const CodeParams& p, std::uint64_t index) {
    Vec v(p.length());
    for (int t = p.length() - 1; t >= 0; --t) {
        v[t] = static_cast<Elem>(index % p.field.q());
        index /= p.field.q();
    }
    return devectorize(p.field, v, p.k, p.m);
}

std::uint64_t ambient_count(const CodeParams& p) { return p.ambient_size().convert_to<std::uint64_t>(); }

// Counts failures and keeps the first description.
struct Tally {
    long checked = 0;
    long failed = 0;
    std::string first;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok && failed++ == 0) first = what;
    }
    std::string summary() const {
        std::ostringstream s;
        s << checked - failed << "/" << checked << " ok";
        if (failed) s << "; first failure: " << first;
        return s.str();
    }
};

template <typename T>
std::string str(const T& v) {
    std::ostringstream s;
    s << v;
    return s.str();
}

std::string cells(const std::set<Cell>& s) {
    std::string out;
    for (const auto& [i, j] : s) out += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    return out.empty() ? "{}" : out;
}

CheckResult finish(int id, std::string name, const Tally& t) {
    return {id, std::move(name), t.failed == 0 && t.checked > 0, t.summary()};
}

}  // namespace

RankCode initial_set_example() {
    const Field f = make_field(2);
    return binary_code(3, 3, {bits(f, {"100", "001", "000"}), bits(f, {"010", "000", "100"}),
                              bits(f, {"000", "100", "010"}), bits(f, {"000", "011", "100"})});
}

RankCode mrd_example() {
    const Field f = make_field(2);
    return binary_code(4, 4, {bits(f, {"1000", "0001", "0010", "0100"}), bits(f, {"0100", "0011", "0001", "1100"}),
                              bits(f, {"0010", "0111", "1010", "1001"}), bits(f, {"0001", "1110", "0101", "0111"})});
}

RankCode qmrd_example() {
    const Field f = make_field(2);
    return binary_code(4, 4, {bits(f, {"1000", "0001", "0010", "0100"}), bits(f, {"0100", "1011", "0001", "1100"}),
                              bits(f, {"0010", "0111", "1010", "1001"})});
}

CheckResult check_initial_set_example() {
    const RankCode C = initial_set_example();
    const int d = min_distance(C);
    const int sigma = external_distance(C);
    const auto in = initial_set(C).entries;
    const auto S = initial_set_complement(C);
    const int lambda = min_line_cover(S);
    const int bound = bound_initial_set(C);
    const int rho = covering_radius_exact(C);
    const std::set<Cell> want_in{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    const std::set<Cell> want_S{{1, 3}, {2, 3}};
    const bool ok = d == 2 && sigma == 3 && in == want_in && S.S == want_S && lambda == 1 && bound == 2 && rho == 2;
    std::ostringstream s;
    s << "d=" << d << " sigma*=" << sigma << " in=" << cells(in) << " S=" << cells(S.S) << " lambda=" << lambda
      << " initial-set bound=" << bound << " rho=" << rho;
    return {1, "initial-set worked example", ok, s.str()};
}

CheckResult check_mrd_example() {
    const RankCode C = mrd_example();
    const bool mrd = is_mrd(C);
    const int d = min_distance(C);
    const int rho = covering_radius_exact(C);
    const int mu = maximality_degree(C);
    std::ostringstream s;
    s << "mrd=" << mrd << " d=" << d << " rho=" << rho << " mu=" << mu;
    return {2, "MRD worked example", mrd && d == 4 && rho == 2 && rho != d - 1 && mu == 2, s.str()};
}

CheckResult check_qmrd_example() {
    const RankCode C = qmrd_example();
    const bool qmrd = is_dually_qmrd(C);
    const int d = min_distance(C);
    const int dp = min_distance(dual(C));
    const int rho = covering_radius_exact(C);
    const int mu = maximality_degree(C);
    const int sigma = external_distance(C);
    std::ostringstream s;
    s << "dually-qmrd=" << qmrd << " d=" << d << " d_perp=" << dp << " rho=" << rho << " mu=" << mu
      << " sigma*=" << sigma;
    const bool ok = qmrd && d == 4 && dp == 1 && d + dp == C.k() + 1 && rho == 3 && mu == 1 && sigma == 4;
    return {3, "dually QMRD worked example", ok, s.str()};
}

CheckResult check_moebius_completion() {
    const CodeParams p(make_field(2), 3, 3);
    Rng rng(0x5eed0001);
    long total = 0;
    long derived = 0;
    long displayed = 0;
    Tally t;
    auto run = [&](const RankCode& C, const Mat& X) {
        const auto profile = coset_profile(C, X);
        const int dp = min_distance(dual(C));
        const std::vector<BigInt> prefix(profile.W.data(), profile.W.data() + (p.k - dp + 1));
        const RowVector<BigRat> want = profile.W.cast<BigRat>();
        const auto a = moebius_complete_rational(p.field.q(), p.k, p.m, C.cardinality(), dp, prefix, CompletionForm::derived);
        const auto b = moebius_complete_rational(p.field.q(), p.k, p.m, C.cardinality(), dp, prefix, CompletionForm::displayed);
        ++total;
        derived += a == want;
        displayed += b == want;
        t.expect(moebius_complete(p.field.q(), p.k, p.m, C.cardinality(), dp, prefix) == profile.W,
                 "dim " + std::to_string(C.dim()) + " X=" + str(X.entries().reshaped<Eigen::RowMajor>().transpose()));
    };
    for (int n = 0; n < 200; ++n) {
        const RankCode C = random_linear_code(p, 1 + static_cast<int>(rng.below(5)), rng.next());
        run(C, random_matrix(p.field, p.k, p.m, rng));
    }
    for (int n = 0; n < 20; ++n) {
        const RankCode C = random_linear_code(p, 1 + n % 5, rng.next());
        for (std::uint64_t x = 0; x < ambient_count(p); ++x) run(C, ambient_matrix(p, x));
    }
    std::ostringstream s;
    s << "derived form matched " << derived << "/" << total << ", displayed form matched " << displayed << "/" << total
      << "; moebius_complete " << t.summary();
    return {4, "Moebius completion vs coset profiles", t.failed == 0 && derived == total, s.str()};
}

CheckResult check_duality() {
    Tally t;
    Rng rng(0x5eed0002);
    for (const auto& [q, k, m] : {std::tuple{2u, 3, 3}, std::tuple{3u, 2, 3}}) {
        const CodeParams p(make_field(q), k, m);
        for (int n = 0; n < 200; ++n) {
            const RankCode C = random_linear_code(p, static_cast<int>(rng.below(p.length() + 1)), rng.next());
            const Mat A = random_invertible(p.field, k, rng);
            const int u = 1 + static_cast<int>(rng.below(k - 1));
            const RankCode lhs = dual(puncture(C, A, u));
            const RankCode rhs = shorten(dual(C), *inverse(transpose(A)), u);
            t.expect(lhs == rhs, "q=" + std::to_string(q) + " dim " + std::to_string(C.dim()) + " u=" + std::to_string(u));
        }
    }
    return finish(5, "puncture/shorten duality", t);
}

CheckResult check_bound_sweep() {
    const CodeParams p(make_field(2), 2, 3);
    const std::uint64_t N = ambient_count(p);
    ScanOptions serial;
    serial.threads = 1;
    Tally t;
    long codes = 0;
    for (int u = 0; u <= 4; ++u) {
        for (const auto& S : enumerate_subspaces(p.field, p.length(), u)) {
            ++codes;
            const RankCode C = RankCode::from_subspace(p, S);
            const std::string tag = "dim " + std::to_string(u) + " code #" + std::to_string(codes);
            const int rho = covering_radius_exact(C, serial);
            t.expect(rho <= bound_dual_distance(C), tag + ": dual-distance bound");
            t.expect(rho <= external_distance(C), tag + ": external bound");
            if (u > 0) t.expect(rho <= bound_initial_set(C), tag + ": initial-set bound");

            const bool single = C.cardinality() == 1;
            const int d = single ? 0 : min_distance(C);
            bool oracle_nonmaximal = false;
            int best_enlarged = 0;
            for (std::uint64_t x = 0; x < N; ++x) {
                const Mat X = ambient_matrix(p, x);
                if (C.contains(X)) continue;
                const int dx = distance_to_code(C, X);
                const int d_union = single ? dx : std::min(d, dx);
                t.expect(rho >= d_union, tag + ": rho >= d(C u {X})");
                std::vector<Mat> gens = C.basis();
                gens.push_back(X);
                t.expect(rho >= min_distance(RankCode::from_generators(p, gens)), tag + ": rho >= d(span(C, X))");
                if (!single) {
                    oracle_nonmaximal = oracle_nonmaximal || dx >= d;
                    best_enlarged = std::max(best_enlarged, d_union);
                }
            }
            if (single) {
                t.expect(is_maximal(C, serial), tag + ": singleton maximal");
                continue;
            }
            t.expect(d - 1 < 2 * rho, tag + ": d - 1 < 2 rho");
            const bool maximal = is_maximal(C, serial);
            t.expect(maximal == (rho <= d - 1) && maximal == !oracle_nonmaximal, tag + ": maximality");
            const int mu = maximality_degree(C, serial);
            t.expect(mu == d - std::min(rho, d) && mu == d - best_enlarged, tag + ": maximality degree");
        }
    }
    CheckResult r = finish(6, "bound soundness sweep", t);
    r.detail = std::to_string(codes) + " codes; " + r.detail;
    r.pass = r.pass && codes == 2761;
    return r;
}

CheckResult check_transform_identities() {
    Tally t;
    for (std::uint64_t q : {2u, 3u}) {
        for (int k = 1; k <= 4; ++k) {
            for (int m = k; m <= 5; ++m) {
                const auto T = build_table(k, m, q);
                const BigInt total = T.ambient_size();
                const std::string tag = "q=" + std::to_string(q) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
                for (int j = 0; j <= k; ++j) {
                    BigInt s = 0;
                    for (int i = 0; i <= k; ++i) s += T.at(i, j);
                    t.expect(s == (j == 0 ? total : BigInt(0)), tag + ": column sum");
                }
                const DenseMatrix<BigInt> PP = T.P * T.P;
                const DenseMatrix<BigInt> I = DenseMatrix<BigInt>::Identity(k + 1, k + 1) * total;
                t.expect(PP == I, tag + ": P^2");
                for (int i = 0; i <= k; ++i) t.expect(T.at(i, 0) == rank_sphere_size(i, k, m, q), tag + ": P_i(0)");
            }
        }
    }
    const std::vector<std::tuple<std::uint64_t, int, int>> spaces{{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {2, 2, 4},
                                                                  {2, 3, 4}, {3, 2, 2}, {3, 2, 3}};
    Rng rng(0x5eed0003);
    for (int n = 0; n < 100; ++n) {
        const auto& [q, k, m] = spaces[n % spaces.size()];
        const CodeParams p(field_of_order(q), k, m);
        const RankCode C = random_linear_code(p, static_cast<int>(rng.below(p.length() + 1)), rng.next());
        t.expect(transform_of(C) == weight_distribution(dual(C)).cast<BigRat>(), "linear B* vs dual weights");
    }
    for (int n = 0; n < 100; ++n) {
        const auto& [q, k, m] = spaces[n % spaces.size()];
        const CodeParams p(field_of_order(q), k, m);
        const std::uint64_t cap = std::min<std::uint64_t>(24, ambient_count(p));
        const RankCode C = random_code(p, 1 + rng.below(cap), rng.next());
        const auto B = transform_of(C);
        bool nonneg = true;
        for (Eigen::Index i = 0; i < B.size(); ++i) nonneg = nonneg && B(i) >= 0;
        t.expect(nonneg, "nonlinear B* sign");
    }
    return finish(7, "transform identities", t);
}

CheckResult check_annihilator() {
    const CodeParams p(make_field(2), 2, 3);
    Rng rng(0x5eed0004);
    Tally t;
    for (int n = 0; n < 20; ++n) {
        const RankCode C = n % 2 == 0 ? random_linear_code(p, 1 + static_cast<int>(rng.below(5)), rng.next())
                                      : random_code(p, 2 + rng.below(20), rng.next());
        const auto alpha = annihilator(C);
        for (std::uint64_t x = 0; x < ambient_count(p); ++x)
            t.expect(verify_annihilator(alpha, C, ambient_matrix(p, x)) == 1, "code #" + std::to_string(n) + " X #" + std::to_string(x));
    }
    return finish(8, "annihilator identity", t);
}

CheckResult check_constructions() {
    Tally t;
    Rng rng(0x5eed0005);
    for (int m = 2; m <= 4; ++m) {
        for (int k = 2; k <= m; ++k) {
            for (int d = 2; d <= k; ++d) {
                const std::string tag = "gabidulin(2," + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(d) + ")";
                const RankCode G = gabidulin(2, k, m, d);
                t.expect(is_mrd(G) && min_distance(G) == d, tag);
                for (int n = 0; n < 50; ++n) {
                    const Mat A = random_invertible(G.field(), k, rng);
                    const int u = 1 + static_cast<int>(rng.below(k - 1));
                    t.expect(is_mrd(puncture(G, A, u)), tag + " puncture u=" + std::to_string(u));
                }
            }
        }
    }
    for (int s = 1; s < 16; ++s)
        if (s % 4 != 0) t.expect(is_dually_qmrd(dually_qmrd(2, 4, 4, s)), "dually_qmrd(2,4,4," + std::to_string(s) + ")");
    const auto W = weight_distribution(linearized_map_code(2, 2, 2));
    t.expect(W(0) == 1 && W(1) == 0 && W(3) == 0, "linearized_map_code(2,2,2) weights");
    return finish(9, "construction verification", t);
}

CheckResult check_qmrd_dual_distribution() {
    Tally t;
    std::ostringstream s;
    auto compare = [&](const RankCode& a, const RankCode& b, const std::string& tag) {
        t.expect(is_dually_qmrd(a) && is_dually_qmrd(b) && a.dim() == b.dim(), tag + ": both dually QMRD");
        t.expect(weight_distribution(dual(a)) == weight_distribution(dual(b)), tag + ": dual weights");
    };

    // Random search for a dually QMRD code of dimension 4 in F_2^{3x3}.
    const CodeParams p(make_field(2), 3, 3);
    std::uint64_t seed = 0x5eed0006;
    std::optional<RankCode> found;
    for (int tries = 0; tries < 100000 && !found; ++tries, ++seed) {
        RankCode R = random_linear_code(p, 4, seed);
        if (is_dually_qmrd(R)) found = std::move(R);
    }
    t.expect(found.has_value(), "seeded search found no dually QMRD code");
    if (found) {
        compare(dually_qmrd(2, 3, 3, 4), *found, "F_2^{3x3} t=4");
        s << "search hit at seed " << seed - 1 << "; ";
    }
    compare(qmrd_example(), dually_qmrd(2, 4, 4, 3), "worked example vs construction");
    for (int dim : {5, 6, 7, 10})
        compare(dually_qmrd(2, 4, 4, dim), dually_qmrd(2, 4, 4, dim, seed + dim), "F_2^{4x4} t=" + std::to_string(dim));
    CheckResult r = finish(10, "dually QMRD dual distributions", t);
    r.detail = s.str() + r.detail;
    return r;
}

std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& progress) {
    using Check = CheckResult (*)();
    const Check checks[] = {check_initial_set_example, check_mrd_example,          check_qmrd_example,
                            check_moebius_completion,  check_duality,              check_bound_sweep,
                            check_transform_identities, check_annihilator,         check_constructions,
                            check_qmrd_dual_distribution};
    std::vector<CheckResult> out;
    for (Check c : checks) {
        CheckResult r;
        try {
            r = c();
        } catch (const std::exception& e) {
            r = {static_cast<int>(out.size()) + 1, "aborted", false, std::string("exception: ") + e.what()};
        }
        if (progress) progress(r);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace rmc
