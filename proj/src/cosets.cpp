#include "rmc/cosets.hpp"

#include <algorithm>

namespace rmc {

namespace {

void check_translate(const RankCode& code, const Mat& X) {
    if (!(X.field() == code.field()) || X.rows() != code.k() || X.cols() != code.m())
        throw std::invalid_argument("translate matrix shape or field mismatch");
}

}  // namespace

CosetProfile coset_profile(const RankCode& code, const Mat& X, const SearchGuard& guard) {
    check_translate(code, X);
    guard.check(code.cardinality(), "coset profile");
    const auto& p = code.params();
    std::vector<std::uint64_t> counts(p.k + 1, 0);
    const auto x = X.data();
    Vec shifted(p.length());
    CodewordStream s(code);
    while (s.next()) {
        const auto c = s.current();
        for (int t = 0; t < p.length(); ++t) shifted[t] = p.field.add(c[t], x[t]);
        ++counts[rank_weight(p, shifted)];
    }
    CosetProfile out{X, WeightDistribution(p.k + 1), p.k};
    for (int i = 0; i <= p.k; ++i) out.W(i) = BigInt(counts[i]);
    for (int i = p.k; i >= 0; --i)
        if (counts[i] > 0) out.min_weight = i;
    return out;
}

RowVector<BigRat> moebius_complete_rational(std::uint64_t q, int k, int m, const BigInt& codesize, int d_perp,
                                            std::span<const BigInt> prefix, CompletionForm form) {
    if (k < 1 || m < 1) throw std::invalid_argument("moebius_complete: dimensions must be positive");
    if (d_perp < 0 || d_perp > k)
        throw std::invalid_argument("moebius_complete: dual distance must lie in [0, k] (full space is rejected)");
    const int split = k - d_perp;  // prefix holds W_0..W_split
    if (static_cast<int>(prefix.size()) != split + 1)
        throw std::invalid_argument("moebius_complete: prefix must hold W_0..W_{k-d_perp}");
    for (const auto& w : prefix)
        if (w < 0) throw std::invalid_argument("moebius_complete: negative prefix weight");

    RowVector<BigRat> W(k + 1);
    for (int i = 0; i <= split; ++i) W(i) = BigRat(prefix[i]);

    // T_u = sum over dim-u subspaces U of |(C+X)(U)|.
    std::vector<BigRat> T(k + 1);
    for (int u = 0; u <= k; ++u) {
        if (u <= split) {
            BigInt s = 0;
            for (int j = 0; j <= u; ++j) s += prefix[j] * gaussian_binomial(k - j, u - j, q);
            T[u] = BigRat(s);
        } else {
            T[u] = BigRat(gaussian_binomial(k, u, q) * codesize, ipow(q, static_cast<std::uint64_t>(m) * (k - u)));
        }
    }

    for (int i = split + 1; i <= k; ++i) {
        BigRat w = 0;
        for (int u = 0; u <= i; ++u) {
            const bool plain = form == CompletionForm::displayed && u > split;
            if (plain)
                w += T[u];
            else
                w += BigRat(subspace_moebius(u, i, q) * gaussian_binomial(k - u, i - u, q)) * T[u];
        }
        W(i) = w;
    }
    return W;
}

WeightDistribution moebius_complete(std::uint64_t q, int k, int m, const BigInt& codesize, int d_perp,
                                    std::span<const BigInt> prefix) {
    const auto r = moebius_complete_rational(q, k, m, codesize, d_perp, prefix, CompletionForm::derived);
    WeightDistribution W(k + 1);
    for (int i = 0; i <= k; ++i) {
        if (boost::multiprecision::denominator(r(i)) != 1 || r(i) < 0)
            throw std::domain_error("moebius_complete: inputs do not describe a translate");
        W(i) = boost::multiprecision::numerator(r(i));
    }
    return W;
}

BigInt high_dim_section_count(const RankCode& code, const Mat& X, const Subspace& U, const SearchGuard& guard) {
    check_translate(code, X);
    if (U.ambient() != code.k()) throw std::invalid_argument("section subspace must live in F_q^k");
    guard.check(code.cardinality(), "section count");
    const auto& p = code.params();
    const auto x = X.data();
    Vec shifted(p.length());
    Vec column(p.k);
    BigInt count = 0;
    CodewordStream s(code);
    while (s.next()) {
        const auto c = s.current();
        for (int t = 0; t < p.length(); ++t) shifted[t] = p.field.add(c[t], x[t]);
        bool inside = true;
        for (int j = 0; j < p.m && inside; ++j) {
            for (int i = 0; i < p.k; ++i) column[i] = shifted[i * p.m + j];
            inside = U.contains(column);
        }
        if (inside) ++count;
    }
    return count;
}

TransformVector transform_of(const RankCode& code, const SearchGuard& guard) {
    const auto table = build_table(code.k(), code.m(), code.field().q());
    return macwilliams_transform(distance_distribution(code, guard), code.cardinality(), table);
}

BigRat AnnihilatorPoly::evaluate(int x) const {
    BigRat s = 0;
    for (std::size_t j = 0; j < coefficients.size(); ++j) s += coefficients[j] * BigRat(table.at(static_cast<int>(j), x));
    return s;
}

AnnihilatorPoly annihilator(const RankCode& code, const SearchGuard& guard) {
    const auto& p = code.params();
    AnnihilatorPoly a;
    a.table = build_table(p.k, p.m, p.field.q());
    const auto Bstar = macwilliams_transform(distance_distribution(code, guard), code.cardinality(), a.table);
    for (int i = 1; i <= p.k; ++i) {
        if (Bstar(i) < 0) throw std::logic_error("negative transform coefficient");
        if (Bstar(i) > 0) a.roots.push_back(i);
    }
    a.sigma_star = static_cast<int>(a.roots.size());
    if (a.sigma_star == 0) throw std::domain_error("annihilator undefined: external distance is zero");

    const std::uint64_t q = p.field.q();
    const BigInt ambient = a.table.ambient_size();
    // Values alpha(x) for x = 0..k from the product form.
    std::vector<BigRat> values(p.k + 1);
    for (int x = 0; x <= p.k; ++x) {
        BigRat v(ambient, code.cardinality());
        for (int b : a.roots) {
            const BigRat shift = b >= x ? BigRat(ipow(q, b - x)) : BigRat(BigInt(1), ipow(q, x - b));
            v *= (BigRat(1) - shift) / (BigRat(1) - BigRat(ipow(q, b)));
        }
        values[x] = v;
    }
    // alpha_j = q^{-km} sum_i alpha(i) P_i(j)
    std::vector<BigRat> coeffs(p.k + 1);
    for (int j = 0; j <= p.k; ++j) {
        BigRat s = 0;
        for (int i = 0; i <= p.k; ++i) s += values[i] * BigRat(a.table.at(i, j));
        coeffs[j] = s / BigRat(ambient);
    }
    for (int j = a.sigma_star + 1; j <= p.k; ++j)
        if (coeffs[j] != 0) throw std::logic_error("annihilator expansion exceeds its degree");
    a.coefficients.assign(coeffs.begin(), coeffs.begin() + a.sigma_star + 1);
    return a;
}

BigRat verify_annihilator(const AnnihilatorPoly& alpha, const RankCode& code, const Mat& X, const SearchGuard& guard) {
    const auto profile = coset_profile(code, X, guard);
    BigRat s = 0;
    for (int j = 0; j <= alpha.sigma_star; ++j) s += alpha.coefficients[j] * BigRat(profile.W(j));
    return s;
}

}  // namespace rmc
