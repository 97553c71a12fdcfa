#include "rmc/qcomb.hpp"

#include <stdexcept>

namespace rmc {

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

BigInt gaussian_binomial(int a, int b, std::uint64_t q) {
    if (a < 0) throw std::invalid_argument("gaussian_binomial: negative top argument");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be at least 2");
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < b; ++i) {
        num *= ipow(q, a - i) - 1;
        den *= ipow(q, i + 1) - 1;
    }
    return num / den;
}

BigInt subspace_moebius(int s, int t, std::uint64_t q) {
    if (s < 0 || s > t) throw std::invalid_argument("subspace_moebius: need 0 <= s <= t");
    const std::uint64_t d = t - s;
    BigInt v = ipow(q, d * (d - 1) / 2);
    return d % 2 == 0 ? v : BigInt(-v);
}

BigInt rank_sphere_size(int i, int k, int m, std::uint64_t q) {
    if (i < 0 || i > k) return 0;
    BigInt r = gaussian_binomial(k, i, q);
    const BigInt qm = ipow(q, m);
    for (int l = 0; l < i; ++l) r *= qm - ipow(q, l);
    return r;
}

BigInt krawtchouk(int i, int j, int k, int m, std::uint64_t q) {
    if (i < 0 || j < 0 || i > k || j > k) throw std::invalid_argument("krawtchouk: indices outside [0, k]");
    BigInt sum = 0;
    // Terms with l > i vanish through binom(k-l, k-i).
    for (int l = 0; l <= i; ++l) {
        const BigInt g1 = gaussian_binomial(k - l, k - i, q);
        const BigInt g2 = gaussian_binomial(k - j, l, q);
        if (g1 == 0 || g2 == 0) continue;
        const std::uint64_t d = i - l;
        BigInt term = ipow(q, static_cast<std::uint64_t>(l) * m + d * (d - 1) / 2) * g1 * g2;
        if (d % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

KrawtchoukTable build_table(int k, int m, std::uint64_t q) {
    if (k < 1 || m < 1) throw std::invalid_argument("build_table: dimensions must be positive");
    KrawtchoukTable t;
    t.k = k;
    t.m = m;
    t.q = q;
    t.P.resize(k + 1, k + 1);
    for (int j = 0; j <= k; ++j)
        for (int i = 0; i <= k; ++i) t.P(j, i) = krawtchouk(i, j, k, m, q);
    return t;
}

TransformVector macwilliams_transform(const DistanceDistribution& B, const BigInt& codesize,
                                      const KrawtchoukTable& table) {
    if (B.size() != table.k + 1) throw std::invalid_argument("macwilliams_transform: length mismatch");
    if (codesize < 1) throw std::invalid_argument("macwilliams_transform: code size must be positive");
    const DenseMatrix<BigRat> P = table.P.cast<BigRat>();
    TransformVector r = B * P;
    const BigRat inv = BigRat(1) / BigRat(codesize);
    for (Eigen::Index i = 0; i < r.size(); ++i) r(i) *= inv;
    return r;
}

}  // namespace rmc
