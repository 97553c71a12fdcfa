#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>

namespace rmc {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Weight distribution W_0..W_k.
using WeightDistribution = RowVector<BigInt>;
/// Distance distribution B_0..B_k (averaged pair counts, hence rational).
using DistanceDistribution = RowVector<BigRat>;
/// The transform B* = |C|^{-1} B P.
using TransformVector = RowVector<BigRat>;

BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// Number of b-dimensional subspaces of F_q^a; zero when b < 0 or b > a.
BigInt gaussian_binomial(int a, int b, std::uint64_t q);

/// Moebius function of the subspace lattice between nested subspaces of
/// dimensions s <= t: (-1)^(t-s) q^binom(t-s, 2).
BigInt subspace_moebius(int s, int t, std::uint64_t q);

/// Number of k x m matrices of rank i over F_q.
BigInt rank_sphere_size(int i, int k, int m, std::uint64_t q);

/// q-Krawtchouk value P_i(j) of the bilinear forms scheme on k x m matrices:
/// the character sum over the rank-i sphere at a matrix of rank j.
BigInt krawtchouk(int i, int j, int k, int m, std::uint64_t q);

/// All P_i(j) for fixed (k, m, q), entry (j, i) = P_i(j).
struct KrawtchoukTable {
    int k = 0;
    int m = 0;
    std::uint64_t q = 0;
    DenseMatrix<BigInt> P;

    const BigInt& at(int i, int j) const { return P(j, i); }
    /// q^(km)
    BigInt ambient_size() const { return ipow(q, static_cast<std::uint64_t>(k) * m); }
};

KrawtchoukTable build_table(int k, int m, std::uint64_t q);

/// B* = codesize^{-1} B P.
TransformVector macwilliams_transform(const DistanceDistribution& B, const BigInt& codesize,
                                      const KrawtchoukTable& table);

}  // namespace rmc
