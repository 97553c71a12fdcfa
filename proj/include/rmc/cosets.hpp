#pragma once

#include <span>
#include <vector>

#include "rmc/codes.hpp"

namespace rmc {

/// Weight distribution of the translate C + X.
struct CosetProfile {
    Mat X;
    WeightDistribution W;
    /// d(X, C): least i with W_i > 0.
    int min_weight = 0;
};

CosetProfile coset_profile(const RankCode& code, const Mat& X, const SearchGuard& guard = {});

/// Which closed form to use for the upper weights of a translate.
enum class CompletionForm {
    /// Moebius inversion with the alternating factor on every term, u = 0..i.
    derived,
    /// The variant whose high-dimension terms carry no Moebius factor.
    displayed,
};

/// Full weight distribution W_0..W_k of a translate of a proper linear code
/// with |C| = codesize and dual distance d_perp, given W_0..W_{k-d_perp}.
/// d_perp = 0 returns the prefix unchanged. Exact rationals; the displayed
/// form may produce non-integers.
RowVector<BigRat> moebius_complete_rational(std::uint64_t q, int k, int m, const BigInt& codesize, int d_perp,
                                            std::span<const BigInt> prefix,
                                            CompletionForm form = CompletionForm::derived);

/// Derived completion; throws std::domain_error if the result is not a
/// non-negative integer vector (inconsistent inputs).
WeightDistribution moebius_complete(std::uint64_t q, int k, int m, const BigInt& codesize, int d_perp,
                                    std::span<const BigInt> prefix);

/// |(C + X)(U)| by enumeration.
BigInt high_dim_section_count(const RankCode& code, const Mat& X, const Subspace& U, const SearchGuard& guard = {});

/// B*(C) = |C|^{-1} B(C) P.
TransformVector transform_of(const RankCode& code, const SearchGuard& guard = {});

/// Degree-sigma* polynomial in q^{-x} vanishing at the positive support of
/// B*(C), normalized to q^{km}/|C| at x = 0, expanded in the Krawtchouk basis.
struct AnnihilatorPoly {
    int sigma_star = 0;
    /// b_1 < ... < b_sigma*
    std::vector<int> roots;
    /// alpha_0 .. alpha_sigma*
    std::vector<BigRat> coefficients;
    KrawtchoukTable table;

    /// sum_j alpha_j P_j(x)
    BigRat evaluate(int x) const;
};

/// Throws std::domain_error when sigma* = 0 (C is the full space).
AnnihilatorPoly annihilator(const RankCode& code, const SearchGuard& guard = {});

/// sum_{j=0}^{sigma*} alpha_j W_j(C + X); equals 1 for every X.
BigRat verify_annihilator(const AnnihilatorPoly& alpha, const RankCode& code, const Mat& X,
                          const SearchGuard& guard = {});

}  // namespace rmc
