#pragma once

#include "rmc/codes.hpp"

namespace rmc {

/// An invertible k x k matrix A with a row count 1 <= u <= k-1.
struct SurgerySpec {
    Mat A;
    int u = 0;

    SurgerySpec(Mat a, int u_);
};

/// AC = {A M : M in C}; A must be invertible.
RankCode left_mul(const Mat& A, const RankCode& code);

/// Pi(C, A, u): the last k-u rows of every element of AC.
RankCode puncture(const RankCode& code, const Mat& A, int u);
inline RankCode puncture(const RankCode& code, const SurgerySpec& s) { return puncture(code, s.A, s.u); }

/// Sigma(C, A, u): the last k-u rows of the elements of AC whose first u
/// rows vanish. Requires 0 in C.
RankCode shorten(const RankCode& code, const Mat& A, int u);
inline RankCode shorten(const RankCode& code, const SurgerySpec& s) { return shorten(code, s.A, s.u); }

}  // namespace rmc
