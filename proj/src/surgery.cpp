#include "rmc/surgery.hpp"

namespace rmc {

namespace {

void check_transform(const RankCode& code, const Mat& A) {
    if (!(A.field() == code.field()) || A.rows() != code.k() || A.cols() != code.k())
        throw std::invalid_argument("transform must be a k x k matrix over the code's field");
    if (rank(A) != code.k()) throw std::invalid_argument("transform matrix is singular");
}

void check_rows(const RankCode& code, int u) {
    if (u < 1 || u > code.k() - 1) throw std::invalid_argument("row count u must lie in [1, k-1]");
}

// Applies f to every basis element (linear) or codeword (set).
template <typename Fn>
RankCode map_code(const RankCode& code, const CodeParams& target, Fn f) {
    if (code.is_linear()) {
        std::vector<Mat> gens;
        for (const auto& b : code.basis()) gens.push_back(f(b));
        return RankCode::from_generators(target, gens);
    }
    std::vector<Mat> words;
    for (const auto& w : code.words()) words.push_back(f(devectorize(code.field(), w, code.k(), code.m())));
    return RankCode::from_set(target, words);
}

}  // namespace

SurgerySpec::SurgerySpec(Mat a, int u_) : A(std::move(a)), u(u_) {
    if (A.rows() != A.cols() || rank(A) != A.rows()) throw std::invalid_argument("surgery matrix must be invertible");
    if (u < 1 || u > A.rows() - 1) throw std::invalid_argument("row count u must lie in [1, k-1]");
}

RankCode left_mul(const Mat& A, const RankCode& code) {
    check_transform(code, A);
    return map_code(code, code.params(), [&A](const Mat& M) { return A * M; });
}

RankCode puncture(const RankCode& code, const Mat& A, int u) {
    check_transform(code, A);
    check_rows(code, u);
    const int keep = code.k() - u;
    const CodeParams target(code.field(), keep, code.m());
    return map_code(code, target, [&A, keep](const Mat& M) { return bottom_rows(A * M, keep); });
}

RankCode shorten(const RankCode& code, const Mat& A, int u) {
    check_transform(code, A);
    check_rows(code, u);
    if (!code.contains(Vec(code.params().length(), 0))) throw std::invalid_argument("shortening requires 0 in C");
    Mat top(code.field(), u, code.k());
    for (int i = 0; i < u; ++i) top.set(i, i, 1);
    const RankCode section = left_annihilated(left_mul(A, code), top);
    const int keep = code.k() - u;
    const CodeParams target(code.field(), keep, code.m());
    return map_code(section, target, [keep](const Mat& M) { return bottom_rows(M, keep); });
}

}  // namespace rmc
