#pragma once

#include <set>
#include <string>
#include <vector>

#include "rmc/codes.hpp"

namespace testing {

using namespace rmc;

// Matrix from rows of digit characters.
inline Mat bits(const Field& f, std::initializer_list<const char*> rows) {
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

// Every vector of F_q^n, last entry fastest.
inline std::vector<Vec> all_vectors(const Field& f, int n) {
    std::vector<Vec> out;
    Vec v(n, 0);
    while (true) {
        out.push_back(v);
        int t = n - 1;
        while (t >= 0 && v[t] == f.q() - 1) v[t--] = 0;
        if (t < 0) break;
        ++v[t];
    }
    return out;
}

inline std::vector<Mat> all_matrices(const Field& f, int k, int m) {
    std::vector<Mat> out;
    for (const auto& v : all_vectors(f, k * m)) out.push_back(devectorize(f, v, k, m));
    return out;
}

// Span of the rows by enumerating all coefficient combinations.
inline std::set<Vec> brute_span(const Field& f, const std::vector<Vec>& rows, int n) {
    std::set<Vec> out;
    for (const auto& c : all_vectors(f, static_cast<int>(rows.size()))) {
        Vec v(n, 0);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int t = 0; t < n; ++t) v[t] = f.add(v[t], f.mul(c[i], rows[i][t]));
        out.insert(v);
    }
    if (rows.empty()) out.insert(Vec(n, 0));
    return out;
}

// Rank as log_q of the row-span size.
inline int brute_rank(const Mat& M) {
    std::vector<Vec> rows;
    for (int i = 0; i < M.rows(); ++i) {
        Vec r(M.cols());
        for (int j = 0; j < M.cols(); ++j) r[j] = M(i, j);
        rows.push_back(r);
    }
    std::size_t size = brute_span(M.field(), rows, M.cols()).size();
    int r = 0;
    while (size > 1) {
        size /= M.field().q();
        ++r;
    }
    return r;
}

inline std::vector<Mat> words_of(const RankCode& c) { return c.codewords(); }

inline int brute_min_distance(const RankCode& c) {
    const auto w = words_of(c);
    int best = c.k() + 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) best = std::min(best, brute_rank(w[i] - w[j]));
    return best;
}

inline int brute_covering_radius(const RankCode& c) {
    const auto w = words_of(c);
    int rho = 0;
    for (const auto& X : all_matrices(c.field(), c.k(), c.m())) {
        int best = c.k();
        for (const auto& M : w) best = std::min(best, brute_rank(X - M));
        rho = std::max(rho, best);
    }
    return rho;
}

inline RankCode example_code() {
    const Field f = make_field(2);
    std::vector<Mat> g{bits(f, {"100", "001", "000"}), bits(f, {"010", "000", "100"}), bits(f, {"000", "100", "010"}),
                       bits(f, {"000", "011", "100"})};
    return RankCode::from_generators(CodeParams(f, 3, 3), g);
}

}  // namespace testing
