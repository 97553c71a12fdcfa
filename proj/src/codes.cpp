#include "rmc/codes.hpp"

#include <algorithm>

namespace rmc {

CodeParams::CodeParams(Field f, int k_, int m_) : field(std::move(f)), k(k_), m(m_) {
    if (!field.valid()) throw std::invalid_argument("code parameters need a field");
    if (k < 1 || m < 1) throw std::invalid_argument("code dimensions must be positive");
    if (k > m) throw std::invalid_argument("code parameters require k <= m");
}

// ------------------------------------------------------------ construction

RankCode RankCode::from_subspace(const CodeParams& params, Subspace space) {
    if (space.ambient() != params.length() || !(space.field() == params.field))
        throw std::invalid_argument("subspace does not live in F_q^{k*m}");
    RankCode c;
    c.params_ = params;
    c.kind_ = CodeKind::linear;
    c.space_ = std::move(space);
    return c;
}

RankCode RankCode::from_vectors(const CodeParams& params, std::span<const Elem> vectors) {
    for (Elem v : vectors)
        if (!params.field.contains(v)) throw std::invalid_argument("generator entry outside the field");
    return from_subspace(params, Subspace::span(params.field, params.length(), vectors));
}

RankCode RankCode::from_generators(const CodeParams& params, std::span<const Mat> generators) {
    std::vector<Elem> flat;
    flat.reserve(generators.size() * params.length());
    for (const auto& g : generators) {
        if (!(g.field() == params.field) || g.rows() != params.k || g.cols() != params.m)
            throw std::invalid_argument("generator shape or field mismatch");
        const auto d = g.data();
        flat.insert(flat.end(), d.begin(), d.end());
    }
    return from_vectors(params, flat);
}

RankCode RankCode::from_set_vectors(const CodeParams& params, std::vector<Vec> words) {
    if (words.empty()) throw std::invalid_argument("a code must be non-empty");
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != params.length()) throw std::invalid_argument("codeword length mismatch");
        for (Elem v : w)
            if (!params.field.contains(v)) throw std::invalid_argument("codeword entry outside the field");
    }
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    RankCode c;
    c.params_ = params;
    c.kind_ = CodeKind::set;
    c.words_ = std::move(words);
    return c;
}

RankCode RankCode::from_set(const CodeParams& params, std::span<const Mat> words) {
    std::vector<Vec> vs;
    vs.reserve(words.size());
    for (const auto& w : words) {
        if (!(w.field() == params.field) || w.rows() != params.k || w.cols() != params.m)
            throw std::invalid_argument("codeword shape or field mismatch");
        vs.push_back(vectorize(w));
    }
    return from_set_vectors(params, std::move(vs));
}

RankCode RankCode::zero(const CodeParams& params) {
    return from_subspace(params, Subspace(params.field, params.length()));
}

RankCode RankCode::full_space(const CodeParams& params) {
    return from_subspace(params, Subspace::full(params.field, params.length()));
}

// --------------------------------------------------------------- accessors

int RankCode::dim() const {
    if (!is_linear()) throw std::invalid_argument("dimension of a non-linear code");
    return space_.dim();
}

BigInt RankCode::cardinality() const {
    if (is_linear()) return ipow(field().q(), space_.dim());
    return BigInt(words_.size());
}

const Subspace& RankCode::space() const {
    if (!is_linear()) throw std::invalid_argument("canonical basis of a non-linear code");
    return space_;
}

std::vector<Mat> RankCode::basis() const {
    std::vector<Mat> out;
    for (int i = 0; i < space().dim(); ++i) out.push_back(devectorize(field(), space_.basis_row(i), k(), m()));
    return out;
}

const std::vector<Vec>& RankCode::words() const {
    if (is_linear()) throw std::invalid_argument("explicit word list of a linear code");
    return words_;
}

bool RankCode::contains(std::span<const Elem> v) const {
    if (static_cast<int>(v.size()) != params_.length()) throw std::invalid_argument("contains: length mismatch");
    if (is_linear()) return space_.contains(v);
    return std::binary_search(words_.begin(), words_.end(), v,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
}

bool RankCode::contains(const Mat& a) const { return contains(a.data()); }

std::vector<Vec> RankCode::codeword_vectors(const SearchGuard& guard) const {
    guard.check(cardinality(), "codeword enumeration");
    std::vector<Vec> out;
    CodewordStream s(*this);
    while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
    return out;
}

std::vector<Mat> RankCode::codewords(const SearchGuard& guard) const {
    std::vector<Mat> out;
    for (const auto& v : codeword_vectors(guard)) out.push_back(devectorize(field(), v, k(), m()));
    return out;
}

bool operator==(const RankCode& a, const RankCode& b) {
    if (!(a.params_ == b.params_) || a.kind_ != b.kind_) return false;
    if (a.is_linear()) return a.space_ == b.space_;
    return a.words_ == b.words_;
}

// ---------------------------------------------------------------- stream

CodewordStream::CodewordStream(const RankCode& code) : code_(&code) {
    current_.assign(code.params().length(), 0);
    if (code.is_linear()) digits_.assign(code.space().dim(), 0);
}

bool CodewordStream::next() {
    if (!code_->is_linear()) {
        const auto& w = code_->words();
        if (started_) ++index_;
        started_ = true;
        if (index_ >= w.size()) return false;
        current_ = w[index_];
        return true;
    }
    if (!started_) {
        started_ = true;
        return true;
    }
    const Field& f = code_->field();
    const Subspace& s = code_->space();
    for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
        const Elem old = digits_[i];
        const Elem now = old + 1 < f.q() ? old + 1 : 0;
        digits_[i] = now;
        flat::axpy(f, f.sub(now, old), s.basis_row(i), current_);
        if (now != 0) return true;
    }
    return false;
}

// ------------------------------------------------------------- invariants

int min_distance(const RankCode& code, const SearchGuard& guard) {
    const BigInt size = code.cardinality();
    if (size < 2) throw std::domain_error("minimum distance of a code with fewer than two codewords");
    {
        std::lock_guard lock(code.cache_->mutex);
        if (code.cache_->min_distance) return *code.cache_->min_distance;
    }
    const auto& p = code.params();
    int best = p.k;
    if (code.is_linear()) {
        guard.check(size, "minimum distance");
        CodewordStream s(code);
        s.next();  // zero
        while (best > 1 && s.next()) best = std::min(best, rank_weight(p, s.current()));
    } else {
        guard.check(size * size, "minimum distance");
        const auto& w = code.words();
        Vec diff(p.length());
        for (std::size_t i = 0; i < w.size() && best > 1; ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                for (int t = 0; t < p.length(); ++t) diff[t] = p.field.sub(w[i][t], w[j][t]);
                best = std::min(best, rank_weight(p, diff));
                if (best == 1) break;
            }
    }
    std::lock_guard lock(code.cache_->mutex);
    code.cache_->min_distance = best;
    return best;
}

WeightDistribution weight_distribution(const RankCode& code, const SearchGuard& guard) {
    const auto& p = code.params();
    guard.check(code.cardinality(), "weight distribution");
    std::vector<std::uint64_t> counts(p.k + 1, 0);
    CodewordStream s(code);
    while (s.next()) ++counts[rank_weight(p, s.current())];
    WeightDistribution w(p.k + 1);
    for (int i = 0; i <= p.k; ++i) w(i) = BigInt(counts[i]);
    return w;
}

DistanceDistribution distance_distribution(const RankCode& code, const SearchGuard& guard) {
    const auto& p = code.params();
    if (code.is_linear()) return weight_distribution(code, guard).cast<BigRat>();
    const BigInt size = code.cardinality();
    guard.check(size * size, "distance distribution");
    const auto& w = code.words();
    std::vector<std::uint64_t> counts(p.k + 1, 0);
    counts[0] = w.size();
    Vec diff(p.length());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            for (int t = 0; t < p.length(); ++t) diff[t] = p.field.sub(w[i][t], w[j][t]);
            counts[rank_weight(p, diff)] += 2;
        }
    DistanceDistribution b(p.k + 1);
    for (int i = 0; i <= p.k; ++i) b(i) = BigRat(BigInt(counts[i]), size);
    return b;
}

RankCode dual(const RankCode& code) {
    if (!code.is_linear()) throw std::invalid_argument("dual of a non-linear code");
    return RankCode::from_subspace(code.params(), code.space().perp());
}

RankCode left_annihilated(const RankCode& code, const Mat& H) {
    const auto& p = code.params();
    if (!(H.field() == p.field) || H.cols() != p.k) throw std::invalid_argument("annihilator shape mismatch");
    const int r = H.rows();
    auto annihilates = [&](std::span<const Elem> v) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < p.m; ++j) {
                Elem s = 0;
                for (int l = 0; l < p.k; ++l) s = p.field.add(s, p.field.mul(H(i, l), v[l * p.m + j]));
                if (s != 0) return false;
            }
        return true;
    };

    if (!code.is_linear()) {
        std::vector<Vec> kept;
        for (const auto& w : code.words())
            if (annihilates(w)) kept.push_back(w);
        if (kept.empty()) throw std::domain_error("no codeword satisfies the constraint");
        return RankCode::from_set_vectors(p, std::move(kept));
    }

    // Coefficient vectors c with sum_i c_i H B_i = 0.
    const Subspace& s = code.space();
    const int t = s.dim();
    if (t == 0) return code;
    const int cols = r * p.m;
    std::vector<Elem> G(static_cast<std::size_t>(cols) * t, 0);  // (H B_i) as column i
    for (int i = 0; i < t; ++i) {
        const auto b = s.basis_row(i);
        for (int a = 0; a < r; ++a)
            for (int j = 0; j < p.m; ++j) {
                Elem v = 0;
                for (int l = 0; l < p.k; ++l) v = p.field.add(v, p.field.mul(H(a, l), b[l * p.m + j]));
                G[(a * p.m + j) * t + i] = v;
            }
    }
    const auto coeffs = flat::null_space(p.field, G, cols, t);
    const int n = static_cast<int>(coeffs.size()) / t;
    std::vector<Elem> gens(static_cast<std::size_t>(n) * p.length(), 0);
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < t; ++i)
            flat::axpy(p.field, coeffs[g * t + i], s.basis_row(i),
                       std::span<Elem>(gens).subspan(static_cast<std::size_t>(g) * p.length(), p.length()));
    return RankCode::from_vectors(p, gens);
}

RankCode restrict(const RankCode& code, const Subspace& U) {
    if (U.ambient() != code.k() || !(U.field() == code.field()))
        throw std::invalid_argument("restrict: subspace must live in F_q^k");
    if (U.dim() == code.k()) return code;
    const Subspace perp = U.perp();
    ElemMatrix h(perp.dim(), code.k());
    std::copy(perp.basis().data(), perp.basis().data() + perp.basis().size(), h.data());
    return left_annihilated(code, Mat(code.field(), std::move(h)));
}

bool is_mrd(const RankCode& code, const SearchGuard& guard) {
    const BigInt size = code.cardinality();
    if (size == 1) return true;
    const int d = min_distance(code, guard);
    const auto& p = code.params();
    return size == ipow(p.field.q(), static_cast<std::uint64_t>(p.m) * (p.k - d + 1));
}

bool is_dually_qmrd(const RankCode& code, const SearchGuard& guard) {
    if (!code.is_linear()) throw std::invalid_argument("dually QMRD is defined for linear codes");
    const auto& p = code.params();
    const int t = code.dim();
    if (t % p.m == 0) return false;
    auto meets = [&](const RankCode& c, int dim) {
        const int ceil = (dim + p.m - 1) / p.m;
        return min_distance(c, guard) == p.k - ceil + 1;
    };
    return meets(code, t) && meets(dual(code), p.length() - t);
}

bool same_codewords(const RankCode& a, const RankCode& b, const SearchGuard& guard) {
    if (!(a.params() == b.params())) return false;
    if (a.is_linear() && b.is_linear()) return a.space() == b.space();
    if (a.cardinality() != b.cardinality()) return false;
    auto x = a.codeword_vectors(guard);
    auto y = b.codeword_vectors(guard);
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

}  // namespace rmc
