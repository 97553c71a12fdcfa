#include "rmc/construct.hpp"

#include <set>

namespace rmc {

ExtensionField::ExtensionField(Field base, int degree) : base_(std::move(base)), degree_(degree) {
    if (!base_.valid()) throw std::invalid_argument("extension needs a base field");
    if (degree < 1) throw std::invalid_argument("extension degree must be positive");
    modulus_ = poly::least_irreducible(base_, degree);
}

ExtensionField::Element ExtensionField::basis(int i) const {
    if (i < 0 || i >= degree_) throw std::out_of_range("basis index outside [0, m)");
    Element e = zero();
    e[i] = 1;
    return e;
}

ExtensionField::Element ExtensionField::add(const Element& x, const Element& y) const {
    Element r(degree_);
    for (int i = 0; i < degree_; ++i) r[i] = base_.add(x[i], y[i]);
    return r;
}

ExtensionField::Element ExtensionField::mul(const Element& x, const Element& y) const {
    auto r = poly::mod(base_, poly::mul(base_, x, y), modulus_);
    r.resize(degree_, 0);
    return r;
}

ExtensionField::Element ExtensionField::scale(Elem c, const Element& x) const {
    Element r(degree_);
    for (int i = 0; i < degree_; ++i) r[i] = base_.mul(c, x[i]);
    return r;
}

ExtensionField::Element ExtensionField::pow(Element x, std::uint64_t e) const {
    Element r = one();
    while (e > 0) {
        if (e & 1u) r = mul(r, x);
        x = mul(x, x);
        e >>= 1u;
    }
    return r;
}

ExtensionField::Element ExtensionField::frobenius(Element x, int t) const {
    for (int i = 0; i < t; ++i) x = pow(std::move(x), base_.q());
    return x;
}

ExtensionField::Element ExtensionField::random(Rng& rng) const {
    Element r(degree_);
    for (auto& v : r) v = static_cast<Elem>(rng.below(base_.q()));
    return r;
}

ExtensionField::Element LinearizedPoly::evaluate(const ExtensionField& F, const ExtensionField::Element& x) const {
    auto r = F.zero();
    auto power = x;  // x^(q^(step*i))
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i > 0) power = F.frobenius(power, step);
        r = F.add(r, F.mul(coefficients[i], power));
    }
    return r;
}

Mat expansion_matrix(const ExtensionField& F, const LinearizedPoly& f, int k) {
    const int m = F.degree();
    if (k < 1 || k > m) throw std::invalid_argument("expansion needs 1 <= k <= m");
    Mat out(F.base(), k, m);
    for (int j = 0; j < k; ++j) {
        const auto v = f.evaluate(F, F.basis(j));
        for (int c = 0; c < m; ++c) out.set(j, c, v[c]);
    }
    return out;
}

namespace {

// beta_l x^(q^i) expanded at the first k basis points.
Mat monomial_generator(const ExtensionField& F, int k, int l, int i) {
    LinearizedPoly f;
    f.coefficients.assign(i + 1, F.zero());
    f.coefficients[i] = F.basis(l);
    return expansion_matrix(F, f, k);
}

CodeParams params_for(std::uint64_t q, int k, int m) {
    if (k < 1 || k > m) throw std::invalid_argument("construction needs 1 <= k <= m");
    return CodeParams(field_of_order(q), k, m);
}

// Generators of q-degree below K, in (degree, basis index) order.
std::vector<Mat> gabidulin_generators(const ExtensionField& F, int k, int K) {
    std::vector<Mat> gens;
    for (int i = 0; i < K; ++i)
        for (int l = 0; l < F.degree(); ++l) gens.push_back(monomial_generator(F, k, l, i));
    return gens;
}

}  // namespace

RankCode gabidulin(std::uint64_t q, int k, int m, int d) {
    const auto params = params_for(q, k, m);
    if (d < 1 || d > k) throw std::invalid_argument("gabidulin needs 1 <= d <= k");
    const ExtensionField F(params.field, m);
    return RankCode::from_generators(params, gabidulin_generators(F, k, k - d + 1));
}

std::pair<RankCode, RankCode> nested_gabidulin(std::uint64_t q, int k, int m, int lo, int hi) {
    const auto params = params_for(q, k, m);
    if (lo < 0 || lo >= hi || hi > k) throw std::invalid_argument("nested_gabidulin needs 0 <= lo < hi <= k");
    const ExtensionField F(params.field, m);
    const auto gens = gabidulin_generators(F, k, hi);
    const std::span<const Mat> all(gens);
    return {RankCode::from_generators(params, all.first(static_cast<std::size_t>(lo) * m)),
            RankCode::from_generators(params, all)};
}

RankCode dually_qmrd(std::uint64_t q, int k, int m, int t, std::optional<std::uint64_t> seed) {
    const auto params = params_for(q, k, m);
    if (t < 1 || t >= k * m) throw std::invalid_argument("dually_qmrd needs 1 <= t <= km - 1");
    if (t % m == 0) throw std::invalid_argument("dually_qmrd needs m not dividing t");
    const ExtensionField F(params.field, m);
    const int a = t / m;
    const int extra = t - a * m;
    auto gens = gabidulin_generators(F, k, a);
    std::vector<Mat> next;
    for (int l = 0; l < m; ++l) next.push_back(monomial_generator(F, k, l, a));
    if (!seed) {
        gens.insert(gens.end(), next.begin(), next.begin() + extra);
    } else {
        Rng rng(*seed);
        Mat coeffs = random_matrix(params.field, extra, m, rng);
        while (rank(coeffs) < extra) coeffs = random_matrix(params.field, extra, m, rng);
        for (int r = 0; r < extra; ++r) {
            Mat g(params.field, k, m);
            for (int l = 0; l < m; ++l) g = g + scale(coeffs(r, l), next[l]);
            gens.push_back(std::move(g));
        }
    }
    return RankCode::from_generators(params, gens);
}

RankCode linearized_map_code(std::uint64_t q, int s, int r) {
    if (s < 1 || r < 1) throw std::invalid_argument("linearized_map_code needs r, s >= 1");
    const int m = r * s;
    if (m > 16) throw std::invalid_argument("linearized_map_code: m = rs exceeds 16");
    const auto params = params_for(q, m, m);
    const ExtensionField F(params.field, m);
    std::vector<Mat> gens;
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < m; ++l) {
            LinearizedPoly f;
            f.step = s;
            f.coefficients.assign(i + 1, F.zero());
            f.coefficients[i] = F.basis(l);
            gens.push_back(expansion_matrix(F, f, m));
        }
    return RankCode::from_generators(params, gens);
}

RankCode random_linear_code(const CodeParams& params, int dim, std::uint64_t seed) {
    const int n = params.length();
    if (dim < 0 || dim > n) throw std::invalid_argument("random_linear_code needs 0 <= dim <= km");
    Rng rng(seed);
    std::vector<Elem> rows;
    int have = 0;
    while (have < dim) {
        std::vector<Elem> trial = rows;
        for (int t = 0; t < n; ++t) trial.push_back(static_cast<Elem>(rng.below(params.field.q())));
        if (flat::rank(params.field, trial, have + 1, n) == have + 1) {
            rows = std::move(trial);
            ++have;
        }
    }
    return RankCode::from_vectors(params, rows);
}

RankCode random_code(const CodeParams& params, std::uint64_t size, std::uint64_t seed) {
    if (size < 1 || BigInt(size) > params.ambient_size()) throw std::invalid_argument("random_code needs 1 <= size <= q^(km)");
    SearchGuard{}.check(BigInt(size), "random code");
    Rng rng(seed);
    std::set<Vec> words;
    while (words.size() < size) {
        Vec w(params.length());
        for (auto& v : w) v = static_cast<Elem>(rng.below(params.field.q()));
        words.insert(std::move(w));
    }
    return RankCode::from_set_vectors(params, {words.begin(), words.end()});
}

}  // namespace rmc
