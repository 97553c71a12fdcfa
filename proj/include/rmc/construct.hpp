#pragma once

#include <optional>
#include <utility>

#include "rmc/codes.hpp"
#include "rmc/random.hpp"

namespace rmc {

/// GF(q^m) as F_q^m in the polynomial basis 1, a, ..., a^{m-1}, where a is a
/// root of the least monic irreducible of degree m over GF(q).
class ExtensionField {
public:
    /// Coordinates in the polynomial basis.
    using Element = Vec;

    ExtensionField(Field base, int degree);

    const Field& base() const { return base_; }
    int degree() const { return degree_; }
    const poly::Poly& modulus() const { return modulus_; }

    Element zero() const { return Element(degree_, 0); }
    Element one() const { return basis(0); }
    /// a^i, 0 <= i < m.
    Element basis(int i) const;

    Element add(const Element& x, const Element& y) const;
    Element mul(const Element& x, const Element& y) const;
    Element scale(Elem c, const Element& x) const;
    Element pow(Element x, std::uint64_t e) const;
    /// x^(q^t)
    Element frobenius(Element x, int t) const;
    Element random(Rng& rng) const;

private:
    Field base_;
    int degree_;
    poly::Poly modulus_;
};

/// f(x) = sum_i f_i x^(q^(step*i)).
struct LinearizedPoly {
    int step = 1;
    std::vector<ExtensionField::Element> coefficients;

    ExtensionField::Element evaluate(const ExtensionField& F, const ExtensionField::Element& x) const;
};

/// k x m matrix whose row j is f(a^j); for x with coordinates v (first k
/// entries), v * M gives the coordinates of f(x).
Mat expansion_matrix(const ExtensionField& F, const LinearizedPoly& f, int k);

/// Linear MRD code of minimum distance d: q-degree below k - d + 1.
RankCode gabidulin(std::uint64_t q, int k, int m, int d);

/// Gabidulin codes of q-degree below lo and below hi, lo < hi <= k. lo = 0
/// yields the zero code.
std::pair<RankCode, RankCode> nested_gabidulin(std::uint64_t q, int k, int m, int lo, int hi);

/// Dimension-t code between consecutive nested Gabidulin codes. Without a
/// seed the first t - m*floor(t/m) extra generators are taken; with one, a
/// random subspace of that dimension.
RankCode dually_qmrd(std::uint64_t q, int k, int m, int t, std::optional<std::uint64_t> seed = std::nullopt);

/// All F_{q^s}-linear maps sum_{i<r} f_i x^(q^(s i)) of GF(q^m), m = rs, as
/// m x m matrices.
RankCode linearized_map_code(std::uint64_t q, int s, int r);

RankCode random_linear_code(const CodeParams& params, int dim, std::uint64_t seed);
RankCode random_code(const CodeParams& params, std::uint64_t size, std::uint64_t seed);

}  // namespace rmc
