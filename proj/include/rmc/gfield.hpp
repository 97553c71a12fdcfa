#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace rmc {

/// Integer code of a field element: the base-p digits are the coefficients
/// of the element in the polynomial basis 1, x, ..., x^(e-1).
using Elem = std::uint32_t;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

struct FieldTables {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<Elem> modulus;
    // q <= 256: dense q*q tables.
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> inv;
    // q > 256: log/antilog over a primitive element, exp has 2(q-1) entries.
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
};

Elem digitwise_add(const FieldTables& t, Elem a, Elem b);
Elem digitwise_neg(const FieldTables& t, Elem a);

}  // namespace detail

/// Finite field GF(p^e) in the polynomial basis over the lexicographically
/// least monic irreducible of degree e (coefficients compared from the
/// constant term upward). Cheap to copy; all copies share one immutable
/// table set. Two fields compare equal iff (p, e) agree.
class Field {
public:
    Field() = default;

    std::uint32_t p() const { return t_->p; }
    std::uint32_t e() const { return t_->e; }
    std::uint32_t q() const { return t_->q; }

    /// Monic modulus, e+1 coefficients from the constant term upward.
    std::span<const Elem> modulus() const { return t_->modulus; }

    Elem add(Elem a, Elem b) const {
        if (!t_->add.empty()) return t_->add[a * t_->q + b];
        if (t_->p == 2) return a ^ b;
        return detail::digitwise_add(*t_, a, b);
    }
    Elem neg(Elem a) const {
        if (t_->p == 2) return a;
        if (t_->e == 1) return a == 0 ? 0 : t_->p - a;
        return detail::digitwise_neg(*t_, a);
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (!t_->mul.empty()) return t_->mul[a * t_->q + b];
        if (a == 0 || b == 0) return 0;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    /// Throws std::domain_error on a == 0.
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t n) const;

    bool valid() const { return t_ != nullptr; }
    bool contains(Elem a) const { return a < q(); }

    friend bool operator==(const Field& a, const Field& b) {
        if (a.t_ == b.t_) return true;
        if (!a.t_ || !b.t_) return false;
        return a.p() == b.p() && a.e() == b.e();
    }

private:
    explicit Field(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
    friend Field make_field(std::uint32_t p, std::uint32_t e);

    std::shared_ptr<const detail::FieldTables> t_;
};

/// GF(p^e). Throws std::invalid_argument for a non-prime p, e < 1, or
/// p^e > kMaxFieldOrder. Repeated calls return fields sharing one table set.
Field make_field(std::uint32_t p, std::uint32_t e = 1);

/// GF(q) for a prime power q.
Field field_of_order(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// Polynomials over a field, coefficients from the constant term upward.
/// The empty vector is the zero polynomial; results are trimmed.
namespace poly {

using Poly = std::vector<Elem>;

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Remainder of a modulo a nonzero b.
Poly mod(const Field& f, Poly a, const Poly& b);
bool is_irreducible(const Field& f, const Poly& a);
/// Least monic irreducible of the given degree, comparing the coefficient
/// tuples (c_0, c_1, ..., c_{n-1}) lexicographically.
Poly least_irreducible(const Field& f, int degree);

}  // namespace poly

}  // namespace rmc
