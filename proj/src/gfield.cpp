#include "rmc/gfield.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace rmc {

namespace {

std::vector<Elem> to_digits(const detail::FieldTables& t, Elem a) {
    std::vector<Elem> d(t.e, 0);
    for (std::uint32_t i = 0; i < t.e; ++i) {
        d[i] = a % t.p;
        a /= t.p;
    }
    return d;
}

Elem from_digits(const detail::FieldTables& t, const std::vector<Elem>& d) {
    Elem a = 0;
    for (std::uint32_t i = t.e; i-- > 0;) a = a * t.p + d[i];
    return a;
}

// Polynomial product modulo the field modulus, coefficients in GF(p).
Elem slow_mul(const detail::FieldTables& t, Elem a, Elem b) {
    if (t.e == 1) return static_cast<Elem>((std::uint64_t{a} * b) % t.p);
    const auto x = to_digits(t, a);
    const auto y = to_digits(t, b);
    std::vector<std::uint64_t> prod(2 * t.e - 1, 0);
    for (std::uint32_t i = 0; i < t.e; ++i)
        for (std::uint32_t j = 0; j < t.e; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % t.p;
    // x^e = -(c_0 + ... + c_{e-1} x^{e-1})
    for (std::size_t d = prod.size(); d-- > t.e;) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::uint32_t i = 0; i < t.e; ++i) {
            const std::uint64_t sub = (c * t.modulus[i]) % t.p;
            auto& slot = prod[d - t.e + i];
            slot = (slot + t.p - sub) % t.p;
        }
    }
    std::vector<Elem> r(t.e);
    for (std::uint32_t i = 0; i < t.e; ++i) r[i] = static_cast<Elem>(prod[i]);
    return from_digits(t, r);
}

Elem slow_pow(const detail::FieldTables& t, Elem a, std::uint64_t n) {
    Elem result = 1;
    while (n > 0) {
        if (n & 1u) result = slow_mul(t, result, a);
        a = slow_mul(t, a, a);
        n >>= 1u;
    }
    return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::shared_ptr<detail::FieldTables> build_tables(std::uint32_t p, std::uint32_t e, std::vector<Elem> modulus) {
    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->e = e;
    t->q = 1;
    for (std::uint32_t i = 0; i < e; ++i) t->q *= p;
    t->modulus = std::move(modulus);
    const std::uint32_t q = t->q;

    if (q <= 256) {
        t->add.resize(std::size_t{q} * q);
        t->mul.resize(std::size_t{q} * q);
        t->inv.assign(q, 0);
        for (Elem a = 0; a < q; ++a) {
            for (Elem b = 0; b < q; ++b) {
                t->add[a * q + b] = static_cast<std::uint16_t>(detail::digitwise_add(*t, a, b));
                t->mul[a * q + b] = static_cast<std::uint16_t>(slow_mul(*t, a, b));
            }
        }
        for (Elem a = 1; a < q; ++a)
            for (Elem b = 1; b < q; ++b)
                if (t->mul[a * q + b] == 1) t->inv[a] = static_cast<std::uint16_t>(b);
        return t;
    }

    const auto factors = prime_factors(q - 1);
    Elem gen = 0;
    for (Elem g = 2; g < q && gen == 0; ++g) {
        bool primitive = true;
        for (auto r : factors) {
            if (slow_pow(*t, g, (q - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = g;
    }
    t->log.assign(q, 0);
    t->exp.assign(2 * std::size_t{q - 1}, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->exp[i] = x;
        t->exp[i + q - 1] = x;
        t->log[x] = i;
        x = slow_mul(*t, x, gen);
    }
    return t;
}

}  // namespace

namespace detail {

Elem digitwise_add(const FieldTables& t, Elem a, Elem b) {
    if (t.p == 2) return a ^ b;
    Elem r = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < t.e; ++i) {
        r += ((a % t.p + b % t.p) % t.p) * place;
        a /= t.p;
        b /= t.p;
        place *= t.p;
    }
    return r;
}

Elem digitwise_neg(const FieldTables& t, Elem a) {
    Elem r = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < t.e; ++i) {
        const Elem d = a % t.p;
        r += ((t.p - d) % t.p) * place;
        a /= t.p;
        place *= t.p;
    }
    return r;
}

}  // namespace detail

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!t_->inv.empty()) return t_->inv[a];
    return t_->exp[(t_->q - 1 - t_->log[a]) % (t_->q - 1)];
}

Elem Field::pow(Elem a, std::uint64_t n) const {
    Elem result = 1;
    while (n > 0) {
        if (n & 1u) result = mul(result, a);
        a = mul(a, a);
        n >>= 1u;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field make_field(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
    }

    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldTables>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({p, e}); it != cache.end()) return Field(it->second);
    }

    std::vector<Elem> modulus{0, 1};
    if (e > 1) modulus = poly::least_irreducible(make_field(p, 1), static_cast<int>(e));
    auto tables = build_tables(p, e, std::move(modulus));

    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(std::make_pair(p, e), std::move(tables));
    return Field(it->second);
}

Field field_of_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds " + std::to_string(kMaxFieldOrder));
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return make_field(p, e);
}

namespace poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Elem x = i < a.size() ? a[i] : 0;
        const Elem y = i < b.size() ? b[i] : 0;
        r[i] = f.add(x, y);
    }
    trim(r);
    return r;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly mod(const Field& f, Poly a, const Poly& b) {
    const int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial division by zero");
    const Elem lead_inv = f.inv(b[db]);
    for (int da = degree(a); da >= db; da = degree(a)) {
        const Elem c = f.mul(a[da], lead_inv);
        for (int i = 0; i <= db; ++i) a[da - db + i] = f.sub(a[da - db + i], f.mul(c, b[i]));
    }
    trim(a);
    return a;
}

bool is_irreducible(const Field& f, const Poly& a) {
    const int n = degree(a);
    if (n < 1) return false;
    if (n == 1) return true;
    // Trial division by every monic polynomial of degree 1..n/2.
    const std::uint32_t q = f.q();
    for (int d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= q;
        Poly divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t code = 0; code < count; ++code) {
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<Elem>(c % q);
                c /= q;
            }
            if (mod(f, a, divisor).empty()) return false;
        }
    }
    return true;
}

Poly least_irreducible(const Field& f, int n) {
    if (n < 1) throw std::invalid_argument("irreducible degree must be positive");
    const std::uint32_t q = f.q();
    Poly c(n + 1, 0);
    c[n] = 1;
    // Odometer with c_{n-1} fastest and c_0 slowest.
    while (true) {
        if (is_irreducible(f, c)) return c;
        int i = n - 1;
        while (i >= 0) {
            if (++c[i] < q) break;
            c[i] = 0;
            --i;
        }
        if (i < 0) throw std::logic_error("no irreducible polynomial found");
    }
}

}  // namespace poly

}  // namespace rmc
