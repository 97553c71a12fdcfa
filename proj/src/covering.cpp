#include "rmc/covering.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rmc/cosets.hpp"

namespace rmc {

namespace {

int worker_count(const ScanOptions& options, std::uint64_t work) {
    int n = options.threads > 0 ? options.threads : static_cast<int>(std::thread::hardware_concurrency());
    n = std::max(n, 1);
    const std::uint64_t chunks = std::max<std::uint64_t>(work >> 12, 1);
    return static_cast<int>(std::min<std::uint64_t>(n, chunks));
}

template <typename Body>
void run_partitioned(int workers, std::uint64_t total, Body body) {
    if (workers == 1) {
        body(0, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::thread> pool;
    const std::uint64_t step = total / workers;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = step * w;
        const std::uint64_t hi = w + 1 == workers ? total : lo + step;
        pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

// Ambient vector with index `index` in base q, last coordinate fastest.
void decode(std::uint64_t index, std::uint64_t q, std::span<Elem> digits) {
    for (std::size_t t = digits.size(); t-- > 0;) {
        digits[t] = static_cast<Elem>(index % q);
        index /= q;
    }
}

std::uint64_t ambient_count(const CodeParams& p, const SearchGuard& guard) {
    const BigInt n = p.ambient_size();
    guard.check(n, "covering radius scan");
    if (n > BigInt(std::numeric_limits<std::uint64_t>::max() >> 1)) throw GuardError("covering radius scan", n);
    return n.convert_to<std::uint64_t>();
}

// Linear codes: least coset weight per syndrome, then the maximum.
int scan_linear(const RankCode& code, const ScanOptions& options) {
    const auto& p = code.params();
    const auto& f = p.field;
    const std::uint64_t q = f.q();
    const int n = p.length();
    const int r = n - code.dim();
    if (r == 0) return 0;
    const std::uint64_t total = ambient_count(p, options.guard);
    const Subspace h = code.space().perp();
    // Column t of H, i.e. the syndrome of the t-th unit vector.
    std::vector<Elem> cols(static_cast<std::size_t>(n) * r);
    for (int s = 0; s < r; ++s) {
        const auto row = h.basis_row(s);
        for (int t = 0; t < n; ++t) cols[static_cast<std::size_t>(t) * r + s] = row[t];
    }
    std::uint64_t syndromes = 1;
    for (int s = 0; s < r; ++s) syndromes *= q;

    const int workers = worker_count(options, total);
    std::vector<std::vector<std::uint8_t>> best(workers);
    run_partitioned(workers, total, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& local = best[w];
        local.assign(syndromes, 0xff);
        Vec x(n);
        Vec syn(r, 0);
        decode(lo, q, x);
        for (int t = 0; t < n; ++t)
            if (x[t] != 0) flat::axpy(f, x[t], {cols.data() + static_cast<std::size_t>(t) * r, static_cast<std::size_t>(r)}, syn);
        for (std::uint64_t i = lo; i < hi; ++i) {
            std::uint64_t idx = 0;
            for (int s = 0; s < r; ++s) idx = idx * q + syn[s];
            const auto wt = static_cast<std::uint8_t>(rank_weight(p, x));
            if (wt < local[idx]) local[idx] = wt;
            // Odometer step with the matching syndrome update.
            for (int t = n - 1; t >= 0; --t) {
                const Elem old = x[t];
                const Elem nxt = old + 1 == q ? 0 : old + 1;
                x[t] = nxt;
                const std::span<const Elem> col{cols.data() + static_cast<std::size_t>(t) * r, static_cast<std::size_t>(r)};
                flat::axpy(f, f.sub(nxt, old), col, syn);
                if (nxt != 0) break;
            }
        }
    });
    int rho = 0;
    for (std::uint64_t s = 0; s < syndromes; ++s) {
        std::uint8_t v = 0xff;
        for (const auto& local : best) v = std::min(v, local[s]);
        if (v == 0xff) throw std::logic_error("syndrome scan missed a coset");
        rho = std::max<int>(rho, v);
    }
    return options.cap ? std::min(rho, *options.cap) : rho;
}

int scan_set(const RankCode& code, const ScanOptions& options) {
    const auto& p = code.params();
    const auto& f = p.field;
    const std::uint64_t total = ambient_count(p, options.guard);
    const auto& words = code.words();
    const int n = p.length();
    const int cap = options.cap.value_or(p.k);
    std::atomic<int> running{0};
    run_partitioned(worker_count(options, total), total, [&](int, std::uint64_t lo, std::uint64_t hi) {
        Vec x(n);
        Vec diff(n);
        for (std::uint64_t i = lo; i < hi && running.load(std::memory_order_relaxed) < cap; ++i) {
            decode(i, f.q(), x);
            const int floor = running.load(std::memory_order_relaxed);
            int dist = p.k;
            for (const auto& c : words) {
                for (int t = 0; t < n; ++t) diff[t] = f.sub(x[t], c[t]);
                dist = std::min(dist, rank_weight(p, diff));
                if (dist <= floor) break;
            }
            int cur = running.load(std::memory_order_relaxed);
            while (dist > cur && !running.compare_exchange_weak(cur, dist)) {
            }
        }
    });
    return std::min(running.load(), cap);
}

}  // namespace

int distance_to_code(const RankCode& code, const Mat& X, const SearchGuard& guard) {
    const auto& p = code.params();
    if (!(X.field() == p.field) || X.rows() != p.k || X.cols() != p.m) throw std::invalid_argument("distance_to_code: shape mismatch");
    guard.check(code.cardinality(), "distance to code");
    const auto x = X.data();
    Vec diff(p.length());
    int best = p.k;
    CodewordStream s(code);
    while (s.next() && best > 0) {
        const auto c = s.current();
        for (int t = 0; t < p.length(); ++t) diff[t] = p.field.sub(x[t], c[t]);
        best = std::min(best, rank_weight(p, diff));
    }
    return best;
}

int covering_radius_exact(const RankCode& code, const ScanOptions& options) {
    return code.is_linear() ? scan_linear(code, options) : scan_set(code, options);
}

int bound_dual_distance(const RankCode& code, const SearchGuard& guard) {
    if (!code.is_linear()) throw std::invalid_argument("dual-distance bound needs a linear code");
    if (code.dim() == code.params().length()) throw std::invalid_argument("dual-distance bound undefined for the full space");
    return code.k() - min_distance(dual(code), guard) + 1;
}

int external_distance(const RankCode& code, const SearchGuard& guard) {
    const auto b = transform_of(code, guard);
    int count = 0;
    for (Eigen::Index i = 1; i < b.size(); ++i)
        if (b(i) > 0) ++count;
    return count;
}

InitialSet initial_set(const RankCode& code) {
    if (!code.is_linear()) throw std::invalid_argument("initial set needs a linear code");
    if (code.dim() == 0) throw std::invalid_argument("initial set of the zero code");
    InitialSet in{code.k(), code.m(), {}};
    for (int piv : code.space().pivots()) in.entries.emplace(piv / code.m() + 1, piv % code.m() + 1);
    return in;
}

int min_line_cover(const LinePattern& pattern) {
    std::vector<std::vector<int>> adj(pattern.a);
    for (const auto& [i, j] : pattern.S) {
        if (i < 1 || i > pattern.a || j < 1 || j > pattern.b) throw std::invalid_argument("cell outside the grid");
        adj[i - 1].push_back(j - 1);
    }
    std::vector<int> match(pattern.b, -1);
    std::vector<char> seen;
    auto augment = [&](auto&& self, int row) -> bool {
        for (int col : adj[row]) {
            if (seen[col]) continue;
            seen[col] = 1;
            if (match[col] < 0 || self(self, match[col])) {
                match[col] = row;
                return true;
            }
        }
        return false;
    };
    int size = 0;
    for (int row = 0; row < pattern.a; ++row) {
        seen.assign(pattern.b, 0);
        if (augment(augment, row)) ++size;
    }
    return size;
}

LinePattern initial_set_complement(const RankCode& code, const SearchGuard& guard) {
    const auto in = initial_set(code);
    const int d = min_distance(code, guard);
    LinePattern s{code.k() - d + 1, code.m(), {}};
    for (int i = 1; i <= s.a; ++i)
        for (int j = 1; j <= s.b; ++j)
            if (!in.entries.contains({i, j})) s.S.emplace(i, j);
    return s;
}

int bound_initial_set(const RankCode& code, const SearchGuard& guard) {
    return min_distance(code, guard) - 1 + min_line_cover(initial_set_complement(code, guard));
}

bool is_maximal(const RankCode& code, const ScanOptions& options) {
    if (code.cardinality() == 1) return true;
    const int d = min_distance(code, options.guard);
    ScanOptions o = options;
    o.cap = d;
    return covering_radius_exact(code, o) <= d - 1;
}

int maximality_degree(const RankCode& code, const ScanOptions& options) {
    if (code.cardinality() < 2) throw std::domain_error("maximality degree needs at least two codewords");
    const int d = min_distance(code, options.guard);
    if (code.cardinality() == code.params().ambient_size()) return 1;
    ScanOptions o = options;
    o.cap = d;
    return d - covering_radius_exact(code, o);
}

int BoundsReport::best_upper() const {
    int best = bound_external;
    for (const auto& b : {bound_dual_distance, bound_initial_set, bound_mrd, bound_qmrd})
        if (b) best = std::min(best, *b);
    return best;
}

BoundsReport bounds_report(const RankCode& code, const ScanOptions& options) {
    const auto& guard = options.guard;
    BoundsReport r;
    const BigInt size = code.cardinality();
    const bool full = size == code.params().ambient_size();
    if (size >= 2) r.min_distance = min_distance(code, guard);
    if (code.is_linear()) {
        const RankCode perp = dual(code);
        if (perp.cardinality() >= 2) r.dual_distance = min_distance(perp, guard);
        if (!full) r.bound_dual_distance = code.k() - *r.dual_distance + 1;
        if (code.dim() > 0) r.bound_initial_set = bound_initial_set(code, guard);
        if (code.dim() > 0 && is_dually_qmrd(code, guard)) r.bound_qmrd = *r.min_distance;
    }
    r.bound_external = external_distance(code, guard);
    if (size >= 2 && is_mrd(code, guard)) r.bound_mrd = *r.min_distance - 1;
    if (size >= 2 && !full) r.lower_packing = (*r.min_distance + 1) / 2;

    const bool scannable = guard.force || code.params().ambient_size() <= guard.limit;
    if (scannable) {
        ScanOptions o = options;
        o.cap = r.best_upper();
        r.rho_exact = covering_radius_exact(code, o);
        if (size == 1) {
            r.maximal = true;
        } else {
            r.maximal = *r.rho_exact <= *r.min_distance - 1;
            r.maximality_degree = full ? 1 : *r.min_distance - std::min(*r.rho_exact, *r.min_distance);
        }
    }
    return r;
}

}  // namespace rmc
