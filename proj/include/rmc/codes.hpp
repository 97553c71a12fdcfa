#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmc/gfield.hpp"
#include "rmc/matlin.hpp"
#include "rmc/qcomb.hpp"

namespace rmc {

/// Ambient space F_q^{k x m}, k <= m.
struct CodeParams {
    Field field;
    int k = 0;
    int m = 0;

    CodeParams() = default;
    CodeParams(Field f, int k_, int m_);

    int length() const { return k * m; }
    BigInt ambient_size() const { return ipow(field.q(), static_cast<std::uint64_t>(k) * m); }

    friend bool operator==(const CodeParams& a, const CodeParams& b) {
        return a.field == b.field && a.k == b.k && a.m == b.m;
    }
};

/// Raised when an exhaustive enumeration would exceed its work limit.
class GuardError : public std::runtime_error {
public:
    GuardError(const std::string& what, BigInt work)
        : std::runtime_error(what + ": " + work.str() + " items exceeds the search guard"), work_(std::move(work)) {}
    const BigInt& work() const { return work_; }

private:
    BigInt work_;
};

/// Work limit for exhaustive enumerations. `force` lifts the limit.
struct SearchGuard {
    BigInt limit = BigInt(1) << 24;
    bool force = false;

    void check(const BigInt& work, const std::string& what) const {
        if (!force && work > limit) throw GuardError(what, work);
    }
};

enum class CodeKind { linear, set };

/// A rank-metric code C in F_q^{k x m}: either an F_q-subspace kept in
/// canonical form (reduced echelon basis of the vectorized generators) or
/// an explicit sorted, duplicate-free list of matrices.
class RankCode {
public:
    RankCode() = default;

    static RankCode from_generators(const CodeParams& params, std::span<const Mat> generators);
    /// Generators given by their vectorizations, concatenated.
    static RankCode from_vectors(const CodeParams& params, std::span<const Elem> vectors);
    static RankCode from_subspace(const CodeParams& params, Subspace space);
    /// Explicit code; duplicates collapse. Throws on an empty list.
    static RankCode from_set(const CodeParams& params, std::span<const Mat> words);
    static RankCode from_set_vectors(const CodeParams& params, std::vector<Vec> words);
    static RankCode zero(const CodeParams& params);
    static RankCode full_space(const CodeParams& params);

    const CodeParams& params() const { return params_; }
    const Field& field() const { return params_.field; }
    int k() const { return params_.k; }
    int m() const { return params_.m; }
    CodeKind kind() const { return kind_; }
    bool is_linear() const { return kind_ == CodeKind::linear; }

    /// F_q-dimension; linear codes only.
    int dim() const;
    BigInt cardinality() const;

    /// Canonical basis (linear only).
    const Subspace& space() const;
    std::vector<Mat> basis() const;
    /// Explicit codeword vectorizations in lexicographic order (set only).
    const std::vector<Vec>& words() const;

    bool contains(std::span<const Elem> v) const;
    bool contains(const Mat& a) const;

    /// Every codeword as a matrix (guarded by cardinality).
    std::vector<Mat> codewords(const SearchGuard& guard = {}) const;
    /// Every codeword vectorization (guarded by cardinality).
    std::vector<Vec> codeword_vectors(const SearchGuard& guard = {}) const;

    /// Same params, kind and canonical representation.
    friend bool operator==(const RankCode& a, const RankCode& b);

private:
    struct Cache {
        std::mutex mutex;
        std::optional<int> min_distance;
    };
    friend int min_distance(const RankCode& code, const SearchGuard& guard);

    CodeParams params_;
    CodeKind kind_ = CodeKind::set;
    Subspace space_;
    std::vector<Vec> words_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Streams codeword vectorizations. Linear codes are walked as a base-q
/// counter over the canonical basis coefficients.
class CodewordStream {
public:
    explicit CodewordStream(const RankCode& code);
    /// Advance to the next codeword; false once exhausted.
    bool next();
    std::span<const Elem> current() const { return current_; }

private:
    const RankCode* code_;
    Vec current_;
    std::vector<Elem> digits_;
    std::size_t index_ = 0;
    bool started_ = false;
};

/// Rank weight of a vectorized k x m matrix.
inline int rank_weight(const CodeParams& p, std::span<const Elem> v) { return flat::rank(p.field, v, p.k, p.m); }

/// d(C); requires |C| >= 2. Cached per code.
int min_distance(const RankCode& code, const SearchGuard& guard = {});

WeightDistribution weight_distribution(const RankCode& code, const SearchGuard& guard = {});
DistanceDistribution distance_distribution(const RankCode& code, const SearchGuard& guard = {});

/// Trace dual; linear codes only.
RankCode dual(const RankCode& code);

/// C(U): codewords whose column space lies in U.
RankCode restrict(const RankCode& code, const Subspace& U);

/// {M in C : H M = 0} for an r x k matrix H.
RankCode left_annihilated(const RankCode& code, const Mat& H);

bool is_mrd(const RankCode& code, const SearchGuard& guard = {});
/// Linear C with m not dividing dim(C) whose code and dual both meet
/// d = k - ceil(dim/m) + 1.
bool is_dually_qmrd(const RankCode& code, const SearchGuard& guard = {});

/// Set-theoretic codeword equality irrespective of representation.
bool same_codewords(const RankCode& a, const RankCode& b, const SearchGuard& guard = {});

}  // namespace rmc
