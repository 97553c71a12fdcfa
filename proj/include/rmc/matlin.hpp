#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "rmc/gfield.hpp"
#include "rmc/random.hpp"

namespace rmc {

using Vec = std::vector<Elem>;
using ElemMatrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Dense k x m matrix over a finite field. Entries are field-element codes
/// stored row-major, so data() is also the row-major vectorization.
class Mat {
public:
    Mat() = default;
    /// Zero matrix.
    Mat(Field field, int rows, int cols);
    /// Throws std::invalid_argument if an entry is outside [0, q).
    Mat(Field field, ElemMatrix entries);

    static Mat identity(const Field& field, int n);
    static Mat from_rows(const Field& field, std::initializer_list<std::initializer_list<Elem>> rows);

    const Field& field() const { return field_; }
    int rows() const { return static_cast<int>(entries_.rows()); }
    int cols() const { return static_cast<int>(entries_.cols()); }

    Elem operator()(int i, int j) const { return entries_(i, j); }
    void set(int i, int j, Elem value);

    const ElemMatrix& entries() const { return entries_; }
    std::span<const Elem> data() const { return {entries_.data(), static_cast<std::size_t>(entries_.size())}; }

    bool is_zero() const;

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.field_ == b.field_ && a.rows() == b.rows() && a.cols() == b.cols() && a.entries_ == b.entries_;
    }

private:
    Field field_;
    ElemMatrix entries_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
/// Matrix product over the field.
Mat operator*(const Mat& a, const Mat& b);
Mat scale(Elem c, const Mat& a);

/// Lexicographic order on the row-major vectorization.
bool lex_less(const Mat& a, const Mat& b);

Mat transpose(const Mat& a);
/// The last n rows.
Mat bottom_rows(const Mat& a, int n);

int rank(const Mat& a);
/// Reduced row-echelon form. Pivot search takes the leftmost column holding
/// a nonzero entry, then the first such row.
Mat rref(const Mat& a);
std::optional<Mat> inverse(const Mat& a);

/// Tr(M N^t), which equals the dot product of the vectorizations.
Elem trace_inner(const Mat& a, const Mat& b);

Vec vectorize(const Mat& a);
Mat devectorize(const Field& field, std::span<const Elem> v, int k, int m);

Mat random_matrix(const Field& field, int rows, int cols, Rng& rng);
/// Uniform element of GL_k(F_q) by rejection sampling.
Mat random_invertible(const Field& field, int k, Rng& rng);
Mat random_invertible(const Field& field, int k, std::uint64_t seed);

/// Subspace of F_q^n held by its unique reduced row-echelon basis.
class Subspace {
public:
    Subspace() = default;
    /// Zero subspace of F_q^n.
    Subspace(Field field, int ambient);

    /// Span of the row vectors of length `ambient` stored contiguously in `rows`.
    static Subspace span(const Field& field, int ambient, std::span<const Elem> rows);
    static Subspace full(const Field& field, int ambient);

    const Field& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.rows()); }
    const ElemMatrix& basis() const { return basis_; }
    std::span<const Elem> basis_row(int i) const {
        return {basis_.data() + static_cast<std::ptrdiff_t>(i) * ambient_, static_cast<std::size_t>(ambient_)};
    }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(std::span<const Elem> v) const;
    bool contains(const Subspace& other) const;
    /// Orthogonal complement under the standard dot product.
    Subspace perp() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
               a.basis_ == b.basis_;
    }

private:
    friend class SubspaceEnumerator;

    Field field_;
    int ambient_ = 0;
    ElemMatrix basis_;
    std::vector<int> pivots_;
};

/// Right null space {x in F_q^m : M x = 0}.
Subspace kernel(const Mat& a);
Subspace column_space(const Mat& a);
Subspace row_space(const Mat& a);

/// Streams every u-dimensional subspace of F_q^n exactly once: pivot
/// patterns in lexicographic order, then free entries as a base-q counter
/// whose last position runs fastest.
class SubspaceEnumerator {
public:
    SubspaceEnumerator(Field field, int n, int u);
    std::optional<Subspace> next();

private:
    void load_pattern();
    bool advance_pattern();

    Field field_;
    int n_;
    int u_;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_;
    std::vector<Elem> values_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int u);

/// Kernels on flat row-major buffers, shared by the higher-level modules.
namespace flat {

/// y += c * x
void axpy(const Field& f, Elem c, std::span<const Elem> x, std::span<Elem> y);

/// In-place reduced row-echelon form; returns the pivot columns.
std::vector<int> rref_in_place(const Field& f, std::span<Elem> data, int rows, int cols);

/// Rank of a rows x cols buffer. Uses a bit-packed path over GF(2).
int rank(const Field& f, std::span<const Elem> data, int rows, int cols);

/// Basis of {x : A x = 0}, flattened, in reduced row-echelon form.
std::vector<Elem> null_space(const Field& f, std::span<const Elem> data, int rows, int cols);

}  // namespace flat

}  // namespace rmc
