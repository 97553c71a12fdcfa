#include "rmc/matlin.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmc {

namespace {

void require_same_shape(const Mat& a, const Mat& b, const char* op) {
    if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": operand shape or field mismatch");
}

}  // namespace

Mat::Mat(Field field, int rows, int cols) : field_(std::move(field)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    entries_ = ElemMatrix::Zero(rows, cols);
}

Mat::Mat(Field field, ElemMatrix entries) : field_(std::move(field)), entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.cols() < 1) throw std::invalid_argument("matrix dimensions must be positive");
    for (Eigen::Index i = 0; i < entries_.size(); ++i)
        if (!field_.contains(entries_.data()[i])) throw std::invalid_argument("matrix entry outside the field");
}

Mat Mat::identity(const Field& field, int n) {
    Mat a(field, n, n);
    for (int i = 0; i < n; ++i) a.entries_(i, i) = 1;
    return a;
}

Mat Mat::from_rows(const Field& field, std::initializer_list<std::initializer_list<Elem>> rows) {
    const int k = static_cast<int>(rows.size());
    const int m = k > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    ElemMatrix e(k, m);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m) throw std::invalid_argument("ragged matrix rows");
        int j = 0;
        for (Elem v : row) e(i, j++) = v;
        ++i;
    }
    return Mat(field, std::move(e));
}

void Mat::set(int i, int j, Elem value) {
    if (!field_.contains(value)) throw std::invalid_argument("matrix entry outside the field");
    entries_(i, j) = value;
}

bool Mat::is_zero() const { return (entries_.array() == 0).all(); }

Mat operator+(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "add");
    const Field& f = a.field();
    ElemMatrix r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < r.size(); ++i) r.data()[i] = f.add(a.entries().data()[i], b.entries().data()[i]);
    return Mat(f, std::move(r));
}

Mat operator-(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "sub");
    const Field& f = a.field();
    ElemMatrix r(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < r.size(); ++i) r.data()[i] = f.sub(a.entries().data()[i], b.entries().data()[i]);
    return Mat(f, std::move(r));
}

Mat operator-(const Mat& a) {
    const Field& f = a.field();
    ElemMatrix r = a.entries().unaryExpr([&f](Elem x) { return f.neg(x); });
    return Mat(f, std::move(r));
}

Mat operator*(const Mat& a, const Mat& b) {
    if (!(a.field() == b.field()) || a.cols() != b.rows()) throw std::invalid_argument("product: shape mismatch");
    const Field& f = a.field();
    ElemMatrix r = ElemMatrix::Zero(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            const Elem c = a(i, l);
            if (c == 0) continue;
            for (int j = 0; j < b.cols(); ++j) r(i, j) = f.add(r(i, j), f.mul(c, b(l, j)));
        }
    return Mat(f, std::move(r));
}

Mat scale(Elem c, const Mat& a) {
    const Field& f = a.field();
    ElemMatrix r = a.entries().unaryExpr([&f, c](Elem x) { return f.mul(c, x); });
    return Mat(f, std::move(r));
}

bool lex_less(const Mat& a, const Mat& b) {
    const auto x = a.data();
    const auto y = b.data();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

Mat transpose(const Mat& a) { return Mat(a.field(), ElemMatrix(a.entries().transpose())); }

Mat bottom_rows(const Mat& a, int n) {
    if (n < 1 || n > a.rows()) throw std::invalid_argument("bottom_rows: bad row count");
    return Mat(a.field(), ElemMatrix(a.entries().bottomRows(n)));
}

int rank(const Mat& a) { return flat::rank(a.field(), a.data(), a.rows(), a.cols()); }

Mat rref(const Mat& a) {
    ElemMatrix e = a.entries();
    flat::rref_in_place(a.field(), {e.data(), static_cast<std::size_t>(e.size())}, a.rows(), a.cols());
    return Mat(a.field(), std::move(e));
}

std::optional<Mat> inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const int n = a.rows();
    std::vector<Elem> aug(static_cast<std::size_t>(n) * 2 * n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i * 2 * n + j] = a(i, j);
        aug[i * 2 * n + n + i] = 1;
    }
    const auto piv = flat::rref_in_place(a.field(), aug, n, 2 * n);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    ElemMatrix r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug[i * 2 * n + n + j];
    return Mat(a.field(), std::move(r));
}

Elem trace_inner(const Mat& a, const Mat& b) {
    require_same_shape(a, b, "trace_inner");
    const Field& f = a.field();
    Elem s = 0;
    const auto x = a.data();
    const auto y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
    return s;
}

Vec vectorize(const Mat& a) {
    const auto d = a.data();
    return Vec(d.begin(), d.end());
}

Mat devectorize(const Field& field, std::span<const Elem> v, int k, int m) {
    if (k < 1 || m < 1 || v.size() != static_cast<std::size_t>(k) * m)
        throw std::invalid_argument("devectorize: length does not match k*m");
    ElemMatrix e(k, m);
    std::copy(v.begin(), v.end(), e.data());
    return Mat(field, std::move(e));
}

Mat random_matrix(const Field& field, int rows, int cols, Rng& rng) {
    ElemMatrix e(rows, cols);
    for (Eigen::Index i = 0; i < e.size(); ++i) e.data()[i] = static_cast<Elem>(rng.below(field.q()));
    return Mat(field, std::move(e));
}

Mat random_invertible(const Field& field, int k, Rng& rng) {
    while (true) {
        Mat a = random_matrix(field, k, k, rng);
        if (rank(a) == k) return a;
    }
}

Mat random_invertible(const Field& field, int k, std::uint64_t seed) {
    Rng rng(seed);
    return random_invertible(field, k, rng);
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(Field field, int ambient) : field_(std::move(field)), ambient_(ambient), basis_(0, ambient) {
    if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
}

Subspace Subspace::span(const Field& field, int ambient, std::span<const Elem> rows) {
    if (ambient < 1) {
        if (!rows.empty()) throw std::invalid_argument("span: vectors in a zero-dimensional space");
        return Subspace(field, 0);
    }
    if (rows.size() % ambient != 0) throw std::invalid_argument("span: buffer length not a multiple of ambient");
    const int count = static_cast<int>(rows.size() / ambient);
    std::vector<Elem> work(rows.begin(), rows.end());
    Subspace s(field, ambient);
    s.pivots_ = flat::rref_in_place(field, work, count, ambient);
    const int r = static_cast<int>(s.pivots_.size());
    s.basis_.resize(r, ambient);
    std::copy(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(r) * ambient, s.basis_.data());
    return s;
}

Subspace Subspace::full(const Field& field, int ambient) {
    std::vector<Elem> id(static_cast<std::size_t>(ambient) * ambient, 0);
    for (int i = 0; i < ambient; ++i) id[i * ambient + i] = 1;
    return span(field, ambient, id);
}

bool Subspace::contains(std::span<const Elem> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("contains: vector length mismatch");
    Vec w(v.begin(), v.end());
    for (int i = 0; i < dim(); ++i) {
        const Elem c = w[pivots_[i]];
        if (c != 0) flat::axpy(field_, field_.neg(c), basis_row(i), w);
    }
    return std::all_of(w.begin(), w.end(), [](Elem x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    for (int i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

Subspace Subspace::perp() const {
    if (dim() == 0) return full(field_, ambient_);
    const auto ns = flat::null_space(field_, {basis_.data(), static_cast<std::size_t>(basis_.size())}, dim(), ambient_);
    return span(field_, ambient_, ns);
}

Subspace kernel(const Mat& a) {
    return Subspace::span(a.field(), a.cols(), flat::null_space(a.field(), a.data(), a.rows(), a.cols()));
}

Subspace column_space(const Mat& a) {
    const Mat t = transpose(a);
    return Subspace::span(a.field(), a.rows(), t.data());
}

Subspace row_space(const Mat& a) { return Subspace::span(a.field(), a.cols(), a.data()); }

// ------------------------------------------------------ SubspaceEnumerator

SubspaceEnumerator::SubspaceEnumerator(Field field, int n, int u) : field_(std::move(field)), n_(n), u_(u) {
    if (n < 0 || u < 0 || u > n) throw std::invalid_argument("enumerate_subspaces: need 0 <= u <= n");
    pivots_.resize(u);
    for (int i = 0; i < u; ++i) pivots_[i] = i;
    load_pattern();
}

void SubspaceEnumerator::load_pattern() {
    free_.clear();
    for (int r = 0; r < u_; ++r)
        for (int c = pivots_[r] + 1; c < n_; ++c)
            if (!std::binary_search(pivots_.begin(), pivots_.end(), c)) free_.emplace_back(r, c);
    values_.assign(free_.size(), 0);
}

bool SubspaceEnumerator::advance_pattern() {
    int i = u_ - 1;
    while (i >= 0 && pivots_[i] == n_ - u_ + i) --i;
    if (i < 0) return false;
    ++pivots_[i];
    for (int j = i + 1; j < u_; ++j) pivots_[j] = pivots_[j - 1] + 1;
    load_pattern();
    return true;
}

std::optional<Subspace> SubspaceEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        int i = static_cast<int>(values_.size()) - 1;
        while (i >= 0) {
            if (++values_[i] < field_.q()) break;
            values_[i] = 0;
            --i;
        }
        if (i < 0 && !advance_pattern()) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;

    Subspace s(field_, n_);
    s.basis_ = ElemMatrix::Zero(u_, n_);
    s.pivots_ = pivots_;
    for (int r = 0; r < u_; ++r) s.basis_(r, pivots_[r]) = 1;
    for (std::size_t t = 0; t < free_.size(); ++t) s.basis_(free_[t].first, free_[t].second) = values_[t];
    return s;
}

std::vector<Subspace> enumerate_subspaces(const Field& field, int n, int u) {
    std::vector<Subspace> out;
    SubspaceEnumerator e(field, n, u);
    while (auto s = e.next()) out.push_back(std::move(*s));
    return out;
}

// ------------------------------------------------------------------ flat

namespace flat {

void axpy(const Field& f, Elem c, std::span<const Elem> x, std::span<Elem> y) {
    if (c == 0) return;
    if (c == 1) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) y[i] = f.add(y[i], x[i]);
        return;
    }
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
}

std::vector<int> rref_in_place(const Field& f, std::span<Elem> data, int rows, int cols) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int found = -1;
        for (int i = r; i < rows; ++i)
            if (data[i * cols + c] != 0) {
                found = i;
                break;
            }
        if (found < 0) continue;
        if (found != r)
            std::swap_ranges(data.begin() + found * cols, data.begin() + (found + 1) * cols, data.begin() + r * cols);
        auto row = data.subspan(static_cast<std::size_t>(r) * cols, cols);
        const Elem lead = row[c];
        if (lead != 1) {
            const Elem li = f.inv(lead);
            for (int j = c; j < cols; ++j) row[j] = f.mul(li, row[j]);
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const Elem v = data[i * cols + c];
            if (v != 0) axpy(f, f.neg(v), row, data.subspan(static_cast<std::size_t>(i) * cols, cols));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(const Field& f, std::span<const Elem> data, int rows, int cols) {
    if (f.q() == 2 && cols <= 64) {
        std::uint64_t packed[64];
        std::uint64_t* buf = packed;
        std::vector<std::uint64_t> big;
        if (rows > 64) {
            big.resize(rows);
            buf = big.data();
        }
        for (int i = 0; i < rows; ++i) {
            std::uint64_t w = 0;
            for (int j = 0; j < cols; ++j) w |= std::uint64_t{data[i * cols + j] & 1u} << j;
            buf[i] = w;
        }
        int r = 0;
        for (int i = 0; i < rows; ++i) {
            std::uint64_t w = buf[i];
            if (w == 0) continue;
            const std::uint64_t low = w & (~w + 1);
            for (int j = i + 1; j < rows; ++j)
                if (buf[j] & low) buf[j] ^= w;
            ++r;
        }
        return r;
    }
    thread_local std::vector<Elem> scratch;
    scratch.assign(data.begin(), data.end());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int found = -1;
        for (int i = r; i < rows; ++i)
            if (scratch[i * cols + c] != 0) {
                found = i;
                break;
            }
        if (found < 0) continue;
        if (found != r)
            std::swap_ranges(scratch.begin() + found * cols, scratch.begin() + (found + 1) * cols,
                             scratch.begin() + r * cols);
        const Elem li = f.inv(scratch[r * cols + c]);
        for (int i = r + 1; i < rows; ++i) {
            const Elem v = scratch[i * cols + c];
            if (v == 0) continue;
            const Elem factor = f.neg(f.mul(v, li));
            for (int j = c; j < cols; ++j)
                scratch[i * cols + j] = f.add(scratch[i * cols + j], f.mul(factor, scratch[r * cols + j]));
        }
        ++r;
    }
    return r;
}

std::vector<Elem> null_space(const Field& f, std::span<const Elem> data, int rows, int cols) {
    std::vector<Elem> work(data.begin(), data.end());
    const auto pivots = rref_in_place(f, work, rows, cols);
    std::vector<int> free_cols;
    for (int c = 0, p = 0; c < cols; ++c) {
        if (p < static_cast<int>(pivots.size()) && pivots[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    std::vector<Elem> out(free_cols.size() * cols, 0);
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        const int fc = free_cols[t];
        Elem* v = out.data() + t * cols;
        v[fc] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(work[i * cols + fc]);
    }
    rref_in_place(f, out, static_cast<int>(free_cols.size()), cols);
    return out;
}

}  // namespace flat

}  // namespace rmc
