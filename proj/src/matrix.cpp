#include "relhom/matrix.hpp"

#include <algorithm>

namespace relhom {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("matrix operands over different fields");
}

}  // namespace

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[m.idx(i, i)] = Scalar(1);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.entries_[m.idx(i, j)] = field.canon(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec field, std::size_t rows,
                            const std::vector<std::vector<Scalar>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.entries_[m.idx(i, j)] = field.canon(cols[j][i]);
    }
    return m;
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
    return entries_[idx(r, c)];
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    entries_[idx(r, c)] = field_.canon(v);
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    std::vector<Scalar> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = entries_[idx(r, j)];
    return out;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = entries_[idx(i, c)];
    return out;
}

void Matrix::set_column(std::size_t c, const std::vector<Scalar>& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) entries_[idx(i, c)] = field_.canon(v[i]);
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add shapes");
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = field_.add(entries_[k], o.entries_[k]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub shapes");
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        m.entries_[k] = field_.sub(entries_[k], o.entries_[k]);
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = field_.neg(entries_[k]);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_same_field(*this, o);
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t t = 0; t < cols_; ++t) {
            const Scalar& a = entries_[idx(i, t)];
            if (FieldSpec::is_zero(a)) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                m.entries_[m.idx(i, j)] += a * o.entries_[o.idx(t, j)];
            }
        }
    }
    for (auto& e : m.entries_) e = field_.canon(e);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = field_.mul(entries_[k], s);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.entries_[m.idx(j, i)] = entries_[idx(i, j)];
    return m;
}

Matrix Matrix::columns_slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > cols_) throw DimensionMismatch("column slice out of range");
    Matrix m(field_, rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = begin; j < end; ++j)
            m.entries_[m.idx(i, j - begin)] = entries_[idx(i, j)];
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Scalar& e) { return FieldSpec::is_zero(e); });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shapes");
    std::vector<Scalar> out(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar acc(0);
        for (std::size_t j = 0; j < cols_; ++j) acc += entries_[idx(i, j)] * v[j];
        out[i] = field_.canon(acc);
    }
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack row counts");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.at(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(i, a.cols() + j, b.at(i, j));
    }
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column counts");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m.set(i, j, a.at(i, j));
        for (std::size_t i = 0; i < b.rows(); ++i) m.set(a.rows() + i, j, b.at(i, j));
    }
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (FieldSpec::is_zero(a.at(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.set(i * b.rows() + k, j * b.cols() + l,
                          a.field().mul(a.at(i, j), b.at(k, l)));
        }
    return m;
}

RrefResult rref(const Matrix& m) {
    const FieldSpec& f = m.field();
    Matrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < r.rows() && FieldSpec::is_zero(r.at(sel, col))) ++sel;
        if (sel == r.rows()) continue;
        if (sel != lead) {
            for (std::size_t j = 0; j < r.cols(); ++j) {
                Scalar tmp = r.at(lead, j);
                r.set(lead, j, r.at(sel, j));
                r.set(sel, j, tmp);
            }
        }
        Scalar pivinv = f.inv(r.at(lead, col));
        for (std::size_t j = col; j < r.cols(); ++j) r.set(lead, j, f.mul(r.at(lead, j), pivinv));
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead) continue;
            Scalar factor = r.at(i, col);
            if (FieldSpec::is_zero(factor)) continue;
            for (std::size_t j = col; j < r.cols(); ++j)
                r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(lead, j))));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    RrefResult r = rref(hstack(a, b));
    for (std::size_t p : r.pivots) {
        if (p >= a.cols()) return std::nullopt;  // pivot in the augmented block
    }
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::size_t pc = r.pivots[i];
        for (std::size_t j = 0; j < b.cols(); ++j) x.set(pc, j, r.reduced.at(i, a.cols() + j));
    }
    return x;
}

Matrix kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    Matrix k(m.field(), m.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k.set(fc, t, Scalar(1));
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            k.set(r.pivots[i], t, m.field().neg(r.reduced.at(i, fc)));
    }
    return k;
}

Matrix column_space(const Matrix& m) {
    RrefResult r = rref(m.transposed());
    Matrix out(m.field(), m.rows(), r.pivots.size());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out.set(j, i, r.reduced.at(i, j));
    return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, Matrix::identity(m.field(), m.rows()));
}

QuotientMaps quotient(std::size_t ambient_dim, const Matrix& subspace) {
    if (subspace.rows() != ambient_dim) throw DimensionMismatch("subspace ambient dimension");
    if (rank(subspace) != subspace.cols())
        throw ValidationError("quotient: subspace columns are dependent");
    const FieldSpec& f = subspace.field();
    std::size_t k = subspace.cols();
    std::size_t q = ambient_dim - k;

    // Pivot coordinates of the subspace; the complement coordinates span
    // a deterministic complement.
    RrefResult r = rref(subspace.transposed());
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < ambient_dim; ++j)
        if (!is_pivot[j]) complement.push_back(j);

    Matrix section(f, ambient_dim, q);
    for (std::size_t t = 0; t < q; ++t) section.set(complement[t], t, Scalar(1));

    Matrix basis = hstack(subspace, section);  // ambient x ambient, invertible
    auto inv = inverse(basis);
    if (!inv) throw ValidationError("quotient: complement construction failed");
    Matrix projection(f, q, ambient_dim);
    for (std::size_t t = 0; t < q; ++t)
        for (std::size_t j = 0; j < ambient_dim; ++j) projection.set(t, j, inv->at(k + t, j));
    return {std::move(projection), std::move(section)};
}

Matrix column_vector(FieldSpec field, const std::vector<Scalar>& v) {
    Matrix m(field, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
}

Matrix vectorize(const Matrix& m) {
    Matrix v(m.field(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

Matrix unvectorize(FieldSpec field, std::size_t rows, std::size_t cols, const Matrix& v) {
    if (v.rows() != rows * cols || v.cols() != 1) throw DimensionMismatch("unvectorize shape");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, v.at(i * cols + j, 0));
    return m;
}

}  // namespace relhom
