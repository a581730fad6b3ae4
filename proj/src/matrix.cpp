#include "matroot/matrix.hpp"

namespace matroot {

namespace {

void require_compatible(const Matrix& a, const Matrix& b, const char* where) {
    if (a.ring() != b.ring()) {
        throw RingMismatch(std::string(where) + ": " + a.ring().name() + " vs " + b.ring().name());
    }
    if (a.dim() != b.dim()) {
        throw DimMismatch(std::string(where) + ": dim " + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
    }
}

}  // namespace

Matrix::Matrix(const Ring& ring, int dim, std::vector<Scalar> entries)
    : ring_(ring), dim_(dim), entries_(std::move(entries)) {
    if (dim_ != 2 && dim_ != 3) {
        throw DimMismatch("Matrix: dim must be 2 or 3, got " + std::to_string(dim_));
    }
    if (entries_.size() != static_cast<std::size_t>(dim_ * dim_)) {
        throw DimMismatch("Matrix: expected " + std::to_string(dim_ * dim_) + " entries, got " +
                          std::to_string(entries_.size()));
    }
    for (const Scalar& e : entries_) {
        if (e.ring() != ring_) {
            throw RingMismatch("Matrix: entry ring " + e.ring().name() + " differs from " +
                               ring_.name());
        }
    }
}

Matrix Matrix::zero(const Ring& ring, int dim) {
    return Matrix(ring, dim,
                  std::vector<Scalar>(static_cast<std::size_t>(dim * dim), Scalar::zero(ring)));
}

Matrix Matrix::identity(const Ring& ring, int dim) {
    std::vector<Scalar> es(static_cast<std::size_t>(dim * dim), Scalar::zero(ring));
    for (int i = 0; i < dim; ++i) es[static_cast<std::size_t>(i * dim + i)] = Scalar::one(ring);
    return Matrix(ring, dim, std::move(es));
}

Matrix Matrix::from_rows(const Ring& ring, const std::vector<std::vector<BigInt>>& rows) {
    int dim = static_cast<int>(rows.size());
    std::vector<Scalar> es;
    es.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw DimMismatch("Matrix::from_rows: ragged rows");
        }
        for (const BigInt& v : row) es.emplace_back(ring, v);
    }
    return Matrix(ring, dim, std::move(es));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_compatible(*this, rhs, "Matrix::operator*");
    Matrix out = Matrix::zero(ring_, dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            Scalar acc = Scalar::zero(ring_);
            for (int k = 0; k < dim_; ++k) acc += at(i, k) * rhs.at(k, j);
            out.entries_[static_cast<std::size_t>(i * dim_ + j)] = acc;
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_compatible(*this, rhs, "Matrix::operator+");
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += rhs.entries_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_compatible(*this, rhs, "Matrix::operator-");
    Matrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= rhs.entries_[k];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (Scalar& e : out.entries_) e *= c;
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return ring_ == rhs.ring_ && dim_ == rhs.dim_ && entries_ == rhs.entries_;
}

bool Matrix::operator<(const Matrix& rhs) const {
    require_compatible(*this, rhs, "Matrix::operator<");
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] != rhs.entries_[k]) return entries_[k] < rhs.entries_[k];
    }
    return false;
}

std::optional<Scalar> Matrix::scalar_multiple_of_identity() const {
    const Scalar& c = at(0, 0);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j) {
            if (i == j ? at(i, j) != c : !at(i, j).is_zero()) return std::nullopt;
        }
    }
    return c;
}

std::string Matrix::str() const {
    std::string out = "[";
    for (int i = 0; i < dim_; ++i) {
        out += i == 0 ? "[" : ",[";
        for (int j = 0; j < dim_; ++j) {
            if (j > 0) out += ",";
            out += at(i, j).str();
        }
        out += "]";
    }
    return out + "]";
}

Matrix power(const Matrix& x, unsigned long long n) {
    Matrix base = x;
    Matrix acc = Matrix::identity(x.ring(), x.dim());
    while (n > 0) {
        if (n & 1ULL) acc = acc * base;
        base = base * base;
        n >>= 1ULL;
    }
    return acc;
}

Scalar trace(const Matrix& x) {
    Scalar t = Scalar::zero(x.ring());
    for (int i = 0; i < x.dim(); ++i) t += x.at(i, i);
    return t;
}

Scalar det(const Matrix& x) {
    if (x.dim() == 2) {
        return x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
    }
    return x.at(0, 0) * (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1)) -
           x.at(0, 1) * (x.at(1, 0) * x.at(2, 2) - x.at(1, 2) * x.at(2, 0)) +
           x.at(0, 2) * (x.at(1, 0) * x.at(2, 1) - x.at(1, 1) * x.at(2, 0));
}

CharPolyInvariants invariants(const Matrix& x) {
    Scalar d = det(x);
    if (x.dim() == 2) {
        return {trace(x), d, d};
    }
    Scalar second = (x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0)) +
                    (x.at(0, 0) * x.at(2, 2) - x.at(0, 2) * x.at(2, 0)) +
                    (x.at(1, 1) * x.at(2, 2) - x.at(1, 2) * x.at(2, 1));
    return {trace(x), second, d};
}

Matrix inverse_unimodular(const Matrix& x) {
    Scalar d = det(x);
    if (x.ring().is_field()) {
        if (d.is_zero()) throw NotInvertible("inverse_unimodular: det 0 over " + x.ring().name());
    } else if (d.value() != 1 && d.value() != -1) {
        throw NotInvertible("inverse_unimodular: det " + d.str() + " is not a unit of Z");
    }

    const Ring& r = x.ring();
    int n = x.dim();
    Matrix adj = Matrix::zero(r, n);
    std::vector<Scalar> es(static_cast<std::size_t>(n * n), Scalar::zero(r));
    if (n == 2) {
        es = {x.at(1, 1), -x.at(0, 1), -x.at(1, 0), x.at(0, 0)};
    } else {
        auto minor2 = [&](int r0, int r1, int c0, int c1) {
            return x.at(r0, c0) * x.at(r1, c1) - x.at(r0, c1) * x.at(r1, c0);
        };
        // adj[j][i] = cofactor_{i,j}
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
                int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                if (r0 > r1) std::swap(r0, r1);
                if (c0 > c1) std::swap(c0, c1);
                Scalar cof = minor2(r0, r1, c0, c1);
                if ((i + j) % 2 == 1) cof = -cof;
                es[static_cast<std::size_t>(j * 3 + i)] = cof;
            }
        }
    }
    adj = Matrix(r, n, std::move(es));
    return adj.scaled(d.inverse());
}

Matrix commutator(const Matrix& x, const Matrix& y) {
    return x * y * inverse_unimodular(x) * inverse_unimodular(y);
}

}  // namespace matroot
