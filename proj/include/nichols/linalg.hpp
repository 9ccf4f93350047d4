#pragma once

#include "nichols/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace nichols {

using CycVector = std::vector<CycScalar>;
/// Dense matrix stored by columns.
using CycMatrix = std::vector<CycVector>;

inline bool is_zero_vector(const CycVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// y += s * x
inline void axpy(CycVector& y, const CycScalar& s, const CycVector& x) {
    if (s.is_zero()) return;
    for (std::size_t k = 0; k < y.size(); ++k)
        if (!x[k].is_zero()) y[k] += s * x[k];
}

/// M * v, with M given by columns of length rows.
inline CycVector mat_vec(const CycMatrix& M, const CycVector& v, std::size_t rows) {
    CycVector out(rows, CycScalar(0));
    for (std::size_t j = 0; j < M.size(); ++j) axpy(out, v[j], M[j]);
    return out;
}

/// Row echelon form built one vector at a time, with deterministic pivots (first nonzero entry).
class Echelon {
public:
    explicit Echelon(std::size_t length = 0) : n_(length) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t length() const { return n_; }
    const std::vector<CycVector>& rows() const { return rows_; }

    /// Reduces v against the stored rows; returns the multipliers lambda with v = sum lambda_p row_p + rest.
    CycVector reduce(CycVector& v) const {
        CycVector lambda(rows_.size(), CycScalar(0));
        for (std::size_t p = 0; p < rows_.size(); ++p) {
            const CycScalar c = v[pivots_[p]];
            if (c.is_zero()) continue;
            lambda[p] = c;
            const CycVector& r = rows_[p];
            for (std::size_t k = pivots_[p]; k < n_; ++k)
                if (!r[k].is_zero()) v[k] -= c * r[k];
        }
        return lambda;
    }

    /// Adds v when independent; returns true when the rank grew.
    bool insert(CycVector v) {
        reduce(v);
        return push_reduced(std::move(v)).has_value();
    }

    /// Adds an already reduced vector; returns the inverse pivot entry when nonzero.
    std::optional<CycScalar> push_reduced(CycVector v) {
        std::size_t piv = 0;
        while (piv < n_ && v[piv].is_zero()) ++piv;
        if (piv == n_) return std::nullopt;
        CycScalar inv = v[piv].inverse();
        for (std::size_t k = piv; k < n_; ++k)
            if (!v[k].is_zero()) v[k] = v[k] * inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return inv;
    }

private:
    std::size_t n_;
    std::vector<CycVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Echelon form that also tracks every row as a combination of the independent inputs kept so far.
class TrackedEchelon {
public:
    explicit TrackedEchelon(std::size_t length) : ech_(length) {}

    std::size_t rank() const { return ech_.rank(); }

    /// If v depends on the kept inputs returns its coordinates in them; otherwise keeps v and returns nullopt.
    std::optional<CycVector> add(CycVector v) {
        CycVector lambda = ech_.reduce(v);
        const std::size_t r = ech_.rank();
        CycVector coords(r, CycScalar(0));
        for (std::size_t p = 0; p < r; ++p)
            if (!lambda[p].is_zero()) axpy(coords, lambda[p], transforms_[p]);
        auto inv = ech_.push_reduced(std::move(v));
        if (!inv) return coords;
        // new row = (v - sum lambda_p row_p) * inv = (e_new - coords) * inv
        CycVector t(r + 1, CycScalar(0));
        for (std::size_t p = 0; p < r; ++p)
            if (!coords[p].is_zero()) t[p] = -(coords[p] * *inv);
        t[r] = *inv;
        for (auto& old : transforms_) old.emplace_back(0);
        transforms_.push_back(std::move(t));
        return std::nullopt;
    }

private:
    Echelon ech_;
    std::vector<CycVector> transforms_;
};

/// Rank of a list of vectors of a common length.
inline std::size_t rank_of(const std::vector<CycVector>& vs) {
    if (vs.empty()) return 0;
    Echelon e(vs[0].size());
    for (const auto& v : vs) e.insert(v);
    return e.rank();
}

}  // namespace nichols
