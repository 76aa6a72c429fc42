#pragma once

#include "resgraph/cycle.hpp"
#include "resgraph/error.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/numeric.hpp"

#include <limits>
#include <vector>

namespace resgraph {

/// Symmetric intersection matrix M with M_ii = -b_i and M_ij = 1 exactly
/// when {i,j} is an edge. Row/column order equals the graph's vertex order.
class IntersectionForm {
public:
    explicit IntersectionForm(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    const Int& at(int i, int j) const { return m_[static_cast<std::size_t>(i) * n_ + j]; }
    Int& at(int i, int j) { return m_[static_cast<std::size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Int> m_;
};

inline IntersectionForm intersection_form(const WeightedDualGraph& g) {
    IntersectionForm m(g.size());
    for (int i = 0; i < g.size(); ++i) m.at(i, i) = -Int(g.weight(i));
    for (auto [u, v] : g.edges()) {
        m.at(u, v) = 1;
        m.at(v, u) = 1;
    }
    return m;
}

/// K_X paired against each curve: k_i = K_X . E_i = b_i - 2, the adjunction
/// value for a genus-0 curve.
struct CanonicalNumerics {
    std::vector<Int> k;
};

inline CanonicalNumerics canonical_intersections(const WeightedDualGraph& g) {
    CanonicalNumerics kn;
    kn.k.reserve(g.size());
    for (int i = 0; i < g.size(); ++i) kn.k.emplace_back(Int(g.weight(i)) - 2);
    return kn;
}

/// Minimal resolution graphs are exactly those where K_X is nef, i.e. every
/// weight is at least 2.
inline bool is_minimal_resolution(const WeightedDualGraph& g) {
    for (int i = 0; i < g.size(); ++i)
        if (g.weight(i) < 2) return false;
    return true;
}

namespace detail {

/// Fraction-free (Bareiss) elimination of an n x m augmented matrix, no
/// pivoting. After step k the diagonal entry a[k][k] equals the (k+1)-st
/// leading principal minor of the original left block, so the routine doubles
/// as the exact definiteness witness. Returns false on a zero pivot, which
/// for a symmetric left block means the matrix is not definite.
inline bool bareiss_eliminate(std::vector<std::vector<Int>>& a, int n) {
    Int prev = 1;
    const int m = static_cast<int>(a[0].size());
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) return false;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

/// int64 variant of the elimination used as a fast path; the arithmetic is
/// still exact because every multiply/subtract is overflow-checked and any
/// overflow makes the caller redo the computation in arbitrary precision.
/// Returns: 1 eliminated, 0 zero pivot, -1 overflow.
inline int bareiss_eliminate_i64(std::vector<long long>& a, int n, int m) {
    long long prev = 1;
    for (int k = 0; k < n; ++k) {
        const long long pivot = a[k * m + k];
        if (pivot == 0) return 0;
        for (int i = k + 1; i < n; ++i) {
            const long long aik = a[i * m + k];
            for (int j = k + 1; j < m; ++j) {
                long long t1, t2, t3;
                if (__builtin_mul_overflow(pivot, a[i * m + j], &t1)) return -1;
                if (__builtin_mul_overflow(aik, a[k * m + j], &t2)) return -1;
                if (__builtin_sub_overflow(t1, t2, &t3)) return -1;
                a[i * m + j] = t3 / prev;
            }
            a[i * m + k] = 0;
        }
        prev = pivot;
    }
    return 1;
}

inline bool fits_i64(const Int& x) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    return lo <= x && x <= hi;
}

inline std::vector<std::vector<Int>> augmented(const IntersectionForm& m,
                                               const std::vector<Int>& rhs) {
    const int n = m.size();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = rhs[i];
    }
    return a;
}

/// Exact solve M x = rhs for a negative-definite M. Bareiss forward pass
/// (all pivots nonzero by definiteness), rational back-substitution. Runs in
/// int64 when everything fits, otherwise in arbitrary precision.
inline std::vector<Rat> solve_definite(const IntersectionForm& m, const std::vector<Int>& rhs) {
    const int n = m.size();
    const int cols = n + 1;

    bool small = true;
    for (int i = 0; i < n && small; ++i) {
        if (!fits_i64(rhs[i])) small = false;
        for (int j = 0; j < n && small; ++j)
            if (!fits_i64(m.at(i, j))) small = false;
    }
    if (small) {
        std::vector<long long> a(static_cast<std::size_t>(n) * cols);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a[i * cols + j] = m.at(i, j).convert_to<long long>();
            a[i * cols + n] = rhs[i].convert_to<long long>();
        }
        int status = bareiss_eliminate_i64(a, n, cols);
        if (status == 0)
            throw Error(ErrorCode::NotNegativeDefinite, "singular leading minor in exact solve");
        if (status == 1) {
            std::vector<Rat> x(n);
            for (int i = n - 1; i >= 0; --i) {
                Rat acc(a[i * cols + n]);
                for (int j = i + 1; j < n; ++j) acc -= Rat(a[i * cols + j]) * x[j];
                x[i] = acc / Rat(a[i * cols + i]);
            }
            return x;
        }
        // overflow: fall through to arbitrary precision
    }

    auto a = augmented(m, rhs);
    if (!bareiss_eliminate(a, n))
        throw Error(ErrorCode::NotNegativeDefinite, "singular leading minor in exact solve");
    std::vector<Rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat acc(a[i][n]);
        for (int j = i + 1; j < n; ++j) acc -= Rat(a[i][j]) * x[j];
        x[i] = acc / Rat(a[i][i]);
    }
    return x;
}

}  // namespace detail

/// Sylvester test in exact arithmetic: negative definite iff the leading
/// principal minors alternate in sign starting negative. Runs in checked
/// int64 when the entries fit, otherwise in arbitrary precision.
inline bool is_negative_definite(const IntersectionForm& m) {
    const int n = m.size();

    bool small = true;
    for (int i = 0; i < n && small; ++i)
        for (int j = 0; j < n && small; ++j)
            if (!detail::fits_i64(m.at(i, j))) small = false;
    if (small) {
        std::vector<long long> a(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).convert_to<long long>();
        long long prev = 1;
        bool overflow = false;
        for (int k = 0; k < n && !overflow; ++k) {
            const long long pivot = a[k * n + k];
            if (pivot == 0) return false;
            if ((pivot < 0) != (k % 2 == 0)) return false;
            for (int i = k + 1; i < n && !overflow; ++i) {
                const long long aik = a[i * n + k];
                for (int j = k + 1; j < n; ++j) {
                    long long t1, t2, t3;
                    if (__builtin_mul_overflow(pivot, a[i * n + j], &t1) ||
                        __builtin_mul_overflow(aik, a[k * n + j], &t2) ||
                        __builtin_sub_overflow(t1, t2, &t3)) {
                        overflow = true;
                        break;
                    }
                    a[i * n + j] = t3 / prev;
                }
                a[i * n + k] = 0;
            }
            prev = pivot;
        }
        if (!overflow) return true;
    }

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        // a[k][k] is the (k+1)-st leading principal minor at this point
        if (a[k][k] == 0) return false;
        if ((a[k][k] < 0) != (k % 2 == 0)) return false;
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return true;
}

inline bool is_negative_definite(const WeightedDualGraph& g) {
    return is_negative_definite(intersection_form(g));
}

inline Int pairing(const IntersectionForm& m, const Cycle& c, const Cycle& d) {
    if (c.size() != m.size() || d.size() != m.size())
        throw Error(ErrorCode::DimensionMismatch, "cycle size does not match the form");
    Int total = 0;
    for (int i = 0; i < m.size(); ++i) {
        if (c[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < m.size(); ++j)
            if (d[j] != 0) row += m.at(i, j) * d[j];
        total += c[i] * row;
    }
    return total;
}

inline Rat pairing(const IntersectionForm& m, const QCycle& c, const QCycle& d) {
    if (c.size() != m.size() || d.size() != m.size())
        throw Error(ErrorCode::DimensionMismatch, "cycle size does not match the form");
    Rat total = 0;
    for (int i = 0; i < m.size(); ++i) {
        if (c[i] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < m.size(); ++j)
            if (d[j] != 0) row += Rat(m.at(i, j)) * d[j];
        total += c[i] * row;
    }
    return total;
}

/// The anti-dual basis element E_j^*: the unique rational cycle with
/// E_j^* . E_i = -delta_ij. All coefficients are strictly positive when the
/// form is negative definite and the graph connected.
inline QCycle dual_cycle(const WeightedDualGraph& g, int j) {
    IntersectionForm m = intersection_form(g);
    if (!is_negative_definite(m))
        throw Error(ErrorCode::NotNegativeDefinite, "dual cycles need a negative-definite form");
    std::vector<Int> rhs(g.size(), 0);
    rhs[j] = -1;
    return QCycle(detail::solve_definite(m, rhs));
}

/// Discrepancy vector: the unique rational cycle a with a . E_i = K_X . E_i
/// for every i, so a is numerically equivalent to K_X. Used as the
/// independent log-terminality witness.
inline QCycle discrepancies(const WeightedDualGraph& g) {
    IntersectionForm m = intersection_form(g);
    if (!is_negative_definite(m))
        throw Error(ErrorCode::NotNegativeDefinite, "discrepancies need a negative-definite form");
    return QCycle(detail::solve_definite(m, canonical_intersections(g).k));
}

}  // namespace resgraph
