#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ekr/pipeline.hpp"

namespace ekr {

using BigInt = boost::multiprecision::cpp_int;

// 0-1 matrix with entry 1 exactly when row_label contains col_label.
// Rows keep the caller's order (mixed cardinalities allowed); columns are
// a canonical family.
struct InclusionMatrix {
    std::vector<Subset> row_labels;
    std::vector<Subset> col_labels;
    std::vector<std::vector<int>> entries;

    std::size_t rows() const { return row_labels.size(); }
    std::size_t cols() const { return col_labels.size(); }
};

inline InclusionMatrix inclusion_matrix(const std::vector<Subset>& rows,
                                        const UniformFamily& cols) {
    InclusionMatrix m;
    m.col_labels.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.col_labels.push_back(cols.at(j));
    m.row_labels = rows;
    m.entries.reserve(rows.size());
    for (const Subset& r : rows) {
        if (r.ground_n() != cols.ground_n())
            throw GroundMismatchError("inclusion_matrix: row/column ground sets differ");
        std::vector<int> row(cols.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j)
            row[j] = (cols.masks()[j] & ~r.mask()) == 0 ? 1 : 0;
        m.entries.push_back(std::move(row));
    }
    return m;
}

inline InclusionMatrix inclusion_matrix(const UniformFamily& a, const UniformFamily& b) {
    std::vector<Subset> rows;
    rows.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) rows.push_back(a.at(i));
    return inclusion_matrix(rows, b);
}

namespace detail {

// Fraction-free Bareiss elimination; every division is exact. Pivots of
// absolute value 1 are preferred, which keeps intermediates small on the
// unit-vector-heavy matrices this library produces.
inline int bareiss_rank(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                if (piv == rows) piv = i;
                if (a[i][c] == 1 || a[i][c] == -1) {
                    piv = i;
                    break;
                }
            }
        }
        if (piv == rows) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        const bool unit_step = a[r][c] == prev;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) {
                if (unit_step) continue;  // scale factor pivot/prev == 1
                for (std::size_t j = c + 1; j < cols; ++j) {
                    if (a[i][j] == 0) continue;
                    BigInt num = a[r][c] * a[i][j];
#ifndef NDEBUG
                    assert(num % prev == 0);
#endif
                    a[i][j] = num / prev;
                }
                continue;
            }
            for (std::size_t j = c + 1; j < cols; ++j) {
                BigInt num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
#ifndef NDEBUG
                assert(num % prev == 0);
#endif
                a[i][j] = num / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

template <typename Int>
std::vector<std::vector<BigInt>> to_big(const std::vector<std::vector<Int>>& m) {
    std::vector<std::vector<BigInt>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        std::vector<BigInt> r;
        r.reserve(row.size());
        for (const auto& v : row) r.emplace_back(v);
        a.push_back(std::move(r));
    }
    return a;
}

}  // namespace detail

// Rank over the rationals, in exact integer arithmetic.
inline int exact_rank(const std::vector<std::vector<std::int64_t>>& m) {
    return detail::bareiss_rank(detail::to_big(m));
}

inline int exact_rank(const std::vector<std::vector<int>>& m) {
    return detail::bareiss_rank(detail::to_big(m));
}

inline int exact_rank(const InclusionMatrix& m) { return exact_rank(m.entries); }

// Frankl - Ray-Chaudhuri - Wilson: for an L-intersecting k-uniform family
// with |L| <= s <= k, the rows of I(A, [n] choose s) are independent. A
// false return refutes the theorem and callers must surface it loudly.
inline bool frw_independence_check(const UniformFamily& a, int s) {
    const std::set<int> l = intersection_sizes(a);
    const std::vector<int> lv(l.begin(), l.end());
    if (s < 0 || s > a.k())
        throw PreconditionError("frw: s = " + std::to_string(s) + " outside [0, k = " +
                                std::to_string(a.k()) + "]", lv);
    if (static_cast<int>(l.size()) > s)
        throw PreconditionError("frw: family has " + std::to_string(l.size()) +
                                " pairwise intersection sizes, more than s = " +
                                std::to_string(s), lv);
    const InclusionMatrix m = inclusion_matrix(a, all_k_subsets(a.ground_n(), s));
    return exact_rank(m) == static_cast<int>(a.size());
}

// Rows of the matrix route: the G0 block in its canonical order, then
// the G1 block.
inline std::vector<Subset> ekr_row_labels(const EkrDecomposition& d) {
    std::vector<Subset> rows;
    rows.reserve(d.g0.size() + d.g1.size());
    for (std::size_t i = 0; i < d.g0.size(); ++i) rows.push_back(d.g0.at(i));
    for (std::size_t i = 0; i < d.g1.size(); ++i) rows.push_back(d.g1.at(i));
    return rows;
}

inline InclusionMatrix build_ekr_matrix(const EkrDecomposition& d) {
    return inclusion_matrix(ekr_row_labels(d), k_subsets_of_window(d.window(), d.k - 1));
}

// Matrix route to the EKR bound: the rows of I(G0 u G1, window choose k-1)
// are independent, so |F| = rank <= C(n-1, k-1).
inline bool ekr_matrix_proof(const EkrDecomposition& d) {
    if (d.n < 2 * d.k)
        throw BoundNotApplicableError("ekr_matrix_proof: requires n >= 2k");
    const InclusionMatrix m = build_ekr_matrix(d);
    const bool independent = exact_rank(m) == static_cast<int>(m.rows());
    if (independent) {
        assert(m.rows() <= m.cols());  // independence forces |F| <= C(n-1, k-1)
        assert(m.rows() == d.f0.size() + d.f1.size());
    }
    return independent;
}

// Homogeneous multilinear polynomial of degree k-1 in the variables
// indexed by [n] \ {pivot}; monomial x_S is keyed by the mask of S.
struct MultilinearPolynomial {
    int n = 0;
    int degree = 0;
    int pivot = 0;
    std::map<std::uint64_t, long long> coefficients;
};

// p(F, x) = x_{F \ {pivot}}                                  if pivot in F
//         = sum of x_S over (k-1)-subsets S of window \ F    otherwise
inline MultilinearPolynomial build_polynomial(const Subset& f, int n, int k, int pivot) {
    if (n < 1 || n > kMaxGround) throw RangeError("build_polynomial: n outside [1, 64]");
    if (k < 1 || k > n) throw RangeError("build_polynomial: k outside [1, n]");
    if (pivot < 1 || pivot > n) throw RangeError("build_polynomial: pivot outside [1, n]");
    if (f.ground_n() != n) throw GroundMismatchError("build_polynomial: ground set mismatch");
    if (f.size() != k)
        throw CardinalityError("build_polynomial: |F| = " + std::to_string(f.size()) +
                               ", expected " + std::to_string(k));
    MultilinearPolynomial p{n, k - 1, pivot, {}};
    const std::uint64_t pb = std::uint64_t{1} << (pivot - 1);
    if (f.mask() & pb) {
        p.coefficients[f.mask() & ~pb] = 1;
    } else {
        const Subset rest(n, Subset::mask_of_first(n) & ~pb & ~f.mask());
        const UniformFamily monomials = k_subsets_of_window(rest, k - 1);
        for (std::uint64_t s : monomials.masks()) p.coefficients[s] = 1;
    }
    return p;
}

// Coefficient matrix of { p(F, .) : F in F0 u F1 } in the monomial basis
// of (k-1)-subsets of the window, colex column order; rows follow the
// G0 block then the G1 block of the decomposition.
inline std::vector<std::vector<std::int64_t>>
polynomial_coefficient_matrix(const EkrDecomposition& d) {
    const UniformFamily basis = k_subsets_of_window(d.window(), d.k - 1);
    const std::uint64_t wmask = d.window().mask();
    std::vector<std::vector<std::int64_t>> m;
    m.reserve(d.g0.size() + d.g1.size());
    auto emit = [&](const Subset& f) {
        const MultilinearPolynomial p = build_polynomial(f, d.n, d.k, d.pivot);
        std::vector<std::int64_t> row(basis.size(), 0);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto it = p.coefficients.find(basis.masks()[j]);
            if (it != p.coefficients.end()) row[j] = it->second;
        }
        m.push_back(std::move(row));
    };
    for (std::uint64_t g : d.g0.masks()) emit(Subset(d.n, wmask & ~g));
    for (std::uint64_t g : d.g1.masks()) emit(Subset(d.n, g | d.pivot_bit()));
    return m;
}

// Polynomial route to the EKR bound. Validation order matches the other
// routes: the intersecting check (with witness) comes first, the n >= 2k
// refusal second.
inline bool polynomials_independent(const UniformFamily& f, int pivot) {
    const EkrDecomposition d = decompose(f, pivot);
    if (f.ground_n() < 2 * f.k())
        throw BoundNotApplicableError("polynomials_independent: requires n >= 2k");
    return exact_rank(polynomial_coefficient_matrix(d)) == static_cast<int>(f.size());
}

// CLI dump: "rows cols", the 0-1 entries, then the G0, G1 and column
// label families, each as a family-format section.
inline std::string ekr_matrix_dump(const EkrDecomposition& d) {
    const InclusionMatrix m = build_ekr_matrix(d);
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (const auto& row : m.entries) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ' ';
            out += row[j] ? '1' : '0';
        }
        out += '\n';
    }
    out += to_text(d.g0);
    out += to_text(d.g1);
    out += to_text(k_subsets_of_window(d.window(), d.k - 1));
    return out;
}

}  // namespace ekr
