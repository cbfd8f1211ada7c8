#pragma once

#include <ostream>
#include <set>
#include <string>

#include "ekr/algebra.hpp"
#include "ekr/oracle.hpp"

namespace ekr {

enum class SweepCheck { katona, chain, matrix, polynomial, oracle };

inline const char* to_string(SweepCheck c) {
    switch (c) {
        case SweepCheck::katona: return "katona";
        case SweepCheck::chain: return "chain";
        case SweepCheck::matrix: return "matrix";
        case SweepCheck::polynomial: return "polynomial";
        case SweepCheck::oracle: return "oracle";
    }
    return "?";
}

struct SweepSpec {
    int n_min = 4;
    int n_max = 8;
    int k_min = 2;
    int k_max = 3;
    std::vector<int> pivots;  // empty means all pivots 1..n
    int samples_per_cell = 5;
    std::uint64_t seed = 0;
    std::set<SweepCheck> checks = {SweepCheck::chain};
    std::uint64_t max_binom = 40;  // guard for oracle cells
};

struct SweepOutcome {
    bool guard_error = false;
    std::string guard_message;
    std::uint64_t rows = 0;
    std::uint64_t skipped_cells = 0;
    std::uint64_t violations = 0;
};

// One CSV row per (n, k, pivot, sample) in lexicographic order; cells with
// n < 2k are recorded as skipped. Families are seeded maximal intersecting
// samples, reproducible from (seed, n, k, sample) alone.
inline SweepOutcome run_sweep(const SweepSpec& spec, std::ostream& out) {
    if (spec.n_min < 1 || spec.n_max > kMaxGround || spec.n_min > spec.n_max)
        throw RangeError("sweep: bad n range");
    if (spec.k_min < 1 || spec.k_min > spec.k_max) throw RangeError("sweep: bad k range");
    if (spec.samples_per_cell < 1) throw RangeError("sweep: samples_per_cell must be >= 1");
    for (int p : spec.pivots)
        if (p < 1) throw RangeError("sweep: pivots must be >= 1");

    SweepOutcome outcome;
    const bool want_oracle = spec.checks.count(SweepCheck::oracle) > 0;
    if (want_oracle) {
        for (int n = spec.n_min; n <= spec.n_max; ++n)
            for (int k = spec.k_min; k <= spec.k_max; ++k) {
                if (n < 2 * k) continue;
                if (binom(n, k) > spec.max_binom) {
                    outcome.guard_error = true;
                    outcome.guard_message = "oracle scale guard exceeded at cell (n = " +
                                            std::to_string(n) + ", k = " + std::to_string(k) +
                                            "): C(n,k) = " + std::to_string(binom(n, k)) +
                                            " > " + std::to_string(spec.max_binom);
                    return outcome;
                }
            }
    }

    out << "n,k,pivot,sample,status,family_size,bound,katona,chain,matrix,polynomial,oracle\n";
    const auto cell_str = [](bool ok) { return ok ? "true" : "false"; };

    for (int n = spec.n_min; n <= spec.n_max; ++n) {
        for (int k = spec.k_min; k <= spec.k_max; ++k) {
            if (n < 2 * k) {
                out << n << ',' << k << ",,,skipped,,,,,,,\n";
                ++outcome.skipped_cells;
                ++outcome.rows;
                continue;
            }
            std::vector<UniformFamily> samples;
            samples.reserve(static_cast<std::size_t>(spec.samples_per_cell));
            for (int s = 0; s < spec.samples_per_cell; ++s)
                samples.push_back(random_maximal_intersecting(
                    n, k, derive_seed(spec.seed, static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(k),
                                      static_cast<std::uint64_t>(s))));
            std::optional<bool> oracle_ok;
            if (want_oracle) {
                OracleOptions opts;
                opts.max_binom = spec.max_binom;
                oracle_ok = max_intersecting_bruteforce(n, k, opts).max_size ==
                            binom(n - 1, k - 1);
            }
            std::vector<int> pivots = spec.pivots;
            if (pivots.empty())
                for (int p = 1; p <= n; ++p) pivots.push_back(p);
            for (int pivot : pivots) {
                if (pivot > n) throw RangeError("sweep: pivot " + std::to_string(pivot) +
                                                " exceeds n = " + std::to_string(n));
                for (int s = 0; s < spec.samples_per_cell; ++s) {
                    const UniformFamily& fam = samples[static_cast<std::size_t>(s)];
                    bool row_ok = true;
                    std::string katona_cell, chain_cell, matrix_cell, poly_cell, oracle_cell;
                    if (spec.checks.count(SweepCheck::katona)) {
                        const auto b = min_pairwise_intersection(fam);
                        const bool ok = katona_check(fam, b.value_or(fam.k())).holds;
                        katona_cell = cell_str(ok);
                        row_ok = row_ok && ok;
                    }
                    if (spec.checks.count(SweepCheck::chain) ||
                        spec.checks.count(SweepCheck::matrix)) {
                        const EkrDecomposition d = decompose(fam, pivot);
                        if (spec.checks.count(SweepCheck::chain)) {
                            const ChainReport r = run_chain(d);
                            const bool ok =
                                r.disjoint && r.katona_step && r.packing_step && r.final_bound;
                            chain_cell = cell_str(ok);
                            row_ok = row_ok && ok;
                        }
                        if (spec.checks.count(SweepCheck::matrix)) {
                            const bool ok = ekr_matrix_proof(d);
                            matrix_cell = cell_str(ok);
                            row_ok = row_ok && ok;
                        }
                    }
                    if (spec.checks.count(SweepCheck::polynomial)) {
                        const bool ok = polynomials_independent(fam, pivot);
                        poly_cell = cell_str(ok);
                        row_ok = row_ok && ok;
                    }
                    if (oracle_ok) {
                        oracle_cell = cell_str(*oracle_ok);
                        row_ok = row_ok && *oracle_ok;
                    }
                    out << n << ',' << k << ',' << pivot << ',' << s << ','
                        << (row_ok ? "ok" : "violation") << ',' << fam.size() << ','
                        << binom(n - 1, k - 1) << ',' << katona_cell << ',' << chain_cell << ','
                        << matrix_cell << ',' << poly_cell << ',' << oracle_cell << '\n';
                    ++outcome.rows;
                    if (!row_ok) ++outcome.violations;
                }
            }
        }
    }
    out << "# rows=" << outcome.rows << " skipped_cells=" << outcome.skipped_cells
        << " violations=" << outcome.violations << "\n";
    return outcome;
}

}  // namespace ekr
