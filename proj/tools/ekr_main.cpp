#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ekr/algebra.hpp"
#include "ekr/jsonio.hpp"
#include "ekr/sweep.hpp"

// Exit codes: 0 = all checks hold, 1 = a checked claim failed (the report
// carries a witness), 2 = usage, parse or scale errors.

namespace {

using ekr::OrderedJson;

ekr::UniformFamily load_family(const std::string& path) {
    if (path == "-") return ekr::read_family(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ekr::ParseError("cannot open file: " + path);
    return ekr::read_family(in);
}

void emit(const OrderedJson& j, const std::string& format) {
    std::cout << (format == "csv" ? ekr::render_csv(j) : ekr::render_json(j));
}

OrderedJson witness_pair_json(const ekr::WitnessPairError& e) {
    return OrderedJson::array({OrderedJson(e.witness_a), OrderedJson(e.witness_b)});
}

int cmd_shadow(const std::string& file, int s) {
    const ekr::UniformFamily f = load_family(file);
    std::cout << ekr::to_text(ekr::shadow(f, s));
    return 0;
}

int cmd_verify_katona(const ekr::UniformFamily& f, std::optional<int> b_flag,
                      const std::string& format) {
    const int b = b_flag ? *b_flag : ekr::min_pairwise_intersection(f).value_or(f.k());
    OrderedJson j;
    j["check"] = "katona";
    j["n"] = f.ground_n();
    j["k"] = f.k();
    try {
        const ekr::KatonaReport r = ekr::katona_check(f, b);
        j["valid_input"] = true;
        const OrderedJson rj = ekr::to_json(r);
        for (const auto& [key, value] : rj.items()) j[key] = value;
        emit(j, format);
        return r.holds ? 0 : 1;
    } catch (const ekr::NotBIntersectingError& e) {
        j["valid_input"] = false;
        j["b"] = b;
        j["holds"] = false;
        j["witness_pair"] = witness_pair_json(e);
        emit(j, format);
        return 1;
    }
}

int cmd_verify_ekr(const ekr::UniformFamily& f, int pivot, const std::string& format) {
    OrderedJson j;
    j["check"] = "ekr";
    j["n"] = f.ground_n();
    j["k"] = f.k();
    j["pivot"] = pivot;
    try {
        const ekr::EkrDecomposition d = ekr::decompose(f, pivot);
        const ekr::ChainReport r = ekr::run_chain(d);
        j["valid_input"] = true;
        const OrderedJson rj = ekr::to_json(r);
        for (const auto& [key, value] : rj.items()) j[key] = value;
        emit(j, format);
        const bool ok = r.disjoint && r.katona_step && r.packing_step && r.final_bound;
        return ok ? 0 : 1;
    } catch (const ekr::NotIntersectingError& e) {
        j["valid_input"] = false;
        j["witness_pair"] = witness_pair_json(e);
        emit(j, format);
        return 1;
    }
}

int cmd_verify_frw(const ekr::UniformFamily& f, std::optional<int> s_flag,
                   const std::string& format) {
    const std::set<int> l = ekr::intersection_sizes(f);
    const int s = s_flag ? *s_flag : static_cast<int>(l.size());
    const bool independent = ekr::frw_independence_check(f, s);
    const ekr::InclusionMatrix m =
        ekr::inclusion_matrix(f, ekr::all_k_subsets(f.ground_n(), s));
    OrderedJson j;
    j["check"] = "frw";
    j["n"] = f.ground_n();
    j["k"] = f.k();
    j["s"] = s;
    j["l"] = OrderedJson(std::vector<int>(l.begin(), l.end()));
    j["family_size"] = f.size();
    j["columns"] = m.cols();
    j["rank"] = ekr::exact_rank(m);
    j["independent"] = independent;
    emit(j, format);
    return independent ? 0 : 1;
}

int cmd_verify_rank(const ekr::UniformFamily& f, int pivot, bool dump,
                    const std::string& format) {
    OrderedJson j;
    j["check"] = "rank";
    j["n"] = f.ground_n();
    j["k"] = f.k();
    j["pivot"] = pivot;
    try {
        const ekr::EkrDecomposition d = ekr::decompose(f, pivot);
        if (f.ground_n() < 2 * f.k())
            throw ekr::BoundNotApplicableError("verify rank: requires n >= 2k");
        if (dump) {
            std::cout << ekr::ekr_matrix_dump(d);
            return ekr::ekr_matrix_proof(d) ? 0 : 1;
        }
        const ekr::InclusionMatrix m = ekr::build_ekr_matrix(d);
        const int rank = ekr::exact_rank(m);
        const bool independent = rank == static_cast<int>(m.rows());
        j["valid_input"] = true;
        j["rows"] = m.rows();
        j["columns"] = m.cols();
        j["rank"] = rank;
        j["independent"] = independent;
        j["bound"] = ekr::binom(f.ground_n() - 1, f.k() - 1);
        j["final_bound"] = f.size() <= ekr::binom(f.ground_n() - 1, f.k() - 1);
        emit(j, format);
        return independent ? 0 : 1;
    } catch (const ekr::NotIntersectingError& e) {
        j["valid_input"] = false;
        j["witness_pair"] = witness_pair_json(e);
        emit(j, format);
        return 1;
    }
}

int cmd_verify_poly(const ekr::UniformFamily& f, int pivot, const std::string& format) {
    OrderedJson j;
    j["check"] = "poly";
    j["n"] = f.ground_n();
    j["k"] = f.k();
    j["pivot"] = pivot;
    try {
        const ekr::EkrDecomposition d = ekr::decompose(f, pivot);
        if (f.ground_n() < 2 * f.k())
            throw ekr::BoundNotApplicableError("verify poly: requires n >= 2k");
        const auto coeff = ekr::polynomial_coefficient_matrix(d);
        const ekr::InclusionMatrix incl = ekr::build_ekr_matrix(d);
        bool match = coeff.size() == incl.entries.size();
        for (std::size_t i = 0; match && i < coeff.size(); ++i)
            for (std::size_t c = 0; match && c < coeff[i].size(); ++c)
                match = coeff[i][c] == incl.entries[i][c];
        const int rank = ekr::exact_rank(coeff);
        const bool independent = rank == static_cast<int>(f.size());
        j["valid_input"] = true;
        j["rows"] = coeff.size();
        j["columns"] = coeff.empty() ? incl.cols() : coeff[0].size();
        j["rank"] = rank;
        j["independent"] = independent;
        j["matches_inclusion_matrix"] = match;
        emit(j, format);
        return independent && match ? 0 : 1;
    } catch (const ekr::NotIntersectingError& e) {
        j["valid_input"] = false;
        j["witness_pair"] = witness_pair_json(e);
        emit(j, format);
        return 1;
    }
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ekr::ParseError("bad range \"" + text + "\" (expected A or A:B)");
    }
}

std::set<ekr::SweepCheck> parse_checks(const std::string& text) {
    std::set<ekr::SweepCheck> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (item == "katona") out.insert(ekr::SweepCheck::katona);
        else if (item == "chain") out.insert(ekr::SweepCheck::chain);
        else if (item == "matrix") out.insert(ekr::SweepCheck::matrix);
        else if (item == "polynomial" || item == "poly") out.insert(ekr::SweepCheck::polynomial);
        else if (item == "oracle") out.insert(ekr::SweepCheck::oracle);
        else throw ekr::ParseError("unknown check \"" + item + "\"");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_pivots(const std::string& text) {
    if (text == "all") return {};
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ekr::ParseError("bad pivot list entry \"" + item + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for intersecting-family theorems"};
    app.require_subcommand(1);

    // shadow
    auto* shadow_cmd = app.add_subcommand("shadow", "s-shadow of a family file");
    std::string shadow_file;
    int shadow_s = 0;
    shadow_cmd->add_option("file", shadow_file, "family file (- for stdin)")->required();
    shadow_cmd->add_option("--s", shadow_s, "shadow uniformity")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run one verification");
    std::string verify_kind, verify_file, verify_format = "json";
    std::optional<int> verify_b, verify_s;
    int verify_pivot = 1;
    bool verify_dump = false;
    verify_cmd->add_option("kind", verify_kind, "katona|ekr|frw|rank|poly")
        ->required()
        ->check(CLI::IsMember({"katona", "ekr", "frw", "rank", "poly"}));
    verify_cmd->add_option("file", verify_file, "family file (- for stdin)")->required();
    verify_cmd->add_option("--b", verify_b, "asserted intersection lower bound (katona)");
    verify_cmd->add_option("--s", verify_s, "incidence order (frw)");
    verify_cmd->add_option("--pivot", verify_pivot, "pivot element (default 1)");
    verify_cmd->add_option("--format", verify_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_flag("--dump", verify_dump, "print the matrix dump (rank)");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "grid of verifications, CSV output");
    std::string sweep_n = "4:8", sweep_k = "2:3", sweep_pivots = "all",
                sweep_checks = "chain";
    int sweep_samples = 5;
    std::uint64_t sweep_seed = 0, sweep_max_binom = 40;
    sweep_cmd->add_option("--n", sweep_n, "n range A:B (default 4:8)");
    sweep_cmd->add_option("--k", sweep_k, "k range A:B (default 2:3)");
    sweep_cmd->add_option("--pivots", sweep_pivots, "all or comma list (default all)");
    sweep_cmd->add_option("--samples", sweep_samples, "families per cell (default 5)");
    sweep_cmd->add_option("--seed", sweep_seed, "base seed (default 0)");
    sweep_cmd->add_option("--checks", sweep_checks,
                          "subset of katona,chain,matrix,polynomial,oracle");
    sweep_cmd->add_option("--max-binom", sweep_max_binom, "oracle scale guard (default 40)");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force maximum family size");
    int oracle_n = 0, oracle_k = 0;
    std::optional<int> oracle_t;
    std::uint64_t oracle_max_binom = 40, oracle_count_limit = 25;
    oracle_cmd->add_option("n", oracle_n, "ground set size")->required();
    oracle_cmd->add_option("k", oracle_k, "uniformity")->required();
    oracle_cmd->add_option("t", oracle_t, "intersection threshold (default 1)");
    oracle_cmd->add_option("--max-binom", oracle_max_binom, "scale guard (default 40)");
    oracle_cmd->add_option("--count-limit", oracle_count_limit,
                           "enumerate maximum families when C(n,k) <= this (default 25)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (shadow_cmd->parsed()) return cmd_shadow(shadow_file, shadow_s);
        if (verify_cmd->parsed()) {
            const ekr::UniformFamily f = load_family(verify_file);
            if (verify_kind == "katona") return cmd_verify_katona(f, verify_b, verify_format);
            if (verify_kind == "ekr") return cmd_verify_ekr(f, verify_pivot, verify_format);
            if (verify_kind == "frw") return cmd_verify_frw(f, verify_s, verify_format);
            if (verify_kind == "rank")
                return cmd_verify_rank(f, verify_pivot, verify_dump, verify_format);
            return cmd_verify_poly(f, verify_pivot, verify_format);
        }
        if (sweep_cmd->parsed()) {
            ekr::SweepSpec spec;
            std::tie(spec.n_min, spec.n_max) = parse_range(sweep_n);
            std::tie(spec.k_min, spec.k_max) = parse_range(sweep_k);
            spec.pivots = parse_pivots(sweep_pivots);
            spec.samples_per_cell = sweep_samples;
            spec.seed = sweep_seed;
            spec.checks = parse_checks(sweep_checks);
            spec.max_binom = sweep_max_binom;
            const ekr::SweepOutcome outcome = ekr::run_sweep(spec, std::cout);
            if (outcome.guard_error) {
                std::cerr << "error: " << outcome.guard_message << "\n";
                return 2;
            }
            return outcome.violations > 0 ? 1 : 0;
        }
        // oracle
        ekr::OracleOptions opts;
        opts.max_binom = oracle_max_binom;
        opts.count_limit = oracle_count_limit;
        const ekr::OracleResult r =
            oracle_t ? ekr::max_t_intersecting_bruteforce(oracle_n, oracle_k, *oracle_t, opts)
                     : ekr::max_intersecting_bruteforce(oracle_n, oracle_k, opts);
        std::cout << ekr::render_json(ekr::to_json(r));
        return 0;
    } catch (const ekr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
