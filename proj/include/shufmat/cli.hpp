#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shufmat/fft.hpp"
#include "shufmat/group.hpp"
#include "shufmat/io.hpp"
#include "shufmat/omega.hpp"
#include "shufmat/rearrange.hpp"
#include "shufmat/shuffling.hpp"

namespace shufmat::cli {

namespace detail {

inline std::int64_t env_limit(const char* name, std::int64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    const auto value = std::strtoll(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1)
        throw std::invalid_argument(std::string("invalid value in ") + name + ": " + raw);
    return value;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("invalid ") + what + " list entry: \"" + item +
                                        "\"");
        }
    }
    if (values.empty()) throw std::invalid_argument(std::string("empty ") + what + " list");
    return values;
}

inline std::string join(const std::vector<std::int64_t>& xs, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline void print_permutation(std::ostream& out, const Permutation& p, const std::string& format) {
    if (format == "cycles") {
        out << cycles(p).str() << '\n';
    } else if (format == "oneline") {
        out << join(p.images()) << '\n';
    } else if (format == "json") {
        out << permutation_json(p).dump() << '\n';
    } else {
        out << join(horizontal(p)) << '\n';
    }
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return in;
}

inline std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

} // namespace detail

/// Runs one subcommand. Returns 0 on success (or a verified identity), 1 on
/// a verification failure, 2 on usage errors, malformed inputs or file I/O
/// failures. args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shuffling permutations, Kronecker rearrangement and transform factorizations"};
    app.name("shufmat");
    app.require_subcommand(1);

    int exit_code = 0;

    std::int64_t max_n = 0, oracle_limit = 0, group_limit = 0;
    try {
        max_n = detail::env_limit("SHUFMAT_MAX_N", default_total_limit);
        oracle_limit = detail::env_limit("SHUFMAT_ORACLE_LIMIT", default_oracle_limit);
        group_limit = detail::env_limit("SHUFMAT_GROUP_LIMIT", default_group_limit);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const auto format_check = CLI::IsMember({"horizontal", "cycles", "oneline", "json"});

    std::string branch_text, sigma_text, format = "horizontal";
    auto parse_basis = [&] {
        return BranchIndices(detail::parse_int_list(branch_text, "branch"), max_n);
    };
    auto parse_sigma = [&](std::size_t m) {
        return parse_cycles(sigma_text, static_cast<std::int64_t>(m), /*one_based=*/true);
    };

    // shuffle
    auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffling permutation for branch indices and sigma");
    shuffle_cmd->add_option("--branch", branch_text, "comma list of branch indices, e.g. 2,2,3")->required();
    shuffle_cmd->add_option("--sigma", sigma_text, "1-based cycle string, e.g. \"(1 3)\"")->required();
    shuffle_cmd->add_option("--format", format, "horizontal|cycles|oneline|json")->check(format_check);
    shuffle_cmd->callback([&] {
        const auto basis = parse_basis();
        const auto p = shuffle_perm(ShuffleSpec(basis, parse_sigma(basis.size())));
        detail::print_permutation(out, p, format);
    });

    // perfect
    auto* perfect_cmd = app.add_subcommand("perfect", "perfect shuffle for branch indices");
    perfect_cmd->add_option("--branch", branch_text, "comma list of branch indices")->required();
    perfect_cmd->add_option("--format", format, "horizontal|cycles|oneline|json")->check(format_check);
    perfect_cmd->callback([&] {
        detail::print_permutation(out, perfect_shuffle(parse_basis()), format);
    });

    // shk
    std::int64_t shk_n = 0, shk_k = 0;
    auto* shk_cmd = app.add_subcommand("shk", "step-k shuffle on n points");
    shk_cmd->add_option("--n", shk_n, "number of points")->required();
    shk_cmd->add_option("--k", shk_k, "step, coprime to n-1")->required();
    shk_cmd->add_option("--format", format, "horizontal|cycles|oneline|json")->check(format_check);
    shk_cmd->callback([&] { detail::print_permutation(out, sh_k(shk_n, shk_k), format); });

    // fixed-points
    auto* fixed_cmd = app.add_subcommand(
        "fixed-points", "fixed points of one shuffle, or of all shuffles when --sigma is omitted");
    fixed_cmd->add_option("--branch", branch_text, "comma list of branch indices")->required();
    auto* fixed_sigma_opt = fixed_cmd->add_option("--sigma", sigma_text, "1-based cycle string");
    fixed_cmd->callback([&] {
        const auto basis = parse_basis();
        const auto fixed = fixed_sigma_opt->count()
                               ? fixed_points(shuffle_perm(ShuffleSpec(basis, parse_sigma(basis.size()))))
                               : common_fixed(basis);
        out << detail::join(fixed) << '\n';
    });

    // group
    std::string dump_path;
    auto* group_cmd = app.add_subcommand("group", "group generated by all shuffles of the basis");
    group_cmd->add_option("--branch", branch_text, "comma list of branch indices")->required();
    group_cmd->add_option("--limit", group_limit, "element limit for the closure");
    group_cmd->add_option("--dump", dump_path, "write all elements as JSON lines of image tables");
    group_cmd->callback([&] {
        const auto g = k_group(parse_basis(), group_limit);
        out << "order=" << g.order() << " abelian=" << (g.abelian() ? "true" : "false")
            << " generators=" << g.generators.size() << '\n';
        if (!dump_path.empty()) {
            auto file = detail::open_output(dump_path);
            for (const auto& e : g.elements) file << nlohmann::json(e.images()).dump() << '\n';
        }
    });

    // gsh
    std::int64_t gsh_n = 0;
    auto* gsh_cmd = app.add_subcommand("gsh", "group generated by the step-k shuffles on n points");
    gsh_cmd->add_option("--n", gsh_n, "number of points")->required();
    gsh_cmd->add_option("--limit", group_limit, "element limit for the closure");
    gsh_cmd->callback([&] {
        const auto g = gsh_group(gsh_n, group_limit);
        const auto phi = totient(gsh_n - 1);
        out << "order=" << g.order() << " phi=" << phi << '\n';
        if (g.order() != phi) exit_code = 1;
    });

    // rearrange
    std::string factors_text, out_path;
    auto* rearrange_cmd = app.add_subcommand("rearrange", "reorder the factors of a Kronecker product");
    rearrange_cmd->add_option("--factors", factors_text, "comma list of matrix JSON files")->required();
    rearrange_cmd->add_option("--sigma", sigma_text, "1-based cycle string over factor positions")->required();
    rearrange_cmd->add_option("--out", out_path, "output matrix JSON file (default stdout)");
    rearrange_cmd->callback([&] {
        std::vector<IntMatrix> ms;
        std::stringstream ss(factors_text);
        std::string path;
        while (std::getline(ss, path, ',')) {
            auto file = detail::open_input(path);
            ms.push_back(read_int_matrix_json(file));
        }
        const FactorList factors(std::move(ms));
        const auto result = rearrange_kron(factors, parse_sigma(factors.size()), max_n);
        if (out_path.empty()) {
            write_matrix_json(out, result);
        } else {
            auto file = detail::open_output(out_path);
            write_matrix_json(file, result);
        }
    });

    // dft-check
    auto* dft_cmd = app.add_subcommand(
        "dft-check", "verify the block factorization of the transform matrix, exactly");
    dft_cmd->add_option("--branch", branch_text, "comma list of branch indices")->required();
    dft_cmd->add_option("--sigma", sigma_text, "1-based cycle string")->required();
    dft_cmd->add_option("--limit", oracle_limit, "largest N checked");
    dft_cmd->callback([&] {
        const auto basis = parse_basis();
        const ShuffleSpec spec(basis, parse_sigma(basis.size()));
        const auto n_m = basis[basis.size() - 1];
        const bool ok = verify_factorization(spec, oracle_limit);
        out << (ok ? "ok" : "mismatch") << " N=" << basis.total() << " blocks=" << n_m << 'x' << n_m
            << " block_size=" << basis.total() / n_m << '\n';
        if (!ok) exit_code = 1;
    });

    // radix-check
    std::int64_t radix_r = 0, radix_s = 0;
    auto* radix_cmd = app.add_subcommand("radix-check", "verify the general radix identity, exactly");
    radix_cmd->add_option("--r", radix_r, "first factor")->required();
    radix_cmd->add_option("--s", radix_s, "second factor")->required();
    radix_cmd->callback([&] {
        const bool ok = radix_identity_check(radix_r, radix_s);
        out << (ok ? "ok" : "mismatch") << " n=" << radix_r * radix_s << " r=" << radix_r
            << " s=" << radix_s << '\n';
        if (!ok) exit_code = 1;
    });

    // fft
    std::string input_path, output_path;
    std::int64_t fft_n = 0;
    double tol = 0.0;
    bool bench = false;
    auto* fft_cmd = app.add_subcommand("fft", "factored transform of a CSV vector");
    fft_cmd->add_option("--input", input_path, "CSV file, one \"re,im\" line per entry")->required();
    fft_cmd->add_option("--n", fft_n, "expected length (default: input length)");
    fft_cmd->add_option("--factors", factors_text, "comma list of plan factors (default: prime factors)");
    fft_cmd->add_option("--output", output_path, "output CSV file (default stdout)");
    fft_cmd->add_option("--tol", tol, "error budget for --bench (default 1e-9 * n)");
    fft_cmd->add_flag("--bench", bench, "time the plan against the direct transform");
    fft_cmd->callback([&] {
        auto file = detail::open_input(input_path);
        const auto x = read_vector_csv(file);
        const auto n = static_cast<std::int64_t>(x.size());
        if (fft_n != 0 && fft_n != n)
            throw std::invalid_argument("--n is " + std::to_string(fft_n) + " but input has " +
                                        std::to_string(n) + " entries");
        const auto factors =
            factors_text.empty() ? default_factorization(n) : detail::parse_int_list(factors_text, "factor");
        const auto plan = fft_plan(n, factors);
        if (bench) {
            using clock = std::chrono::steady_clock;
            const auto t0 = clock::now();
            const auto reference = naive_dft(x);
            const auto t1 = clock::now();
            std::uint64_t mul_adds = 0;
            ComplexVector y;
            for (int rep = 0; rep < 3; ++rep) y = fft(x, plan, &mul_adds);
            const auto t2 = clock::now();
            const double naive_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            const double fft_ms = std::chrono::duration<double, std::milli>(t2 - t1).count() / 3.0;
            double max_err = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i)
                max_err = std::max(max_err, std::abs(y[i] - reference[i]));
            const double budget = tol > 0.0 ? tol : 1e-9 * static_cast<double>(n);
            char line[256];
            std::snprintf(line, sizeof(line),
                          "n=%lld factors=%s naive_ms=%.3f fft_ms=%.3f speedup=%.1f max_err=%.3g "
                          "tol=%.3g mul_adds=%llu\n",
                          static_cast<long long>(n), detail::join(factors, ',').c_str(), naive_ms,
                          fft_ms, naive_ms / fft_ms, max_err, budget,
                          static_cast<unsigned long long>(mul_adds));
            out << line;
            if (max_err > budget) exit_code = 1;
        } else {
            const auto y = fft(x, plan);
            if (output_path.empty()) {
                write_vector_csv(out, y);
            } else {
                auto file_out = detail::open_output(output_path);
                write_vector_csv(file_out, y);
            }
        }
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}

} // namespace shufmat::cli
