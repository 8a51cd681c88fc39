// grex — exact Ext^1 dimensions and compatibility for rank-1 modules over
// C[x,y]/(x^k), with a matrix-factorization oracle, staircase-grid
// rendering, Plücker relation checks, and batch verification.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grex/ext.hpp"
#include "grex/json_io.hpp"
#include "grex/mf_oracle.hpp"
#include "grex/plucker.hpp"
#include "grex/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

const char* kUsage = R"(usage: grex <command> [args]

commands:
  ext <l> <m> [--oracle] [--json]
      Ext^1 dimension and compatibility for two k-subsets, given as
      comma-separated integers, e.g. `grex ext -2,0,2 -1,2,3 --oracle`.
  grid <l> <m> [--flavor A|B] [--json]
      Render the crossing grid with its alpha/beta statistics.
  verify --k K --lo LO --hi HI [--sample N] [--seed S] [--cap C]
      Run the closed formula against the matrix-factorization oracle on all
      (or N sampled) ordered pairs of k-subsets of {LO,...,HI}. Prints a
      JSON summary; exits 1 on any mismatch.
  enumerate --k K --lo LO --hi HI [--cap C] [--json]
      List all maximal collections of pairwise-noncrossing k-subsets.
  plucker-verify <matrix.csv> <jprime> <jbig> [--json]
      Check the Plücker relation indexed by J' and J on an exact rational
      matrix (CSV: header row of column labels, entries like `3` or `-1/2`).

exit codes: 0 ok, 1 verified property failed, 2 usage or input error.
)";

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> values;
    std::set<std::string> switches;
};

Args parse_args(int argc, char** argv, int start, const std::set<std::string>& value_flags,
                const std::set<std::string>& bool_flags) {
    Args args;
    for (int i = start; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--", 0) != 0) {
            args.positional.push_back(std::move(arg));
            continue;
        }
        std::string key = arg;
        std::optional<std::string> inline_value;
        if (auto eq = arg.find('='); eq != std::string::npos) {
            key = arg.substr(0, eq);
            inline_value = arg.substr(eq + 1);
        }
        if (bool_flags.count(key)) {
            if (inline_value) grex::fail(grex::errc::parse_error, key + " takes no value");
            args.switches.insert(key);
        } else if (value_flags.count(key)) {
            if (inline_value) {
                args.values[key] = *inline_value;
            } else if (i + 1 < argc) {
                args.values[key] = argv[++i];
            } else {
                grex::fail(grex::errc::parse_error, key + " needs a value");
            }
        } else {
            grex::fail(grex::errc::parse_error, "unknown option " + key);
        }
    }
    return args;
}

grex::Int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        grex::fail(grex::errc::parse_error, "bad integer '" + text + "' for " + what);
    }
}

grex::Int require_int(const Args& args, const std::string& key) {
    auto it = args.values.find(key);
    if (it == args.values.end()) grex::fail(grex::errc::parse_error, key + " is required");
    return parse_int(it->second, key);
}

std::pair<grex::KSubset, grex::KSubset> parse_pair(const Args& args) {
    if (args.positional.size() != 2) {
        grex::fail(grex::errc::parse_error, "expected exactly two k-subset arguments");
    }
    grex::KSubset l = grex::KSubset::parse(args.positional[0]);
    grex::KSubset m = grex::KSubset::parse(args.positional[1]);
    if (l.k() != m.k()) {
        grex::fail(grex::errc::mismatched_k, "cardinalities differ: " + std::to_string(l.k()) +
                                                 " vs " + std::to_string(m.k()));
    }
    return {std::move(l), std::move(m)};
}

int cmd_ext(const Args& args) {
    const auto [l, m] = parse_pair(args);
    const grex::ExtReport report = grex::make_report(l, m, args.switches.count("--oracle") > 0);
    if (args.switches.count("--json")) {
        std::cout << grex::to_json(report).dump() << '\n';
    } else {
        std::cout << "k: " << report.k << '\n'
                  << "l: " << report.l.to_string() << '\n'
                  << "m: " << report.m.to_string() << '\n'
                  << "I(l): " << grex::ideal_from_subset(report.l).to_string() << '\n'
                  << "I(m): " << grex::ideal_from_subset(report.m).to_string() << '\n'
                  << "alpha: " << report.alpha << '\n'
                  << "beta: " << report.beta << '\n'
                  << "intersection: " << report.intersection << '\n'
                  << "ext_dim: " << report.ext_dim << '\n'
                  << "compatible: " << (report.compatible ? "true" : "false") << '\n';
        if (report.oracle_dim) std::cout << "oracle_dim: " << *report.oracle_dim << '\n';
    }
    if (report.oracle_dim && *report.oracle_dim != report.ext_dim) {
        std::cerr << "oracle disagrees with the formula: " << *report.oracle_dim << " vs "
                  << report.ext_dim << '\n';
        return kExitPropertyFailure;
    }
    return kExitOk;
}

int cmd_grid(const Args& args) {
    const auto [l, m] = parse_pair(args);
    std::string flavor = "A";
    if (auto it = args.values.find("--flavor"); it != args.values.end()) flavor = it->second;
    grex::CrossingGrid grid = [&] {
        if (flavor == "A") return grex::grid_A(l, m);
        if (flavor == "B") return grex::grid_B(l, m);
        grex::fail(grex::errc::parse_error, "flavor must be A or B, got '" + flavor + "'");
    }();
    const int a = grex::alpha(l, m);
    const int b = grex::beta(l, m);
    if (args.switches.count("--json")) {
        nlohmann::json out = grex::to_json(grid);
        out["alpha"] = a;
        out["beta"] = b;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << grex::render_grid(grid) << '\n'
                  << "alpha=" << a << " beta=" << b << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Args& args) {
    if (!args.positional.empty()) {
        grex::fail(grex::errc::parse_error, "verify takes only flags");
    }
    const int k = static_cast<int>(require_int(args, "--k"));
    const grex::Int lo = require_int(args, "--lo");
    const grex::Int hi = require_int(args, "--hi");
    grex::VerifyOptions options;
    if (auto it = args.values.find("--sample"); it != args.values.end()) {
        options.sample = static_cast<std::uint64_t>(parse_int(it->second, "--sample"));
    }
    if (auto it = args.values.find("--seed"); it != args.values.end()) {
        options.seed = static_cast<std::uint64_t>(parse_int(it->second, "--seed"));
    }
    if (auto it = args.values.find("--cap"); it != args.values.end()) {
        options.cap = static_cast<std::uint64_t>(parse_int(it->second, "--cap"));
    }
    const grex::VerificationSummary summary = grex::verify_window(k, lo, hi, options);
    std::cout << grex::to_json(summary).dump() << '\n';
    return summary.passed() ? kExitOk : kExitPropertyFailure;
}

int cmd_enumerate(const Args& args) {
    if (!args.positional.empty()) {
        grex::fail(grex::errc::parse_error, "enumerate takes only flags");
    }
    const int k = static_cast<int>(require_int(args, "--k"));
    const grex::Int lo = require_int(args, "--lo");
    const grex::Int hi = require_int(args, "--hi");
    std::uint64_t cap = 64;
    if (auto it = args.values.find("--cap"); it != args.values.end()) {
        cap = static_cast<std::uint64_t>(parse_int(it->second, "--cap"));
    }
    const auto collections = grex::maximal_noncrossing(k, lo, hi, cap);
    if (args.switches.count("--json")) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& collection : collections) {
            nlohmann::json one = nlohmann::json::array();
            for (const grex::KSubset& s : collection) one.push_back(s.elements());
            list.push_back(std::move(one));
        }
        std::cout << nlohmann::json{{"k", k},
                                    {"window", {lo, hi}},
                                    {"count", collections.size()},
                                    {"collections", list}}
                         .dump()
                  << '\n';
    } else {
        std::cout << collections.size() << " maximal noncrossing collections\n";
        for (const auto& collection : collections) {
            for (std::size_t i = 0; i < collection.size(); ++i) {
                std::cout << (i ? "; " : "") << collection[i].to_string();
            }
            std::cout << '\n';
        }
    }
    return kExitOk;
}

// CSV with a header row of integer column labels; entries are exact
// rationals, "p" or "p/q".
std::pair<grex::RationalMatrix, std::vector<grex::Int>> read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) grex::fail(grex::errc::parse_error, "cannot open matrix file '" + path + "'");
    std::vector<std::vector<std::string>> cells;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t'))
                tok.erase(tok.begin());
            while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' ||
                                    tok.back() == '\r'))
                tok.pop_back();
            row.push_back(tok);
        }
        cells.push_back(std::move(row));
    }
    if (cells.size() < 2) {
        grex::fail(grex::errc::parse_error, "matrix file needs a header row and data rows");
    }
    std::vector<grex::Int> columns;
    for (const std::string& label : cells[0]) columns.push_back(parse_int(label, "column label"));
    grex::RationalMatrix mat(cells.size() - 1, columns.size());
    for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].size() != columns.size()) {
            grex::fail(grex::errc::parse_error,
                       "row " + std::to_string(i) + " has " + std::to_string(cells[i].size()) +
                           " entries, expected " + std::to_string(columns.size()));
        }
        for (std::size_t j = 0; j < columns.size(); ++j) {
            try {
                mat.at(i - 1, j) = grex::BigRational(cells[i][j]);
            } catch (const std::exception&) {
                grex::fail(grex::errc::parse_error,
                           "bad rational '" + cells[i][j] + "' in matrix file");
            }
        }
    }
    return {std::move(mat), std::move(columns)};
}

std::vector<grex::Int> parse_index_list(const std::string& text) {
    std::vector<grex::Int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok, "index list"));
    if (out.empty()) grex::fail(grex::errc::parse_error, "empty index list");
    return out;
}

int cmd_plucker_verify(const Args& args) {
    if (args.positional.size() != 3) {
        grex::fail(grex::errc::parse_error,
                   "expected <matrix.csv> <jprime> <jbig>, got " +
                       std::to_string(args.positional.size()) + " arguments");
    }
    auto [mat, columns] = read_matrix_csv(args.positional[0]);
    const grex::PluckerRelation rel = grex::plucker_relation(
        parse_index_list(args.positional[1]), parse_index_list(args.positional[2]));
    if (static_cast<std::size_t>(rel.k) != mat.rows()) {
        grex::fail(grex::errc::bad_cardinality,
                   "relation has k=" + std::to_string(rel.k) + " but the matrix has " +
                       std::to_string(mat.rows()) + " rows");
    }
    const bool holds = grex::verify_relation(mat, columns, rel);
    if (args.switches.count("--json")) {
        std::cout << nlohmann::json{{"k", rel.k}, {"holds", holds}}.dump() << '\n';
    } else {
        std::cout << "relation holds: " << (holds ? "true" : "false") << '\n';
    }
    return holds ? kExitOk : kExitPropertyFailure;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << kUsage;
        return kExitUsage;
    }
    const std::string command = argv[1];
    if (command == "--help" || command == "help") {
        std::cout << kUsage;
        return kExitOk;
    }
    try {
        if (command == "ext") {
            return cmd_ext(parse_args(argc, argv, 2, {}, {"--json", "--oracle"}));
        }
        if (command == "grid") {
            return cmd_grid(parse_args(argc, argv, 2, {"--flavor"}, {"--json"}));
        }
        if (command == "verify") {
            return cmd_verify(parse_args(argc, argv, 2,
                                         {"--k", "--lo", "--hi", "--sample", "--seed", "--cap"},
                                         {"--json"}));
        }
        if (command == "enumerate") {
            return cmd_enumerate(
                parse_args(argc, argv, 2, {"--k", "--lo", "--hi", "--cap"}, {"--json"}));
        }
        if (command == "plucker-verify") {
            return cmd_plucker_verify(parse_args(argc, argv, 2, {}, {"--json"}));
        }
        std::cerr << "unknown command '" << command << "'\n" << kUsage;
        return kExitUsage;
    } catch (const grex::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitUsage;
    }
}
