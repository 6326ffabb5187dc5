// Command-line front end: compute the wall-tableau / staircase-path
// counting sequences by any of the independent methods, cross-validate
// them against each other, and export b-files or JSON.

#include "wallcount/counting.hpp"
#include "wallcount/genfun.hpp"
#include "wallcount/paths.hpp"
#include "wallcount/tableaux.hpp"
#include "wallcount/tutte.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using wallcount::Int;

struct SequenceOptions {
    std::string family;
    long m = 2;
    long k = 1;
    long l = 1;
    long r = 1;
    long n_max = 8;
    std::string method = "genfun";
    std::string format = "table";
    long offset = 0;
};

struct CrosscheckOptions {
    std::string family;
    long max_m = 3;
    long max_k = 3;
    long max_l = 3;
    long n_max = 3;
    std::vector<std::string> methods;
    long corrupt = -1;
};

struct IdentityOptions {
    std::string only; // empty = all
    long max_k = 3;
    long max_l = 3;
    long order = 6;
    long bound = 8;
    long max_len = 8;
    long m = 5;
};

struct TableauxOptions {
    long m = 2;
    std::vector<long> walls;
    bool periodic = false;
    long n = 1;
};

const std::vector<std::string> kFbarMethods = {"tableaux",  "dp",     "determinant",
                                               "recursion", "genfun", "multisection"};
const std::vector<std::string> kPathMethods = {"dp", "genfun"};

bool method_known(const std::string& family, const std::string& method) {
    const auto& pool = (family == "fbar") ? kFbarMethods : kPathMethods;
    for (const auto& m : pool)
        if (m == method)
            return true;
    return false;
}

// A method can be valid for the family yet not defined at a given cell
// (recursion needs m >= 2, enumeration respects the width guard).
bool method_applicable(const std::string& family, const std::string& method, long m, long n) {
    if (family != "fbar")
        return true;
    if (method == "recursion")
        return m >= 2;
    if (method == "tableaux")
        return m * n <= wallcount::enumeration_guard();
    return true;
}

Int compute_fbar(const std::string& method, long m, long n,
                 std::map<std::pair<std::string, long>, wallcount::TruncatedSeries>& cache,
                 long n_max) {
    if (method == "tableaux")
        return Int(static_cast<long>(
            wallcount::enumerate_tableaux(wallcount::periodic_building(m, n)).size()));
    if (n == 0)
        return 1; // empty product of blocks, one empty filling
    if (method == "dp")
        return wallcount::fbar_path_count(m, n);
    if (method == "determinant")
        return wallcount::fbar_determinant(m, n);
    if (method == "recursion")
        return wallcount::recursion_fbar(m, n);
    auto key = std::make_pair(method, m);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto series = (method == "multisection") ? wallcount::fbar_series_multisection(m, n_max)
                                                 : wallcount::fbar_series_exp(m, n_max);
        it = cache.emplace(key, std::move(series)).first;
    }
    return it->second.integer_coeff(n);
}

std::vector<Int> sequence_values(const SequenceOptions& opt) {
    std::vector<Int> values;
    values.reserve(static_cast<std::size_t>(opt.n_max) + 1);
    if (opt.family == "fbar") {
        std::map<std::pair<std::string, long>, wallcount::TruncatedSeries> cache;
        for (long n = 0; n <= opt.n_max; ++n)
            values.push_back(compute_fbar(opt.method, opt.m, n, cache, opt.n_max));
        return values;
    }
    if (opt.family == "q") {
        if (opt.method == "dp") {
            for (long n = 0; n <= opt.n_max; ++n)
                values.push_back(wallcount::q_count(opt.k, opt.l, n));
        } else {
            auto series = wallcount::q_series_exp(opt.k, opt.l, opt.n_max);
            for (long n = 0; n <= opt.n_max; ++n)
                values.push_back(series.integer_coeff(n));
        }
        return values;
    }
    // fr
    if (opt.method == "dp") {
        for (long n = 0; n <= opt.n_max; ++n)
            values.push_back(wallcount::f_r_count(opt.k, opt.l, opt.r, n));
    } else {
        auto series = wallcount::f_r_series(opt.k, opt.l, opt.r, opt.n_max);
        for (long n = 0; n <= opt.n_max; ++n)
            values.push_back(series.integer_coeff(n));
    }
    return values;
}

std::string params_string(const SequenceOptions& opt) {
    if (opt.family == "fbar")
        return "m=" + std::to_string(opt.m);
    std::string s = "k=" + std::to_string(opt.k) + " l=" + std::to_string(opt.l);
    if (opt.family == "fr")
        s += " r=" + std::to_string(opt.r);
    return s;
}

int run_sequence(const SequenceOptions& opt) {
    if (!method_known(opt.family, opt.method)) {
        std::cerr << "error: method '" << opt.method << "' is not available for family '"
                  << opt.family << "'\n";
        return 2;
    }
    if (opt.family == "fbar" && !method_applicable(opt.family, opt.method, opt.m, opt.n_max)) {
        std::cerr << "error: method '" << opt.method << "' is not defined for m="
                  << std::to_string(opt.m) << " up to n=" << std::to_string(opt.n_max) << "\n";
        return 2;
    }
    std::vector<Int> values = sequence_values(opt);
    if (opt.format == "json") {
        nlohmann::json params;
        if (opt.family == "fbar") {
            params["m"] = opt.m;
        } else {
            params["k"] = opt.k;
            params["l"] = opt.l;
            if (opt.family == "fr")
                params["r"] = opt.r;
        }
        nlohmann::json vals = nlohmann::json::array();
        for (const Int& v : values)
            vals.push_back(wallcount::decimal(v));
        nlohmann::json j{{"family", opt.family},
                         {"params", params},
                         {"method", opt.method},
                         {"values", vals}};
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (opt.format == "table")
        std::cout << "# family=" << opt.family << " " << params_string(opt)
                  << " method=" << opt.method << "\n";
    for (long n = 0; n <= opt.n_max; ++n)
        std::cout << (n + opt.offset) << " "
                  << wallcount::decimal(values[static_cast<std::size_t>(n)]) << "\n";
    return 0;
}

struct Cell {
    std::string label;
    std::vector<std::optional<Int>> values; // one slot per requested method
};

int run_crosscheck(const CrosscheckOptions& opt) {
    std::vector<std::string> methods = opt.methods;
    if (methods.empty())
        methods = (opt.family == "fbar") ? kFbarMethods : kPathMethods;
    for (const auto& m : methods) {
        if (!method_known(opt.family, m)) {
            std::cerr << "error: method '" << m << "' is not available for family '"
                      << opt.family << "'\n";
            return 2;
        }
    }

    std::vector<Cell> cells;
    std::map<std::pair<std::string, long>, wallcount::TruncatedSeries> fbar_cache;
    if (opt.family == "fbar") {
        for (long m = 1; m <= opt.max_m; ++m)
            for (long n = 0; n <= opt.n_max; ++n) {
                Cell cell;
                cell.label = "m=" + std::to_string(m) + " n=" + std::to_string(n);
                for (const auto& method : methods) {
                    if (!method_applicable(opt.family, method, m, n))
                        cell.values.emplace_back(std::nullopt);
                    else
                        cell.values.emplace_back(
                            compute_fbar(method, m, n, fbar_cache, opt.n_max));
                }
                cells.push_back(std::move(cell));
            }
    } else {
        for (long k = 1; k <= opt.max_k; ++k)
            for (long l = 1; l <= opt.max_l; ++l) {
                long r_hi = (opt.family == "fr") ? l : 1;
                for (long r = 1; r <= r_hi; ++r) {
                    SequenceOptions sopt;
                    sopt.family = opt.family;
                    sopt.k = k;
                    sopt.l = l;
                    sopt.r = r;
                    sopt.n_max = opt.n_max;
                    std::vector<std::vector<Int>> columns;
                    for (const auto& method : methods) {
                        sopt.method = method;
                        columns.push_back(sequence_values(sopt));
                    }
                    for (long n = 0; n <= opt.n_max; ++n) {
                        Cell cell;
                        cell.label = "k=" + std::to_string(k) + " l=" + std::to_string(l) +
                                     (opt.family == "fr" ? " r=" + std::to_string(r) : "") +
                                     " n=" + std::to_string(n);
                        for (std::size_t c = 0; c < methods.size(); ++c)
                            cell.values.emplace_back(columns[c][static_cast<std::size_t>(n)]);
                        cells.push_back(std::move(cell));
                    }
                }
            }
    }

    if (opt.corrupt >= 0 && opt.corrupt < static_cast<long>(cells.size())) {
        auto& slot = cells[static_cast<std::size_t>(opt.corrupt)].values.front();
        if (slot)
            *slot += 1;
    }

    std::cout << "# crosscheck family=" << opt.family << " methods=";
    for (std::size_t i = 0; i < methods.size(); ++i)
        std::cout << (i ? "," : "") << methods[i];
    std::cout << "\n";

    std::optional<std::string> first_bad;
    for (const auto& cell : cells) {
        std::optional<Int> reference;
        bool ok = true;
        for (const auto& v : cell.values) {
            if (!v)
                continue;
            if (!reference)
                reference = v;
            else if (*reference != *v)
                ok = false;
        }
        std::cout << cell.label << ":";
        for (const auto& v : cell.values)
            std::cout << " " << (v ? wallcount::decimal(*v) : std::string("-"));
        std::cout << (ok ? "  ok" : "  MISMATCH") << "\n";
        if (!ok && !first_bad)
            first_bad = cell.label;
    }
    if (first_bad) {
        std::cout << "first mismatch at " << *first_bad << "\n";
        return 1;
    }
    std::cout << "all agree: " << cells.size() << " cells x " << methods.size()
              << " methods\n";
    return 0;
}

int run_identities(const IdentityOptions& opt) {
    bool all = opt.only.empty();
    bool ok = true;
    auto report = [&](bool pass, const std::string& line) {
        std::cout << (pass ? "PASS " : "FAIL ") << line << "\n";
        ok = ok && pass;
    };

    if (all || opt.only == "genfun") {
        for (long k = 1; k <= opt.max_k; ++k)
            for (long l = 1; l <= opt.max_l; ++l)
                for (const auto& res : wallcount::identity_suite(k, l, opt.order)) {
                    if (res.status == wallcount::CheckStatus::skipped) {
                        std::cout << "SKIP " << res.name << " " << res.params << "\n";
                        continue;
                    }
                    std::string line = res.name + " " + res.params +
                                       " order=" + std::to_string(opt.order);
                    if (res.first_mismatch_order)
                        line += " (first mismatch at order " +
                                std::to_string(*res.first_mismatch_order) + ")";
                    report(res.status == wallcount::CheckStatus::pass, line);
                }
    }
    if (all || opt.only == "lemmas") {
        for (const auto& rep : wallcount::binomial_lemma_checks(opt.bound)) {
            std::string line = rep.name + " bound=" + std::to_string(opt.bound) + " (" +
                               std::to_string(rep.tuples_checked) + " tuples)";
            if (!rep.pass)
                line += " first failure: " + rep.first_failure;
            report(rep.pass, line);
        }
    }
    if (all || opt.only == "tutte") {
        bool pass = true;
        std::string where;
        std::vector<wallcount::LatticePath> stack{wallcount::LatticePath{}};
        while (!stack.empty()) {
            wallcount::LatticePath p = stack.back();
            stack.pop_back();
            if (!wallcount::verify_append_recursion(p)) {
                pass = false;
                where = wallcount::format_path(p);
                break;
            }
            if (p.size() < opt.max_len) {
                for (wallcount::Step s : {wallcount::Step::N, wallcount::Step::E}) {
                    wallcount::LatticePath q = p;
                    q.steps.push_back(s);
                    stack.push_back(std::move(q));
                }
            }
        }
        std::string line = "tutte_append_recursion max-len=" + std::to_string(opt.max_len);
        if (!pass)
            line += " first failure at path " + (where.empty() ? "''" : where);
        report(pass, line);
    }
    if (all || opt.only == "bijection") {
        for (long m = 1; m <= opt.m; ++m) {
            bool pass = true;
            long sets = 0;
            for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
                wallcount::YoungBuilding b;
                b.m = m;
                for (long i = 1; i <= m; ++i)
                    if (mask & (1ul << (i - 1)))
                        b.walls.insert(i);
                ++sets;
                if (!wallcount::verify_bijection(b)) {
                    pass = false;
                    break;
                }
            }
            report(pass, "tableau_path_partition_bijection m=" + std::to_string(m) + " (" +
                             std::to_string(sets) + " wall sets)");
        }
    }
    return ok ? 0 : 1;
}

int run_tableaux(const TableauxOptions& opt) {
    wallcount::YoungBuilding b;
    if (opt.periodic) {
        b = wallcount::periodic_building(opt.m, opt.n);
    } else {
        b.m = opt.m;
        b.walls.insert(opt.walls.begin(), opt.walls.end());
    }
    auto ts = wallcount::enumerate_tableaux(b);
    std::cout << "# width=" << b.m << " walls={";
    bool first = true;
    for (long w : b.walls) {
        std::cout << (first ? "" : ",") << w;
        first = false;
    }
    std::cout << "} tableaux=" << ts.size() << "\n";
    for (const auto& t : ts)
        std::cout << wallcount::render(t) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting of two-row wall tableaux and staircase-bounded paths"};
    app.require_subcommand(1);

    SequenceOptions seq;
    CLI::App* seq_cmd = app.add_subcommand("sequence", "print a(0)..a(n-max) for one method");
    seq_cmd->add_option("--family", seq.family, "fbar, q, or fr")
        ->required()
        ->check(CLI::IsMember({"fbar", "q", "fr"}));
    seq_cmd->add_option("-m", seq.m, "block width (family fbar)");
    seq_cmd->add_option("-k", seq.k, "staircase rise (families q, fr)");
    seq_cmd->add_option("-l", seq.l, "staircase run (families q, fr)");
    seq_cmd->add_option("-r", seq.r, "east-step trim, 1..l (family fr)");
    seq_cmd->add_option("--n-max", seq.n_max, "last index to print");
    seq_cmd->add_option("--method", seq.method,
                        "tableaux|dp|determinant|recursion|genfun|multisection");
    seq_cmd->add_option("--format", seq.format, "table, bfile, or json")
        ->check(CLI::IsMember({"table", "bfile", "json"}));
    seq_cmd->add_option("--offset", seq.offset, "index offset for b-file style output");

    CrosscheckOptions cx;
    CLI::App* cx_cmd =
        app.add_subcommand("crosscheck", "run several methods over a grid and compare");
    cx_cmd->add_option("--family", cx.family, "fbar, q, or fr")
        ->required()
        ->check(CLI::IsMember({"fbar", "q", "fr"}));
    cx_cmd->add_option("--max-m", cx.max_m, "grid bound for m (family fbar)");
    cx_cmd->add_option("--max-k", cx.max_k, "grid bound for k");
    cx_cmd->add_option("--max-l", cx.max_l, "grid bound for l");
    cx_cmd->add_option("--n-max", cx.n_max, "grid bound for n");
    cx_cmd->add_option("--methods", cx.methods, "comma-separated method list")
        ->delimiter(',');
    cx_cmd->add_option("--corrupt", cx.corrupt, "perturb one cell (test hook)")
        ->group(""); // hidden

    IdentityOptions ids;
    CLI::App* id_cmd = app.add_subcommand("identities", "run the identity checks");
    id_cmd->add_option("--only", ids.only, "genfun, lemmas, tutte, or bijection")
        ->check(CLI::IsMember({"genfun", "lemmas", "tutte", "bijection"}));
    id_cmd->add_option("--max-k", ids.max_k, "series identity grid bound for k");
    id_cmd->add_option("--max-l", ids.max_l, "series identity grid bound for l");
    id_cmd->add_option("--order", ids.order, "series truncation order");
    id_cmd->add_option("--bound", ids.bound, "binomial lemma parameter bound");
    id_cmd->add_option("--max-len", ids.max_len, "longest path for the append recursion");
    id_cmd->add_option("-m", ids.m, "largest building width for the bijection check");

    TableauxOptions tb;
    CLI::App* tb_cmd = app.add_subcommand("tableaux", "render the fillings of one building");
    tb_cmd->add_option("-m", tb.m, "building width (or block width with --periodic)");
    tb_cmd->add_option("--walls", tb.walls, "wall columns, comma separated")->delimiter(',');
    tb_cmd->add_flag("--periodic", tb.periodic, "use the periodic building of n blocks");
    tb_cmd->add_option("-n", tb.n, "number of blocks with --periodic");

    CLI11_PARSE(app, argc, argv);

    try {
        if (seq_cmd->parsed())
            return run_sequence(seq);
        if (cx_cmd->parsed())
            return run_crosscheck(cx);
        if (tb_cmd->parsed())
            return run_tableaux(tb);
        return run_identities(ids);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
