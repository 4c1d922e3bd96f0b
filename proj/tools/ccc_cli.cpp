// Command-line front end: order decisions, parameter sweeps, tensor
// congruences and the Kummer lattice check.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ccc/chow_symbolic.hpp"
#include "ccc/jacobian_torsion.hpp"
#include "ccc/kummer_lattice.hpp"
#include "ccc/report.hpp"

namespace {

using namespace ccc;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitInvalid = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer parse_integer(const std::string& s, const char* what) {
    try {
        return Integer(s);
    } catch (const std::invalid_argument&) {
        throw ConfigError(std::string("invalid integer for ") + what + ": '" + s + "'");
    }
}

std::vector<Integer> parse_int_list(const std::string& s, std::size_t expected, const char* what) {
    std::vector<Integer> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_integer(item, what));
    if (out.size() != expected)
        throw ConfigError(std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
    return out;
}

struct Range {
    Integer lo;
    Integer hi;
};

// "a:b" (inclusive) or a single integer.
Range parse_range(const std::string& s, const char* what) {
    const auto colon = s.find(':', 1);
    if (colon == std::string::npos) {
        Integer v = parse_integer(s, what);
        return {v, v};
    }
    Range r{parse_integer(s.substr(0, colon), what), parse_integer(s.substr(colon + 1), what)};
    if (r.lo > r.hi) throw ConfigError(std::string("empty range for ") + what);
    return r;
}

Matrix2 parse_matrix(const std::string& s) {
    const auto v = parse_int_list(s, 4, "--gen");
    Matrix2 m;
    m.a = {{{v[0], v[1]}, {v[2], v[3]}}};
    return m;
}

H2Tensor parse_tensor(const std::string& s, const char* what) {
    const auto v = parse_int_list(s, 4, what);
    H2Tensor t;
    t.coeff = {{{v[0], v[1]}, {v[2], v[3]}}};
    return t;
}

TorsionPoint parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ConfigError("--t expects a/n,b/n");
    try {
        return TorsionPoint(Rational(s.substr(0, comma)), Rational(s.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
        throw ConfigError("--t expects rational coordinates a/n,b/n");
    }
}

struct PairOptions {
    std::string pair;
    std::string m;
    std::string d;
    std::vector<std::string> gens;
};

void add_pair_options(CLI::App* cmd, PairOptions& o, bool required) {
    auto* opt = cmd->add_option("--pair", o.pair,
                                "Curve pair: non-isogenous | no-cm | isomorphic-no-cm | isomorphic-cm | cm");
    if (required) opt->required();
    cmd->add_option("--m", o.m, "CM family: E1 = C/(Z m + Z sqrt d)")->allow_extra_args(false);
    cmd->add_option("--d", o.d, "CM family discriminant parameter (negative)")->allow_extra_args(false);
    cmd->add_option("--gen", o.gens,
                    "Hom generator matrix a00,a01,a10,a11 (row i is f(v_i) in the w-basis); repeatable")
        ->allow_extra_args(false);
}

CurvePairSpec build_pair(const PairOptions& o, const std::optional<Integer>& m, const std::optional<Integer>& d) {
    std::vector<Matrix2> gens;
    for (const auto& g : o.gens) gens.push_back(parse_matrix(g));
    try {
        if (o.pair == "non-isogenous") return CurvePairSpec::non_isogenous();
        if (o.pair == "isomorphic-no-cm") return CurvePairSpec::isomorphic_no_cm();
        if (o.pair == "no-cm") {
            if (gens.size() != 1) throw ConfigError("--pair no-cm needs exactly one --gen");
            return CurvePairSpec::isogenous_no_cm(gens.front());
        }
        if (o.pair == "isomorphic-cm") {
            if (gens.empty()) gens = {Matrix2::identity(), Matrix2::of(0, 1, -1, 0)};
            return CurvePairSpec::isomorphic_cm(gens);
        }
        if (o.pair == "cm") {
            if (!m || !d) throw ConfigError("--pair cm needs --m and --d");
            return CurvePairSpec::isogenous_cm(*m, *d);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown --pair '" + o.pair + "'");
}

struct OutputOptions {
    std::string format = "json";
    std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("--out", o.out, "Write the report to PATH instead of stdout");
}

void emit(const OutputOptions& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw ConfigError("cannot open output file '" + o.out + "'");
    f << text;
}

std::size_t worker_count() {
    if (const char* env = std::getenv("CCC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw ConfigError("CCC_THREADS must be a positive integer");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int run_order(const PairOptions& p, const std::string& n_text, const std::string& t_text, const OutputOptions& out) {
    const Integer n = parse_integer(n_text, "--n");
    if (n < 1) throw ConfigError("--n must be positive");
    std::optional<Integer> m, d;
    if (!p.m.empty()) m = parse_integer(p.m, "--m");
    if (!p.d.empty()) d = parse_integer(p.d, "--d");
    const CurvePairSpec spec = build_pair(p, m, d);
    std::optional<TorsionPoint> t;
    if (!t_text.empty()) t = parse_point(t_text);

    OrderResult result;
    try {
        result = decide_order(spec, n, t);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    int code = kExitOk;
    if (result.method == OrderMethod::CongruenceSolver && n == 4 && m && d &&
        result.order != cm_family_closed_form(*m, *d)) {
        std::cerr << "error: congruence solver and closed form disagree\n";
        code = kExitInconsistent;
    }
    emit(out, out.format == "json" ? order_report_json(spec, n, result, t).dump(2) + "\n"
                                   : order_report_tsv(spec, n, result));
    return code;
}

int run_sweep(const PairOptions& p, const std::string& n_text, const std::string& n_range, const OutputOptions& out) {
    if (n_text.empty() == n_range.empty()) throw ConfigError("sweep needs exactly one of --n and --n-range");
    const Range ns = parse_range(n_text.empty() ? n_range : n_text, "--n-range");
    if (ns.lo < 1) throw ConfigError("n values must be positive");

    struct Cell {
        std::optional<Integer> m, d;
        Integer n;
    };
    std::vector<Cell> cells;
    if (p.pair == "cm") {
        if (p.m.empty() || p.d.empty()) throw ConfigError("--pair cm sweep needs --m and --d ranges");
        const Range ms = parse_range(p.m, "--m");
        const Range ds = parse_range(p.d, "--d");
        for (Integer m = ms.lo; m <= ms.hi; ++m)
            for (Integer d = ds.lo; d <= ds.hi; ++d)
                for (Integer n = ns.lo; n <= ns.hi; ++n) cells.push_back({m, d, n});
    } else {
        for (Integer n = ns.lo; n <= ns.hi; ++n) cells.push_back({std::nullopt, std::nullopt, n});
    }
    // Validate every pair up front so workers never see bad input.
    std::vector<CurvePairSpec> specs;
    for (const auto& c : cells) specs.push_back(build_pair(p, c.m, c.d));

    std::vector<SweepRow> rows(cells.size());
    std::vector<std::string> errors(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                const OrderResult r = decide_order(specs[i], cells[i].n);
                rows[i] = {cells[i].m, cells[i].d, cells[i].n, r.order, r.method};
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(cells.size(), 1));
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (!e.empty()) throw ConfigError(e);

    emit(out, out.format == "json" ? sweep_json(p.pair, rows).dump(2) + "\n" : sweep_tsv(rows));
    return kExitOk;
}

int run_solve(const PairOptions& p, const std::string& gamma_text, const std::string& target_text,
              const std::string& modulus_text, const OutputOptions& out) {
    const Integer modulus = parse_integer(modulus_text, "--M");
    if (modulus < 1) throw ConfigError("--M must be at least 1");
    const auto g = parse_int_list(gamma_text, 2, "--gamma");
    const std::array<Integer, 2> gamma{g[0], g[1]};
    const H2Tensor target =
        target_text.empty() ? kunneth_tensor(Matrix2::identity()) : parse_tensor(target_text, "--target");

    std::vector<H2Tensor> generators;
    if (!p.pair.empty()) {
        std::optional<Integer> m, d;
        if (!p.m.empty()) m = parse_integer(p.m, "--m");
        if (!p.d.empty()) d = parse_integer(p.d, "--d");
        for (const auto& h : build_pair(p, m, d).hom_generators()) generators.push_back(kunneth_tensor(h));
    } else {
        for (const auto& s : p.gens) generators.push_back(parse_tensor(s, "--gen"));
    }

    const auto solution = solve_tensor_congruence(gamma, target, generators, modulus);
    if (out.format == "json") {
        Json j;
        j["solvable"] = solution.has_value();
        j["modulus"] = integer_json(modulus);
        j["gamma"] = Json::array({integer_json(gamma[0]), integer_json(gamma[1])});
        Json t = Json::array();
        for (const auto& c : target.flat()) t.push_back(integer_json(c));
        j["target"] = t;
        Json gens = Json::array();
        for (const auto& gen : generators) {
            Json row = Json::array();
            for (const auto& c : gen.flat()) row.push_back(integer_json(c));
            gens.push_back(row);
        }
        j["generators"] = gens;
        if (solution) {
            Json s = Json::array();
            for (const auto& x : *solution) s.push_back(integer_json(x));
            j["solution"] = s;
        } else {
            j["solution"] = nullptr;
        }
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "solvable\tsolution\n" << (solution ? "true" : "false") << '\t';
        if (solution)
            for (std::size_t i = 0; i < solution->size(); ++i) os << (i ? "," : "") << (*solution)[i].get_str();
        os << '\n';
        emit(out, os.str());
    }
    return kExitOk;
}

std::string weight_enumerator_text(const std::map<std::size_t, std::size_t>& we) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : we) {
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << "z^" << w;
    }
    return os.str();
}

int run_verify_lattice(const OutputOptions& out) {
    const KummerLattice k = build_kummer_lattice();
    const PullbackIndices idx = pullback_index_check();
    const Integer disc = abs(gram_determinant(k.lattice));
    const auto we = k.code.weight_enumerator();
    const std::string we_text = weight_enumerator_text(we);

    const bool ok = k.lattice.rank() == 16 && disc == 64 && idx.exceptional_over_pullback == 2048 &&
                    idx.kummer_over_roots == 32 && we_text == "1 + 30z^8 + z^16" && idx.pullback_integral &&
                    idx.form_doubles;
    if (out.format == "json") {
        Json j;
        j["rank"] = k.lattice.rank();
        j["discriminant"] = integer_json(disc);
        j["index_exceptional_over_pullback"] = integer_json(idx.exceptional_over_pullback);
        j["index_kummer_over_roots"] = integer_json(idx.kummer_over_roots);
        j["code_dimension"] = k.code.dimension();
        j["weight_enumerator"] = we_text;
        j["pullback_integral"] = idx.pullback_integral;
        j["form_doubles"] = idx.form_doubles;
        j["ok"] = ok;
        emit(out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "rank\tdiscriminant\tindex_exceptional_over_pullback\tindex_kummer_over_roots\tweight_enumerator\tok\n"
           << k.lattice.rank() << '\t' << disc.get_str() << '\t' << idx.exceptional_over_pullback.get_str() << '\t'
           << idx.kummer_over_roots.get_str() << '\t' << we_text << '\t' << (ok ? "true" : "false") << '\n';
        emit(out, os.str());
    }
    return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orders of elliptic constant cycle curves on Kummer surfaces"};
    app.require_subcommand(1);
    app.footer(
        "Tensors are comma-separated coefficients in the basis order v0w0,v0w1,v1w0,v1w1.\n"
        "Pass negative values and ranges with '=', e.g. --d=-1 or --d=-16:-1.\n"
        "Exit codes: 0 ok, 1 internal inconsistency or failed check, 2 invalid configuration.\n"
        "CCC_THREADS overrides the sweep worker count.");

    PairOptions order_pair, sweep_pair, solve_pair;
    OutputOptions order_out, sweep_out, solve_out, lattice_out;
    std::string order_n, order_t, sweep_n, sweep_n_range, gamma_text = "1,0", target_text, modulus_text;

    auto* order = app.add_subcommand("order", "Order of E_t for one curve pair and torsion order n");
    add_pair_options(order, order_pair, true);
    order->add_option("--n", order_n, "Order of the torsion point t")->required();
    order->add_option("--t", order_t, "Torsion point a/n,b/n in the H1 basis (default 1/n,0)");
    add_output_options(order, order_out);

    auto* sweep = app.add_subcommand("sweep", "Table of orders over ranges of m, d, n");
    add_pair_options(sweep, sweep_pair, true);
    sweep->add_option("--n", sweep_n, "Single n");
    sweep->add_option("--n-range", sweep_n_range, "Inclusive range a:b of n");
    add_output_options(sweep, sweep_out);

    auto* solve = app.add_subcommand("solve-congruence", "Decide gamma (x) target in span(G (x) H1) mod M");
    add_pair_options(solve, solve_pair, false);
    solve->add_option("--gamma", gamma_text, "Class gamma = b0,b1 in H1(E1)");
    solve->add_option("--target", target_text, "Target tensor on E2 x E3 (default T(id) = 0,1,-1,0)");
    solve->add_option("--M", modulus_text, "Modulus")->required();
    add_output_options(solve, solve_out);

    auto* lattice = app.add_subcommand("verify-lattice", "Rank, discriminant and indices of the Kummer lattice");
    add_output_options(lattice, lattice_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (*order) return run_order(order_pair, order_n, order_t, order_out);
        if (*sweep) return run_sweep(sweep_pair, sweep_n, sweep_n_range, sweep_out);
        if (*solve) {
            if (!solve_pair.pair.empty() && !solve_pair.gens.empty())
                throw ConfigError("give either --pair or --gen tensors, not both");
            return run_solve(solve_pair, gamma_text, target_text, modulus_text, solve_out);
        }
        if (*lattice) return run_verify_lattice(lattice_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInconsistent;
    }
    return kExitInvalid;
}
