#include "rmc/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <map>
#include <ostream>

#include "rmc/codefile.hpp"
#include "rmc/construct.hpp"
#include "rmc/cosets.hpp"
#include "rmc/covering.hpp"
#include "rmc/surgery.hpp"
#include "rmc/verify.hpp"

namespace rmc {

namespace {

using Report = std::map<std::string, std::string>;

void print(std::ostream& out, const Report& r) {
    for (const auto& [key, value] : r) out << key << " " << value << "\n";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string join(const WeightDistribution& W) {
    std::string s;
    for (Eigen::Index i = 0; i < W.size(); ++i) s += (i ? " " : "") + W(i).str();
    return s;
}

std::string digits(std::span<const Elem> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string padded(std::uint64_t n) {
    std::string s = std::to_string(n);
    return std::string(s.size() < 8 ? 8 - s.size() : 0, '0') + s;
}

struct Globals {
    std::uint64_t seed = 1;
    bool force = false;
    int threads = 0;
    CLI::Option* seed_opt = nullptr;

    SearchGuard guard() const { return SearchGuard{BigInt(1) << 24, force}; }
    ScanOptions scan() const {
        ScanOptions o;
        o.threads = threads;
        o.guard = guard();
        return o;
    }
};

void check_scan(const RankCode& code, const Globals& g) {
    const BigInt work = code.params().ambient_size();
    g.guard().check(work, "ambient scan over q^(km) matrices");
}

Report info(const RankCode& c, const Globals& g) {
    Report r;
    const auto guard = g.guard();
    r["q"] = std::to_string(c.field().q());
    r["k"] = std::to_string(c.k());
    r["m"] = std::to_string(c.m());
    r["kind"] = c.is_linear() ? "linear" : "set";
    r["size"] = c.cardinality().str();
    if (c.is_linear()) r["dim"] = std::to_string(c.dim());
    if (c.cardinality() >= 2) {
        r["min_distance"] = std::to_string(min_distance(c, guard));
        r["mrd"] = yes(is_mrd(c, guard));
    }
    if (c.is_linear()) {
        const RankCode perp = dual(c);
        if (perp.cardinality() >= 2) r["dual_distance"] = std::to_string(min_distance(perp, guard));
        if (c.dim() > 0) r["dually_qmrd"] = yes(is_dually_qmrd(c, guard));
    }
    return r;
}

Report bounds(const RankCode& c, const Globals& g) {
    const auto b = bounds_report(c, g.scan());
    Report r;
    auto put = [&](const std::string& key, const std::optional<int>& v) {
        if (v) r[key] = std::to_string(*v);
    };
    put("rho_exact", b.rho_exact);
    put("min_distance", b.min_distance);
    put("dual_distance", b.dual_distance);
    put("bound_dual_distance", b.bound_dual_distance);
    r["bound_external"] = std::to_string(b.bound_external);
    put("bound_initial_set", b.bound_initial_set);
    put("bound_mrd", b.bound_mrd);
    put("bound_qmrd", b.bound_qmrd);
    put("lower_packing", b.lower_packing);
    if (b.maximal) r["maximal"] = yes(*b.maximal);
    put("maximality_degree", b.maximality_degree);
    r["rho_status"] = b.rho_exact ? "exact" : "skipped (search guard)";
    return r;
}

Report cosets(const RankCode& c, const std::string& x_path, const Globals& g) {
    Report r;
    if (!x_path.empty()) {
        const auto file = read_code_file(x_path);
        if (file.matrices.size() != 1 || file.k != c.k() || file.m != c.m() || file.q != c.field().q())
            throw ParseError(x_path, 0, "expected a single matrix matching the code's q, k and m");
        const auto p = coset_profile(c, file.matrices.front(), g.guard());
        r["distance"] = std::to_string(p.min_weight);
        r["weights"] = join(p.W);
        return r;
    }
    check_scan(c, g);
    const auto& params = c.params();
    const std::uint64_t total = params.ambient_size().convert_to<std::uint64_t>();
    std::vector<char> covered(c.is_linear() ? total : 0, 0);
    std::uint64_t count = 0;
    Vec v(params.length());
    for (std::uint64_t x = 0; x < total; ++x) {
        if (c.is_linear() && covered[x]) continue;
        std::uint64_t idx = x;
        for (int t = params.length() - 1; t >= 0; --t) {
            v[t] = static_cast<Elem>(idx % params.field.q());
            idx /= params.field.q();
        }
        const Mat X = devectorize(params.field, v, params.k, params.m);
        const auto p = coset_profile(c, X, g.guard());
        r["translate." + padded(count++)] = "leader " + digits(v) + " weights " + join(p.W);
        if (c.is_linear()) {
            CodewordStream s(c);
            while (s.next()) {
                std::uint64_t y = 0;
                const auto w = s.current();
                for (int t = 0; t < params.length(); ++t) y = y * params.field.q() + params.field.add(v[t], w[t]);
                covered[y] = 1;
            }
        }
    }
    r["translates"] = std::to_string(count);
    return r;
}

Mat surgery_matrix(const std::string& spec, const RankCode& c) {
    if (std::filesystem::exists(spec)) {
        const auto file = read_code_file(spec);
        if (file.matrices.size() != 1 || file.k != c.k() || file.m != c.k() || file.q != c.field().q())
            throw ParseError(spec, 0, "expected a single k x k matrix over the code's field");
        return file.matrices.front();
    }
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(spec.data(), spec.data() + spec.size(), seed);
    if (ec != std::errc() || ptr != spec.data() + spec.size())
        throw ParseError(spec, 0, "--A expects a matrix file or an integer seed");
    return random_invertible(c.field(), c.k(), seed);
}

Report initial_set_report(const RankCode& c, const Globals& g) {
    Report r;
    auto render = [](const std::set<Cell>& s) {
        std::string out;
        for (const auto& [i, j] : s) out += (out.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        return out.empty() ? std::string("none") : out;
    };
    const auto in = initial_set(c);
    r["dim"] = std::to_string(c.dim());
    r["initial_set"] = render(in.entries);
    if (c.cardinality() >= 2) {
        const auto S = initial_set_complement(c, g.guard());
        r["min_distance"] = std::to_string(min_distance(c, g.guard()));
        r["complement"] = render(S.S);
        r["line_cover"] = std::to_string(min_line_cover(S));
        r["bound_initial_set"] = std::to_string(bound_initial_set(c, g.guard()));
    }
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rank-metric matrix codes: covering radius, bounds and constructions", "rmc"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    g.seed_opt = app.add_option("--seed", g.seed, "Seed for random matrices and codes");
    app.add_flag("--force", g.force, "Override the search guard");
    app.add_option("--threads", g.threads, "Worker threads for the covering-radius scan (0 = all cores)")
        ->check(CLI::NonNegativeNumber);

    std::string file;
    std::string x_path;
    std::string a_spec;
    int u = 0;
    auto with_file = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Code file")->required();
        return sub;
    };
    auto* info_cmd = with_file("info", "Parameters, size and distances");
    auto* bounds_cmd = with_file("bounds", "Exact covering radius and every applicable bound");
    auto* rho_cmd = with_file("covering-radius", "Exact covering radius by ambient scan");
    auto* dual_cmd = with_file("dual", "Print the trace dual");
    auto* cosets_cmd = with_file("cosets", "Weight distributions of translates");
    cosets_cmd->add_option("--X", x_path, "File holding a single translate matrix");
    auto* puncture_cmd = with_file("puncture", "Print Pi(C, A, u)");
    auto* shorten_cmd = with_file("shorten", "Print Sigma(C, A, u)");
    for (auto* sub : {puncture_cmd, shorten_cmd}) {
        sub->add_option("--A", a_spec, "Invertible k x k matrix file, or a seed")->required();
        sub->add_option("--u", u, "Number of leading rows removed")->required();
    }
    auto* initial_cmd = with_file("initial-set", "Initial set, complement pattern and line cover");

    auto* gen = app.add_subcommand("gen", "Construct a code and print it");
    gen->require_subcommand(1);
    std::uint64_t q = 2;
    int k = 0;
    int m = 0;
    int d = 0;
    int t = 0;
    int s = 0;
    int r = 0;
    int dim = -1;
    std::uint64_t size = 0;
    auto* gab = gen->add_subcommand("gabidulin", "Gabidulin MRD code");
    auto* qmrd = gen->add_subcommand("qmrd", "Dually QMRD code between nested Gabidulin codes");
    auto* linmap = gen->add_subcommand("linmap", "F_{q^s}-linear maps of GF(q^(rs))");
    auto* rnd = gen->add_subcommand("random", "Seeded random linear (--dim) or explicit (--size) code");
    for (auto* sub : {gab, qmrd, rnd}) {
        sub->add_option("--q", q, "Field size")->required();
        sub->add_option("--k", k, "Rows")->required();
        sub->add_option("--m", m, "Columns")->required();
    }
    gab->add_option("--d", d, "Minimum distance")->required();
    qmrd->add_option("--t", t, "Dimension (not a multiple of m)")->required();
    linmap->add_option("--q", q, "Field size")->required();
    linmap->add_option("--s", s, "Step")->required();
    linmap->add_option("--r", r, "Number of coefficients")->required();
    auto* dim_opt = rnd->add_option("--dim", dim, "Dimension of a random linear code");
    auto* size_opt = rnd->add_option("--size", size, "Size of a random explicit code");
    dim_opt->excludes(size_opt);
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the worked examples and property suites");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_parse;
    }

    try {
        auto load = [&] { return read_code(file); };
        if (info_cmd->parsed()) {
            print(out, info(load(), g));
        } else if (bounds_cmd->parsed()) {
            print(out, bounds(load(), g));
        } else if (rho_cmd->parsed()) {
            const RankCode c = load();
            check_scan(c, g);
            Report rep;
            rep["rho"] = std::to_string(covering_radius_exact(c, g.scan()));
            rep["scan_work"] = c.params().ambient_size().str();
            print(out, rep);
        } else if (dual_cmd->parsed()) {
            out << serialize(dual(load()));
        } else if (cosets_cmd->parsed()) {
            print(out, cosets(load(), x_path, g));
        } else if (puncture_cmd->parsed() || shorten_cmd->parsed()) {
            const RankCode c = load();
            const Mat A = surgery_matrix(a_spec, c);
            out << serialize(puncture_cmd->parsed() ? puncture(c, A, u) : shorten(c, A, u));
        } else if (initial_cmd->parsed()) {
            print(out, initial_set_report(load(), g));
        } else if (gab->parsed()) {
            out << serialize(gabidulin(q, k, m, d));
        } else if (qmrd->parsed()) {
            const auto seed = g.seed_opt->count() > 0 ? std::optional<std::uint64_t>(g.seed) : std::nullopt;
            out << serialize(dually_qmrd(q, k, m, t, seed));
        } else if (linmap->parsed()) {
            out << serialize(linearized_map_code(q, s, r));
        } else if (rnd->parsed()) {
            const CodeParams params(field_of_order(q), k, m);
            if (size_opt->count() > 0)
                out << serialize(random_code(params, size, g.seed));
            else if (dim_opt->count() > 0)
                out << serialize(random_linear_code(params, dim, g.seed));
            else
                throw std::invalid_argument("gen random needs --dim or --size");
        } else if (verify_cmd->parsed()) {
            Report rep;
            int passed = 0;
            const auto results = run_acceptance();
            for (const auto& c : results) {
                passed += c.pass;
                rep["check." + std::string(c.id < 10 ? "0" : "") + std::to_string(c.id)] =
                    std::string(c.pass ? "pass" : "fail") + " " + c.name + ": " + c.detail;
            }
            rep["summary"] = std::to_string(passed) + "/" + std::to_string(results.size()) + " passed";
            print(out, rep);
            return passed == static_cast<int>(results.size()) ? exit_ok : exit_failure;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const GuardError& e) {
        err << "refused: " << e.what() << " (limit " << BigInt(BigInt(1) << 24).str() << "; rerun with --force)\n";
        return exit_guard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_ok;
}

}  // namespace rmc
