#include "confspace/cli.hpp"

#include "confspace/autaction.hpp"
#include "confspace/bar_oracle.hpp"
#include "confspace/parallel.hpp"
#include "confspace/series.hpp"
#include "confspace/stability.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace confspace {

namespace {

struct RunConfig {
    std::string manifold;
    std::string format = "pretty";
    int jobs = 1;
    int m = 1;
    int k = 2;
    int n_max = 4;
    int i_max = 8;
    int trunc = 8;
    int weight_max = 4;
    size_t guard = default_bar_guard;
    std::string pairs = "1:2,2:1";
};

std::string weight_str(const Weight& w)
{
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << w[i];
    os << ")";
    return os.str();
}

std::string dims_str(const std::map<int, size_t>& d)
{
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [deg, n] : d) {
        os << (first ? "" : ", ") << deg << ":" << n;
        first = false;
    }
    os << "}";
    return os.str();
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text)
{
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InputError("malformed pair '" + item + "', expected m:k");
        try {
            out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw InputError("malformed pair '" + item + "', expected m:k");
        }
    }
    if (out.empty())
        throw InputError("no (m, k) pairs given");
    return out;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out)
{
    const auto man = resolve_manifold(cfg.manifold);
    if (cfg.format == "csv") {
        out << "twist,deg,dim\n";
        for (int t = 0; t < 2; ++t)
            for (int q = 0; q <= man.dim; ++q)
                out << t << "," << q << "," << man.hc_dim(static_cast<Twist>(t), q) << "\n";
        return exit_code::ok;
    }
    out << "valid: " << man.name << " (d = " << man.dim << ", " << (man.orientable ? "orientable" : "non-orientable")
        << ")\n";
    for (int t = 0; t < 2; ++t) {
        out << "  H_c^*(twist " << t << "):";
        for (int q = 0; q <= man.dim; ++q)
            out << " " << man.hc_dim(static_cast<Twist>(t), q);
        out << "\n";
    }
    return exit_code::ok;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out)
{
    const auto man = resolve_manifold(cfg.manifold);
    const auto table = config_betti(man, cfg.n_max, cfg.i_max, cfg.jobs);
    if (cfg.format == "csv")
        out << table.to_csv();
    else
        out << "dim H^i(C_n(" << man.name << "); Q)\n" << table.to_pretty();
    return exit_code::ok;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out)
{
    const auto man = resolve_manifold(cfg.manifold);
    const auto rep = verify_ranges(man, cfg.n_max, cfg.jobs);
    const auto cone = cone_vanishing(man, cfg.n_max, cfg.jobs);
    if (cfg.format == "csv") {
        out << "n,i,cone_dim\n";
        for (const auto& row : cone)
            for (const auto& [i, n] : row.dims)
                out << row.n << "," << i << "," << n << "\n";
    } else {
        out << rep.to_string();
        for (const auto& row : cone)
            out << "  cone n=" << row.n << ": " << dims_str(row.dims) << "\n";
    }
    return rep.ok() ? exit_code::ok : exit_code::check_failed;
}

int cmd_density(const RunConfig& cfg, std::ostream& out)
{
    const auto man = resolve_manifold(cfg.manifold);
    const auto verdict = check_density_coincidence(man, parse_pairs(cfg.pairs), cfg.trunc);
    if (cfg.format == "csv") {
        out << "m,k,t,coeff\n";
        for (const auto& [mk, s] : verdict.series)
            for (const auto& [key, c] : s.terms())
                out << mk.first << "," << mk.second << "," << key.t << "," << c.get_str() << "\n";
    } else {
        for (const auto& [mk, s] : verdict.series)
            out << "(" << mk.first << "," << mk.second << "): " << s.to_string() << "\n";
        out << (verdict.coincide ? "densities coincide" : "densities differ") << " to t^" << cfg.trunc << "\n";
    }
    return exit_code::ok;
}

int cmd_euler(const RunConfig& cfg, std::ostream& out)
{
    const auto man = resolve_manifold(cfg.manifold);
    const auto lhs = euler_series_lhs(man, cfg.m, cfg.k, cfg.trunc);
    const auto rhs = euler_series_rhs(man, cfg.m, cfg.k, cfg.trunc);
    const bool holds = lhs == rhs;
    if (cfg.format == "csv") {
        for (int i = 0; i < cfg.m; ++i)
            out << "s" << i + 1 << ",";
        out << "lhs,rhs\n";
        for (const auto& w : weights_up_to(cfg.m, cfg.trunc)) {
            for (int e : w)
                out << e << ",";
            out << lhs.coeff(w, 0).get_str() << "," << rhs.coeff(w, 0).get_str() << "\n";
        }
    } else {
        out << "lhs: " << lhs.to_string() << "\n";
        out << "rhs: " << rhs.to_string() << "\n";
        if (holds)
            out << "identity holds to s^" << cfg.trunc << "\n";
        else
            out << "identity FAILS below s^" << cfg.trunc << "\n";
    }
    return holds ? exit_code::ok : exit_code::check_failed;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out)
{
    const ComplexSpec spec{resolve_manifold(cfg.manifold), cfg.m, cfg.k};
    check_spec(spec);
    const auto weights = weights_up_to(cfg.m, cfg.weight_max);
    const auto reports = parallel_map(weights.size(), cfg.jobs,
                                      [&](size_t i) { return compare_oracle(spec, weights[i], cfg.guard); });
    const bool all_equal = std::all_of(reports.begin(), reports.end(), [](const OracleReport& r) { return r.equal(); });
    if (cfg.format == "csv") {
        out << "weight,homdeg,koszul,bar\n";
        for (const auto& r : reports) {
            std::map<int, std::pair<size_t, size_t>> merged;
            for (const auto& [h, n] : r.koszul)
                merged[h].first = n;
            for (const auto& [h, n] : r.bar)
                merged[h].second = n;
            for (const auto& [h, p] : merged)
                out << "\"" << weight_str(r.weight) << "\"," << h << "," << p.first << "," << p.second << "\n";
        }
    } else {
        for (const auto& r : reports)
            out << "weight " << weight_str(r.weight) << ": koszul " << dims_str(r.koszul) << " bar " << dims_str(r.bar)
                << (r.equal() ? " equal" : " DIFFER") << "\n";
        out << (all_equal ? "oracle agrees on all " : "oracle DISAGREES among ") << reports.size() << " weights\n";
    }
    return all_equal ? exit_code::ok : exit_code::check_failed;
}

int cmd_autaction(const RunConfig& cfg, std::ostream& out)
{
    const auto man = resolve_manifold(cfg.manifold);
    if (man.orientable && man.dim % 2 != 0) {
        out << man.name << " is orientable and odd-dimensional: self-equivalences acting trivially on H~_*(M+) act "
                           "trivially on H^*(C_n(M); Q)\n";
        return exit_code::ok;
    }
    const auto rep = residual_action_dims(man);
    out << (cfg.format == "csv" ? rep.to_csv() : rep.to_string());
    return exit_code::ok;
}

} // namespace

ManifoldData resolve_manifold(const std::string& source)
{
    if (source.rfind("builtin:", 0) == 0)
        return builtin_from_spec(std::string_view(source).substr(8));
    if (source.rfind("file:", 0) == 0) {
        const auto path = source.substr(5);
        std::ifstream in(path);
        if (!in)
            throw InputError("cannot read manifold file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return load_manifold(ss.str());
    }
    throw InputError("manifold source must be builtin:<name>[:<param>] or file:<path>");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rational cohomology of configuration spaces and spaces of 0-cycles", "confspace"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--manifold", cfg.manifold, "builtin:<name>[:<param>] or file:<path>")->required();
        sub->add_option("--format", cfg.format, "pretty or csv")->check(CLI::IsMember({"pretty", "csv"}));
        sub->add_option("--jobs", cfg.jobs, "parallelism width")->check(CLI::PositiveNumber);
    };
    auto colours = [&](CLI::App* sub) {
        sub->add_option("--m", cfg.m, "number of colours")->check(CLI::PositiveNumber);
        sub->add_option("--k", cfg.k, "multiplicity bound")->check(CLI::PositiveNumber);
    };

    auto* validate_cmd = app.add_subcommand("validate", "validate a manifold description");
    common(validate_cmd);

    auto* betti_cmd = app.add_subcommand("betti", "Betti table of unordered configuration spaces");
    common(betti_cmd);
    betti_cmd->add_option("--n-max", cfg.n_max)->check(CLI::NonNegativeNumber);
    betti_cmd->add_option("--i-max", cfg.i_max)->check(CLI::NonNegativeNumber);

    auto* stability_cmd = app.add_subcommand("stability", "check homological stability ranges");
    common(stability_cmd);
    stability_cmd->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber);

    auto* density_cmd = app.add_subcommand("density", "homological densities and their coincidences");
    common(density_cmd);
    density_cmd->add_option("--pairs", cfg.pairs, "comma separated m:k pairs");
    density_cmd->add_option("--trunc", cfg.trunc, "t-degree truncation")->check(CLI::NonNegativeNumber);

    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic generating function identity");
    common(euler_cmd);
    colours(euler_cmd);
    euler_cmd->add_option("--trunc", cfg.trunc, "total s-degree truncation")->check(CLI::NonNegativeNumber);

    auto* oracle_cmd = app.add_subcommand("oracle", "compare Koszul homology with bar-construction Tor");
    common(oracle_cmd);
    colours(oracle_cmd);
    oracle_cmd->add_option("--weight-max", cfg.weight_max)->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--guard", cfg.guard, "bar complex basis size limit")->check(CLI::PositiveNumber);

    auto* autaction_cmd = app.add_subcommand("autaction", "dimensions of the residual automorphism action");
    common(autaction_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    }

    try {
        if (validate_cmd->parsed())
            return cmd_validate(cfg, out);
        if (betti_cmd->parsed())
            return cmd_betti(cfg, out);
        if (stability_cmd->parsed())
            return cmd_stability(cfg, out);
        if (density_cmd->parsed())
            return cmd_density(cfg, out);
        if (euler_cmd->parsed())
            return cmd_euler(cfg, out);
        if (oracle_cmd->parsed())
            return cmd_oracle(cfg, out);
        if (autaction_cmd->parsed())
            return cmd_autaction(cfg, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const GuardLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const ContractViolation& e) {
        err << "internal check failed: " << e.what() << "\n";
        return exit_code::check_failed;
    }
    return exit_code::input_error;
}

} // namespace confspace
