#include "gmchase/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmchase/chase.hpp"
#include "gmchase/errors.hpp"
#include "gmchase/exact.hpp"
#include "gmchase/json_io.hpp"
#include "gmchase/montecarlo.hpp"
#include "gmchase/scenario.hpp"
#include "gmchase/story.hpp"
#include "gmchase/verify.hpp"

namespace gmchase::cli {

namespace {

// Bad input that never reached the domain layer: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Scenario load_scenario(const std::string& path, std::istream& in) {
    nlohmann::json j;
    if (path == "-") {
        j = nlohmann::json::parse(in);
    } else {
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open scenario file: " + path);
        j = nlohmann::json::parse(file);
    }
    return scenario_from_json(j);
}

std::string format_double(double value) {
    std::ostringstream out;
    out << std::setprecision(6) << value;
    return out.str();
}

std::string poly_text(const SeriesPoly& p) {
    std::string text;
    for (int d = 0; d <= p.degree(); ++d) {
        const Rational coefficient = p.coeff(d);
        if (coefficient == 0) continue;
        if (!text.empty()) text += " + ";
        text += "(" + to_string(coefficient) + ")";
        if (d > 0) text += " x^" + std::to_string(d);
    }
    return text.empty() ? "0" : text;
}

std::string histogram_text(const Histogram& h) {
    std::string text = "trials = " + std::to_string(h.trials) +
                       ", seed = " + std::to_string(h.seed) + "\n";
    for (const auto& [value, count] : h.counts)
        text += std::to_string(value) + ": " + std::to_string(count) + "\n";
    return text;
}

struct Args {
    std::uint64_t seed = 0;
    bool json = false;
    bool text = false;
    std::string out_path;

    int c = 0;
    int f = 0;
    int k = 1;
    std::string kind;
    std::string scenario_path;
    int man = 0;
    bool all = false;
    int order = -1;
    long long trials = 0;
    bool compare = false;
    long long max_size = 100000;

    bool json_mode() const { return json && !text; }
};

std::string do_gen(const Args& a) {
    const Scenario s = random_scenario(a.c, a.f, a.seed);
    if (a.json_mode()) return to_json(s).dump() + "\n";
    std::string text = "village of " + std::to_string(s.couples()) + " couples: c = " +
                       std::to_string(s.cheating()) + " cheating, f = " +
                       std::to_string(s.faithful()) + " faithful\nmistress list: [";
    for (size_t i = 0; i < s.mistress().size(); ++i) {
        if (i > 0) text += ", ";
        text += std::to_string(s.mistress()[i]);
    }
    return text + "]\n";
}

std::string do_count(const Args& a) {
    const Int count = scenario_count(a.c, a.f);
    if (a.json_mode()) {
        Json j;
        j["count"] = to_string(count);
        return j.dump() + "\n";
    }
    return to_string(count) + "\n";
}

std::string do_chase(const Args& a, std::istream& in) {
    const Scenario s = load_scenario(a.scenario_path, in);
    if (a.all) {
        const Matching matching = match_all(s);
        if (a.json_mode()) return to_json(matching).dump() + "\n";
        std::string text;
        for (const auto& [man, entry] : matching.pairs)
            text += "Mr. " + std::to_string(man) + " -> Mrs. " + std::to_string(entry.woman) +
                    " (" + std::to_string(entry.requests) + " requests)\n";
        text += "total requests: " + std::to_string(matching.total_requests()) + "\n";
        return text;
    }
    const int man = a.man > 0 ? a.man : s.cheating() + 1;
    const ChaseTrace trace = chase_one(s, man);
    if (a.json_mode()) return to_json(trace).dump() + "\n";
    std::string text = "Mr. " + std::to_string(trace.man) + " asks:";
    for (int woman : trace.asked) text += " Mrs. " + std::to_string(woman);
    text += " (" + std::to_string(trace.requests()) + " requests)\n";
    return text;
}

std::string do_story(const Args& a, std::istream& in) {
    return tell_story(load_scenario(a.scenario_path, in));
}

std::string do_pmf(const Args& a) {
    const ExactPmf pmf = a.kind == "single" ? single_pmf(a.c, a.f) : total_pmf(a.c, a.f);
    if (a.json_mode()) return to_json(pmf).dump() + "\n";
    std::string text;
    for (long long v = pmf.offset(); v <= pmf.max_value(); ++v)
        text += "P(" + std::to_string(v) + ") = " + to_string(pmf.at(v)) + "\n";
    return text;
}

std::string do_moments(const Args& a) {
    if (a.order >= 0) {
        const ExactPmf pmf = a.kind == "single" ? single_pmf(a.c, a.f) : total_pmf(a.c, a.f);
        const Rational moment = central_moment(pmf, a.order);
        if (a.json_mode()) {
            Json j;
            j["order"] = a.order;
            j["value"] = rational_to_json(moment);
            return j.dump() + "\n";
        }
        return "mu[" + std::to_string(a.order) + "] = " + to_string(moment) + "\n";
    }
    const MomentSet m =
        a.kind == "single" ? single_moments_closed(a.c, a.f) : total_moments_closed(a.c, a.f);
    if (a.json_mode()) return to_json(m).dump() + "\n";
    return "mean = " + to_string(m.mean) + "\nvariance = " + to_string(m.variance) +
           "\nmu3 = " + to_string(m.mu3) + "\nmu4 = " + to_string(m.mu4) + "\n";
}

std::string do_pgf(const Args& a) {
    const SeriesPoly p = a.kind == "single" ? pgf_single(a.c, a.f) : pgf_total(a.c, a.f);
    if (a.json_mode()) return to_json(p).dump() + "\n";
    return poly_text(p) + "\n";
}

std::string do_simulate(const Args& a) {
    const Histogram h = a.kind == "single" ? simulate_single(a.c, a.f, a.trials, a.seed)
                                           : simulate_total(a.c, a.f, a.trials, a.seed);
    if (!a.compare) {
        if (a.json_mode()) return to_json(h).dump() + "\n";
        return histogram_text(h);
    }
    const ExactPmf pmf = a.kind == "single" ? single_pmf(a.c, a.f) : total_pmf(a.c, a.f);
    const double tv = tv_distance(h, pmf);
    bool degenerate = false;
    ChiSquared chi;
    try {
        chi = chi_squared(h, pmf);
    } catch (const DomainError& e) {
        if (e.code() != errc::degenerate_support) throw;
        degenerate = true;
    }
    if (a.json_mode()) {
        Json j = to_json(h);
        Json cmp;
        cmp["tv"] = tv;
        if (degenerate) {
            cmp["chi_squared"] = nullptr;
        } else {
            Json cj;
            cj["statistic"] = chi.statistic;
            cj["dof"] = chi.dof;
            if (chi.dof >= 1 && chi.dof <= 64)
                cj["quantile_999"] = chi_squared_quantile_999(chi.dof);
            else
                cj["quantile_999"] = nullptr;
            cmp["chi_squared"] = std::move(cj);
        }
        j["compare"] = std::move(cmp);
        return j.dump() + "\n";
    }
    std::string text = histogram_text(h);
    text += "tv = " + format_double(tv) + "\n";
    if (degenerate) {
        text += "chi2 = n/a (degenerate support after merging)\n";
    } else {
        text += "chi2 = " + format_double(chi.statistic) + " (dof = " + std::to_string(chi.dof);
        if (chi.dof >= 1 && chi.dof <= 64)
            text += ", 0.999 quantile = " + format_double(chi_squared_quantile_999(chi.dof));
        text += ")\n";
    }
    return text;
}

std::string do_limit(const Args& a) {
    const Rational distance = geometric_limit_distance(a.k, a.f);
    if (a.json_mode()) {
        Json j;
        j["k"] = a.k;
        j["f"] = a.f;
        j["distance"] = rational_to_json(distance);
        j["approx"] = to_double(distance);
        return j.dump() + "\n";
    }
    return "distance = " + to_string(distance) + " (~" + format_double(to_double(distance)) +
           ")\n";
}

std::string do_verify(const Args& a, int& exit_code) {
    VerifyOptions options;
    options.max_size = a.max_size;
    const std::vector<CheckResult> results = run_verification(options);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;
    if (!all_pass) exit_code = 1;
    if (a.json_mode()) {
        Json j = Json::array();
        for (const auto& r : results) {
            Json item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            j.push_back(std::move(item));
        }
        return j.dump() + "\n";
    }
    std::string text;
    for (const auto& r : results)
        text += std::string(r.pass ? "PASS" : "FAIL") + " " + r.name + ": " + r.detail + "\n";
    text += all_pass ? "all checks passed\n" : "some checks FAILED\n";
    return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Garsia-Milne chase engine for the village matching model: exact request "
                 "distributions three ways, stories, and seeded simulation"};
    app.name("gmchase");
    app.require_subcommand(1);

    Args a;
    app.add_option("--seed", a.seed, "master seed (64-bit unsigned)")->capture_default_str();
    auto* json_flag = app.add_flag("--json", a.json, "stable machine-readable JSON output");
    auto* text_flag = app.add_flag("--text", a.text, "human-readable output (default)");
    json_flag->excludes(text_flag);
    text_flag->excludes(json_flag);
    app.add_option("--out", a.out_path, "write output to this file instead of standard output");

    const auto add_cf = [&a](CLI::App* sub) {
        sub->add_option("-c,--cheating", a.c, "number of cheating couples")->required();
        sub->add_option("-f,--faithful", a.f, "number of faithful couples")->required();
    };
    const auto add_kind = [&a](CLI::App* sub) {
        sub->add_option("kind", a.kind, "single (one fixed faithful man) or total (all of them)")
            ->required()
            ->check(CLI::IsMember({"single", "total"}));
    };

    auto* gen = app.add_subcommand("gen", "draw a uniform random scenario");
    add_cf(gen);

    auto* count = app.add_subcommand("count", "number of scenarios, (c+f)!/f!");
    add_cf(count);

    auto* chase = app.add_subcommand("chase", "chase one faithful man or all of them");
    chase->add_option("--scenario", a.scenario_path, "scenario JSON file, or - for standard input")
        ->required();
    auto* man_opt = chase->add_option("-m,--man", a.man, "faithful man to chase (default c+1)");
    auto* all_flag = chase->add_flag("--all", a.all, "chase every faithful man");
    man_opt->excludes(all_flag);
    all_flag->excludes(man_opt);

    auto* story = app.add_subcommand("story", "tell the village story for a scenario");
    story->add_option("--scenario", a.scenario_path, "scenario JSON file, or - for standard input")
        ->required();

    auto* pmf = app.add_subcommand("pmf", "exact request-count distribution");
    add_kind(pmf);
    add_cf(pmf);

    auto* moments = app.add_subcommand("moments", "exact moments of the request count");
    add_kind(moments);
    add_cf(moments);
    moments->add_option("--order", a.order, "numeric central moment of this order instead");

    auto* pgf = app.add_subcommand("pgf", "probability generating function coefficients");
    add_kind(pgf);
    add_cf(pgf);

    auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo histogram");
    add_kind(simulate);
    add_cf(simulate);
    simulate->add_option("-n,--trials", a.trials, "number of trials")->required();
    simulate->add_flag("--compare", a.compare, "append TV distance and chi-squared vs the exact pmf");

    auto* limit = app.add_subcommand("limit",
                                     "TV distance between the single-man law at c=k*f and its "
                                     "geometric limit");
    limit->add_option("-k", a.k, "ratio c/f")->required();
    limit->add_option("-f,--faithful", a.f, "number of faithful couples")->required();

    auto* verify = app.add_subcommand("verify", "run the exhaustive oracle and cross-check suite");
    verify->add_option("--max-size", a.max_size,
                       "enumeration ceiling on the scenario count (c+f)!/f!")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    int exit_code = 0;
    std::string payload;
    try {
        if (gen->parsed()) payload = do_gen(a);
        else if (count->parsed()) payload = do_count(a);
        else if (chase->parsed()) payload = do_chase(a, in);
        else if (story->parsed()) payload = do_story(a, in);
        else if (pmf->parsed()) payload = do_pmf(a);
        else if (moments->parsed()) payload = do_moments(a);
        else if (pgf->parsed()) payload = do_pgf(a);
        else if (simulate->parsed()) payload = do_simulate(a);
        else if (limit->parsed()) payload = do_limit(a);
        else if (verify->parsed()) payload = do_verify(a, exit_code);
    } catch (const UsageError& e) {
        err << "error: usage: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        err << "error: usage: invalid JSON input: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!a.out_path.empty()) {
        std::ofstream file(a.out_path, std::ios::binary);
        if (!file) {
            err << "error: usage: cannot open output file: " << a.out_path << "\n";
            return 2;
        }
        file << payload;
    } else {
        out << payload;
    }
    return exit_code;
}

}  // namespace gmchase::cli
