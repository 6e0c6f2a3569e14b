#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hurwitz_atlas/bracket.hpp"
#include "hurwitz_atlas/dendrology.hpp"
#include "hurwitz_atlas/hurwitz.hpp"
#include "hurwitz_atlas/multigraph.hpp"
#include "hurwitz_atlas/serialization.hpp"

namespace hurwitz_atlas::cli {

namespace {

using nlohmann::json;

void emit(std::ostream& out, const json& payload) { out << payload.dump(2) << "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw atlas_error("io", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw atlas_error("bad_input", std::string("malformed JSON: ") + e.what());
    }
    return j;
}

std::vector<Partition> parse_mu_list(const std::string& text) {
    std::vector<Partition> mus;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        mus.push_back(Partition::parse(item));
    }
    return mus;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stoi(item));
    }
    return values;
}

json mu_list_to_json(const std::vector<Partition>& mus) {
    json arr = json::array();
    for (const auto& mu : mus) arr.push_back(mu.to_string());
    return arr;
}

struct SeriesOptions {
    std::string gen;
    int order = 0;
    bool csv = false;
};

struct FitOptions {
    std::string coeffs_path;
    int window = 0;
    int holdout = 8;
};

struct BracketOptions {
    std::string table_path;
    std::string monomial;
    int fseries_order = -1;
    std::string weights;
    bool genus0_terms = false;
    bool csv = false;
};

struct GraphsOptions {
    std::string catalog_path;
    int extensions_n = -1;
};

struct HurwitzOptions {
    int genus = 0;
    std::string mu_text;
    std::string query_path;
    int n = -1;
    int series_order = -1;
    int window = 0;
    int holdout = 8;
};

struct GravityOptions {
    int genus = 0;
    int order = 0;
    int window = 0;
    int holdout = 8;
    bool stretch = false;
};

struct TreesOptions {
    int n = 0;
    int k = 0;
    std::string kind;
    bool csv = false;
};

int run_series(const SeriesOptions& opt, std::ostream& out) {
    PowerSeries s(0);
    if (opt.gen == "Y")
        s = gen_y(opt.order);
    else if (opt.gen == "Z")
        s = gen_z(opt.order);
    else if (opt.gen == "A")
        s = gen_a_sequence(opt.order);
    else
        throw atlas_error("bad_input", "unknown generator '" + opt.gen + "'");
    if (opt.csv) {
        out << series_to_csv(s);
        return 0;
    }
    json payload;
    payload["gen"] = opt.gen;
    payload["order"] = opt.order;
    payload["coeffs"] = series_to_json(s);
    emit(out, payload);
    return 0;
}

int run_fit(const FitOptions& opt, std::ostream& out) {
    const PowerSeries coeffs = series_from_json(load_json_file(opt.coeffs_path));
    const FitResult result = fit(coeffs, opt.window, opt.holdout);
    if (!fit_succeeded(result)) {
        const FitFailure& failure = std::get<FitFailure>(result);
        json payload;
        payload["code"] = "fit_failure";
        payload["reason"] = failure.reason;
        if (failure.mismatch_index) payload["mismatch_index"] = *failure.mismatch_index;
        emit(out, payload);
        return 1;
    }
    json payload;
    payload["element"] = aelement_to_json(std::get<AElement>(result));
    payload["holdout"] = opt.holdout;
    payload["window"] = opt.window;
    emit(out, payload);
    return 0;
}

int run_bracket(const BracketOptions& opt, std::ostream& out) {
    const BracketTable table = bracket_table_from_json(load_json_file(opt.table_path));
    if (!opt.monomial.empty() || (opt.monomial.empty() && opt.fseries_order < 0)) {
        const Monomial m = monomial_from_string(opt.monomial);
        json payload;
        payload["monomial"] = monomial_to_string(m);
        payload["value"] = rat_to_string(eval(table, m));
        emit(out, payload);
        return 0;
    }
    PowerSeries s(0);
    if (opt.weights.empty()) {
        s = f_series(bracket_fn(table), opt.fseries_order, opt.genus0_terms);
    } else {
        s = weighted_f_series(bracket_fn(table), parse_int_list(opt.weights), opt.fseries_order);
    }
    if (opt.csv) {
        out << series_to_csv(s);
        return 0;
    }
    json payload;
    payload["coeffs"] = series_to_json(s);
    payload["genus"] = table.genus();
    emit(out, payload);
    return 0;
}

int run_graphs(const GraphsOptions& opt, std::ostream& out) {
    const auto catalog = catalog_from_json(load_json_file(opt.catalog_path));
    json items = json::array();
    for (const auto& entry : catalog) {
        json item;
        item["name"] = entry.name;
        item["aut"] = automorphism_count(entry.graph.graph).get_str();
        item["edges"] = entry.graph.edge_count();
        item["star_valency"] = entry.graph.star_valency();
        item["euler_characteristic"] = entry.graph.euler_characteristic();
        item["f_element"] = aelement_to_json(f_h_closed_form(entry.graph));
        if (opt.extensions_n >= 0) {
            const int n = opt.extensions_n;
            json values = json::object();
            const int edge_total = (n + 1) - entry.graph.euler_characteristic();
            const int d_sum = 2 * edge_total - entry.graph.star_valency() - n;
            if (d_sum >= 0) {
                for_each_monomial(n, d_sum, [&](const Monomial& m) {
                    std::vector<int> valencies(m.size());
                    for (size_t i = 0; i < m.size(); ++i) valencies[i] = m[i] + 1;
                    values[monomial_to_string(m)] = rat_to_string(h_bracket(entry.graph, valencies, 0));
                });
            }
            item["extensions"] = values;
        }
        items.push_back(item);
    }
    json payload;
    payload["graphs"] = items;
    emit(out, payload);
    return 0;
}

int run_hurwitz(HurwitzOptions opt, std::ostream& out) {
    std::vector<Partition> mus = parse_mu_list(opt.mu_text);
    if (!opt.query_path.empty()) {
        // Query file {g, mus: [...], N}: N is a series order.
        const json q = load_json_file(opt.query_path);
        opt.genus = q.at("g").get<int>();
        mus.clear();
        for (const auto& item : q.at("mus")) mus.push_back(Partition::parse(item.get<std::string>()));
        opt.series_order = q.at("N").get<int>();
    }
    if ((opt.n < 0) == (opt.series_order < 0))
        throw atlas_error("bad_input", "choose exactly one of --n and --series");
    if (opt.n >= 0) {
        const auto counts = connected_counts(opt.genus, mus, opt.n);
        json payload;
        payload["h"] = rat_to_string(counts[static_cast<size_t>(opt.n)]);
        payload["n"] = opt.n;
        emit(out, payload);
        return 0;
    }
    const PowerSeries series = h_series(opt.genus, mus, opt.series_order);
    int r = 0;
    for (const auto& mu : mus) r += mu.degeneracy();
    json rows = json::array();
    for (int n = 1; n <= opt.series_order; ++n) {
        const int c = 2 * n + 2 * opt.genus - 2 - r;
        if (c < 0) continue;
        json row;
        row["h"] = rat_to_string(series[n] * Rat(factorial(static_cast<unsigned long>(c))));
        row["n"] = n;
        rows.push_back(row);
    }
    json payload;
    payload["genus"] = opt.genus;
    payload["mus"] = mu_list_to_json(mus);
    payload["rows"] = rows;
    payload["series"] = series_to_json(series);
    if (opt.window > 0) {
        const FitResult result = fit(series, opt.window, opt.holdout);
        if (fit_succeeded(result)) {
            const AElement& element = std::get<AElement>(result);
            payload["element"] = aelement_to_json(element);
            payload["leading"] = asymptotic_to_json(leading_asymptotic(element));
        } else {
            const FitFailure& failure = std::get<FitFailure>(result);
            json fail;
            fail["code"] = "fit_failure";
            fail["reason"] = failure.reason;
            if (failure.mismatch_index) fail["mismatch_index"] = *failure.mismatch_index;
            payload["fit_failure"] = fail;
        }
    }
    emit(out, payload);
    return 0;
}

int run_gravity(const GravityOptions& opt, std::ostream& out) {
    if (opt.genus >= 3 && !opt.stretch)
        throw atlas_error("guard", "genus >= 3 is a stretch run; pass --stretch");
    // The bare series is outside the algebra exactly at genus 1, where one
    // distinguished sheet restores membership.
    const std::vector<Partition> mus =
        opt.genus == 1 ? std::vector<Partition>{Partition::parse("1")} : std::vector<Partition>{};
    const auto result = fit_and_b(opt.genus, mus, opt.order, opt.window, opt.holdout);
    if (std::holds_alternative<FitFailure>(result)) {
        const FitFailure& failure = std::get<FitFailure>(result);
        json payload;
        payload["code"] = "fit_failure";
        payload["reason"] = failure.reason;
        if (failure.mismatch_index) payload["mismatch_index"] = *failure.mismatch_index;
        emit(out, payload);
        return 1;
    }
    const GravityFit& fit_result = std::get<GravityFit>(result);
    json payload;
    payload["alpha"] = rat_to_string(fit_result.leading.alpha);
    payload["b_decimal"] = asymptotic_constant_decimal(fit_result.leading);
    payload["c_gauss"] = rat_to_string(fit_result.leading.c_gauss);
    payload["c_plain"] = rat_to_string(fit_result.leading.c_plain);
    payload["closed_form"] = closed_form_to_json(closed_form(fit_result.element));
    payload["element"] = aelement_to_json(fit_result.element);
    payload["genus"] = opt.genus;
    payload["mus"] = mu_list_to_json(mus);
    payload["window"] = fit_result.window;
    emit(out, payload);
    return 0;
}

int run_trees(const TreesOptions& opt, std::ostream& out) {
    MomentKind kind;
    if (opt.kind == "m")
        kind = MomentKind::m;
    else if (opt.kind == "p")
        kind = MomentKind::p;
    else
        throw atlas_error("bad_input", "kind must be m or p");
    const Rat value = path_moments(opt.n, opt.k, kind);
    if (opt.csv) {
        out << "n,k,kind,value\n"
            << opt.n << "," << opt.k << "," << opt.kind << "," << rat_to_string(value) << "\n";
        return 0;
    }
    json payload;
    payload["k"] = opt.k;
    payload["kind"] = opt.kind;
    payload["n"] = opt.n;
    payload["value"] = rat_to_string(value);
    emit(out, payload);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact generating-series toolkit for tree series, brackets and sphere coverings"};
    app.require_subcommand(1);

    SeriesOptions series_opt;
    auto* series_cmd = app.add_subcommand("series", "emit generator series coefficients");
    series_cmd->add_option("--gen", series_opt.gen, "Y, Z or A")->required();
    series_cmd->add_option("--order", series_opt.order, "truncation order")->required()
        ->check(CLI::NonNegativeNumber);
    series_cmd->add_flag("--csv", series_opt.csv, "CSV instead of JSON");

    FitOptions fit_opt;
    auto* fit_cmd = app.add_subcommand("fit", "fit a coefficient file into the algebra");
    fit_cmd->add_option("--coeffs", fit_opt.coeffs_path, "JSON array of 'num/den' strings")->required();
    fit_cmd->add_option("--window", fit_opt.window, "Laurent window")->required();
    fit_cmd->add_option("--holdout", fit_opt.holdout, "validation coefficients");

    BracketOptions bracket_opt;
    auto* bracket_cmd = app.add_subcommand("bracket", "evaluate a bracket table");
    bracket_cmd->add_option("--table", bracket_opt.table_path, "initial-value table JSON")->required();
    bracket_cmd->add_option("--monomial", bracket_opt.monomial, "indices, e.g. '0,5'");
    bracket_cmd->add_option("--fseries", bracket_opt.fseries_order, "series order");
    bracket_cmd->add_option("--weights", bracket_opt.weights, "weights b_1,..,b_p for the series");
    bracket_cmd->add_flag("--genus0-terms", bracket_opt.genus0_terms, "add the q + q^2/4 convention terms");
    bracket_cmd->add_flag("--csv", bracket_opt.csv, "CSV instead of JSON");

    GraphsOptions graphs_opt;
    auto* graphs_cmd = app.add_subcommand("graphs", "catalog report and extension brackets");
    graphs_cmd->add_option("--catalog", graphs_opt.catalog_path, "graph catalog JSON")->required();
    graphs_cmd->add_option("--extensions", graphs_opt.extensions_n, "bracket size n");

    HurwitzOptions hurwitz_opt;
    auto* hurwitz_cmd = app.add_subcommand("hurwitz", "connected covering counts");
    hurwitz_cmd->add_option("--genus", hurwitz_opt.genus, "genus of the covering surface");
    hurwitz_cmd->add_option("--mu", hurwitz_opt.mu_text, "semicolon-separated ramification types");
    hurwitz_cmd->add_option("--query", hurwitz_opt.query_path, "query file {g, mus, N}");
    hurwitz_cmd->add_option("--n", hurwitz_opt.n, "single sheet count");
    hurwitz_cmd->add_option("--series", hurwitz_opt.series_order, "series order");
    hurwitz_cmd->add_option("--window", hurwitz_opt.window, "also fit with this window");
    hurwitz_cmd->add_option("--holdout", hurwitz_opt.holdout, "fit validation coefficients");

    GravityOptions gravity_opt;
    auto* gravity_cmd = app.add_subcommand("gravity", "leading asymptotics of covering counts");
    gravity_cmd->add_option("--genus", gravity_opt.genus, "genus")->required();
    gravity_cmd->add_option("--order", gravity_opt.order, "series order")->required();
    gravity_cmd->add_option("--window", gravity_opt.window, "window cap")->required();
    gravity_cmd->add_option("--holdout", gravity_opt.holdout, "fit validation coefficients");
    gravity_cmd->add_flag("--stretch", gravity_opt.stretch, "allow long genus >= 3 runs");

    TreesOptions trees_opt;
    auto* trees_cmd = app.add_subcommand("trees", "distance moments over labeled trees");
    trees_cmd->add_option("--n", trees_opt.n, "vertex count")->required();
    trees_cmd->add_option("--k", trees_opt.k, "moment order")->required();
    trees_cmd->add_option("--kind", trees_opt.kind, "m or p")->required();
    trees_cmd->add_flag("--csv", trees_opt.csv, "CSV instead of JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        nlohmann::json payload;
        payload["code"] = "usage";
        payload["message"] = e.what();
        emit(out, payload);
        return 2;
    }

    try {
        if (series_cmd->parsed()) return run_series(series_opt, out);
        if (fit_cmd->parsed()) return run_fit(fit_opt, out);
        if (bracket_cmd->parsed()) return run_bracket(bracket_opt, out);
        if (graphs_cmd->parsed()) return run_graphs(graphs_opt, out);
        if (hurwitz_cmd->parsed()) {
            if (hurwitz_opt.query_path.empty() && hurwitz_cmd->count("--genus") == 0)
                throw atlas_error("bad_input", "--genus or --query is required");
            return run_hurwitz(hurwitz_opt, out);
        }
        if (gravity_cmd->parsed()) return run_gravity(gravity_opt, out);
        if (trees_cmd->parsed()) return run_trees(trees_opt, out);
        throw atlas_error("usage", "no subcommand selected");
    } catch (const atlas_error& e) {
        nlohmann::json payload;
        payload["code"] = e.code();
        payload["message"] = e.what();
        emit(out, payload);
        return 1;
    } catch (const std::exception& e) {
        nlohmann::json payload;
        payload["code"] = "internal";
        payload["message"] = e.what();
        emit(out, payload);
        return 1;
    }
}

}  // namespace hurwitz_atlas::cli
