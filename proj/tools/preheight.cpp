// Command-line surface for the preheight library. Every subcommand prints
// deterministic machine-readable output: CSV (default, header row first)
// or JSON (--format json: one object with "meta" and "rows", the rows
// mirroring the CSV columns).
//
// Exit codes: 0 success, 2 usage error, 3 domain error, 4 resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "preheight/canonical_height.hpp"
#include "preheight/io.hpp"
#include "preheight/preimage_curve.hpp"
#include "preheight/quad_map.hpp"
#include "preheight/rational.hpp"
#include "preheight/survey.hpp"

namespace {

using nlohmann::ordered_json;
using namespace preheight;

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string c, x, b;
    double eps = 1e-4;
    double t = 0.0;
    std::uint32_t depth = 64;
    std::uint64_t bound = 1;
    int jobs = 1;
    std::string format = "csv";
    std::string output;
};

struct Output {
    ordered_json meta = ordered_json::object();
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;
    std::string csv_override;  // fixed-format CSV bodies (sweep, fiber-poly)
};

Rational parse_rational(const std::string& text, const std::string& flag) {
    static const std::regex pattern(R"([+-]?[0-9]+(/[0-9]+)?)");
    if (!std::regex_match(text, pattern)) {
        throw UsageError(flag + ": expected an exact rational 'p' or 'p/q', got '" + text +
                         "' (decimal input is rejected; write 1/2, not 0.5)");
    }
    return Rational::from_string(text);  // zero denominator -> DomainError
}

std::uint64_t bit_budget_from_env() {
    const char* env = std::getenv("PREHEIGHT_BIT_BUDGET");
    if (env == nullptr) return kDefaultBitBudget;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        throw UsageError(std::string("PREHEIGHT_BIT_BUDGET: expected a positive integer, got '") +
                         env + "'");
    }
    return v;
}

std::string cell_to_csv(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_sig12(v.get<double>());
    if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
    return std::to_string(v.get<std::int64_t>());
}

std::string render(const Output& out, const std::string& format) {
    if (format == "json") {
        ordered_json doc;
        doc["meta"] = out.meta;
        doc["rows"] = out.rows;
        return doc.dump(2) + "\n";
    }
    if (!out.csv_override.empty()) return out.csv_override;
    std::string text;
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
        if (i) text += ',';
        text += out.columns[i];
    }
    text += '\n';
    for (const auto& row : out.rows) {
        for (std::size_t i = 0; i < out.columns.size(); ++i) {
            if (i) text += ',';
            text += cell_to_csv(row.at(out.columns[i]));
        }
        text += '\n';
    }
    return text;
}

ordered_json meta_for(const char* subcommand, ordered_json config) {
    return ordered_json{{"subcommand", subcommand}, {"version", kVersion},
                        {"config", std::move(config)}};
}

Output run_height(const Options& o) {
    const Rational x = parse_rational(o.x, "x");
    Output out;
    out.meta = meta_for("height", {{"x", x.to_string()}});
    out.columns = {"x", "naive_height", "weil_height"};
    out.rows.push_back({{"x", x.to_string()},
                        {"naive_height", naive_height(x).get_str()},
                        {"weil_height", weil_height(x)}});
    return out;
}

Output run_canon(const Options& o) {
    const Rational c = parse_rational(o.c, "--c");
    const Rational x = parse_rational(o.x, "--x");
    const std::uint64_t budget = bit_budget_from_env();
    const ErrorBoundedReal hhat = canonical_height(c, x, o.eps, budget);
    Output out;
    out.meta = meta_for("canon", {{"c", c.to_string()},
                                  {"x", x.to_string()},
                                  {"eps", o.eps},
                                  {"bit_budget", budget}});
    out.columns = {"value", "radius"};
    out.rows.push_back({{"value", hhat.value}, {"radius", hhat.radius}});
    return out;
}

Output run_preimages(const Options& o) {
    const Rational c = parse_rational(o.c, "--c");
    const Rational b = parse_rational(o.b, "--b");
    const PreimageTree tree = iterated_preimages(c, b, o.depth);
    Output out;
    out.meta = meta_for("preimages", {{"c", c.to_string()},
                                      {"b", b.to_string()},
                                      {"depth_cap", o.depth},
                                      {"total", tree.union_size()},
                                      {"closed", tree.closed}});
    out.columns = {"x", "level", "closed"};
    for (std::size_t depth = 0; depth < tree.levels.size(); ++depth) {
        for (const auto& x : tree.levels[depth]) {
            out.rows.push_back({{"x", x.to_string()},
                                {"level", depth + 1},
                                {"closed", tree.closed}});
        }
    }
    return out;
}

Output run_preperiodic(const Options& o) {
    const Rational c = parse_rational(o.c, "--c");
    const Rational x = parse_rational(o.x, "--x");
    const PreperiodicityVerdict v = detect_preperiodic(c, x);
    Output out;
    out.meta = meta_for("preperiodic", {{"c", c.to_string()}, {"x", x.to_string()}});
    out.columns = {"kind", "tail_length", "cycle_length", "escape_index"};
    ordered_json row;
    if (v.is_preperiodic()) {
        row = {{"kind", "preperiodic"},
               {"tail_length", v.tail_length},
               {"cycle_length", v.cycle_length},
               {"escape_index", nullptr}};
    } else {
        row = {{"kind", "wandering"},
               {"tail_length", nullptr},
               {"cycle_length", nullptr},
               {"escape_index", v.escape_index}};
    }
    out.rows.push_back(std::move(row));
    return out;
}

Output run_curve(const Options& o) {
    const Rational c = parse_rational(o.c, "--c");
    const Rational x = parse_rational(o.x, "--x");
    const Rational b = parse_rational(o.b, "--b");
    const CurvePoint p = embed(c, x, b);  // DomainError if not on the curve
    Output out;
    out.meta = meta_for("curve", {{"c", c.to_string()},
                                  {"x", x.to_string()},
                                  {"b", b.to_string()}});
    out.columns = {"z0", "z1", "z2", "z3", "z4", "b", "c", "smooth_fiber_point"};
    ordered_json row;
    for (int i = 0; i < 5; ++i) row["z" + std::to_string(i)] = p.z[i].to_string();
    row["b"] = p.b.to_string();
    row["c"] = gamma(p).to_string();
    row["smooth_fiber_point"] = jacobian_spot_check(p);
    out.rows.push_back(std::move(row));
    return out;
}

Output run_fiber_poly(const Options& o) {
    const Rational c = parse_rational(o.c, "--c");
    const Rational b = parse_rational(o.b, "--b");
    const FiberPolynomial poly = fiber_polynomial(c, b);
    Output out;
    out.meta = meta_for("fiber-poly", {{"c", c.to_string()},
                                       {"b", b.to_string()},
                                       {"degree", poly.degree()}});
    out.columns = {"degree", "numerator", "denominator"};
    for (std::size_t d = 0; d < poly.coefficients.size(); ++d) {
        out.rows.push_back({{"degree", d},
                            {"numerator", poly.coefficients[d].numerator().get_str()},
                            {"denominator", poly.coefficients[d].denominator().get_str()}});
    }
    std::ostringstream csv;
    write_coefficients_csv(poly, csv);
    out.csv_override = csv.str();
    return out;
}

Output run_sweep(const Options& o) {
    SweepConfig cfg;
    cfg.b = parse_rational(o.b, "--b");
    cfg.c_height_bound = o.bound;
    cfg.depth_cap = o.depth;
    cfg.eps = o.eps;
    const auto records = sweep_parameters(cfg, o.jobs);
    Output out;
    out.meta = meta_for("sweep", {{"b", cfg.b.to_string()},
                                  {"bound", cfg.c_height_bound},
                                  {"depth_cap", cfg.depth_cap},
                                  {"eps", cfg.eps},
                                  {"jobs", o.jobs}});
    out.columns = {"c_num", "c_den", "h_c", "h_b", "counts_per_level",
                   "total", "has_depth5", "closed"};
    for (const auto& rec : records) {
        std::string counts;
        for (std::size_t i = 0; i < rec.counts_per_level.size(); ++i) {
            if (i) counts += ';';
            counts += std::to_string(rec.counts_per_level[i]);
        }
        out.rows.push_back({{"c_num", rec.c.numerator().get_str()},
                            {"c_den", rec.c.denominator().get_str()},
                            {"h_c", rec.h_c},
                            {"h_b", rec.h_b},
                            {"counts_per_level", counts},
                            {"total", rec.total_preimages},
                            {"has_depth5", rec.has_depth5},
                            {"closed", rec.closed}});
    }
    std::ostringstream csv;
    write_sweep_csv(records, csv);
    out.csv_override = csv.str();
    return out;
}

Output run_extremal(const Options& o) {
    const Rational c = parse_rational(o.c, "--c");
    const ExtremalPoint e = extremal_family(c);
    Output out;
    out.meta = meta_for("extremal", {{"c", c.to_string()}});
    out.columns = {"c", "b", "h_c", "h_b", "ratio"};
    out.rows.push_back({{"c", c.to_string()},
                        {"b", e.b.to_string()},
                        {"h_c", weil_height(c)},
                        {"h_b", weil_height(e.b)},
                        {"ratio", e.ratio}});
    return out;
}

Output run_count_heights(const Options& o) {
    const std::uint64_t cap = naive_cap_from_log(o.t);
    Output out;
    out.meta = meta_for("count-heights", {{"t", o.t}});
    out.columns = {"t", "height_cap", "count"};
    out.rows.push_back({{"t", o.t}, {"height_cap", cap}, {"count", count_bounded_height(o.t)}});
    return out;
}

void write_result(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("--output: cannot open '" + path + "' for writing");
    file << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact heights and rational preimages for the quadratic family x^2 + c.\n"
                 "Rationals are written 'p' or 'p/q' (exact; decimals rejected).\n"
                 "Exit codes: 0 ok, 2 usage, 3 domain error, 4 resource error."};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", o.output, "write output to FILE instead of stdout");
    };

    auto* height = app.add_subcommand("height", "Weil height of a rational");
    height->add_option("x", o.x, "rational p/q")->required();
    add_common(height);

    auto* canon = app.add_subcommand(
        "canon", "canonical height interval; PREHEIGHT_BIT_BUDGET overrides the bit budget");
    canon->add_option("--c", o.c, "parameter")->required();
    canon->add_option("--x", o.x, "point")->required();
    canon->add_option("--eps", o.eps, "radius bound")->capture_default_str();
    add_common(canon);

    auto* preimages = app.add_subcommand("preimages", "iterated rational preimages of a target");
    preimages->add_option("--c", o.c, "parameter")->required();
    preimages->add_option("--b", o.b, "target")->required();
    preimages->add_option("--depth", o.depth, "depth cap")->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(preimages);

    auto* preperiodic = app.add_subcommand("preperiodic", "preperiodic-vs-wandering verdict");
    preperiodic->add_option("--c", o.c, "parameter")->required();
    preperiodic->add_option("--x", o.x, "point")->required();
    add_common(preperiodic);

    auto* curve = app.add_subcommand(
        "curve", "embed a solution of f_c^5(x) = b and check membership/smoothness");
    curve->add_option("--c", o.c, "parameter")->required();
    curve->add_option("--x", o.x, "point")->required();
    curve->add_option("--b", o.b, "target")->required();
    add_common(curve);

    auto* fiber = app.add_subcommand("fiber-poly",
                                     "degree-32 fiber polynomial f_c^5(x) - b, exact coefficients");
    fiber->add_option("--c", o.c, "parameter")->required();
    fiber->add_option("--b", o.b, "target")->required();
    add_common(fiber);

    auto* sweep = app.add_subcommand(
        "sweep", "survey all c with naive height <= bound against a fixed target");
    sweep->add_option("--b", o.b, "target")->required();
    sweep->add_option("--bound", o.bound, "naive-height cap for c")->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--depth", o.depth, "depth cap per tree")->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--eps", o.eps, "tolerance for auxiliary checks")->capture_default_str();
    sweep->add_option("--jobs", o.jobs, "worker threads; output identical at any count")
        ->check(CLI::PositiveNumber)->capture_default_str();
    add_common(sweep);

    auto* extremal = app.add_subcommand("extremal", "b = f_c^5(0) and the ratio h(b)/h(c)");
    extremal->add_option("--c", o.c, "parameter with h(c) > 0")->required();
    add_common(extremal);

    auto* count = app.add_subcommand(
        "count-heights",
        "count rationals with Weil height <= t (cap = floor(exp(t)); exp(t) within a few "
        "ulps of an integer counts as reaching it)");
    count->add_option("--t", o.t, "log-height bound, t >= 0")->required();
    add_common(count);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Output out;
        if (height->parsed()) out = run_height(o);
        else if (canon->parsed()) out = run_canon(o);
        else if (preimages->parsed()) out = run_preimages(o);
        else if (preperiodic->parsed()) out = run_preperiodic(o);
        else if (curve->parsed()) out = run_curve(o);
        else if (fiber->parsed()) out = run_fiber_poly(o);
        else if (sweep->parsed()) out = run_sweep(o);
        else if (extremal->parsed()) out = run_extremal(o);
        else out = run_count_heights(o);
        write_result(render(out, o.format), o.output);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
