#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gmotzkin/bijection.hpp"
#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/formulas.hpp"
#include "gmotzkin/path.hpp"
#include "gmotzkin/render.hpp"
#include "gmotzkin/series_gf.hpp"
#include "gmotzkin/verify.hpp"

namespace gmotzkin::cli {

namespace {

// Input errors that map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t n = 0;
    std::string avoid;
    bool no_h_on_axis = false;
    std::string eval;
    std::string path;
    std::string gf;
    std::size_t order = 10;
    bool list = false;
    std::string format = "text";
    std::size_t max_n = 8;
};

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
        parts.push_back(cur);
    if (!s.empty() && s.back() == ',')
        parts.emplace_back();
    return parts;
}

Constraints constraints_from(const Options& o)
{
    Constraints c;
    if (!o.avoid.empty()) {
        for (const auto& token : split_commas(o.avoid)) {
            try {
                c.avoid.push_back(Pattern::parse(token));
            } catch (const PathError& e) {
                throw UsageError("invalid pattern '" + token + "': " + e.what());
            }
        }
    }
    c.forbid_h_on_axis = o.no_h_on_axis;
    return c;
}

struct Point {
    Integer a, b, c;
};

Point eval_point(const std::string& text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 3)
        throw UsageError("invalid --eval '" + text + "': expected three comma-separated integers");
    Integer v[3];
    for (int i = 0; i < 3; ++i) {
        const std::string& t = parts[static_cast<std::size_t>(i)];
        const bool ok = !t.empty() && t.find_first_not_of("0123456789", t[0] == '-' ? 1 : 0) == std::string::npos &&
                        t != "-";
        if (!ok)
            throw UsageError("invalid --eval component '" + t + "'");
        v[i] = Integer(t);
    }
    return {v[0], v[1], v[2]};
}

Path path_from(const std::string& text)
{
    try {
        return Path::parse(text);
    } catch (const PathError& e) {
        throw UsageError("invalid path '" + text + "': " + e.what());
    }
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* a : allowed)
        if (format == a)
            return;
    throw UsageError("invalid --format '" + format + "'");
}

void print_polynomial(std::ostream& out, const Polynomial& p, const std::string& format)
{
    if (format == "json")
        out << to_json(p).dump() << '\n';
    else
        out << p.to_string() << '\n';
}

int cmd_count(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "json"});
    const Constraints c = constraints_from(o);
    if (!o.eval.empty()) {
        const Point pt = eval_point(o.eval);
        const Integer v = class_count(o.n, c, pt.a, pt.b, pt.c);
        if (o.format == "json")
            out << nlohmann::json(v.get_str()).dump() << '\n';
        else
            out << v << '\n';
        return kExitOk;
    }
    print_polynomial(out, weight_sum(o.n, c), o.format);
    return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "json"});
    const Constraints c = constraints_from(o);
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for_each_path(o.n, c, [&](std::string_view w) {
            arr.push_back(std::string(w));
            return true;
        });
        out << arr.dump() << '\n';
        return kExitOk;
    }
    for_each_path(o.n, c, [&](std::string_view w) {
        out << w << '\n';
        return true;
    });
    return kExitOk;
}

int cmd_sigma(const Options& o, std::ostream& out, bool inverse)
{
    const Path p = path_from(o.path);
    const char* forbidden = inverse ? "uvu" : "uvv";
    if (word::contains(p.word(), forbidden))
        throw UsageError("path '" + o.path + "' contains " + forbidden);
    out << (inverse ? sigma_inv(p) : sigma(p)).word() << '\n';
    return kExitOk;
}

int cmd_fixed_points(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "json"});
    const FixedPointCounts f = fixed_points(o.n, o.list);
    if (o.format == "json") {
        nlohmann::json j{{"n", o.n}, {"F", f.total}, {"a", f.a}, {"b", f.b}, {"c", f.c}};
        if (o.list) {
            j["paths"] = nlohmann::json::array();
            for (const auto& p : f.paths)
                j["paths"].push_back(p.word());
        }
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "F=" << f.total << " a=" << f.a << " b=" << f.b << " c=" << f.c << '\n';
    for (const auto& p : f.paths)
        out << p.word() << '\n';
    return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "json"});
    const auto kind = parse_gf_kind(o.gf);
    if (!kind)
        throw UsageError("invalid --gf '" + o.gf + "'");
    const PowerSeries s = expand(*kind, o.order);
    if (!o.eval.empty()) {
        const Point pt = eval_point(o.eval);
        for (const auto& c : s.coeffs())
            out << c.eval(pt.a, pt.b, pt.c) << '\n';
        return kExitOk;
    }
    if (o.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : s.coeffs())
            arr.push_back(to_json(c));
        out << arr.dump() << '\n';
        return kExitOk;
    }
    for (const auto& c : s.coeffs())
        out << c.to_string() << '\n';
    return kExitOk;
}

std::string join(const std::vector<Integer>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ',';
        s += v[i].get_str();
    }
    return s;
}

int cmd_tables(const Options& o, std::ostream& out)
{
    const std::size_t hi = o.max_n;
    out << "G_uvv specializations, n = 0.." << hi << '\n';
    for (const auto& row : specialization_rows()) {
        std::vector<Integer> seq;
        for (std::size_t n = 0; n <= hi; ++n)
            seq.push_back(g_uvv_closed(n, 1).eval(row.a, row.b, row.c));
        out << "(" << row.a << "," << row.b << "," << row.c << ") " << row.label << ": " << join(seq) << '\n';
    }
    for (const char* row : {"(a,0,b) M_n(a,b)", "(a,b,b^2) S_n(a,b)"}) {
        out << row << ':';
        const bool motzkin = row[3] == '0';
        for (std::size_t n = 0; n <= std::min<std::size_t>(hi, 4); ++n)
            out << (n ? "; " : " ") << (motzkin ? motzkin_weight(n) : schroder_weight(n)).to_string();
        out << '\n';
    }
    out << "Fixed points of sigma, n = 0.." << hi << '\n';
    out << "n F a b c\n";
    for (std::size_t n = 0; n <= hi; ++n) {
        const FixedPointCounts f = fixed_points(n);
        out << n << ' ' << f.total << ' ' << f.a << ' ' << f.b << ' ' << f.c << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    VerifyConfig cfg;
    cfg.class_max_n = o.max_n;
    cfg.full_max_n = std::min<std::size_t>(o.max_n, 8);
    Verifier v(cfg);
    bool all = true;
    for (int id = 1; id <= kCriterionCount; ++id) {
        const CriterionResult r = v.run(id);
        all = all && r.pass();
        out << "AC" << id << ' ' << (r.pass() ? "PASS" : "FAIL") << ' ' << r.title << '\n';
        for (const auto& c : r.checks)
            out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.label << " (" << c.detail << ")\n";
    }
    return all ? kExitOk : kExitVerifyFailed;
}

int cmd_render(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "svg"});
    const Path p = path_from(o.path);
    out << (o.format == "svg" ? render_svg(p) : render_text(p));
    return kExitOk;
}

// CLI11 would read "-3,4,16" as a flag; glue such values to their option.
std::vector<std::string> glue_negative_values(const std::vector<std::string>& args)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--eval" && i + 1 < args.size() && args[i + 1].size() > 1 && args[i + 1][0] == '-' &&
            std::isdigit(static_cast<unsigned char>(args[i + 1][1]))) {
            out.push_back("--eval=" + args[i + 1]);
            ++i;
        } else {
            out.push_back(args[i]);
        }
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"G-Motzkin path enumeration, the sigma bijection and its generating functions", "gmotzkin"};
    app.require_subcommand(1);
    Options o;

    auto* count = app.add_subcommand("count", "Weight polynomial or evaluated count of a path class");
    auto* enumerate = app.add_subcommand("enumerate", "List the paths of a class");
    auto* sig = app.add_subcommand("sigma", "Apply sigma to a uvv-avoiding path");
    auto* sig_inv = app.add_subcommand("sigma-inv", "Apply the inverse of sigma to a uvu-avoiding path");
    auto* fixed = app.add_subcommand("fixed-points", "Count the fixed points of sigma");
    auto* series = app.add_subcommand("series", "Expand a generating function");
    auto* tables = app.add_subcommand("tables", "Print the specialization and fixed-point tables");
    auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
    auto* render = app.add_subcommand("render", "Draw a path as text or SVG");

    for (auto* sc : {count, enumerate, fixed})
        sc->add_option("--n", o.n, "Path length")->required();
    for (auto* sc : {count, enumerate}) {
        sc->add_option("--avoid", o.avoid, "Comma-separated patterns over u,d,h,v");
        sc->add_flag("--no-h-on-axis", o.no_h_on_axis, "Forbid h-steps at height 0");
    }
    for (auto* sc : {count, series})
        sc->add_option("--eval", o.eval, "Evaluation point a,b,c");
    for (auto* sc : {sig, sig_inv, render})
        sc->add_option("--path", o.path, "Path word")->required();
    series->add_option("--gf", o.gf, "G, G_uvu, G_uvv, T, Gbar_uvv, C, F or A")->required();
    series->add_option("--order", o.order, "Truncation order");
    fixed->add_flag("--list", o.list, "Also list the fixed points");
    for (auto* sc : {count, enumerate, fixed, series})
        sc->add_option("--format", o.format, "text or json");
    render->add_option("--format", o.format, "text or svg");
    tables->add_option("--max-n", o.max_n, "Largest n")->default_val(10);
    verify->add_option("--max-n", o.max_n, "Largest n for the avoidance classes")->default_val(8);

    std::vector<std::string> reversed = glue_negative_values(args);
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (count->parsed())
            return cmd_count(o, out);
        if (enumerate->parsed())
            return cmd_enumerate(o, out);
        if (sig->parsed())
            return cmd_sigma(o, out, false);
        if (sig_inv->parsed())
            return cmd_sigma(o, out, true);
        if (fixed->parsed())
            return cmd_fixed_points(o, out);
        if (series->parsed())
            return cmd_series(o, out);
        if (tables->parsed())
            return cmd_tables(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (render->parsed())
            return cmd_render(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gmotzkin::cli
