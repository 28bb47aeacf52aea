#include "arbelos/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>

#include "arbelos/export.hpp"
#include "arbelos/svg.hpp"

namespace arbelos {

namespace {

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParameterError(std::string(what) + ": expected an integer, got \"" +
                             std::string(text) + "\"");
    return value;
}

// "lo..hi" or a single index
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int single = parse_int(text, "index range");
        return {single, single};
    }
    int lo = parse_int(std::string_view(text).substr(0, dots), "index range");
    int hi = parse_int(std::string_view(text).substr(dots + 2), "index range");
    if (lo > hi)
        throw ParameterError("empty index range \"" + text + "\"");
    return {lo, hi};
}

std::vector<int> split_ints(const std::string& text, size_t expected, const char* what) {
    std::vector<int> parts;
    size_t start = 0;
    while (true) {
        size_t colon = text.find(':', start);
        std::string_view piece(text);
        piece = colon == std::string::npos ? piece.substr(start)
                                           : piece.substr(start, colon - start);
        parts.push_back(parse_int(piece, what));
        if (colon == std::string::npos)
            break;
        start = colon + 1;
    }
    if (parts.size() != expected)
        throw ParameterError(std::string(what) + ": expected " + std::to_string(expected) +
                             " colon-separated integers, got \"" + text + "\"");
    return parts;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw ParameterError("cannot open output file \"" + path + "\"");
    file << text;
    file.flush();
    if (!file)
        throw ParameterError("failed writing output file \"" + path + "\"");
}

struct GenerateArgs {
    std::string variant = "alpha";
    std::string a = "1";
    std::string b = "1";
    std::string range = "0..6";
    std::string format = "json";
    std::string out_path;
};

struct VerifyArgs {
    std::string variant = "all";
    std::string a = "1";
    std::string b = "1";
    bool grid = false;
    int bound = 8;
    std::string report_path;
};

struct LadderArgs {
    std::string variant = "alpha";
    std::string a = "1";
    std::string b = "1";
    int n = 1;
    std::string power = "1";
    std::string out_path;
};

struct FigureArgs {
    std::string variant = "alpha";
    std::string a = "1";
    std::string b = "1";
    std::string range = "-2..3";
    std::vector<std::string> gap_overlays;
    std::vector<std::string> line_overlays;
    double stroke_width = 1.5;
    bool labels = false;
    int canvas = 800;
    std::string out_path;
};

std::vector<ChainVariant> parse_variants(const std::string& text) {
    if (text == "all")
        return {ChainVariant::Alpha, ChainVariant::Beta, ChainVariant::Gamma};
    return {parse_variant(text)};
}

int do_generate(const GenerateArgs& args, std::ostream& out) {
    ChainSpec spec = configure_chain(Rational::parse(args.a), Rational::parse(args.b),
                                     parse_variant(args.variant));
    auto [lo, hi] = parse_range(args.range);
    std::string text = args.format == "csv"
                           ? members_csv(spec, lo, hi)
                           : members_document(spec, lo, hi).dump(2) + "\n";
    write_output(text, args.out_path, out);
    return 0;
}

int do_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<ChainVariant> variants = parse_variants(args.variant);
    std::vector<ChainSpec> specs;
    if (args.grid) {
        for (const auto& [a, b] : verification_grid())
            for (ChainVariant variant : variants)
                specs.push_back(configure_chain(a, b, variant));
    } else {
        Rational a = Rational::parse(args.a);
        Rational b = Rational::parse(args.b);
        for (ChainVariant variant : variants)
            specs.push_back(configure_chain(a, b, variant));
    }

    VerifyReport report = verify_many(specs, args.bound);

    out << "configurations: " << specs.size() << "  index bound: " << args.bound << "\n";
    for (const auto& [name, tally] : report.families) {
        out << "  " << name;
        for (size_t pad = name.size(); pad < 24; ++pad)
            out << ' ';
        out << tally.passed << "/" << tally.checked;
        if (tally.skipped > 0)
            out << "  (skipped " << tally.skipped << ")";
        out << "\n";
    }
    out << "total: " << report.total_passed() << "/" << report.total_checked() << " passed";
    if (report.total_skipped() > 0)
        out << ", " << report.total_skipped() << " skipped as degenerate";
    out << "\n";

    if (!report.skipped.empty()) {
        std::map<std::string, long> by_config;
        for (const SkippedCheck& skip : report.skipped)
            ++by_config["variant=" + std::string(to_string(skip.variant)) +
                        " a=" + skip.a.str() + " b=" + skip.b.str()];
        out << "degenerate configurations:\n";
        for (const auto& [key, count] : by_config)
            out << "  " << key << ": " << count << " checks skipped\n";
    }

    if (!args.report_path.empty())
        write_output(report_document(report).dump(2) + "\n", args.report_path, out);

    if (!report.all_passed()) {
        err << "FAILED: " << report.failures.size()
            << " identity violations; first counterexample:\n  "
            << report.failures.front().str() << "\n";
        return 2;
    }
    return 0;
}

int do_ladder(const LadderArgs& args, std::ostream& out) {
    ChainSpec spec = configure_chain(Rational::parse(args.a), Rational::parse(args.b),
                                     parse_variant(args.variant));
    Json doc = ladder_document(spec, args.n, Rational::parse(args.power));
    write_output(doc.dump(2) + "\n", args.out_path, out);
    return 0;
}

int do_figure(const FigureArgs& args, std::ostream& out) {
    FigureSpec fig{configure_chain(Rational::parse(args.a), Rational::parse(args.b),
                                   parse_variant(args.variant)),
                   0, 0, {}, {args.stroke_width, args.labels, args.canvas}};
    std::tie(fig.n_min, fig.n_max) = parse_range(args.range);
    for (const std::string& text : args.gap_overlays) {
        std::vector<int> parts = split_ints(text, 2, "--gap-overlay");
        fig.overlays.push_back(AnchorGapOverlay{parts[0], parts[1]});
    }
    for (const std::string& text : args.line_overlays) {
        std::vector<int> parts = split_ints(text, 3, "--line-overlay");
        fig.overlays.push_back(CenterLineOverlay{parts[0], parts[1], parts[2]});
    }
    write_output(render_figure(fig), args.out_path, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Pappus chain engine for the arbelos"};
    app.name("arbelos");
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "Emit chain members as JSON or CSV");
    gen->add_option("--variant", gen_args.variant, "chain variant: alpha, beta or gamma")
        ->capture_default_str();
    gen->add_option("--a", gen_args.a, "right inner radius, a rational like 3/2")
        ->capture_default_str();
    gen->add_option("--b", gen_args.b, "left inner radius")->capture_default_str();
    gen->add_option("--n", gen_args.range, "member index range lo..hi, or one index")
        ->capture_default_str();
    gen->add_option("--format", gen_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    gen->add_option("--out", gen_args.out_path, "output file; stdout when omitted");

    VerifyArgs ver_args;
    CLI::App* ver = app.add_subcommand("verify", "Check every identity over a sweep");
    ver->add_option("--variant", ver_args.variant, "alpha, beta, gamma or all")
        ->capture_default_str();
    ver->add_flag("--grid", ver_args.grid, "sweep the stock (a, b) grid instead of --a/--b");
    ver->add_option("--a", ver_args.a, "right inner radius")->capture_default_str();
    ver->add_option("--b", ver_args.b, "left inner radius")->capture_default_str();
    ver->add_option("--bound", ver_args.bound, "largest |index| swept")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    ver->add_option("--report", ver_args.report_path, "write the full JSON report here");

    LadderArgs lad_args;
    CLI::App* lad = app.add_subcommand("ladder", "Dump one ladder construction as JSON");
    lad->add_option("--variant", lad_args.variant, "chain variant")->capture_default_str();
    lad->add_option("--a", lad_args.a, "right inner radius")->capture_default_str();
    lad->add_option("--b", lad_args.b, "left inner radius")->capture_default_str();
    lad->add_option("--n", lad_args.n, "member index")->capture_default_str();
    lad->add_option("--power", lad_args.power, "inversion power, a positive rational")
        ->capture_default_str();
    lad->add_option("--out", lad_args.out_path, "output file; stdout when omitted");

    FigureArgs fig_args;
    CLI::App* fig = app.add_subcommand("figure", "Render a chain figure as SVG");
    fig->add_option("--variant", fig_args.variant, "chain variant")->capture_default_str();
    fig->add_option("--a", fig_args.a, "right inner radius")->capture_default_str();
    fig->add_option("--b", fig_args.b, "left inner radius")->capture_default_str();
    fig->add_option("--n", fig_args.range, "member index range lo..hi")->capture_default_str();
    fig->add_option("--gap-overlay", fig_args.gap_overlays,
                    "anchor line overlay \"i:n\"; repeatable");
    fig->add_option("--line-overlay", fig_args.line_overlays,
                    "center line overlay \"i:j:n\"; repeatable");
    fig->add_option("--stroke-width", fig_args.stroke_width, "stroke width in pixels")
        ->capture_default_str();
    fig->add_flag("--labels", fig_args.labels, "draw point labels");
    fig->add_option("--canvas", fig_args.canvas, "canvas width in pixels")
        ->capture_default_str();
    fig->add_option("--out", fig_args.out_path, "output file; stdout when omitted");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed())
            return do_generate(gen_args, out);
        if (ver->parsed())
            return do_verify(ver_args, out, err);
        if (lad->parsed())
            return do_ladder(lad_args, out);
        if (fig->parsed())
            return do_figure(fig_args, out);
        err << "error: no subcommand selected\n";
        return 1;
    } catch (const DegenerateGeometryError& e) {
        err << "degenerate geometry: " << e.what() << "\n";
        return 3;
    } catch (const NoIntersectionError& e) {
        err << "no intersection: " << e.what() << "\n";
        return 3;
    } catch (const UndefinedImageError& e) {
        err << "undefined image: " << e.what() << "\n";
        return 3;
    } catch (const RenderError& e) {
        err << "render error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace arbelos
