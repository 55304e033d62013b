#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "latrect/bijections.hpp"
#include "latrect/counting.hpp"
#include "latrect/formulas.hpp"
#include "latrect/geometry.hpp"
#include "latrect/oeis.hpp"
#include "latrect/render.hpp"

#ifndef LATRECT_DEFAULT_FIXTURE_DIR
#define LATRECT_DEFAULT_FIXTURE_DIR "data/oeis"
#endif

namespace latrect::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;
using formulas::SequenceId;

struct Context {
    std::ostream &out;
    std::ostream &err;
    bool as_json = false;
    bool timing = true;
    json report = json::object();
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename F>
auto timed(Context &ctx, const std::string &key, F &&fn) {
    const auto start = Clock::now();
    auto result = fn();
    if (ctx.timing)
        ctx.report["timings_ms"][key] = elapsed_ms(start);
    return result;
}

ShapeSpec shape_for(SequenceId id, int n) {
    switch (id) {
    case SequenceId::S: return ShapeSpec::staircase(n);
    case SequenceId::AHalf: return ShapeSpec::aztec_half(n);
    case SequenceId::BHalf: return ShapeSpec::biscuit_half(n);
    case SequenceId::A: return ShapeSpec::aztec(n);
    case SequenceId::B: return ShapeSpec::biscuit(n);
    }
    throw std::invalid_argument("unknown sequence");
}

// ---------------------------------------------------------------- count

int cmd_count(Context &ctx, const std::string &spec_text, const std::string &method) {
    const ShapeSpec spec = parse_shape_spec(spec_text);
    ctx.report["shapes"] = json::array({format_shape_spec(spec)});

    std::vector<Method> methods;
    if (method == "all")
        methods = {Method::Naive, Method::Fast, Method::Formula};
    else if (method == "naive")
        methods = {Method::Naive};
    else if (method == "fast")
        methods = {Method::Fast};
    else
        methods = {Method::Formula};

    for (auto m : methods)
        if (m == Method::Naive && spec.order > kNaiveOrderLimit)
            throw UsageError("the naive oracle is limited to order <= " + std::to_string(kNaiveOrderLimit));

    std::vector<std::pair<Method, Count>> results;
    for (auto m : methods) {
        const std::string name(to_string(m));
        ctx.report["methods"].push_back(name);
        const Count c = timed(ctx, name, [&] { return count_family(spec, m); });
        ctx.report["counts"][name] = c.to_string();
        results.emplace_back(m, c);
    }

    const bool agree = std::all_of(results.begin(), results.end(),
                                   [&](const auto &r) { return r.second == results.front().second; });
    ctx.report["verification"]["agree"] = agree;
    if (!agree) {
        if (!ctx.as_json) {
            ctx.err << "methods disagree on " << format_shape_spec(spec) << ":";
            for (const auto &[m, c] : results)
                ctx.err << " " << to_string(m) << "=" << c;
            ctx.err << "\n";
        }
        return kMismatch;
    }
    if (!ctx.as_json) {
        ctx.out << results.front().second << "\n";
        if (results.size() > 1)
            ctx.out << "agreement: naive fast formula\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

struct Failure {
    SequenceId family;
    int n;
    std::string detail;
};

int cmd_verify(Context &ctx, int max_n, const std::vector<std::string> &family_names) {
    if (max_n < 1)
        throw UsageError("--max-n must be >= 1");
    if (max_n > kNaiveOrderLimit)
        throw UsageError("--max-n is limited to " + std::to_string(kNaiveOrderLimit) + " (naive oracle guard)");

    std::vector<SequenceId> families;
    if (family_names.empty())
        families.assign(std::begin(formulas::kAllSequences), std::end(formulas::kAllSequences));
    for (const auto &name : family_names) {
        const auto id = formulas::sequence_from_string(name);
        if (!id)
            throw UsageError("unknown family '" + name + "' (expected s, a_half, b_half, a, b)");
        families.push_back(*id);
    }

    std::optional<Failure> worst;
    std::int64_t checks = 0;
    const auto start = Clock::now();
    for (auto family : families) {
        json rows = json::array();
        for (int n = 1; n <= max_n; ++n) {
            const auto region = build(shape_for(family, n));
            std::map<std::string, Count> values{
                {"naive", count_naive(region)},
                {"fast", count_fast(region)},
                {"binomial", formulas::binomial_form(family, n)},
                {"polynomial", formulas::polynomial_form(family, n)},
            };
            if (auto rec = formulas::recurrence_form(family, n))
                values.emplace("recurrence", *rec);
            ++checks;

            const Count reference = values.at("naive");
            std::string detail;
            for (const auto &[name, v] : values)
                if (v != reference)
                    detail += " " + name + "=" + v.to_string();
            if (!detail.empty()) {
                detail = "naive=" + reference.to_string() + detail;
                if (!worst || n < worst->n)
                    worst = Failure{family, n, detail};
            }
            rows.push_back({{"n", n}, {"value", reference.to_string()}, {"ok", detail.empty()}});
        }
        ctx.report["verification"]["families"][std::string(formulas::to_string(family))] = rows;
    }
    if (ctx.timing)
        ctx.report["timings_ms"]["verify"] = elapsed_ms(start);
    ctx.report["verification"]["checks"] = checks;
    ctx.report["verification"]["max_n"] = max_n;

    if (worst) {
        const std::string msg = "mismatch for " + std::string(formulas::to_string(worst->family)) + " at n=" +
                                std::to_string(worst->n) + ": " + worst->detail;
        ctx.report["verification"]["counterexample"] = msg;
        if (!ctx.as_json)
            ctx.err << msg << "\n";
        return kMismatch;
    }
    if (!ctx.as_json) {
        for (auto family : families)
            ctx.out << formulas::to_string(family) << ": n=1.." << max_n << " naive = fast = closed forms\n";
        ctx.out << "all " << checks << " checks passed\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- bijections

int cmd_bijections(Context &ctx, const std::string &map_name, int max_n) {
    std::vector<std::string_view> maps;
    if (map_name.empty()) {
        maps.assign(std::begin(bijections::kMapNames), std::end(bijections::kMapNames));
    } else {
        const auto *it = std::find(std::begin(bijections::kMapNames), std::end(bijections::kMapNames), map_name);
        if (it == std::end(bijections::kMapNames))
            throw UsageError("unknown map '" + map_name + "'");
        maps.push_back(*it);
    }
    if (max_n < 1 || max_n > bijections::kMaxExhaustiveOrder)
        throw UsageError("--max-n must be in 1.." + std::to_string(bijections::kMaxExhaustiveOrder));

    bool all_ok = true;
    const auto start = Clock::now();
    for (auto name : maps) {
        for (int n = 1; n <= max_n; ++n) {
            const auto rep = bijections::verify_bijection(name, n);
            all_ok = all_ok && rep.verified();
            json row{{"map", rep.name},
                     {"n", rep.n},
                     {"domain_size", rep.domain_size.to_string()},
                     {"image_size", rep.image_size.to_string()},
                     {"injective", rep.is_injective},
                     {"surjective", rep.is_surjective},
                     {"roundtrip", rep.roundtrip_ok},
                     {"verified", rep.verified()}};
            if (rep.counterexample)
                row["counterexample"] = *rep.counterexample;
            ctx.report["verification"]["maps"].push_back(row);
            if (!ctx.as_json) {
                ctx.out << rep.name << " n=" << rep.n << " domain=" << rep.domain_size
                        << " image=" << rep.image_size << (rep.verified() ? " verified" : " FAILED");
                if (rep.counterexample)
                    ctx.out << " (" << *rep.counterexample << ")";
                ctx.out << "\n";
            }
        }
    }
    if (ctx.timing)
        ctx.report["timings_ms"]["bijections"] = elapsed_ms(start);
    ctx.report["verification"]["all_verified"] = all_ok;
    return all_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- oeis

std::filesystem::path default_cache_dir() {
    if (const char *dir = std::getenv("LATRECT_OEIS_CACHE"); dir && *dir)
        return dir;
    if (const char *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "latrect" / "oeis";
    if (const char *home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "latrect" / "oeis";
    return ".latrect-cache/oeis";
}

std::filesystem::path default_fixture_dir() {
    if (const char *dir = std::getenv("LATRECT_FIXTURE_DIR"); dir && *dir)
        return dir;
    return LATRECT_DEFAULT_FIXTURE_DIR;
}

int cmd_oeis(Context &ctx, std::vector<std::string> ids, int terms, const std::string &source,
             const std::string &fixture_dir, const std::string &cache_dir) {
    if (ids.empty())
        ids.assign(std::begin(oeis::kKnownIds), std::end(oeis::kKnownIds));
    for (const auto &id : ids)
        if (!oeis::paired_sequence(id))
            throw UsageError("'" + id + "' is not one of A004320, A002417, A330805, A213840");
    if (terms < 1)
        throw UsageError("--terms must be >= 1");

    oeis::SourcePolicy policy = oeis::SourcePolicy::FixtureOnly;
    std::shared_ptr<oeis::Transport> transport;
    if (source == "cache") {
        policy = oeis::SourcePolicy::CacheOnly;
    } else if (source == "network") {
        policy = oeis::SourcePolicy::NetworkThenCache;
        transport = oeis::make_https_transport();
    }
    const oeis::Client client(cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir),
                              fixture_dir.empty() ? default_fixture_dir() : std::filesystem::path(fixture_dir),
                              transport);

    bool all_ok = true;
    const auto start = Clock::now();
    for (const auto &id : ids) {
        const auto seq = *oeis::paired_sequence(id);
        const auto rep = oeis::check(client, id, seq, terms, policy);
        all_ok = all_ok && rep.ok();
        json row{{"sequence_id", rep.sequence_id},
                 {"sequence", std::string(formulas::to_string(seq))},
                 {"range", {rep.first_n, rep.last_n}},
                 {"matches", rep.matches},
                 {"bfile_offset", rep.bfile_offset},
                 {"source", std::string(oeis::to_string(rep.source))},
                 {"ok", rep.ok()}};
        if (rep.first_mismatch)
            row["first_mismatch"] = {{"n", rep.first_mismatch->n},
                                     {"expected", rep.first_mismatch->expected.to_string()},
                                     {"got", rep.first_mismatch->got.to_string()}};
        ctx.report["verification"]["sequences"].push_back(row);
        if (!ctx.as_json) {
            ctx.out << rep.sequence_id << "  " << formulas::to_string(seq) << "  " << rep.matches << "/"
                    << rep.range_length() << "  " << oeis::to_string(rep.source) << "  offset "
                    << rep.bfile_offset;
            if (rep.first_mismatch)
                ctx.out << "  first mismatch at n=" << rep.first_mismatch->n << ": oeis "
                        << rep.first_mismatch->expected << " vs " << rep.first_mismatch->got;
            ctx.out << "\n";
        }
    }
    if (ctx.timing)
        ctx.report["timings_ms"]["oeis"] = elapsed_ms(start);
    return all_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------- render

std::optional<Axis> symmetry_axis(const ShapeSpec &spec) {
    switch (spec.family) {
    case Family::Aztec: return Axis::lattice(0);
    case Family::Biscuit:
    case Family::BiscuitHalf: return Axis::half(0);
    case Family::AztecHalf:
        if (spec.side == HalfSide::Top || spec.side == HalfSide::Bottom)
            return Axis::lattice(0);
        return std::nullopt;
    case Family::Staircase: return std::nullopt;
    }
    return std::nullopt;
}

int cmd_render(Context &ctx, const std::string &spec_text, const std::string &format, bool with_axis,
               const std::string &out_path) {
    const ShapeSpec spec = parse_shape_spec(spec_text);
    ctx.report["shapes"] = json::array({format_shape_spec(spec)});
    std::optional<Axis> axis;
    if (with_axis) {
        axis = symmetry_axis(spec);
        if (!axis)
            throw UsageError(format_shape_spec(spec) + " has no vertical symmetry axis");
        ctx.report["axis"] = to_string(*axis);
    }
    const auto region = build(spec);
    const std::string text = format == "svg" ? render_svg(region, axis) : render_ascii(region, axis);
    ctx.report["format"] = format;

    if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
        file << text;
        if (!file)
            throw UsageError("cannot write " + out_path);
        ctx.report["out"] = out_path;
    } else if (ctx.as_json) {
        ctx.report["render"] = text;
    } else {
        ctx.out << text;
    }
    return kOk;
}

std::string join(const std::vector<std::string> &args) {
    std::string s;
    for (const auto &a : args) {
        if (!s.empty())
            s += ' ';
        s += a;
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Count lattice rectangles in Aztec diamonds, square biscuits and staircases", "latrect"};
    app.fallthrough();
    app.require_subcommand(1);

    bool json_out = false;
    bool no_timing = false;
    app.add_flag("--json", json_out, "Emit a JSON run report");
    app.add_flag("--no-timing", no_timing, "Omit timings from the JSON report");

    std::string spec_text;
    std::string method = "fast";
    auto *count = app.add_subcommand("count", "Count the lattice rectangles inside a shape");
    count->add_option("spec", spec_text, "Shape, e.g. aztec:5 or staircase:3:ul")->required();
    count->add_option("--method", method, "naive | fast | formula | all")
        ->check(CLI::IsMember({"naive", "fast", "formula", "all"}));

    int verify_max_n = 10;
    std::vector<std::string> families;
    auto *verify = app.add_subcommand("verify", "Cross-check naive, fast and closed forms for n = 1..max");
    verify->add_option("--max-n", verify_max_n, "Largest order")->required();
    verify->add_option("--families", families, "Comma-separated subset of s,a_half,b_half,a,b")->delimiter(',');

    std::string map_name;
    int bij_max_n = 12;
    auto *bij = app.add_subcommand("bijections", "Exhaustively verify the rectangle bijections");
    bij->add_option("--map", map_name, "quadruple | type_l | type_r | type_c | biscuit_expand");
    bij->add_option("--max-n", bij_max_n, "Largest order (<= 20)");

    std::vector<std::string> ids;
    int terms = 20;
    std::string source = "fixture";
    std::string fixture_dir;
    std::string cache_dir;
    auto *oeis_cmd = app.add_subcommand("oeis", "Compare the sequences with OEIS b-files");
    oeis_cmd->add_option("--ids", ids, "Comma-separated A-numbers")->delimiter(',');
    oeis_cmd->add_option("--terms", terms, "Number of terms to compare");
    oeis_cmd->add_option("--source", source, "fixture | cache | network")
        ->check(CLI::IsMember({"fixture", "cache", "network"}));
    oeis_cmd->add_option("--fixtures", fixture_dir, "Fixture directory");
    oeis_cmd->add_option("--cache", cache_dir, "Cache directory (default $LATRECT_OEIS_CACHE)");

    std::string render_spec;
    std::string format = "ascii";
    bool with_axis = false;
    std::string out_path;
    auto *render = app.add_subcommand("render", "Draw a shape as ASCII or SVG");
    render->add_option("spec", render_spec, "Shape spec")->required();
    render->add_option("--format", format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));
    render->add_flag("--axis", with_axis, "Overlay the vertical symmetry axis");
    render->add_option("--out", out_path, "Write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kUsage;
    }

    Context ctx{out, err, json_out, !no_timing};
    ctx.report["command"] = join(args);

    int status = kOk;
    const auto start = Clock::now();
    try {
        if (*count)
            status = cmd_count(ctx, spec_text, method);
        else if (*verify)
            status = cmd_verify(ctx, verify_max_n, families);
        else if (*bij)
            status = cmd_bijections(ctx, map_name, bij_max_n);
        else if (*oeis_cmd)
            status = cmd_oeis(ctx, ids, terms, source, fixture_dir, cache_dir);
        else if (*render)
            status = cmd_render(ctx, render_spec, format, with_axis, out_path);
    } catch (const ParseError &e) {
        status = kUsage;
        ctx.report["error"] = std::string("invalid shape spec: ") + e.what();
    } catch (const UsageError &e) {
        status = kUsage;
        ctx.report["error"] = e.what();
    } catch (const oeis::FetchError &e) {
        status = kExternal;
        ctx.report["error"] = e.what();
    } catch (const OverflowError &e) {
        status = kUsage;
        ctx.report["error"] = e.what();
    } catch (const std::invalid_argument &e) {
        status = kUsage;
        ctx.report["error"] = e.what();
    } catch (const std::domain_error &e) {
        status = kUsage;
        ctx.report["error"] = e.what();
    } catch (const std::logic_error &e) {
        // Internal disagreement between closed forms.
        status = kMismatch;
        ctx.report["error"] = e.what();
    } catch (const std::runtime_error &e) {
        status = kExternal;
        ctx.report["error"] = e.what();
    }
    if (ctx.timing)
        ctx.report["timings_ms"]["wall"] = elapsed_ms(start);
    ctx.report["exit_status"] = status;

    if (ctx.as_json)
        out << ctx.report.dump(2) << "\n";
    else if (ctx.report.contains("error"))
        err << "error: " << ctx.report["error"].get<std::string>() << "\n";
    return status;
}

}  // namespace latrect::cli
