/*
   Copyright 2026 The unirule Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "unirule/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "unirule/bounds.hpp"
#include "unirule/error.hpp"

namespace unirule::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(const std::string& s, std::string_view what) {
    std::uint64_t v = 0;
    const auto t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw Error(ErrorCode::Usage, "bad " + std::string(what) + " '" + s + "'");
    }
    return v;
}

unsigned parse_unsigned(const std::string& s, std::string_view what) {
    const auto v = parse_u64(s, what);
    if (v > UINT32_MAX) throw Error(ErrorCode::Usage, std::string(what) + " out of range");
    return static_cast<unsigned>(v);
}

Command parse_command(const std::string& s) {
    if (s == "certify") return Command::Certify;
    if (s == "hasse") return Command::Hasse;
    if (s == "count") return Command::Count;
    if (s == "fermat-scan") return Command::FermatScan;
    if (s == "bounds") return Command::Bounds;
    throw Error(ErrorCode::Usage, "unknown command '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw Error(ErrorCode::Usage, "format must be json, csv or text, got '" + s + "'");
}

SmoothnessMode parse_smoothness(const std::string& s) {
    if (s == "probe") return SmoothnessMode::Probe;
    if (s == "assert") return SmoothnessMode::Assert;
    throw Error(ErrorCode::Usage, "smoothness must be probe or assert, got '" + s + "'");
}

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw Error(ErrorCode::ConfigSyntax, "expected boolean, got '" + s + "'");
}

std::vector<unsigned> parse_degree_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_unsigned(item, "degree"));
    return out;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + ' ' : s + std::string(width - s.size(), ' ');
}

std::string join(const std::vector<unsigned>& v, char sep) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : std::string(1, sep)) + std::to_string(x);
    return s;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const Certificate& c, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(c).dump(2) + "\n";
    const std::string field = c.k == 1 ? std::to_string(c.p) : std::to_string(c.p) + "^" + std::to_string(c.k);
    const std::string count = c.count ? std::to_string(c.count->projective_points) : "";
    const std::string coeff = c.hasse ? std::to_string(c.hasse->value()) : "";
    const std::string depth = c.smoothness.probe_depth ? std::to_string(*c.smoothness.probe_depth) : "";
    if (fmt == OutputFormat::Csv) {
        std::string s =
            "ambient_n,degrees,field,method,count,coefficient,residue,modulus,verdict,smoothness,probe_depth,"
            "classification\n";
        s += std::to_string(c.ambient_n) + ',' + join(c.degrees, ' ') + ',' + field + ',' +
             std::string(to_string(c.method)) + ',' + count + ',' + coeff + ',' + std::to_string(c.residue) + ',' +
             std::to_string(c.modulus) + ',' + std::string(to_string(c.verdict)) + ',' +
             std::string(to_string(c.smoothness.kind)) + ',' + depth + ',' + std::string(to_string(c.classification)) +
             '\n';
        return s;
    }
    std::string s;
    auto row = [&](const std::string& k, const std::string& v) { s += pad(k, 16) + (v.empty() ? "-" : v) + '\n'; };
    row("field", "F_" + field);
    row("ambient_n", std::to_string(c.ambient_n));
    row("degrees", join(c.degrees, ','));
    for (const auto& f : c.forms) row("form", f);
    row("classification", std::string(to_string(c.classification)));
    row("method", std::string(to_string(c.method)));
    row("count", count);
    row("coefficient", coeff);
    row("residue", std::to_string(c.residue));
    row("modulus", std::to_string(c.modulus));
    row("smoothness", std::string(to_string(c.smoothness.kind)) + (depth.empty() ? "" : " (depth " + depth + ")"));
    row("verdict", std::string(to_string(c.verdict)));
    return s;
}

std::string render_count(const Field& field, unsigned n, const std::vector<unsigned>& degrees, const CountResult& r,
                         OutputFormat fmt) {
    const std::uint64_t residue = r.projective_points % r.q;
    if (fmt == OutputFormat::Json) {
        json j;
        j["ambient_n"] = n;
        j["degrees"] = degrees;
        j["field"] = json{{"p", field.p()}, {"k", field.k()}};
        j["q"] = r.q;
        j["affine_cone_zeros"] = r.affine_cone_zeros;
        j["projective_points"] = r.projective_points;
        j["residue"] = residue;
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::Csv) {
        return "ambient_n,degrees,field,q,affine_cone_zeros,projective_points,residue\n" + std::to_string(n) + ',' +
               join(degrees, ' ') + ',' + field.designation() + ',' + std::to_string(r.q) + ',' +
               std::to_string(r.affine_cone_zeros) + ',' + std::to_string(r.projective_points) + ',' +
               std::to_string(residue) + '\n';
    }
    std::string s;
    auto row = [&](const std::string& k, const std::string& v) { s += pad(k, 20) + v + '\n'; };
    row("field", "F_" + field.designation());
    row("ambient_n", std::to_string(n));
    row("degrees", join(degrees, ','));
    row("affine_cone_zeros", std::to_string(r.affine_cone_zeros));
    row("projective_points", std::to_string(r.projective_points));
    row("residue_mod_q", std::to_string(residue));
    return s;
}

json to_json(const FermatReport& r) {
    json j;
    j["p"] = r.p;
    j["d"] = r.d;
    j["n"] = r.n;
    j["coprime"] = r.p_coprime_d;
    j["sk_applicable"] = r.sk_applicable;
    j["sk_nu"] = r.sk_nu ? json(*r.sk_nu) : json(nullptr);
    j["unirational"] = to_string(r.unirational);
    j["paper_nonuniruled"] = r.paper_nonuniruled;
    j["verified_coefficient"] = r.verified_coefficient ? json(*r.verified_coefficient) : json(nullptr);
    return j;
}

std::string render(const std::vector<FermatReport>& rows, OutputFormat fmt) {
    std::string s;
    if (fmt == OutputFormat::Json) {
        for (const auto& r : rows) s += to_json(r).dump() + '\n';
        return s;
    }
    if (fmt == OutputFormat::Csv) {
        s = fermat_csv_header() + '\n';
        for (const auto& r : rows) s += to_csv(r) + '\n';
        return s;
    }
    s = pad("p", 8) + pad("d", 6) + pad("n", 6) + pad("coprime", 9) + pad("sk_applicable", 15) + pad("sk_nu", 7) +
        pad("unirational", 21) + pad("paper_nonuniruled", 19) + "verified_coefficient\n";
    for (const auto& r : rows) {
        std::string unirational(to_string(r.unirational));
        if (r.unirational != Unirationality::Unknown) unirational += " (by criterion)";
        s += pad(std::to_string(r.p), 8) + pad(std::to_string(r.d), 6) + pad(std::to_string(r.n), 6) +
             pad(r.p_coprime_d ? "yes" : "no", 9) + pad(r.sk_applicable ? "yes" : "no", 15) +
             pad(r.sk_nu ? std::to_string(*r.sk_nu) : "-", 7) + pad(unirational, 21) +
             pad(r.paper_nonuniruled ? "yes" : "no", 19) +
             (r.verified_coefficient ? std::to_string(*r.verified_coefficient) : "-") + '\n';
    }
    return s;
}

std::string render(const std::vector<BoundsReport>& rows, OutputFormat fmt) {
    std::string s;
    if (fmt == OutputFormat::Json) {
        for (const auto& r : rows) {
            json j;
            j["n"] = r.n;
            j["degrees"] = r.degrees;
            j["classification"] = to_string(r.classification);
            j["sum_d"] = r.sum_d;
            j["rc_locus_codim_lb"] = r.rc_locus_codim_lb;
            j["rc_vacuous"] = r.rc_vacuous;
            j["uniruled_locus_codim_lb"] = r.uniruled_locus_codim_lb;
            j["uniruled_vacuous"] = r.uniruled_vacuous;
            j["no_rational_curves"] = r.no_rational_curves;
            j["hypersurface_moduli_dim"] =
                r.hypersurface_moduli_dim ? json(*r.hypersurface_moduli_dim) : json(nullptr);
            s += j.dump() + '\n';
        }
        return s;
    }
    if (fmt == OutputFormat::Csv) {
        s = bounds_csv_header() + '\n';
        for (const auto& r : rows) s += to_csv(r) + '\n';
        return s;
    }
    auto bound = [](std::int64_t v, bool vacuous) {
        return ">= " + std::to_string(v) + (vacuous ? " (vacuous)" : "");
    };
    s = pad("n", 4) + pad("degrees", 10) + pad("class", 14) + pad("sum_d", 7) + pad("rc_codim", 16) +
        pad("uniruled_codim", 16) + pad("no_rational_curves", 20) + "moduli_dim\n";
    for (const auto& r : rows) {
        s += pad(std::to_string(r.n), 4) + pad(join(r.degrees, ','), 10) +
             pad(std::string(to_string(r.classification)), 14) + pad(std::to_string(r.sum_d), 7) +
             pad(bound(r.rc_locus_codim_lb, r.rc_vacuous), 16) +
             pad(bound(r.uniruled_locus_codim_lb, r.uniruled_vacuous), 16) +
             pad(r.degrees.size() != 1 ? "n/a" : (r.no_rational_curves ? "yes" : "no"), 20) +
             (r.hypersurface_moduli_dim ? std::to_string(*r.hypersurface_moduli_dim) : "-") + '\n';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Dispatch

std::uint64_t default_budget() {
    if (const char* env = std::getenv("UNIRULE_BUDGET"); env != nullptr && *env != '\0') {
        return parse_u64(env, "UNIRULE_BUDGET");
    }
    return CountOptions{}.budget;
}

OutputFormat default_format(Command c) {
    switch (c) {
        case Command::FermatScan: return OutputFormat::Csv;
        case Command::Bounds: return OutputFormat::Text;
        default: return OutputFormat::Json;
    }
}

CertifyOptions certify_options(const RunConfig& cfg) {
    CertifyOptions o;
    o.count.budget = cfg.budget.value_or(default_budget());
    o.count.workers = cfg.workers.value_or(0);
    o.verify = cfg.verify.value_or(false);
    return o;
}

std::vector<Poly> load_forms(const RunConfig& cfg, const Field& field, unsigned n) {
    const bool inline_src = !cfg.polys.empty();
    const bool file_src = cfg.poly_file.has_value();
    if (inline_src == file_src) throw Error(ErrorCode::Usage, "give exactly one of --poly or --poly-file");
    if (inline_src) {
        std::vector<Poly> forms;
        for (const auto& text : cfg.polys) forms.push_back(parse_poly(text, field, n));
        return forms;
    }
    std::ifstream in(*cfg.poly_file);
    if (!in) throw Error(ErrorCode::Usage, "cannot read poly file '" + *cfg.poly_file + "'");
    auto forms = parse_poly_lines(in, field, n);
    if (forms.empty()) throw Error(ErrorCode::Usage, "poly file '" + *cfg.poly_file + "' has no forms");
    return forms;
}

Field require_field(const RunConfig& cfg) {
    if (!cfg.field) throw Error(ErrorCode::Usage, "--field is required");
    return Field::parse(*cfg.field, cfg.seed.value_or(0));
}

unsigned require_ambient(const RunConfig& cfg) {
    if (!cfg.ambient) throw Error(ErrorCode::Usage, "--ambient is required");
    if (*cfg.ambient == 0) throw Error(ErrorCode::Usage, "--ambient must be positive");
    return *cfg.ambient;
}

std::string dispatch(const RunConfig& cfg) {
    if (!cfg.command) throw Error(ErrorCode::Usage, "no command given");
    const Command cmd = *cfg.command;
    const OutputFormat fmt = cfg.format.value_or(default_format(cmd));
    switch (cmd) {
        case Command::Certify:
        case Command::Hasse: {
            const Field field = require_field(cfg);
            const unsigned n = require_ambient(cfg);
            auto spec = make_ci_spec(n, load_forms(cfg, field, n), cfg.smoothness.value_or(SmoothnessMode::Probe),
                                     cfg.probe_depth.value_or(3));
            const auto opts = certify_options(cfg);
            const auto cert = cmd == Command::Certify ? certify_not_uniruled(spec, opts) : hasse_certify(spec, opts);
            return render(cert, fmt);
        }
        case Command::Count: {
            const Field field = require_field(cfg);
            const unsigned n = require_ambient(cfg);
            const auto forms = load_forms(cfg, field, n);
            std::vector<unsigned> degrees;
            for (const auto& f : forms) degrees.push_back(*f.degree());
            auto opts = certify_options(cfg).count;
            opts.verify = cfg.verify.value_or(false);
            return render_count(field, n, degrees, count_projective_points(forms, field, n + 1, opts), fmt);
        }
        case Command::FermatScan: {
            if (!cfg.p_range || !cfg.d_range) throw Error(ErrorCode::Usage, "fermat-scan needs --p-range and --d-range");
            Range n_range;
            if (cfg.n_range) {
                n_range = *cfg.n_range;
            } else if (cfg.ambient) {
                n_range = Range{*cfg.ambient, *cfg.ambient};
            } else {
                throw Error(ErrorCode::Usage, "fermat-scan needs --n-range or --ambient");
            }
            FermatVerifyOptions opts;
            opts.verify = cfg.verify.value_or(false);
            opts.count = certify_options(cfg).count;
            return render(fermat_scan(*cfg.p_range, *cfg.d_range, n_range, opts), fmt);
        }
        case Command::Bounds: {
            std::vector<BoundsReport> rows;
            if (!cfg.degrees.empty()) {
                rows.push_back(codimension_bounds(require_ambient(cfg), cfg.degrees));
            } else if (cfg.d_range && (cfg.n_range || cfg.ambient)) {
                const Range nr = cfg.n_range ? *cfg.n_range : Range{*cfg.ambient, *cfg.ambient};
                for (auto n = std::max<std::uint64_t>(nr.lo, 1); n <= nr.hi; ++n) {
                    for (auto d = std::max<std::uint64_t>(cfg.d_range->lo, 1); d <= cfg.d_range->hi; ++d) {
                        const unsigned deg = static_cast<unsigned>(d);
                        rows.push_back(codimension_bounds(static_cast<unsigned>(n), {&deg, 1}));
                    }
                }
            } else {
                throw Error(ErrorCode::Usage, "bounds needs --degrees with --ambient, or --d-range with --n-range");
            }
            return render(rows, fmt);
        }
    }
    throw Error(ErrorCode::Usage, "unhandled command");
}

}  // namespace

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_u64(text, "range");
        return Range{v, v};
    }
    return Range{parse_u64(text.substr(0, dots), "range"), parse_u64(text.substr(dots + 2), "range")};
}

RunConfig parse_config(std::istream& in, const std::string& origin) {
    RunConfig cfg;
    std::string line;
    unsigned lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto where = origin + ":" + std::to_string(lineno);
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::ConfigSyntax, where + ": expected 'key = value'");
        // "p_range" and "p-range" are the same key.
        std::string key = trim(body.substr(0, eq));
        std::replace(key.begin(), key.end(), '_', '-');
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty()) throw Error(ErrorCode::ConfigSyntax, where + ": empty key or value");
        try {
            if (key == "command") cfg.command = parse_command(value);
            else if (key == "field") cfg.field = value;
            else if (key == "ambient") cfg.ambient = parse_unsigned(value, "ambient");
            else if (key == "poly") cfg.polys.push_back(value);
            else if (key == "poly-file") cfg.poly_file = value;
            else if (key == "degrees") cfg.degrees = parse_degree_list(value);
            else if (key == "verify") cfg.verify = parse_bool(value);
            else if (key == "smoothness") cfg.smoothness = parse_smoothness(value);
            else if (key == "probe-depth") cfg.probe_depth = parse_unsigned(value, "probe-depth");
            else if (key == "budget") cfg.budget = parse_u64(value, "budget");
            else if (key == "workers") cfg.workers = parse_unsigned(value, "workers");
            else if (key == "seed") cfg.seed = parse_u64(value, "seed");
            else if (key == "format") cfg.format = parse_format(value);
            else if (key == "out") cfg.out = value;
            else if (key == "p-range") cfg.p_range = parse_range(value);
            else if (key == "d-range") cfg.d_range = parse_range(value);
            else if (key == "n-range") cfg.n_range = parse_range(value);
            else throw Error(ErrorCode::UnknownKey, where + ": unknown key '" + key + "'");
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UnknownKey) throw;
            throw Error(ErrorCode::ConfigSyntax, where + ": " + e.what());
        }
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigSyntax, "cannot read config '" + path.string() + "'");
    return parse_config(in, path.string());
}

RunConfig merge(RunConfig base, const RunConfig& flags) {
    auto take = [](auto& dst, const auto& src) {
        if (src) dst = src;
    };
    take(base.command, flags.command);
    take(base.field, flags.field);
    take(base.ambient, flags.ambient);
    if (!flags.polys.empty() || flags.poly_file) {
        base.polys = flags.polys;
        base.poly_file = flags.poly_file;
    }
    if (!flags.degrees.empty()) base.degrees = flags.degrees;
    take(base.verify, flags.verify);
    take(base.smoothness, flags.smoothness);
    take(base.probe_depth, flags.probe_depth);
    take(base.budget, flags.budget);
    take(base.workers, flags.workers);
    take(base.seed, flags.seed);
    take(base.format, flags.format);
    take(base.out, flags.out);
    take(base.p_range, flags.p_range);
    take(base.d_range, flags.d_range);
    take(base.n_range, flags.n_range);
    return base;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certify non-uniruledness of complete intersections over finite fields", "unirule"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::string config_path, field, poly_file, smoothness, format, out_path, p_range, d_range, n_range;
    std::vector<std::string> polys;
    std::vector<unsigned> degrees;
    unsigned ambient = 0, probe_depth = 0, workers = 0;
    std::uint64_t budget = 0, seed = 0;
    bool verify = false;

    auto* o_config = app.add_option("--config", config_path, "Flat key = value config file");
    auto* o_field = app.add_option("--field", field, "Field designation P or P^K");
    auto* o_ambient = app.add_option("-n,--ambient", ambient, "Ambient projective dimension n");
    auto* o_poly = app.add_option("--poly", polys, "Defining form (repeat for a complete intersection)");
    auto* o_poly_file = app.add_option("--poly-file", poly_file, "File with one form per line");
    auto* o_degrees = app.add_option("-d,--degrees", degrees, "Multidegree, comma separated")->delimiter(',');
    auto* o_verify = app.add_flag("--verify", verify, "Run internal cross-checks");
    auto* o_smooth = app.add_option("--smoothness", smoothness, "probe|assert");
    auto* o_depth = app.add_option("--probe-depth", probe_depth, "Largest extension degree probed");
    auto* o_budget = app.add_option("--budget", budget, "Enumeration budget (points)");
    auto* o_workers = app.add_option("--workers", workers, "Worker threads (0 = all cores)");
    auto* o_seed = app.add_option("--seed", seed, "Seed for extension-field modulus search");
    auto* o_format = app.add_option("--format", format, "json|csv|text");
    auto* o_out = app.add_option("--out", out_path, "Write output to PATH");
    auto* o_prange = app.add_option("--p-range", p_range, "Primes A..B");
    auto* o_drange = app.add_option("--d-range", d_range, "Degrees A..B");
    auto* o_nrange = app.add_option("--n-range", n_range, "Ambient dimensions A..B");

    auto* c_certify = app.add_subcommand("certify", "Point-count certificate");
    auto* c_hasse = app.add_subcommand("hasse", "Hasse-coefficient certificate (Calabi-Yau hypersurface over F_p)");
    auto* c_count = app.add_subcommand("count", "Projective point count");
    auto* c_scan = app.add_subcommand("fermat-scan", "Congruence table for Fermat hypersurfaces");
    auto* c_bounds = app.add_subcommand("bounds", "Codimension bounds for rational-curve loci");

    std::vector<const char*> argv{"unirule"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "unirule: " << e.what() << '\n';
        return 1;
    }

    try {
        RunConfig flags;
        if (c_certify->parsed()) flags.command = Command::Certify;
        if (c_hasse->parsed()) flags.command = Command::Hasse;
        if (c_count->parsed()) flags.command = Command::Count;
        if (c_scan->parsed()) flags.command = Command::FermatScan;
        if (c_bounds->parsed()) flags.command = Command::Bounds;
        if (o_field->count()) flags.field = field;
        if (o_ambient->count()) flags.ambient = ambient;
        if (o_poly->count()) flags.polys = polys;
        if (o_poly_file->count()) flags.poly_file = poly_file;
        if (o_degrees->count()) flags.degrees = degrees;
        if (o_verify->count()) flags.verify = verify;
        if (o_smooth->count()) flags.smoothness = parse_smoothness(smoothness);
        if (o_depth->count()) flags.probe_depth = probe_depth;
        if (o_budget->count()) flags.budget = budget;
        if (o_workers->count()) flags.workers = workers;
        if (o_seed->count()) flags.seed = seed;
        if (o_format->count()) flags.format = parse_format(format);
        if (o_out->count()) flags.out = out_path;
        if (o_prange->count()) flags.p_range = parse_range(p_range);
        if (o_drange->count()) flags.d_range = parse_range(d_range);
        if (o_nrange->count()) flags.n_range = parse_range(n_range);

        const RunConfig cfg = o_config->count() ? merge(load_config(config_path), flags) : flags;
        const std::string report = dispatch(cfg);
        if (cfg.out) {
            std::ofstream file(*cfg.out);
            if (!file) throw Error(ErrorCode::Usage, "cannot write '" + *cfg.out + "'");
            file << report;
        } else {
            out << report;
        }
        return 0;
    } catch (const Error& e) {
        err << "unirule: " << e.what() << '\n';
        return is_resource_or_internal(e.code()) ? 2 : 1;
    }
}

}  // namespace unirule::cli
