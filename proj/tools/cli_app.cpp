#include "cli_app.hpp"

#include "pointlike/errors.hpp"
#include "pointlike/extensions.hpp"
#include "pointlike/massjump.hpp"
#include "pointlike/regularization.hpp"
#include "pointlike/scattering.hpp"
#include "pointlike/spincurrent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <system_error>

namespace pointlike::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// formatting

// Shortest representation that round-trips; independent of the C locale.
std::string format_number(double v)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

Json complex_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Json matrix_json(const Matrix2& m)
{
    return Json::array({Json::array({complex_json(m.m11), complex_json(m.m12)}),
                        Json::array({complex_json(m.m21), complex_json(m.m22)})});
}

std::string csv_cell(const Json& v)
{
    if (v.is_null()) return "";
    if (v.is_number()) return format_number(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, Json>>& out)
{
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) flatten(val, prefix.empty() ? key : prefix + "." + key, out);
    } else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i + 1), out);
    } else {
        out.emplace_back(prefix, v);
    }
}

/// A result is a list of flat-ish records. Scalar commands produce one record.
struct Output {
    std::vector<Json> records;
    bool is_series = false;  // sweeps: JSON array, one CSV row per record
    std::optional<std::string> fixed_header;
};

void write_csv(const Output& o, std::ostream& os)
{
    bool header_done = false;
    if (o.fixed_header) {
        os << *o.fixed_header << '\n';
        header_done = true;
    }
    for (const Json& rec : o.records) {
        std::vector<std::pair<std::string, Json>> cells;
        flatten(rec, "", cells);
        if (!header_done) {
            for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i].first;
            os << '\n';
            header_done = true;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i].second);
        os << '\n';
    }
}

void write_json(const Output& o, std::ostream& os)
{
    if (o.is_series) {
        Json arr = Json::array();
        for (const Json& r : o.records) arr.push_back(r);
        os << arr.dump(2) << '\n';
    } else {
        os << o.records.front().dump(2) << '\n';
    }
}

// ---------------------------------------------------------------------------
// flag parsing

double parse_double(std::string_view text, std::string_view what)
{
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw UsageError("cannot parse " + std::string(what) + " value '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& text, std::string_view what)
{
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t end = comma == std::string::npos ? text.size() : comma;
        values.push_back(parse_double(std::string_view(text).substr(start, end - start), what));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

Matrix2 parse_matrix(const std::string& text)
{
    const auto v = parse_list(text, "--matrix");
    if (v.size() != 8) throw UsageError("--matrix takes 8 comma-separated reals (row-major re,im)");
    return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

struct FamilyArgs {
    std::string family;
    std::optional<double> param;
    std::optional<std::string> matrix;
};

std::optional<CanonicalFamily> canonical_from_name(const std::string& name)
{
    for (CanonicalFamily f : kCanonicalFamilies) {
        if (to_string(f) == name) return f;
    }
    return std::nullopt;
}

/// Resolves --family/--param/--matrix into an ExtensionFamily.
ExtensionFamily resolve_family(const FamilyArgs& a)
{
    if (a.family == "raw") {
        if (!a.matrix) throw UsageError("--family raw requires --matrix");
        const Matrix2 m = parse_matrix(*a.matrix);
        return Raw{validate_symplectic(m, scaled_tolerance(m))};
    }
    const auto f = canonical_from_name(a.family);
    if (!f) throw UsageError("unknown family '" + a.family + "'");
    if (!a.param) throw UsageError("--family " + a.family + " requires --param");
    return make_family(*f, *a.param);
}

void add_family_options(CLI::App* cmd, FamilyArgs& a, bool family_required)
{
    auto* fam = cmd->add_option("--family", a.family, "delta | delta-prime | flux | delta-one | raw")
                    ->check(CLI::IsMember({"delta", "delta-prime", "flux", "delta-one", "raw"}));
    if (family_required) fam->required();
    cmd->add_option("--param", a.param, "family parameter: X1, X4, alpha or X2");
    cmd->add_option("--matrix", a.matrix, "raw junction matrix, 8 reals re,im row-major");
}

void require_positive(double v, std::string_view flag)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw UsageError(std::string(flag) + " must be positive");
}

// ---------------------------------------------------------------------------
// commands

Json smatrix_record(const ExtensionFamily& family, double k)
{
    const JunctionMatrix m = junction_of(family);
    const ScatteringMatrix s = smatrix(m, k);
    const ChannelProbabilities p = reflection_transmission(s);

    Json rec;
    rec["k"] = k;
    rec["S"] = matrix_json(s.matrix());
    rec["R"] = p.reflection;
    rec["T"] = p.transmission;
    rec["unitarity_residual"] = unitarity_residual(s);
    if (std::holds_alternative<Raw>(family)) {
        rec["generic_vs_closed_residual"] = nullptr;
    } else {
        rec["generic_vs_closed_residual"] = distance(s.matrix(), closed_form_smatrix(family, k).matrix());
    }
    return rec;
}

Output cmd_smatrix(const FamilyArgs& a, double k)
{
    require_positive(k, "--k");
    const ExtensionFamily family = resolve_family(a);
    return {{smatrix_record(family, k)}, false, std::nullopt};
}

Output cmd_sweep(const FamilyArgs& a, double kmin, double kmax, int steps)
{
    require_positive(kmin, "--kmin");
    if (!(kmax > kmin) || !std::isfinite(kmax)) throw UsageError("--kmax must exceed --kmin");
    if (steps < 2) throw UsageError("--steps must be at least 2");
    const ExtensionFamily family = resolve_family(a);
    const JunctionMatrix m = junction_of(family);

    Output o{{}, true, std::string("k,R,T,unitarity_residual")};
    for (int i = 0; i < steps; ++i) {
        const double k = i == steps - 1 ? kmax : kmin + (kmax - kmin) * i / (steps - 1);
        const ScatteringMatrix s = smatrix(m, k);
        const ChannelProbabilities p = reflection_transmission(s);
        o.records.push_back(Json{{"k", k}, {"R", p.reflection}, {"T", p.transmission},
                                 {"unitarity_residual", unitarity_residual(s)}});
    }
    return o;
}

Output cmd_regularize(double alpha, double epsilon, const std::string& widths_text, int steps)
{
    require_positive(epsilon, "--epsilon");
    const auto widths = parse_list(widths_text, "--widths");
    for (std::size_t i = 0; i < widths.size(); ++i) {
        require_positive(widths[i], "--widths entries");
        if (i > 0 && !(widths[i] < widths[i - 1])) throw UsageError("--widths must be strictly descending");
    }
    if (steps < kMinStripSteps) throw UsageError("--steps must be at least " + std::to_string(kMinStripSteps));

    Output o{{}, true, std::string("width,deviation,empirical_order")};
    for (const ConvergenceRow& row : convergence_study(alpha, epsilon, widths, steps)) {
        Json rec{{"width", row.width}, {"deviation", row.deviation}};
        rec["empirical_order"] = row.empirical_order ? Json(*row.empirical_order) : Json(nullptr);
        o.records.push_back(std::move(rec));
    }
    return o;
}

Output cmd_massjump(double mu)
{
    const double b = b_of_mu(mu);
    const double x2 = x2_of_mu(mu);
    const Matrix2 mj = massjump_junction(mu);
    const Matrix2 scaled = rescale_junction(mj, MassRatio(mu).scale_factor());
    const double residual = distance(scaled, junction_of(DeltaOne{x2}).matrix());

    Json rec;
    rec["mu"] = mu;
    rec["b"] = b;
    rec["X2"] = x2;
    rec["M_massjump"] = matrix_json(mj);
    rec["M_rescaled"] = matrix_json(scaled);
    rec["delta_one_match_residual"] = residual;
    return {{rec}, false, std::nullopt};
}

Json report_json(const ClassificationReport& r, const Matrix2& m)
{
    Json rec;
    rec["id"] = r.id;
    rec["matrix"] = matrix_json(m);
    rec["time_reversal_ok"] = r.time_reversal_ok;
    rec["time_reversal_deviation"] = r.time_reversal_deviation;
    rec["sesquilinear_ok"] = r.sesquilinear_ok;
    rec["label"] = std::string(to_string(r.label));
    return rec;
}

Output cmd_classify(const FamilyArgs& a)
{
    FamilyArgs resolved = a;
    if (resolved.family.empty()) {
        if (!resolved.matrix) throw UsageError("classify takes --family/--param or --matrix");
        resolved.family = "raw";
    } else if (resolved.matrix && resolved.family != "raw") {
        throw UsageError("--matrix cannot be combined with --family " + resolved.family);
    }
    const ExtensionFamily family = resolve_family(resolved);
    const JunctionMatrix m = junction_of(family);
    const auto grid = default_k_grid();
    std::string id = resolved.family;
    if (resolved.param) id += ":" + format_number(*resolved.param);
    return {{report_json(classify(m, grid, id), m.matrix())}, false, std::nullopt};
}

struct TableRow {
    const char* bc;
    CanonicalFamily family;
    const char* matrix;
    const char* group;
    const char* label;
    ExtensionClass expected;
    bool pairing;
    double representative;
};

constexpr std::array<TableRow, 4> kTable = {{
    {"I", CanonicalFamily::DeltaPotential, "[[1, 0], [X1, 1]]", "(1,0)", "δ-potential",
     ExtensionClass::PurePotential, false, 2.0},
    {"II", CanonicalFamily::DeltaPrime, "[[1, -X4], [0, 1]]", "R+", "mass jump", ExtensionClass::MassJump, false,
     2.0},
    {"III", CanonicalFamily::MagneticFlux, "[[e^{2 pi i alpha}, 0], [0, e^{2 pi i alpha}]]", "U(1)", "magnetic",
     ExtensionClass::Magnetic, true, 0.3},
    {"IV", CanonicalFamily::DeltaOne, "[[(2+X2)/(2-X2), 0], [0, (2-X2)/(2+X2)]]", "R+ x Z",
     "magnetic & mass jump", ExtensionClass::MagneticMassJump, true, 0.5},
}};

Output cmd_table()
{
    const auto grid = default_k_grid();
    Output o{{}, true, std::nullopt};
    for (const TableRow& row : kTable) {
        const JunctionMatrix m = junction_of(make_family(row.family, row.representative));
        const ClassificationReport r = classify(m, grid, std::string(to_string(row.family)));
        if (r.label != row.expected || r.sesquilinear_ok != row.pairing) {
            throw InternalError(std::string("live classification of row ") + row.bc + " gives " +
                                std::string(to_string(r.label)) + ", table says " +
                                std::string(to_string(row.expected)));
        }
        Json rec;
        rec["bc"] = row.bc;
        rec["family"] = std::string(to_string(row.family));
        rec["matrix"] = row.matrix;
        rec["group"] = row.group;
        rec["label"] = row.label;
        rec["representative_param"] = row.representative;
        rec["classification"] = std::string(to_string(r.label));
        rec["pairing_preserved"] = r.sesquilinear_ok;
        rec["time_reversal_ok"] = r.time_reversal_ok;
        o.records.push_back(std::move(rec));
    }
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Point interactions of the 1D free Schrodinger operator: junction matrices, S-matrices, "
                 "mass-jump correspondence, flux regularization"};
    app.name("pointlike");
    app.require_subcommand(1);
    app.fallthrough();

    std::string format;
    std::string output_path;
    app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", output_path, "write data to this file instead of standard output");

    FamilyArgs smatrix_args;
    double k = 0.0;
    auto* smatrix_cmd = app.add_subcommand("smatrix", "scattering matrix at one wavenumber");
    add_family_options(smatrix_cmd, smatrix_args, true);
    smatrix_cmd->add_option("--k", k, "wavenumber, > 0")->required();

    FamilyArgs sweep_args;
    double kmin = 0.0;
    double kmax = 0.0;
    int sweep_steps = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "R and T over a linear k grid (CSV)");
    add_family_options(sweep_cmd, sweep_args, true);
    sweep_cmd->add_option("--kmin", kmin)->required();
    sweep_cmd->add_option("--kmax", kmax)->required();
    sweep_cmd->add_option("--steps", sweep_steps, "number of k points, >= 2")->required();

    double alpha = 0.0;
    double epsilon = 1.0;
    std::string widths;
    int strip_steps = 1000;
    auto* reg_cmd = app.add_subcommand("regularize", "finite-width flux strip convergence (CSV)");
    reg_cmd->add_option("--alpha", alpha, "flux in units of the flux quantum")->required();
    reg_cmd->add_option("--epsilon", epsilon, "dimensionless energy, > 0")->capture_default_str();
    reg_cmd->add_option("--widths", widths, "strictly descending comma list")->required();
    reg_cmd->add_option("--steps", strip_steps, "RK4 steps per strip")->capture_default_str();

    double mu = 0.0;
    auto* mj_cmd = app.add_subcommand("massjump", "mass-jump to delta-one correspondence");
    mj_cmd->add_option("--mu", mu, "mass ratio m+/m-, > 0 and != 1")->required();

    FamilyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "potential / magnetic classification of a junction");
    add_family_options(classify_cmd, classify_args, false);

    auto* table_cmd = app.add_subcommand("table", "classification table, recomputed live");

    std::vector<const char*> argv{"pointlike"};
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "pointlike: " << e.what() << '\n';
        return kUsage;
    }

    try {
        Output result;
        bool series_default = false;
        if (smatrix_cmd->parsed()) {
            result = cmd_smatrix(smatrix_args, k);
        } else if (sweep_cmd->parsed()) {
            result = cmd_sweep(sweep_args, kmin, kmax, sweep_steps);
            series_default = true;
        } else if (reg_cmd->parsed()) {
            result = cmd_regularize(alpha, epsilon, widths, strip_steps);
            series_default = true;
        } else if (mj_cmd->parsed()) {
            result = cmd_massjump(mu);
        } else if (classify_cmd->parsed()) {
            result = cmd_classify(classify_args);
        } else if (table_cmd->parsed()) {
            result = cmd_table();
        }

        const bool csv = format.empty() ? series_default : format == "csv";
        std::ostringstream buffer;
        if (csv) {
            write_csv(result, buffer);
        } else {
            write_json(result, buffer);
        }

        if (output_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file) throw UsageError("cannot open output file '" + output_path + "'");
            file << buffer.str();
        }
        return kOk;
    } catch (const UsageError& e) {
        err << "pointlike: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        err << "pointlike: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "pointlike: internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace pointlike::cli
