#include "commands.hpp"

#include "table.hpp"

#include "trapsusy/coulomb.hpp"
#include "trapsusy/defect.hpp"
#include "trapsusy/defect_table.hpp"
#include "trapsusy/mapping.hpp"
#include "trapsusy/numerics.hpp"
#include "trapsusy/oracle.hpp"
#include "trapsusy/oscillator.hpp"
#include "trapsusy/susy.hpp"
#include "trapsusy/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace trapsusy::cli {
namespace {

/// Thrown for bad input; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PhysicalScales parse_scales(const std::string& text) {
    if (text.empty() || text == "dimensionless") return PhysicalScales::dimensionless();
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw UsageError("--scales: '" + item + "' is not a number");
        v.push_back(x);
    }
    if (v.size() != 4) throw UsageError("--scales expects hbar,mass,mu_b0,r0");
    return PhysicalScales(v[0], v[1], v[2], v[3]);
}

void add_scale_meta(Table& t, const PhysicalScales& s) {
    t.meta.emplace_back("hbar", s.hbar());
    t.meta.emplace_back("mass", s.mass());
    t.meta.emplace_back("mu_b0", s.trap_depth());
    t.meta.emplace_back("r0", s.length_scale());
    t.meta.emplace_back("hbar_omega", s.hbar_omega());
    t.meta.emplace_back("oscillator_length", s.oscillator_length());
}

struct Common {
    std::string format;
    std::string scales;
};

// ---------------------------------------------------------------- wavefunction

struct WaveArgs {
    std::string kind;
    int dimension = 3;
    int principal = 0;
    int angular = 0;
    int principal_s = 0;
    double principal_star = 0.0;
    double angular_star = 0.0;
    int dimension_star = 3;
    int coulomb_d = 3;
    int coulomb_n = 1;
    int coulomb_l = 0;
    double r_min = 0.0;
    double r_max = 0.0;
    std::size_t points = 201;
    CLI::Option* ns_opt = nullptr;
    CLI::Option* nstar_opt = nullptr;
    CLI::Option* lstar_opt = nullptr;
    CLI::Option* rmin_opt = nullptr;
    CLI::Option* rmax_opt = nullptr;
};

Table cmd_wavefunction(const WaveArgs& a, const PhysicalScales& scales) {
    Table t;
    t.meta.emplace_back("kind", a.kind);

    std::optional<RadialFunction> w;
    double energy = 0.0;
    double energy_unit = scales.hbar_omega();
    double cutoff = 0.0;

    if (a.kind == "bosonic") {
        const OscillatorQN qn(a.dimension, a.principal, a.angular);
        w = oscillator_wavefunction(scales, qn);
        energy = oscillator_energy(scales, a.dimension, a.principal);
        cutoff = oscillator_cutoff(scales, a.principal);
        t.meta.emplace_back("D", std::int64_t{a.dimension});
        t.meta.emplace_back("N", std::int64_t{a.principal});
        t.meta.emplace_back("L", std::int64_t{a.angular});
    } else if (a.kind == "fermionic") {
        const int ns = a.ns_opt->count() ? a.principal_s : a.angular + 2;
        w = fermionic_wavefunction(scales, a.angular, ns);
        energy = oscillator_energy(scales, 3, ns);
        cutoff = oscillator_cutoff(scales, ns);
        t.meta.emplace_back("L", std::int64_t{a.angular});
        t.meta.emplace_back("Ns", std::int64_t{ns});
        t.meta.emplace_back("sector_energy", scales.hbar_omega() * (ns - a.angular));
    } else if (a.kind == "defect") {
        if (!a.nstar_opt->count() || !a.lstar_opt->count())
            throw UsageError("wavefunction defect requires --Nstar and --Lstar");
        w = defect_wavefunction(scales, a.dimension_star, a.principal_star, a.angular_star);
        energy = oscillator_energy(scales, a.dimension_star, a.principal_star);
        cutoff = oscillator_cutoff(scales, a.principal_star);
        t.meta.emplace_back("Dstar", std::int64_t{a.dimension_star});
        t.meta.emplace_back("Nstar", a.principal_star);
        t.meta.emplace_back("Lstar", a.angular_star);
    } else if (a.kind == "coulomb") {
        const CoulombQN qn(a.coulomb_d, a.coulomb_n, a.coulomb_l);
        w = coulomb_wavefunction(qn);
        energy = coulomb_energy(qn);
        energy_unit = 1.0;
        cutoff = coulomb_cutoff(qn);
        t.meta.emplace_back("units", std::string("atomic"));
        t.meta.emplace_back("d", std::int64_t{a.coulomb_d});
        t.meta.emplace_back("n", std::int64_t{a.coulomb_n});
        t.meta.emplace_back("l", std::int64_t{a.coulomb_l});
    } else {
        throw UsageError("unknown wavefunction kind '" + a.kind +
                         "' (bosonic, fermionic, defect, coulomb)");
    }

    const double unit = w->length_unit();
    const NodeCount nodes = count_nodes(*w, Grid(1e-6 * unit, cutoff, 20001));
    const double norm = integrate([&](double r) { return (*w)(r) * (*w)(r); }, 0.0, cutoff);

    t.meta.emplace_back("nodes", std::int64_t{nodes.nodes});
    t.meta.emplace_back("norm", norm);
    t.meta.emplace_back("energy", energy);
    t.meta.emplace_back("energy_dimensionless", energy / energy_unit);
    t.meta.emplace_back("leading_power", w->leading_power());
    t.meta.emplace_back("length_unit", unit);
    if (nodes.warning) t.meta.emplace_back("warning", *nodes.warning);
    if (a.kind != "coulomb") add_scale_meta(t, scales);

    const double lo = a.rmin_opt->count() ? a.r_min : 0.01 * unit;
    const double hi = a.rmax_opt->count() ? a.r_max : cutoff;
    const Grid grid(lo, hi, a.points);
    t.columns = {"r", "r_dimensionless", "value", "value_dimensionless"};
    const double root = std::sqrt(unit);
    for (double r : grid.nodes()) {
        const double v = (*w)(r);
        t.rows.push_back({r, r / unit, v, v * root});
    }
    return t;
}

// ---------------------------------------------------------------- core-count

struct CoreArgs {
    int angular = 0;
    int s_max = 1;
    int spin = 1;
};

Table cmd_core_count(const CoreArgs& a, std::ostream& err, bool& mismatch) {
    if (a.angular < 0) throw UsageError("core-count: L must be >= 0");
    if (a.s_max < 1) throw UsageError("core-count: s_max must be >= 1");
    if (a.spin < 1) throw UsageError("core-count: spin multiplicity must be >= 1");
    Table t;
    t.meta.emplace_back("L", std::int64_t{a.angular});
    t.meta.emplace_back("s_max", std::int64_t{a.s_max});
    t.meta.emplace_back("spin", std::int64_t{a.spin});
    t.columns = {"s", "core_count", "oracle", "match", "published", "note"};
    mismatch = false;
    for (int s = 1; s <= a.s_max; ++s) {
        const CoreCount closed = core_count(a.angular, s, a.spin);
        const std::uint64_t brute = core_count_enumerated(a.angular, s, a.spin);
        const bool ok = closed.count == brute;
        if (!ok && !mismatch) {
            err << "core-count: closed form " << closed.count << " != enumeration " << brute
                << " at L=" << a.angular << ", s=" << s << "\n";
            mismatch = true;
        }
        const std::string published = a.angular <= 1 ? "listed" : "unlisted in paper";
        t.rows.push_back({std::int64_t{s}, static_cast<std::int64_t>(closed.count),
                          static_cast<std::int64_t>(brute), ok, published, closed.warning.value_or("")});
    }
    return t;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    double tolerance = 0.0;
    std::size_t points = 4000;
    std::string replay;
    CLI::Option* tol_opt = nullptr;
};

std::vector<Check> load_replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open replay file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError("replay file " + path + ": " + e.what());
    }
    if (!doc.contains("rows") || !doc["rows"].is_array())
        throw UsageError("replay file " + path + ": missing 'rows' array");
    std::vector<Check> checks;
    std::size_t index = 0;
    for (const auto& row : doc["rows"]) {
        ++index;
        try {
            Check c;
            c.suite = row.at("suite").get<std::string>();
            c.name = row.at("name").get<std::string>();
            const auto& v = row.at("value");
            c.value = v.is_null() ? std::numeric_limits<double>::quiet_NaN() : v.get<double>();
            c.threshold = row.at("threshold").get<double>();
            c.exact = row.at("exact").get<bool>();
            c.pass = row.value("pass", false);
            checks.push_back(std::move(c));
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("replay file " + path + ": row " + std::to_string(index) + ": " + e.what());
        }
    }
    return checks;
}

Table cmd_verify(const VerifyArgs& a, const PhysicalScales& scales, std::ostream& err, bool& failed) {
    std::vector<Check> checks;
    std::size_t flipped = 0;
    if (!a.replay.empty()) {
        checks = load_replay(a.replay);
        for (Check& c : checks) {
            const bool recorded = c.pass;
            if (a.tol_opt->count() && !c.exact) c.threshold = a.tolerance;
            evaluate(c);
            if (c.pass != recorded) ++flipped;
        }
    } else {
        const auto names = suite_names();
        if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
            throw UsageError("unknown verification suite '" + a.suite + "'");
        if (a.tol_opt->count() && !(a.tolerance > 0.0))
            throw UsageError("--tolerance must be positive");
        VerifyOptions opt;
        opt.scales = scales;
        opt.oracle_points = a.points;
        if (a.tol_opt->count()) opt.tolerance = a.tolerance;
        checks = run_suite(a.suite, opt);
    }

    Table t;
    std::size_t failures = 0;
    const Check* first = nullptr;
    for (const Check& c : checks) {
        if (!c.pass) {
            ++failures;
            if (!first) first = &c;
        }
    }
    t.meta.emplace_back("suite", a.replay.empty() ? a.suite : std::string("replay"));
    t.meta.emplace_back("checks", static_cast<std::int64_t>(checks.size()));
    t.meta.emplace_back("failed", static_cast<std::int64_t>(failures));
    t.meta.emplace_back("verdict", std::string(failures ? "FAIL" : "PASS"));
    if (!a.replay.empty()) t.meta.emplace_back("verdicts_changed", static_cast<std::int64_t>(flipped));
    t.columns = {"suite", "name", "value", "threshold", "exact", "pass"};
    for (const Check& c : checks) t.rows.push_back({c.suite, c.name, c.value, c.threshold, c.exact, c.pass});

    failed = failures > 0;
    if (first)
        err << "FAIL " << first->suite << ": " << first->name << " (" << format_real(first->value)
            << " > " << format_real(first->threshold) << ")\n";
    return t;
}

// ---------------------------------------------------------------- consistency

struct ConsistencyArgs {
    std::string file;
    std::vector<int> lambdas;
    int i_shift = 0;
};

Table cmd_consistency(const ConsistencyArgs& a) {
    std::vector<DefectTableRow> rows;
    try {
        rows = load_defect_table(a.file);
    } catch (const ParseError& e) {
        throw UsageError(a.file + ": " + e.what());
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    for (int lambda : a.lambdas)
        if (lambda < 0) throw UsageError("--lambda must be >= 0");
    const std::vector<int> lambdas = a.lambdas.empty() ? std::vector<int>{0, 1} : a.lambdas;
    Table t;
    t.meta.emplace_back("file", a.file);
    t.meta.emplace_back("rows", static_cast<std::int64_t>(rows.size()));
    t.columns = {"n", "l", "delta", "i", "lambda", "implied", "Lstar", "normalizable"};
    for (const ConsistencyRow& r : consistency_report(rows, lambdas, a.i_shift)) {
        const Cell n = r.n ? Cell{std::int64_t{*r.n}} : Cell{std::string()};
        t.rows.push_back({n, std::int64_t{r.l}, r.delta, std::int64_t{r.i_shift},
                          std::int64_t{r.lambda}, r.implied, r.angular_star, r.normalizable});
    }
    return t;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
    std::string sector = "bosonic";
    int angular = 0;
    int iterations = 1;
    std::size_t levels = 4;
    std::size_t points = 4000;
    double tolerance = 1e-5;
};

Table cmd_spectrum(const SpectrumArgs& a, const PhysicalScales& scales, bool& failed) {
    if (a.angular < 0) throw UsageError("spectrum: L must be >= 0");
    if (a.levels < 1) throw UsageError("spectrum: --levels must be >= 1");
    const double hw = scales.hbar_omega();
    const Grid grid = default_oracle_grid(scales, a.points);

    Potential1D potential;
    double first_level = 0.0;   // analytic lowest level in units of hbar omega
    if (a.sector == "bosonic") {
        potential = bosonic_potential(scales, a.angular);
    } else if (a.sector == "partner") {
        const Potential1D v1 = bosonic_potential(scales, a.angular);
        const RadialFunction ground = oscillator_wavefunction(scales, OscillatorQN(3, a.angular, a.angular));
        potential = partner_potential(v1, ground, scales);
        first_level = 2.0;
    } else if (a.sector == "iterated") {
        if (a.iterations < 1) throw UsageError("spectrum: --s must be >= 1");
        potential = iterate_sector(scales, a.angular, a.iterations).potential;
    } else {
        throw UsageError("unknown sector '" + a.sector + "' (bosonic, partner, iterated)");
    }

    const SpectrumReport rep = solve_radial(potential, scales, grid, a.levels);
    Table t;
    t.meta.emplace_back("sector", a.sector);
    t.meta.emplace_back("L", std::int64_t{a.angular});
    if (a.sector == "iterated") t.meta.emplace_back("s", std::int64_t{a.iterations});
    t.meta.emplace_back("points", static_cast<std::int64_t>(a.points));
    t.meta.emplace_back("tolerance", a.tolerance);
    if (rep.warning) t.meta.emplace_back("warning", *rep.warning);
    add_scale_meta(t, scales);
    t.columns = {"level", "oracle", "raw", "analytic", "oracle_dimensionless", "deviation", "pass"};
    failed = false;
    for (std::size_t j = 0; j < a.levels; ++j) {
        const double analytic = hw * (first_level + 2.0 * static_cast<double>(j));
        const double dev = std::abs(rep.corrected[j] - analytic) / hw;
        const bool ok = dev <= a.tolerance;
        failed = failed || !ok;
        t.rows.push_back({static_cast<std::int64_t>(j), rep.corrected[j], rep.eigenvalues[j], analytic,
                          rep.corrected[j] / hw, dev, ok});
    }
    return t;
}

// ---------------------------------------------------------------- map

struct MapArgs {
    int d = 3;
    int n = 1;
    int l = 0;
    int lambda = 0;
    bool defect = false;
    double threshold = 1e-8;
};

Table cmd_map(const MapArgs& a, bool& failed) {
    const CoulombQN qn(a.d, a.n, a.l);
    Table t;
    t.meta.emplace_back("d", std::int64_t{a.d});
    t.meta.emplace_back("n", std::int64_t{a.n});
    t.meta.emplace_back("l", std::int64_t{a.l});
    t.meta.emplace_back("lambda", std::int64_t{a.lambda});
    MapReport rep;
    if (a.defect) {
        const DefectMap3D map = defect_map_3d(qn, a.lambda);
        const DefectMapReport full = verify_defect_map_3d(qn, default_map_grid(map.principal_star), 5, a.threshold);
        rep = full.ratio;
        t.meta.emplace_back("Dstar", std::int64_t{3});
        t.meta.emplace_back("Nstar", map.principal_star);
        t.meta.emplace_back("Lstar", map.angular_star);
        t.meta.emplace_back("constraint", map.constraint);
        t.meta.emplace_back("J", std::int64_t{map.dim_shift});
        t.meta.emplace_back("stack_aligned", full.stack_aligned);
        t.meta.emplace_back("note", map.note);
        failed = !rep.pass || !full.stack_aligned;
    } else {
        const OscillatorImage image = map_quantum_numbers(qn, a.lambda);
        rep = verify_exact_map(qn, a.lambda, default_map_grid(image.principal), 1.0, a.threshold);
        t.meta.emplace_back("D", std::int64_t{image.dimension});
        t.meta.emplace_back("N", std::int64_t{image.principal});
        t.meta.emplace_back("L", std::int64_t{image.angular});
        t.meta.emplace_back("predicted_K", predicted_map_constant(qn, a.lambda));
        failed = !rep.pass;
    }
    t.columns = {"ratio_mean", "max_relative_deviation", "samples_used", "samples_masked", "threshold",
                 "pass", "note"};
    t.rows.push_back({rep.ratio_mean, rep.max_relative_deviation, static_cast<std::int64_t>(rep.samples_used),
                      static_cast<std::int64_t>(rep.samples_masked), rep.threshold, rep.pass, rep.note});
    return t;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Supersymmetric quantum mechanics in isotropic traps: wave functions, spectra, "
                 "shell counting and the Coulomb-oscillator map."};
    app.require_subcommand(1);

    Common common;
    const char* env = std::getenv(format_env);
    common.format = env && *env ? env : "csv";
    app.add_option("--format", common.format, "csv, json or pretty (default from $TRAPSUSY_FORMAT, else csv)");
    app.add_option("--scales", common.scales, "hbar,mass,mu_b0,r0 (default: dimensionless preset 1,1,0.5,1)");

    WaveArgs wave;
    auto* wf = app.add_subcommand("wavefunction", "Sample a radial wave function");
    wf->add_option("kind", wave.kind, "bosonic, fermionic, defect or coulomb")->required();
    wf->add_option("--D", wave.dimension, "oscillator dimension (bosonic)");
    wf->add_option("--N", wave.principal, "oscillator level (bosonic)");
    wf->add_option("--L", wave.angular, "angular momentum (bosonic, fermionic)");
    wave.ns_opt = wf->add_option("--Ns", wave.principal_s, "fermionic level, L+2, L+4, ... (default L+2)");
    wave.nstar_opt = wf->add_option("--Nstar", wave.principal_star, "shifted level (defect)");
    wave.lstar_opt = wf->add_option("--Lstar", wave.angular_star, "shifted angular momentum (defect)");
    wf->add_option("--Dstar", wave.dimension_star, "shifted dimension (defect, default 3)");
    wf->add_option("--d", wave.coulomb_d, "Coulomb dimension (default 3)");
    wf->add_option("--n", wave.coulomb_n, "Coulomb principal number");
    wf->add_option("--l", wave.coulomb_l, "Coulomb angular momentum");
    wave.rmin_opt = wf->add_option("--rmin", wave.r_min, "first sample radius");
    wave.rmax_opt = wf->add_option("--rmax", wave.r_max, "last sample radius");
    wf->add_option("--points", wave.points, "number of samples (default 201)");

    CoreArgs core;
    auto* cc = app.add_subcommand("core-count", "Filled-core fermion counts per iteration");
    cc->add_option("--L", core.angular, "valence angular momentum")->required();
    cc->add_option("--smax,--s-max", core.s_max, "largest iteration count")->required();
    cc->add_option("--spin", core.spin, "spin multiplicity (default 1)");

    VerifyArgs ver;
    auto* vf = app.add_subcommand("verify", "Run verification suites");
    vf->add_option("suite", ver.suite, "numerics, spectrum, core, susy, defect, map-exact, map-defect or all");
    ver.tol_opt = vf->add_option("--tolerance", ver.tolerance, "override every non-exact threshold");
    vf->add_option("--points", ver.points, "oracle grid points (default 4000)");
    vf->add_option("--replay", ver.replay, "re-evaluate a JSON report written by 'verify --format json'");

    ConsistencyArgs con;
    auto* cs = app.add_subcommand("consistency", "Oscillator defects implied by an atomic defect table");
    cs->add_option("file", con.file, "defect table")->required();
    cs->add_option("--lambda", con.lambdas, "mapping parameter(s) (default 0 and 1)");
    cs->add_option("--i", con.i_shift, "integral Coulomb shift i (default 0)");

    SpectrumArgs spec;
    auto* sp = app.add_subcommand("spectrum", "Finite-difference spectrum of a sector");
    sp->add_option("--sector", spec.sector, "bosonic, partner or iterated");
    sp->add_option("--L", spec.angular, "angular momentum");
    sp->add_option("--s", spec.iterations, "iterations (iterated sector)");
    sp->add_option("--levels", spec.levels, "number of levels (default 4)");
    sp->add_option("--points", spec.points, "grid points (default 4000)");
    sp->add_option("--tolerance", spec.tolerance, "allowed deviation in units of hbar omega (default 1e-5)");

    MapArgs map;
    auto* mp = app.add_subcommand("map", "Check the Coulomb-oscillator radial map");
    mp->add_option("--d", map.d, "Coulomb dimension (default 3)");
    mp->add_option("--n", map.n, "Coulomb principal number");
    mp->add_option("--l", map.l, "Coulomb angular momentum");
    mp->add_option("--lambda", map.lambda, "mapping parameter");
    mp->add_flag("--defect", map.defect, "3D oscillator with defect onto 3D Coulomb");
    mp->add_option("--threshold", map.threshold, "allowed ratio spread (default 1e-8)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const Format format = parse_format(common.format);
        const PhysicalScales scales = parse_scales(common.scales);
        Table table;
        int status = exit_ok;
        bool failed = false;
        if (wf->parsed()) {
            table = cmd_wavefunction(wave, scales);
        } else if (cc->parsed()) {
            table = cmd_core_count(core, err, failed);
        } else if (vf->parsed()) {
            table = cmd_verify(ver, scales, err, failed);
        } else if (cs->parsed()) {
            table = cmd_consistency(con);
        } else if (sp->parsed()) {
            table = cmd_spectrum(spec, scales, failed);
        } else if (mp->parsed()) {
            table = cmd_map(map, failed);
        }
        if (failed) status = exit_failure;
        write_table(out, table, format);
        return status;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

} // namespace trapsusy::cli
