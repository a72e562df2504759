#include "casimir/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "casimir/asymptotics.hpp"
#include "casimir/constants.hpp"
#include "casimir/dce.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"
#include "casimir/pfa.hpp"
#include "casimir/sweep.hpp"
#include "casimir/table.hpp"

namespace casimir::cli {
namespace {

struct CommonOpts {
    std::string db_path;
    std::string material = "Au";
    std::string model;  // empty: use the record's own model
    std::string out_path;
    std::string format = "csv";
};

struct NumericsOpts {
    double y_cut = 50.0;
    double zeta_max = 1e17;
    double qtol = 1e-9;
    double phi_max = phys::pi / 20.0;
    std::string convention = "cylinder";
    std::string m0 = "by-model";
};

void add_db_options(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--db", c.db_path,
                    "material database file (default: $CASIMIR_MATERIAL_DB, else built-in)");
    sub->add_option("--material", c.material, "material name in the database")
        ->capture_default_str();
}

void add_model_option(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--model", c.model,
                    "dielectric model override: plasma|drude|tabulated "
                    "(default: the record's declared model)");
}

void add_output_options(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--out", c.out_path, "output file path (default: stdout)");
    sub->add_option("--format", c.format, "output format: csv|json-lines")
        ->capture_default_str();
}

void add_numerics_options(CLI::App* sub, NumericsOpts& n, bool with_pfa) {
    sub->add_option("--ycut", n.y_cut,
                    "dimensionless integration window above each Matsubara lower limit")
        ->capture_default_str();
    sub->add_option("--zeta-max", n.zeta_max, "Matsubara frequency cutoff in rad/s")
        ->capture_default_str();
    sub->add_option("--qtol", n.qtol, "relative quadrature tolerance per term")
        ->capture_default_str();
    sub->add_option("--m0", n.m0,
                    "zero-frequency TE policy: by-model|plasma-like|drude-like "
                    "(tabulated materials must pick one explicitly)")
        ->capture_default_str();
    if (with_pfa) {
        sub->add_option("--phi-max", n.phi_max, "angular cutoff of the PFA integral in radians")
            ->capture_default_str();
        sub->add_option("--convention", n.convention,
                        "PFA area convention: cylinder|plane|geometric-mean")
            ->capture_default_str();
    }
}

NumericsConfig make_numerics(const NumericsOpts& n) {
    NumericsConfig cfg;
    cfg.y_cut_offset = n.y_cut;
    cfg.zeta_max = n.zeta_max;
    cfg.quad_rel_tol = n.qtol;
    cfg.phi_max = n.phi_max;
    cfg.area_convention = area_convention_from_string(n.convention);
    cfg.m0_policy = m0_policy_from_string(n.m0);
    cfg.validate();
    return cfg;
}

std::vector<MaterialRecord> load_db(const CommonOpts& c) {
    if (!c.db_path.empty()) return load_material_db(c.db_path);
    if (const char* env = std::getenv("CASIMIR_MATERIAL_DB"); env != nullptr && *env != '\0')
        return load_material_db(env);
    return default_materials();
}

MaterialRecord resolve_material(const CommonOpts& c) {
    const auto db = load_db(c);
    MaterialRecord mat = find_material(db, c.material);
    if (!c.model.empty()) mat = mat.with_model(model_from_string(c.model));
    return mat;
}

// Runs `emit` against --out (or `fallback`); returns false on I/O failure.
bool with_sink(const CommonOpts& c, std::ostream& fallback, std::ostream& err,
               const std::function<void(std::ostream&)>& emit) {
    if (c.out_path.empty()) {
        emit(fallback);
        return true;
    }
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << c.out_path << "'\n";
        return false;
    }
    emit(file);
    file.flush();
    if (!file) {
        err << "error: write failed on '" << c.out_path << "'\n";
        return false;
    }
    return true;
}

std::vector<SweepModel> parse_model_list(const std::string& csv) {
    std::vector<SweepModel> out;
    std::string::size_type start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        const std::string tok = csv.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) out.push_back(sweep_model_from_string(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw ValidationError("empty model list");
    return out;
}

void warn_pfa(const ForceResult& r, std::ostream& err) {
    if (r.pfa_warning)
        err << "warning: d/a >= 0.01; the proximity force approximation degrades here\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Casimir force calculator: finite-temperature Lifshitz theory for real "
                 "metals, cylinder-plane forces via the proximity force approximation, "
                 "closed-form limits, and dynamical-Casimir photon estimates"};
    app.require_subcommand(1);

    // ---- pp ----
    CommonOpts pp_c;
    NumericsOpts pp_n;
    double pp_d = 0, pp_T = 300.0, pp_area = 0;
    auto* pp = app.add_subcommand("pp", "force between parallel plates");
    add_db_options(pp, pp_c);
    add_model_option(pp, pp_c);
    pp->add_option("--d", pp_d, "gap distance in meters")->required();
    pp->add_option("--T", pp_T, "temperature in kelvin")->capture_default_str();
    pp->add_option("--area", pp_area, "plate area S in square meters")->required();
    add_numerics_options(pp, pp_n, false);
    add_output_options(pp, pp_c);

    // ---- cp ----
    CommonOpts cp_c;
    NumericsOpts cp_n;
    double cp_d = 0, cp_T = 300.0, cp_L = 0, cp_a = 0;
    auto* cp = app.add_subcommand("cp", "cylinder-plane force (proximity force approximation)");
    add_db_options(cp, cp_c);
    add_model_option(cp, cp_c);
    cp->add_option("--d", cp_d, "gap distance in meters")->required();
    cp->add_option("--T", cp_T, "temperature in kelvin")->capture_default_str();
    cp->add_option("--L", cp_L, "cylinder length in meters")->required();
    cp->add_option("--a", cp_a, "cylinder radius in meters")->required();
    add_numerics_options(cp, cp_n, true);
    add_output_options(cp, cp_c);

    // ---- sweep ----
    CommonOpts sw_c;
    NumericsOpts sw_n;
    std::string sw_geometry = "pp", sw_models = "plasma,drude", sw_spacing = "log";
    double sw_dmin = 0, sw_dmax = 0, sw_T = 300.0, sw_area = 0, sw_L = 0, sw_a = 0;
    int sw_points = 2;
    unsigned sw_threads = std::max(1u, std::thread::hardware_concurrency());
    auto* sw = app.add_subcommand("sweep", "tabulate force against distance");
    add_db_options(sw, sw_c);
    sw->add_option("--geometry", sw_geometry, "pp|cp")->capture_default_str();
    sw->add_option("--d-min", sw_dmin, "smallest gap in meters")->required();
    sw->add_option("--d-max", sw_dmax, "largest gap in meters")->required();
    sw->add_option("--points", sw_points, "number of grid points (>= 2)")->required();
    sw->add_option("--spacing", sw_spacing, "grid spacing: log|linear")->capture_default_str();
    sw->add_option("--models", sw_models,
                   "comma-separated curves: plasma,drude,ideal,thermal,lowT")
        ->capture_default_str();
    sw->add_option("--T", sw_T, "temperature in kelvin")->capture_default_str();
    sw->add_option("--area", sw_area, "plate area in square meters (pp geometry)");
    sw->add_option("--L", sw_L, "cylinder length in meters (cp geometry)");
    sw->add_option("--a", sw_a, "cylinder radius in meters (cp geometry)");
    sw->add_option("--threads", sw_threads,
                   "worker threads; the output bytes do not depend on this")
        ->capture_default_str();
    add_numerics_options(sw, sw_n, true);
    add_output_options(sw, sw_c);

    // ---- asymptote ----
    CommonOpts as_c;
    std::string as_geometry = "pp", as_models = "ideal,thermal,lowT";
    double as_d = 0, as_T = 300.0, as_area = 0, as_L = 0, as_a = 0;
    auto* as = app.add_subcommand("asymptote", "closed-form limits at one distance");
    add_db_options(as, as_c);
    as->add_option("--geometry", as_geometry, "pp|cp")->capture_default_str();
    as->add_option("--d", as_d, "gap distance in meters")->required();
    as->add_option("--T", as_T, "temperature in kelvin")->capture_default_str();
    as->add_option("--area", as_area, "plate area in square meters (pp geometry)");
    as->add_option("--L", as_L, "cylinder length in meters (cp geometry)");
    as->add_option("--a", as_a, "cylinder radius in meters (cp geometry)");
    as->add_option("--models", as_models, "comma-separated subset of ideal,thermal,lowT")
        ->capture_default_str();
    add_output_options(as, as_c);

    // ---- dce ----
    CommonOpts dce_c;
    double dq = 0, deps = 0, dfreq = 0, dlambda = 0, dtime = -1.0;
    double tr_freq = 0, tr_dipole = 0, tr_voc = 0, ref_freq = 0, ref_dipole = 0;
    std::string dkind = "electric", dpreset;
    auto* dc = app.add_subcommand("dce", "dynamical Casimir photon estimates");
    dc->add_option("--Q", dq, "cavity quality factor")->required();
    dc->add_option("--eps", deps, "modulation amplitude dL/L, dimensionless")->required();
    dc->add_option("--freq-hz", dfreq, "cavity/drive frequency in Hz");
    dc->add_option("--lambda-hz", dlambda,
                   "geometry factor as a frequency in Hz (default: the cavity frequency)");
    dc->add_option("--t", dtime, "elapsed time in seconds (default: saturated value)");
    dc->add_option("--preset", dpreset, "named preset: li6 (228 MHz hyperfine transition)");
    dc->add_option("--transition-freq-hz", tr_freq, "atomic transition frequency in Hz");
    dc->add_option("--dipole", tr_dipole, "transition dipole moment in C m");
    dc->add_option("--kind", dkind, "transition kind: electric|magnetic")
        ->capture_default_str();
    dc->add_option("--v-over-c", tr_voc, "electron v/c for magnetic-dipole suppression");
    dc->add_option("--ref-freq-hz", ref_freq,
                   "reference electric-dipole transition frequency in Hz "
                   "(default: the transition frequency)");
    dc->add_option("--ref-dipole", ref_dipole,
                   "reference dipole moment in C m (default: the transition dipole)");
    add_output_options(dc, dce_c);

    // ---- materials ----
    CommonOpts mt_c;
    auto* mt = app.add_subcommand("materials", "list and validate the material database");
    add_db_options(mt, mt_c);
    add_output_options(mt, mt_c);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(pp)) {
            const NumericsConfig cfg = make_numerics(pp_n);
            const MaterialRecord mat = resolve_material(pp_c);
            const ForceResult r = force_pp(mat, {pp_area, pp_d}, pp_T, cfg);
            const std::vector<Row> rows{{pp_d, pp_T, to_string(mat.model), "pp", r.magnitude,
                                         "N", r.m_terms_used, r.rel_error_estimate}};
            const TableFormat fmt = table_format_from_string(pp_c.format);
            if (!with_sink(pp_c, out, err, [&](std::ostream& s) { emit_table(rows, fmt, s); }))
                return exit_usage;
            return exit_ok;
        }

        if (app.got_subcommand(cp)) {
            const NumericsConfig cfg = make_numerics(cp_n);
            const MaterialRecord mat = resolve_material(cp_c);
            const ForceResult r = force_cp(mat, {cp_L, cp_a, cp_d}, cp_T, cfg);
            warn_pfa(r, err);
            const std::vector<Row> rows{{cp_d, cp_T, to_string(mat.model), "cp", r.magnitude,
                                         "N", r.m_terms_used, r.rel_error_estimate}};
            const TableFormat fmt = table_format_from_string(cp_c.format);
            if (!with_sink(cp_c, out, err, [&](std::ostream& s) { emit_table(rows, fmt, s); }))
                return exit_usage;
            return exit_ok;
        }

        if (app.got_subcommand(sw)) {
            SweepSpec spec;
            if (sw_geometry == "pp") {
                spec.cylinder_plane = false;
            } else if (sw_geometry == "cp") {
                spec.cylinder_plane = true;
            } else {
                throw ValidationError("unknown geometry '" + sw_geometry + "'");
            }
            spec.area = sw_area;
            spec.length = sw_L;
            spec.radius = sw_a;
            spec.d_min = sw_dmin;
            spec.d_max = sw_dmax;
            spec.points = sw_points;
            if (sw_spacing == "log") {
                spec.spacing = Spacing::log;
            } else if (sw_spacing == "linear") {
                spec.spacing = Spacing::linear;
            } else {
                throw ValidationError("unknown spacing '" + sw_spacing + "'");
            }
            spec.models = parse_model_list(sw_models);
            spec.temperature = sw_T;
            spec.numerics = make_numerics(sw_n);
            const MaterialRecord mat = resolve_material(sw_c);
            const std::vector<Row> rows = run_sweep(spec, mat, sw_threads);
            const TableFormat fmt = table_format_from_string(sw_c.format);
            if (!with_sink(sw_c, out, err, [&](std::ostream& s) { emit_table(rows, fmt, s); }))
                return exit_usage;
            return exit_ok;
        }

        if (app.got_subcommand(as)) {
            const bool is_cp = [&] {
                if (as_geometry == "pp") return false;
                if (as_geometry == "cp") return true;
                throw ValidationError("unknown geometry '" + as_geometry + "'");
            }();
            if (is_cp) {
                if (!(as_L > 0 && as_a > 0))
                    throw ValidationError("cp geometry needs --L and --a");
            } else if (!(as_area > 0)) {
                throw ValidationError("pp geometry needs --area");
            }
            const MaterialRecord mat = resolve_material(as_c);
            std::vector<Row> rows;
            for (const SweepModel m : parse_model_list(as_models)) {
                if (m == SweepModel::plasma || m == SweepModel::drude)
                    throw ValidationError("asymptote handles ideal|thermal|lowT; use pp/cp/sweep "
                                          "for the full models");
                Row row{as_d, as_T, to_string(m), is_cp ? "cp" : "pp", 0.0, "N", 0, 0.0};
                switch (m) {
                    case SweepModel::ideal:
                        row.value = is_cp ? ideal_cp_force(as_L, as_a, as_d)
                                          : ideal_pp_pressure(as_d) * as_area;
                        break;
                    case SweepModel::thermal:
                        row.value = is_cp ? thermal_cp_force(as_L, as_a, as_d, as_T)
                                          : thermal_pp_pressure(as_d, as_T) * as_area;
                        break;
                    default: {  // lowT
                        const ExpansionInputs x{as_T / t_eff(as_d), plasma_delta(mat) / as_d};
                        const ExpansionValue v = is_cp ? lowT_ratio_cp(x) : lowT_ratio_pp(x);
                        if (!v.within_validity)
                            err << "warning: low-T expansion outside its validity range "
                                   "(T/T_eff = "
                                << format_sci(x.t_ratio) << ", delta/d = "
                                << format_sci(x.delta_over_d) << ")\n";
                        row.value = v.ratio * (is_cp ? ideal_cp_force(as_L, as_a, as_d)
                                                     : ideal_pp_pressure(as_d) * as_area);
                        break;
                    }
                }
                rows.push_back(row);
            }
            err << "note: T_eff = " << format_sci(t_eff(as_d)) << " K at d = "
                << format_sci(as_d) << " m\n";
            const TableFormat fmt = table_format_from_string(as_c.format);
            if (!with_sink(as_c, out, err, [&](std::ostream& s) { emit_table(rows, fmt, s); }))
                return exit_usage;
            return exit_ok;
        }

        if (app.got_subcommand(dc)) {
            if (dpreset == "li6") {
                if (dfreq <= 0) dfreq = dce::li6_hyperfine_freq_hz;
                if (tr_freq <= 0) tr_freq = dce::li6_hyperfine_freq_hz;
            } else if (!dpreset.empty()) {
                throw ValidationError("unknown preset '" + dpreset + "'");
            }
            if (!(dfreq > 0)) throw ValidationError("dce needs --freq-hz or --preset");
            dce::DceParams p{dq, deps, 2.0 * phys::pi * dfreq, 2.0 * phys::pi * dlambda};
            p.validate();
            const double tau = dce::saturation_time(p);
            const double photons =
                dtime >= 0.0 ? dce::photon_number(p, dtime) : dce::photon_number_saturated(p);
            std::string text;
            text += "photons " + format_sci(photons) + "\n";
            text += "tau_sat_s " + format_sci(tau) + "\n";
            text += "power_W " + format_sci(dce::photon_power(photons, p.omega, tau)) + "\n";
            if (tr_dipole > 0 || tr_freq > 0) {
                if (!(tr_dipole > 0 && tr_freq > 0))
                    throw ValidationError(
                        "a transition needs both --transition-freq-hz and --dipole");
                dce::TransitionSpec t{2.0 * phys::pi * tr_freq, tr_dipole,
                                      dkind == "magnetic" ? dce::TransitionKind::magnetic_dipole
                                                          : dce::TransitionKind::electric_dipole,
                                      tr_voc};
                if (dkind != "magnetic" && dkind != "electric")
                    throw ValidationError("unknown transition kind '" + dkind + "'");
                dce::TransitionSpec ref{ref_freq > 0 ? 2.0 * phys::pi * ref_freq : t.omega_t,
                                        ref_dipole > 0 ? ref_dipole : t.dipole_moment,
                                        dce::TransitionKind::electric_dipole, 0.0};
                const dce::DetectionBudget b = dce::detection_budget(p, t, ref);
                text += "rate_spont_per_s " + format_sci(b.rate_spont) + "\n";
                text += "comparison_ratio " + format_sci(b.comparison_ratio) + "\n";
            }
            if (!with_sink(dce_c, out, err, [&](std::ostream& s) { s << text; }))
                return exit_usage;
            return exit_ok;
        }

        if (app.got_subcommand(mt)) {
            const auto db = load_db(mt_c);
            std::string text;
            for (const auto& m : db) {
                text += m.name + " " + to_string(m.model);
                if (m.plasma_frequency > 0) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, " plasma_frequency_eV=%.9g",
                                  m.plasma_frequency /
                                      (phys::elementary_charge / phys::hbar));
                    text += buf;
                }
                if (m.model == DielectricModel::drude) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, " relaxation_meV=%.9g",
                                  m.relaxation_frequency /
                                      (phys::elementary_charge / phys::hbar) * 1e3);
                    text += buf;
                }
                if (m.model == DielectricModel::tabulated)
                    text += " table_points=" + std::to_string(m.table.size());
                text += "\n";
            }
            if (!with_sink(mt_c, out, err, [&](std::ostream& s) { s << text; }))
                return exit_usage;
            return exit_ok;
        }
    } catch (const MaterialDbError& e) {
        err << "error: " << e.what() << "\n";
        return exit_material_db;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return exit_convergence;
    } catch (const OutOfModelError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    err << "error: no subcommand selected\n";
    return exit_usage;
}

}  // namespace casimir::cli
