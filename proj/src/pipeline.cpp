#include "lambshift/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

namespace lambshift {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string state_text(StateLabel s) {
    const char* shell = s.l == 0 ? "S" : "P";
    return std::to_string(s.n) + shell;
}

std::optional<double> experiment_lookup(const ExperimentTable& table,
                                        Element element,
                                        const LevelSelector& sel) {
    bool pair = sel.lower.has_value();
    if (element == Element::hydrogen) {
        if (pair) return table.h_2s_2p_mhz;
        if (sel.upper == StateLabel{1, 0}) return table.h_1s_mhz;
    } else {
        if (!pair && sel.upper == StateLabel{1, 0}) return table.d_1s_mhz;
    }
    return std::nullopt;
}

// <p^4> weight of Eq. (12) relative to b2/a^4: [8n/(2l+1) - 3]/n^4.
double p4_weight(StateLabel s) {
    return (8.0 * s.n / (2.0 * s.l + 1.0) - 3.0) / (s.n * s.n * s.n * s.n);
}

CorrectionBreakdown corrections_for_selector(const AtomSpec& atom,
                                             const LevelSelector& sel) {
    CorrectionBreakdown upper = corrections_for(atom, sel.upper);
    if (!sel.lower) return upper;
    CorrectionBreakdown lower = corrections_for(atom, *sel.lower);
    CorrectionBreakdown diff;
    diff.vacuum_polarization_mhz =
        upper.vacuum_polarization_mhz - lower.vacuum_polarization_mhz;
    diff.relativistic_mhz = upper.relativistic_mhz - lower.relativistic_mhz;
    diff.nuclear_mhz = upper.nuclear_mhz - lower.nuclear_mhz;
    return diff;
}

void finish_report(ShiftReport& report, const AtomSpec& atom,
                   const ExperimentTable& table, Element element,
                   const LevelSelector& sel) {
    report.total_mhz = report.radiative_mhz + report.corrections.sum_mhz();
    report.experiment_mhz = experiment_lookup(table, element, sel);
    if (report.experiment_mhz)
        report.deviation_percent = 100.0 *
                                   (report.total_mhz - *report.experiment_mhz) /
                                   *report.experiment_mhz;
    report.diagnostics.emplace_back("nuclear_radius_fm", atom.nuclear_radius_fm);
}

const ExperimentTable kExperiment{};

}  // namespace

const char* to_string(ShiftMode mode) {
    switch (mode) {
        case ShiftMode::semiempirical: return "semiempirical";
        case ShiftMode::analytic_b2r: return "analytic";
        case ShiftMode::full_quadrature: return "quadrature";
    }
    return "?";
}

std::string LevelSelector::label() const {
    if (!lower) return state_text(upper);
    return state_text(upper) + "-" + state_text(*lower);
}

double semiempirical_b2_mhz(const ExperimentTable& experiment,
                            const AtomSpec& atom) {
    if (atom.element != Element::hydrogen)
        throw std::invalid_argument(
            "semiempirical_b2: the fit uses the hydrogen 2S-2P splitting");
    double nuclear_2s = nuclear_size_mhz(atom, StateLabel{2, 0});
    return 1.5 * (experiment.h_2s_2p_mhz - nuclear_2s);
}

ShiftReport semiempirical_shift(const ExperimentTable& experiment,
                                const AtomSpec& atom,
                                const LevelSelector& sel) {
    double b2_fit = semiempirical_b2_mhz(experiment, atom);
    ShiftReport report;
    report.atom = atom.name;
    report.state = sel.label();
    report.mode = ShiftMode::semiempirical;
    double weight = p4_weight(sel.upper);
    if (sel.lower) weight -= p4_weight(*sel.lower);
    report.radiative_mhz = weight * b2_fit;
    report.corrections = corrections_for_selector(atom, sel);
    report.diagnostics.emplace_back("b2_fit_mhz", b2_fit);
    finish_report(report, atom, kExperiment, atom.element, sel);
    return report;
}

ShiftReport analytic_shift(const AtomSpec& atom, const LevelSelector& sel,
                           const RadiativeModel& model) {
    ShiftReport report;
    report.atom = atom.name;
    report.state = sel.label();
    report.mode = ShiftMode::analytic_b2r;
    double a = atom.bohr_radius_natural();
    double p4 = p4_expectation(sel.upper, a);
    if (sel.lower) p4 -= p4_expectation(*sel.lower, a);
    report.radiative_mhz = natural_to_mhz(model.b2_renorm() * p4, atom);
    report.corrections = corrections_for_selector(atom, sel);
    report.diagnostics.emplace_back("beta", model.beta());
    report.diagnostics.emplace_back("kappa", model.kappa());
    report.diagnostics.emplace_back("p4_expectation_a4", p4 * a * a * a * a);
    finish_report(report, atom, kExperiment, atom.element, sel);
    return report;
}

namespace {

QuadratureResult radiative_expectation(const AtomSpec& atom,
                                       const RadiativeModel& model,
                                       StateLabel state,
                                       QuadratureConfig config,
                                       MassBracket bracket) {
    // The renormalized shift is only piecewise smooth at p = mu and switches
    // evaluation branch at the series boundary; split at both.
    config.split_points = {model.series_switch_momentum(), model.mu_bare()};
    return expectation(
        state, atom.bohr_radius_natural(),
        [&](double p) { return model.delta_e_rad(p, bracket); }, config);
}

}  // namespace

ShiftReport quadrature_shift(const AtomSpec& atom, const LevelSelector& sel,
                             const RadiativeModel& model,
                             const QuadratureConfig& config, bool verbose) {
    ShiftReport report;
    report.atom = atom.name;
    report.state = sel.label();
    report.mode = ShiftMode::full_quadrature;

    QuadratureResult upper = radiative_expectation(atom, model, sel.upper,
                                                   config, MassBracket::background_p4);
    double value = upper.value;
    double error = upper.error_estimate;
    double tail = upper.tail_bound;
    int subdivisions = upper.subdivisions_used;
    if (sel.lower) {
        QuadratureResult lower = radiative_expectation(
            atom, model, *sel.lower, config, MassBracket::background_p4);
        value -= lower.value;
        error += lower.error_estimate;
        tail += lower.tail_bound;
        subdivisions += lower.subdivisions_used;
    }
    report.radiative_mhz = natural_to_mhz(value, atom);
    report.corrections = corrections_for_selector(atom, sel);
    report.diagnostics.emplace_back("beta", model.beta());
    report.diagnostics.emplace_back("kappa", model.kappa());
    report.diagnostics.emplace_back("quad_error_mhz",
                                    natural_to_mhz(error, atom));
    report.diagnostics.emplace_back("quad_subdivisions",
                                    static_cast<double>(subdivisions));
    report.diagnostics.emplace_back("quad_tail_bound_mhz",
                                    natural_to_mhz(tail, atom));
    if (verbose) {
        report.diagnostics.emplace_back("c1", model.c1());
        report.diagnostics.emplace_back("c2", model.c2());
        report.diagnostics.emplace_back("c3", model.c3());
        report.diagnostics.emplace_back("c4", model.c4());
        report.diagnostics.emplace_back("c3_c4_constraint",
                                        model.c3_c4_constraint());
        report.diagnostics.emplace_back("b1_2", model.b1_2());
        report.diagnostics.emplace_back("b2_sum", model.b2_sum());
        report.diagnostics.emplace_back("b2_renormalized", model.b2_renorm());
        // Same expectation with the full square-root brackets kept, for
        // comparison against the default p^4-background subtraction.
        QuadratureResult alt = radiative_expectation(
            atom, model, sel.upper, config, MassBracket::exact_sqrt);
        double alt_value = alt.value;
        if (sel.lower)
            alt_value -= radiative_expectation(atom, model, *sel.lower, config,
                                               MassBracket::exact_sqrt)
                             .value;
        report.diagnostics.emplace_back("radiative_exact_sqrt_bracket_mhz",
                                        natural_to_mhz(alt_value, atom));
    }
    finish_report(report, atom, kExperiment, atom.element, sel);
    return report;
}

std::vector<ShiftReport> full_report(const PhysicalConstants& constants,
                                     const ReportRequest& request) {
    std::vector<ShiftReport> reports;
    const ExperimentTable table{};
    const LevelSelector selectors[] = {
        LevelSelector::absolute({1, 0}),
        LevelSelector::splitting({2, 0}, {2, 1}),
    };

    for (Element element : request.atoms) {
        AtomSpec atom = atom_from_constants(constants, element);
        RadiativeModel model(constants.alpha, 1.0);
        for (ShiftMode mode : request.modes) {
            // The semiempirical fit is defined through the hydrogen data.
            if (mode == ShiftMode::semiempirical &&
                element != Element::hydrogen)
                continue;
            for (const LevelSelector& sel : selectors) {
                try {
                    switch (mode) {
                        case ShiftMode::semiempirical:
                            reports.push_back(
                                semiempirical_shift(table, atom, sel));
                            break;
                        case ShiftMode::analytic_b2r:
                            reports.push_back(analytic_shift(atom, sel, model));
                            break;
                        case ShiftMode::full_quadrature:
                            reports.push_back(
                                quadrature_shift(atom, sel, model,
                                                 request.quadrature,
                                                 request.verbose));
                            break;
                    }
                } catch (const QuadratureError& e) {
                    ShiftReport failed;
                    failed.atom = atom.name;
                    failed.state = sel.label();
                    failed.mode = mode;
                    failed.failed = true;
                    failed.error = e.what();
                    failed.diagnostics.emplace_back(
                        "quad_error_mhz",
                        natural_to_mhz(e.best().error_estimate, atom));
                    reports.push_back(std::move(failed));
                }
            }
        }
    }
    return reports;
}

namespace {

std::string render_table(const std::vector<ShiftReport>& reports,
                         bool verbose) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line),
                  "%-4s %-6s %-13s %13s %9s %9s %8s %13s %13s %10s\n", "atom",
                  "state", "mode", "radiative", "Vp", "Rel", "Nuc", "total",
                  "experiment", "dev(%)");
    out << line;
    for (const auto& r : reports) {
        if (r.failed) {
            std::snprintf(line, sizeof(line), "%-4s %-6s %-13s FAILED: %s\n",
                          r.atom.c_str(), r.state.c_str(), to_string(r.mode),
                          r.error.c_str());
            out << line;
            continue;
        }
        std::string experiment =
            r.experiment_mhz ? fmt("%.3f", *r.experiment_mhz) : "-";
        std::string deviation =
            r.deviation_percent ? fmt("%.4f", *r.deviation_percent) : "-";
        std::snprintf(line, sizeof(line),
                      "%-4s %-6s %-13s %13.3f %9.3f %9.3f %8.3f %13.3f %13s "
                      "%10s\n",
                      r.atom.c_str(), r.state.c_str(), to_string(r.mode),
                      r.radiative_mhz, r.corrections.vacuum_polarization_mhz,
                      r.corrections.relativistic_mhz, r.corrections.nuclear_mhz,
                      r.total_mhz, experiment.c_str(), deviation.c_str());
        out << line;
        if (verbose) {
            for (const auto& [key, value] : r.diagnostics)
                out << "    " << key << " = " << fmt("%.9g", value) << "\n";
        }
    }
    return out.str();
}

std::string render_json(const std::vector<ShiftReport>& reports) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json entry;
        entry["atom"] = r.atom;
        entry["state"] = r.state;
        entry["mode"] = to_string(r.mode);
        if (r.failed) {
            entry["failed"] = true;
            entry["error"] = r.error;
        } else {
            entry["radiative_mhz"] = r.radiative_mhz;
            entry["vp_mhz"] = r.corrections.vacuum_polarization_mhz;
            entry["rel_mhz"] = r.corrections.relativistic_mhz;
            entry["nuc_mhz"] = r.corrections.nuclear_mhz;
            entry["total_mhz"] = r.total_mhz;
            if (r.experiment_mhz) {
                entry["experiment_mhz"] = *r.experiment_mhz;
                entry["deviation_percent"] = *r.deviation_percent;
            } else {
                entry["experiment_mhz"] = nullptr;
                entry["deviation_percent"] = nullptr;
            }
        }
        nlohmann::ordered_json diag = nlohmann::ordered_json::object();
        for (const auto& [key, value] : r.diagnostics) diag[key] = value;
        entry["diagnostics"] = diag;
        doc.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string render_csv(const std::vector<ShiftReport>& reports) {
    std::ostringstream out;
    out << "atom,state,mode,radiative_mhz,vp_mhz,rel_mhz,nuc_mhz,total_mhz,"
           "experiment_mhz,deviation_percent,diagnostics\n";
    for (const auto& r : reports) {
        out << r.atom << "," << r.state << "," << to_string(r.mode) << ",";
        if (r.failed) {
            out << ",,,,,,,error: " << r.error << "\n";
            continue;
        }
        out << fmt("%.6f", r.radiative_mhz) << ","
            << fmt("%.6f", r.corrections.vacuum_polarization_mhz) << ","
            << fmt("%.6f", r.corrections.relativistic_mhz) << ","
            << fmt("%.6f", r.corrections.nuclear_mhz) << ","
            << fmt("%.6f", r.total_mhz) << ",";
        if (r.experiment_mhz)
            out << fmt("%.6f", *r.experiment_mhz) << ","
                << fmt("%.6f", *r.deviation_percent) << ",";
        else
            out << ",,";
        bool first = true;
        for (const auto& [key, value] : r.diagnostics) {
            if (!first) out << ";";
            out << key << "=" << fmt("%.9g", value);
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string render_report(const std::vector<ShiftReport>& reports,
                          ReportFormat format, bool verbose) {
    switch (format) {
        case ReportFormat::table: return render_table(reports, verbose);
        case ReportFormat::json: return render_json(reports);
        case ReportFormat::csv: return render_csv(reports);
    }
    return {};
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Noncovariant Lamb-shift predictions for hydrogen and "
                 "deuterium"};
    std::string atom = "all";
    std::string mode = "all";
    std::string format = "table";
    std::string config_path;
    double tolerance = default_radiative_quadrature().relative_tolerance;
    bool verbose = false;

    app.add_option("--atom", atom, "Atom to report: H, D or all")
        ->check(CLI::IsMember({"H", "D", "all"}));
    app.add_option("--mode", mode,
                   "Calculation mode: semiempirical, analytic, quadrature or "
                   "all")
        ->check(CLI::IsMember({"semiempirical", "analytic", "quadrature",
                               "all"}));
    app.add_option("--format", format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--config", config_path,
                   "JSON file overriding physical constants");
    app.add_option("--tolerance", tolerance,
                   "Relative tolerance of the quadrature mode");
    app.add_flag("--verbose", verbose, "Dump model coefficients per entry");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 1;
    }

    PhysicalConstants constants;
    try {
        if (!config_path.empty())
            constants = constants_from_json_file(config_path);
        if (!(tolerance > 0.0) || tolerance >= 1.0)
            throw ConfigError("tolerance must lie in (0, 1)");
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    ReportRequest request;
    if (atom == "H")
        request.atoms = {Element::hydrogen};
    else if (atom == "D")
        request.atoms = {Element::deuterium};
    if (mode == "semiempirical")
        request.modes = {ShiftMode::semiempirical};
    else if (mode == "analytic")
        request.modes = {ShiftMode::analytic_b2r};
    else if (mode == "quadrature")
        request.modes = {ShiftMode::full_quadrature};
    request.quadrature.relative_tolerance = tolerance;
    request.verbose = verbose;

    std::vector<ShiftReport> reports = full_report(constants, request);

    ReportFormat fmt_tag = ReportFormat::table;
    if (format == "json") fmt_tag = ReportFormat::json;
    if (format == "csv") fmt_tag = ReportFormat::csv;
    std::cout << render_report(reports, fmt_tag, verbose);

    for (const auto& r : reports)
        if (r.failed) return 2;
    return 0;
}

}  // namespace lambshift
