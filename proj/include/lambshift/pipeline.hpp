/*
 * Assembly of per-state Lamb-shift predictions in three modes, comparison
 * against the experimental reference values, and report rendering.
 */
#pragma once

#include "lambshift/constants.hpp"
#include "lambshift/corrections.hpp"
#include "lambshift/hydrogenic.hpp"
#include "lambshift/quadrature.hpp"
#include "lambshift/radiative.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lambshift {

/// Experimental reference values (microwave frequencies).
struct ExperimentTable {
    double h_2s_2p_mhz = 1057.845;
    double h_1s_mhz = 8172.86;
    double d_1s_mhz = 8184.00;
};

enum class ShiftMode { semiempirical, analytic_b2r, full_quadrature };

const char* to_string(ShiftMode mode);

/// A single level, or the splitting between two levels of the same n.
struct LevelSelector {
    StateLabel upper;
    std::optional<StateLabel> lower;  // set for splittings, e.g. 2S - 2P

    static LevelSelector absolute(StateLabel s) { return {s, std::nullopt}; }
    static LevelSelector splitting(StateLabel up, StateLabel down) {
        return {up, down};
    }
    std::string label() const;
};

struct ShiftReport {
    std::string atom;
    std::string state;
    ShiftMode mode = ShiftMode::analytic_b2r;
    double radiative_mhz = 0.0;
    CorrectionBreakdown corrections;
    double total_mhz = 0.0;
    std::optional<double> experiment_mhz;
    std::optional<double> deviation_percent;  // (total - experiment)/experiment
    std::vector<std::pair<std::string, double>> diagnostics;
    bool failed = false;
    std::string error;
};

/// The p^4 fit coefficient b2/a_H^4 in MHz, fixed from the measured 2S-2P
/// splitting minus the nuclear-size share of it. Hydrogen only.
double semiempirical_b2_mhz(const ExperimentTable& experiment,
                            const AtomSpec& atom);

ShiftReport semiempirical_shift(const ExperimentTable& experiment,
                                const AtomSpec& atom, const LevelSelector& sel);

/// Radiative part from b2R <p^4>, corrections added on top.
ShiftReport analytic_shift(const AtomSpec& atom, const LevelSelector& sel,
                           const RadiativeModel& model);

/// Radiative part from the expectation value of delta_e_rad over the state's
/// momentum density (split at the switch momentum and at p = mu).
/// Throws QuadratureError on non-convergence.
ShiftReport quadrature_shift(const AtomSpec& atom, const LevelSelector& sel,
                             const RadiativeModel& model,
                             const QuadratureConfig& config,
                             bool verbose = false);

/// Quadrature settings for the radiative expectation values. The closed
/// forms lose ~9 digits to cancellation right above the series switch, so
/// the achievable relative tolerance is bounded near 1e-9.
inline QuadratureConfig default_radiative_quadrature() {
    QuadratureConfig config;
    config.relative_tolerance = 1e-9;
    return config;
}

struct ReportRequest {
    std::vector<Element> atoms = {Element::hydrogen, Element::deuterium};
    std::vector<ShiftMode> modes = {ShiftMode::semiempirical,
                                    ShiftMode::analytic_b2r,
                                    ShiftMode::full_quadrature};
    QuadratureConfig quadrature = default_radiative_quadrature();
    bool verbose = false;
};

/// Every state/pair report for the requested atoms and modes, in a fixed
/// deterministic order. Per-entry quadrature failures are recorded in the
/// entry instead of aborting the batch.
std::vector<ShiftReport> full_report(const PhysicalConstants& constants,
                                     const ReportRequest& request);

enum class ReportFormat { table, json, csv };

std::string render_report(const std::vector<ShiftReport>& reports,
                          ReportFormat format, bool verbose = false);

/// Command-line entry point: parses flags, runs full_report, writes the
/// rendered report to stdout. Returns 0 on success, 1 on usage or config
/// errors, 2 when any quadrature entry failed to converge.
int cli_main(int argc, const char* const* argv);

}  // namespace lambshift
