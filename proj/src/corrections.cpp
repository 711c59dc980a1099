#include "lambshift/corrections.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lambshift {

namespace {

void require_state(const AtomSpec& atom, StateLabel state) {
    if (!is_supported(state))
        throw std::invalid_argument("corrections: unsupported state (n,l)");
    if (!(atom.rydberg_mhz > 0.0))
        throw std::invalid_argument("corrections: invalid atom");
}

double pow4(double v) { return v * v * v * v; }

}  // namespace

double vacuum_polarization_mhz(const AtomSpec& atom, StateLabel state) {
    require_state(atom, state);
    double z4 = pow4(static_cast<double>(atom.z));
    double a3 = atom.alpha * atom.alpha * atom.alpha;
    return 2.0 * z4 * a3 / (3.0 * std::numbers::pi * pow4(state.n)) *
           atom.rydberg_mhz;
}

double relativistic_recoil_mhz(const AtomSpec& atom, StateLabel state) {
    require_state(atom, state);
    // -eps^2/(2M) with eps = -Z^2 alpha^2 mu/(2 n^2).
    double z4 = pow4(static_cast<double>(atom.z));
    double mu_over_m = atom.mu_obs_mhz / atom.total_mass_mhz;
    return -0.25 * z4 * atom.alpha * atom.alpha * mu_over_m *
           atom.rydberg_mhz / pow4(state.n);
}

double nuclear_size_mhz(const AtomSpec& atom, StateLabel state) {
    require_state(atom, state);
    if (state.l != 0) return 0.0;
    double ratio = atom.nuclear_radius_over_bohr();
    double n3 = static_cast<double>(state.n) * state.n * state.n;
    return (4.0 / 5.0) * ratio * ratio * atom.rydberg_mhz / n3;
}

CorrectionBreakdown corrections_for(const AtomSpec& atom, StateLabel state) {
    CorrectionBreakdown out;
    out.vacuum_polarization_mhz = vacuum_polarization_mhz(atom, state);
    out.relativistic_mhz = relativistic_recoil_mhz(atom, state);
    out.nuclear_mhz = nuclear_size_mhz(atom, state);
    return out;
}

double binding_energy(double epsilon, double total_mass) {
    if (!(total_mass > 0.0))
        throw std::domain_error("binding_energy: total mass must be positive");
    double u = 2.0 * epsilon / total_mass;
    if (1.0 + u < 0.0)
        throw std::domain_error("binding_energy: radicand is negative");
    // M (1 - sqrt(1+u)) = -2 eps / (1 + sqrt(1+u)), stable for |eps| << M.
    return -2.0 * epsilon / (1.0 + std::sqrt(1.0 + u));
}

}  // namespace lambshift
