/*
 * Physical constants, unit conversion and per-atom derived quantities.
 * All energies are anchored to the hydrogen Rydberg value in MHz; per-atom
 * calculations run in natural units where the observed reduced mass is 1.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lambshift {

struct PhysicalConstants {
    double alpha = 1.0 / 137.0359895;
    double rydberg_h_mhz = 3.28805128e9;
    double mass_ratio_proton_electron = 1836.152701;
    double mass_ratio_deuteron_electron = 3670.483014;
    double nuclear_radius_proton_fm = 0.862;
    double nuclear_radius_deuteron_fm = 2.115;
    double bohr_radius_infinite_mass_m = 0.529177249e-10;

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
};

enum class Element { hydrogen, deuterium };

/// mu/m_e = r/(1+r) for a nucleus of mass ratio r = m_N/m_e.
double reduced_mass_ratio(double mass_ratio_nucleus_electron);

/// One hydrogenlike species with everything derived from PhysicalConstants.
/// Immutable after construction; energies in MHz, lengths in meters.
struct AtomSpec {
    std::string name;
    Element element = Element::hydrogen;
    int z = 1;
    double alpha = 0.0;
    double mass_ratio_nucleus_electron = 0.0;
    double nuclear_radius_fm = 0.0;

    double mu_obs_mhz = 0.0;     // observed reduced mass
    double mu_bare_mhz = 0.0;    // mu = mu_obs * (1 + beta)
    double electron_mass_mhz = 0.0;
    double total_mass_mhz = 0.0; // M = m_e + m_N
    double rydberg_mhz = 0.0;    // alpha^2 mu_obs / 2
    double bohr_radius_m = 0.0;  // reduced-mass Bohr radius

    /// Bohr radius in natural units (mu_obs = 1): a = 1/(alpha mu_obs).
    double bohr_radius_natural() const { return 1.0 / alpha; }
    /// Dimensionless r_N/a entering the finite-nuclear-size correction.
    double nuclear_radius_over_bohr() const {
        return nuclear_radius_fm * 1e-15 / bohr_radius_m;
    }
};

AtomSpec atom_from_constants(const PhysicalConstants& constants, Element which);

/// Convert an energy in natural units of the atom's mu_obs to MHz.
double natural_to_mhz(double value_natural, const AtomSpec& atom);
/// Exact inverse of natural_to_mhz.
double mhz_to_natural(double value_mhz, const AtomSpec& atom);

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Load constants from a JSON object file. Keys are exactly the
/// PhysicalConstants field names; absent keys keep their defaults; unknown
/// keys are an error.
PhysicalConstants constants_from_json_file(const std::string& path);

}  // namespace lambshift
