#include "lambshift/constants.hpp"

#include "lambshift/radiative.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace lambshift {

void PhysicalConstants::validate() const {
    if (!(alpha > 0.0) || !(alpha < 0.01))
        throw std::invalid_argument("constants: alpha must lie in (0, 0.01)");
    if (!(rydberg_h_mhz > 0.0))
        throw std::invalid_argument("constants: rydberg_h_mhz must be positive");
    if (!(mass_ratio_proton_electron > 0.0) ||
        !(mass_ratio_deuteron_electron > 0.0))
        throw std::invalid_argument("constants: mass ratios must be positive");
    if (!(nuclear_radius_proton_fm > 0.0) ||
        !(nuclear_radius_deuteron_fm > 0.0))
        throw std::invalid_argument("constants: nuclear radii must be positive");
    if (!(bohr_radius_infinite_mass_m > 0.0))
        throw std::invalid_argument("constants: bohr radius must be positive");
}

double reduced_mass_ratio(double mass_ratio_nucleus_electron) {
    if (!(mass_ratio_nucleus_electron > 0.0))
        throw std::domain_error("reduced_mass_ratio: mass ratio must be positive");
    return mass_ratio_nucleus_electron / (1.0 + mass_ratio_nucleus_electron);
}

AtomSpec atom_from_constants(const PhysicalConstants& c, Element which) {
    c.validate();

    // mu_obs of hydrogen is anchored by R_H = alpha^2 mu_obs / 2.
    double mu_ratio_h = reduced_mass_ratio(c.mass_ratio_proton_electron);
    double mu_obs_h_mhz = 2.0 * c.rydberg_h_mhz / (c.alpha * c.alpha);
    double electron_mass_mhz = mu_obs_h_mhz / mu_ratio_h;

    AtomSpec atom;
    atom.element = which;
    atom.z = 1;
    atom.alpha = c.alpha;
    switch (which) {
        case Element::hydrogen:
            atom.name = "H";
            atom.mass_ratio_nucleus_electron = c.mass_ratio_proton_electron;
            atom.nuclear_radius_fm = c.nuclear_radius_proton_fm;
            break;
        case Element::deuterium:
            atom.name = "D";
            atom.mass_ratio_nucleus_electron = c.mass_ratio_deuteron_electron;
            atom.nuclear_radius_fm = c.nuclear_radius_deuteron_fm;
            break;
        default:
            throw std::invalid_argument("atom_from_constants: unknown element tag");
    }

    double mu_ratio = reduced_mass_ratio(atom.mass_ratio_nucleus_electron);
    atom.electron_mass_mhz = electron_mass_mhz;
    atom.mu_obs_mhz = electron_mass_mhz * mu_ratio;
    atom.mu_bare_mhz = atom.mu_obs_mhz * (1.0 + beta_coefficient(c.alpha));
    atom.total_mass_mhz =
        electron_mass_mhz * (1.0 + atom.mass_ratio_nucleus_electron);
    atom.rydberg_mhz = 0.5 * c.alpha * c.alpha * atom.mu_obs_mhz;
    atom.bohr_radius_m = c.bohr_radius_infinite_mass_m / mu_ratio;

    if (!(atom.mu_obs_mhz < atom.electron_mass_mhz))
        throw std::invalid_argument("atom_from_constants: mu_obs must be below m_e");
    if (!(atom.mu_obs_mhz / atom.total_mass_mhz < 1.0))
        throw std::invalid_argument("atom_from_constants: mu_obs/M must be below 1");
    return atom;
}

double natural_to_mhz(double value_natural, const AtomSpec& atom) {
    return value_natural * atom.mu_obs_mhz;
}

double mhz_to_natural(double value_mhz, const AtomSpec& atom) {
    return value_mhz / atom.mu_obs_mhz;
}

PhysicalConstants constants_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config: invalid JSON in '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");

    PhysicalConstants c;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_number())
            throw ConfigError("config: key '" + key + "' must be a number");
        double v = value.get<double>();
        if (key == "alpha")
            c.alpha = v;
        else if (key == "rydberg_h_mhz")
            c.rydberg_h_mhz = v;
        else if (key == "mass_ratio_proton_electron")
            c.mass_ratio_proton_electron = v;
        else if (key == "mass_ratio_deuteron_electron")
            c.mass_ratio_deuteron_electron = v;
        else if (key == "nuclear_radius_proton_fm")
            c.nuclear_radius_proton_fm = v;
        else if (key == "nuclear_radius_deuteron_fm")
            c.nuclear_radius_deuteron_fm = v;
        else if (key == "bohr_radius_infinite_mass_m")
            c.bohr_radius_infinite_mass_m = v;
        else
            throw ConfigError("config: unknown key '" + key + "'");
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

}  // namespace lambshift
