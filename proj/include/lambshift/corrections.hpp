/*
 * Non-radiative level corrections: vacuum polarization, relativistic recoil
 * through the binding-energy relation, and finite nuclear size.
 */
#pragma once

#include "lambshift/constants.hpp"
#include "lambshift/hydrogenic.hpp"

namespace lambshift {

struct CorrectionBreakdown {
    double vacuum_polarization_mhz = 0.0;  // > 0
    double relativistic_mhz = 0.0;         // < 0
    double nuclear_mhz = 0.0;              // >= 0, zero unless l = 0

    double sum_mhz() const {
        return vacuum_polarization_mhz + relativistic_mhz + nuclear_mhz;
    }
};

/// (2 Z^4 alpha^3 / 3 pi n^4) R_y of the atom.
double vacuum_polarization_mhz(const AtomSpec& atom, StateLabel state);

/// -epsilon^2/(2M) with epsilon = -Z^2 alpha^2 mu/(2 n^2):
/// -(Z^4/4) alpha^2 (mu/M) R_y / n^4.
double relativistic_recoil_mhz(const AtomSpec& atom, StateLabel state);

/// (4/5)(1/n^3)(r_N/a)^2 R_y for l = 0, zero otherwise.
double nuclear_size_mhz(const AtomSpec& atom, StateLabel state);

CorrectionBreakdown corrections_for(const AtomSpec& atom, StateLabel state);

/// Binding energy B = M [1 - sqrt(1 + 2 epsilon/M)], in the units of the
/// arguments. Throws std::domain_error if the radicand is negative.
double binding_energy(double epsilon, double total_mass);

}  // namespace lambshift
