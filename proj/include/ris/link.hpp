#pragma once

#include "ris/core.hpp"
#include "ris/fields.hpp"
#include "ris/unitcell.hpp"

namespace ris {

/// Inputs to the two-hop (radar-style) budget through a scattering aperture.
struct RadarLinkParams {
    double efficiency_tx = 1.0;       // conduction/dielectric efficiency, (0, 1]
    double efficiency_rx = 1.0;
    double mismatch_tx = 0.0;         // |reflection coefficient| at the port, [0, 1)
    double mismatch_rx = 0.0;
    double directivity_tx = 1.0;      // linear
    double directivity_rx = 1.0;
    double wavelength_m = 0.0;
    double r1_m = 0.0;                // transmitter-to-aperture distance
    double r2_m = 0.0;                // aperture-to-receiver distance
    double polarization_match = 1.0;  // |p_tx . p_rx|, [0, 1]
    double sigma_m2 = 0.0;            // scattering cross-section

    void validate() const;
};

/// Pr/Pt = e_t*e_r*(1-|G_t|^2)*(1-|G_r|^2)*D_t*D_r*lambda^2*sigma*p^2
///         / ((4*pi)^3 * R1^2 * R2^2), as a linear ratio.
double radar_received_ratio(const RadarLinkParams& p);

/// Same budget in dB.
double radar_received_ratio_db(const RadarLinkParams& p);

/// Far-field (Fraunhofer) distance 2*D^2/lambda using the aperture diagonal.
double far_field_distance(const ArrayLayout& layout, double f_hz);

/// Far-field power enhancement of a mask over the all-OFF aperture at the
/// same plane-wave incidence, observed on boresight:
/// 10*log10(sigma(mask)/sigma(all-OFF)). +inf if the reference vanishes.
double enhancement_far(const ArrayLayout& layout, const PatternMask& mask,
                       const UnitCellResponse& resp, double incidence_deg,
                       double f_hz, const FieldOptions& opts = {});

}  // namespace ris
