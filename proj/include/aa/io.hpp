#pragma once

#include <string>
#include <vector>

#include "aa/gate.hpp"

namespace aa {

// Fixed 17-significant-digit formatting so emitted reports are reproducible
// byte for byte.
std::string fmt17(double x);

const char* accounting_name(Accounting a);  // "control_frame" | "physical"

// {"theta":..,"tau":..,"events":[{"kind":"rotation","axis":[x,y,z],
//  "angle":..,"model":"instantaneous"|{"hard":{"rf_amplitude":..}}} |
//  {"kind":"delay","duration":..}]}
std::string sequence_to_json(const PulseSequence& seq);
PulseSequence sequence_from_json(const std::string& text);

// {"total":..,"dynamic_free":..,"dynamic_pulse":..,"geometric":..,
//  "solid_angle":..,"cyclicity_defect":..,"accounting":..}
std::string phase_report_json(const PhaseReport& report);

std::string gate_report_json(const GateReport& report);

// Header t,re0,im0,...,bxa,bya,bza[,bxb,byb,bzb],label; one row per sample.
std::string trajectory_csv(const Trajectory& traj);

// Header value,gamma,fidelity_cnot,solid_angle.
std::string sweep_csv(const std::vector<SweepRow>& rows);
// Same rows as a JSON array; non-finite solid angles become null.
std::string sweep_json(const std::vector<SweepRow>& rows);

// Header delta_omega,b_disturbance,b_disturbance_peak,fidelity_cnot.
std::string selectivity_csv(const std::vector<SelectivityRow>& rows);
std::string selectivity_json(const std::vector<SelectivityRow>& rows);

}  // namespace aa
