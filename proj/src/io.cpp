#include "aa/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace aa {

namespace {

std::string vec3_json(const Vec3& v) {
  return "[" + fmt17(v.x) + "," + fmt17(v.y) + "," + fmt17(v.z) + "]";
}

std::string complex_json(const cxd& z) {
  return "[" + fmt17(z.real()) + "," + fmt17(z.imag()) + "]";
}

std::string operator_json(const Operator& a) {
  std::string out = "[";
  for (int i = 0; i < a.dim; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < a.dim; ++j) {
      if (j) out += ",";
      out += complex_json(a.at(i, j));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace

std::string fmt17(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* accounting_name(Accounting a) {
  return a == Accounting::control_frame ? "control_frame" : "physical";
}

std::string sequence_to_json(const PulseSequence& seq) {
  std::string out = "{\"theta\":" + fmt17(seq.theta) + ",\"tau\":" + fmt17(seq.tau) +
                    ",\"events\":[";
  bool first = true;
  for (const PulseEvent& e : seq.events) {
    if (!first) out += ",";
    first = false;
    if (e.kind == PulseEvent::Kind::delay) {
      out += "{\"kind\":\"delay\",\"duration\":" + fmt17(e.duration) + "}";
    } else {
      out += "{\"kind\":\"rotation\",\"axis\":" + vec3_json(e.axis) +
             ",\"angle\":" + fmt17(e.angle) + ",\"model\":";
      if (e.model.is_hard())
        out += "{\"hard\":{\"rf_amplitude\":" + fmt17(e.model.rf_amplitude) + "}}";
      else
        out += "\"instantaneous\"";
      out += "}";
    }
  }
  out += "]}";
  return out;
}

PulseSequence sequence_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidParams, std::string("sequence JSON: ") + e.what());
  }
  try {
    PulseSequence seq;
    seq.theta = j.at("theta").get<double>();
    seq.tau = j.at("tau").get<double>();
    for (const auto& ev : j.at("events")) {
      const std::string kind = ev.at("kind").get<std::string>();
      if (kind == "delay") {
        seq.events.push_back(PulseEvent::delay(ev.at("duration").get<double>()));
      } else if (kind == "rotation") {
        const auto& ax = ev.at("axis");
        Vec3 axis{ax.at(0).get<double>(), ax.at(1).get<double>(), ax.at(2).get<double>()};
        PulseModel model = PulseModel::instantaneous();
        const auto& mj = ev.at("model");
        if (mj.is_object())
          model = PulseModel::hard(mj.at("hard").at("rf_amplitude").get<double>());
        else if (mj.get<std::string>() != "instantaneous")
          fail(ErrorKind::InvalidParams, "unknown pulse model");
        seq.events.push_back(PulseEvent::rotation(axis, ev.at("angle").get<double>(), model));
      } else {
        fail(ErrorKind::InvalidParams, "unknown event kind");
      }
    }
    return seq;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidParams, std::string("sequence JSON: ") + e.what());
  }
}

std::string phase_report_json(const PhaseReport& r) {
  return std::string("{\"total\":") + fmt17(r.total) +
         ",\"dynamic_free\":" + fmt17(r.dynamic_free) +
         ",\"dynamic_pulse\":" + fmt17(r.dynamic_pulse) +
         ",\"geometric\":" + fmt17(r.geometric) +
         ",\"solid_angle\":" + fmt17(r.solid_angle) +
         ",\"cyclicity_defect\":" + fmt17(r.cyclicity_defect) +
         ",\"accounting\":\"" + accounting_name(r.accounting) + "\"}";
}

std::string gate_report_json(const GateReport& r) {
  std::string out = "{\"theta\":" + fmt17(r.theta);
  out += ",\"accounting\":\"" + std::string(accounting_name(r.accounting)) + "\"";
  out += ",\"pulse_model\":\"" + std::string(r.model.is_hard() ? "hard" : "instantaneous") + "\"";
  if (r.model.is_hard()) out += ",\"rf_amplitude\":" + fmt17(r.model.rf_amplitude);
  out += ",\"gamma\":" + fmt17(r.gamma);
  out += ",\"fidelity_cnot\":" + fmt17(r.fidelity_cnot);
  if (r.equivalence) {
    out += ",\"equivalence\":{\"global_phase\":" + fmt17(r.equivalence->global_phase) +
           ",\"control_z_pre\":" + fmt17(r.equivalence->control_z_pre) +
           ",\"control_z_post\":" + fmt17(r.equivalence->control_z_post) + "}";
  } else {
    out += ",\"equivalence\":null";
  }
  out += ",\"unitarity_defect\":" + fmt17(unitarity_defect(r.propagator));
  out += ",\"block_up\":" + operator_json(r.block_up);
  out += ",\"block_down\":" + operator_json(r.block_down);
  out += ",\"propagator\":" + operator_json(r.propagator);
  out += "}";
  return out;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  for (int i = 0; i < traj.dim; ++i) {
    const std::string n = std::to_string(i);
    out += ",re" + n + ",im" + n;
  }
  out += ",bxa,bya,bza";
  if (traj.dim == 4) out += ",bxb,byb,bzb";
  out += ",label\n";

  for (size_t row = 0; row < traj.times.size(); ++row) {
    out += fmt17(traj.times[row]);
    for (int i = 0; i < traj.dim; ++i) {
      const cxd z = traj.states[row].a[static_cast<size_t>(i)];
      out += "," + fmt17(z.real()) + "," + fmt17(z.imag());
    }
    const Vec3& ba = traj.bloch_a[row];
    out += "," + fmt17(ba.x) + "," + fmt17(ba.y) + "," + fmt17(ba.z);
    if (traj.dim == 4) {
      const Vec3& bb = traj.bloch_b[row];
      out += "," + fmt17(bb.x) + "," + fmt17(bb.y) + "," + fmt17(bb.z);
    }
    // Row 0 carries the first interval's label.
    const size_t li = row == 0 ? 0 : row - 1;
    const SegmentLabel label =
        traj.labels.empty() ? SegmentLabel::free_evolution : traj.labels[li];
    out += label == SegmentLabel::pulse ? ",pulse\n" : ",free\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "value,gamma,fidelity_cnot,solid_angle\n";
  for (const SweepRow& r : rows) {
    out += fmt17(r.value) + "," + fmt17(r.gamma) + "," + fmt17(r.fidelity_cnot) + "," +
           fmt17(r.solid_angle) + "\n";
  }
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  std::string out = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += "{\"value\":" + fmt17(rows[i].value) + ",\"gamma\":" + fmt17(rows[i].gamma) +
           ",\"fidelity_cnot\":" + fmt17(rows[i].fidelity_cnot) + ",\"solid_angle\":" +
           (std::isfinite(rows[i].solid_angle) ? fmt17(rows[i].solid_angle) : "null") + "}";
  }
  out += "]";
  return out;
}

std::string selectivity_csv(const std::vector<SelectivityRow>& rows) {
  std::string out = "delta_omega,b_disturbance,b_disturbance_peak,fidelity_cnot\n";
  for (const SelectivityRow& r : rows) {
    out += fmt17(r.delta_omega) + "," + fmt17(r.b_disturbance) + "," +
           fmt17(r.b_disturbance_peak) + "," + fmt17(r.fidelity_cnot) + "\n";
  }
  return out;
}

std::string selectivity_json(const std::vector<SelectivityRow>& rows) {
  std::string out = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += "{\"delta_omega\":" + fmt17(rows[i].delta_omega) +
           ",\"b_disturbance\":" + fmt17(rows[i].b_disturbance) +
           ",\"b_disturbance_peak\":" + fmt17(rows[i].b_disturbance_peak) +
           ",\"fidelity_cnot\":" + fmt17(rows[i].fidelity_cnot) + "}";
  }
  out += "]";
  return out;
}

}  // namespace aa
