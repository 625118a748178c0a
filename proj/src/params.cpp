#include "fluxring/params.hpp"

#include <cmath>

#include "fluxring/errors.hpp"

namespace fluxring {

FieldConfig FieldConfig::make(std::complex<double> alpha_plus, std::complex<double> alpha_minus,
                              std::complex<double> beta, double theta, int ell, double chi,
                              double detuning_e31) {
  if (alpha_plus.imag() != 0.0 || alpha_minus.imag() != 0.0) {
    throw ConfigError("control amplitudes alpha_+ and alpha_- must be real");
  }
  FieldConfig config;
  config.alpha_plus = alpha_plus.real();
  config.alpha_minus = alpha_minus.real();
  config.beta = beta;
  config.theta = theta;
  config.ell = ell;
  config.chi = chi;
  config.detuning_e31 = detuning_e31;
  config.validate();
  return config;
}

void FieldConfig::validate() const {
  if (ell < 0) throw ConfigError("winding number ell must be >= 0");
  if (!std::isfinite(alpha_plus) || !std::isfinite(alpha_minus) || !std::isfinite(beta.real()) ||
      !std::isfinite(beta.imag())) {
    throw ConfigError("field amplitudes must be finite");
  }
  if (!std::isfinite(theta) || !std::isfinite(chi) || !std::isfinite(detuning_e31)) {
    throw ConfigError("theta, chi and detuning must be finite");
  }
}

GeometrySpec GeometrySpec::ring_dimensionless() {
  GeometrySpec g;
  g.kind = GeometryKind::Ring;
  g.use_dimensionless = true;
  return g;
}

GeometrySpec GeometrySpec::harmonic_dimensionless() {
  GeometrySpec g;
  g.kind = GeometryKind::Harmonic;
  g.use_dimensionless = true;
  return g;
}

GeometrySpec GeometrySpec::ring(double inertia) {
  GeometrySpec g;
  g.kind = GeometryKind::Ring;
  g.inertia = inertia;
  g.use_dimensionless = false;
  g.validate();
  return g;
}

GeometrySpec GeometrySpec::ring(double mass, double radius) {
  if (!(mass > 0.0) || !(radius > 0.0)) throw ConfigError("ring mass and radius must be positive");
  return ring(mass * radius * radius);
}

GeometrySpec GeometrySpec::harmonic(double omega, double mass) {
  GeometrySpec g;
  g.kind = GeometryKind::Harmonic;
  g.omega = omega;
  g.mass = mass;
  g.use_dimensionless = false;
  g.validate();
  return g;
}

void GeometrySpec::validate() const {
  if (use_dimensionless) return;
  switch (kind) {
    case GeometryKind::Ring:
      if (!inertia) throw ConfigError("ring geometry requires the rotational inertia I");
      if (!(*inertia > 0.0) || !std::isfinite(*inertia)) throw ConfigError("inertia must be positive");
      if (omega) throw ConfigError("ring geometry does not take a trap frequency");
      break;
    case GeometryKind::Harmonic:
      if (!omega) throw ConfigError("harmonic geometry requires the trap frequency Omega");
      if (!(*omega > 0.0) || !std::isfinite(*omega)) throw ConfigError("Omega must be positive");
      if (inertia) throw ConfigError("harmonic geometry does not take a rotational inertia");
      if (mass && !(*mass > 0.0)) throw ConfigError("mass must be positive");
      break;
  }
}

std::string unit_label(GeometryKind kind) {
  return kind == GeometryKind::Ring ? "hbar^2/2I" : "hbar*Omega";
}

EnergyUnit energy_unit(const GeometrySpec& geometry) {
  geometry.validate();
  EnergyUnit unit;
  unit.label = unit_label(geometry.kind);
  if (geometry.use_dimensionless) {
    unit.value = 1.0;
  } else if (geometry.kind == GeometryKind::Ring) {
    unit.value = kHbar * kHbar / (2.0 * *geometry.inertia);
  } else {
    unit.value = kHbar * *geometry.omega;
  }
  return unit;
}

double oscillator_length(const GeometrySpec& geometry) {
  if (geometry.kind != GeometryKind::Harmonic) {
    throw UnsupportedGeometryError("oscillator length is defined for the harmonic trap only");
  }
  geometry.validate();
  if (geometry.use_dimensionless) return 1.0;
  if (!geometry.mass) throw ConfigError("oscillator length in SI requires the atomic mass");
  return std::sqrt(kHbar / (2.0 * *geometry.mass * *geometry.omega));
}

const char* to_string(GeometryKind kind) {
  return kind == GeometryKind::Ring ? "ring" : "harmonic";
}

GeometryKind parse_geometry(const std::string& name) {
  if (name == "ring") return GeometryKind::Ring;
  if (name == "harmonic") return GeometryKind::Harmonic;
  throw UsageError("unknown geometry '" + name + "' (expected ring or harmonic)");
}

}  // namespace fluxring
