#pragma once

#include <complex>
#include <optional>
#include <string>

namespace fluxring {

/// Reduced Planck constant in J s (CODATA 2018).
inline constexpr double kHbar = 1.054571817e-34;

/// Applied-field configuration: the control field is the superposition of
/// coherent states |alpha_+> and |alpha_->, the probe field the single
/// coherent state |beta>. Both beams carry winding number ell (control +ell,
/// probe -ell).
struct FieldConfig {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  std::complex<double> beta{0.0, 0.0};
  double theta = 0.0;
  int ell = 0;
  double chi = 0.0;           // Rabi frequency per photon
  double detuning_e31 = 0.0;  // excited-state detuning; nonzero is stored but not supported downstream

  /// Builds a validated configuration. Control amplitudes must be real; a
  /// nonzero imaginary part is rejected rather than silently dropped.
  static FieldConfig make(std::complex<double> alpha_plus, std::complex<double> alpha_minus,
                          std::complex<double> beta, double theta, int ell, double chi = 0.0,
                          double detuning_e31 = 0.0);

  void validate() const;

  double beta_mag2() const { return std::norm(beta); }
};

enum class GeometryKind { Ring, Harmonic };

/// Trap geometry. A ring is fixed by its rotational inertia I = M R^2, a
/// harmonic trap by its frequency Omega (and the atomic mass when lengths
/// are needed in SI).
struct GeometrySpec {
  GeometryKind kind = GeometryKind::Ring;
  std::optional<double> inertia;  // kg m^2, ring only
  std::optional<double> omega;    // rad/s, harmonic only
  std::optional<double> mass;     // kg, harmonic SI lengths only
  bool use_dimensionless = true;

  static GeometrySpec ring_dimensionless();
  static GeometrySpec harmonic_dimensionless();
  static GeometrySpec ring(double inertia);
  static GeometrySpec ring(double mass, double radius);
  static GeometrySpec harmonic(double omega, double mass);

  void validate() const;
};

struct EnergyUnit {
  double value = 1.0;  // joules, or 1 in dimensionless mode
  std::string label;   // "hbar^2/2I" or "hbar*Omega"
};

std::string unit_label(GeometryKind kind);

/// hbar^2/2I for a ring, hbar*Omega for a harmonic trap.
EnergyUnit energy_unit(const GeometrySpec& geometry);

/// Zero-point oscillator length r0 = sqrt(hbar / (2 M Omega)); 1 in
/// dimensionless mode.
double oscillator_length(const GeometrySpec& geometry);

const char* to_string(GeometryKind kind);
GeometryKind parse_geometry(const std::string& name);

}  // namespace fluxring
