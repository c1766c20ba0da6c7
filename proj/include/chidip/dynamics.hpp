#pragma once

#include <complex>
#include <span>
#include <vector>

namespace chidip {

///\brief Sampled excitation dynamics for the initial state "dipole 1 excited".
///
/// Times are in units of 1/Gamma0, energies in units of hbar Gamma0. c1/c2 are
/// the bare amplitudes, c_plus/c_minus the amplitudes of the symmetric and
/// antisymmetric exchange states.
struct AmplitudeTrajectory {
  std::vector<double> times;
  std::vector<std::complex<double>> c1;
  std::vector<std::complex<double>> c2;
  std::vector<std::complex<double>> c_plus;
  std::vector<std::complex<double>> c_minus;
  std::vector<double> e_int;

  std::size_t size() const { return times.size(); }
};

/// exp(z) with real parts below -700 flushed to an exact zero.
std::complex<double> damped_exp(std::complex<double> z);

/// Closed-form evolution C1 = e^{A_L t} cosh(A_T t), C2 = e^{A_L t} sinh(A_T t),
/// evaluated through the two exponentials e^{(A_L +- A_T) t}.
/// Throws UnphysicalRates if Re(a_l) + |Re(a_t)| > 0 and std::invalid_argument
/// for negative or unsorted times.
AmplitudeTrajectory evolve(std::complex<double> a_l, std::complex<double> a_t,
                           std::span<const double> times);

/// E_int = -2 Im(A_T) (|C+|^2 - |C-|^2).
double interaction_energy(std::complex<double> a_t, std::complex<double> c_plus,
                          std::complex<double> c_minus);

}  // namespace chidip
