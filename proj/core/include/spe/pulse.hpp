#pragma once

// Gaussian-square waveform model and abstract schedule timing.
//
// f(t) = A f'(t) with rise-fall r = (d - w)/2:
//   f'(t) = exp(-(t - r)^2 / (2 sigma^2))        0 <= t <= r
//         = 1                                    r <= t <= r + w
//         = exp(-(t - r - w)^2 / (2 sigma^2))    r + w <= t <= d
// All times are in sample units.

#include <optional>
#include <string>
#include <vector>

#include "spe/qmat.hpp"

namespace spe {

struct GaussianSquarePulse {
  cplx amp{0.0, 0.0};
  double sigma = 1.0;
  double width = 0.0;
  double duration = 0.0;

  double risefall() const { return 0.5 * (duration - width); }
  /// Throws InvalidArgument unless sigma > 0 and duration >= width >= 0.
  void validate() const;
};

/// f(t); zero outside [0, duration].
cplx gs_value(const GaussianSquarePulse& p, double t);

/// Samples at t = 0, dt, 2 dt, ... up to the pulse duration.
std::vector<cplx> gs_samples(const GaussianSquarePulse& p, double dt);

/// |A| [w + sqrt(2 pi) sigma erf(r / (sqrt(2) sigma))]
double gs_area(const GaussianSquarePulse& p);

/// Rescales a calibrated pi-pulse to area (theta/pi) S_pi. Keeps amplitude,
/// sigma and rise-fall and shrinks the flat top; when the flat top would go
/// negative it is set to zero and |A| is reduced instead (phase kept).
GaussianSquarePulse scale_pulse(const GaussianSquarePulse& p, double theta);

struct Calibration {
  GaussianSquarePulse cr;
  GaussianSquarePulse rotary;
  double x_pulse_duration = 0.0;
  double sx_pulse_duration = 0.0;
  double dt = 1.0;  // seconds per sample, informational

  void validate() const;
};

struct ScheduleEntry {
  std::string channel;  // d0/d1 drive, u0 cross-resonance control
  std::string label;
  double start = 0.0;
  double duration = 0.0;
  std::optional<GaussianSquarePulse> pulse;

  double end() const { return start + duration; }
};

class PulseSchedule {
public:
  /// Throws InvalidArgument if the entry overlaps another on its channel.
  void add(ScheduleEntry e);

  const std::vector<ScheduleEntry>& entries() const noexcept { return entries_; }
  double total_duration() const;
  /// End time of the last entry on `channel`, 0 if none.
  double channel_end(const std::string& channel) const;

private:
  std::vector<ScheduleEntry> entries_;
};

/// SPE circuit as a theta-scaled echoed-CR block followed by a full ECR
/// block, each dressed with its single-qubit pulses.
PulseSchedule spe_schedule(const Calibration& cal, double theta);

/// Reference: the same circuit with two full ECR blocks.
PulseSchedule two_ecr_schedule(const Calibration& cal);

/// spe_schedule(theta) duration over two_ecr_schedule duration.
double duration_ratio(const Calibration& cal, double theta);

}  // namespace spe
