#include "spe/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace spe {

namespace {

constexpr double kOverlapTol = 1e-9;

// sqrt(2 pi) sigma erf(r / (sqrt(2) sigma)): area of the two Gaussian flanks
// at unit amplitude.
double flank_area(const GaussianSquarePulse& p) {
  return std::sqrt(2.0 * kPi) * p.sigma * std::erf(p.risefall() / (std::sqrt(2.0) * p.sigma));
}

}  // namespace

void GaussianSquarePulse::validate() const {
  std::ostringstream os;
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    os << "pulse sigma must be positive (got " << sigma << ")";
  } else if (!(width >= 0.0) || !std::isfinite(width)) {
    os << "pulse width must be non-negative (got " << width << ")";
  } else if (!(duration >= width) || !std::isfinite(duration)) {
    os << "pulse duration " << duration << " is shorter than its width " << width;
  } else {
    return;
  }
  throw InvalidArgument(os.str());
}

cplx gs_value(const GaussianSquarePulse& p, double t) {
  p.validate();
  if (t < 0.0 || t > p.duration) return 0.0;
  const double r = p.risefall();
  double f;
  if (t <= r) {
    f = std::exp(-(t - r) * (t - r) / (2 * p.sigma * p.sigma));
  } else if (t <= r + p.width) {
    f = 1.0;
  } else {
    const double u = t - (r + p.width);
    f = std::exp(-u * u / (2 * p.sigma * p.sigma));
  }
  return p.amp * f;
}

std::vector<cplx> gs_samples(const GaussianSquarePulse& p, double dt) {
  p.validate();
  if (!(dt > 0.0)) throw InvalidArgument("sample step must be positive");
  const auto n = static_cast<std::size_t>(std::floor(p.duration / dt + 1e-9)) + 1;
  std::vector<cplx> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(gs_value(p, static_cast<double>(k) * dt));
  return out;
}

double gs_area(const GaussianSquarePulse& p) {
  p.validate();
  return std::abs(p.amp) * (p.width + flank_area(p));
}

GaussianSquarePulse scale_pulse(const GaussianSquarePulse& p, double theta) {
  p.validate();
  if (!(theta >= 0.0 && theta <= kPi)) {
    std::ostringstream os;
    os << "scale_pulse: theta " << theta << " outside [0, pi]";
    throw InvalidArgument(os.str());
  }
  const double ratio = theta / kPi;
  const double flanks = flank_area(p);
  const double r = p.risefall();
  GaussianSquarePulse out = p;
  const double w = ratio * p.width + (ratio - 1.0) * flanks;
  if (w >= 0.0) {
    out.width = w;
    out.duration = w + 2 * r;
    return out;
  }
  out.width = 0.0;
  out.duration = 2 * r;
  const double target = ratio * gs_area(p);
  const double mag = std::abs(p.amp);
  const double new_mag = flanks > 0.0 ? target / flanks : 0.0;
  out.amp = mag > 0.0 ? p.amp * (new_mag / mag) : cplx(new_mag, 0.0);
  return out;
}

void Calibration::validate() const {
  cr.validate();
  rotary.validate();
  if (!(x_pulse_duration >= 0.0) || !(sx_pulse_duration >= 0.0)) {
    throw InvalidArgument("calibration single-qubit pulse durations must be non-negative");
  }
  if (!(dt > 0.0)) throw InvalidArgument("calibration dt must be positive");
}

void PulseSchedule::add(ScheduleEntry e) {
  if (e.duration < 0.0) throw InvalidArgument("schedule entry has negative duration");
  for (const auto& other : entries_) {
    if (other.channel != e.channel) continue;
    if (e.start < other.end() - kOverlapTol && other.start < e.end() - kOverlapTol) {
      std::ostringstream os;
      os << "entry '" << e.label << "' overlaps '" << other.label << "' on channel " << e.channel;
      throw InvalidArgument(os.str());
    }
  }
  entries_.push_back(std::move(e));
}

double PulseSchedule::total_duration() const {
  double t = 0.0;
  for (const auto& e : entries_) t = std::max(t, e.end());
  return t;
}

double PulseSchedule::channel_end(const std::string& channel) const {
  double t = 0.0;
  for (const auto& e : entries_)
    if (e.channel == channel) t = std::max(t, e.end());
  return t;
}

namespace {

// Appends an echoed-CR block starting at `t` and returns its end time:
// CR(+) with rotary on the target, X echo on the control, CR(-) with rotary.
double add_echoed_cr(PulseSchedule& s, const Calibration& cal, double theta, double t,
                     const std::string& tag) {
  const GaussianSquarePulse cr = scale_pulse(cal.cr, theta);
  const GaussianSquarePulse rot = scale_pulse(cal.rotary, theta);
  GaussianSquarePulse cr_neg = cr, rot_neg = rot;
  cr_neg.amp = -cr.amp;
  rot_neg.amp = -rot.amp;

  const double half = std::max(cr.duration, rot.duration);
  s.add({"u0", tag + ":cr+", t, cr.duration, cr});
  s.add({"d1", tag + ":rotary+", t, rot.duration, rot});
  t += half;
  s.add({"d0", tag + ":x_echo", t, cal.x_pulse_duration, std::nullopt});
  t += cal.x_pulse_duration;
  s.add({"u0", tag + ":cr-", t, cr_neg.duration, cr_neg});
  s.add({"d1", tag + ":rotary-", t, rot_neg.duration, rot_neg});
  return t + half;
}

// Local pre-rotation (x-rotation on the target as sx-rz-sx; z on the control
// is a frame change) + echoed CR + I (x) X.
double add_controlled_block(PulseSchedule& s, const Calibration& cal, double theta, double t,
                            const std::string& tag) {
  s.add({"d1", tag + ":pre_rx", t, 2 * cal.sx_pulse_duration, std::nullopt});
  t += 2 * cal.sx_pulse_duration;
  t = add_echoed_cr(s, cal, theta, t, tag);
  s.add({"d0", tag + ":post_x", t, cal.x_pulse_duration, std::nullopt});
  return t + cal.x_pulse_duration;
}

}  // namespace

PulseSchedule spe_schedule(const Calibration& cal, double theta) {
  cal.validate();
  PulseSchedule s;
  double t = add_controlled_block(s, cal, theta, 0.0, "crx");
  add_controlled_block(s, cal, kPi, t, "cnot");
  return s;
}

PulseSchedule two_ecr_schedule(const Calibration& cal) { return spe_schedule(cal, kPi); }

double duration_ratio(const Calibration& cal, double theta) {
  return spe_schedule(cal, theta).total_duration() / two_ecr_schedule(cal).total_duration();
}

}  // namespace spe
