#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pulseforge {

/// One piecewise-constant element: amplitude as a fraction of the peak
/// field, phase in radians.
struct Segment {
  double amplitude{1.0};
  double phase{0.0};
};

struct PulseShape {
  std::vector<Segment> segments;
  double peak_field_hz{0.0};
  double duration_s{0.0};
  std::string name;

  int n() const { return static_cast<int>(segments.size()); }
  double dwell() const { return duration_s / static_cast<double>(segments.size()); }
  void validate() const;
};

enum class ShapeKind { HARD, EBURP1, REBURP, PC9, BESTPC9, Q3, Q5, CHIRP };

struct ShapeRecipe {
  ShapeKind kind{ShapeKind::HARD};
  int n_points{2};
  double duration_s{1e-3};
  // CHIRP only
  double sweep_hz{0.0};
  double amp_factor_n{0.0};
};

enum class StateOp { Ix, Iy, Iz };

struct CalibrationSpec {
  StateOp start{StateOp::Iz};
  StateOp finish{StateOp::Iy};
  double target{-1.0};
  double max_field_hz{10000.0};
};

struct CalibrationError : std::runtime_error {
  double best_residual;
  double best_field_hz;
  CalibrationError(double resid, double field)
      : std::runtime_error("calibration failed: best residual " + std::to_string(resid)),
        best_residual(resid), best_field_hz(field) {}
};

ShapeKind shape_kind_from_name(const std::string& name);
std::string shape_kind_name(ShapeKind kind);

/// Build a waveform from a classical recipe. Every generated shape is
/// normalised so its largest amplitude is 1; the field is left at 0 until
/// calibrated or set explicitly.
PulseShape generate_shape(const ShapeRecipe& recipe);

/// On-resonance peak-field search: 64-point coarse grid over [0, bound],
/// golden-section refinement of each bracketed minimum, smallest field with
/// residual < 1e-4 wins. Throws CalibrationError if nothing gets below 1e-3.
double calibrate_b1(const PulseShape& shape, const CalibrationSpec& spec);

/// Add delta to every segment phase (mod 2*pi); a Z-axis rotation of the
/// pulse's action.
PulseShape phase_shift(const PulseShape& shape, double delta);

}  // namespace pulseforge
