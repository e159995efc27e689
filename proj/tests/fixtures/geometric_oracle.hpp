#pragma once

// Values of the sup-ratio and total variation distance to the geometric law
// with p = d/(d+1), frozen from an independent pure-Python run
// (tests/oracles/refined_oracle.py: enumeration up to n = 9, an insertion
// table with Fraction arithmetic above that). Twelve significant digits.
//
// The n = 80 acceptance thresholds below were fixed after that first run:
// every d <= 2 value sits many orders of magnitude under 0.1.

namespace fixtures {

struct GeometricPoint {
  int d;
  int n;
  double sup_ratio;
  double tvd;
};

inline constexpr GeometricPoint kGeometricOracle[] = {
    {1, 16, 0.000259466719578, 0.000129729400641}, {1, 32, 7.68341129961e-09, 3.84170564802e-09},
    {1, 64, 3.52365706058e-18, 1.76182853029e-18}, {1, 80, 6.70016296168e-23, 3.35008148084e-23},
    {2, 16, 0.0260645253074, 0.00551541484143},    {2, 32, 7.64790090307e-05, 1.54531380696e-05},
    {2, 64, 3.49198820898e-10, 6.92428444923e-11}, {2, 80, 6.62497577156e-13, 1.30863718971e-13},
    {3, 16, 0.158446990687, 0.0269535878099},      {3, 32, 0.00321420622759, 0.000447167617127},
    {3, 64, 6.55379529096e-07, 8.53563070276e-08}, {3, 80, 8.19094590338e-09, 1.0586975186e-09},
};

inline constexpr double kOracleRelTol = 1e-9;
inline constexpr double kThresholdAt80 = 0.1;

}  // namespace fixtures
