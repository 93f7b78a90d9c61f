#ifndef BLOCHBOHR_REFERENCE_VALUES_HPP
#define BLOCHBOHR_REFERENCE_VALUES_HPP

// Published reference values for the five radius tables.  Check mode compares
// freshly computed radii against these grids cell by cell.  The classical
// table was published truncated to 4 decimals (0.4285 for 3/7, not 0.4286);
// everything else carries 6 decimals.

namespace bloch::reference {

// classical table: gamma 0.0 .. 0.9 step 0.1 -> (1+g)/(3+g), truncated
inline constexpr int kClassicalCount = 10;
inline constexpr double kClassicalGamma[kClassicalCount] = {0.0, 0.1, 0.2, 0.3, 0.4,
                                                            0.5, 0.6, 0.7, 0.8, 0.9};
inline constexpr double kClassicalRho[kClassicalCount] = {
    0.3333, // 1/3
    0.3548, // 1.1/3.1
    0.3750, // 1.2/3.2
    0.3939, // 1.3/3.3
    0.4117, // 1.4/3.4
    0.4285, // 1.5/3.5 = 3/7
    0.4444, // 1.6/3.6
    0.4594, // 1.7/3.7
    0.4736, // 1.8/3.8
    0.4871, // 1.9/3.9
};

// shared grids for the alpha x gamma tables
inline constexpr int kGammaCount = 4;
inline constexpr double kGammas[kGammaCount] = {0.1, 0.4, 0.7, 0.9};

inline constexpr int kAlphaCount = 6;
inline constexpr double kAlphas[kAlphaCount] = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};

// roots of 6(1-u^2)^{2a} = pi^2 (1-g)^{2a} r^2, rows alpha, cols gamma
inline constexpr double kShiftedRadius[kAlphaCount][kGammaCount] = {
    {0.619322, 0.631373, 0.641889, 0.648220}, // alpha = 0.5
    {0.554985, 0.576500, 0.594235, 0.604518}, // alpha = 1
    {0.514933, 0.544243, 0.567402, 0.580481}, // alpha = 1.5
    {0.486380, 0.522310, 0.549746, 0.564932}, // alpha = 2
    {0.464523, 0.506191, 0.537110, 0.553950}, // alpha = 2.5
    {0.447025, 0.493744, 0.527566, 0.545743}, // alpha = 3
};
// alpha -> 0+ limit of the shifted-disk radius, sqrt(6)/pi, same for every gamma
inline constexpr double kShiftedLimit = 0.779697;

// closed-form upper bound R_g(a), defined for alpha > 1
inline constexpr int kUpperAlphaCount = 4;
inline constexpr double kUpperAlphas[kUpperAlphaCount] = {1.5, 2.0, 2.5, 3.0};
inline constexpr double kUpperR[kUpperAlphaCount][kGammaCount] = {
    {0.860175, 0.846027, 0.835811, 0.830626}, // alpha = 1.5
    {0.812265, 0.804300, 0.800870, 0.800085}, // alpha = 2
    {0.774074, 0.771636, 0.773354, 0.775558}, // alpha = 2.5
    {0.742592, 0.745067, 0.750847, 0.755236}, // alpha = 3
};

// p-norm variant at p = 1 (K_p = 2), rows alpha, cols gamma
inline constexpr double kPRadius[kAlphaCount][kGammaCount] = {
    {0.489073, 0.505842, 0.520253, 0.528847}, // alpha = 0.5
    {0.454081, 0.482236, 0.505149, 0.518328}, // alpha = 1
    {0.430126, 0.467118, 0.495956, 0.512104}, // alpha = 1.5
    {0.412188, 0.456423, 0.489709, 0.507962}, // alpha = 2
    {0.398028, 0.448389, 0.485167, 0.504999}, // alpha = 2.5
    {0.386449, 0.442102, 0.481706, 0.502771}, // alpha = 3
};

// sense-preserving variant at p = 1, d1 = 0; note the alpha grid includes 0
// and skips 1.5, and the alpha = 0 row is constant sqrt(6/(6+4 pi^2))
inline constexpr int kSpAlphaCount = 6;
inline constexpr double kSpAlphas[kSpAlphaCount] = {0.0, 0.5, 1.0, 2.0, 2.5, 3.0};
inline constexpr double kSpRadius[kSpAlphaCount][kGammaCount] = {
    {0.363223, 0.363223, 0.363223, 0.363223}, // alpha = 0
    {0.350178, 0.367185, 0.381675, 0.390276}, // alpha = 0.5
    {0.340148, 0.370061, 0.394452, 0.408503}, // alpha = 1
    {0.325437, 0.373934, 0.410547, 0.430636}, // alpha = 2
    {0.319806, 0.375294, 0.415868, 0.437722}, // alpha = 2.5
    {0.314962, 0.376408, 0.420088, 0.443260}, // alpha = 3
};

} // namespace bloch::reference

#endif
