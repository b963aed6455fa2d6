#pragma once

#include <array>

#include "hamvf/exp_poly.hpp"

/// Published reference data for u'(t) = -1 + int_0^t u(s)^2 ds, u(0) = 0, on [0, 1].
/// Used only for comparison; none of these methods is implemented here.
namespace hamvf::reference {

inline constexpr std::array<double, 7> kVolterraGrid = {0.0, 0.0938, 0.3125, 0.5, 0.7188, 0.9062, 1.0};

/// Wavelet-Galerkin values, 4 decimals.
inline constexpr std::array<double, 7> kVolterraWaveletGalerkin = {0.0,     -0.0937, -0.3117, -0.4948,
                                                                   -0.6969, -0.8520, -0.9205};
/// Six-term ND-HAM column as published.
inline constexpr std::array<double, 7> kVolterraNdHamColumn = {
    0.0, -0.093793549, -0.311706425, -0.494822508, -0.696941464, -0.851934173, -0.920475703};
/// Six-term Oq-HAM (n = 2) column as published.
inline constexpr std::array<double, 7> kVolterraOqHamColumn = {
    0.0, -0.09379677, -0.31210292, -0.49740330, -0.70776777, -0.86852216, -0.92911909};
/// Six-term Adomian decomposition column as published.
inline constexpr std::array<double, 7> kVolterraAdmColumn = {
    0.0, -0.093793549, -0.311706425, -0.494822508, -0.696941463, -0.851934160, -0.920475637};

/// Six-term Adomian decomposition series.
ExpPoly volterra_adm_series();
/// Six-term Oq-HAM (n = 2) series.
ExpPoly volterra_oqham_series();

}  // namespace hamvf::reference
