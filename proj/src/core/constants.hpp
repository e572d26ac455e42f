#pragma once

// Internal unit system: time ns, length pm, mass pg, angular frequency rad/ns.
// Energy unit is pg*pm^2/ns^2; powers are carried in aJ/ns (= nW), which is
// 1000x the coherent power unit pg*pm^2/ns^3.

namespace omit {

inline constexpr double k_hbar = 1.054571817e-4;    // pg*pm^2/ns (CODATA)
inline constexpr double k_clight = 2.99792458e11;   // pm/ns
inline constexpr double k_two_pi = 6.2831853071795864769;
inline constexpr double k_power_to_internal = 1000.0; // aJ/ns -> pg*pm^2/ns^3

inline constexpr double k_fg_per_pg = 1000.0;
inline constexpr double k_pg_per_fg = 1e-3;

} // namespace omit
