#pragma once

namespace qmono::tol {

// One table for every comparison threshold in the toolkit. Check results cite
// these values, so a report produced with one table version is comparable with
// any other report carrying the same version string.
inline constexpr char version[] = "1";

// Inequality margins evaluated purely from closed forms.
inline constexpr double closed_form = 1e-9;
// Inequality margins with an optimizer-backed side (roof bounds carry slack).
inline constexpr double optimizer = 5e-3;
// Residual threshold for calling a state genuinely entangled.
inline constexpr double classifier = 1e-7;

// Hermiticity check on flagged matrices, entrywise.
inline constexpr double hermitian = 1e-12;
// Eigenvalues above -psd_clamp are treated as nonnegative and clamped to 0.
inline constexpr double psd_clamp = 1e-10;
// Unit-norm check on in-memory pure states.
inline constexpr double state_norm = 1e-10;
// Looser unit-norm check on loaded files (hand-authored files carry few digits).
inline constexpr double load_norm = 1e-6;
// Eigenvalues below this count as zero when ranking a density matrix.
inline constexpr double rank_eps = 1e-9;
// Pairwise concurrences below this are dropped from reciprocal-power sums.
inline constexpr double zero_concurrence = 1e-9;
// Purity beyond 1 - pure_reduction marks a single-qubit reduction as pure.
inline constexpr double pure_reduction = 1e-8;
// Margins above this are reported as strict inequalities.
inline constexpr double strictness = 1e-12;

} // namespace qmono::tol
