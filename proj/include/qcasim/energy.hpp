#ifndef QCASIM_ENERGY_HPP
#define QCASIM_ENERGY_HPP

#include "qcasim/core.hpp"
#include "qcasim/sim.hpp"

#include <array>
#include <string>
#include <vector>

namespace qcasim
{

/// CODATA values used by the coherence-vector estimator.
struct physical_constants
{
    static constexpr double k_b  = 1.380649e-23;      // J/K
    static constexpr double hbar = 1.054571817e-34;   // J s
    static constexpr double e    = 1.602176634e-19;   // C
    static constexpr double eps0 = 8.8541878128e-12;  // F/m
};

struct energy_params
{
    double temperature_k{2.0};
    double tunneling_factor{1.0};    // gamma_high = factor * reference E_k
    double gamma_low{3.8e-23};       // J, hold-phase tunneling energy
    int    ramp_substeps{4};         // discretization of each clock ramp
};

struct energy_report
{
    struct per_cell_entry
    {
        std::size_t cell_index;
        double      leakage_ev;
        double      switching_ev;
    };
    std::vector<per_cell_entry> per_cell;
    double                      avg_leakage_ev{0.0};
    double                      avg_switching_ev{0.0};
    double                      total_ev{0.0};
    energy_params               params;
    double                      reference_ek_j{0.0};
};

/**
 * Two-state Hamiltonian as a 3-vector in rad/s:
 * Gamma = (1/hbar) * [-2 gamma, 0, -sum_j E_k(i,j) P_j].
 */
std::array<double, 3> hamiltonian_vector(double neighbor_field_j, double gamma_j);

/**
 * Thermal steady-state coherence vector:
 * lambda_ss = -tanh(hbar|Gamma| / (2 k_B T)) * Gamma/|Gamma|.
 */
std::array<double, 3> steady_coherence(const std::array<double, 3>& gamma_vec, double temperature_k);

/**
 * Non-adiabatic dissipation upper bound for an instantaneous Hamiltonian
 * step, in joules: max(0, (hbar/2) * Gamma_after . (lambda_ss(before) -
 * lambda_ss(after))).
 */
double transition_dissipation(const std::array<double, 3>& gamma_before, const std::array<double, 3>& gamma_after,
                              double temperature_k);

/**
 * Per-cell leakage/switching dissipation at the given tunneling level,
 * averaged over all ordered pairs of input vectors. Clock ramps are
 * accumulated as leakage; the input-swap step counts as switching for cells
 * whose steady polarization changes sign. Throws std::invalid_argument with
 * more than 8 inputs.
 */
energy_report analyze(const layout& l, const energy_params& ep, const kink_table& kinks);

/**
 * Dense per-position total-dissipation matrix over the layout bounding box
 * (row-major, rows = y span); empty positions are 0.
 */
std::vector<std::vector<double>> power_map(const energy_report& report, const layout& l);

std::string energy_report_csv(const energy_report& report, const layout& l);
std::string power_map_text(const std::vector<std::vector<double>>& map);
std::string power_map_pgm(const std::vector<std::vector<double>>& map);

}  // namespace qcasim

#endif
