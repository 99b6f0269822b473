#ifndef QCASIM_SIM_HPP
#define QCASIM_SIM_HPP

#include "qcasim/core.hpp"
#include "qcasim/logic.hpp"

#include <string>
#include <vector>

namespace qcasim
{

/**
 * Bistable-engine parameters. Defaults follow the common QCA tool
 * conventions: 18 nm cells, 65 nm radius of effect, eps_r 12.9, clock range
 * [3.8e-23, 9.8e-22] J with a pre-clipping amplitude factor of 2.
 */
struct sim_params
{
    int    num_samples{50000};
    double convergence_tol{0.001};
    double radius_nm{65.0};
    double eps_r{12.9};
    double clock_low{3.8e-23};    // J
    double clock_high{9.8e-22};   // J
    double clock_amplitude{2.0};  // gain applied to the cosine before clipping
    int    max_iter_per_sample{100};
    double decision_threshold{0.5};
};

/**
 * Electrostatic kink energy E_k(a, b) in joules: Coulomb energy of the
 * anti-aligned pair minus the aligned pair, summed over the 4x4 dot charges
 * (two electrons on the polarization diagonal, +e/2 background per dot),
 * screened by eps_r. Positive for axially adjacent cells, negative for
 * diagonal neighbors. Throws std::domain_error on coincident positions.
 */
double kink_energy(const cell& a, const cell& b, const geometry& g, double eps_r);

/**
 * Precomputed pairwise kink energies within the radius of effect, stored as
 * per-cell neighbor lists.
 */
struct kink_table
{
    struct neighbor
    {
        std::size_t index;
        double      energy;  // J
    };
    std::vector<std::vector<neighbor>> neighbors;
    double                             max_adjacent{0.0};  // largest axially-adjacent E_k

    static kink_table build(const layout& l, const sim_params& p);
};

/**
 * Four-phase clock: gamma for `zone` at `sample`, a clipped cosine between
 * clock_low and clock_high. One cycle spans total_samples / total_cycles
 * samples; zone z lags zone z-1 by a quarter cycle. Zone 0 switches during
 * the first quarter of each cycle.
 */
double clock_gamma(int zone, double sample, const sim_params& p, int total_samples, int total_cycles);

/// Bistable update rule: x / sqrt(1 + x^2) with x = sum_field / (2 gamma).
double update_cell(double sum_field, double gamma);

struct relax_result
{
    bool converged{true};
    int  iterations{0};
};

/**
 * Sweeps update_cell over all non-driven cells in (layer, y, x) order until
 * max |dP| < tol or max_iter_per_sample is reached. `pols` is the state
 * vector indexed like layout.cells; driven (input/fixed) entries are left
 * untouched. `gammas` holds the per-cell tunneling energies.
 */
relax_result relax_sample(const layout& l, const kink_table& kinks, const std::vector<double>& gammas,
                          const sim_params& p, std::vector<double>& pols);

/**
 * Per-labeled-cell polarization time series. Input labels come first, in
 * lexicographic order, then output labels in lexicographic order.
 */
struct trace
{
    std::vector<std::string>         input_labels{};
    std::vector<std::string>         output_labels{};
    std::vector<std::vector<double>> samples{};  // one series per label, inputs then outputs
    int                              total_cycles{0};
    int                              unconverged_samples{0};

    [[nodiscard]] std::string to_csv() const;
};

/**
 * Exhaustive input sweep: every n-bit vector in counter order (first input
 * label = most significant bit), each held for 4 clock cycles, inputs driven
 * at +-1. Throws layout_error when the layout fails validate() and
 * std::invalid_argument when num_samples cannot hold every vector for 4
 * cycles of at least 16 samples each.
 *
 * `invert_drivers` negates every input and fixed polarization; it exists for
 * the odd-symmetry property checks.
 */
trace run_simulation(const layout& l, const sim_params& p, bool invert_drivers = false);

/**
 * Samples each output at the hold-phase center of the cycle offset by
 * ceil(latency) and maps P >= +threshold to 1, P <= -threshold to 0.
 * Throws std::runtime_error naming the label and vector when |P| is below
 * the decision threshold.
 */
truth_table extract_truth_table(const trace& t, const layout& l, double latency_cycles, const sim_params& p);

}  // namespace qcasim

#endif
