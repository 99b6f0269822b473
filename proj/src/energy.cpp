#include "qcasim/energy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcasim
{

namespace
{

constexpr double k_ev = 1.602176634e-19;  // J per eV

// quasi-static steady state at a uniform gamma with inputs driven to `drive`
std::vector<double> steady_state(const layout& l, const kink_table& kinks, const std::vector<double>& drive,
                                 double gamma)
{
    sim_params p;
    p.convergence_tol     = 1e-9;
    p.max_iter_per_sample = 2000;

    std::vector<double> pols(l.cells.size(), 0.0);
    const auto          inputs = l.input_indices();
    for (std::size_t i = 0; i < l.cells.size(); ++i)
    {
        if (l.cells[i].kind == cell_kind::fixed)
        {
            pols[i] = l.cells[i].fixed_pol;
        }
    }
    for (std::size_t j = 0; j < inputs.size(); ++j)
    {
        pols[inputs[j]] = drive[j];
    }
    std::vector<double> gammas(l.cells.size(), gamma);
    relax_sample(l, kinks, gammas, p, pols);
    return pols;
}

double field_on(const kink_table& kinks, const std::vector<double>& pols, std::size_t i)
{
    double f = 0.0;
    for (const auto& nb : kinks.neighbors[i])
    {
        f += nb.energy * pols[nb.index];
    }
    return f;
}

}  // namespace

std::array<double, 3> hamiltonian_vector(double neighbor_field_j, double gamma_j)
{
    return {-2.0 * gamma_j / physical_constants::hbar, 0.0, -neighbor_field_j / physical_constants::hbar};
}

std::array<double, 3> steady_coherence(const std::array<double, 3>& gamma_vec, double temperature_k)
{
    const double mag = std::sqrt(gamma_vec[0] * gamma_vec[0] + gamma_vec[1] * gamma_vec[1] +
                                 gamma_vec[2] * gamma_vec[2]);
    if (mag == 0.0)
    {
        return {0.0, 0.0, 0.0};
    }
    const double t = std::tanh(physical_constants::hbar * mag / (2.0 * physical_constants::k_b * temperature_k));
    return {-t * gamma_vec[0] / mag, -t * gamma_vec[1] / mag, -t * gamma_vec[2] / mag};
}

double transition_dissipation(const std::array<double, 3>& gamma_before, const std::array<double, 3>& gamma_after,
                              double temperature_k)
{
    const auto   lb  = steady_coherence(gamma_before, temperature_k);
    const auto   la  = steady_coherence(gamma_after, temperature_k);
    const double dot = gamma_after[0] * (lb[0] - la[0]) + gamma_after[1] * (lb[1] - la[1]) +
                       gamma_after[2] * (lb[2] - la[2]);
    return std::max(0.0, physical_constants::hbar / 2.0 * dot);
}

energy_report analyze(const layout& l, const energy_params& ep, const kink_table& kinks)
{
    const auto inputs = l.input_indices();
    const int  n_in   = static_cast<int>(inputs.size());
    if (n_in > 8)
    {
        throw std::invalid_argument{"analyze: more than 8 inputs, exhaustive pair sweep is infeasible"};
    }
    if (kinks.max_adjacent <= 0.0)
    {
        throw std::invalid_argument{"analyze: layout has no adjacent cell pair to define the reference E_k"};
    }

    const double ek_ref    = kinks.max_adjacent;
    const double gamma_hi  = ep.tunneling_factor * ek_ref;
    const double gamma_lo  = ep.gamma_low;
    const int    num_vec   = 1 << n_in;
    const double temp      = ep.temperature_k;
    const int    sub       = std::max(1, ep.ramp_substeps);

    // steady polarizations for every input vector, at hold-level gamma
    std::vector<std::vector<double>> steady(static_cast<std::size_t>(num_vec));
    for (int v = 0; v < num_vec; ++v)
    {
        std::vector<double> drive(static_cast<std::size_t>(n_in));
        for (int j = 0; j < n_in; ++j)
        {
            drive[static_cast<std::size_t>(j)] = ((v >> (n_in - 1 - j)) & 1) ? 1.0 : -1.0;
        }
        steady[static_cast<std::size_t>(v)] = steady_state(l, kinks, drive, gamma_lo);
    }

    const std::size_t   n = l.cells.size();
    std::vector<double> leak_j(n, 0.0);
    std::vector<double> switch_j(n, 0.0);

    const auto ramp = [&](double field, double g_from, double g_to, double& acc) {
        for (int k = 0; k < sub; ++k)
        {
            const double ga = g_from + (g_to - g_from) * k / sub;
            const double gb = g_from + (g_to - g_from) * (k + 1) / sub;
            acc += transition_dissipation(hamiltonian_vector(field, ga), hamiltonian_vector(field, gb), temp);
        }
    };

    for (int v1 = 0; v1 < num_vec; ++v1)
    {
        for (int v2 = 0; v2 < num_vec; ++v2)
        {
            const auto& p1 = steady[static_cast<std::size_t>(v1)];
            const auto& p2 = steady[static_cast<std::size_t>(v2)];
            for (std::size_t i = 0; i < n; ++i)
            {
                if (l.cells[i].is_driver())
                {
                    continue;
                }
                const double f1 = field_on(kinks, p1, i);
                const double f2 = field_on(kinks, p2, i);
                // release ramp under v1, then switch ramp under v2: leakage
                ramp(f1, gamma_lo, gamma_hi, leak_j[i]);
                ramp(f2, gamma_hi, gamma_lo, leak_j[i]);
                // input swap while erased: switching when the steady state flips sign
                const double swap =
                    transition_dissipation(hamiltonian_vector(f1, gamma_hi), hamiltonian_vector(f2, gamma_hi), temp);
                const bool flipped = (p1[i] > 0.0) != (p2[i] > 0.0) && std::abs(p1[i]) > 0.0 && std::abs(p2[i]) > 0.0;
                (flipped ? switch_j[i] : leak_j[i]) += swap;
            }
        }
    }

    energy_report rep;
    rep.params         = ep;
    rep.reference_ek_j = ek_ref;
    const double pairs = static_cast<double>(num_vec) * static_cast<double>(num_vec);
    for (std::size_t i = 0; i < n; ++i)
    {
        if (l.cells[i].is_driver())
        {
            continue;
        }
        const double lk = leak_j[i] / pairs / k_ev;
        const double sw = switch_j[i] / pairs / k_ev;
        rep.per_cell.push_back({i, lk, sw});
        rep.avg_leakage_ev += lk;
        rep.avg_switching_ev += sw;
    }
    rep.total_ev = rep.avg_leakage_ev + rep.avg_switching_ev;
    return rep;
}

std::vector<std::vector<double>> power_map(const energy_report& report, const layout& l)
{
    if (l.cells.empty())
    {
        return {};
    }
    int minx = l.cells.front().x, maxx = minx, miny = l.cells.front().y, maxy = miny;
    for (const cell& c : l.cells)
    {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    std::vector<std::vector<double>> map(static_cast<std::size_t>(maxy - miny + 1),
                                         std::vector<double>(static_cast<std::size_t>(maxx - minx + 1), 0.0));
    for (const auto& pc : report.per_cell)
    {
        if (pc.cell_index >= l.cells.size())
        {
            throw std::invalid_argument{"power_map: report does not match layout"};
        }
        const cell& c = l.cells[pc.cell_index];
        map[static_cast<std::size_t>(c.y - miny)][static_cast<std::size_t>(c.x - minx)] +=
            pc.leakage_ev + pc.switching_ev;
    }
    return map;
}

std::string energy_report_csv(const energy_report& report, const layout& l)
{
    std::ostringstream out;
    out << "cell_id,x,y,leakage_eV,switching_eV,total_eV\n";
    char buf[96];
    for (const auto& pc : report.per_cell)
    {
        const cell& c = l.cells[pc.cell_index];
        std::snprintf(buf, sizeof buf, "%zu,%d,%d,%.6g,%.6g,%.6g", pc.cell_index, c.x, c.y, pc.leakage_ev,
                      pc.switching_ev, pc.leakage_ev + pc.switching_ev);
        out << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "total,,,%.6g,%.6g,%.6g", report.avg_leakage_ev, report.avg_switching_ev,
                  report.total_ev);
    out << buf << "\n";
    return out.str();
}

std::string power_map_text(const std::vector<std::vector<double>>& map)
{
    std::ostringstream out;
    char               buf[32];
    for (const auto& row : map)
    {
        for (std::size_t j = 0; j < row.size(); ++j)
        {
            std::snprintf(buf, sizeof buf, "%.6g", row[j]);
            out << (j ? " " : "") << buf;
        }
        out << "\n";
    }
    return out.str();
}

std::string power_map_pgm(const std::vector<std::vector<double>>& map)
{
    const std::size_t h = map.size();
    const std::size_t w = h ? map.front().size() : 0;
    double            peak = 0.0;
    for (const auto& row : map)
    {
        for (const double v : row)
        {
            peak = std::max(peak, v);
        }
    }
    std::ostringstream out;
    out << "P2\n" << w << " " << h << "\n255\n";
    for (const auto& row : map)
    {
        for (std::size_t j = 0; j < w; ++j)
        {
            const int v = peak > 0.0 ? static_cast<int>(std::lround(row[j] / peak * 255.0)) : 0;
            out << (j ? " " : "") << v;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qcasim
