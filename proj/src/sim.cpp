#include "qcasim/sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qcasim
{

namespace
{

constexpr double k_elementary_charge = 1.602176634e-19;   // C
constexpr double k_eps0              = 8.8541878128e-12;  // F/m
constexpr double k_pi                = 3.14159265358979323846;

// Coulomb energy between the dot charges of two cells with given polarizations.
double pair_energy(double pol_a, double pol_b, double dx_nm, double dy_nm, const geometry& g, double eps_r)
{
    const double inset = (g.cell_nm - g.dot_nm) / 2.0;  // dot center inset from cell center, nm
    const std::array<std::array<double, 2>, 4> dots{{{+inset, +inset}, {+inset, -inset}, {-inset, -inset}, {-inset, +inset}}};

    // +e/2 neutralizing background on every dot, two electrons on the diagonal
    // matching the polarization (dots 0,2 for P=+1; dots 1,3 for P=-1)
    const auto charges = [](double pol) {
        std::array<double, 4> q{+0.5, +0.5, +0.5, +0.5};
        if (pol > 0)
        {
            q[0] -= 1.0;
            q[2] -= 1.0;
        }
        else
        {
            q[1] -= 1.0;
            q[3] -= 1.0;
        }
        return q;
    };
    const auto qa = charges(pol_a);
    const auto qb = charges(pol_b);

    const double scale = k_elementary_charge * k_elementary_charge / (4.0 * k_pi * k_eps0 * eps_r) * 1e9;  // J*nm
    double       u     = 0.0;
    for (int i = 0; i < 4; ++i)
    {
        for (int j = 0; j < 4; ++j)
        {
            const double rx = dots[i][0] - (dots[j][0] + dx_nm);
            const double ry = dots[i][1] - (dots[j][1] + dy_nm);
            u += scale * qa[i] * qb[j] / std::sqrt(rx * rx + ry * ry);
        }
    }
    return u;
}

}  // namespace

double kink_energy(const cell& a, const cell& b, const geometry& g, double eps_r)
{
    if (a.x == b.x && a.y == b.y && a.layer == b.layer)
    {
        throw std::domain_error{"kink_energy: coincident cell positions"};
    }
    const double dx = static_cast<double>(b.x - a.x) * g.pitch_nm;
    const double dy = static_cast<double>(b.y - a.y) * g.pitch_nm;
    return pair_energy(+1.0, -1.0, dx, dy, g, eps_r) - pair_energy(+1.0, +1.0, dx, dy, g, eps_r);
}

kink_table kink_table::build(const layout& l, const sim_params& p)
{
    kink_table        t;
    const std::size_t n = l.cells.size();
    t.neighbors.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = i + 1; j < n; ++j)
        {
            const cell&  a  = l.cells[i];
            const cell&  b  = l.cells[j];
            const double dx = static_cast<double>(b.x - a.x) * l.geom.pitch_nm;
            const double dy = static_cast<double>(b.y - a.y) * l.geom.pitch_nm;
            const double r  = std::sqrt(dx * dx + dy * dy);
            if (r > p.radius_nm || r == 0.0)
            {
                continue;
            }
            const double ek = kink_energy(a, b, l.geom, p.eps_r);
            t.neighbors[i].push_back({j, ek});
            t.neighbors[j].push_back({i, ek});
            const bool adjacent = (std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1);
            if (adjacent)
            {
                t.max_adjacent = std::max(t.max_adjacent, ek);
            }
        }
    }
    return t;
}

double clock_gamma(int zone, double sample, const sim_params& p, int total_samples, int total_cycles)
{
    const double tc    = static_cast<double>(total_samples) / static_cast<double>(total_cycles);
    const double mid   = (p.clock_high + p.clock_low) / 2.0;
    const double half  = (p.clock_high - p.clock_low) / 2.0;
    const double phase = 2.0 * k_pi * sample / tc - static_cast<double>(zone) * k_pi / 2.0 + k_pi / 3.0;
    const double g     = mid + p.clock_amplitude * half * std::cos(phase);
    return std::clamp(g, p.clock_low, p.clock_high);
}

double update_cell(double sum_field, double gamma)
{
    const double x = sum_field / (2.0 * gamma);
    return x / std::sqrt(1.0 + x * x);
}

relax_result relax_sample(const layout& l, const kink_table& kinks, const std::vector<double>& gammas,
                          const sim_params& p, std::vector<double>& pols)
{
    const std::size_t n = l.cells.size();

    // deterministic Gauss-Seidel sweep order: (layer, y, x)
    static thread_local std::vector<std::size_t> order;
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const cell& ca = l.cells[a];
        const cell& cb = l.cells[b];
        return std::tie(ca.layer, ca.y, ca.x) < std::tie(cb.layer, cb.y, cb.x);
    });

    relax_result res;
    for (int iter = 0; iter < p.max_iter_per_sample; ++iter)
    {
        double max_delta = 0.0;
        for (const std::size_t i : order)
        {
            if (l.cells[i].is_driver())
            {
                continue;
            }
            double field = 0.0;
            for (const auto& nb : kinks.neighbors[i])
            {
                field += nb.energy * pols[nb.index];
            }
            const double next = update_cell(field, gammas[i]);
            max_delta         = std::max(max_delta, std::abs(next - pols[i]));
            pols[i]           = next;
        }
        res.iterations = iter + 1;
        if (max_delta < p.convergence_tol)
        {
            return res;
        }
    }
    res.converged = false;
    return res;
}

std::string trace::to_csv() const
{
    std::ostringstream out;
    out << "sample";
    for (const auto& lbl : input_labels)
    {
        out << "," << lbl;
    }
    for (const auto& lbl : output_labels)
    {
        out << "," << lbl;
    }
    out << "\n";
    const std::size_t len = samples.empty() ? 0 : samples.front().size();
    char              buf[32];
    for (std::size_t s = 0; s < len; ++s)
    {
        out << s;
        for (const auto& series : samples)
        {
            std::snprintf(buf, sizeof buf, "%.6g", series[s]);
            out << "," << buf;
        }
        out << "\n";
    }
    return out.str();
}

trace run_simulation(const layout& l, const sim_params& p, bool invert_drivers)
{
    if (const auto violations = validate(l); !violations.empty())
    {
        throw layout_error{"run_simulation: invalid layout: " + violations.front()};
    }
    const auto inputs  = l.input_indices();
    const auto outputs = l.output_indices();
    if (inputs.empty())
    {
        throw layout_error{"run_simulation: layout has no input cells"};
    }

    const int n_in         = static_cast<int>(inputs.size());
    const int num_vectors  = 1 << n_in;
    const int total_cycles = 4 * num_vectors;  // every vector held for 4 clock cycles
    const double tc        = static_cast<double>(p.num_samples) / static_cast<double>(total_cycles);
    if (tc < 16.0)
    {
        throw std::invalid_argument{"run_simulation: " + std::to_string(p.num_samples) +
                                    " samples cannot hold " + std::to_string(num_vectors) +
                                    " input vectors for 4 clock cycles (need >= " +
                                    std::to_string(total_cycles * 16) + ")"};
    }

    const kink_table kinks = kink_table::build(l, p);
    const double     sign  = invert_drivers ? -1.0 : 1.0;

    std::vector<double> pols(l.cells.size(), 0.0);
    for (std::size_t i = 0; i < l.cells.size(); ++i)
    {
        if (l.cells[i].kind == cell_kind::fixed)
        {
            pols[i] = sign * l.cells[i].fixed_pol;
        }
    }

    trace t;
    t.total_cycles = total_cycles;
    for (const auto i : inputs)
    {
        t.input_labels.push_back(l.cells[i].label);
    }
    for (const auto o : outputs)
    {
        t.output_labels.push_back(l.cells[o].label);
    }
    t.samples.assign(inputs.size() + outputs.size(), {});
    for (auto& series : t.samples)
    {
        series.reserve(static_cast<std::size_t>(p.num_samples));
    }

    std::vector<double> gammas(l.cells.size(), p.clock_high);
    for (int s = 0; s < p.num_samples; ++s)
    {
        const int vec = std::min(static_cast<int>(s / (4.0 * tc)), num_vectors - 1);
        for (int j = 0; j < n_in; ++j)
        {
            // input label j carries bit n-1-j of the counter (first label = MSB)
            const int b        = (vec >> (n_in - 1 - j)) & 1;
            pols[inputs[static_cast<std::size_t>(j)]] = sign * (b ? 1.0 : -1.0);
        }
        std::array<double, 4> zone_gamma{};
        for (int z = 0; z < 4; ++z)
        {
            zone_gamma[static_cast<std::size_t>(z)] = clock_gamma(z, s, p, p.num_samples, total_cycles);
        }
        for (std::size_t i = 0; i < l.cells.size(); ++i)
        {
            gammas[i] = zone_gamma[static_cast<std::size_t>(l.cells[i].zone)];
        }
        if (!relax_sample(l, kinks, gammas, p, pols).converged)
        {
            ++t.unconverged_samples;
        }
        std::size_t col = 0;
        for (const auto i : inputs)
        {
            t.samples[col++].push_back(pols[i]);
        }
        for (const auto o : outputs)
        {
            t.samples[col++].push_back(pols[o]);
        }
    }
    return t;
}

truth_table extract_truth_table(const trace& t, const layout& l, double latency_cycles, const sim_params& p)
{
    const int n_in        = static_cast<int>(t.input_labels.size());
    const int num_vectors = 1 << n_in;
    const std::size_t len = t.samples.empty() ? 0 : t.samples.front().size();
    const double      tc  = static_cast<double>(len) / static_cast<double>(t.total_cycles);

    const auto outputs = l.output_indices();
    if (outputs.size() != t.output_labels.size())
    {
        throw std::invalid_argument{"extract_truth_table: trace does not match layout outputs"};
    }

    const int lat = static_cast<int>(std::ceil(latency_cycles - 1e-12));
    truth_table table;
    table.input_labels  = t.input_labels;
    table.output_labels = t.output_labels;

    for (int vec = 0; vec < num_vectors; ++vec)
    {
        bit_vector row;
        for (std::size_t o = 0; o < outputs.size(); ++o)
        {
            const int    zone   = l.cells[outputs[o]].zone;
            const double offset = static_cast<double>(lat) + 0.25 * zone + 0.375;  // hold-phase center
            if (offset >= 4.0)
            {
                throw std::invalid_argument{"extract_truth_table: latency too long for the 4-cycle hold window"};
            }
            const auto s = static_cast<std::size_t>(std::llround((4.0 * vec + offset) * tc));
            const double pol = t.samples[t.input_labels.size() + o][std::min(s, len - 1)];
            if (std::abs(pol) < p.decision_threshold)
            {
                std::ostringstream ss;
                ss << "undecided output '" << t.output_labels[o] << "' at input vector " << vec << " (P = " << pol
                   << ")";
                throw std::runtime_error{ss.str()};
            }
            row.push_back(pol > 0 ? 1 : 0);
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace qcasim
