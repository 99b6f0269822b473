#include "qcasim/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace qcasim
{

double polarization_from_occupancies(const dot_occupancies& o)
{
    const double total = o.rho1 + o.rho2 + o.rho3 + o.rho4;
    if (total <= 0.0)
    {
        throw std::domain_error{"polarization_from_occupancies: zero total occupancy"};
    }
    return (o.rho1 + o.rho3 - o.rho2 - o.rho4) / total;
}

std::vector<std::size_t> layout::input_indices() const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        if (cells[i].kind == cell_kind::input)
        {
            idx.push_back(i);
        }
    }
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return cells[a].label < cells[b].label; });
    return idx;
}

std::vector<std::size_t> layout::output_indices() const
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        if (cells[i].kind == cell_kind::output)
        {
            idx.push_back(i);
        }
    }
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return cells[a].label < cells[b].label; });
    return idx;
}

namespace
{

std::vector<std::string> split_ws(const std::string& line)
{
    std::vector<std::string> out;
    std::istringstream       ss{line};
    std::string              tok;
    while (ss >> tok)
    {
        out.push_back(tok);
    }
    return out;
}

std::pair<std::string, std::string> split_kv(const std::string& tok, int lineno)
{
    const auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
    {
        throw layout_error{"malformed token '" + tok + "'", lineno};
    }
    return {tok.substr(0, eq), tok.substr(eq + 1)};
}

int parse_int(const std::string& v, const std::string& key, int lineno)
{
    int  out{};
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
    {
        throw layout_error{"invalid integer for " + key + ": '" + v + "'", lineno};
    }
    return out;
}

double parse_num(const std::string& v, const std::string& key, int lineno)
{
    try
    {
        std::size_t pos{};
        double      out = std::stod(v, &pos);
        if (pos != v.size())
        {
            throw std::invalid_argument{v};
        }
        return out;
    }
    catch (const std::exception&)
    {
        throw layout_error{"invalid number for " + key + ": '" + v + "'", lineno};
    }
}

}  // namespace

layout parse_layout(const std::string& text)
{
    layout             l;
    std::istringstream in{text};
    std::string        raw;
    int                lineno     = 0;
    bool               saw_header = false;

    std::set<std::tuple<int, int, int>> positions;
    std::set<std::string>               labels;

    while (std::getline(in, raw))
    {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
        {
            raw.erase(hash);
        }
        const auto toks = split_ws(raw);
        if (toks.empty())
        {
            continue;
        }
        if (!saw_header)
        {
            if (toks[0] != "qca-layout" || toks.size() < 2 || toks[1] != "v1")
            {
                throw layout_error{"expected 'qca-layout v1' header", lineno};
            }
            for (std::size_t i = 2; i < toks.size(); ++i)
            {
                const auto [k, v] = split_kv(toks[i], lineno);
                if (k == "name")
                {
                    l.name = v;
                }
                else if (k == "pitch_nm")
                {
                    l.geom.pitch_nm = parse_num(v, k, lineno);
                }
                else if (k == "cell_nm")
                {
                    l.geom.cell_nm = parse_num(v, k, lineno);
                }
                else if (k == "dot_nm")
                {
                    l.geom.dot_nm = parse_num(v, k, lineno);
                }
                else
                {
                    throw layout_error{"unknown header key '" + k + "'", lineno};
                }
            }
            saw_header = true;
            continue;
        }
        if (toks[0] != "cell")
        {
            throw layout_error{"expected 'cell' line, got '" + toks[0] + "'", lineno};
        }
        cell c;
        bool have_x = false, have_y = false, have_kind = false;
        for (std::size_t i = 1; i < toks.size(); ++i)
        {
            const auto [k, v] = split_kv(toks[i], lineno);
            if (k == "x")
            {
                c.x    = parse_int(v, k, lineno);
                have_x = true;
            }
            else if (k == "y")
            {
                c.y    = parse_int(v, k, lineno);
                have_y = true;
            }
            else if (k == "layer")
            {
                c.layer = parse_int(v, k, lineno);
            }
            else if (k == "zone")
            {
                c.zone = parse_int(v, k, lineno);
                if (c.zone < 0 || c.zone > 3)
                {
                    throw layout_error{"zone out of range 0..3: " + v, lineno};
                }
            }
            else if (k == "rot")
            {
                if (v != "45")
                {
                    throw layout_error{"unsupported rotation '" + v + "'", lineno};
                }
                c.rotated = true;
            }
            else if (k == "kind")
            {
                have_kind = true;
                if (v == "normal")
                {
                    c.kind = cell_kind::normal;
                }
                else if (v.rfind("input:", 0) == 0)
                {
                    c.kind  = cell_kind::input;
                    c.label = v.substr(6);
                }
                else if (v.rfind("output:", 0) == 0)
                {
                    c.kind  = cell_kind::output;
                    c.label = v.substr(7);
                }
                else if (v == "fixed:+1" || v == "fixed:-1")
                {
                    c.kind      = cell_kind::fixed;
                    c.fixed_pol = (v == "fixed:+1") ? 1.0 : -1.0;
                }
                else
                {
                    throw layout_error{"unknown cell kind '" + v + "'", lineno};
                }
                if ((c.kind == cell_kind::input || c.kind == cell_kind::output) && c.label.empty())
                {
                    throw layout_error{"empty label in '" + v + "'", lineno};
                }
            }
            else
            {
                throw layout_error{"unknown cell key '" + k + "'", lineno};
            }
        }
        if (!have_x || !have_y || !have_kind)
        {
            throw layout_error{"cell line missing x=, y= or kind=", lineno};
        }
        if (!positions.insert({c.layer, c.y, c.x}).second)
        {
            throw layout_error{"duplicate cell position (" + std::to_string(c.x) + "," + std::to_string(c.y) +
                                   ") layer " + std::to_string(c.layer),
                               lineno};
        }
        if (!c.label.empty() && !labels.insert(c.label).second)
        {
            throw layout_error{"duplicate label '" + c.label + "'", lineno};
        }
        if (c.kind == cell_kind::fixed)
        {
            c.fixed_pol = (c.fixed_pol >= 0.0) ? 1.0 : -1.0;
        }
        l.cells.push_back(c);
    }
    if (!saw_header)
    {
        throw layout_error{"empty file: missing 'qca-layout v1' header", 1};
    }
    return l;
}

namespace
{

std::string format_num(double v)
{
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

}  // namespace

std::string serialize_layout(const layout& l)
{
    std::vector<cell> sorted = l.cells;
    std::sort(sorted.begin(), sorted.end(), [](const cell& a, const cell& b) {
        return std::tie(a.layer, a.y, a.x) < std::tie(b.layer, b.y, b.x);
    });

    std::ostringstream out;
    out << "qca-layout v1 name=" << l.name << " pitch_nm=" << format_num(l.geom.pitch_nm)
        << " cell_nm=" << format_num(l.geom.cell_nm) << " dot_nm=" << format_num(l.geom.dot_nm) << "\n";
    for (const cell& c : sorted)
    {
        out << "cell x=" << c.x << " y=" << c.y << " layer=" << c.layer << " zone=" << c.zone << " kind=";
        switch (c.kind)
        {
            case cell_kind::normal: out << "normal"; break;
            case cell_kind::input: out << "input:" << c.label; break;
            case cell_kind::output: out << "output:" << c.label; break;
            case cell_kind::fixed: out << "fixed:" << (c.fixed_pol > 0 ? "+1" : "-1"); break;
        }
        if (c.rotated)
        {
            out << " rot=45";
        }
        out << "\n";
    }
    return out.str();
}

std::size_t cell_count(const layout& l)
{
    return l.cells.size();
}

double area_um2(const layout& l)
{
    if (l.cells.empty())
    {
        throw std::domain_error{"area: empty layout"};
    }
    int minx = l.cells.front().x, maxx = minx;
    int miny = l.cells.front().y, maxy = miny;
    for (const cell& c : l.cells)
    {
        minx = std::min(minx, c.x);
        maxx = std::max(maxx, c.x);
        miny = std::min(miny, c.y);
        maxy = std::max(maxy, c.y);
    }
    const double w_nm = static_cast<double>(maxx - minx) * l.geom.pitch_nm + l.geom.cell_nm;
    const double h_nm = static_cast<double>(maxy - miny) * l.geom.pitch_nm + l.geom.cell_nm;
    return w_nm * h_nm * 1e-6;  // nm^2 -> um^2
}

double latency_cycles(const layout& l)
{
    const auto inputs  = l.input_indices();
    const auto outputs = l.output_indices();
    if (inputs.empty() || outputs.empty())
    {
        throw layout_error{"latency: layout needs at least one input and one output"};
    }

    const std::size_t n = l.cells.size();

    // union-find over free edges (zone delta 0 or 2: same phase or anti-phase)
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        parent[i] = i;
    }
    const auto find = [&](std::size_t a) {
        while (parent[a] != a)
        {
            parent[a] = parent[parent[a]];
            a         = parent[a];
        }
        return a;
    };

    std::map<std::tuple<int, int, int>, std::size_t> at;
    for (std::size_t i = 0; i < n; ++i)
    {
        at[{l.cells[i].layer, l.cells[i].x, l.cells[i].y}] = i;
    }

    std::vector<std::pair<std::size_t, std::size_t>> advance;  // u -> v, zone(v) = zone(u)+1 mod 4
    for (std::size_t i = 0; i < n; ++i)
    {
        const cell& a = l.cells[i];
        for (int dx = -1; dx <= 1; ++dx)
        {
            for (int dy = -1; dy <= 1; ++dy)
            {
                if (dx == 0 && dy == 0)
                {
                    continue;
                }
                const auto it = at.find({a.layer, a.x + dx, a.y + dy});
                if (it == at.end())
                {
                    continue;
                }
                const std::size_t j     = it->second;
                const int delta = ((l.cells[j].zone - a.zone) % 4 + 4) % 4;
                // anti-phase (delta 2) and retreating (delta 3) contacts are
                // not signal paths: the neighbour is erased while this cell
                // switches, so no stage is traversed through such an edge
                if (delta == 0)
                {
                    parent[find(i)] = find(j);
                }
                else if (delta == 1)
                {
                    advance.emplace_back(i, j);
                }
            }
        }
    }

    // longest-path DP over the contracted component DAG
    std::map<std::size_t, std::vector<std::size_t>> succ;
    std::map<std::size_t, int>                      indeg;
    std::set<std::size_t>                           comps;
    for (std::size_t i = 0; i < n; ++i)
    {
        comps.insert(find(i));
    }
    for (const auto& [u, v] : advance)
    {
        const auto cu = find(u), cv = find(v);
        if (cu != cv)
        {
            succ[cu].push_back(cv);
            ++indeg[cv];
        }
    }

    std::map<std::size_t, int> stages;  // stages reachable ending at component
    std::queue<std::size_t>    ready;
    for (const auto c : comps)
    {
        if (indeg[c] == 0)
        {
            ready.push(c);
        }
    }
    std::set<std::size_t> start;
    for (const auto i : inputs)
    {
        start.insert(find(i));
    }
    for (const auto c : comps)
    {
        stages[c] = start.count(c) ? 1 : -1;  // -1: not reachable from an input yet
    }

    std::size_t visited = 0;
    while (!ready.empty())
    {
        const auto c = ready.front();
        ready.pop();
        ++visited;
        for (const auto s : succ[c])
        {
            if (stages[c] > 0)
            {
                stages[s] = std::max(stages[s], stages[c] + 1);
            }
            if (--indeg[s] == 0)
            {
                ready.push(s);
            }
        }
    }
    if (visited != comps.size())
    {
        throw layout_error{"latency: cyclic clock-zone structure"};
    }

    int best = 0;
    for (const auto o : outputs)
    {
        const int s = stages[find(o)];
        if (s <= 0)
        {
            throw layout_error{"latency: output '" + l.cells[o].label + "' unreachable from inputs"};
        }
        best = std::max(best, s);
    }
    return static_cast<double>(best) / 4.0;
}

std::vector<std::string> validate(const layout& l)
{
    std::vector<std::string>            v;
    std::set<std::tuple<int, int, int>> positions;
    std::set<std::string>               labels;
    for (const cell& c : l.cells)
    {
        const std::string where = "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
        if (c.zone < 0 || c.zone > 3)
        {
            v.push_back("zone-range: cell " + where + " zone " + std::to_string(c.zone));
        }
        if (c.layer != 0)
        {
            v.push_back("multilayer-unsupported: cell " + where + " layer " + std::to_string(c.layer));
        }
        if (c.rotated)
        {
            v.push_back("rotated-unsupported: cell " + where);
        }
        if (c.kind == cell_kind::fixed && std::abs(std::abs(c.fixed_pol) - 1.0) > 0.0)
        {
            v.push_back("fixed-polarization: cell " + where + " must be exactly +1 or -1");
        }
        if (!positions.insert({c.layer, c.y, c.x}).second)
        {
            v.push_back("duplicate-position: cell " + where + " layer " + std::to_string(c.layer));
        }
        if ((c.kind == cell_kind::input || c.kind == cell_kind::output) && !labels.insert(c.label).second)
        {
            v.push_back("duplicate-label: '" + c.label + "'");
        }
    }
    return v;
}

}  // namespace qcasim
