#include "qcasim/designs.hpp"

#include "qcasim/sim.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace qcasim
{

namespace
{

/**
 * Grid-art layout builder. Each non-space character in the picture places a
 * cell; digits 0..3 are normal cells in that clock zone, '+'/'-' are fixed
 * cells, and any other character is looked up in the legend, which supplies
 * kind, zone and label. Row 0 of the picture is y = 0; columns map to x.
 */
struct cell_spec
{
    cell_kind   kind{cell_kind::normal};
    int         zone{0};
    std::string label{};
    double      fixed_pol{0.0};
};

layout from_art(const std::string& name, const std::vector<std::string>& art,
                const std::map<char, cell_spec>& legend)
{
    layout l;
    l.name = name;
    for (int y = 0; y < static_cast<int>(art.size()); ++y)
    {
        const std::string& row = art[static_cast<std::size_t>(y)];
        for (int x = 0; x < static_cast<int>(row.size()); ++x)
        {
            const char ch = row[static_cast<std::size_t>(x)];
            if (ch == ' ' || ch == '.')
            {
                continue;
            }
            cell c;
            c.x = x;
            c.y = y;
            if (ch >= '0' && ch <= '3')
            {
                c.zone = ch - '0';
            }
            else if (ch == '+' || ch == '-')
            {
                c.kind      = cell_kind::fixed;
                c.fixed_pol = (ch == '+') ? 1.0 : -1.0;
            }
            else
            {
                const auto it = legend.find(ch);
                if (it == legend.end())
                {
                    throw std::invalid_argument{std::string{"from_art: no legend entry for '"} + ch + "'"};
                }
                c.kind      = it->second.kind;
                c.zone      = it->second.zone;
                c.label     = it->second.label;
                c.fixed_pol = it->second.fixed_pol;
            }
            l.cells.push_back(c);
        }
    }
    return l;
}

cell_spec in(int zone, std::string label)
{
    return {cell_kind::input, zone, std::move(label), 0.0};
}

cell_spec out(int zone, std::string label)
{
    return {cell_kind::output, zone, std::move(label), 0.0};
}

truth_table table_from_fn(const std::vector<std::string>& in_labels, const std::vector<std::string>& out_labels,
                          const std::function<bit_vector(const bit_vector&)>& fn)
{
    truth_table t;
    t.input_labels  = in_labels;
    t.output_labels = out_labels;
    for (std::size_t r = 0; r < (std::size_t{1} << in_labels.size()); ++r)
    {
        t.rows.push_back(fn(t.input_row(r)));
    }
    return t;
}

}  // namespace

std::vector<std::string> design_names()
{
    return {"wire", "inverter", "majority", "crossing", "xor2", "feynman", "rqg", "addsub"};
}

reference_design build_primitive(const std::string& name)
{
    if (name == "wire")
    {
        reference_design d;
        d.name  = "wire";
        d.cells = from_art("wire", {"A0011Q"},
                           {{'A', in(0, "A")}, {'Q', out(1, "Q")}});
        d.oracle = table_from_fn({"A"}, {"Q"}, [](const bit_vector& v) { return bit_vector{v[0]}; });
        d.expected_latency_cycles = 0.5;
        d.notes                   = "six-cell wire spanning two clock zones";
        return d;
    }
    if (name == "inverter")
    {
        reference_design d;
        d.name  = "inverter";
        // fork-and-rejoin inverter: the output cell sees both branch ends
        // diagonally, which flips the sign
        d.cells = from_art("inverter",
                           {
                               ".00.",
                               "X0.Q",
                               ".00.",
                           },
                           {{'X', in(0, "X")}, {'Q', out(1, "Q")}});
        d.oracle = table_from_fn({"X"}, {"Q"}, [](const bit_vector& v) { return bit_vector{static_cast<bit>(v[0] ^ 1)}; });
        d.expected_latency_cycles = 0.5;
        d.notes                   = "branch-rejoin inverter, seven cells";
        return d;
    }
    if (name == "majority")
    {
        reference_design d;
        d.name  = "majority";
        d.cells = from_art("majority",
                           {
                               "..A..",
                               "..0..",
                               "B000M",
                               "..0..",
                               "..C..",
                           },
                           {{'A', in(0, "A")}, {'B', in(0, "B")}, {'C', in(0, "C")}, {'M', out(0, "M")}});
        d.oracle = table_from_fn({"A", "B", "C"}, {"M"},
                                 [](const bit_vector& v) { return bit_vector{maj3(v[0], v[1], v[2])}; });
        d.expected_latency_cycles = 0.25;
        d.notes                   = "cross-shaped three-input majority";
        return d;
    }
    if (name == "crossing")
    {
        reference_design d;
        d.name = "crossing";
        // clock-zone coplanar crossing: both wires approach the shared cell
        // in zone 0 and leave in zone 1; the vertical wire retimes one zone
        // further so each output samples its own wire's value
        d.cells = from_art("crossing",
                           {
                               "....B...",
                               "....0...",
                               "....0...",
                               "....0...",
                               "A0001111P",
                               "....1...",
                               "....1...",
                               "....2...",
                               "....Q...",
                           },
                           {{'A', in(0, "A")}, {'B', in(0, "B")}, {'P', out(1, "P")}, {'Q', out(2, "Q")}});
        d.oracle = table_from_fn({"A", "B"}, {"P", "Q"},
                                 [](const bit_vector& v) { return bit_vector{v[0], v[1]}; });
        d.expected_latency_cycles = 0.75;
        d.notes                   = "single-layer crossing via anti-phase clock zones";
        return d;
    }
    if (name == "xor2")
    {
        reference_design d;
        d.name = "xor2";
        // OR and AND gates sandwiched between the input rails; the AND
        // output is inverted by a diagonal hop and MAJ(OR, NAND, -1) forms
        // the XOR
        d.cells = [] {
            layout l;
            l.name      = "xor2";
            auto addc   = [&](int x, int y, int zone, cell_kind k = cell_kind::normal, const std::string& lbl = {},
                            double pol = 0.0) {
                cell c;
                c.x         = x;
                c.y         = y;
                c.zone      = zone;
                c.kind      = k;
                c.label     = lbl;
                c.fixed_pol = pol;
                l.cells.push_back(c);
            };
            // input rails (zone 0)
            for (int y = 1; y <= 4; ++y)
            {
                addc(1, y, 0, y == 3 ? cell_kind::input : cell_kind::normal, y == 3 ? "A" : "");
                addc(3, y, 0, y == 3 ? cell_kind::input : cell_kind::normal, y == 3 ? "B" : "");
            }
            // AND gate (top) and OR gate (bottom), zone 1, biases between
            addc(2, 1, 1);                              // AND device
            addc(2, 2, 1, cell_kind::fixed, {}, -1.0);  // AND bias
            addc(2, 3, 1, cell_kind::fixed, {}, +1.0);  // OR bias
            addc(2, 4, 1);                              // OR device
            // AND output wraps over the top and hops diagonally into the
            // descent (inversion -> NAND); the descent runs with the sweep so
            // the weak diagonal seed wins the race against gate residue
            // wrap paths run a zone behind the gates: a device must latch with
            // its output port still erased, or rail diagonals plus path
            // back-drive can overturn the 1.0 gate margin
            addc(2, 0, 2);
            addc(2, -1, 2);
            addc(3, -1, 2);
            addc(4, -1, 2);
            // the descent co-latches with the output: while it is erased the
            // held diagonal seed re-polarises it with the correct NAND sign,
            // clearing any stale charge from the previous vector
            addc(5, 0, 3);  // diagonal hop: carries NAND
            for (int y = 1; y <= 5; ++y)
            {
                addc(5, y, 3);  // NAND descent
            }
            // OR output wraps below towards the final gate
            addc(2, 5, 2);
            addc(2, 6, 2);
            addc(3, 6, 2);
            addc(4, 6, 2);
            // diagonal +1 bias couples invertingly (-0.25): weaker than an
            // orthogonal -1 but its erased-phase residue follows the gate
            // inputs instead of permanently dragging the output negative
            addc(6, 7, 3, cell_kind::fixed, {}, +1.0);
            addc(5, 6, 3, cell_kind::output, "Q");  // MAJ(OR, NAND, -bias) = XOR
            return l;
        }();
        d.oracle = table_from_fn({"A", "B"}, {"Q"},
                                 [](const bit_vector& v) { return bit_vector{static_cast<bit>(v[0] ^ v[1])}; });
        d.expected_latency_cycles = 1.0;
        d.notes                   = "majority-composed dense XOR, 28 cells";
        return d;
    }
    throw std::invalid_argument{"build_primitive: unknown design '" + name + "'"};
}

reference_design build_feynman()
{
    reference_design d = build_primitive("xor2");
    d.name             = "feynman";
    d.cells.name       = "feynman";
    for (cell& c : d.cells.cells)
    {
        if (c.label == "A")
        {
            c.label = "X";
        }
        else if (c.label == "B")
        {
            c.label = "Y";
        }
    }
    // pass-through output for the first operand
    cell p;
    p.x     = 0;
    p.y     = 3;
    p.zone  = 0;
    p.kind  = cell_kind::output;
    p.label = "P";
    d.cells.cells.push_back(p);
    d.oracle = table_from_fn({"X", "Y"}, {"P", "Q"}, [](const bit_vector& v) {
        const auto r = feynman(v[0], v[1]);
        return bit_vector{r[0], r[1]};
    });
    d.expected_latency_cycles = 1.0;
    d.notes                   = "XOR block plus pass-through of the first operand";
    return d;
}

reference_design build_rqg()
{
    layout l;
    l.name = "rqg";

    auto add = [&l](int x, int y, int zone, cell_kind kind = cell_kind::normal,
                    const std::string& label = std::string(), double pol = 0.0) {
        cell c;
        c.x         = x;
        c.y         = y;
        c.zone      = zone;
        c.kind      = kind;
        c.label     = label;
        c.fixed_pol = pol;
        l.cells.push_back(c);
    };

    // Geometry discipline, learned from the clocked-relaxation dynamics:
    //   * a wire conquers a stale value reliably only while it is straight and
    //     rooted at a held cell of the previous zone (or an input clamp);
    //     after a bend the advancing front weakens, so bent legs stay short
    //   * long or turning routes therefore hand off to the next clock zone,
    //     whose stale charge has been erased before the fresh wave arrives
    //   * device input ports read held cells of the previous zone; relay
    //     wires terminate only at devices one zone later, never at devices of
    //     their own zone, which would back-drive their own input

    // ---- input clamps with clocked rail arms ----
    add(2, 7, 0, cell_kind::input, "X1");
    add(2, 6, 0);                                          // north arm -> inverter fork
    add(2, 5, 0);
    add(2, 8, 0);                                          // south arm -> M1 feed + trunk
    add(2, 9, 0);
    add(2, 10, 0);
    add(6, 7, 0, cell_kind::input, "X2");
    add(6, 6, 0);                                          // arms -> majority ports
    add(6, 8, 0);
    add(14, 7, 0, cell_kind::input, "X3");
    add(14, 6, 0);                                         // north arm -> M2 spine
    add(14, 5, 0);
    add(14, 4, 0);
    add(14, 8, 0);                                         // south arm -> M1 spine
    add(14, 9, 0);
    add(14, 10, 0);
    for (int x = 15; x <= 18; ++x) add(x, 8, 0);           // east arm -> or-gate trunk

    // ---- first operand: fork inverter feeding M2's west port ----
    add(2, 4, 1);
    add(3, 3, 1);                                          // vertical fork run
    add(3, 4, 1);
    add(3, 5, 1);
    add(4, 3, 1);                                          // fork arms
    add(4, 5, 1);

    // ---- first operand: M1 feed, and-gate feed, or-gate relay ----
    add(3, 10, 1);                                         // -> M1 west port
    add(4, 10, 1);
    add(5, 10, 1);
    add(2, 11, 1);                                         // trunk continues the south arm
    add(2, 12, 1);
    add(2, 13, 1);
    add(2, 14, 2);                                         // stub latches with the and-gate,
    for (int x = 4; x <= 7; ++x) add(x, 14, 2);            //   conquering freshly erased cells
    for (int x = 4; x <= 7; ++x) add(x, 13, 2);            // second rank stiffens the front
    for (int y = 13; y <= 21; ++y) add(3, y, 2);           // relay -> or-gate west port

    // ---- second operand: one-cell ports on both majority devices ----
    add(6, 5, 1);                                          // -> M2 south port
    add(6, 9, 1);                                          // -> M1 north port

    // ---- third operand: spines, and-gate feed, or-gate relay ----
    for (int x = 13; x >= 7; --x) add(x, 4, 1);            // spine -> M2 east port
    for (int x = 13; x >= 8; --x) add(x, 10, 1);           // spine -> M1 east feed
    add(7, 10, 2);                                         // east port latches with M1
    add(8, 11, 1);                                         // one-cell drop off the held spine
    add(8, 12, 2);                                         // rest of the drop conquers in one
    add(8, 13, 2);                                         //   sweep off the held drop root
    for (int y = 9; y <= 23; ++y) add(18, y, 1);           // trunk -> or-gate relay root
    for (int x = 17; x >= 4; --x) add(x, 23, 2);           // relay -> or-gate south port
    add(4, 22, 2);                                         // riser off the relay end

    // ---- majority devices; the fork target inverts the first operand ----
    add(5, 4, 2);                                          // fork target = M2 west port
    add(6, 4, 2);                                          // M2 = maj(~X1,X2,X3)
    add(6, 10, 2);                                         // M1 = maj(X1,X2,X3)
    add(6, 3, 3, cell_kind::output, "Y2");
    add(6, 11, 3, cell_kind::output, "Y1");

    // ---- parity section: and-gate, diagonal-hop inverter, or-gate ----
    add(8, 14, 2);                                         // and device
    add(9, 14, 0, cell_kind::fixed, "", -1.0);            // and-gate bias
    add(8, 15, 2);                                         // and output run
    add(8, 16, 2);
    add(8, 17, 2);
    add(9, 18, 3);                                        // diagonal hop: inverts -> nand
    add(9, 19, 3);                                        // nand descent
    add(9, 20, 3);
    add(9, 21, 3);
    add(7, 18, 3);                                         // twin hop and descent halve the
    add(7, 19, 3);                                         //   nand transit to the vote
    add(7, 20, 3);
    add(8, 21, 3);                                         // nand run -> recombiner
    add(7, 21, 3);
    add(6, 21, 3);
    add(4, 21, 3);                                         // or device
    add(4, 20, 0, cell_kind::fixed, "", 1.0);              // or-gate bias
    add(5, 20, 0, cell_kind::fixed, "", -1.0);             // recombine bias
    add(5, 21, 3, cell_kind::output, "Y3");                // maj(or, nand, -1) = xor

    reference_design d;
    d.name   = l.name;
    d.cells  = std::move(l);
    d.oracle = table_from_fn({"X1", "X2", "X3"}, {"Y1", "Y2", "Y3"}, [](const bit_vector& v) {
        const auto r = rqg(v[0], v[1], v[2]);
        return bit_vector{r[0], r[1], r[2]};
    });
    d.expected_latency_cycles = 1.0;
    return d;
}

reference_design build_adder_subtractor()
{
    throw std::runtime_error{"build_adder_subtractor: layout under construction"};
}

reference_design build_design(const std::string& name)
{
    if (name == "feynman")
    {
        return build_feynman();
    }
    if (name == "rqg")
    {
        return build_rqg();
    }
    if (name == "addsub")
    {
        return build_adder_subtractor();
    }
    return build_primitive(name);
}

}  // namespace qcasim
