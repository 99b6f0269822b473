#include "qcasim/logic.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcasim
{

bit_vector truth_table::input_row(std::size_t r) const
{
    const std::size_t n = input_labels.size();
    bit_vector        v(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        v[j] = static_cast<bit>((r >> (n - 1 - j)) & 1u);
    }
    return v;
}

bool truth_table::outputs_distinct() const
{
    std::set<bit_vector> seen;
    for (const auto& r : rows)
    {
        if (!seen.insert(r).second)
        {
            return false;
        }
    }
    return true;
}

bool truth_table::same_function(const truth_table& other) const
{
    if (input_labels != other.input_labels || rows.size() != other.rows.size())
    {
        return false;
    }
    std::vector<std::size_t> col;  // our output column for each of other's labels
    for (const auto& lbl : other.output_labels)
    {
        const auto it = std::find(output_labels.begin(), output_labels.end(), lbl);
        if (it == output_labels.end())
        {
            return false;
        }
        col.push_back(static_cast<std::size_t>(it - output_labels.begin()));
    }
    if (col.size() != output_labels.size())
    {
        return false;
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        for (std::size_t j = 0; j < col.size(); ++j)
        {
            if (rows[r][col[j]] != other.rows[r][j])
            {
                return false;
            }
        }
    }
    return true;
}

std::string truth_table::to_csv() const
{
    std::ostringstream out;
    bool               first = true;
    for (const auto& lbl : input_labels)
    {
        out << (first ? "" : ",") << lbl;
        first = false;
    }
    for (const auto& lbl : output_labels)
    {
        out << (first ? "" : ",") << lbl;
        first = false;
    }
    out << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r)
    {
        const auto in = input_row(r);
        first         = true;
        for (const bit b : in)
        {
            out << (first ? "" : ",") << static_cast<int>(b);
            first = false;
        }
        for (const bit b : rows[r])
        {
            out << "," << static_cast<int>(b);
        }
        out << "\n";
    }
    return out.str();
}

truth_table truth_table::from_csv(const std::string& text, std::size_t num_inputs)
{
    truth_table        t;
    std::istringstream in{text};
    std::string        line;
    bool               header = true;
    while (std::getline(in, line))
    {
        if (line.empty())
        {
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream       ls{line};
        std::string              f;
        while (std::getline(ls, f, ','))
        {
            fields.push_back(f);
        }
        if (header)
        {
            if (fields.size() <= num_inputs)
            {
                throw std::invalid_argument{"truth table csv: too few columns"};
            }
            for (std::size_t i = 0; i < fields.size(); ++i)
            {
                (i < num_inputs ? t.input_labels : t.output_labels).push_back(fields[i]);
            }
            header = false;
            continue;
        }
        if (fields.size() != t.input_labels.size() + t.output_labels.size())
        {
            throw std::invalid_argument{"truth table csv: ragged row"};
        }
        bit_vector outs;
        for (std::size_t i = num_inputs; i < fields.size(); ++i)
        {
            if (fields[i] != "0" && fields[i] != "1")
            {
                throw std::invalid_argument{"truth table csv: non-binary value '" + fields[i] + "'"};
            }
            outs.push_back(fields[i] == "1" ? 1 : 0);
        }
        t.rows.push_back(outs);
    }
    if (t.rows.size() != (std::size_t{1} << num_inputs))
    {
        throw std::invalid_argument{"truth table csv: expected " + std::to_string(1u << num_inputs) + " rows"};
    }
    return t;
}

std::vector<std::string> diff_tables(const truth_table& got, const truth_table& expected)
{
    std::vector<std::string> out;
    if (got.rows.size() != expected.rows.size())
    {
        out.push_back("row count mismatch: " + std::to_string(got.rows.size()) + " vs " +
                      std::to_string(expected.rows.size()));
        return out;
    }
    // column map by label where possible, else positional
    std::vector<std::size_t> col(expected.output_labels.size());
    for (std::size_t j = 0; j < expected.output_labels.size(); ++j)
    {
        const auto it = std::find(got.output_labels.begin(), got.output_labels.end(), expected.output_labels[j]);
        col[j]        = (it != got.output_labels.end()) ? static_cast<std::size_t>(it - got.output_labels.begin()) : j;
    }
    for (std::size_t r = 0; r < got.rows.size(); ++r)
    {
        for (std::size_t j = 0; j < expected.output_labels.size(); ++j)
        {
            if (col[j] >= got.rows[r].size() || got.rows[r][col[j]] != expected.rows[r][j])
            {
                std::ostringstream ss;
                ss << "row " << r << " output " << expected.output_labels[j] << ": got ";
                if (col[j] < got.rows[r].size())
                {
                    ss << static_cast<int>(got.rows[r][col[j]]);
                }
                else
                {
                    ss << "?";
                }
                ss << ", expected " << static_cast<int>(expected.rows[r][j]);
                out.push_back(ss.str());
            }
        }
    }
    return out;
}

bit maj3(bit a, bit b, bit c)
{
    return static_cast<bit>((a & b) | (b & c) | (a & c));
}

std::array<bit, 3> rqg(bit x1, bit x2, bit x3)
{
    return {maj3(x1, x2, x3), maj3(static_cast<bit>(x1 ^ 1), x2, x3), static_cast<bit>(x1 ^ x3)};
}

std::array<bit, 2> feynman(bit x, bit y)
{
    return {x, static_cast<bit>(x ^ y)};
}

std::array<bit, 4> adder_subtractor(bit a, bit b, bit c)
{
    return {maj3(a, b, c), maj3(static_cast<bit>(a ^ 1), b, c), static_cast<bit>(a ^ b ^ c),
            static_cast<bit>(a ^ c)};
}

uint32_t gate_network::add_input(std::string label)
{
    nodes.push_back({node_kind::input, {}, std::move(label)});
    return static_cast<uint32_t>(nodes.size() - 1);
}

uint32_t gate_network::add_const(bit value)
{
    nodes.push_back({value ? node_kind::const1 : node_kind::const0, {}, {}});
    return static_cast<uint32_t>(nodes.size() - 1);
}

namespace
{
void check_refs(const std::vector<gate_node>& nodes, const std::vector<uint32_t>& refs)
{
    for (const auto r : refs)
    {
        if (r >= nodes.size())
        {
            throw std::invalid_argument{"gate_network: node input must reference an earlier node"};
        }
    }
}
}  // namespace

uint32_t gate_network::add_maj(uint32_t a, uint32_t b, uint32_t c)
{
    check_refs(nodes, {a, b, c});
    nodes.push_back({node_kind::maj3, {a, b, c}, {}});
    return static_cast<uint32_t>(nodes.size() - 1);
}

uint32_t gate_network::add_not(uint32_t a)
{
    check_refs(nodes, {a});
    nodes.push_back({node_kind::nott, {a}, {}});
    return static_cast<uint32_t>(nodes.size() - 1);
}

uint32_t gate_network::add_xor(uint32_t a, uint32_t b)
{
    check_refs(nodes, {a, b});
    nodes.push_back({node_kind::xor2, {a, b}, {}});
    return static_cast<uint32_t>(nodes.size() - 1);
}

uint32_t gate_network::add_fanout(uint32_t a)
{
    check_refs(nodes, {a});
    nodes.push_back({node_kind::fanout, {a}, {}});
    return static_cast<uint32_t>(nodes.size() - 1);
}

void gate_network::mark_output(uint32_t node, std::string label, bool garbage)
{
    check_refs(nodes, {node});
    outputs.push_back({node, std::move(label), garbage});
}

std::vector<std::string> gate_network::input_labels() const
{
    std::vector<std::string> out;
    for (const auto& n : nodes)
    {
        if (n.kind == node_kind::input)
        {
            out.push_back(n.label);
        }
    }
    return out;
}

bit_vector eval_network(const gate_network& net, const bit_vector& inputs)
{
    std::vector<bit> value(net.nodes.size(), 0);
    std::size_t      next_input = 0;
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
    {
        const gate_node& n = net.nodes[i];
        switch (n.kind)
        {
            case node_kind::input:
                if (next_input >= inputs.size())
                {
                    throw std::invalid_argument{"eval_network: input width mismatch"};
                }
                value[i] = inputs[next_input++];
                break;
            case node_kind::const0: value[i] = 0; break;
            case node_kind::const1: value[i] = 1; break;
            case node_kind::maj3: value[i] = maj3(value[n.inputs[0]], value[n.inputs[1]], value[n.inputs[2]]); break;
            case node_kind::nott: value[i] = static_cast<bit>(value[n.inputs[0]] ^ 1); break;
            case node_kind::xor2: value[i] = static_cast<bit>(value[n.inputs[0]] ^ value[n.inputs[1]]); break;
            case node_kind::fanout: value[i] = value[n.inputs[0]]; break;
        }
    }
    if (next_input != inputs.size())
    {
        throw std::invalid_argument{"eval_network: input width mismatch"};
    }
    bit_vector out;
    for (const auto& o : net.outputs)
    {
        out.push_back(value[o.node]);
    }
    return out;
}

truth_table truth_table_of(const gate_network& net)
{
    truth_table t;
    t.input_labels = net.input_labels();
    for (const auto& o : net.outputs)
    {
        t.output_labels.push_back(o.label);
    }
    const std::size_t n = t.input_labels.size();
    if (n > 20)
    {
        throw std::invalid_argument{"truth_table_of: too many inputs for exhaustive enumeration"};
    }
    for (std::size_t r = 0; r < (std::size_t{1} << n); ++r)
    {
        t.rows.push_back(eval_network(net, t.input_row(r)));
    }
    return t;
}

bool is_reversible(const truth_table& t)
{
    if (t.output_labels.size() != t.input_labels.size())
    {
        throw std::invalid_argument{"is_reversible: input/output width mismatch"};
    }
    return t.outputs_distinct();
}

std::pair<int, int> interface_metrics(const gate_network& net)
{
    int consts = 0, garbage = 0;
    for (const auto& n : net.nodes)
    {
        if (n.kind == node_kind::const0 || n.kind == node_kind::const1)
        {
            ++consts;
        }
    }
    for (const auto& o : net.outputs)
    {
        if (o.garbage)
        {
            ++garbage;
        }
    }
    return {consts, garbage};
}

gate_network rqg_network()
{
    gate_network net;
    const auto   x1 = net.add_input("X1");
    const auto   x2 = net.add_input("X2");
    const auto   x3 = net.add_input("X3");
    const auto   y1 = net.add_maj(x1, x2, x3);
    const auto   n1 = net.add_not(x1);
    const auto   y2 = net.add_maj(n1, x2, x3);
    const auto   y3 = net.add_xor(x1, x3);
    net.mark_output(y1, "Y1");
    net.mark_output(y2, "Y2");
    net.mark_output(y3, "Y3");
    return net;
}

gate_network adder_subtractor_network()
{
    gate_network net;
    const auto   a  = net.add_input("A");
    const auto   b  = net.add_input("B");
    const auto   c  = net.add_input("C");
    const auto   k0 = net.add_const(0);

    // FG1 replicates B
    const auto bcopy = net.add_xor(b, k0);
    // RQG on (A, B, C)
    const auto cout = net.add_maj(a, b, c);
    const auto na   = net.add_not(a);
    const auto bout = net.add_maj(na, b, c);
    const auto gar  = net.add_xor(a, c);
    // FG2 builds the three-input XOR from the replicated B
    const auto sum = net.add_xor(gar, bcopy);

    net.mark_output(cout, "Cout");
    net.mark_output(bout, "Bout");
    net.mark_output(sum, "SumDiff");
    net.mark_output(gar, "Gar", true);
    return net;
}

}  // namespace qcasim
