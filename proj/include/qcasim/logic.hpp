#ifndef QCASIM_LOGIC_HPP
#define QCASIM_LOGIC_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qcasim
{

using bit        = uint8_t;
using bit_vector = std::vector<bit>;

/**
 * Exhaustive truth table: 2^n rows in binary-counter order, the first input
 * label carrying the most significant bit.
 */
struct truth_table
{
    std::vector<std::string> input_labels{};
    std::vector<std::string> output_labels{};
    std::vector<bit_vector>  rows{};  // rows[r] = outputs for input vector r

    [[nodiscard]] std::size_t num_inputs() const
    {
        return input_labels.size();
    }
    [[nodiscard]] bit_vector input_row(std::size_t r) const;
    [[nodiscard]] bool       outputs_distinct() const;

    /// Equality up to column order: output columns are matched by label.
    [[nodiscard]] bool same_function(const truth_table& other) const;

    [[nodiscard]] std::string to_csv() const;
    static truth_table        from_csv(const std::string& text, std::size_t num_inputs);
};

/// Rows where two tables disagree, as human-readable strings.
std::vector<std::string> diff_tables(const truth_table& got, const truth_table& expected);

// -- gate functions -------------------------------------------------------

bit maj3(bit a, bit b, bit c);

/// The 3x3 reversible gate: (MAJ(x1,x2,x3), MAJ(!x1,x2,x3), x1^x3).
std::array<bit, 3> rqg(bit x1, bit x2, bit x3);

/// Feynman gate: (x, x^y).
std::array<bit, 2> feynman(bit x, bit y);

/// Full adder-subtractor: (cout, bout, sum/diff, garbage = a^c).
std::array<bit, 4> adder_subtractor(bit a, bit b, bit c);

// -- gate networks --------------------------------------------------------

enum class node_kind : uint8_t
{
    input,
    const0,
    const1,
    maj3,
    nott,
    xor2,
    fanout
};

struct gate_node
{
    node_kind             kind{node_kind::input};
    std::vector<uint32_t> inputs{};  // indices of earlier nodes
    std::string           label{};   // meaningful for primary inputs
};

struct network_output
{
    uint32_t    node{0};
    std::string label{};
    bool        garbage{false};
};

/**
 * DAG of logic nodes; node inputs always reference earlier nodes, so
 * construction order is evaluation order.
 */
struct gate_network
{
    std::vector<gate_node>      nodes{};
    std::vector<network_output> outputs{};

    uint32_t add_input(std::string label);
    uint32_t add_const(bit value);
    uint32_t add_maj(uint32_t a, uint32_t b, uint32_t c);
    uint32_t add_not(uint32_t a);
    uint32_t add_xor(uint32_t a, uint32_t b);
    uint32_t add_fanout(uint32_t a);
    void     mark_output(uint32_t node, std::string label, bool garbage = false);

    [[nodiscard]] std::vector<std::string> input_labels() const;
};

/// Evaluates the network; `inputs` are the primary inputs in declaration order.
bit_vector eval_network(const gate_network& net, const bit_vector& inputs);

/// Exhaustive table over all 2^n input vectors (n <= 20).
truth_table truth_table_of(const gate_network& net);

/**
 * True iff the table is a bijection: output width equals input width and all
 * output rows are distinct. Throws std::invalid_argument on width mismatch.
 */
bool is_reversible(const truth_table& t);

/// (constant inputs, garbage outputs) of a network.
std::pair<int, int> interface_metrics(const gate_network& net);

// -- reference networks ---------------------------------------------------

gate_network rqg_network();
gate_network adder_subtractor_network();  // RQG + two Feynman gates, one const 0

}  // namespace qcasim

#endif
