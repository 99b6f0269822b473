#ifndef QCASIM_DESIGNS_HPP
#define QCASIM_DESIGNS_HPP

#include "qcasim/core.hpp"
#include "qcasim/logic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcasim
{

/**
 * A bundled reference layout paired with its functional oracle and expected
 * metrics. The oracle table is the hard contract: the simulated truth table
 * must match it exactly.
 */
struct reference_design
{
    std::string  name;
    layout       cells;
    truth_table  oracle;
    double       expected_latency_cycles{0.0};
    std::string  notes{};
    std::optional<gate_network> network{};  // interface metrics, when meaningful
};

/// Names understood by build_design / build_primitive.
std::vector<std::string> design_names();

/// wire | inverter | majority | crossing | xor2
reference_design build_primitive(const std::string& name);

reference_design build_feynman();
reference_design build_rqg();
reference_design build_adder_subtractor();

/// Any bundled design by name (primitives plus feynman, rqg, addsub).
reference_design build_design(const std::string& name);

}  // namespace qcasim

#endif
