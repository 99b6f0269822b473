#ifndef QCASIM_CORE_HPP
#define QCASIM_CORE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcasim
{

/**
 * Error raised by layout parsing and the metric preconditions. Carries the
 * offending line number when the error originates from a QLF file.
 */
class layout_error : public std::runtime_error
{
  public:
    explicit layout_error(const std::string& what, int line = 0) : std::runtime_error(what), line_{line} {}

    [[nodiscard]] int line() const noexcept
    {
        return line_;
    }

  private:
    int line_;
};

enum class cell_kind : uint8_t
{
    normal,
    input,
    output,
    fixed
};

/**
 * One QCA cell on the grid. Coordinates are in grid-pitch units; `label` is
 * meaningful for input/output cells, `fixed_pol` for fixed cells.
 */
struct cell
{
    int         x{0};
    int         y{0};
    int         layer{0};
    int         zone{0};
    cell_kind   kind{cell_kind::normal};
    std::string label{};
    double      fixed_pol{0.0};
    bool        rotated{false};

    [[nodiscard]] bool is_driver() const noexcept
    {
        return kind == cell_kind::input || kind == cell_kind::fixed;
    }
};

/**
 * Geometry constants of a layout in nanometres.
 */
struct geometry
{
    double cell_nm{18.0};
    double dot_nm{5.0};
    double pitch_nm{20.0};
    double layer_sep_nm{11.5};
};

/**
 * Occupation probabilities of the four quantum dots of a cell.
 */
struct dot_occupancies
{
    double rho1{0.0};
    double rho2{0.0};
    double rho3{0.0};
    double rho4{0.0};
};

/**
 * Cell polarization from dot occupancies: (rho1+rho3-rho2-rho4)/(sum).
 * Throws std::domain_error when the total occupancy is zero.
 */
double polarization_from_occupancies(const dot_occupancies& o);

/**
 * A named, immutable collection of cells plus its geometry. Construct via
 * parse_layout or the designs module; operations on layouts are pure.
 */
struct layout
{
    std::string       name{};
    geometry          geom{};
    std::vector<cell> cells{};

    [[nodiscard]] std::vector<std::size_t> input_indices() const;   // sorted by label
    [[nodiscard]] std::vector<std::size_t> output_indices() const;  // sorted by label
};

/**
 * Parses the QLF v1 text format. Strict: unknown keys, malformed lines,
 * out-of-range zones, duplicate positions and duplicate labels are errors
 * with the offending line number attached.
 */
layout parse_layout(const std::string& text);

/**
 * Serializes a layout in QLF v1 with cells sorted by (layer, y, x) so that
 * parse_layout(serialize_layout(l)) is structurally identical to l.
 */
std::string serialize_layout(const layout& l);

/// Total number of cells, including input, output and fixed cells.
std::size_t cell_count(const layout& l);

/**
 * Bounding-box area in um^2: (dx*pitch + cell) * (dy*pitch + cell) where
 * dx/dy are the coordinate spans. Throws std::domain_error on an empty layout.
 */
double area_um2(const layout& l);

/**
 * Latency in clock cycles: (zone stages on the longest input-to-output
 * path) / 4. A stage increments whenever the zone advances by 1 (mod 4)
 * along the cell adjacency graph; same-zone and anti-phase (delta 2)
 * adjacencies are traversable without an increment. Throws layout_error
 * when an output is unreachable or the zone structure is cyclic.
 */
double latency_cycles(const layout& l);

/**
 * Returns the list of invariant violations; empty iff the layout is valid
 * for the engine (single layer, no rotated cells, unique labels and
 * positions, zones in range, fixed polarizations exactly +-1).
 */
std::vector<std::string> validate(const layout& l);

}  // namespace qcasim

#endif
