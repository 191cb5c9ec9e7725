#ifndef REALIGN_STATE_IO_HPP
#define REALIGN_STATE_IO_HPP

#include <string>

#include "realign/states.hpp"

namespace realignment {

/// Parsed state file: a validated density matrix plus an optional label.
struct StateFile {
    DensityMatrix state;
    std::string label;
};

/// JSON document with fields
///   dims:    {"kind": "bipartite", "m": M, "n": N} or {"kind": "tripartite-qubit"}
///   entries: [[re, im], ...] row-major, total^2 pairs
///   label:   optional string
/// Parse failures raise ParseError; invariant failures raise ValidationError.
StateFile parse_state_json(const std::string& text);

StateFile read_state_file(const std::string& path);

std::string state_to_json(const DensityMatrix& rho, const std::string& label = "");

void write_state_file(const std::string& path, const DensityMatrix& rho,
                      const std::string& label = "");

} // namespace realignment

#endif
