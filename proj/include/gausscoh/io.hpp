#pragma once

#include "gausscoh/coherence.hpp"

#include "json.hpp"

#include <string>

namespace gausscoh::io {

using json = nlohmann::json;

/// Thrown on malformed input documents; the message names the offending
/// field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Records. Matrices are row-major nested arrays of numbers.
//   state:        { "n": int, "V": [[...]], "d0": [...] }
//   channel:      { "n": int, "T": [[...]], "N": [[...]], "d": [...] }
//   superchannel: { "n": int, "A": [[...]], "O": [[...]], "Y": [[...]], "dbar": [...] }
//   coherence:    { "value": float|null, "status": str, "argmax_nu": [...], "evaluations": int }
//   oracle:       { "analytic": float, "numeric": float, "abs_err": float,
//                   "cutoff": int, "trace_deficit": float }

GaussianState parse_state(const json& j);
json emit_state(const GaussianState& s);

GaussianChannel parse_channel(const json& j);
json emit_channel(const GaussianChannel& c);

GaussianSuperchannel parse_superchannel(const json& j);
json emit_superchannel(const GaussianSuperchannel& sc);

json emit_coherence_result(const CoherenceResult& r);
CoherenceResult parse_coherence_result(const json& j);

json emit_oracle_comparison(double analytic, double numeric, int cutoff,
                            double trace_deficit);

json load_json_file(const std::string& path);

}  // namespace gausscoh::io
