#include "gausscoh/io.hpp"

#include <fstream>
#include <sstream>

namespace gausscoh::io {

namespace {

int parse_mode_count(const json& j) {
  if (!j.is_object()) throw ParseError("document is not a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field \"n\" is missing or not an integer");
  const int n = j["n"].get<int>();
  if (n <= 0) throw ParseError("field \"n\" must be a positive mode count");
  return n;
}

Mat parse_matrix(const json& j, const std::string& name, int dim) {
  if (!j.contains(name)) throw ParseError("field \"" + name + "\" is missing");
  const json& m = j[name];
  if (!m.is_array() || static_cast<int>(m.size()) != dim)
    throw ParseError("field \"" + name + "\" must be a " + std::to_string(dim) + " x " +
                     std::to_string(dim) + " array of rows");
  Mat out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = m[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("field \"" + name + "\" row " + std::to_string(r) +
                       " must have length " + std::to_string(dim));
    for (int c = 0; c < dim; ++c) {
      if (!row[c].is_number())
        throw ParseError("field \"" + name + "\" entry (" + std::to_string(r) + "," +
                         std::to_string(c) + ") is not a number");
      out(r, c) = row[c].get<double>();
    }
  }
  return out;
}

Vec parse_vector(const json& j, const std::string& name, int dim) {
  if (!j.contains(name)) throw ParseError("field \"" + name + "\" is missing");
  const json& v = j[name];
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw ParseError("field \"" + name + "\" must be an array of length " +
                     std::to_string(dim));
  Vec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (!v[i].is_number())
      throw ParseError("field \"" + name + "\" entry " + std::to_string(i) +
                       " is not a number");
    out(i) = v[i].get<double>();
  }
  return out;
}

json emit_matrix(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json emit_vector(const Vec& v) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

GaussianState parse_state(const json& j) {
  const int n = parse_mode_count(j);
  return make_state(parse_matrix(j, "V", 2 * n), parse_vector(j, "d0", 2 * n));
}

json emit_state(const GaussianState& s) {
  return json{{"n", s.n}, {"V", emit_matrix(s.V)}, {"d0", emit_vector(s.d0)}};
}

GaussianChannel parse_channel(const json& j) {
  const int n = parse_mode_count(j);
  return make_channel(parse_matrix(j, "T", 2 * n), parse_matrix(j, "N", 2 * n),
                      parse_vector(j, "d", 2 * n));
}

json emit_channel(const GaussianChannel& c) {
  return json{{"n", c.n},
              {"T", emit_matrix(c.T)},
              {"N", emit_matrix(c.N)},
              {"d", emit_vector(c.d)}};
}

GaussianSuperchannel parse_superchannel(const json& j) {
  const int n = parse_mode_count(j);
  return make_superchannel(parse_matrix(j, "A", 2 * n), parse_matrix(j, "O", 2 * n),
                           parse_matrix(j, "Y", 2 * n), parse_vector(j, "dbar", 2 * n));
}

json emit_superchannel(const GaussianSuperchannel& sc) {
  return json{{"n", sc.n},
              {"A", emit_matrix(sc.A)},
              {"O", emit_matrix(sc.O)},
              {"Y", emit_matrix(sc.Y)},
              {"dbar", emit_vector(sc.dbar)}};
}

json emit_coherence_result(const CoherenceResult& r) {
  json out;
  if (r.value)
    out["value"] = *r.value;
  else
    out["value"] = nullptr;
  out["status"] = to_string(r.status);
  out["argmax_nu"] = emit_vector(r.argmax_nu);
  out["evaluations"] = r.evaluations;
  return out;
}

CoherenceResult parse_coherence_result(const json& j) {
  CoherenceResult r;
  if (!j.contains("value")) throw ParseError("field \"value\" is missing");
  if (!j["value"].is_null()) r.value = j["value"].get<double>();
  const std::string status = j.value("status", "");
  if (status == "converged")
    r.status = SearchStatus::converged;
  else if (status == "divergent")
    r.status = SearchStatus::divergent;
  else if (status == "boundary-max")
    r.status = SearchStatus::boundary_max;
  else
    throw ParseError("field \"status\" has unknown value \"" + status + "\"");
  if (!j.contains("argmax_nu") || !j["argmax_nu"].is_array())
    throw ParseError("field \"argmax_nu\" is missing or not an array");
  r.argmax_nu = parse_vector(j, "argmax_nu", static_cast<int>(j["argmax_nu"].size()));
  r.evaluations = j.value("evaluations", 0L);
  return r;
}

json emit_oracle_comparison(double analytic, double numeric, int cutoff,
                            double trace_deficit) {
  return json{{"analytic", analytic},
              {"numeric", numeric},
              {"abs_err", std::abs(analytic - numeric)},
              {"cutoff", cutoff},
              {"trace_deficit", trace_deficit}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace gausscoh::io
