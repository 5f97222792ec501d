#include "io/labeling_json.hpp"

#include <json.hpp>

#include "core/summary.hpp"

namespace ebi {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vertex_block(const std::string& name, const VertexDegrees& v) {
  ordered_json out;
  out["name"] = name;
  out["deg1"] = v.deg1;
  out["deg0"] = v.deg0;
  out["label"] = to_string(v.label);
  return out;
}

int require_int(const ordered_json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw Error(ErrorCode::parse_error,
                std::string("labeling document needs an integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

}  // namespace

std::string serialize_labeling(const GraphParams& params, const EdgeLabeling& lab,
                               bool include_summary) {
  ordered_json doc;
  doc["m"] = params.m();
  doc["n"] = params.n();
  doc["q"] = params.quotient();
  doc["r"] = params.remainder();
  ordered_json rows = ordered_json::array();
  for (int row = 1; row <= params.m(); ++row) rows.push_back(lab.row_string(row));
  doc["rows"] = rows;

  if (include_summary) {
    const VertexSummary s = induce_labels(lab);
    ordered_json sum;
    sum["e1"] = lab.ones();
    sum["e0"] = lab.zeros();
    sum["index"] = s.index;
    sum["signed_diff"] = s.signed_diff;
    sum["va1"] = s.va1;
    sum["va0"] = s.va0;
    sum["va_unlabeled"] = s.va_unlabeled;
    sum["vb1"] = s.vb1;
    sum["vb0"] = s.vb0;
    ordered_json a = ordered_json::array();
    for (int row = 1; row <= params.m(); ++row) a.push_back(vertex_block(params.a_name(row), s.a[row - 1]));
    ordered_json b = ordered_json::array();
    for (int col = 1; col <= params.n(); ++col) b.push_back(vertex_block(params.b_name(col), s.b[col - 1]));
    sum["a"] = a;
    sum["b"] = b;
    doc["summary"] = sum;
  }
  return doc.dump(2) + "\n";
}

std::pair<GraphParams, EdgeLabeling> parse_labeling(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::parse_error, "labeling document must be a JSON object");
  }

  const int m = require_int(doc, "m");
  const int n = require_int(doc, "n");
  GraphParams params = [&] {
    try {
      return GraphParams::create(m, n);
    } catch (const Error& e) {
      throw Error(ErrorCode::parse_error, std::string("bad graph parameters: ") + e.what());
    }
  }();
  if (doc.contains("q") && doc["q"] != params.quotient()) {
    throw Error(ErrorCode::parse_error,
                "field q=" + doc["q"].dump() + " does not match m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + " (expected " + std::to_string(params.quotient()) + ")");
  }
  if (doc.contains("r") && doc["r"] != params.remainder()) {
    throw Error(ErrorCode::parse_error,
                "field r=" + doc["r"].dump() + " does not match m=" + std::to_string(m) +
                    ", n=" + std::to_string(n) + " (expected " + std::to_string(params.remainder()) + ")");
  }

  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw Error(ErrorCode::parse_error, "labeling document needs a \"rows\" array");
  }
  const auto& rows_json = doc["rows"];
  if (static_cast<int>(rows_json.size()) != m) {
    throw Error(ErrorCode::parse_error,
                "expected " + std::to_string(m) + " rows, found " + std::to_string(rows_json.size()));
  }
  std::vector<std::string> rows;
  rows.reserve(rows_json.size());
  for (std::size_t k = 0; k < rows_json.size(); ++k) {
    if (!rows_json[k].is_string()) {
      throw Error(ErrorCode::parse_error, "row " + std::to_string(k + 1) + " is not a string");
    }
    std::string row = rows_json[k].get<std::string>();
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::parse_error,
                  "row " + std::to_string(k + 1) + " has length " + std::to_string(row.size()) +
                      ", expected " + std::to_string(n));
    }
    for (char c : row) {
      if (c != '0' && c != '1') {
        throw Error(ErrorCode::parse_error,
                    "row " + std::to_string(k + 1) + " contains '" + std::string(1, c) +
                        "'; rows are strings over {0,1}");
      }
    }
    rows.push_back(std::move(row));
  }

  try {
    return {params, EdgeLabeling::from_rows(params, rows)};
  } catch (const Error& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

}  // namespace ebi
