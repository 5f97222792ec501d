#include "ebi/ebi.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "constructions/constructions.hpp"
#include "core/error.hpp"
#include "core/index_set.hpp"
#include "core/labeling.hpp"
#include "core/params.hpp"
#include "core/summary.hpp"
#include "io/labeling_json.hpp"
#include "oracle/oracle.hpp"
#include "theorem/theorem.hpp"

struct ebi_params {
  ebi::GraphParams v;
};
struct ebi_labeling {
  ebi::EdgeLabeling v;
};
struct ebi_index_set {
  ebi::IndexSet v;
};
struct ebi_trajectory {
  ebi::Trajectory v;
};

namespace {

thread_local std::string g_last_error;

ebi_status status_of(ebi::ErrorCode code) {
  switch (code) {
    case ebi::ErrorCode::invalid_params: return EBI_ERR_INVALID_PARAMS;
    case ebi::ErrorCode::invalid_argument: return EBI_ERR_INVALID_ARGUMENT;
    case ebi::ErrorCode::unsupported: return EBI_ERR_UNSUPPORTED;
    case ebi::ErrorCode::cap_exhausted: return EBI_ERR_CAP_EXHAUSTED;
    case ebi::ErrorCode::parse_error: return EBI_ERR_PARSE;
    case ebi::ErrorCode::internal: return EBI_ERR_INTERNAL;
  }
  return EBI_ERR_INTERNAL;
}

template <typename Fn>
ebi_status guarded(Fn&& fn) {
  try {
    fn();
    return EBI_OK;
  } catch (const ebi::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EBI_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return EBI_ERR_INTERNAL;
  }
}

void require(const void* handle, const char* what) {
  if (handle == nullptr) {
    throw ebi::Error(ebi::ErrorCode::invalid_argument, std::string("null ") + what);
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ebi::Construction to_construction(ebi_construction which) {
  switch (which) {
    case EBI_CONSTRUCTION_F: return ebi::Construction::f;
    case EBI_CONSTRUCTION_FPRIME: return ebi::Construction::fprime;
  }
  throw ebi::Error(ebi::ErrorCode::invalid_argument,
                   "unknown construction " + std::to_string(static_cast<int>(which)));
}

ebi::SearchConfig to_search_config(const ebi_search_config* config) {
  if (config == nullptr) return {};
  ebi::SearchConfig out;
  out.state_cap = config->state_cap;
  out.threads = config->threads;
  out.column_symmetry = config->column_symmetry != 0;
  out.both_parities = config->both_parities != 0;
  return out;
}

int label_code(ebi::VertexLabel label) {
  switch (label) {
    case ebi::VertexLabel::one: return 1;
    case ebi::VertexLabel::zero: return 0;
    case ebi::VertexLabel::unlabeled: return -1;
  }
  return -1;
}

void write_stats(ebi_search_stats* out, const ebi::SearchStats& stats) {
  if (out == nullptr) return;
  out->states_visited = stats.states_visited;
  out->leaves = stats.leaves;
  out->seconds = stats.seconds;
}

}  // namespace

extern "C" {

/* ---- graph parameters -------------------------------------------------- */

ebi_status ebi_params_create(int m, int n, ebi_params** out) {
  return guarded([&] {
    require(out, "out pointer");
    *out = new ebi_params{ebi::GraphParams::create(m, n)};
  });
}

void ebi_params_free(ebi_params* params) { delete params; }

int ebi_params_m(const ebi_params* params) { return params ? params->v.m() : 0; }
int ebi_params_n(const ebi_params* params) { return params ? params->v.n() : 0; }
int ebi_params_q(const ebi_params* params) { return params ? params->v.quotient() : 0; }
int ebi_params_r(const ebi_params* params) { return params ? params->v.remainder() : 0; }

ebi_status ebi_params_a_name(const ebi_params* params, int row, char** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    *out = dup_string(params->v.a_name(row));
  });
}

ebi_status ebi_params_b_name(const ebi_params* params, int col, char** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    if (col < 1 || col > params->v.n()) {
      throw ebi::Error(ebi::ErrorCode::invalid_argument,
                       "column " + std::to_string(col) + " out of range 1.." +
                           std::to_string(params->v.n()));
    }
    *out = dup_string(ebi::GraphParams::b_name(col));
  });
}

/* ---- labelings --------------------------------------------------------- */

ebi_status ebi_labeling_build(const ebi_params* params, ebi_construction which,
                              ebi_labeling** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    const auto kind = to_construction(which);
    auto lab = kind == ebi::Construction::f ? ebi::build_f(params->v) : ebi::build_f_prime(params->v);
    *out = new ebi_labeling{std::move(lab)};
  });
}

ebi_status ebi_labeling_random(const ebi_params* params, uint64_t seed, ebi_labeling** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    *out = new ebi_labeling{ebi::random_edge_friendly(params->v, seed)};
  });
}

ebi_status ebi_labeling_clone(const ebi_labeling* lab, ebi_labeling** out) {
  return guarded([&] {
    require(lab, "labeling handle");
    require(out, "out pointer");
    *out = new ebi_labeling{lab->v};
  });
}

void ebi_labeling_free(ebi_labeling* lab) { delete lab; }

ebi_status ebi_labeling_parse(const char* json_text, ebi_labeling** out) {
  return guarded([&] {
    require(json_text, "document text");
    require(out, "out pointer");
    auto parsed = ebi::parse_labeling(json_text);
    *out = new ebi_labeling{std::move(parsed.second)};
  });
}

ebi_status ebi_labeling_serialize(const ebi_labeling* lab, int include_summary, char** out) {
  return guarded([&] {
    require(lab, "labeling handle");
    require(out, "out pointer");
    *out = dup_string(ebi::serialize_labeling(lab->v.params(), lab->v, include_summary != 0));
  });
}

int ebi_labeling_m(const ebi_labeling* lab) { return lab ? lab->v.m() : 0; }
int ebi_labeling_n(const ebi_labeling* lab) { return lab ? lab->v.n() : 0; }

int ebi_labeling_cell(const ebi_labeling* lab, int row, int col) {
  if (lab == nullptr) return -1;
  if (row < 1 || row > lab->v.m() || col < 1 || col > lab->v.n()) return -1;
  return lab->v.cell(row, col);
}

ebi_status ebi_labeling_index(const ebi_labeling* lab, int* out) {
  return guarded([&] {
    require(lab, "labeling handle");
    require(out, "out pointer");
    *out = ebi::ebi_index(lab->v);
  });
}

ebi_status ebi_labeling_signed_diff(const ebi_labeling* lab, int* out) {
  return guarded([&] {
    require(lab, "labeling handle");
    require(out, "out pointer");
    *out = ebi::induce_labels(lab->v).signed_diff;
  });
}

ebi_status ebi_labeling_vertex_counts(const ebi_labeling* lab, int* va1, int* va0,
                                      int* va_unlabeled, int* vb1, int* vb0) {
  return guarded([&] {
    require(lab, "labeling handle");
    const auto s = ebi::induce_labels(lab->v);
    if (va1) *va1 = s.va1;
    if (va0) *va0 = s.va0;
    if (va_unlabeled) *va_unlabeled = s.va_unlabeled;
    if (vb1) *vb1 = s.vb1;
    if (vb0) *vb0 = s.vb0;
  });
}

ebi_status ebi_labeling_a_vertex(const ebi_labeling* lab, int row, int* deg1, int* deg0,
                                 int* label) {
  return guarded([&] {
    require(lab, "labeling handle");
    if (row < 1 || row > lab->v.m()) {
      throw ebi::Error(ebi::ErrorCode::invalid_argument,
                       "row " + std::to_string(row) + " out of range 1.." +
                           std::to_string(lab->v.m()));
    }
    const auto s = ebi::induce_labels(lab->v);
    const auto& v = s.a[row - 1];
    if (deg1) *deg1 = v.deg1;
    if (deg0) *deg0 = v.deg0;
    if (label) *label = label_code(v.label);
  });
}

ebi_status ebi_labeling_b_vertex(const ebi_labeling* lab, int col, int* deg1, int* deg0,
                                 int* label) {
  return guarded([&] {
    require(lab, "labeling handle");
    if (col < 1 || col > lab->v.n()) {
      throw ebi::Error(ebi::ErrorCode::invalid_argument,
                       "column " + std::to_string(col) + " out of range 1.." +
                           std::to_string(lab->v.n()));
    }
    const auto s = ebi::induce_labels(lab->v);
    const auto& v = s.b[col - 1];
    if (deg1) *deg1 = v.deg1;
    if (deg0) *deg0 = v.deg0;
    if (label) *label = label_code(v.label);
  });
}

ebi_status ebi_labeling_apply_switch(ebi_labeling* lab, ebi_switch_op op) {
  return guarded([&] {
    require(lab, "labeling handle");
    lab->v.apply_switch({op.pivot_col, op.a_one_row, op.a_zero_row});
  });
}

/* ---- index sets -------------------------------------------------------- */

size_t ebi_index_set_size(const ebi_index_set* set) {
  return set ? static_cast<size_t>(set->v.size()) : 0;
}

int ebi_index_set_get(const ebi_index_set* set, size_t k) {
  if (set == nullptr || k >= static_cast<size_t>(set->v.size())) return -1;
  return set->v.values()[k];
}

int ebi_index_set_contains(const ebi_index_set* set, int value) {
  return set != nullptr && set->v.contains(value) ? 1 : 0;
}

ebi_status ebi_index_set_to_string(const ebi_index_set* set, char** out) {
  return guarded([&] {
    require(set, "index set handle");
    require(out, "out pointer");
    *out = dup_string(set->v.to_string());
  });
}

void ebi_index_set_free(ebi_index_set* set) { delete set; }

/* ---- closed form ------------------------------------------------------- */

ebi_status ebi_theorem_ebi(const ebi_params* params, ebi_index_set** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    *out = new ebi_index_set{ebi::theorem_ebi(params->v)};
  });
}

ebi_status ebi_theorem_max_index(const ebi_params* params, int* out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    *out = ebi::max_index(params->v);
  });
}

ebi_status ebi_range_overlap_check(const ebi_params* params, int* holds, int* low_max,
                                   int* high_min, char** subcase) {
  return guarded([&] {
    require(params, "params handle");
    const auto report = ebi::range_overlap_check(params->v);
    if (holds) *holds = report.holds ? 1 : 0;
    if (low_max) *low_max = report.low_max;
    if (high_min) *high_min = report.high_min;
    if (subcase) *subcase = dup_string(report.subcase);
  });
}

/* ---- constructions and replay ------------------------------------------ */

ebi_status ebi_constructive_ebi(const ebi_params* params, ebi_index_set** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    *out = new ebi_index_set{ebi::constructive_ebi(params->v)};
  });
}

ebi_status ebi_trajectory_run(const ebi_params* params, ebi_construction which,
                              ebi_trajectory** out) {
  return guarded([&] {
    require(params, "params handle");
    require(out, "out pointer");
    *out = new ebi_trajectory{ebi::run_trajectory(params->v, to_construction(which))};
  });
}

int ebi_trajectory_start_index(const ebi_trajectory* traj) {
  return traj ? traj->v.start_index : -1;
}

size_t ebi_trajectory_step_count(const ebi_trajectory* traj) {
  return traj ? traj->v.steps.size() : 0;
}

ebi_status ebi_trajectory_step(const ebi_trajectory* traj, size_t k, ebi_switch_op* op,
                               int* index_after) {
  return guarded([&] {
    require(traj, "trajectory handle");
    if (k >= traj->v.steps.size()) {
      throw ebi::Error(ebi::ErrorCode::invalid_argument,
                       "step " + std::to_string(k) + " out of range; trajectory has " +
                           std::to_string(traj->v.steps.size()) + " steps");
    }
    const auto& step = traj->v.steps[k];
    if (op) *op = {step.op.pivot_col, step.op.a_one_row, step.op.a_zero_row};
    if (index_after) *index_after = step.index_after;
  });
}

ebi_status ebi_trajectory_achieved(const ebi_trajectory* traj, ebi_index_set** out) {
  return guarded([&] {
    require(traj, "trajectory handle");
    require(out, "out pointer");
    *out = new ebi_index_set{traj->v.achieved};
  });
}

ebi_status ebi_trajectory_start(const ebi_trajectory* traj, ebi_labeling** out) {
  return guarded([&] {
    require(traj, "trajectory handle");
    require(out, "out pointer");
    *out = new ebi_labeling{traj->v.start};
  });
}

ebi_status ebi_trajectory_finish(const ebi_trajectory* traj, ebi_labeling** out) {
  return guarded([&] {
    require(traj, "trajectory handle");
    require(out, "out pointer");
    *out = new ebi_labeling{traj->v.finish};
  });
}

void ebi_trajectory_free(ebi_trajectory* traj) { delete traj; }

/* ---- exhaustive oracles ------------------------------------------------ */

void ebi_search_config_default(ebi_search_config* out) {
  if (out == nullptr) return;
  const ebi::SearchConfig defaults;
  out->state_cap = defaults.state_cap;
  out->threads = defaults.threads;
  out->column_symmetry = defaults.column_symmetry ? 1 : 0;
  out->both_parities = defaults.both_parities ? 1 : 0;
}

ebi_status ebi_oracle_canonical(int m, int n, const ebi_search_config* config,
                                ebi_search_stats* stats, ebi_index_set** out) {
  return guarded([&] {
    require(out, "out pointer");
    ebi::SearchStats local;
    auto set = ebi::canonical_enumerate(m, n, to_search_config(config), &local);
    write_stats(stats, local);
    *out = new ebi_index_set{std::move(set)};
  });
}

ebi_status ebi_oracle_naive(int m, int n, const ebi_search_config* config,
                            ebi_search_stats* stats, ebi_index_set** out) {
  return guarded([&] {
    require(out, "out pointer");
    ebi::SearchStats local;
    auto set = ebi::naive_enumerate(m, n, to_search_config(config), &local);
    write_stats(stats, local);
    *out = new ebi_index_set{std::move(set)};
  });
}

int ebi_spot_check(const ebi_labeling* lab, const ebi_index_set* set) {
  if (lab == nullptr || set == nullptr) return 0;
  return ebi::spot_check(lab->v, set->v) ? 1 : 0;
}

/* ---- errors and strings ------------------------------------------------ */

const char* ebi_status_name(ebi_status status) {
  switch (status) {
    case EBI_OK: return "ok";
    case EBI_ERR_INVALID_PARAMS: return "invalid_params";
    case EBI_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case EBI_ERR_UNSUPPORTED: return "unsupported";
    case EBI_ERR_CAP_EXHAUSTED: return "cap_exhausted";
    case EBI_ERR_PARSE: return "parse_error";
    case EBI_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ebi_last_error(void) { return g_last_error.c_str(); }

void ebi_string_free(char* s) { std::free(s); }

}  // extern "C"
