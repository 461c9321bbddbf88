// Copyright 2026 The rmd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rmd/c_api.h"

#include <exception>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rmd/analysis.hpp"
#include "rmd/dual_state.hpp"
#include "rmd/errors.hpp"
#include "rmd/experiment.hpp"
#include "rmd/random.hpp"
#include "rmd/report_io.hpp"
#include "rmd/simplex.hpp"
#include "rmd/sparse_matrix.hpp"
#include "rmd/subgradient.hpp"

struct rmd_experiment {
  rmd::ExperimentConfig config;
};

struct rmd_result {
  rmd::ExperimentResult result;
};

struct rmd_rng {
  rmd::Rng rng;
};

struct rmd_dual_state {
  rmd::DualState state;
};

struct rmd_matrix {
  rmd::SparseGameMatrix matrix;
};

namespace {

thread_local std::string g_last_error;

template <class F>
rmd_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return RMD_OK;
  } catch (const rmd::ContractViolation& e) {
    g_last_error = e.what();
    return RMD_ERR_CONTRACT;
  } catch (const rmd::InvalidState& e) {
    g_last_error = e.what();
    return RMD_ERR_STATE;
  } catch (const rmd::IoError& e) {
    g_last_error = e.what();
    return RMD_ERR_IO;
  } catch (const rmd::InvalidArgument& e) {
    g_last_error = e.what();
    return RMD_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RMD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RMD_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RMD_ERR_INTERNAL;
  }
}

template <class T>
T& deref(T* p, const char* what) {
  if (p == nullptr) throw rmd::InvalidArgument(std::string(what) + " is null");
  return *p;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw rmd::InvalidArgument(std::string(what) + " is null");
}

std::span<const double> input(const double* data, std::size_t n, const char* what) {
  if (n > 0) require(data, what);
  return {data, n};
}

rmd::SubgradientSample dense_gradient(const double* grad, std::size_t n, double bound) {
  const auto g = input(grad, n, "grad");
  return rmd::SubgradientSample::Dense(std::vector<double>(g.begin(), g.end()), bound);
}

void copy_out(const rmd::SimplexPoint& x, double* out, std::size_t n) {
  require(out, "out");
  if (n != x.size()) throw rmd::InvalidArgument("output length does not match dimension");
  std::copy(x.weights().begin(), x.weights().end(), out);
}

}  // namespace

extern "C" {

const char* rmd_version(void) { return "1.0.0"; }

const char* rmd_last_error(void) { return g_last_error.c_str(); }

const char* rmd_status_name(rmd_status status) {
  switch (status) {
    case RMD_OK: return "ok";
    case RMD_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RMD_ERR_CONTRACT: return "contract violation";
    case RMD_ERR_IO: return "i/o error";
    case RMD_ERR_STATE: return "invalid state";
    case RMD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

rmd_status rmd_experiment_create(const char* command, rmd_experiment** out) {
  return guard([&] {
    require(command, "command");
    require(out, "out");
    rmd::validate_command(command);
    auto* e = new rmd_experiment;
    e->config.command = command;
    *out = e;
  });
}

rmd_status rmd_experiment_set_int(rmd_experiment* e, const char* key, int64_t value) {
  return guard([&] {
    require(key, "key");
    deref(e, "experiment").config.set(key, std::to_string(value));
  });
}

rmd_status rmd_experiment_set_double(rmd_experiment* e, const char* key, double value) {
  return guard([&] {
    require(key, "key");
    deref(e, "experiment").config.set(key, rmd::format_double(value));
  });
}

rmd_status rmd_experiment_set_string(rmd_experiment* e, const char* key, const char* value) {
  return guard([&] {
    require(key, "key");
    require(value, "value");
    deref(e, "experiment").config.set(key, value);
  });
}

rmd_status rmd_experiment_run(const rmd_experiment* e, rmd_result** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    rmd::ExperimentResult r = rmd::run_experiment(deref(e, "experiment").config);
    *out = new rmd_result{std::move(r)};
  });
}

void rmd_experiment_destroy(rmd_experiment* e) { delete e; }

const char* rmd_result_summary_json(const rmd_result* r) {
  return r ? r->result.summary_json.c_str() : "";
}

const char* rmd_result_trace_csv(const rmd_result* r) {
  return r ? r->result.trace_csv.c_str() : "";
}

const char* rmd_result_table_csv(const rmd_result* r) {
  return r ? r->result.table_csv.c_str() : "";
}

uint64_t rmd_result_summary_hash(const rmd_result* r) {
  return r ? r->result.summary_hash : 0;
}

void rmd_result_destroy(rmd_result* r) { delete r; }

rmd_status rmd_rng_create(uint64_t seed, rmd_rng** out) {
  return guard([&] {
    require(out, "out");
    *out = new rmd_rng{rmd::Rng(seed)};
  });
}

rmd_status rmd_rng_uniform(rmd_rng* rng, double* out) {
  return guard([&] {
    require(out, "out");
    *out = deref(rng, "rng").rng.uniform_open();
  });
}

void rmd_rng_destroy(rmd_rng* rng) { delete rng; }

rmd_status rmd_softmax(const double* y, size_t n, double beta, double* out) {
  return guard([&] { copy_out(rmd::softmax_prox(input(y, n, "y"), beta), out, n); });
}

rmd_status rmd_smoothed_max(const double* y, size_t n, double beta, double* out) {
  return guard([&] {
    require(out, "out");
    *out = rmd::smoothed_max(input(y, n, "y"), beta);
  });
}

rmd_status rmd_evaluate_bound(const char* kind, double grad_bound, size_t n, double horizon,
                              double omega, double* out) {
  return guard([&] {
    require(kind, "kind");
    require(out, "out");
    rmd::BoundSpec spec;
    spec.kind = rmd::parse_bound_kind(kind);
    spec.grad_bound = grad_bound;
    spec.dimension = n;
    spec.horizon = horizon;
    spec.omega = omega;
    *out = rmd::evaluate_bound(spec);
  });
}

rmd_status rmd_dual_state_create(size_t n, double grad_bound, rmd_schedule mode,
                                 size_t horizon, rmd_dual_state** out) {
  return guard([&] {
    require(out, "out");
    if (mode == RMD_ADAPTIVE) {
      *out = new rmd_dual_state{rmd::DualState::Adaptive(n, grad_bound)};
    } else if (mode == RMD_NONADAPTIVE) {
      *out = new rmd_dual_state{rmd::DualState::Nonadaptive(n, grad_bound, horizon)};
    } else {
      throw rmd::InvalidArgument("unknown schedule mode");
    }
  });
}

rmd_status rmd_dual_state_accumulate(rmd_dual_state* s, const double* grad, size_t n,
                                     double bound) {
  return guard([&] { deref(s, "state").state.accumulate(dense_gradient(grad, n, bound)); });
}

rmd_status rmd_dual_state_steps(const rmd_dual_state* s, size_t* out) {
  return guard([&] {
    require(out, "out");
    *out = deref(s, "state").state.steps();
  });
}

rmd_status rmd_dual_state_y(const rmd_dual_state* s, double* out, size_t n) {
  return guard([&] {
    require(out, "out");
    const auto y = deref(s, "state").state.y();
    if (n != y.size()) throw rmd::InvalidArgument("output length does not match dimension");
    std::copy(y.begin(), y.end(), out);
  });
}

rmd_status rmd_md1_step(rmd_dual_state* s, const double* grad, size_t n, double bound,
                        double* next_out) {
  return guard([&] {
    rmd_dual_state& h = deref(s, "state");
    require(next_out, "next_out");
    const rmd::SubgradientSample g = dense_gradient(grad, n, bound);
    rmd::Md1Step step = rmd::md1_step(h.state, g);
    copy_out(step.next, next_out, n);
    h.state = std::move(step.state);
  });
}

rmd_status rmd_md2_distribution(const rmd_dual_state* s, double* out, size_t n) {
  return guard([&] { copy_out(rmd::md2_distribution(deref(s, "state").state), out, n); });
}

rmd_status rmd_md2_sample(const rmd_dual_state* s, rmd_rng* rng, size_t* index) {
  return guard([&] {
    require(index, "index");
    *index = rmd::md2_sample(deref(s, "state").state, deref(rng, "rng").rng).index;
  });
}

void rmd_dual_state_destroy(rmd_dual_state* s) { delete s; }

rmd_status rmd_matrix_load(const char* path, double entry_bound, rmd_matrix** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    std::optional<double> bound;
    if (entry_bound > 0.0) bound = entry_bound;
    *out = new rmd_matrix{rmd::load_matrix_market(path, bound)};
  });
}

rmd_status rmd_matrix_info(const rmd_matrix* m, size_t* rows, size_t* cols, size_t* nonzeros,
                           double* entry_bound) {
  return guard([&] {
    const rmd::SparseGameMatrix& a = deref(m, "matrix").matrix;
    if (rows) *rows = a.rows();
    if (cols) *cols = a.cols();
    if (nonzeros) *nonzeros = a.nonzeros();
    if (entry_bound) *entry_bound = a.entry_bound();
  });
}

void rmd_matrix_destroy(rmd_matrix* m) { delete m; }

}  // extern "C"
