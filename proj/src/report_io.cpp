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

#include "rmd/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "rmd/errors.hpp"

namespace rmd {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const RegretReport& r) {
  return {{"algorithm_loss", r.algorithm_loss},
          {"comparator_loss", r.comparator_loss},
          {"pseudo_regret", r.pseudo_regret},
          {"bound", r.bound},
          {"bound_kind", r.bound_kind},
          {"horizon", r.horizon},
          {"dimension", r.dimension},
          {"grad_bound", r.grad_bound}};
}

nlohmann::json to_json(const GameSolution& s, std::size_t max_strategy_size) {
  nlohmann::json j = {{"gap", s.gap},
                      {"upper_value", s.upper_value},
                      {"lower_value", s.lower_value},
                      {"value_estimate", s.value_estimate},
                      {"realized_value", s.realized_value},
                      {"iterations", s.iterations},
                      {"elements_read", s.elements_read},
                      {"verification_reads", s.verification_reads},
                      {"entry_bound", s.entry_bound},
                      {"hannan_holds", s.hannan_holds}};
  if (s.column_strategy.size() <= max_strategy_size &&
      s.row_strategy.size() <= max_strategy_size) {
    j["column_strategy"] = s.column_strategy.vector();
    j["row_strategy"] = s.row_strategy.vector();
  }
  return j;
}

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream out;
  out << kTraceHeader << '\n';
  for (const StepRecord& r : trace.records()) {
    out << r.step << ',' << format_double(r.loss) << ',' << r.action << ',';
    if (r.gap) out << format_double(*r.gap);
    out << ',' << r.reads_solver << ',' << r.reads_verify << '\n';
  }
  return out.str();
}

std::string emit_bound_table(const BoundTableRequest& q) {
  std::ostringstream out;
  out << kBoundTableHeader << '\n';
  for (BoundKind kind : q.kinds) {
    if (kind == BoundKind::kR9Product) {
      throw InvalidArgument("emit_bound_table: R9-product needs block sizes");
    }
    for (double m : q.grad_bounds) {
      for (std::size_t n : q.dimensions) {
        for (double horizon : q.horizons) {
          for (double omega : q.omegas) {
            BoundSpec spec;
            spec.kind = kind;
            spec.grad_bound = m;
            spec.dimension = n;
            spec.horizon = horizon;
            spec.omega = omega;
            out << to_string(kind) << ',' << format_double(m) << ',' << n << ','
                << format_double(horizon) << ',' << format_double(omega) << ','
                << format_double(evaluate_bound(spec)) << '\n';
          }
        }
      }
    }
  }
  return out.str();
}

}  // namespace rmd
