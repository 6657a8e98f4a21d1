// Copyright 2026 The UECP Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uecp/lp_format.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace uecp {

namespace {

constexpr int kTermsPerLine = 8;

std::string Number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

using Terms = std::vector<std::pair<double, std::string>>;

void WriteExpression(const Terms& terms, std::ostream& out) {
  int written = 0;
  for (const auto& [coef, name] : terms) {
    if (coef == 0.0) continue;
    if (written > 0 && written % kTermsPerLine == 0) out << "\n   ";
    out << (coef < 0 ? " - " : (written == 0 ? " " : " + "))
        << Number(std::abs(coef)) << ' ' << name;
    ++written;
  }
  if (written == 0) out << " 0 " << (terms.empty() ? "" : terms[0].second);
}

void WriteRow(const std::string& label, const Terms& terms, const char* sense,
              double rhs, std::ostream& out) {
  out << ' ' << label << ':';
  WriteExpression(terms, out);
  out << ' ' << sense << ' ' << Number(rhs) << '\n';
}

std::string X(int t, int f) {
  return "x_" + std::to_string(t + 1) + "_" + std::to_string(f + 1);
}

std::string A(int t, int f, int i) {
  return "a_" + std::to_string(t + 1) + "_" + std::to_string(f + 1) + "_" +
         std::to_string(i);
}

}  // namespace

void WriteLpFormat(const LpProblem& problem, std::ostream& out) {
  const int n = problem.num_vars();
  auto row_terms = [n](const Eigen::MatrixXd& m, int r) {
    Terms terms;
    for (int j = 0; j < n; ++j) {
      terms.emplace_back(m(r, j), "w" + std::to_string(j + 1));
    }
    return terms;
  };
  out << "\\ dense LP: " << n << " variables, " << problem.num_ineq()
      << " <= rows, " << problem.num_eq() << " = rows\n";
  out << "Minimize\n obj:";
  Terms obj;
  for (int j = 0; j < n; ++j) {
    obj.emplace_back(problem.objective[j], "w" + std::to_string(j + 1));
  }
  WriteExpression(obj, out);
  out << "\nSubject To\n";
  for (int i = 0; i < problem.num_ineq(); ++i) {
    WriteRow("c" + std::to_string(i + 1), row_terms(problem.ineq_matrix, i),
             "<=", problem.ineq_rhs[i], out);
  }
  for (int i = 0; i < problem.num_eq(); ++i) {
    WriteRow("e" + std::to_string(i + 1), row_terms(problem.eq_matrix, i), "=",
             problem.eq_rhs[i], out);
  }
  out << "Bounds\n";
  for (int j = 0; j < n; ++j) {
    const double upper = problem.upper_bound(j);
    if (std::isfinite(upper)) {
      out << " 0 <= w" << j + 1 << " <= " << Number(upper) << '\n';
    } else {
      out << " w" << j + 1 << " >= 0\n";
    }
  }
  out << "End\n";
}

void WriteInstanceIlp(const Instance& inst, std::ostream& out) {
  const int num_slots = inst.num_slots;
  const int num_contents = inst.num_contents();
  out << "\\ update-enabled caching ILP: " << num_contents << " contents, "
      << num_slots << " slots\n";

  double constant = 0.0;
  Terms obj;
  for (int t = 0; t < num_slots; ++t) {
    for (int f = 0; f < num_contents; ++f) {
      const double m = inst.demand(f, t);
      const double size = inst.size(f);
      constant += size * m * inst.cost_server;
      obj.emplace_back(size * m * (inst.cost_cache - inst.cost_server),
                       X(t, f));
      obj.emplace_back(inst.refresh_cost(f), A(t, f, 0));
      for (int i = 1; i <= t; ++i) {
        obj.emplace_back(inst.aoi_weight * inst.penalty(f, i) * m, A(t, f, i));
      }
    }
  }
  obj.emplace_back(constant, "one");
  out << "Minimize\n obj:";
  WriteExpression(obj, out);
  out << "\nSubject To\n";

  for (int t = 0; t < num_slots; ++t) {
    Terms cap;
    for (int f = 0; f < num_contents; ++f) {
      cap.emplace_back(inst.size(f), X(t, f));
    }
    WriteRow("cap_" + std::to_string(t + 1), cap, "<=", inst.capacity, out);
  }
  for (int t = 0; t < num_slots; ++t) {
    for (int f = 0; f < num_contents; ++f) {
      Terms link;
      for (int i = 0; i <= t; ++i) link.emplace_back(1.0, A(t, f, i));
      link.emplace_back(-1.0, X(t, f));
      const std::string tf = std::to_string(t + 1) + "_" + std::to_string(f + 1);
      WriteRow("link_" + tf, link, "=", 0.0, out);
      for (int i = 1; i <= t; ++i) {
        const std::string tfi = tf + "_" + std::to_string(i);
        WriteRow("keep_" + tfi,
                 {{1.0, A(t, f, i)},
                  {-1.0, X(t, f)},
                  {-1.0, A(t - 1, f, i - 1)},
                  {1.0, A(t, f, 0)}},
                 ">=", -1.0, out);
        WriteRow("prev_" + tfi, {{1.0, A(t, f, i)}, {-1.0, A(t - 1, f, i - 1)}},
                 "<=", 0.0, out);
      }
    }
  }

  out << "Bounds\n one = 1\nBinaries\n";
  for (int t = 0; t < num_slots; ++t) {
    for (int f = 0; f < num_contents; ++f) {
      out << ' ' << X(t, f) << '\n';
      for (int i = 0; i <= t; ++i) out << ' ' << A(t, f, i) << '\n';
    }
  }
  out << "End\n";
}

}  // namespace uecp
