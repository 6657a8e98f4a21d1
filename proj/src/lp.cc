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

#include "uecp/lp.h"

namespace uecp {

template class internal::BoundedSimplex<double>;

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericalFailure:
      return "numerical failure";
  }
  return "unknown";
}

LpCertificate ComputeCertificate(const LpProblem& problem,
                                 const LpSolution& solution) {
  LpCertificate cert;
  const Eigen::VectorXd& w = solution.primal;
  for (int j = 0; j < problem.num_vars(); ++j) {
    cert.primal_violation = std::max(
        {cert.primal_violation, -w[j], w[j] - problem.upper_bound(j)});
  }
  Eigen::VectorXd slack;
  if (problem.num_ineq() > 0) {
    slack = problem.ineq_rhs - problem.ineq_matrix * w;
    cert.primal_violation = std::max(cert.primal_violation, -slack.minCoeff());
  }
  if (problem.num_eq() > 0) {
    const Eigen::VectorXd residual = problem.eq_matrix * w - problem.eq_rhs;
    cert.primal_violation =
        std::max(cert.primal_violation, residual.cwiseAbs().maxCoeff());
  }

  for (int i = 0; i < problem.num_ineq(); ++i) {
    const double y = solution.duals_ineq[i];
    cert.slackness_violation =
        std::max(cert.slackness_violation, std::abs(y * slack[i]));
    cert.dual_sign_violation = std::max(cert.dual_sign_violation, y);
  }

  Eigen::VectorXd reduced = problem.objective;
  if (problem.num_ineq() > 0) {
    reduced -= problem.ineq_matrix.transpose() * solution.duals_ineq;
  }
  if (problem.num_eq() > 0) {
    reduced -= problem.eq_matrix.transpose() * solution.duals_eq;
  }
  constexpr double kAtBound = 1e-7;
  double bound_term = 0.0;
  for (int j = 0; j < problem.num_vars(); ++j) {
    const double d = reduced[j];
    const double upper = problem.upper_bound(j);
    double violation;
    if (w[j] <= kAtBound) {
      violation = -d;
    } else if (std::isfinite(upper) && w[j] >= upper - kAtBound) {
      violation = d;
    } else {
      violation = std::abs(d);
    }
    cert.reduced_cost_violation =
        std::max(cert.reduced_cost_violation, violation);
    if (std::isfinite(upper)) bound_term += upper * std::min(0.0, d);
  }

  cert.dual_objective = bound_term;
  if (problem.num_ineq() > 0) {
    cert.dual_objective += problem.ineq_rhs.dot(solution.duals_ineq);
  }
  if (problem.num_eq() > 0) {
    cert.dual_objective += problem.eq_rhs.dot(solution.duals_eq);
  }
  const double primal = problem.objective.dot(w);
  cert.relative_gap = std::abs(primal - cert.dual_objective) /
                      std::max(1.0, std::abs(primal));
  return cert;
}

bool CertificatePasses(const LpCertificate& cert,
                       const CertificateTolerances& tol) {
  return cert.primal_violation <= tol.feasibility &&
         cert.slackness_violation <= tol.slackness &&
         cert.dual_sign_violation <= tol.reduced_cost &&
         cert.reduced_cost_violation <= tol.reduced_cost &&
         cert.relative_gap <= tol.gap;
}

}  // namespace uecp
