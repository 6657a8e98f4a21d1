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

#ifndef UECP_LP_H_
#define UECP_LP_H_

// Dense bounded-variable primal simplex for
//
//   min  c'w   s.t.  A w <= b,  E w = d,  0 <= w <= u,
//
// where u defaults to all ones and may hold +infinity entries. Leave an upper
// bound infinite when the rows already imply it: an explicit bound that is
// active at the optimum leaves its column with a negative reduced cost,
// which column generation would mistake for an improving column.
//
// with dual extraction. Duals follow the convention
// reduced_cost_j = c_j - sum_rows dual_row * coeff_row_j, so at an optimum
// the duals of the <= rows are nonpositive.
//
// The solver keeps an explicit basis inverse, refactorizes it periodically
// with an LU decomposition, prices with Dantzig's rule and falls back to
// Bland's rule after a run of degenerate pivots.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "uecp/error.h"

namespace uecp {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

const char* LpStatusName(LpStatus status);

template <typename Scalar>
struct LpProblemT {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector objective;
  Matrix ineq_matrix;  // rows: A, sense <=
  Vector ineq_rhs;
  Matrix eq_matrix;  // rows: E, sense =
  Vector eq_rhs;
  Vector upper;  // empty: every variable in [0, 1]

  int num_vars() const { return static_cast<int>(objective.size()); }
  Scalar upper_bound(int j) const {
    return upper.size() == 0 ? Scalar(1) : upper[j];
  }
  int num_ineq() const { return static_cast<int>(ineq_rhs.size()); }
  int num_eq() const { return static_cast<int>(eq_rhs.size()); }
};

template <typename Scalar>
struct LpSolutionT {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  LpStatus status = LpStatus::kNumericalFailure;
  Vector primal;
  Scalar objective = 0;
  Vector duals_ineq;
  Vector duals_eq;
  Vector reduced_costs;
  int iterations = 0;
};

using LpProblem = LpProblemT<double>;
using LpSolution = LpSolutionT<double>;

struct LpOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-7;
  double pivot_tolerance = 1e-9;
  int max_iterations = 200000;
  int refactor_interval = 64;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_limit = 40;
};

// Throws Error(kDimensionMismatch) on inconsistent shapes and
// Error(kInvalidArgument) on non-finite data.
template <typename Scalar>
void ValidateLpProblem(const LpProblemT<Scalar>& p) {
  const int n = p.num_vars();
  if ((p.ineq_rhs.size() > 0 && p.ineq_matrix.cols() != n) ||
      p.ineq_matrix.rows() != p.ineq_rhs.size() ||
      (p.eq_rhs.size() > 0 && p.eq_matrix.cols() != n) ||
      p.eq_matrix.rows() != p.eq_rhs.size() ||
      (p.upper.size() != 0 && p.upper.size() != n)) {
    throw Error(ErrorKind::kDimensionMismatch, "LP dimensions inconsistent");
  }
  for (int j = 0; j < p.upper.size(); ++j) {
    if (!(p.upper[j] >= Scalar(0))) {
      throw Error(ErrorKind::kInvalidArgument, "LP upper bounds must be >= 0");
    }
  }
  if (!p.objective.allFinite() || !p.ineq_matrix.allFinite() ||
      !p.ineq_rhs.allFinite() || !p.eq_matrix.allFinite() ||
      !p.eq_rhs.allFinite()) {
    throw Error(ErrorKind::kInvalidArgument, "LP data must be finite");
  }
}

namespace internal {

template <typename Scalar>
class BoundedSimplex {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BoundedSimplex(const LpProblemT<Scalar>& p, const LpOptions& options)
      : p_(p), opt_(options) {}

  LpSolutionT<Scalar> Run();

 private:
  enum class VarState { kBasic, kLower, kUpper };
  enum class Outcome { kOptimal, kUnbounded, kFailure };

  static constexpr Scalar kInf = std::numeric_limits<Scalar>::infinity();

  Scalar Value(int j) const {
    return state_[j] == VarState::kUpper ? upper_[j] : Scalar(0);
  }
  void Refactor();
  void ComputeBasicValues();
  Vector Duals(const Vector& cost) const;
  Outcome Iterate(const Vector& cost);
  void Pivot(int row, int entering, const Vector& alpha);
  void DriveOutArtificials();

  const LpProblemT<Scalar>& p_;
  LpOptions opt_;

  int n_ = 0;        // structural variables
  int m_ineq_ = 0;   // kept <= rows
  int m_ = 0;        // kept rows
  int first_art_ = 0;
  std::vector<int> ineq_rows_;  // original index of each kept <= row
  std::vector<int> eq_rows_;
  Matrix cols_;  // m_ x (n_ + m_ineq_ + m_)
  Vector rhs_;
  Vector upper_;
  std::vector<VarState> state_;
  std::vector<int> basis_;
  Matrix binv_;
  Vector xb_;
  int iterations_ = 0;
  int pivots_since_refactor_ = 0;
};

template <typename Scalar>
void BoundedSimplex<Scalar>::Refactor() {
  Matrix b(m_, m_);
  for (int i = 0; i < m_; ++i) b.col(i) = cols_.col(basis_[i]);
  Eigen::PartialPivLU<Matrix> lu(b);
  binv_ = lu.inverse();
  pivots_since_refactor_ = 0;
}

template <typename Scalar>
void BoundedSimplex<Scalar>::ComputeBasicValues() {
  Vector residual = rhs_;
  for (int j = 0; j < static_cast<int>(state_.size()); ++j) {
    if (state_[j] == VarState::kUpper) residual -= upper_[j] * cols_.col(j);
  }
  xb_ = binv_ * residual;
}

template <typename Scalar>
typename BoundedSimplex<Scalar>::Vector BoundedSimplex<Scalar>::Duals(
    const Vector& cost) const {
  Vector cb(m_);
  for (int i = 0; i < m_; ++i) cb[i] = cost[basis_[i]];
  return binv_.transpose() * cb;
}

template <typename Scalar>
void BoundedSimplex<Scalar>::Pivot(int row, int entering,
                                   const Vector& alpha) {
  const Scalar pivot = alpha[row];
  binv_.row(row) /= pivot;
  for (int i = 0; i < m_; ++i) {
    if (i != row && alpha[i] != Scalar(0)) {
      binv_.row(i) -= alpha[i] * binv_.row(row);
    }
  }
  basis_[row] = entering;
  state_[entering] = VarState::kBasic;
  if (++pivots_since_refactor_ >= opt_.refactor_interval) {
    Refactor();
    ComputeBasicValues();
  }
}

template <typename Scalar>
typename BoundedSimplex<Scalar>::Outcome BoundedSimplex<Scalar>::Iterate(
    const Vector& cost) {
  using std::abs;
  const Scalar opt_tol(opt_.optimality_tolerance);
  const Scalar piv_tol(opt_.pivot_tolerance);
  const int num_cols = static_cast<int>(state_.size());
  bool bland = false;
  int degenerate_run = 0;
  for (;;) {
    if (++iterations_ > opt_.max_iterations) return Outcome::kFailure;
    const Vector y = Duals(cost);
    const Vector d = cost - cols_.transpose() * y;

    int entering = -1;
    Scalar best(0);
    for (int j = 0; j < num_cols; ++j) {
      if (state_[j] == VarState::kBasic || upper_[j] == Scalar(0)) continue;
      const Scalar gain = state_[j] == VarState::kLower ? -d[j] : d[j];
      if (gain <= opt_tol) continue;
      if (bland) {
        entering = j;
        break;
      }
      if (gain > best) {
        best = gain;
        entering = j;
      }
    }
    if (entering < 0) return Outcome::kOptimal;

    const Vector alpha = binv_ * cols_.col(entering);
    const Scalar dir = state_[entering] == VarState::kLower ? 1 : -1;
    Scalar theta = upper_[entering];  // bound flip distance
    int leave_row = -1;
    bool leave_to_upper = false;
    for (int i = 0; i < m_; ++i) {
      const Scalar r = dir * alpha[i];
      Scalar ratio;
      bool to_upper;
      if (r > piv_tol) {
        ratio = xb_[i] / r;
        to_upper = false;
      } else if (r < -piv_tol && upper_[basis_[i]] < kInf) {
        ratio = (upper_[basis_[i]] - xb_[i]) / -r;
        to_upper = true;
      } else {
        continue;
      }
      ratio = std::max(ratio, Scalar(0));
      // On a tie with the entering bound, pivot rather than flip.
      bool take = leave_row < 0 ? ratio <= theta + Scalar(1e-12)
                                : ratio < theta;
      if (!take && leave_row >= 0 && abs(ratio - theta) <= Scalar(1e-12)) {
        take = bland ? basis_[i] < basis_[leave_row]
                     : abs(alpha[i]) > abs(alpha[leave_row]);
      }
      if (take) {
        theta = ratio;
        leave_row = i;
        leave_to_upper = to_upper;
      }
    }
    if (leave_row < 0 && theta == kInf) return Outcome::kUnbounded;

    if (theta <= Scalar(1e-12)) {
      if (++degenerate_run >= opt_.degenerate_limit) bland = true;
    } else {
      degenerate_run = 0;
    }

    xb_ -= (theta * dir) * alpha;
    if (leave_row < 0) {
      state_[entering] = state_[entering] == VarState::kLower
                             ? VarState::kUpper
                             : VarState::kLower;
      continue;
    }
    const Scalar entering_value = Value(entering) + theta * dir;
    const int leaving = basis_[leave_row];
    state_[leaving] = leave_to_upper ? VarState::kUpper : VarState::kLower;
    Pivot(leave_row, entering, alpha);
    if (pivots_since_refactor_ != 0) xb_[leave_row] = entering_value;
  }
}

template <typename Scalar>
void BoundedSimplex<Scalar>::DriveOutArtificials() {
  using std::abs;
  for (int row = 0; row < m_; ++row) {
    if (basis_[row] < first_art_) continue;
    int best = -1;
    Scalar best_mag(1e-7);
    Vector best_alpha;
    for (int j = 0; j < first_art_; ++j) {
      if (state_[j] == VarState::kBasic) continue;
      const Scalar a = binv_.row(row).dot(cols_.col(j));
      if (abs(a) > best_mag) {
        best_mag = abs(a);
        best = j;
      }
    }
    if (best < 0) continue;  // redundant row; artificial stays at 0
    const Vector alpha = binv_ * cols_.col(best);
    state_[basis_[row]] = VarState::kLower;
    Pivot(row, best, alpha);
    ComputeBasicValues();
  }
}

template <typename Scalar>
LpSolutionT<Scalar> BoundedSimplex<Scalar>::Run() {
  using std::abs;
  ValidateLpProblem(p_);
  LpSolutionT<Scalar> sol;
  n_ = p_.num_vars();
  sol.duals_ineq = Vector::Zero(p_.num_ineq());
  sol.duals_eq = Vector::Zero(p_.num_eq());

  // Empty rows are either trivially satisfied or prove infeasibility.
  const Scalar feas_tol(opt_.feasibility_tolerance);
  for (int i = 0; i < p_.num_ineq(); ++i) {
    if ((p_.ineq_matrix.row(i).array() != Scalar(0)).any()) {
      ineq_rows_.push_back(i);
    } else if (p_.ineq_rhs[i] < -feas_tol) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
  }
  for (int i = 0; i < p_.num_eq(); ++i) {
    if ((p_.eq_matrix.row(i).array() != Scalar(0)).any()) {
      eq_rows_.push_back(i);
    } else if (abs(p_.eq_rhs[i]) > feas_tol) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
  }
  m_ineq_ = static_cast<int>(ineq_rows_.size());
  m_ = m_ineq_ + static_cast<int>(eq_rows_.size());
  first_art_ = n_ + m_ineq_;
  const int num_cols = first_art_ + m_;

  cols_ = Matrix::Zero(m_, num_cols);
  rhs_.resize(m_);
  upper_ = Vector::Zero(num_cols);
  for (int j = 0; j < n_; ++j) upper_[j] = p_.upper_bound(j);
  upper_.segment(n_, m_ineq_).setConstant(kInf);
  state_.assign(num_cols, VarState::kLower);
  basis_.assign(m_, -1);
  bool need_phase_one = false;
  for (int r = 0; r < m_; ++r) {
    const bool is_ineq = r < m_ineq_;
    const int orig = is_ineq ? ineq_rows_[r] : eq_rows_[r - m_ineq_];
    cols_.row(r).head(n_) =
        is_ineq ? p_.ineq_matrix.row(orig) : p_.eq_matrix.row(orig);
    rhs_[r] = is_ineq ? p_.ineq_rhs[orig] : p_.eq_rhs[orig];
    if (is_ineq) cols_(r, n_ + r) = 1;
    if (is_ineq && rhs_[r] >= Scalar(0)) {
      basis_[r] = n_ + r;
    } else {
      cols_(r, first_art_ + r) = rhs_[r] >= Scalar(0) ? 1 : -1;
      upper_[first_art_ + r] = kInf;
      basis_[r] = first_art_ + r;
      need_phase_one = true;
    }
    state_[basis_[r]] = VarState::kBasic;
  }
  Refactor();
  ComputeBasicValues();

  if (need_phase_one) {
    Vector cost = Vector::Zero(num_cols);
    for (int j = first_art_; j < num_cols; ++j) {
      if (upper_[j] > Scalar(0)) cost[j] = 1;
    }
    const Outcome phase_one = Iterate(cost);
    if (phase_one == Outcome::kFailure) {
      sol.status = LpStatus::kNumericalFailure;
      sol.iterations = iterations_;
      return sol;
    }
    Refactor();
    ComputeBasicValues();
    Scalar infeasibility(0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= first_art_) infeasibility += abs(xb_[i]);
    }
    if (infeasibility > feas_tol) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = iterations_;
      return sol;
    }
    upper_.tail(m_).setZero();
    DriveOutArtificials();
  }

  Vector cost = Vector::Zero(num_cols);
  cost.head(n_) = p_.objective;
  Outcome outcome = Outcome::kFailure;
  for (int attempt = 0; attempt < 3; ++attempt) {
    outcome = Iterate(cost);
    if (outcome != Outcome::kOptimal) break;
    Refactor();
    ComputeBasicValues();
    bool feasible = true;
    for (int i = 0; i < m_; ++i) {
      if (xb_[i] < -feas_tol || xb_[i] > upper_[basis_[i]] + feas_tol) {
        feasible = false;
      }
    }
    if (feasible) break;
    outcome = Outcome::kFailure;
  }
  sol.iterations = iterations_;
  if (outcome == Outcome::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  if (outcome == Outcome::kFailure) {
    sol.status = LpStatus::kNumericalFailure;
    return sol;
  }

  Vector x(num_cols);
  for (int j = 0; j < num_cols; ++j) x[j] = Value(j);
  for (int i = 0; i < m_; ++i) {
    x[basis_[i]] = std::clamp(xb_[i], Scalar(0), upper_[basis_[i]]);
  }
  sol.status = LpStatus::kOptimal;
  sol.primal = x.head(n_);
  sol.objective = p_.objective.dot(sol.primal);
  const Vector y = Duals(cost);
  for (int r = 0; r < m_ineq_; ++r) sol.duals_ineq[ineq_rows_[r]] = y[r];
  for (int r = m_ineq_; r < m_; ++r) {
    sol.duals_eq[eq_rows_[r - m_ineq_]] = y[r];
  }
  sol.reduced_costs = p_.objective;
  if (p_.num_ineq() > 0) {
    sol.reduced_costs -= p_.ineq_matrix.transpose() * sol.duals_ineq;
  }
  if (p_.num_eq() > 0) {
    sol.reduced_costs -= p_.eq_matrix.transpose() * sol.duals_eq;
  }
  return sol;
}

}  // namespace internal

template <typename Scalar>
LpSolutionT<Scalar> SolveLp(const LpProblemT<Scalar>& problem,
                            const LpOptions& options = {}) {
  return internal::BoundedSimplex<Scalar>(problem, options).Run();
}

// Optimality certificate of a claimed optimal solution, recomputed from the
// original data.
struct LpCertificate {
  double primal_violation = 0.0;   // worst bound or row violation
  double slackness_violation = 0.0;  // worst |dual * slack| over <= rows
  double dual_sign_violation = 0.0;  // worst positive <= dual
  double reduced_cost_violation = 0.0;  // worst wrong-signed reduced cost
  double dual_objective = 0.0;
  double relative_gap = 0.0;  // |primal - dual| / max(1, |primal|)
};

struct CertificateTolerances {
  double feasibility = 1e-7;
  double slackness = 1e-6;
  double reduced_cost = 1e-7;
  double gap = 1e-6;
};

// Dual objective b'y_ineq + d'y_eq + sum_j u_j min(0, reduced_cost_j); the
// last term prices the finite upper bounds.
LpCertificate ComputeCertificate(const LpProblem& problem,
                                 const LpSolution& solution);
bool CertificatePasses(const LpCertificate& cert,
                       const CertificateTolerances& tol = {});

extern template class internal::BoundedSimplex<double>;

}  // namespace uecp

#endif  // UECP_LP_H_
