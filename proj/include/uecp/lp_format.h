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

#ifndef UECP_LP_FORMAT_H_
#define UECP_LP_FORMAT_H_

// Writers for the plain-text "LP file" format read by CPLEX, Gurobi, HiGHS
// and GLPK. Layout:
//
//   \ comment line
//   Minimize
//    obj: 3 w1 + 5 w2
//   Subject To
//    c1: w1 + w2 <= 1
//   Bounds
//    0 <= w1 <= 1
//   Binaries
//    x_1_1
//   End
//
// Long expressions are wrapped onto indented continuation lines. Numbers use
// %.17g so values read back exactly.

#include <ostream>

#include "uecp/lp.h"
#include "uecp/model.h"

namespace uecp {

// Variables are w1..wn, <= rows c1..cm and equality rows e1..ek.
void WriteLpFormat(const LpProblem& problem, std::ostream& out);

// The integer program over caching indicators x_t_f and age indicators
// a_t_f_i (1-based t and f, 0 <= i < t):
//   cap_t        sum_f l_f x_t_f <= S
//   link_t_f     sum_i a_t_f_i - x_t_f = 0
//   keep_t_f_i   a_t_f_i - x_t_f - a_{t-1}_f_{i-1} + a_t_f_0 >= -1
//   prev_t_f_i   a_t_f_i - a_{t-1}_f_{i-1} <= 0
// The objective constant sum l_f m_tf c_s sits on a variable `one` fixed to
// 1, since not every reader accepts constants in the objective.
void WriteInstanceIlp(const Instance& inst, std::ostream& out);

}  // namespace uecp

#endif  // UECP_LP_FORMAT_H_
