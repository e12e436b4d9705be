// include/embedsep/types.hpp

// Copyright 2026  The embedsep authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EMBEDSEP_TYPES_HPP_
#define EMBEDSEP_TYPES_HPP_

#include <Eigen/Dense>

namespace embedsep {

using Eigen::Index;

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Eigen::ArrayXd;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Time-frequency bins are indexed k = t*F + f throughout: time-major
// flattening of a T x F matrix.
template <class Derived>
VectorX<typename Derived::Scalar> flatten_tf(const Eigen::MatrixBase<Derived>& m) {
  VectorX<typename Derived::Scalar> out(m.size());
  const Index f = m.cols();
  for (Index t = 0; t < m.rows(); ++t)
    out.segment(t * f, f) = m.row(t).transpose();
  return out;
}

template <class Derived>
MatrixX<typename Derived::Scalar> unflatten_tf(const Eigen::MatrixBase<Derived>& v,
                                               Index frames, Index bins) {
  MatrixX<typename Derived::Scalar> out(frames, bins);
  for (Index t = 0; t < frames; ++t)
    out.row(t) = v.segment(t * bins, bins).transpose();
  return out;
}

}  // namespace embedsep

#endif  // EMBEDSEP_TYPES_HPP_
