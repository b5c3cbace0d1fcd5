// Copyright 2026 The bosonlab Authors
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

#ifndef BOSONLAB_MATRIX_IO_H
#define BOSONLAB_MATRIX_IO_H

#include <iosfwd>

#include "bosonlab/common.h"
#include "bosonlab/dynamics.h"

namespace bosonlab {

// Matrix block:
//   m
//   re,im re,im ... (m entries)
//   ... (m rows)
// Schedule: repeated (duration line, matrix block). Numbers are written with
// 17 significant digits so that reading back is exact.

void write_matrix(std::ostream &out, const ComplexMatrix &M);
ComplexMatrix read_matrix(std::istream &in);

void write_schedule(std::ostream &out, const HoppingSchedule &sched);
HoppingSchedule read_schedule(std::istream &in);

}  // namespace bosonlab

#endif  // BOSONLAB_MATRIX_IO_H
