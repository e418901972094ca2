// Copyright 2026 The convseg Authors.
//
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

#ifndef CONVSEG_CONVSEG_HPP_
#define CONVSEG_CONVSEG_HPP_

#include "convseg/classifier.hpp"
#include "convseg/corpus.hpp"
#include "convseg/error.hpp"
#include "convseg/factory.hpp"
#include "convseg/features.hpp"
#include "convseg/metrics.hpp"
#include "convseg/scorer.hpp"
#include "convseg/segmentation.hpp"
#include "convseg/segmenters.hpp"
#include "convseg/stats.hpp"
#include "convseg/textproc.hpp"
#include "convseg/training.hpp"

#endif  // CONVSEG_CONVSEG_HPP_
