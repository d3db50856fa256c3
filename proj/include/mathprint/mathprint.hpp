// Copyright 2026 The mathprint Authors.
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


#pragma once

#include "mathprint/catalog.hpp"
#include "mathprint/dynamics.hpp"
#include "mathprint/error.hpp"
#include "mathprint/implicit.hpp"
#include "mathprint/io.hpp"
#include "mathprint/measures.hpp"
#include "mathprint/mesh.hpp"
#include "mathprint/tessellate.hpp"
#include "mathprint/validate.hpp"
#include "mathprint/vec.hpp"
