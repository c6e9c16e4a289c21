// Copyright 2026 The Authors.
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

#pragma once

#include "lrcm/construct.hpp"
#include "lrcm/error.hpp"
#include "lrcm/field.hpp"
#include "lrcm/gammoid.hpp"
#include "lrcm/lattice.hpp"
#include "lrcm/lrc.hpp"
#include "lrcm/matroid.hpp"
#include "lrcm/nonexistence.hpp"
#include "lrcm/represent.hpp"
#include "lrcm/set_system.hpp"
#include "lrcm/subset.hpp"
