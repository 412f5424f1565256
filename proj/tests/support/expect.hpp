// Copyright 2026 The hullprop Authors
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

#include "doctest.h"
#include "hullprop/error.hpp"

// Checks that `expr` raises hullprop::Error carrying `ecode`.
#define CHECK_RAISES(expr, ecode)                                                    \
    do {                                                                             \
        bool raised_ = false;                                                        \
        try {                                                                        \
            (void)(expr);                                                            \
        } catch (const hullprop::Error& e_) {                                        \
            raised_ = true;                                                          \
            CHECK_MESSAGE(e_.code() == (ecode), "got " << hullprop::error_code_name(e_.code())); \
        }                                                                            \
        CHECK_MESSAGE(raised_, "expected " << hullprop::error_code_name(ecode));     \
    } while (false)
